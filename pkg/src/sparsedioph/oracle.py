"""Brute-force ground truth for small instances.

`min_support_exact` finds the true minimum number of nonzeros over all
nonnegative integer solutions of A x = b. For one row this is a complete
search (bitset dynamic programming per support subset); for two or more
rows it is a bounded enumeration, honest about its caps: a None answer
only means "nothing found within the search regime", never a proof of
infeasibility.

`icr_scan` takes the worst case of the minimum support over all
right-hand sides up to a limit, which lower-bounds the integer
Caratheodory rank of a positive row.
"""

from __future__ import annotations

import itertools
import math
from typing import Optional, Sequence

from .errors import NonPositive
from .intlinalg import IntMatrix, as_vector

DEFAULT_COORD_CAP = 50


def _closure_bitset(coins: Sequence[int], limit: int) -> int:
    """Bitset of all sums of nonnegative multiples of `coins` up to `limit`."""
    mask = (1 << (limit + 1)) - 1
    bits = 1
    for c in coins:
        if c > limit:
            continue
        shift = c
        while True:
            grown = (bits | (bits << shift)) & mask
            if grown == bits:
                break
            bits = grown
            shift *= 2
    return bits


def _reachable(value: int, coins: Sequence[int]) -> bool:
    if value < 0:
        return False
    if value == 0:
        return True
    return bool(_closure_bitset(coins, value) >> value & 1)


def _single_row_support_feasible(weights: Sequence[int], b: int) -> bool:
    """Whether sum(w_i * x_i) = b admits x with every x_i >= 1."""
    residual = b - sum(weights)
    positives = [w for w in weights if w > 0]
    negatives = [-w for w in weights if w < 0]
    if positives and negatives:
        return residual % math.gcd(*(abs(w) for w in weights)) == 0
    if positives:
        return residual >= 0 and _reachable(residual, positives)
    return residual <= 0 and _reachable(-residual, negatives)


def _min_support_single_row(row: Sequence[int], b: int, k_max: int) -> Optional[int]:
    n = len(row)
    for k in range(1, min(n, k_max) + 1):
        for subset in itertools.combinations(range(n), k):
            if _single_row_support_feasible([row[j] for j in subset], b):
                return k
    return None


def _search_support(
    columns: Sequence[Sequence[int]], b: Sequence[int], coord_cap: int
) -> bool:
    """Whether columns * x = b has an integer solution with 1 <= x_i <= cap,
    by depth-first enumeration with the last coordinate solved directly."""
    last = len(columns) - 1

    def solve_last(residual: list[int]) -> bool:
        col = columns[last]
        anchor = next((i for i, v in enumerate(col) if v != 0), None)
        if anchor is None:
            return not any(residual)
        q, r = divmod(residual[anchor], col[anchor])
        if r != 0 or not 1 <= q <= coord_cap:
            return False
        return all(residual[i] == q * col[i] for i in range(len(col)))

    def descend(idx: int, residual: list[int]) -> bool:
        if idx == last:
            return solve_last(residual)
        col = columns[idx]
        current = [r - c for r, c in zip(residual, col)]
        for _ in range(coord_cap):
            if descend(idx + 1, current):
                return True
            current = [r - c for r, c in zip(current, col)]
        return False

    return descend(0, list(b))


def min_support_exact(
    A: IntMatrix,
    b: Sequence[int],
    k_max: Optional[int] = None,
    coord_cap: int = DEFAULT_COORD_CAP,
) -> Optional[int]:
    """Minimum support over nonnegative integer solutions of A x = b.

    Complete for single-row instances. For m >= 2 the search enumerates
    supports of size up to k_max with coordinates capped at coord_cap, so
    None means "not found within the regime" rather than infeasible.
    """
    b = as_vector(b)
    if len(b) != A.rows:
        raise ValueError("right-hand side length differs from row count")
    if not any(b):
        return 0
    if k_max is None:
        k_max = A.cols
    if A.rows == 1:
        return _min_support_single_row(A.row(0), b[0], k_max)
    for k in range(1, min(A.cols, k_max) + 1):
        for subset in itertools.combinations(range(A.cols), k):
            if _search_support([A.column(j) for j in subset], b, coord_cap):
                return k
    return None


def icr_scan(a: Sequence[int], b_max: int) -> int:
    """Worst minimum support over all semigroup members up to b_max.

    This is a lower bound for the integer Caratheodory rank of the row a:
    the scan cannot rule out worse right-hand sides beyond b_max. Exact
    per-value answers come from subset-wise bitset dynamic programming.
    """
    a = as_vector(a)
    if any(v <= 0 for v in a):
        raise NonPositive("entries must be positive")
    if b_max < 0:
        raise NonPositive("b_max must be nonnegative")
    g = math.gcd(*a)
    weights = [v // g for v in a]
    limit = b_max // g
    unassigned = (1 << (limit + 1)) - 2  # value 0 has support 0 already
    worst = 0
    for k in range(1, len(weights) + 1):
        if not unassigned:
            break
        for subset in itertools.combinations(weights, k):
            hits = _closure_bitset(subset, limit) & unassigned
            if hits:
                worst = k
                unassigned &= ~hits
    return worst
