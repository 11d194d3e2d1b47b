"""Independent brute-force oracles used only by the tests.

Everything here deliberately avoids the code paths under test: the
determinant is a permutation expansion, factorization is plain trial
division, and knapsack minima come from depth-first enumeration.
"""

import itertools
import math

from sparsedioph import IntMatrix, det_exact


def perm_det(rows) -> int:
    """Determinant by signed permutation expansion (n <= 5 or so)."""
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        term = sign
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total


def minors_gcd(A: IntMatrix) -> int:
    """gcd of all m x m minors, straight from the definition."""
    m = A.rows
    g = 0
    rows = A.to_rows()
    for combo in itertools.combinations(range(A.cols), m):
        sub = [[rows[i][j] for j in combo] for i in range(m)]
        g = math.gcd(g, perm_det(sub))
    return g


def trial_factorize(z: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= z:
        if z % d == 0:
            s = 0
            while z % d == 0:
                z //= d
                s += 1
            out.append((d, s))
        d += 1
    if z > 1:
        out.append((z, 1))
    return out


def random_matrix(rng, m: int, n: int, lo: int, hi: int) -> IntMatrix:
    return IntMatrix.from_rows(
        [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]
    )


def random_full_row_rank(rng, m: int, n: int, lo: int, hi: int) -> IntMatrix:
    from sparsedioph import hnf_columns

    while True:
        A = random_matrix(rng, m, n, lo, hi)
        if hnf_columns(A).rank == m:
            return A


def random_nonsingular_tau(rng, A: IntMatrix):
    """A random m-subset of columns with nonzero determinant (1-based)."""
    m, n = A.rows, A.cols
    for _ in range(200):
        combo = sorted(rng.sample(range(n), m))
        if det_exact(A.take_columns(combo)) != 0:
            return tuple(j + 1 for j in combo)
    for combo in itertools.combinations(range(n), m):
        if det_exact(A.take_columns(combo)) != 0:
            return tuple(j + 1 for j in combo)
    raise AssertionError("full-row-rank matrix must have a nonsingular basis")


def knapsack_min_support_dfs(weights, b: int):
    """Exact minimum support for positive weights by support enumeration
    plus bounded depth-first search; complete because weights are positive."""
    n = len(weights)
    if b == 0:
        return 0

    def representable(sub, target):
        if not sub:
            return target == 0
        w, rest = sub[0], sub[1:]
        x = 1
        while w * x <= target:
            remaining = target - w * x
            if rest:
                if representable(rest, remaining):
                    return True
            elif remaining == 0:
                return True
            x += 1
        return False

    for k in range(1, n + 1):
        for combo in itertools.combinations(range(n), k):
            if representable([weights[j] for j in combo], b):
                return k
    return None
