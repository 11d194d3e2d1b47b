"""Sparse nonnegative solutions of integer programs and knapsacks.

Three solving regimes live here, in decreasing generality:

* `solve_semigroup_posspan` handles A x = b, x >= 0 when the columns of A
  positively span R^m; the semigroup then coincides with the lattice, and
  a sparse lattice solution can be pushed into the nonnegative orthant by
  a strictly positive kernel vector supported on few columns.
* `solve_knapsack_mixed` is the single-row case with both signs present;
  it scans every singleton basis and keeps the sparsest result.
* `solve_knapsack_positive` is the all-positive single-row case: dynamic
  programming finds some solution, and a pigeonhole-built kernel vector
  with entries in {-1, 0, 1} repeatedly shrinks its support.

`sparsity_bounds` evaluates every support bound that applies to a given
instance, exactly, for reporting and comparison.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .diophsolve import (
    BOUND_MIXED_KNAPSACK,
    BOUND_POSITIVE_KNAPSACK,
    BOUND_POSITIVE_SPAN,
    SolutionReport,
    solve_on_columns,
    support_size,
)
from .errors import (
    CapExceeded,
    DimensionMismatch,
    HypothesisViolated,
    InfeasibleInput,
    NoSignMix,
    NonPositive,
    NotInCone,
    NotPositivelySpanning,
    RankDeficient,
)
from .exactlp import basic_feasible_point
from .intlinalg import (
    IntMatrix,
    IntVector,
    as_vector,
    det_exact,
    gcd_maximal_minors,
    hnf_columns,
)
from .numtheory import omega, omega_truncated
from .sparsify import IndexSet, check_index_set, first_nonsingular_basis, sparsify

DEFAULT_B_CAP = 10**7


@dataclass(frozen=True)
class BoundsReport:
    """Every sparsity bound that applies to one instance, evaluated exactly.

    `pointed_cone_bound` and `knapsack_bound` are None when their
    hypotheses fail. The pointed-cone value is reported as a diagnostic
    only; no algorithm here attains it.
    """

    adno_bound: int
    thm1_semigroup_bound: int
    pointed_cone_bound: Optional[int]
    knapsack_bound: Optional[int]
    gcd_A: int


@dataclass(frozen=True)
class KernelVector:
    """Nonzero y with y[0] >= 0, y[i] in {-1,0,1} for i >= 1, and a.y = 0."""

    y: IntVector


def _floor_log2(v: int) -> int:
    # floor(log2(v)) for v >= 1.
    return v.bit_length() - 1


def _floor_log2_sqrt(v: int) -> int:
    # floor(log2(sqrt(v))) for v >= 1; exact because the floor only
    # depends on floor(log2(v)).
    return (v.bit_length() - 1) // 2


def positively_spans(A: IntMatrix) -> bool:
    """Whether the columns of A positively span all of R^m.

    Equivalent to: A has full row rank and some rational y >= 1 satisfies
    A y = 0. Decided by exact phase-I simplex.
    """
    if A.cols == 0:
        return False
    if hnf_columns(A).rank < A.rows:
        return False
    rows = A.to_rows()
    rhs = [-sum(row) for row in rows]
    return basic_feasible_point(rows, rhs) is not None


def caratheodory_cone_rep(A: IntMatrix, v: Sequence) -> tuple[IndexSet, tuple[Fraction, ...]]:
    """Represent v as a nonnegative rational combination of at most m
    columns of A (1-based indices), or raise NotInCone."""
    if len(v) != A.rows:
        raise DimensionMismatch("target length differs from row count")
    solution = basic_feasible_point(A.to_rows(), list(v))
    if solution is None:
        raise NotInCone("target is outside the conic hull of the columns")
    beta = tuple(j + 1 for j, val in enumerate(solution) if val != 0)
    coeffs = tuple(solution[j - 1] for j in beta)
    return beta, coeffs


def _strictly_positive_kernel(A: IntMatrix, support: Sequence[int], base: Sequence[int]) -> list[int]:
    """Integer kernel vector of A, strictly positive on `support`, zero
    outside support, assuming the columns in `base` positively span R^m.

    For every index k in the support, -a_k has a conic representation over
    the base columns; summing e_k with those representations gives a
    rational kernel vector positive everywhere on the support, which is
    scaled to integers by the lcm of the denominators and then divided by
    its content to keep entries small.
    """
    base0 = [j - 1 for j in base]
    base_rows = A.take_columns(base0).to_rows()
    combo = [Fraction(0)] * A.cols
    for k in support:
        target = [-value for value in A.column(k - 1)]
        rep = basic_feasible_point(base_rows, target)
        if rep is None:
            raise AssertionError("base columns fail to positively span")
        combo[k - 1] += 1
        for pos, j in enumerate(base):
            combo[j - 1] += rep[pos]
    scale = math.lcm(*(f.denominator for f in combo))
    kernel = [int(f * scale) for f in combo]
    content = math.gcd(*kernel)
    return [v // content for v in kernel]


def solve_semigroup_posspan(A: IntMatrix, b: Sequence[int], tau) -> Optional[SolutionReport]:
    """Sparse nonnegative integer solution of A x = b for positively
    spanning columns, or None when b is not in the lattice of A.

    Follows the constructive route: take the sparse lattice solution
    supported on gamma, pick beta by conic Caratheodory for the negated
    basis sum, build a strictly positive integer kernel vector on
    gamma union beta, and add the smallest multiple of it that clears all
    negative entries. The support stays within
    2m + omega_truncated(delta, m).
    """
    if not positively_spans(A):
        raise NotPositivelySpanning("columns do not positively span R^m")
    m, n = A.rows, A.cols
    cert = sparsify(A, tau)
    b = as_vector(b)
    x_star = solve_on_columns(A, b, cert.gamma)
    if x_star is None:
        return None
    bound = 2 * m + omega_truncated(cert.delta, m)
    if all(v >= 0 for v in x_star):
        return SolutionReport(
            x=x_star,
            support_size=support_size(x_star),
            bound=bound,
            bound_name=BOUND_POSITIVE_SPAN,
        )
    neg_basis_sum = [
        -sum(A.at(i, j - 1) for j in cert.tau) for i in range(m)
    ]
    beta, _ = caratheodory_cone_rep(A, neg_basis_sum)
    base = sorted(set(cert.tau) | set(beta))
    support = sorted(set(cert.gamma) | set(beta))
    kernel = _strictly_positive_kernel(A, support, base)
    scale = 0
    for i in range(n):
        if x_star[i] < 0:
            # kernel[i] > 0 on the support, which covers x_star's support;
            # ceil(-x_star[i] / kernel[i]) = -(x_star[i] // kernel[i]).
            scale = max(scale, -(x_star[i] // kernel[i]))
    x = tuple(x_star[i] + scale * kernel[i] for i in range(n))
    if any(v < 0 for v in x) or A.mat_vec(x) != b:
        raise AssertionError("kernel lift failed to produce a valid solution")
    return SolutionReport(
        x=x, support_size=support_size(x), bound=bound, bound_name=BOUND_POSITIVE_SPAN
    )


def solve_knapsack_mixed(a: Sequence[int], b: int) -> Optional[SolutionReport]:
    """Sparse nonnegative solution of a.x = b when a has entries of both
    signs (and none zero); None iff gcd(a) does not divide b.

    Runs the positively-spanning solver once per singleton basis {i} and
    returns the sparsest outcome; ties prefer the column whose
    omega(|a_i|/gcd) is smallest, then the smallest index.
    """
    a = as_vector(a)
    if any(v == 0 for v in a):
        raise NoSignMix("entries must be nonzero")
    if not (any(v > 0 for v in a) and any(v < 0 for v in a)):
        raise NoSignMix("entries of both signs are required")
    g = math.gcd(*a)
    if b % g != 0:
        return None
    A = IntMatrix.row_vector(a)
    omegas = [omega(abs(v) // g) for v in a]
    best = None
    best_key = None
    for i in range(1, len(a) + 1):
        report = solve_semigroup_posspan(A, (b,), (i,))
        key = (report.support_size, omegas[i - 1], i)
        if best_key is None or key < best_key:
            best, best_key = report, key
    return SolutionReport(
        x=best.x,
        support_size=best.support_size,
        bound=2 + min(omegas),
        bound_name=BOUND_MIXED_KNAPSACK,
    )


def kernel_vector_pigeonhole(a: Sequence[int]) -> KernelVector:
    """Nonzero integer y with a.y = 0, y[0] >= 0 and all later entries in
    {-1, 0, 1}, for positive a with len(a) > 1 + log2(a[0]).

    Constructive pigeonhole replacement for the lattice-point existence
    argument: the subset sums of a[1:] over {0,1} encodings of
    0..a[0] collide modulo a[0], and the difference of a colliding pair is
    the tail of y; the head balances the sum exactly.
    """
    a = as_vector(a)
    t = len(a)
    if any(v <= 0 for v in a):
        raise NonPositive("all entries must be positive")
    if 2 ** (t - 1) <= a[0]:
        raise HypothesisViolated(f"need len(a) > 1 + log2({a[0]})")
    seen: dict[int, list[int]] = {}
    for code in range(a[0] + 1):
        eps = [(code >> i) & 1 for i in range(t - 1)]
        residue = sum(e * v for e, v in zip(eps, a[1:])) % a[0]
        if residue in seen:
            prev = seen[residue]
            tail = [e1 - e2 for e1, e2 in zip(eps, prev)]
            total = sum(y * v for y, v in zip(tail, a[1:]))
            head = -total // a[0]
            if head * a[0] != -total:
                raise AssertionError("collision residues disagree")
            y = [head] + tail
            if head < 0:
                y = [-v for v in y]
            return KernelVector(y=tuple(y))
        seen[residue] = eps
    raise AssertionError("pigeonhole collision must occur within a[0]+1 codes")


def reduce_knapsack_support(a: Sequence[int], x0: Sequence[int]) -> SolutionReport:
    """Shrink the support of a nonnegative knapsack solution below the
    1 + floor(log2(min(a)/gcd(a))) bound.

    Designates the smallest entry of a (smallest index on ties) and, while
    too many other coordinates are nonzero, cancels at least one of them
    by adding a multiple of a pigeonhole kernel vector; the knapsack value
    is invariant and nonnegativity is preserved at every step.
    """
    a = as_vector(a)
    if any(v <= 0 for v in a):
        raise NonPositive("knapsack weights must be positive")
    x = [int(v) for v in x0]
    if len(x) != len(a):
        raise DimensionMismatch("solution length differs from weight count")
    if any(v < 0 for v in x):
        raise InfeasibleInput("starting point has negative entries")
    g = math.gcd(*a)
    weights = [v // g for v in a]
    target = min(weights)
    i_min = weights.index(target)
    while True:
        others = [j for j in range(len(x)) if j != i_min and x[j] != 0]
        # Stop once the count is within log2 of the smallest weight:
        # 2^count <= target means count <= floor(log2(target)).
        if 2 ** len(others) <= target:
            break
        sub = (weights[i_min],) + tuple(weights[j] for j in others)
        kernel = kernel_vector_pigeonhole(sub).y
        step = min(x[others[k]] for k in range(len(others)) if kernel[k + 1] == -1)
        x[i_min] += step * kernel[0]
        for k, j in enumerate(others):
            x[j] += step * kernel[k + 1]
    bound = 1 + _floor_log2(target)
    return SolutionReport(
        x=tuple(x),
        support_size=support_size(x),
        bound=bound,
        bound_name=BOUND_POSITIVE_KNAPSACK,
    )


def solve_knapsack_positive(
    a: Sequence[int], b: int, b_cap: int = DEFAULT_B_CAP
) -> Optional[SolutionReport]:
    """Sparse nonnegative solution of a.x = b for positive a, or None when
    b is not in the semigroup generated by a.

    Feasibility is decided by forward dynamic programming over values up
    to b/gcd(a), which must stay within `b_cap`; the DP solution is then
    support-reduced. Raises CapExceeded above the cap.
    """
    a = as_vector(a)
    if any(v <= 0 for v in a):
        raise NonPositive("knapsack weights must be positive")
    if b < 0:
        return None
    g = math.gcd(*a)
    if b % g != 0:
        return None
    value = b // g
    if value > b_cap:
        raise CapExceeded(f"b/gcd = {value} exceeds cap {b_cap}")
    weights = [v // g for v in a]
    # parent[v] = 1 + index of the weight that first reaches v; 0 = unreached.
    parent = bytearray(value + 1) if len(weights) < 255 else [0] * (value + 1)
    parent[0] = 255  # sentinel; value 0 is always reachable
    for v in range(1, value + 1):
        for idx, w in enumerate(weights):
            if w <= v and parent[v - w]:
                parent[v] = idx + 1
                break
    if not parent[value]:
        return None
    x0 = [0] * len(weights)
    v = value
    while v:
        idx = parent[v] - 1
        x0[idx] += 1
        v -= weights[idx]
    return reduce_knapsack_support(a, x0)


def _is_pointed_cone(A: IntMatrix) -> bool:
    # Pointed iff no nonzero nonnegative combination of columns is zero.
    rows = A.to_rows() + [[1] * A.cols]
    rhs = [0] * A.rows + [1]
    return basic_feasible_point(rows, rhs) is None


def _is_extreme_ray(A: IntMatrix, index: int) -> bool:
    """Whether the 1-based column `index` spans an extreme ray of the cone
    of all columns (assumed pointed)."""
    col = A.column(index - 1)
    if all(v == 0 for v in col):
        return False
    others = []
    for j in range(A.cols):
        if j == index - 1:
            continue
        other = A.column(j)
        # Skip positive multiples of the candidate ray.
        cross_zero = all(
            col[i] * other[k] == col[k] * other[i]
            for i in range(A.rows)
            for k in range(i + 1, A.rows)
        )
        same_direction = cross_zero and sum(
            c * o for c, o in zip(col, other)
        ) > 0
        if not same_direction:
            others.append(j)
    if not others:
        return True
    sub = A.take_columns(others)
    return basic_feasible_point(sub.to_rows(), list(col)) is None


def sparsity_bounds(
    A: IntMatrix, tau=None, extreme_ray_index: Optional[int] = None
) -> BoundsReport:
    """Evaluate every applicable sparsity bound for A x = b, x >= 0.

    `tau` defaults to the lexicographically first nonsingular column
    basis. The pointed-cone bound is computed only when the cone of
    columns is full-dimensional and pointed, no column is zero, and the
    designated column (default: first that passes the test) spans an
    extreme ray.
    """
    m, n = A.rows, A.cols
    if hnf_columns(A).rank < m:
        raise RankDeficient("bounds need a full-row-rank matrix")
    g = gcd_maximal_minors(A)
    gram = A.matmul(A.transpose())
    adno = m + _floor_log2_sqrt(det_exact(gram) // (g * g))
    if tau is None:
        tau = first_nonsingular_basis(A)
    else:
        tau = check_index_set(tau, n)
    delta = abs(det_exact(A.take_columns([i - 1 for i in tau]))) // g
    thm1 = 2 * m + omega_truncated(delta, m)

    knapsack = None
    row = A.row(0) if m == 1 else ()
    if m == 1 and all(v != 0 for v in row) and (
        all(v > 0 for v in row) or all(v < 0 for v in row)
    ):
        knapsack = 1 + _floor_log2(min(abs(v) for v in row) // g)

    pointed = None
    if all(any(v != 0 for v in A.column(j)) for j in range(n)) and _is_pointed_cone(A):
        if extreme_ray_index is not None:
            designated = extreme_ray_index if _is_extreme_ray(A, extreme_ray_index) else None
        else:
            designated = next(
                (j for j in range(1, n + 1) if _is_extreme_ray(A, j)), None
            )
        if designated is not None:
            q_squared = 0
            rest = [j for j in range(n) if j != designated - 1]
            for combo in itertools.combinations(rest, m - 1):
                subset = sorted((designated - 1,) + combo)
                q_squared += det_exact(A.take_columns(subset)) ** 2
            if q_squared > 0:
                pointed = m + _floor_log2_sqrt(q_squared // (g * g))
    return BoundsReport(
        adno_bound=adno,
        thm1_semigroup_bound=thm1,
        pointed_cone_bound=pointed,
        knapsack_bound=knapsack,
        gcd_A=g,
    )
