"""Lattice sparsification: keep a small column subset spanning the same lattice.

Given a full-row-rank A and a nonsingular column basis tau, `sparsify`
returns gamma with tau as a subset such that the columns indexed by gamma
span the same lattice as all of A, with

    |gamma| <= m + omega_truncated(|det(A_tau)| / gcd(A), m),

i.e. m plus the number of prime factors of the basis determinant (divided
by the minor gcd), multiplicities capped at m. The companion
`worst_case_instance` builds matrices on which that inequality is tight,
and `verify_tightness` certifies tightness by exhaustive subset search.

Column indices in the public API are 1-based throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    DimensionMismatch,
    InvalidDelta,
    RankDeficient,
    SingularBasis,
    TooLargeForExhaustive,
)
from .intlinalg import (
    IntMatrix,
    det_exact,
    gcd_maximal_minors,
    hnf_columns,
    lattice_equal,
    lattice_member,
)
from .numtheory import factorize, omega_truncated

IndexSet = tuple[int, ...]

EXHAUSTIVE_COLUMN_CAP = 14


def check_index_set(indices, n: int) -> IndexSet:
    """Validate a strictly increasing 1-based index set within [1, n]."""
    idx = tuple(int(i) for i in indices)
    if any(not 1 <= i <= n for i in idx):
        raise DimensionMismatch(f"indices {idx} out of range [1, {n}]")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise DimensionMismatch(f"indices {idx} must be strictly increasing")
    return idx


@dataclass(frozen=True)
class SparsifyCertificate:
    """Verifiable result of a sparsification run.

    `delta` is |det(A_tau)| / gcd(A); `bound` is
    m + omega_truncated(delta, m), and `lattice_fingerprint_match` records
    that the kept columns reproduce the canonical Hermite fingerprint of
    the full matrix.
    """

    tau: IndexSet
    gamma: IndexSet
    bound: int
    delta: int
    lattice_fingerprint_match: bool


def first_nonsingular_basis(A: IntMatrix) -> IndexSet:
    """Lexicographically first m-subset of columns with nonzero determinant."""
    m = A.rows
    for combo in itertools.combinations(range(A.cols), m):
        if det_exact(A.take_columns(combo)) != 0:
            return tuple(j + 1 for j in combo)
    raise RankDeficient("no nonsingular column basis exists")


def _reduce_to_unit_gcd(A: IntMatrix) -> IntMatrix:
    """Rewrite A in the basis of its own lattice so the minor gcd becomes 1.

    The basis matrix M is the nonzero block of the column HNF; M is lower
    triangular, so M^{-1} A is computed by exact forward substitution. The
    result is integral because every column of A lies in the lattice of M.
    """
    m = A.rows
    result = hnf_columns(A)
    if result.rank < m:
        raise RankDeficient(f"rank {result.rank} < row count {m}")
    M = result.H.take_columns(range(m)).to_rows()
    new_cols = []
    for j in range(A.cols):
        col = list(A.column(j))
        out = [0] * m
        for i in range(m):
            acc = col[i] - sum(M[i][k] * out[k] for k in range(i))
            q, r = divmod(acc, M[i][i])
            if r != 0:
                raise AssertionError("lattice basis does not divide its own column")
            out[i] = q
        new_cols.append(out)
    return IntMatrix.from_columns(new_cols)


def sparsify(A: IntMatrix, tau) -> SparsifyCertificate:
    """Find gamma containing tau with the columns of A_gamma spanning the
    same lattice as A, within the truncated-omega cardinality bound.

    After rewriting A so its minor gcd is 1, every column outside tau is
    tested once, in increasing index order, for membership in the lattice
    of the remaining kept columns; redundant columns are dropped on the
    spot. Each test is one linear Diophantine solve, so at most n - m
    solves happen in total, and the surviving set is non-redundant.
    """
    m, n = A.rows, A.cols
    tau = check_index_set(tau, n)
    if len(tau) != m:
        raise DimensionMismatch(f"basis needs {m} indices, got {len(tau)}")
    tau0 = [i - 1 for i in tau]
    det_tau = det_exact(A.take_columns(tau0))
    if det_tau == 0:
        raise SingularBasis(f"columns {tau} are linearly dependent")
    reduced = _reduce_to_unit_gcd(A)  # raises RankDeficient if rank < m
    delta = abs(det_exact(reduced.take_columns(tau0)))
    kept = [j for j in range(n) if j not in tau0]
    for j in list(kept):
        others = sorted(set(kept) - {j} | set(tau0))
        if lattice_member(reduced.take_columns(others), reduced.column(j)) is not None:
            kept.remove(j)
    gamma = tuple(sorted(j + 1 for j in set(kept) | set(tau0)))
    bound = m + omega_truncated(delta, m)
    if len(gamma) > bound:
        raise AssertionError("non-redundant set exceeded the sparsity bound")
    match = lattice_equal(A, A.take_columns([i - 1 for i in gamma]))
    if not match:
        raise AssertionError("kept columns changed the lattice")
    return SparsifyCertificate(
        tau=tau, gamma=gamma, bound=bound, delta=delta, lattice_fingerprint_match=match
    )


def worst_case_instance(m: int, delta: int) -> IntMatrix:
    """Matrix on which the sparsification bound is tight.

    The first m columns form a diagonal matrix B with det(B) = delta,
    built by spreading the prime powers of delta across the diagonal; the
    remaining omega_truncated(delta, m) columns generate the primary
    cyclic summands of Z^m modulo the lattice of B, one column per
    summand. Every gamma containing [m] that spans Z^m must keep all of
    them.
    """
    if m < 1:
        raise DimensionMismatch(f"need m >= 1, got {m}")
    if delta < 2:
        raise InvalidDelta(f"need delta >= 2, got {delta}")
    diag = [1] * m
    for p, mult in factorize(delta).factors:
        if mult < m:
            for i in range(mult):
                diag[i] *= p
        else:
            diag[0] *= p ** (mult - m + 1)
            for i in range(1, m):
                diag[i] *= p
    columns = [[diag[i] if k == i else 0 for k in range(m)] for i in range(m)]
    for i in range(m):
        for p, mult in factorize(diag[i]).factors:
            generator = diag[i] // p**mult
            columns.append([generator if k == i else 0 for k in range(m)])
    return IntMatrix.from_columns(columns)


def verify_tightness(A: IntMatrix, tau, max_columns: int = EXHAUSTIVE_COLUMN_CAP) -> bool:
    """Exhaustively check that the sparsification bound is met with equality.

    Enumerates every superset of tau in increasing size and returns True
    iff the smallest one spanning the full lattice has exactly the size
    promised by the bound. Refuses instances wider than `max_columns`.
    """
    m, n = A.rows, A.cols
    if n > max_columns:
        raise TooLargeForExhaustive(f"{n} columns > cap {max_columns}")
    tau = check_index_set(tau, n)
    if len(tau) != m:
        raise DimensionMismatch(f"basis needs {m} indices, got {len(tau)}")
    tau0 = [i - 1 for i in tau]
    det_tau = det_exact(A.take_columns(tau0))
    if det_tau == 0:
        raise SingularBasis(f"columns {tau} are linearly dependent")
    g = gcd_maximal_minors(A)
    bound = m + omega_truncated(abs(det_tau) // g, m)
    rest = [j for j in range(n) if j not in tau0]
    for size in range(len(rest) + 1):
        for subset in itertools.combinations(rest, size):
            candidate = sorted(tau0 + list(subset))
            if lattice_equal(A, A.take_columns(candidate)):
                return m + size == bound
    raise AssertionError("the full column set always spans the lattice")
