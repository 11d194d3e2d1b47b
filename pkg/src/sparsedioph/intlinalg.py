"""Exact linear algebra over the integers.

Everything here works on arbitrary-precision Python ints; there is no
floating point and no overflow. The central objects are dense row-major
matrices (`IntMatrix`), column-style Hermite normal forms with their
unimodular transforms, and Smith normal forms of nonsingular square
matrices. Lattice membership and lattice equality are decided through the
canonical Hermite form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch, RankDeficient, SingularMatrix

IntVector = tuple[int, ...]


def as_vector(values: Iterable[int]) -> IntVector:
    """Normalize an iterable of integers to an IntVector (tuple of ints)."""
    return tuple(int(v) for v in values)


@dataclass(frozen=True)
class IntMatrix:
    """Dense matrix of arbitrary-precision integers, stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch("matrix dimensions must be nonnegative")
        normalized = tuple(int(v) for v in self.entries)
        if len(normalized) != self.rows * self.cols:
            raise DimensionMismatch(
                f"expected {self.rows * self.cols} entries, got {len(normalized)}"
            )
        object.__setattr__(self, "entries", normalized)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = [list(r) for r in rows]
        m = len(rows)
        n = len(rows[0]) if rows else 0
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("rows have unequal lengths")
        flat = tuple(int(v) for r in rows for v in r)
        return cls(m, n, flat)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntMatrix":
        cols = [list(c) for c in columns]
        n = len(cols)
        m = len(cols[0]) if cols else 0
        if any(len(c) != m for c in cols):
            raise DimensionMismatch("columns have unequal lengths")
        flat = tuple(int(cols[j][i]) for i in range(m) for j in range(n))
        return cls(m, n, flat)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, diag: Sequence[int]) -> "IntMatrix":
        d = [int(v) for v in diag]
        n = len(d)
        return cls(n, n, tuple(d[i] if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def row_vector(cls, values: Sequence[int]) -> "IntMatrix":
        vals = as_vector(values)
        return cls(1, len(vals), vals)

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> IntVector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> IntVector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_columns(self) -> list[list[int]]:
        return [list(self.column(j)) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows(self.to_columns())

    def take_columns(self, indices: Sequence[int]) -> "IntMatrix":
        """Submatrix with the given 0-based columns, in the given order."""
        for j in indices:
            if not 0 <= j < self.cols:
                raise DimensionMismatch(f"column index {j} out of range")
        if not indices:
            return IntMatrix(self.rows, 0, ())
        return IntMatrix.from_columns([list(self.column(j)) for j in indices])

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise DimensionMismatch("row counts differ")
        return IntMatrix.from_columns(self.to_columns() + other.to_columns())

    def matmul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch("inner dimensions differ")
        rows = self.to_rows()
        cols = other.to_columns()
        return IntMatrix.from_rows(
            [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in rows]
        )

    def mat_vec(self, v: Sequence[int]) -> IntVector:
        vec = as_vector(v)
        if len(vec) != self.cols:
            raise DimensionMismatch("vector length differs from column count")
        return tuple(
            sum(self.at(i, j) * vec[j] for j in range(self.cols)) for i in range(self.rows)
        )

    def is_square(self) -> bool:
        return self.rows == self.cols


@dataclass(frozen=True)
class HnfResult:
    """Column-style Hermite normal form H = A*U with unimodular U."""

    H: IntMatrix
    U: IntMatrix
    rank: int


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form D = U*M*V with unimodular U, V and positive
    diagonal d_1 | d_2 | ... | d_m."""

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, s, t) with g = s*a + t*b and g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def det_exact(M: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination.

    All intermediate divisions are exact, so entry growth stays polynomial
    and the result is the true integer determinant.
    """
    if not M.is_square():
        raise DimensionMismatch("determinant needs a square matrix")
    n = M.rows
    if n == 0:
        return 1
    a = M.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot_row is None:
                return 0
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def hnf_columns(A: IntMatrix) -> HnfResult:
    """Column Hermite normal form of A.

    Returns H = A*U with U unimodular (n x n), where the first `rank`
    columns of H are the canonical lattice basis and the rest are zero.
    Each pivot (the first nonzero entry of its column, scanning top-down)
    is positive, pivot rows strictly increase with the column index, and in
    a pivot's row every entry of an earlier column lies in [0, pivot).
    """
    m, n = A.rows, A.cols
    h_cols = A.to_columns()
    u_cols = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    c = 0
    for i in range(m):
        if c >= n:
            break
        pivot_col = next((j for j in range(c, n) if h_cols[j][i] != 0), None)
        if pivot_col is None:
            continue
        if pivot_col != c:
            h_cols[c], h_cols[pivot_col] = h_cols[pivot_col], h_cols[c]
            u_cols[c], u_cols[pivot_col] = u_cols[pivot_col], u_cols[c]
        for j in range(c + 1, n):
            if h_cols[j][i] == 0:
                continue
            a, b = h_cols[c][i], h_cols[j][i]
            g, s, t = _xgcd(a, b)
            # [[s, -b//g], [t, a//g]] has determinant 1.
            u, v = -(b // g), a // g
            hc, hj = h_cols[c], h_cols[j]
            h_cols[c] = [s * x + t * y for x, y in zip(hc, hj)]
            h_cols[j] = [u * x + v * y for x, y in zip(hc, hj)]
            uc, uj = u_cols[c], u_cols[j]
            u_cols[c] = [s * x + t * y for x, y in zip(uc, uj)]
            u_cols[j] = [u * x + v * y for x, y in zip(uc, uj)]
        if h_cols[c][i] < 0:
            h_cols[c] = [-x for x in h_cols[c]]
            u_cols[c] = [-x for x in u_cols[c]]
        pivot = h_cols[c][i]
        for k in range(c):
            q = h_cols[k][i] // pivot
            if q:
                h_cols[k] = [x - q * y for x, y in zip(h_cols[k], h_cols[c])]
                u_cols[k] = [x - q * y for x, y in zip(u_cols[k], u_cols[c])]
        c += 1
    return HnfResult(
        H=IntMatrix.from_columns(h_cols) if n else IntMatrix(m, 0, ()),
        U=IntMatrix.from_columns(u_cols) if n else IntMatrix(0, 0, ()),
        rank=c,
    )


def _pivot_rows(H: IntMatrix, rank: int) -> list[int]:
    # Pivot row of column j: index of its first nonzero entry.
    pivots = []
    for j in range(rank):
        col = H.column(j)
        pivots.append(next(i for i, v in enumerate(col) if v != 0))
    return pivots


def hnf_fingerprint(A: IntMatrix) -> tuple[IntVector, ...]:
    """Canonical fingerprint of the lattice spanned by A's columns: the
    nonzero columns of the column HNF."""
    result = hnf_columns(A)
    return tuple(result.H.column(j) for j in range(result.rank))


def snf(M: IntMatrix) -> SnfResult:
    """Smith normal form of a nonsingular square integer matrix.

    Returns D = U*M*V with U, V unimodular and D = diag(d_1, ..., d_m),
    d_i > 0 and d_i | d_{i+1}. Raises SingularMatrix when det(M) = 0.
    """
    if not M.is_square():
        raise DimensionMismatch("Smith normal form needs a square matrix")
    m = M.rows
    if det_exact(M) == 0:
        raise SingularMatrix("matrix is singular")
    D = M.to_rows()
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def row_combine(i1: int, i2: int, a: int, b: int):
        # Replace rows so that entry (i1, t) becomes gcd and (i2, t) zero.
        g, s, t = _xgcd(a, b)
        u, v = -(b // g), a // g
        r1, r2 = D[i1], D[i2]
        D[i1] = [s * x + t * y for x, y in zip(r1, r2)]
        D[i2] = [u * x + v * y for x, y in zip(r1, r2)]
        q1, q2 = U[i1], U[i2]
        U[i1] = [s * x + t * y for x, y in zip(q1, q2)]
        U[i2] = [u * x + v * y for x, y in zip(q1, q2)]

    def col_combine(j1: int, j2: int, a: int, b: int):
        g, s, t = _xgcd(a, b)
        u, v = -(b // g), a // g
        for row in D:
            x, y = row[j1], row[j2]
            row[j1], row[j2] = s * x + t * y, u * x + v * y
        for row in V:
            x, y = row[j1], row[j2]
            row[j1], row[j2] = s * x + t * y, u * x + v * y

    for t in range(m):
        # Move a nonzero into the pivot slot; one exists since M is nonsingular.
        if D[t][t] == 0:
            found = next(
                (i, j)
                for i in range(t, m)
                for j in range(t, m)
                if D[i][j] != 0
            )
            i, j = found
            if i != t:
                D[t], D[i] = D[i], D[t]
                U[t], U[i] = U[i], U[t]
            if j != t:
                for row in D:
                    row[t], row[j] = row[j], row[t]
                for row in V:
                    row[t], row[j] = row[j], row[t]
        while True:
            for i in range(t + 1, m):
                if D[i][t] != 0:
                    if D[i][t] % D[t][t] == 0:
                        q = D[i][t] // D[t][t]
                        D[i] = [x - q * y for x, y in zip(D[i], D[t])]
                        U[i] = [x - q * y for x, y in zip(U[i], U[t])]
                    else:
                        row_combine(t, i, D[t][t], D[i][t])
            for j in range(t + 1, m):
                if D[t][j] != 0:
                    if D[t][j] % D[t][t] == 0:
                        q = D[t][j] // D[t][t]
                        for row in D:
                            row[j] -= q * row[t]
                        for row in V:
                            row[j] -= q * row[t]
                    else:
                        col_combine(t, j, D[t][t], D[t][j])
            if any(D[i][t] != 0 for i in range(t + 1, m)):
                continue
            if any(D[t][j] != 0 for j in range(t + 1, m)):
                continue
            # Pivot must divide the whole remaining block before moving on.
            offender = next(
                (
                    (i, j)
                    for i in range(t + 1, m)
                    for j in range(t + 1, m)
                    if D[i][j] % D[t][t] != 0
                ),
                None,
            )
            if offender is None:
                break
            i, _ = offender
            D[t] = [x + y for x, y in zip(D[t], D[i])]
            U[t] = [x + y for x, y in zip(U[t], U[i])]
    for t in range(m):
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return SnfResult(
        D=IntMatrix.from_rows(D), U=IntMatrix.from_rows(U), V=IntMatrix.from_rows(V)
    )


def gcd_maximal_minors(A: IntMatrix) -> int:
    """gcd of all m x m minors of a full-row-rank m x n matrix.

    Computed as the determinant of the nonzero part of the column HNF,
    which equals the determinant of the lattice spanned by A's columns.
    """
    result = hnf_columns(A)
    if result.rank < A.rows:
        raise RankDeficient(f"rank {result.rank} < row count {A.rows}")
    # Full row rank makes the nonzero block lower triangular with the
    # pivots on the diagonal.
    g = 1
    for j in range(A.rows):
        g *= result.H.at(j, j)
    return g


def lattice_member(A: IntMatrix, b: Sequence[int]) -> Optional[IntVector]:
    """Solve A x = b over the integers, or return None when b is not in
    the lattice spanned by A's columns.

    Works by triangular substitution on the column HNF: H z = b determines
    z at the pivot rows (with exact divisibility required), the remaining
    rows are consistency checks, and x = U z.
    """
    vec = as_vector(b)
    if len(vec) != A.rows:
        raise DimensionMismatch("right-hand side length differs from row count")
    result = hnf_columns(A)
    H, U, rank = result.H, result.U, result.rank
    pivots = _pivot_rows(H, rank)
    residual = list(vec)
    z = [0] * A.cols
    for j in range(rank):
        p = pivots[j]
        pivot = H.at(p, j)
        if residual[p] % pivot != 0:
            return None
        z[j] = residual[p] // pivot
        if z[j]:
            col = H.column(j)
            for i in range(A.rows):
                residual[i] -= z[j] * col[i]
    if any(residual):
        return None
    return U.mat_vec(z)


def lattice_equal(A: IntMatrix, B: IntMatrix) -> bool:
    """True iff A's and B's columns span the same lattice (same canonical
    HNF fingerprint)."""
    if A.rows != B.rows:
        raise DimensionMismatch("row counts differ")
    return hnf_fingerprint(A) == hnf_fingerprint(B)
