"""Exact integer matrices, Smith and Hermite normal forms.

Everything here works on Python ints, so entries never overflow.  Matrices
with zero rows or zero columns are legal and behave as expected (they
present trivial groups / zero maps).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        for e in self.entries:
            if not isinstance(e, int) or isinstance(e, bool):
                raise TypeError(f"matrix entries must be int, got {e!r}")

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cannot infer column count of a matrix with no rows")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntegerMatrix":
        columns = [list(c) for c in columns]
        if any(len(c) != rows for c in columns):
            raise DimensionMismatch(f"columns must have length {rows}")
        return cls(rows, len(columns), tuple(columns[j][i] for i in range(rows) for j in range(len(columns))))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int | None = None, cols: int | None = None) -> "IntegerMatrix":
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        out = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            out[i][i] = int(d)
        return cls.from_rows(out, cols)

    # -- access -------------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return not any(self.entries)

    # -- algebra ------------------------------------------------------------

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(
            self.cols, self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    @property
    def T(self) -> "IntegerMatrix":
        return self.transpose()

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        a, b = self.to_rows(), other.to_rows()
        out = [
            [sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return IntegerMatrix.from_rows(out, other.cols)

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for a {self.shape} matrix")
        c = self.cols
        e = self.entries
        return tuple(sum(e[i * c + k] * v[k] for k in range(c)) for i in range(self.rows))

    def hstack(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.rows != other.rows:
            raise DimensionMismatch("hstack needs equal row counts")
        a, b = self.to_rows(), other.to_rows()
        return IntegerMatrix.from_rows([x + y for x, y in zip(a, b)], self.cols + other.cols)

    def det(self) -> int:
        """Exact determinant (fraction-free Bareiss elimination)."""
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.to_rows()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def __repr__(self):
        return f"IntegerMatrix({self.to_rows()!r}, shape={self.shape})"


def as_matrix(obj, rows: int | None = None) -> IntegerMatrix:
    if isinstance(obj, IntegerMatrix):
        return obj
    obj = list(obj)
    if not obj and rows is None:
        return IntegerMatrix(0, 0, ())
    return IntegerMatrix.from_rows(obj) if obj else IntegerMatrix(0, 0, ())


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular and ``D`` in Smith form."""

    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.rows, self.D.cols)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _min_abs_nonzero(a, t, rows, cols):
    best = None
    for i in range(t, rows):
        r = a[i]
        for j in range(t, cols):
            x = r[j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
                if best[0] == 1:
                    return best
    return best


def smith_normal_form(M: IntegerMatrix) -> SmithDecomposition:
    """Smith normal form with transformation matrices.

    Row/column elimination around a pivot of minimal absolute value.  When
    the pivot fails to divide some entry of the trailing block, that entry's
    row is added to the pivot row, which strictly shrinks the next pivot.
    """
    rows, cols = M.rows, M.cols
    a = M.to_rows()
    u = IntegerMatrix.identity(rows).to_rows()
    # keep V transposed so column operations become row operations on lists
    vt = IntegerMatrix.identity(cols).to_rows()

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for r in a:
            r[j], r[k] = r[k], r[j]
        vt[j], vt[k] = vt[k], vt[j]

    def add_row(dst, src, q):  # row_dst += q * row_src
        ra, rs = a[dst], a[src]
        for j in range(cols):
            ra[j] += q * rs[j]
        ua, us = u[dst], u[src]
        for j in range(rows):
            ua[j] += q * us[j]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for r in a:
            r[dst] += q * r[src]
        va, vs = vt[dst], vt[src]
        for j in range(cols):
            va[j] += q * vs[j]

    for t in range(min(rows, cols)):
        best = _min_abs_nonzero(a, t, rows, cols)
        if best is None:
            break
        _, i0, j0 = best
        if i0 != t:
            swap_rows(t, i0)
        if j0 != t:
            swap_cols(t, j0)
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                # move the smallest remainder in the pivot cross onto the pivot
                cand = [(abs(a[i][t]), i, t) for i in range(t + 1, rows) if a[i][t]]
                cand += [(abs(a[t][j]), t, j) for j in range(t + 1, cols) if a[t][j]]
                _, i1, j1 = min(cand)
                if i1 != t:
                    swap_rows(t, i1)
                if j1 != t:
                    swap_cols(t, j1)
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    U = IntegerMatrix.from_rows(u, rows)
    D = IntegerMatrix.from_rows(a, cols)
    V = IntegerMatrix.from_rows(vt, cols).transpose()
    return SmithDecomposition(U, D, V)


def kernel_basis(M: IntegerMatrix) -> list[tuple[int, ...]]:
    """Z-basis of {x : M x = 0}, read off the Smith transform."""
    snf = smith_normal_form(M)
    return [snf.V.column(j) for j in range(snf.rank, M.cols)]


# ---------------------------------------------------------------------------
# Hermite normal form of a column lattice
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ColumnHermiteForm:
    """Echelon basis of the lattice spanned by the columns of a matrix.

    ``basis[k]`` has zeros above ``pivots[k]``, a positive entry at the pivot,
    and earlier basis vectors are reduced into ``[0, pivot)`` on that row.
    """

    ambient: int
    basis: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.ambient:
            raise DimensionMismatch(f"vector of length {len(v)} in a rank-{self.ambient} lattice")
        res = list(v)
        k = 0
        for i in range(self.ambient):
            if k < len(self.pivots) and self.pivots[k] == i:
                b = self.basis[k]
                q, rem = divmod(res[i], b[i])
                if rem:
                    return False
                if q:
                    for t in range(i, self.ambient):
                        res[t] -= q * b[t]
                k += 1
            elif res[i]:
                return False
        return True


def hermite_normal_form(M: IntegerMatrix) -> ColumnHermiteForm:
    n = M.rows
    cols = [list(c) for c in M.columns()]
    cols = [c for c in cols if any(c)]
    basis: list[list[int]] = []
    pivots: list[int] = []
    for i in range(n):
        live = [c for c in cols if c[i]]
        if not live:
            continue
        rest = [c for c in cols if not c[i]]
        # gcd-combine the live columns on row i via extended Euclid
        piv = live[0]
        for c in live[1:]:
            x, y = piv[i], c[i]
            g, s, t = _xgcd(x, y)
            a_, b_ = x // g, y // g
            new_piv = [s * p + t * q for p, q in zip(piv, c)]
            new_c = [-b_ * p + a_ * q for p, q in zip(piv, c)]
            piv = new_piv
            if any(new_c):
                rest.append(new_c)
        if piv[i] < 0:
            piv = [-x for x in piv]
        for b in basis:
            q = b[i] // piv[i]
            if q:
                for t in range(n):
                    b[t] -= q * piv[t]
        basis.append(piv)
        pivots.append(i)
        cols = rest
    return ColumnHermiteForm(n, tuple(tuple(b) for b in basis), tuple(pivots))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b == g == gcd(a, b) > 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def lattice_contains(generators: Iterable[Sequence[int]], ambient: int, v: Sequence[int]) -> bool:
    gens = [tuple(g) for g in generators]
    return hermite_normal_form(IntegerMatrix.from_columns(gens, ambient)).contains(v)
