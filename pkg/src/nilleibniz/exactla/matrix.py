"""Dense immutable matrices over Q or Q(i) with exact Gaussian elimination."""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .scalar import Q, field_of, join_fields, scalar_key, to_field


class SingularMatrixError(ValueError):
    """Raised when inverting a singular matrix."""

    def __init__(self, rank: int, size: int):
        super().__init__(f"matrix is singular: rank {rank} < {size}")
        self.rank = rank
        self.size = size


class Matrix:
    """Row-major matrix of exact scalars sharing one field tag."""

    __slots__ = ("rows", "nrows", "ncols", "field")

    def __init__(self, rows: Iterable[Iterable], field: str | None = None,
                 ncols: int | None = None):
        rows = [list(r) for r in rows]
        if field is None:
            field = join_fields(*(field_of(v) for r in rows for v in r)) if rows else Q
        nc = len(rows[0]) if rows else (ncols or 0)
        if any(len(r) != nc for r in rows):
            raise ValueError("ragged matrix rows")
        data = tuple(tuple(to_field(v, field) for v in r) for r in rows)
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", nc)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # construction -----------------------------------------------------
    @classmethod
    def identity(cls, n: int, field: str = Q) -> Matrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], field)

    @classmethod
    def zeros(cls, m: int, n: int | None = None, field: str = Q) -> Matrix:
        n = m if n is None else n
        return cls([[0] * n for _ in range(m)], field, ncols=n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int | None = None,
                     field: str | None = None) -> Matrix:
        if not cols:
            return cls.zeros(nrows or 0, 0, field or Q)
        return cls([list(r) for r in zip(*cols)], field)

    @classmethod
    def diag(cls, values: Sequence, field: str | None = None) -> Matrix:
        n = len(values)
        if field is None:
            field = join_fields(*(field_of(v) for v in values)) if values else Q
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], field)

    @classmethod
    def block_diag(cls, *blocks: Matrix) -> Matrix:
        field = join_fields(*(b.field for b in blocks)) if blocks else Q
        n = sum(b.nrows for b in blocks)
        m = sum(b.ncols for b in blocks)
        out = [[0] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    out[r0 + i][c0 + j] = b.rows[i][j]
            r0 += b.nrows
            c0 += b.ncols
        return cls(out, field, ncols=m)

    @classmethod
    def block(cls, grid: Sequence[Sequence[Matrix]]) -> Matrix:
        """Assemble a matrix from a 2-D grid of blocks."""
        field = join_fields(*(b.field for row in grid for b in row))
        out = []
        for brow in grid:
            h = brow[0].nrows
            if any(b.nrows != h for b in brow):
                raise ValueError("block row heights differ")
            for i in range(h):
                out.append([v for b in brow for v in b.rows[i]])
        return cls(out, field)

    # access -----------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.ncols)]

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        return Matrix([[self.rows[i][j] for j in cols] for i in rows], self.field,
                      ncols=len(cols))

    def to_field(self, field: str) -> Matrix:
        return Matrix(self.rows, field, ncols=self.ncols)

    # arithmetic -------------------------------------------------------
    @property
    def T(self) -> Matrix:
        if self.nrows == 0:
            return Matrix([[] for _ in range(self.ncols)], self.field, ncols=0)
        return Matrix([list(c) for c in zip(*self.rows)], self.field, ncols=self.nrows)

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      join_fields(self.field, other.field), ncols=self.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      join_fields(self.field, other.field), ncols=self.ncols)

    def __neg__(self) -> Matrix:
        return Matrix([[-a for a in r] for r in self.rows], self.field, ncols=self.ncols)

    def scale(self, c) -> Matrix:
        return Matrix([[c * a for a in r] for r in self.rows],
                      join_fields(self.field, field_of(c)), ncols=self.ncols)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            if self.field == Q and other.field == Q:
                return _matmul_rational(self, other)
            cols = other.columns()
            zero = to_field(0, join_fields(self.field, other.field))
            out = []
            for r in self.rows:
                out.append([_dot(r, c, zero) for c in cols])
            return Matrix(out, join_fields(self.field, other.field), ncols=other.ncols)
        vec = tuple(other)
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        zero = to_field(0, self.field)
        return tuple(_dot(r, vec, zero) for r in self.rows)

    def __pow__(self, e: int) -> Matrix:
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        if e < 0:
            return inverse(self) ** (-e)
        result = Matrix.identity(self.nrows, self.field)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def congruent(self, P: Matrix) -> Matrix:
        """Return ``P @ self @ P.T``."""
        return P @ self @ P.T

    def is_symmetric(self) -> bool:
        return self == self.T

    def is_skew(self) -> bool:
        return self == -self.T

    def is_zero(self) -> bool:
        return not any(v for r in self.rows for v in r)

    def _check_same_shape(self, other: Matrix):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(v) for v in r) + "]" for r in self.rows)
        return f"Matrix([{body}])"

    # elimination ------------------------------------------------------
    def rref(self) -> tuple[Matrix, list[int]]:
        rows, pivots = _rref(self.tolist())
        return Matrix(rows, self.field, ncols=self.ncols), pivots

    def rank(self) -> int:
        return rank(self)

    def det(self) -> object:
        return det(self)

    def kernel(self) -> Matrix:
        return kernel(self)

    def inverse(self) -> Matrix:
        return inverse(self)

    def sort_key(self) -> tuple:
        return tuple(scalar_key(v) for r in self.rows for v in r)


def _dot(r, c, zero):
    acc = zero
    for a, b in zip(r, c):
        if a and b:
            acc = acc + a * b
    return acc


def _integer_rows(rows) -> tuple[list[list[int]], list[int]]:
    """Clear denominators row by row: ``rows[i] = ints[i] / dens[i]``."""
    ints, dens = [], []
    for row in rows:
        den = 1
        for v in row:
            d = v.denominator
            if d != 1:
                den = den * d // gcd(den, d)
        ints.append([v.numerator * (den // v.denominator) for v in row])
        dens.append(den)
    return ints, dens


def _matmul_rational(A: Matrix, B: Matrix) -> Matrix:
    """Product over Q with one Fraction per output entry."""
    ai, ad = _integer_rows(A.rows)
    bi, bd = _integer_rows(B.columns())
    out = []
    for row, da in zip(ai, ad):
        out.append([Fraction(sum(u * v for u, v in zip(row, col) if u), da * db)
                    for col, db in zip(bi, bd)])
    return Matrix(out, Q, ncols=B.ncols)


def _rref(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    if rows and all(type(v) is Fraction for r in rows for v in r):
        return _rref_rational(rows)
    m = len(rows)
    n = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        pr = rows[r]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
    return rows, pivots


def _rref_rational(rows: list[list[Fraction]]) -> tuple[list[list], list[int]]:
    ints, _ = _integer_rows(rows)
    m = len(ints)
    n = len(ints[0])
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if ints[i][c]), None)
        if p is None:
            continue
        ints[r], ints[p] = ints[p], ints[r]
        pr = ints[r]
        a = pr[c]
        for i in range(m):
            b = ints[i][c]
            if i != r and b:
                new = [a * u - b * v for u, v in zip(ints[i], pr)]
                g = gcd(*new)
                ints[i] = [u // g for u in new] if g > 1 else new
        pivots.append(c)
        r += 1
    out = []
    for i, row in enumerate(ints):
        if i < r:
            piv = row[pivots[i]]
            out.append([Fraction(u, piv) for u in row])
        else:
            out.append([Fraction(0)] * n)
    return out, pivots


def _rank_integer(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination with row content removal."""
    rows = [r for r in rows if any(r)]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        a = pr[c]
        for i in range(r + 1, m):
            b = rows[i][c]
            if b:
                new = [a * u - b * v for u, v in zip(rows[i], pr)]
                g = gcd(*new)
                rows[i] = [u // g for u in new] if g > 1 else new
        r += 1
    return r


def rank(M: Matrix) -> int:
    if M.nrows == 0 or M.ncols == 0:
        return 0
    if M.field == Q:
        rows = M.rows
    else:
        # A + iB has half the rational rank of [[A, -B], [B, A]]
        re = [[v.re for v in r] for r in M.rows]
        im = [[v.im for v in r] for r in M.rows]
        rows = ([a + [-b for b in bi] for a, bi in zip(re, im)]
                + [b + a for a, b in zip(re, im)])
    ints = []
    for row in rows:
        den = 1
        for v in row:
            den = den * v.denominator // gcd(den, v.denominator)
        ints.append([v.numerator * (den // v.denominator) for v in row])
    r = _rank_integer(ints)
    return r if M.field == Q else r // 2


def det(M: Matrix):
    if M.nrows != M.ncols:
        raise ValueError("determinant of a non-square matrix")
    rows = M.tolist()
    n = M.nrows
    d = to_field(1, M.field)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return to_field(0, M.field)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            d = -d
        pr = rows[c]
        d = d * pr[c]
        inv = 1 / pr[c]
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
    return d


def kernel(M: Matrix) -> Matrix:
    """Basis of the right null space, as the columns of the returned matrix.

    The basis is the standard one read off the reduced row echelon form:
    one column per free variable, with a 1 in that variable's slot.
    """
    n = M.ncols
    if M.nrows == 0:
        return Matrix.identity(n, M.field)
    rows, pivots = _rref(M.tolist())
    free = [j for j in range(n) if j not in set(pivots)]
    cols = []
    for f in free:
        v = [to_field(0, M.field)] * n
        v[f] = to_field(1, M.field)
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        cols.append(v)
    return Matrix.from_columns(cols, nrows=n, field=M.field) if cols else \
        Matrix.zeros(n, 0, M.field)


def inverse(M: Matrix) -> Matrix:
    n = M.nrows
    if n != M.ncols:
        raise ValueError("inverse of a non-square matrix")
    aug = [list(r) + [to_field(1 if i == j else 0, M.field) for j in range(n)]
           for i, r in enumerate(M.rows)]
    rows, pivots = _rref(aug)
    if pivots[:n] != list(range(n)) or len([p for p in pivots if p < n]) < n:
        raise SingularMatrixError(len([p for p in pivots if p < n]), n)
    return Matrix([r[n:] for r in rows], M.field, ncols=n)


def solve(M: Matrix, b: Sequence) -> tuple | None:
    """One solution of ``M x = b`` or ``None`` when inconsistent."""
    n = M.ncols
    aug = [list(r) + [to_field(v, M.field)] for r, v in zip(M.rows, b)]
    rows, pivots = _rref(aug)
    if n in pivots:
        return None
    x = [to_field(0, M.field)] * n
    for r, p in enumerate(pivots):
        x[p] = rows[r][n]
    return tuple(x)
