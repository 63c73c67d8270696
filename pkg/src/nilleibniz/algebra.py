"""Leibniz algebras given by structure constants, and their basic invariants.

An algebra of dimension ``n`` stores only its nonzero brackets of basis
vectors: ``brackets[(i, j)]`` is the coordinate vector of ``[e_i, e_j]``
(indices are 0-based here; the JSON format is 1-based).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Mapping, Sequence

from .exactla import Matrix, SingularMatrixError, inverse, kernel, rank
from .exactla.scalar import Q, field_of, join_fields, to_field


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class LeibnizAlgebra:
    dim: int
    brackets: Mapping[tuple[int, int], tuple]
    field: str = Q
    name: str | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        clean = {}
        for (i, j), v in self.brackets.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise IndexError(f"bracket index ({i}, {j}) out of range for dim {self.dim}")
            if len(v) != self.dim:
                raise DimensionMismatch(
                    f"bracket [{i},{j}] has {len(v)} coordinates, expected {self.dim}")
            vec = tuple(to_field(c, self.field) for c in v)
            if any(vec):
                clean[(i, j)] = vec
        object.__setattr__(self, "brackets", dict(sorted(clean.items())))

    def __hash__(self):
        return hash((self.dim, self.field, tuple(self.brackets.items())))

    @classmethod
    def from_structure(cls, c: Sequence, field: str | None = None,
                       name: str | None = None) -> LeibnizAlgebra:
        """Build from a full tensor ``c[i][j][k]``."""
        n = len(c)
        if field is None:
            field = join_fields(*(field_of(v) for a in c for b in a for v in b)) if n else Q
        return cls(n, {(i, j): tuple(c[i][j]) for i in range(n) for j in range(n)},
                   field, name)

    @classmethod
    def abelian(cls, n: int, field: str = Q) -> LeibnizAlgebra:
        return cls(n, {}, field, f"abelian{n}")

    @property
    def structure(self) -> list[list[list]]:
        z = self.zero_vector()
        return [[list(self.brackets.get((i, j), z)) for j in range(self.dim)]
                for i in range(self.dim)]

    def zero_vector(self) -> tuple:
        return tuple(to_field(0, self.field) for _ in range(self.dim))

    def basis_vector(self, i: int) -> tuple:
        return tuple(to_field(1 if k == i else 0, self.field) for k in range(self.dim))

    def bracket_basis(self, i: int, j: int) -> tuple:
        return self.brackets.get((i, j), self.zero_vector())

    def with_name(self, name: str | None) -> LeibnizAlgebra:
        return LeibnizAlgebra(self.dim, self.brackets, self.field, name)

    def to_field(self, field: str) -> LeibnizAlgebra:
        return LeibnizAlgebra(self.dim, self.brackets, field, self.name)


def bracket(L: LeibnizAlgebra, x: Sequence, y: Sequence) -> tuple:
    if len(x) != L.dim or len(y) != L.dim:
        raise DimensionMismatch(f"vectors must have length {L.dim}")
    field = join_fields(L.field, *(field_of(v) for v in x), *(field_of(v) for v in y))
    out = [to_field(0, field)] * L.dim
    for (i, j), v in L.brackets.items():
        c = x[i] * y[j]
        if c:
            for k, vk in enumerate(v):
                if vk:
                    out[k] = out[k] + c * vk
    return tuple(out)


# -- identity checks -----------------------------------------------------

@dataclass(frozen=True)
class LeibnizViolation:
    """A basis triple (0-based) on which an identity fails, and the residual."""
    triple: tuple[int, int, int]
    residual: tuple

    def to_json(self):
        from .serialize import scalar_to_json
        return {"triple": [t + 1 for t in self.triple],
                "residual": [scalar_to_json(v) for v in self.residual]}


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


class _Multiplier:
    """Products with a basis vector on either side, using only the nonzero brackets."""

    def __init__(self, L: LeibnizAlgebra):
        self.zero = L.zero_vector()
        self.by_left: dict[int, list] = {}
        self.by_right: dict[int, list] = {}
        for (i, j), v in L.brackets.items():
            self.by_left.setdefault(i, []).append((j, v))
            self.by_right.setdefault(j, []).append((i, v))
        self.table = L.brackets

    def _combine(self, terms, v) -> tuple:
        out = list(self.zero)
        for idx, w in terms:
            c = v[idx]
            if c:
                for k, wk in enumerate(w):
                    if wk:
                        out[k] = out[k] + c * wk
        return tuple(out)

    def left(self, i: int, v: Sequence) -> tuple:
        """``[e_i, v]``"""
        return self._combine(self.by_left.get(i, ()), v)

    def right(self, v: Sequence, k: int) -> tuple:
        """``[v, e_k]``"""
        return self._combine(self.by_right.get(k, ()), v)

    def basis(self, i: int, j: int) -> tuple:
        return self.table.get((i, j), self.zero)


def check_left_leibniz(L: LeibnizAlgebra) -> LeibnizViolation | None:
    """``[x,[y,z]] = [[x,y],z] + [y,[x,z]]`` on all basis triples.

    Trilinearity makes basis triples sufficient. Returns ``None`` when the
    identity holds, otherwise the first failing triple in lexicographic order.
    """
    n = L.dim
    mul = _Multiplier(L)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = mul.left(i, mul.basis(j, k))
                rhs = _add(mul.right(mul.basis(i, j), k), mul.left(j, mul.basis(i, k)))
                res = _sub(lhs, rhs)
                if any(res):
                    return LeibnizViolation((i, j, k), res)
    return None


def check_right_leibniz(L: LeibnizAlgebra) -> LeibnizViolation | None:
    """``[[x,y],z] = [[x,z],y] + [x,[y,z]]`` on all basis triples."""
    n = L.dim
    mul = _Multiplier(L)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = mul.right(mul.basis(i, j), k)
                rhs = _add(mul.right(mul.basis(i, k), j), mul.left(i, mul.basis(j, k)))
                res = _sub(lhs, rhs)
                if any(res):
                    return LeibnizViolation((i, j, k), res)
    return None


def is_symmetric(L: LeibnizAlgebra) -> bool:
    return check_left_leibniz(L) is None and check_right_leibniz(L) is None


def is_lie(L: LeibnizAlgebra) -> bool:
    return leib_ideal(L).dim == 0


# -- subspaces -------------------------------------------------------------

class Subspace:
    """A subspace of F^n, stored by a canonical (reduced echelon) basis.

    ``basis`` is a Matrix whose columns are the basis vectors; two equal
    subspaces always have identical bases.
    """

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient: int, vectors: Sequence[Sequence] = (), field: str = Q):
        rows = [list(v) for v in vectors if any(v)]
        if rows:
            R, piv = Matrix(rows, field).rref()
            rows = [list(R.row(i)) for i in range(len(piv))]
        else:
            piv = []
        self.ambient = ambient
        self.pivots = tuple(piv)
        self.basis = Matrix.from_columns(rows, nrows=ambient, field=field) if rows \
            else Matrix.zeros(ambient, 0, field)

    @classmethod
    def full(cls, n: int, field: str = Q) -> Subspace:
        return cls(n, Matrix.identity(n, field).rows, field)

    @property
    def dim(self) -> int:
        return self.basis.ncols

    @property
    def field(self) -> str:
        return self.basis.field

    def vectors(self) -> list[tuple]:
        return self.basis.columns()

    def contains_vector(self, v: Sequence) -> bool:
        return Subspace(self.ambient, self.vectors() + [v], self.field).dim == self.dim

    def __le__(self, other: Subspace) -> bool:
        return (self + other).dim == other.dim

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace(self.ambient, self.vectors() + other.vectors(),
                        join_fields(self.field, other.field))

    def intersect(self, other: Subspace) -> Subspace:
        if self.dim == 0 or other.dim == 0:
            return Subspace(self.ambient, (), self.field)
        # solve A u = B w
        cols = self.vectors() + [tuple(-c for c in v) for v in other.vectors()]
        K = kernel(Matrix.from_columns(cols, nrows=self.ambient))
        vecs = []
        for u in K.columns():
            coeffs = u[:self.dim]
            vecs.append(self.basis @ coeffs)
        return Subspace(self.ambient, vecs, self.field)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, basis={self.vectors()})"


def commutator_ideal(L: LeibnizAlgebra) -> Subspace:
    return Subspace(L.dim, list(L.brackets.values()), L.field)


def leib_ideal(L: LeibnizAlgebra) -> Subspace:
    """Span of all squares ``[x, x]``, obtained by polarization."""
    n = L.dim
    vecs = []
    for i in range(n):
        vecs.append(L.bracket_basis(i, i))
        for j in range(i + 1, n):
            vecs.append(_add(L.bracket_basis(i, j), L.bracket_basis(j, i)))
    return Subspace(n, vecs, L.field)


def _left_mult_matrix(L: LeibnizAlgebra, side: str) -> Matrix:
    """Stack the maps needed for the centers.

    For ``side == "left"`` row block j holds x -> [x, e_j]; a vector in the
    kernel annihilates every basis vector from the left.
    """
    n = L.dim
    rows = []
    for j in range(n):
        for k in range(n):
            if side == "left":
                rows.append([L.bracket_basis(i, j)[k] for i in range(n)])
            else:
                rows.append([L.bracket_basis(j, i)[k] for i in range(n)])
    return Matrix(rows, L.field) if rows else Matrix.zeros(0, n, L.field)


def left_center(L: LeibnizAlgebra) -> Subspace:
    """``{x : [x, L] = 0}``."""
    return Subspace(L.dim, kernel(_left_mult_matrix(L, "left")).columns(), L.field)


def right_center(L: LeibnizAlgebra) -> Subspace:
    """``{x : [L, x] = 0}``."""
    return Subspace(L.dim, kernel(_left_mult_matrix(L, "right")).columns(), L.field)


def center(L: LeibnizAlgebra) -> Subspace:
    return left_center(L).intersect(right_center(L))


def lower_central_series(L: LeibnizAlgebra) -> list[Subspace]:
    """``L^(0) = L``, ``L^(k+1) = [L, L^(k)]`` until two consecutive terms agree.

    The last element is the stable term (zero for nilpotent algebras).
    """
    n = L.dim
    current = Subspace.full(n, L.field)
    series = [current]
    for _ in range(n + 1):
        vecs = [bracket(L, L.basis_vector(i), v)
                for i in range(n) for v in current.vectors()]
        nxt = Subspace(n, vecs, L.field)
        series.append(nxt)
        if nxt == current or nxt.dim == 0:
            break
        current = nxt
    return series


def nilpotency_class(L: LeibnizAlgebra) -> int | None:
    """Smallest c with ``L^(c) = 0``, or ``None`` if L is not nilpotent."""
    series = lower_central_series(L)
    for c, s in enumerate(series):
        if s.dim == 0:
            return c
    return None


def is_two_step_nilpotent(L: LeibnizAlgebra) -> bool:
    return nilpotency_class(L) == 2


# -- constructions ------------------------------------------------------------

def direct_sum(L1: LeibnizAlgebra, L2: LeibnizAlgebra) -> LeibnizAlgebra:
    n1, n2 = L1.dim, L2.dim
    field = join_fields(L1.field, L2.field)
    zero = to_field(0, field)
    br = {}
    for (i, j), v in L1.brackets.items():
        br[(i, j)] = tuple(v) + (zero,) * n2
    for (i, j), v in L2.brackets.items():
        br[(n1 + i, n1 + j)] = (zero,) * n1 + tuple(v)
    return LeibnizAlgebra(n1 + n2, br, field)


def change_basis(L: LeibnizAlgebra, P: Matrix) -> LeibnizAlgebra:
    """Structure constants in the basis whose i-th vector is row i of ``P``.

    So the matrix of a bilinear form transforms as ``P @ Phi @ P.T``.
    """
    n = L.dim
    if P.shape != (n, n):
        raise DimensionMismatch(f"basis change must be {n}x{n}, got {P.shape}")
    field = join_fields(L.field, P.field)
    P = P.to_field(field)
    Pinv_T = inverse(P).T  # raises SingularMatrixError
    zero = to_field(0, field)
    # one n x n matrix per output coordinate k, congruence by P, then recombine by P^-T
    used = sorted({k for v in L.brackets.values() for k, c in enumerate(v) if c})
    flat = []
    for k in used:
        rows = [[zero] * n for _ in range(n)]
        for (p, q), v in L.brackets.items():
            rows[p][q] = to_field(v[k], field)
        M = P @ Matrix(rows, field, ncols=n) @ P.T
        flat.append([c for r in M.rows for c in r])
    br = {}
    if used:
        mixed = Pinv_T.submatrix(range(n), used) @ Matrix(flat, field, ncols=n * n)
        for i in range(n):
            for j in range(n):
                w = tuple(mixed[k, i * n + j] for k in range(n))
                if any(w):
                    br[(i, j)] = w
    return LeibnizAlgebra(n, br, field, L.name)


def is_homomorphism(L1: LeibnizAlgebra, L2: LeibnizAlgebra, M: Matrix) -> bool:
    """Check ``M [u, v] = [M u, M v]`` on basis pairs (column j of M is the image of e_j)."""
    if M.shape != (L2.dim, L1.dim):
        raise DimensionMismatch("map has the wrong shape")
    cols = M.columns()
    for i in range(L1.dim):
        for j in range(L1.dim):
            if M @ L1.bracket_basis(i, j) != bracket(L2, cols[i], cols[j]):
                return False
    return True


def structure_matrix_1d(L: LeibnizAlgebra, z: Sequence) -> Matrix:
    """Matrix ``Phi`` with ``[e_i, e_j] = Phi[i, j] * z`` (requires [L, L] in span{z})."""
    n = L.dim
    p = next(k for k, v in enumerate(z) if v)
    rows = [[to_field(0, L.field)] * n for _ in range(n)]
    for (i, j), v in L.brackets.items():
        c = v[p] / z[p]
        if tuple(c * zk for zk in z) != tuple(v):
            raise ValueError(f"bracket [{i},{j}] is not a multiple of z")
        rows[i][j] = c
    return Matrix(rows, L.field)


def algebra_from_form(Phi: Matrix, name: str | None = None) -> LeibnizAlgebra:
    """Algebra on ``F^n + F h`` with ``[e_i, e_j] = Phi[i, j] h`` (h is the last basis vector)."""
    n = Phi.nrows
    if Phi.ncols != n:
        raise DimensionMismatch("bilinear form must be square")
    zero = to_field(0, Phi.field)
    br = {}
    for i in range(n):
        for j in range(n):
            if Phi[i, j]:
                br[(i, j)] = (zero,) * n + (Phi[i, j],)
    return LeibnizAlgebra(n + 1, br, Phi.field, name)


__all__ = [
    "DimensionMismatch", "LeibnizAlgebra", "LeibnizViolation", "SingularMatrixError",
    "Subspace", "algebra_from_form", "bracket", "center", "change_basis",
    "check_left_leibniz", "check_right_leibniz", "commutator_ideal", "direct_sum",
    "is_homomorphism", "is_lie", "is_symmetric", "is_two_step_nilpotent", "leib_ideal",
    "left_center", "lower_central_series", "nilpotency_class", "rank", "right_center",
    "structure_matrix_1d",
]
