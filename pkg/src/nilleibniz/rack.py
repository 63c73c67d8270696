"""Pointed racks integrating two-step nilpotent Leibniz algebras.

Three evaluable models share one small interface (``dim``, ``unit``,
``operate``, ``sample_point``):

``AffineModel``
    ``(x, a) |> (y, b) = (y, b + omega(x, y))`` on ``g0 x [g, g]``, the
    global rack of a Leibniz algebra with central commutator ideal.
``MatrixConjModel``
    conjugation in the Heisenberg group of upper unitriangular matrices.
``LocalSO2Model``
    the chart version of the ``l_3^a`` rack on ``SO(2)^3`` which is only
    defined near the unit.

Points are tuples of exact scalars. For ``AffineModel`` they are
coordinates in the adapted basis stored on the model (complement of the
commutator ideal first, then the commutator basis).
"""
from __future__ import annotations

import os
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Any, Callable, Sequence, Union

import sympy

from .algebra import LeibnizAlgebra, commutator_ideal, nilpotency_class
from .exactla import GaussianRational, Matrix
from .exactla.scalar import Q, QI, join_fields, to_field

SEED_ENV = "NILLEIBNIZ_SEED"
DEFAULT_SEED = 20240501


class RackError(ValueError):
    pass


class RackPreconditionError(RackError):
    """The algebra cannot be integrated by the cocycle construction."""


class RackDomainError(RackError):
    """A point left the chart of a local rack."""

    def __init__(self, point, coordinate: str, value):
        super().__init__(f"coordinate {coordinate} = {value} of {tuple(map(str, point))} "
                         "is outside the chart [0, 1)")
        self.point = tuple(point)
        self.coordinate = coordinate
        self.value = value


# -- random rational points -----------------------------------------------------

def default_seed() -> int:
    return int(os.environ.get(SEED_ENV, DEFAULT_SEED))


def random_rational(rng: random.Random, bound: int = 100) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_scalar(rng: random.Random, field: str, bound: int = 100):
    if field == QI:
        return GaussianRational(random_rational(rng, bound), random_rational(rng, bound))
    return random_rational(rng, bound)


# -- models -------------------------------------------------------------------

def _identity(c):
    return c


def _bilinear(W: Matrix, x: Sequence, y: Sequence, conv: Callable = _identity):
    total = 0
    for i, xi in enumerate(x):
        if not _nonzero(xi):
            continue
        for j, yj in enumerate(y):
            c = W[i, j]
            if c:
                total = total + conv(c) * xi * yj
    return total


def _nonzero(v) -> bool:
    if isinstance(v, sympy.Basic):
        return v != 0
    return bool(v)


@dataclass(frozen=True)
class AffineModel:
    """``(x, a) |> (y, b) = (y, b + omega(x, y))``.

    ``omega[r]`` is the ``m x m`` matrix of the r-th central component.
    ``basis`` (rows, in the coordinates of the source algebra) records the
    adapted basis, so that :func:`tangent_algebra` can return the bracket
    in the original coordinates. ``increment`` replaces the bilinear
    cocycle by an arbitrary map ``(x, a, y) -> tuple``; it exists for
    building non-examples.
    """
    m: int
    omega: tuple
    field: str = Q
    basis: Matrix | None = None
    name: str | None = None
    increment: Callable | None = dc_field(default=None, compare=False)

    @property
    def c(self) -> int:
        return len(self.omega)

    @property
    def dim(self) -> int:
        return self.m + self.c

    @property
    def unit(self) -> tuple:
        return (to_field(0, self.field),) * self.dim

    def cocycle(self, x, y, a=None, conv: Callable = _identity) -> tuple:
        if self.increment is not None:
            return tuple(self.increment(tuple(x), tuple(a if a is not None else ()), tuple(y)))
        vals = [_bilinear(W, x, y, conv) for W in self.omega]
        if conv is _identity:
            zero = to_field(0, self.field)
            vals = [v + zero for v in vals]
        return tuple(vals)

    def operate(self, p: Sequence, q: Sequence, conv: Callable | None = None) -> tuple:
        conv = conv or _identity
        m = self.m
        x, a = tuple(p[:m]), tuple(p[m:])
        y, b = tuple(q[:m]), tuple(q[m:])
        inc = self.cocycle(x, y, a, conv)
        return y + tuple(br + ir for br, ir in zip(b, inc))

    def left_inverse(self, p: Sequence, r: Sequence) -> tuple:
        """The unique ``q`` with ``p |> q = r``."""
        m = self.m
        y, b = tuple(r[:m]), tuple(r[m:])
        inc = self.cocycle(tuple(p[:m]), y, tuple(p[m:]))
        return y + tuple(br - ir for br, ir in zip(b, inc))

    def sample_point(self, rng: random.Random) -> tuple:
        return tuple(random_scalar(rng, self.field) for _ in range(self.dim))

    def symmetric_part(self) -> tuple:
        half = to_field(Fraction(1, 2), self.field)
        return tuple((W + W.T).scale(half) for W in self.omega)


@dataclass(frozen=True)
class MatrixConjModel:
    """``g |> h = g h g^-1`` in ``H_{2n+1}``; points are ``(x_1..x_n, y_1..y_n, z)``."""
    n: int
    field: str = Q

    @property
    def dim(self) -> int:
        return 2 * self.n + 1

    @property
    def unit(self) -> tuple:
        return (to_field(0, self.field),) * self.dim

    def to_matrix(self, p: Sequence) -> Matrix:
        n = self.n
        size = n + 2
        rows = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
        for i in range(n):
            rows[0][1 + i] = p[i]
            rows[1 + i][size - 1] = p[n + i]
        rows[0][size - 1] = p[2 * n]
        return Matrix(rows, self.field)

    def from_matrix(self, M: Matrix) -> tuple:
        n = self.n
        size = n + 2
        if M != Matrix.identity(size, M.field) + _strict_upper_part(M, n):
            raise RackError("matrix is not in the Heisenberg group")
        return (tuple(M[0, 1 + i] for i in range(n)) + tuple(M[1 + i, size - 1] for i in range(n))
                + (M[0, size - 1],))

    def operate(self, p: Sequence, q: Sequence) -> tuple:
        g = self.to_matrix(p)
        return self.from_matrix(g @ self.to_matrix(q) @ g.inverse())

    def closed_form(self, p: Sequence, q: Sequence) -> tuple:
        """``(x', y', z' + sum(x_i y'_i - y_i x'_i))``."""
        n = self.n
        x, y = p[:n], p[n:2 * n]
        x2, y2, z2 = q[:n], q[n:2 * n], q[2 * n]
        dz = sum((x[i] * y2[i] - y[i] * x2[i] for i in range(n)), to_field(0, self.field))
        return tuple(x2) + tuple(y2) + (z2 + dz,)

    def left_inverse(self, p: Sequence, r: Sequence) -> tuple:
        g = self.to_matrix(p)
        return self.from_matrix(g.inverse() @ self.to_matrix(r) @ g)

    def sample_point(self, rng: random.Random) -> tuple:
        return tuple(random_scalar(rng, self.field) for _ in range(self.dim))


def _strict_upper_part(M: Matrix, n: int) -> Matrix:
    size = n + 2
    rows = [[0] * size for _ in range(size)]
    for i in range(n):
        rows[0][1 + i] = M[0, 1 + i]
        rows[1 + i][size - 1] = M[1 + i, size - 1]
    rows[0][size - 1] = M[0, size - 1]
    return Matrix(rows, M.field)


@dataclass(frozen=True)
class LocalSO2Model:
    """Local rack of ``l_3^a`` on ``SO(2)^3`` in chart coordinates.

    A point ``(x, y, z)`` stands for ``(e^{2 pi i x}, e^{2 pi i y}, e^{2 pi i z})``
    with each coordinate in ``[0, 1)``, the principal branch of the
    logarithm. The cocycle ``(1+a) x y' + (-1+a) x' y`` is evaluated on the
    chart coordinates, and a result whose last coordinate leaves ``[0, 1)``
    is reported rather than wrapped: the operation is not defined there.
    """
    a: Fraction

    dim = 3
    names = ("x", "y", "z")

    @property
    def field(self) -> str:
        return Q

    @property
    def unit(self) -> tuple:
        return (Fraction(0),) * 3

    @property
    def omega(self) -> Matrix:
        return Matrix([[0, 1 + self.a], [-1 + self.a, 0]])

    def _check(self, p, which: str):
        if len(p) != 3:
            raise RackError(f"{which} point must have 3 coordinates")
        for name, v in zip(self.names, p):
            if not 0 <= v < 1:
                raise RackDomainError(p, f"{which}.{name}", v)

    def operate(self, p: Sequence, q: Sequence) -> tuple:
        p, q = tuple(map(Fraction, p)), tuple(map(Fraction, q))
        self._check(p, "left")
        self._check(q, "right")
        z = q[2] + _bilinear(self.omega, p[:2], q[:2]) + Fraction(0)
        out = (q[0], q[1], z)
        if not 0 <= z < 1:
            raise RackDomainError(out, "result.z", z)
        return out

    def left_inverse(self, p: Sequence, r: Sequence) -> tuple:
        p, r = tuple(map(Fraction, p)), tuple(map(Fraction, r))
        self._check(p, "left")
        self._check(r, "right")
        z = r[2] - _bilinear(self.omega, p[:2], r[:2]) - Fraction(0)
        out = (r[0], r[1], z)
        if not 0 <= z < 1:
            raise RackDomainError(out, "result.z", z)
        return out

    def chart_scale(self) -> Fraction:
        """Coordinate bound keeping two successive increments inside the chart."""
        s = abs(1 + self.a) + abs(-1 + self.a) + 1
        return Fraction(1, 4 * s)

    def sample_point(self, rng: random.Random) -> tuple:
        s = self.chart_scale()
        # each increment is below 1/16 in size, so z in [1/4, 1/2] survives two of them
        return (Fraction(rng.randint(0, 100), 100) * s, Fraction(rng.randint(0, 100), 100) * s,
                Fraction(1, 4) + Fraction(rng.randint(0, 100), 400))


RackSpec = Union[AffineModel, MatrixConjModel, LocalSO2Model]


# -- construction -------------------------------------------------------------

def cocycle_rack(L: LeibnizAlgebra) -> AffineModel:
    """The global rack ``g0 x [g, g]`` of a Leibniz algebra of nilpotency class <= 2.

    ``g0`` is spanned by the standard basis vectors outside the pivot
    columns of the echelon basis of ``[g, g]``.
    """
    cls = nilpotency_class(L)
    if cls is None or cls > 2:
        raise RackPreconditionError(
            f"cocycle integration needs nilpotency class <= 2, got "
            f"{'not nilpotent' if cls is None else cls}")
    C = commutator_ideal(L)
    cvecs = C.vectors()
    pivots = C.pivots
    comp = [k for k in range(L.dim) if k not in pivots]
    field = L.field
    zero, one = to_field(0, field), to_field(1, field)
    basis_rows = [[one if j == k else zero for j in range(L.dim)] for k in comp]
    basis_rows += [list(v) for v in cvecs]
    m = len(comp)
    omega = []
    for r, pr in enumerate(pivots):
        rows = [[L.bracket_basis(p, q)[pr] for q in comp] for p in comp]
        omega.append(Matrix(rows, field, ncols=m))
    return AffineModel(m, tuple(omega), field, Matrix(basis_rows, field, ncols=L.dim), L.name)


def heisenberg_rack(A: Matrix) -> AffineModel:
    from .families import heisenberg_leibniz
    return cocycle_rack(heisenberg_leibniz(A))


def kronecker_rack(n: int) -> AffineModel:
    from .families import kronecker_algebra
    return cocycle_rack(kronecker_algebra(n))


def dieudonne_rack(n: int) -> AffineModel:
    from .families import dieudonne_algebra
    return cocycle_rack(dieudonne_algebra(n))


def realified_heisenberg_rack(a, n: int) -> AffineModel:
    from .families import realified_complex_heisenberg
    return cocycle_rack(realified_complex_heisenberg(a, n))


def conj_heisenberg(n: int) -> MatrixConjModel:
    if n < 1:
        raise ValueError("n must be positive")
    return MatrixConjModel(n)


def so2_local_rack(a) -> LocalSO2Model:
    return LocalSO2Model(Fraction(a))


# -- tangent algebra ----------------------------------------------------------

def tangent_algebra(R: AffineModel) -> LeibnizAlgebra:
    """Bracket at the unit via the mixed second difference of ``(s u) |> (t v)``.

    For an affine model the operation is affine in each argument's
    central part and bilinear in the cocycle, so
    ``R(u, v) - R(u, 0) - R(0, v) + R(0, 0) = (0, omega(u, v))`` exactly.
    """
    if not isinstance(R, AffineModel):
        raise TypeError("tangent_algebra needs an AffineModel")
    n = R.dim
    field = R.field
    B = R.basis if R.basis is not None else Matrix.identity(n, field)
    field = join_fields(field, B.field)
    Binv_T = B.inverse().T   # original coordinates -> adapted coordinates
    zero = R.unit
    coords = [Binv_T @ tuple(to_field(1 if k == i else 0, field) for k in range(n))
              for i in range(n)]
    br = {}
    for i in range(n):
        u = coords[i]
        for j in range(n):
            v = coords[j]
            d = [w1 - w2 - w3 + w4 for w1, w2, w3, w4 in
                 zip(R.operate(u, v), R.operate(u, zero), R.operate(zero, v),
                     R.operate(zero, zero))]
            if any(d):
                br[(i, j)] = B.T @ d
    return LeibnizAlgebra(n, br, field, R.name)


# -- axiom checking -----------------------------------------------------------

@dataclass(frozen=True)
class AxiomResult:
    passed: bool
    witness: tuple | None = None
    detail: str = ""

    def to_json(self) -> dict:
        from .serialize import scalar_to_json
        out: dict[str, Any] = {"pass": self.passed}
        if self.witness is not None:
            out["witness"] = [[scalar_to_json(c) for c in pt] for pt in self.witness]
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class RackReport:
    self_distributive: AxiomResult
    left_translation_bijective: AxiomResult
    pointed: AxiomResult
    quandle: AxiomResult
    mode: str = "samples"

    @property
    def is_rack(self) -> bool:
        return (self.self_distributive.passed and self.left_translation_bijective.passed
                and self.pointed.passed)

    def to_json(self) -> dict:
        return {"mode": self.mode, "rack": self.is_rack,
                "self_distributive": self.self_distributive.to_json(),
                "left_translation_bijective": self.left_translation_bijective.to_json(),
                "pointed": self.pointed.to_json(),
                "quandle": self.quandle.to_json()}


def _sample_points(R, count: int, seed: int | None) -> list[tuple]:
    rng = random.Random(default_seed() if seed is None else seed)
    return [R.sample_point(rng) for _ in range(count)]


def rack_axioms_check(R, samples: int | Sequence | str = 50, seed: int | None = None) -> RackReport:
    """Check the rack axioms of ``R``.

    ``samples`` is a number of random triples, an explicit list of points
    (all cyclic triples are tested), or ``"symbolic"`` for an exact check
    of an :class:`AffineModel` by comparing polynomial coefficients.
    """
    if samples == "symbolic":
        if not isinstance(R, AffineModel):
            raise TypeError("symbolic mode needs an AffineModel")
        return _symbolic_check(R)
    if isinstance(samples, int):
        pts = _sample_points(R, 3 * samples, seed)
        triples = [tuple(pts[3 * t:3 * t + 3]) for t in range(samples)]
    else:
        pts = [tuple(p) for p in samples]
        k = len(pts)
        triples = [(pts[t], pts[(t + 1) % k], pts[(t + 2) % k]) for t in range(k)]
    for p in pts:
        if len(p) != R.dim:
            raise RackError(f"sample point {p} has {len(p)} coordinates, expected {R.dim}")
    op = R.operate
    sd = AxiomResult(True)
    for x, y, z in triples:
        if op(x, op(y, z)) != op(op(x, y), op(x, z)):
            sd = AxiomResult(False, (x, y, z), "x |> (y |> z) != (x |> y) |> (x |> z)")
            break
    bij = AxiomResult(True)
    for x, y, _ in triples:
        r = op(x, y)
        if R.left_inverse(x, r) != y or op(x, R.left_inverse(x, y)) != y:
            bij = AxiomResult(False, (x, y), "left translation is not inverted")
            break
    unit = R.unit
    pointed = AxiomResult(True)
    for x in pts:
        if op(unit, x) != x:
            pointed = AxiomResult(False, (x,), "1 |> x != x")
            break
        if op(x, unit) != unit:
            pointed = AxiomResult(False, (x,), "x |> 1 != 1")
            break
    q = AxiomResult(True)
    for x in pts:
        if op(x, x) != x:
            q = AxiomResult(False, (x,), "x |> x != x")
            break
    return RackReport(sd, bij, pointed, q, "samples")


def _to_sympy(c):
    if isinstance(c, GaussianRational):
        return sympy.Rational(c.re.numerator, c.re.denominator) + sympy.I * sympy.Rational(
            c.im.numerator, c.im.denominator)
    c = Fraction(c)
    return sympy.Rational(c.numerator, c.denominator)


def _symbols(prefix: str, n: int) -> tuple:
    return tuple(sympy.symbols(f"{prefix}0:{n}")) if n else ()


def _sym_diff(lhs: Sequence, rhs: Sequence) -> bool:
    return all(sympy.expand(l - r) == 0 for l, r in zip(lhs, rhs))


def _symbolic_check(R: AffineModel) -> RackReport:
    n = R.dim
    X, Y, Z = _symbols("x", n), _symbols("y", n), _symbols("z", n)
    zero = tuple(sympy.Integer(0) for _ in range(n))

    def op(p, q):
        return R.operate(p, q, conv=_to_sympy)

    # the witness search only runs when an identity fails
    sd_ok = _sym_diff(op(X, op(Y, Z)), op(op(X, Y), op(X, Z)))
    sd = AxiomResult(True) if sd_ok else _witness_triple(R)
    m = R.m
    inv = Y[:m] + tuple(b - i for b, i in zip(Y[m:], R.cocycle(X[:m], Y[:m], X[m:], _to_sympy)))
    bij_ok = _sym_diff(op(X, inv), Y)
    if bij_ok:
        y_img = op(X, Y)
        back = y_img[:m] + tuple(b - i for b, i in zip(
            y_img[m:], R.cocycle(X[:m], y_img[:m], X[m:], _to_sympy)))
        bij_ok = _sym_diff(back, Y)
    bij = AxiomResult(True) if bij_ok else AxiomResult(
        False, None, "central increment depends on the central coordinate")
    pointed_ok = _sym_diff(op(zero, X), X) and _sym_diff(op(X, zero), zero)
    pointed = AxiomResult(True) if pointed_ok else _witness_pointed(R)
    quandle, witness = is_quandle(R)
    q = AxiomResult(quandle, None if witness is None else (witness,),
                    "" if quandle else "x |> x != x")
    return RackReport(sd, bij, pointed, q, "symbolic")


def _witness_triple(R, tries: int = 200) -> AxiomResult:
    rng = random.Random(default_seed())
    for _ in range(tries):
        x, y, z = (R.sample_point(rng) for _ in range(3))
        if R.operate(x, R.operate(y, z)) != R.operate(R.operate(x, y), R.operate(x, z)):
            return AxiomResult(False, (x, y, z), "x |> (y |> z) != (x |> y) |> (x |> z)")
    return AxiomResult(False, None, "symbolic identity fails; no rational witness found")


def _witness_pointed(R, tries: int = 200) -> AxiomResult:
    rng = random.Random(default_seed())
    for _ in range(tries):
        x = R.sample_point(rng)
        if R.operate(R.unit, x) != x or R.operate(x, R.unit) != R.unit:
            return AxiomResult(False, (x,), "unit laws fail")
    return AxiomResult(False, None, "unit laws fail symbolically; no rational witness found")


def is_quandle(R, samples: int = 50, seed: int | None = None) -> tuple[bool, tuple | None]:
    """Decide ``x |> x = x`` for all ``x``; return ``(verdict, witness point)``.

    Exact for affine models (the symmetric part of the cocycle must
    vanish) and for the SO(2) chart model; conjugation racks are always
    quandles.
    """
    if isinstance(R, MatrixConjModel):
        return True, None
    if isinstance(R, LocalSO2Model):
        if R.a == 0:
            return True, None
        s = R.chart_scale()
        return False, (s, s, Fraction(1, 2))
    if isinstance(R, AffineModel) and R.increment is None:
        zero, one = to_field(0, R.field), to_field(1, R.field)
        for S in R.symmetric_part():
            # omega(x, x) = x^T S x: a nonzero diagonal entry gives e_i, otherwise e_i + e_j
            support = [(i, i) for i in range(R.m) if S[i, i]] or [
                (i, j) for i in range(R.m) for j in range(i + 1, R.m) if S[i, j]]
            if support:
                x = [zero] * R.dim
                for k in set(support[0]):
                    x[k] = one
                return False, tuple(x)
        return True, None
    for x in _sample_points(R, samples, seed):
        if R.operate(x, x) != x:
            return False, x
    return True, None
