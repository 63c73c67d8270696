"""Classification of nilpotent Leibniz algebras with one-dimensional commutator ideal.

Writing ``[x, y] = phi(x, y) z``, the algebra is determined up to
isomorphism by the congruence class of ``phi``, i.e. of the pair
(``alpha``, ``sigma``) of its skew and symmetric parts. The pair is
analysed through the Kronecker invariants of the pencil
``x * alpha + sigma``:

* common radical of both forms -> trivial one-dimensional summands;
* column/row minimal indices ``n`` (paired)  -> ``DieudonneBlock(n)``;
* finite elementary divisors ``f^k`` and ``f~^k`` with
  ``f~(x) = (-1)^deg f * f(-x)``  -> ``Heisenberg(f, k)``;
* pairs of infinite elementary divisors of degree ``n`` -> ``KroneckerBlock(n)``.

A pencil whose invariants cannot be grouped this way (for example an
unpaired divisor, as for ``[e, e] = z``) is not a sum of the three
canonical families and is rejected with :class:`UnsupportedPencilError`.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Union

from .algebra import LeibnizAlgebra, commutator_ideal, structure_matrix_1d
from .exactla import (Matrix, Polynomial, characteristic_polynomial, companion_matrix, det,
                      factor_irreducible, kernel, rank)
from .exactla.scalar import join_fields, scalar_key, to_field


class ClassificationError(ValueError):
    """The input does not satisfy the preconditions of the classifier."""


class CommutatorDimensionError(ClassificationError):
    def __init__(self, dim: int):
        super().__init__(f"commutator ideal has dimension {dim}, expected 1")
        self.dim = dim


class UnsupportedPencilError(ClassificationError):
    """The pencil is not a direct sum of the three canonical pair types."""


# -- data types --------------------------------------------------------------

@dataclass(frozen=True)
class BilinearPair:
    """Skew part ``alpha`` and symmetric part ``sigma`` of ``phi`` (``phi = alpha + sigma``)."""
    alpha: Matrix
    sigma: Matrix
    z: tuple | None = None

    def __post_init__(self):
        if self.alpha.shape != self.sigma.shape or self.alpha.nrows != self.alpha.ncols:
            raise ValueError("alpha and sigma must be square of equal size")
        if not self.alpha.is_skew():
            raise ValueError("alpha is not skew-symmetric")
        if not self.sigma.is_symmetric():
            raise ValueError("sigma is not symmetric")

    @classmethod
    def from_form(cls, Phi: Matrix, z=None) -> BilinearPair:
        half = to_field(1, Phi.field) / 2
        return cls((Phi - Phi.T).scale(half), (Phi + Phi.T).scale(half), z)

    @property
    def phi(self) -> Matrix:
        return self.alpha + self.sigma

    @property
    def dim(self) -> int:
        return self.alpha.nrows

    @property
    def field(self) -> str:
        return join_fields(self.alpha.field, self.sigma.field)

    def congruent(self, P: Matrix) -> BilinearPair:
        return BilinearPair(P @ self.alpha @ P.T, P @ self.sigma @ P.T)


@dataclass(frozen=True)
class Heisenberg:
    f: Polynomial
    k: int

    @property
    def dim(self) -> int:
        return 2 * self.f.degree * self.k

    def sort_key(self):
        return (0, self.k) + self.f.sort_key()

    def to_json(self):
        from .serialize import scalar_to_json
        return {"type": "heisenberg", "poly": [scalar_to_json(c) for c in self.f.coeffs],
                "k": self.k}

    def __str__(self):
        return f"Heisenberg({self.f}, {self.k})"


@dataclass(frozen=True)
class KroneckerBlock:
    n: int

    @property
    def dim(self) -> int:
        return 2 * self.n

    def sort_key(self):
        return (1, self.n)

    def to_json(self):
        return {"type": "kronecker", "n": self.n}

    def __str__(self):
        return f"Kronecker({self.n})"


@dataclass(frozen=True)
class DieudonneBlock:
    n: int

    @property
    def dim(self) -> int:
        return 2 * self.n + 1

    def sort_key(self):
        return (2, self.n)

    def to_json(self):
        return {"type": "dieudonne", "n": self.n}

    def __str__(self):
        return f"Dieudonne({self.n})"


KroneckerInvariant = Union[Heisenberg, KroneckerBlock, DieudonneBlock]


def canonical_heisenberg(f: Polynomial, k: int) -> Heisenberg:
    """Normalise ``f`` against its mirror ``(-1)^d f(-x)``: both give the same block.

    The representative is the one whose roots lie in the right half-plane,
    i.e. whose first coefficient that changes under mirroring is negative
    (ordered by ``(re, im)`` over Q(i)).
    """
    f = f.monic()
    d = f.degree
    for j in range(d - 1, -1, -2):
        c = f.coeffs[j]
        if c:
            if scalar_key(c) > scalar_key(0):
                f = f.mirror()
            break
    return Heisenberg(f, k)


@dataclass(frozen=True)
class Classification:
    invariants: tuple
    trivial_dim: int

    def __post_init__(self):
        object.__setattr__(self, "invariants",
                           tuple(sorted(self.invariants, key=lambda b: b.sort_key())))

    @property
    def dim(self) -> int:
        return self.trivial_dim + sum(b.dim for b in self.invariants)

    def to_json(self):
        return {"invariants": [b.to_json() for b in self.invariants],
                "trivial_dim": self.trivial_dim}

    def __str__(self):
        parts = [str(b) for b in self.invariants]
        if self.trivial_dim:
            parts.append(f"trivial^{self.trivial_dim}")
        return " + ".join(parts) or "0"


# -- extraction ----------------------------------------------------------------

def extract_pair(L: LeibnizAlgebra) -> BilinearPair:
    """The (skew, symmetric) pair of ``phi`` with ``[x, y] = phi(x, y) z``.

    ``z`` is the echelon generator of ``[L, L]`` (first nonzero entry 1).
    """
    C = commutator_ideal(L)
    if C.dim != 1:
        raise CommutatorDimensionError(C.dim)
    z = C.vectors()[0]
    Phi = structure_matrix_1d(L, z)
    # [e_i, z] = (Phi z)_i z, so L is nilpotent iff Phi z = 0
    if any(Phi @ z):
        raise ClassificationError("algebra is not nilpotent")
    if any(Phi.T @ z):
        raise ClassificationError("commutator ideal is not central")
    return BilinearPair.from_form(Phi, z)


# -- pencil invariants ---------------------------------------------------------

def pencil_matrix(A: Matrix, B: Matrix) -> list[list[Polynomial]]:
    """Polynomial matrix ``x*A + B``."""
    field = join_fields(A.field, B.field)
    return [[Polynomial([B[i, j], A[i, j]], field) for j in range(A.ncols)]
            for i in range(A.nrows)]


def _strip_radical(alpha: Matrix, sigma: Matrix) -> tuple[Matrix, Matrix, int]:
    """Restrict both forms to a coordinate complement of their common radical."""
    n = alpha.nrows
    if n == 0:
        return alpha, sigma, 0
    stacked = Matrix(list(alpha.rows) + list(sigma.rows), join_fields(alpha.field, sigma.field))
    K = kernel(stacked)
    r = K.ncols
    if r == 0:
        return alpha, sigma, 0
    _, piv = K.T.rref()
    keep = [j for j in range(n) if j not in piv]
    return alpha.submatrix(keep, keep), sigma.submatrix(keep, keep), r


def minimal_indices(A: Matrix, B: Matrix, count: int) -> list[int]:
    """Column minimal indices of ``x*A + B`` (exactly ``count`` of them).

    Uses the kernel dimensions ``k_d`` of the block Toeplitz matrices that
    encode ``(xA + B) v(x) = 0`` for ``deg v <= d``: the number of indices
    ``<= d`` is ``k_d - k_{d-1}``.
    """
    if count == 0:
        return []
    m, n = A.shape
    field = join_fields(A.field, B.field)
    zero = to_field(0, field)
    found: list[int] = []
    prev_k = 0
    prev_le = 0
    d = 0
    while len(found) < count:
        rows = []
        for bi in range(d + 2):
            for i in range(m):
                row = []
                for bj in range(d + 1):
                    if bi == bj:
                        row.extend(B.row(i))
                    elif bi == bj + 1:
                        row.extend(A.row(i))
                    else:
                        row.extend([zero] * n)
                rows.append(row)
        k_d = (d + 1) * n - rank(Matrix(rows, field))
        le = k_d - prev_k
        found.extend([d] * (le - prev_le))
        prev_k, prev_le = k_d, le
        d += 1
        if d > m * n + 1:
            raise AssertionError("minimal index search did not terminate")
    return found


def _kron(A: Matrix, C: Matrix) -> Matrix:
    """Kronecker product ``A (x) C``."""
    field = join_fields(A.field, C.field)
    zero = to_field(0, field)
    d = C.nrows
    rows = []
    for i in range(A.nrows):
        for p in range(d):
            row = []
            for j in range(A.ncols):
                a = A[i, j]
                row.extend(a * C[p, q] if a else zero for q in range(d))
            rows.append(row)
    return Matrix(rows, field, ncols=A.ncols * d)


def _chain_counts(D: Matrix, E: Matrix, shift: int) -> list[int]:
    """``c_j``, the number of partial multiplicities ``>= j`` at one point of a pencil.

    ``D`` is the pencil evaluated at the point and ``E`` its derivative.
    The kernel of the ``j``-block lower triangular Toeplitz matrix
    ``[[D], [E, D], [0, E, D], ...]`` has dimension
    ``j * shift + sum(min(m_i, j))``, where ``shift`` counts the column
    minimal indices; successive differences give ``c_j``.
    """
    n = D.ncols
    field = join_fields(D.field, E.field)
    zero = to_field(0, field)
    counts: list[int] = []
    prev = 0
    j = 0
    while True:
        j += 1
        rows = []
        for bi in range(j):
            for i in range(D.nrows):
                row = []
                for bj in range(j):
                    if bi == bj:
                        row.extend(D.row(i))
                    elif bi == bj + 1:
                        row.extend(E.row(i))
                    else:
                        row.extend([zero] * n)
                rows.append(row)
        local = j * n - rank(Matrix(rows, field, ncols=j * n)) - j * shift
        c = local - prev
        if c == 0:
            return counts
        counts.append(c)
        prev = local


def _block_sizes(counts: list[int]) -> Counter:
    """``{k: number of blocks of size k}`` from ``c_j = #{blocks of size >= j}``."""
    out: Counter = Counter()
    for j, c in enumerate(counts, start=1):
        nxt = counts[j] if j < len(counts) else 0
        if c - nxt:
            out[j] = c - nxt
    return out


def normal_rank(A: Matrix, B: Matrix) -> int:
    """Rank of ``x*A + B`` over the rational function field."""
    # the rank drops only at roots of the last invariant factor, of degree <= size
    size = min(A.shape)
    return max(rank(A.scale(to_field(t, A.field)) + B) for t in range(size + 1))


def _candidate_polynomial(A: Matrix, B: Matrix, r: int) -> Polynomial:
    """A nonzero multiple of the product of the invariant factors of ``x*A + B``.

    ``det(U (xA + B) V)`` with integer ``U`` (r x m) and ``V`` (m x r) is, by
    Cauchy-Binet, a combination of r x r minors, each divisible by that
    product. It is recovered from ``r + 1`` values by interpolation.
    """
    field = join_fields(A.field, B.field)
    m, n = A.shape
    rng = random.Random(0)
    points = [to_field(t, field) for t in range(r + 1)]
    for _ in range(50):
        U = Matrix([[rng.randint(-3, 3) for _ in range(m)] for _ in range(r)], field, ncols=m)
        V = Matrix([[rng.randint(-3, 3) for _ in range(r)] for _ in range(n)], field, ncols=r)
        UAV, UBV = U @ A @ V, U @ B @ V
        poly = _interpolate(points, [det(UAV.scale(t) + UBV) for t in points], field)
        if poly.degree >= 0:
            return poly
    raise AssertionError("no nonsingular compression of the pencil found")


def _interpolate(xs, ys, field) -> Polynomial:
    total = Polynomial([], field)
    x = Polynomial.x(field)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if not yi:
            continue
        term = Polynomial([yi], field)
        for k, xk in enumerate(xs):
            if k != i:
                term = term * (x - Polynomial([xk], field)).scale(1 / (xi - xk))
        total = total + term
    return total


@dataclass(frozen=True)
class PencilInvariants:
    """Raw Kronecker data of ``x*alpha + sigma`` (before grouping into blocks)."""
    radical_dim: int
    column_indices: tuple
    row_indices: tuple
    finite: tuple   # ((g, k), multiplicity) pairs
    infinite: tuple  # (k, multiplicity) pairs


def _poly_at_matrix(h: Polynomial, N: Matrix) -> Matrix:
    field = join_fields(h.field, N.field)
    out = Matrix.zeros(N.nrows, N.ncols, field)
    I = Matrix.identity(N.nrows, field)
    for c in reversed(h.coeffs):
        out = out @ N + I.scale(c)
    return out


def _regular_divisors(A: Matrix, B: Matrix) -> tuple[Counter, Counter]:
    """Finite and infinite elementary divisors of a regular pencil ``x*A + B``.

    With ``P(t0)`` invertible, ``P(x) = P(t0) (I + (x - t0) N)`` for
    ``N = P(t0)^-1 A``, so the Jordan blocks of ``N`` at ``mu != 0`` are the
    divisors at ``x = t0 - 1/mu`` and those at ``mu = 0`` are the infinite
    ones. This avoids the larger Toeplitz systems of the general path.
    """
    m = A.nrows
    field = join_fields(A.field, B.field)
    t0 = next(to_field(t, field) for t in range(m + 1) if rank(A.scale(to_field(t, field)) + B) == m)
    N = (A.scale(t0) + B).inverse() @ A
    fin: Counter = Counter()
    inf: Counter = Counter()
    for h, _ in factor_irreducible(characteristic_polynomial(N)):
        d = h.degree
        H = _poly_at_matrix(h, N)
        counts, prev, power = [], 0, Matrix.identity(m, field)
        while True:
            power = power @ H
            local = (m - rank(power)) // d
            if local == prev:
                break
            counts.append(local - prev)
            prev = local
        sizes = _block_sizes(counts)
        if h == Polynomial.x(h.field):
            inf.update(sizes)
            continue
        # (t0 - x)^d h(1 / (t0 - x)), made monic
        u = Polynomial([t0, -1], field)
        g = Polynomial([], field)
        for i, c in enumerate(h.coeffs):
            g = g + (u ** (d - i)).scale(c)
        g = g.monic()
        for k, mult in sizes.items():
            fin[(g, k)] += mult
    return fin, inf


def pencil_invariants(pair: BilinearPair) -> PencilInvariants:
    """Kronecker data of ``x*alpha + sigma`` by local rank counts.

    Each irreducible ``g`` is probed at its root, realised over the base
    field by the companion matrix of ``g`` (kernel dimensions then scale
    by ``deg g``); infinite divisors are the divisors at ``y = 0`` of the
    reversed pencil ``alpha + y*sigma``.
    """
    alpha, sigma, r = _strip_radical(pair.alpha, pair.sigma)
    m = alpha.nrows
    if m == 0:
        return PencilInvariants(r, (), (), (), ())
    nr = normal_rank(alpha, sigma)
    deficiency = m - nr
    col = minimal_indices(alpha, sigma, deficiency)
    row = minimal_indices(alpha.T, sigma.T, deficiency)
    fin: Counter = Counter()
    if deficiency == 0:
        fin, inf = _regular_divisors(alpha, sigma)
        return PencilInvariants(
            r, (), (),
            tuple(sorted(fin.items(), key=lambda t: (t[0][1],) + t[0][0].sort_key())),
            tuple(sorted(inf.items())))
    if nr:
        for g, _ in factor_irreducible(_candidate_polynomial(alpha, sigma, nr)):
            d = g.degree
            C = companion_matrix(g, 1)
            I = Matrix.identity(d, C.field)
            counts = _chain_counts(_kron(alpha, C) + _kron(sigma, I), _kron(alpha, I),
                                   deficiency * d)
            for k, mult in _block_sizes(counts).items():
                if mult % d:
                    raise AssertionError(f"kernel dimension at a root of {g} is not a multiple of {d}")
                fin[(g, k)] = mult // d
    inf = _block_sizes(_chain_counts(alpha, sigma, deficiency))
    return PencilInvariants(
        r, tuple(sorted(col)), tuple(sorted(row)),
        tuple(sorted(fin.items(), key=lambda t: (t[0][1],) + t[0][0].sort_key())),
        tuple(sorted(inf.items())))


def kronecker_decompose(pair: BilinearPair) -> Classification:
    """Group the pencil invariants of ``pair`` into canonical blocks."""
    inv = pencil_invariants(pair)
    if inv.column_indices != inv.row_indices:
        raise AssertionError("row and column minimal indices differ for a (skew, sym) pencil")
    blocks: list = []
    trivial = inv.radical_dim
    for eps in inv.column_indices:
        if eps == 0:
            trivial += 1
        else:
            blocks.append(DieudonneBlock(eps))

    fin = Counter(dict(inv.finite))
    for (g, k), mult in sorted(fin.items(), key=lambda t: (t[0][1],) + t[0][0].sort_key()):
        gm = g.mirror()
        if gm == g:
            if mult % 2:
                raise UnsupportedPencilError(
                    f"elementary divisor ({g})^{k} occurs {mult} times; "
                    "a self-mirrored divisor must occur an even number of times")
            blocks.extend([canonical_heisenberg(g, k)] * (mult // 2))
            continue
        if fin.get((gm, k), 0) != mult:
            raise UnsupportedPencilError(
                f"elementary divisor ({g})^{k} occurs {mult} times but its mirror "
                f"({gm})^{k} occurs {fin.get((gm, k), 0)} times")
        block = canonical_heisenberg(g, k)
        if block.f == g:  # the mirror is counted together with g
            blocks.extend([block] * mult)

    for k, mult in inv.infinite:
        if mult % 2:
            raise UnsupportedPencilError(
                f"infinite elementary divisor of degree {k} occurs {mult} times; "
                "it must occur an even number of times")
        blocks.extend([KroneckerBlock(k)] * (mult // 2))

    result = Classification(tuple(blocks), trivial)
    if result.dim != pair.dim:
        raise AssertionError(f"dimension accounting failed: {result.dim} != {pair.dim}")
    return result


def classify(L: LeibnizAlgebra) -> Classification:
    return kronecker_decompose(extract_pair(L))


def congruent_pairs(p1: BilinearPair, p2: BilinearPair) -> bool:
    """Equality of the Kronecker block decompositions of two pairs."""
    if p1.dim != p2.dim:
        raise ValueError(f"pairs have different sizes {p1.dim} and {p2.dim}")
    return kronecker_decompose(p1) == kronecker_decompose(p2)


def isomorphic(L1: LeibnizAlgebra, L2: LeibnizAlgebra) -> bool:
    """Isomorphism test for nilpotent algebras with one-dimensional commutator ideal.

    Rescaling the generator ``z`` multiplies ``phi`` by a constant, which
    leaves the (monic) pencil invariants unchanged, so comparing the
    classifications already accounts for it.
    """
    if L1.dim != L2.dim:
        raise ValueError(f"algebras have different dimensions {L1.dim} and {L2.dim}")
    return classify(L1) == classify(L2)


def canonical_pair(c: Classification) -> BilinearPair:
    """A block-diagonal representative pair realising ``c``."""
    from .families import dieudonne_pair, heisenberg_pair, kronecker_pair

    field = "Q"
    alphas, sigmas = [], []
    for b in c.invariants:
        if isinstance(b, Heisenberg):
            field = join_fields(field, b.f.field)
            a, s = heisenberg_pair(companion_matrix(b.f, b.k))
        elif isinstance(b, KroneckerBlock):
            a, s = kronecker_pair(b.n)
        else:
            a, s = dieudonne_pair(b.n)
        alphas.append(a)
        sigmas.append(s)
    if c.trivial_dim:
        alphas.append(Matrix.zeros(c.trivial_dim))
        sigmas.append(Matrix.zeros(c.trivial_dim))
    alpha = Matrix.block_diag(*alphas).to_field(field)
    sigma = Matrix.block_diag(*sigmas).to_field(field)
    return BilinearPair(alpha, sigma)
