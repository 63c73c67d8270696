"""Named two-step nilpotent Leibniz algebras.

Basis conventions:

* Heisenberg-type algebras (``heisenberg_leibniz`` and everything built on
  it, plus ``kronecker_algebra``): ``(e_1..e_n, f_1..f_n, h)``.
* ``dieudonne_algebra(n)``: ``(e_1..e_{2n+1}, h)``.
* realifications interleave each complex basis vector ``v`` with ``i*v``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Any

from .algebra import LeibnizAlgebra, algebra_from_form, change_basis, is_homomorphism
from .exactla import (GaussianRational, Matrix, Polynomial, companion_matrix, jordan_block,
                      realified_jordan, realify)
from .exactla.scalar import Q, QI, field_of, parse_scalar, to_field


def heisenberg_leibniz(A: Matrix, name: str | None = None) -> LeibnizAlgebra:
    """The algebra with ``[e_i, f_j] = (d_ij + a_ij) h`` and ``[f_j, e_i] = (-d_ij + a_ij) h``.

    Dimension ``2n + 1`` for an ``n x n`` matrix ``A``.
    """
    n = A.nrows
    if A.ncols != n:
        raise ValueError(f"A must be square, got {A.shape}")
    I = Matrix.identity(n, A.field)
    Z = Matrix.zeros(n, n, A.field)
    Phi = Matrix.block([[Z, I + A], [-I + A.T, Z]])
    return algebra_from_form(Phi, name or "heisenberg")


def classical_heisenberg(n: int) -> LeibnizAlgebra:
    if n < 1:
        raise ValueError("n must be positive")
    return heisenberg_leibniz(Matrix.zeros(n, n), f"h{2 * n + 1}")


def heisenberg_jordan(a, k: int) -> LeibnizAlgebra:
    """``heisenberg_leibniz`` of the k x k lower Jordan block with eigenvalue ``a``.

    The field is Q(i) exactly when ``a`` is a GaussianRational.
    """
    return heisenberg_leibniz(jordan_block(a, k), f"l{2 * k + 1}^J({a})")


def heisenberg_real_jordan(z, k: int) -> LeibnizAlgebra:
    """``heisenberg_leibniz`` of the realified Jordan block of ``z = alpha + i beta``.

    Requires ``beta != 0``; real eigenvalues belong to :func:`heisenberg_jordan`.
    """
    if not isinstance(z, GaussianRational):
        z = GaussianRational(z)
    if z.im == 0:
        raise ValueError("heisenberg_real_jordan needs a non-real z; use heisenberg_jordan")
    return heisenberg_leibniz(realified_jordan(z, k), f"l{4 * k + 1}^JR({z})")


def _shift_down(n: int) -> Matrix:
    """Companion matrix of x^n: ones on the subdiagonal."""
    return companion_matrix(Polynomial.x(), n) if n > 0 else Matrix.zeros(0)


def kronecker_pair(n: int) -> tuple[Matrix, Matrix]:
    """Canonical (skew, symmetric) pair of type two: A nilpotent of size n."""
    A = _shift_down(n)
    I = Matrix.identity(n)
    Z = Matrix.zeros(n)
    return Matrix.block([[Z, A], [-A.T, Z]]), Matrix.block([[Z, I], [I, Z]])


def dieudonne_pair(n: int) -> tuple[Matrix, Matrix]:
    """Canonical (skew, symmetric) pair of type three, size ``2n + 1``.

    J1, J2 are the (n+1) x n matrices of (x) -> (x, 0) and (x) -> (0, x).
    """
    J1 = Matrix([[1 if i == j else 0 for j in range(n)] for i in range(n + 1)], Q, ncols=n)
    J2 = Matrix([[1 if i == j + 1 else 0 for j in range(n)] for i in range(n + 1)], Q, ncols=n)
    Z1 = Matrix.zeros(n + 1, n + 1)
    Z2 = Matrix.zeros(n, n)
    return (Matrix.block([[Z1, J1], [-J1.T, Z2]]),
            Matrix.block([[Z1, J2], [J2.T, Z2]]))


def heisenberg_pair(A: Matrix) -> tuple[Matrix, Matrix]:
    """Canonical (skew, symmetric) pair of type one for the matrix ``A``."""
    n = A.nrows
    I = Matrix.identity(n, A.field)
    Z = Matrix.zeros(n, n, A.field)
    return Matrix.block([[Z, I], [-I, Z]]), Matrix.block([[Z, A], [A.T, Z]])


def kronecker_algebra(n: int) -> LeibnizAlgebra:
    """The Kronecker Leibniz algebra k_n, dimension ``2n + 1``."""
    if n < 1:
        raise ValueError("n must be positive")
    alpha, sigma = kronecker_pair(n)
    return algebra_from_form(alpha + sigma, f"k{n}")


def dieudonne_algebra(n: int) -> LeibnizAlgebra:
    """The Dieudonne Leibniz algebra d_n, dimension ``2n + 2``."""
    if n < 1:
        raise ValueError("n must be positive")
    alpha, sigma = dieudonne_pair(n)
    return algebra_from_form(alpha + sigma, f"d{n}")


def realify_algebra(L: LeibnizAlgebra, name: str | None = None) -> LeibnizAlgebra:
    """View a Q(i)-algebra as a Q-algebra of twice the dimension.

    Basis ``(v_1, i v_1, v_2, i v_2, ...)``.
    """
    n = L.dim
    units = (GaussianRational(1), GaussianRational(0, 1))
    br = {}
    for (i, j), v in L.brackets.items():
        for p, up in enumerate(units):
            for q, uq in enumerate(units):
                w = [Fraction(0)] * (2 * n)
                for k, c in enumerate(v):
                    c = to_field(c, QI) * up * uq
                    w[2 * k] = c.re
                    w[2 * k + 1] = c.im
                br[(2 * i + p, 2 * j + q)] = tuple(w)
    return LeibnizAlgebra(2 * n, br, Q, name or (f"realified {L.name}" if L.name else None))


def realified_complex_heisenberg(a, n: int) -> LeibnizAlgebra:
    """Realification of ``heisenberg_jordan(a, n)`` over Q(i); dimension ``4n + 2``."""
    a = to_field(a, QI)
    return realify_algebra(heisenberg_jordan(a, n), f"realified l{2 * n + 1}^J({a})")


# -- the explicit isomorphism criteria ----------------------------------------

L3_SWAP = Matrix([[0, 1, 0], [1, 0, 0], [0, 0, -1]])


def iso_l3(a, a_prime) -> tuple[bool, Matrix | None]:
    """Decide ``l_3^a ~ l_3^a'`` (true iff ``a' = +-a``) and return a witness map.

    The witness is the identity when ``a' = a`` and the swap
    ``x -> y', y -> x', z -> -z'`` when ``a' = -a``.
    """
    field = Q if field_of(a) == Q and field_of(a_prime) == Q else QI
    a, a_prime = to_field(a, field), to_field(a_prime, field)
    if a_prime == a:
        return True, Matrix.identity(3, field)
    if a_prime == -a:
        return True, L3_SWAP.to_field(field)
    return False, None


def _realified_parts(R: Matrix) -> GaussianRational:
    if R.shape != (2, 2) or R[0, 0] != R[1, 1] or R[0, 1] != -R[1, 0]:
        raise ValueError(f"{R} is not the realification of a complex number")
    return GaussianRational(R[0, 0], R[0, 1])


def iso_l5(R: Matrix, R_prime: Matrix) -> tuple[bool, Matrix | None]:
    """Decide ``l_5^R ~ l_5^R'`` for realified non-real Gaussian rationals.

    True iff ``R' in {R, -R, R^T, -R^T}``: besides the sign flip, complex
    conjugation of ``z`` (``R -> R^T``) is a similarity ``X R X^-1`` with
    ``X = diag(1, -1)`` and therefore also gives isomorphic algebras. The
    witness is a 5x5 map (column j = image of e_j) or ``None``.
    """
    z, w = _realified_parts(R), _realified_parts(R_prime)
    if z.im == 0 or w.im == 0:
        raise ValueError("l5^R needs non-real z")
    L1 = heisenberg_leibniz(R)
    L2 = heisenberg_leibniz(R_prime)
    for X in (Matrix.identity(2), Matrix.diag([1, -1])):
        B = X @ R @ X.inverse()
        for swap in (False, True):
            M = _heisenberg_similarity_map(X)
            target = B
            if swap:
                M = _heisenberg_swap(2) @ M
                target = -B.T
            if target == R_prime:
                assert is_homomorphism(L1, L2, M)
                return True, M
    return False, None


def _heisenberg_similarity_map(X: Matrix) -> Matrix:
    """Isomorphism l^A -> l^(X A X^-1): X^-T on the e-block, X on the f-block."""
    n = X.nrows
    Z = Matrix.zeros(n)
    return Matrix.block_diag(Matrix.block([[X.inverse().T, Z], [Z, X]]), Matrix.identity(1))


def _heisenberg_swap(n: int) -> Matrix:
    """e_i -> f_i', f_i -> e_i', h -> -h' : l^A -> l^(-A^T)."""
    I = Matrix.identity(n)
    Z = Matrix.zeros(n)
    return Matrix.block_diag(Matrix.block([[Z, I], [I, Z]]), Matrix([[-1]]))


# -- serialisable family specs ------------------------------------------------

FAMILY_NAMES = (
    "heisenberg", "heisenberg-jordan", "heisenberg-real-jordan", "kronecker",
    "dieudonne", "classical-heisenberg", "realified-complex-heisenberg",
)


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its parameters, e.g. ``FamilySpec("kronecker", {"n": 2})``."""
    variant: str
    params: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.variant not in FAMILY_NAMES:
            raise ValueError(f"unknown family {self.variant!r}; expected one of {FAMILY_NAMES}")

    def build(self) -> LeibnizAlgebra:
        p = self.params
        v = self.variant
        if v == "heisenberg":
            A = p["matrix"]
            if not isinstance(A, Matrix):
                A = Matrix([[parse_scalar(str(x)) for x in row] for row in A])
            return heisenberg_leibniz(A)
        if v == "heisenberg-jordan":
            return heisenberg_jordan(_scalar(p["a"]), int(p.get("k", 1)))
        if v == "heisenberg-real-jordan":
            return heisenberg_real_jordan(_scalar(p["a"]), int(p.get("k", 1)))
        if v == "kronecker":
            return kronecker_algebra(int(p["n"]))
        if v == "dieudonne":
            return dieudonne_algebra(int(p["n"]))
        if v == "classical-heisenberg":
            return classical_heisenberg(int(p["n"]))
        return realified_complex_heisenberg(_scalar(p["a"]), int(p.get("n", 1)))

    def to_json(self) -> dict[str, Any]:
        out = {"family": self.variant}
        for key, val in self.params.items():
            if isinstance(val, Matrix):
                val = [[str(x) for x in row] for row in val.rows]
            elif not isinstance(val, (int, list)):
                val = str(val)
            out[key] = val
        return out

    @classmethod
    def from_json(cls, doc: dict | str) -> FamilySpec:
        if isinstance(doc, str):
            doc = json.loads(doc)
        doc = dict(doc)
        return cls(doc.pop("family"), doc)


def _scalar(v):
    if isinstance(v, (Fraction, GaussianRational)):
        return v
    if isinstance(v, int):
        return Fraction(v)
    return parse_scalar(str(v))
