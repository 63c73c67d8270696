"""Exact computations with two-step nilpotent Leibniz algebras.

Subpackages and modules:

* :mod:`nilleibniz.exactla` -- scalars over Q and Q(i), polynomials, matrices, Smith form
* :mod:`nilleibniz.algebra` -- structure tensors, identities, ideals, centers
* :mod:`nilleibniz.families` -- the named algebras and their isomorphism criteria
* :mod:`nilleibniz.pencil` -- classification by Kronecker invariants of a pencil
* :mod:`nilleibniz.rack` -- cocycle racks, conjugation racks, axiom checking
* :mod:`nilleibniz.cli` -- JSON command-line interface
"""
from .algebra import (LeibnizAlgebra, Subspace, bracket, center, change_basis,
                      check_left_leibniz, check_right_leibniz, commutator_ideal, direct_sum,
                      is_symmetric, leib_ideal, left_center, lower_central_series,
                      nilpotency_class, right_center)
from .families import (FamilySpec, classical_heisenberg, dieudonne_algebra, heisenberg_jordan,
                       heisenberg_leibniz, heisenberg_real_jordan, iso_l3, iso_l5,
                       kronecker_algebra, realified_complex_heisenberg)
from .pencil import (BilinearPair, Classification, DieudonneBlock, Heisenberg, KroneckerBlock,
                     classify, congruent_pairs, extract_pair, isomorphic, kronecker_decompose)
from .rack import (AffineModel, LocalSO2Model, MatrixConjModel, RackDomainError, RackReport,
                   cocycle_rack, conj_heisenberg, dieudonne_rack, heisenberg_rack, is_quandle,
                   kronecker_rack, rack_axioms_check, realified_heisenberg_rack, so2_local_rack,
                   tangent_algebra)

__version__ = "0.1.0"

__all__ = [
    "AffineModel", "BilinearPair", "Classification", "DieudonneBlock", "FamilySpec",
    "Heisenberg", "KroneckerBlock", "LeibnizAlgebra", "LocalSO2Model", "MatrixConjModel",
    "RackDomainError", "RackReport", "Subspace", "bracket", "center", "change_basis",
    "check_left_leibniz", "check_right_leibniz", "classical_heisenberg", "classify",
    "cocycle_rack", "commutator_ideal", "congruent_pairs", "conj_heisenberg",
    "dieudonne_algebra", "dieudonne_rack", "direct_sum", "extract_pair", "heisenberg_jordan",
    "heisenberg_leibniz", "heisenberg_rack", "heisenberg_real_jordan", "is_quandle",
    "is_symmetric", "iso_l3", "iso_l5", "isomorphic", "kronecker_algebra", "kronecker_decompose",
    "kronecker_rack", "leib_ideal", "left_center", "lower_central_series", "nilpotency_class",
    "rack_axioms_check", "realified_complex_heisenberg", "realified_heisenberg_rack",
    "right_center", "so2_local_rack", "tangent_algebra",
]
