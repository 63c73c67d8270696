"""Structure tensors, identities, ideals, centers and basis changes."""
from __future__ import annotations

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import bracket_by_hand, family_instances, random_invertible
from nilleibniz import (LeibnizAlgebra, Subspace, bracket, center, change_basis,
                        check_left_leibniz, check_right_leibniz, commutator_ideal, direct_sum,
                        heisenberg_jordan, is_symmetric, leib_ideal, left_center,
                        lower_central_series, nilpotency_class, right_center)
from nilleibniz.algebra import (DimensionMismatch, algebra_from_form, is_homomorphism,
                                structure_matrix_1d)
from nilleibniz.exactla import Matrix, SingularMatrixError

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=5)


def l3(a) -> LeibnizAlgebra:
    """[x, y] = (1 + a) z, [y, x] = (-1 + a) z, typed in directly."""
    return LeibnizAlgebra(3, {(0, 1): (0, 0, 1 + a), (1, 0): (0, 0, -1 + a)})


def span(*vectors, n=3):
    return Subspace(n, vectors)


COVEZ = LeibnizAlgebra(4, {(0, 0): (0, 0, 0, 1), (0, 1): (0, 0, 0, 1),
                           (1, 1): (0, 0, 0, 1), (2, 2): (0, 0, 0, 1)})
NON_LEIBNIZ = LeibnizAlgebra(2, {(0, 0): (0, 1), (1, 0): (1, 0)})


# -- bracket ------------------------------------------------------------------

@given(st.lists(rationals, min_size=3, max_size=3), st.lists(rationals, min_size=3, max_size=3),
       rationals)
def test_bracket_matches_the_tensor_sum(x, y, a):
    L = l3(a)
    assert bracket(L, x, y) == bracket_by_hand(L, x, y)


@given(rationals)
def test_bracket_of_zero_is_zero(a):
    assert bracket(l3(a), (0, 0, 0), (1, 2, 3)) == (0, 0, 0)


def test_l3_bracket_value():
    a = F(2, 3)
    assert bracket(heisenberg_jordan(a, 1), (1, 0, 0), (0, 1, 0)) == (0, 0, 1 + a)
    assert bracket(heisenberg_jordan(a, 1), (0, 1, 0), (1, 0, 0)) == (0, 0, -1 + a)


def test_four_dimensional_symmetric_example():
    assert bracket(COVEZ, (1, 0, 0, 0), (0, 1, 0, 0)) == (0, 0, 0, 1)
    assert bracket(COVEZ, (0, 1, 0, 0), (1, 0, 0, 0)) == (0, 0, 0, 0)
    assert is_symmetric(COVEZ)


def test_bracket_rejects_wrong_length():
    with pytest.raises(DimensionMismatch):
        bracket(l3(F(1)), (1, 0), (0, 1, 0))


# -- identities ---------------------------------------------------------------

def test_abelian_is_symmetric():
    assert is_symmetric(LeibnizAlgebra.abelian(4))


@pytest.mark.parametrize("label,L", [(lab, L) for lab, L, _ in family_instances()[::5]])
def test_family_members_are_symmetric(label, L):
    assert check_left_leibniz(L) is None and check_right_leibniz(L) is None


def test_perturbed_l3_still_passes():
    # raise c[1][2][3] by one, keep c[2][1][3]: still two-step nilpotent
    a = F(1, 3)
    L = LeibnizAlgebra(3, {(0, 1): (0, 0, 2 + a), (1, 0): (0, 0, -1 + a)})
    assert check_left_leibniz(L) is None


def test_perturbed_l3_with_nonzero_zx_fails():
    a = F(1, 3)
    L = LeibnizAlgebra(3, {(0, 1): (0, 0, 1 + a), (1, 0): (0, 0, -1 + a), (2, 0): (1, 0, 0)})
    v = check_left_leibniz(L)
    assert v is not None
    # by hand: i = z, j = x, k = y gives [z,[x,y]] = 0 against [[z,x],y] + [x,[z,y]] = (1+a) z
    i, j, k = v.triple
    e = [L.basis_vector(t) for t in range(3)]
    lhs = bracket(L, e[i], bracket(L, e[j], e[k]))
    rhs = tuple(p + q for p, q in zip(bracket(L, bracket(L, e[i], e[j]), e[k]),
                                      bracket(L, e[j], bracket(L, e[i], e[k]))))
    assert v.residual == tuple(p - q for p, q in zip(lhs, rhs)) != (0, 0, 0)


def test_left_identity_witness_by_hand():
    v = check_left_leibniz(NON_LEIBNIZ)
    assert v is not None and v.triple == (0, 0, 0)
    # [e1,[e1,e1]] = [e1,e2] = 0 ; [[e1,e1],e1] + [e1,[e1,e1]] = [e2,e1] = e1
    assert v.residual == (-1, 0)
    assert v.to_json() == {"triple": [1, 1, 1], "residual": [[-1, 1], [0, 1]]}
    assert not is_symmetric(NON_LEIBNIZ)


# -- ideals and centers -------------------------------------------------------

def test_subspace_is_canonical():
    assert span((1, 2, 0), (0, 1, 1)).basis == span((1, 3, 1), (2, 5, 1)).basis
    assert span((0, 0, 0)).dim == 0


@pytest.mark.parametrize("a", [F(0), F(1), F(-1, 2), F(3)])
def test_l3_commutator_is_z(a):
    assert commutator_ideal(l3(a)).basis == span((0, 0, 1)).basis


def test_abelian_subspaces():
    A = LeibnizAlgebra.abelian(3)
    assert commutator_ideal(A).dim == 0 and leib_ideal(A).dim == 0
    for c in (left_center, right_center, center):
        assert c(A).dim == 3


@given(rationals)
def test_leib_ideal_of_l3(a):
    L = l3(a)
    # [v, v] = 2 alpha beta a z for v = alpha x + beta y
    expected = 0 if a == 0 else 1
    assert leib_ideal(L).dim == expected
    assert bracket(L, (2, 3, 0), (2, 3, 0)) == (0, 0, 2 * 2 * 3 * a)


@pytest.mark.parametrize("a", [F(0), F(1, 2), F(2), F(-3)])
def test_l3_centers_are_z(a):
    L = l3(a)
    for c in (left_center, right_center, center):
        assert c(L).basis == span((0, 0, 1)).basis


def test_l3_left_center_grows_at_a_equals_minus_one():
    # a = -1: [x, y] = 0, so x is left-central
    assert left_center(l3(F(-1))).dim == 2
    assert center(l3(F(-1))).dim == 1


@pytest.mark.parametrize("label,L", [(lab, L) for lab, L, _ in family_instances()[::4]])
def test_commutator_inside_center(label, L):
    assert commutator_ideal(L) <= center(L)
    assert nilpotency_class(L) == 2


def test_lower_central_series_and_class():
    assert nilpotency_class(LeibnizAlgebra.abelian(2)) == 1
    assert nilpotency_class(l3(F(1, 2))) == 2
    series = lower_central_series(l3(F(1, 2)))
    assert [s.dim for s in series] == [3, 1, 0]
    # [e1, e1] = e1 never dies
    L = LeibnizAlgebra(1, {(0, 0): (1,)})
    assert nilpotency_class(L) is None
    assert lower_central_series(L)[-1].dim == 1


def test_class_three_algebra():
    L = LeibnizAlgebra(4, {(0, 1): (0, 0, 1, 0), (1, 0): (0, 0, -1, 0),
                           (0, 2): (0, 0, 0, 1), (2, 0): (0, 0, 0, -1)})
    assert [s.dim for s in lower_central_series(L)] == [4, 2, 1, 0]
    assert nilpotency_class(L) == 3


# -- constructions ------------------------------------------------------------

def test_change_basis_identity():
    L = heisenberg_jordan(F(1, 2), 2)
    assert change_basis(L, Matrix.identity(L.dim)) == L


def test_change_basis_against_hand_transport():
    rng = random.Random(21)
    for L in (heisenberg_jordan(F(1, 2), 2), COVEZ, NON_LEIBNIZ):
        P = random_invertible(rng, L.dim)
        M = change_basis(L, P)
        for i in range(L.dim):
            for j in range(L.dim):
                # new-basis coordinates w satisfy P^T w = [p_i, p_j]
                assert P.T @ M.bracket_basis(i, j) == bracket_by_hand(L, P.row(i), P.row(j))


def test_change_basis_is_an_isomorphism():
    rng = random.Random(22)
    L = heisenberg_jordan(F(-2), 2)
    P = random_invertible(rng, L.dim)
    # column j of the map is the old coordinates of new basis vector j
    assert is_homomorphism(change_basis(L, P), L, P.T)


def test_change_basis_preserves_identity_outcomes():
    rng = random.Random(23)
    for _ in range(20):
        P2 = random_invertible(rng, 2)
        assert check_left_leibniz(change_basis(NON_LEIBNIZ, P2)) is not None
        P4 = random_invertible(rng, 4)
        assert check_left_leibniz(change_basis(COVEZ, P4)) is None


def test_change_basis_rejects_singular_and_misshaped():
    L = l3(F(1))
    with pytest.raises(SingularMatrixError):
        change_basis(L, Matrix([[1, 0, 0], [2, 0, 0], [0, 0, 1]]))
    with pytest.raises(DimensionMismatch):
        change_basis(L, Matrix.identity(2))


def test_direct_sum_with_abelian():
    S = direct_sum(l3(F(1, 3)), LeibnizAlgebra.abelian(1))
    assert S.dim == 4
    assert center(S).dim == 2
    assert commutator_ideal(S).dim == 1


@settings(max_examples=25)
@given(st.lists(rationals, min_size=4, max_size=4))
def test_structure_matrix_and_form_round_trip(entries):
    Phi = Matrix([entries[:2], entries[2:]])
    L = algebra_from_form(Phi)
    if Phi.is_zero():
        assert commutator_ideal(L).dim == 0
        return
    assert structure_matrix_1d(L, (0, 0, 1)).submatrix(range(2), range(2)) == Phi
