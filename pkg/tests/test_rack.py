"""Cocycle racks, the conjugation model, the SO(2) chart and the axiom checker."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import bracket_by_hand, family_instances, random_invertible
from nilleibniz import (LeibnizAlgebra, change_basis, classical_heisenberg, cocycle_rack,
                        conj_heisenberg, dieudonne_rack, heisenberg_jordan, heisenberg_rack,
                        is_quandle, kronecker_algebra, kronecker_rack, rack_axioms_check,
                        realified_complex_heisenberg, realified_heisenberg_rack, so2_local_rack,
                        tangent_algebra)
from nilleibniz.exactla import GaussianRational, Matrix
from nilleibniz.rack import (SEED_ENV, AffineModel, RackDomainError, RackError,
                             RackPreconditionError)

GI = GaussianRational
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
points3 = st.tuples(rationals, rationals, rationals)


def l3_rack(a):
    return cocycle_rack(heisenberg_jordan(a, 1))


# -- the cocycle rack ---------------------------------------------------------

@settings(max_examples=60)
@given(rationals, points3, points3)
def test_l3_rack_by_hand(a, p, q):
    (x, y, z), (x2, y2, z2) = p, q
    assert l3_rack(a).operate(p, q) == (x2, y2, z2 + (1 + a) * x * y2 + (-1 + a) * x2 * y)


@pytest.mark.parametrize("label,L", [(lab, L) for lab, L, _ in family_instances()[::3]])
def test_family_racks_act_by_the_bracket(label, L):
    # commutator ideal is the last coordinate(s), so the adapted basis is the standard one
    R = cocycle_rack(L)
    assert R.basis == Matrix.identity(L.dim, L.field)
    rng = random.Random(81)
    for _ in range(5):
        p, q = R.sample_point(rng), R.sample_point(rng)
        assert R.operate(p, q) == tuple(u + v for u, v in zip(q, bracket_by_hand(L, p, q)))


def test_named_constructors():
    R = heisenberg_rack(Matrix([[F(1, 2)]]))
    assert (R.m, R.omega, R.basis) == (2, l3_rack(F(1, 2)).omega, l3_rack(F(1, 2)).basis)
    assert kronecker_rack(2) == cocycle_rack(kronecker_algebra(2))
    assert dieudonne_rack(1).dim == 4 and dieudonne_rack(1).c == 1
    R = realified_heisenberg_rack(GI(0, 1), 1)
    assert (R.m, R.c, R.field) == (4, 2, "Q")


def test_abelian_rack_is_trivial():
    R = cocycle_rack(LeibnizAlgebra.abelian(3))
    assert R.c == 0 and R.m == 3
    assert R.operate((1, 2, 3), (4, 5, 6)) == (4, 5, 6)
    assert tangent_algebra(R) == LeibnizAlgebra.abelian(3)


def test_rack_preconditions():
    class3 = LeibnizAlgebra(4, {(0, 1): (0, 0, 1, 0), (1, 0): (0, 0, -1, 0),
                                (0, 2): (0, 0, 0, 1), (2, 0): (0, 0, 0, -1)})
    with pytest.raises(RackPreconditionError, match="class <= 2, got 3"):
        cocycle_rack(class3)
    with pytest.raises(RackPreconditionError, match="not nilpotent"):
        cocycle_rack(LeibnizAlgebra(1, {(0, 0): (1,)}))


def test_left_inverse():
    R = l3_rack(F(1, 3))
    rng = random.Random(82)
    for _ in range(10):
        p, q = R.sample_point(rng), R.sample_point(rng)
        assert R.left_inverse(p, R.operate(p, q)) == q


def test_gaussian_rack():
    R = l3_rack(GI(1, 1))
    assert R.field == "Qi"
    assert rack_axioms_check(R, "symbolic").is_rack
    assert rack_axioms_check(R, 10).is_rack
    ok, w = is_quandle(R)
    assert not ok and R.operate(w, w) != w


# -- tangent algebra ----------------------------------------------------------

@pytest.mark.parametrize("label,L", [(lab, L) for lab, L, _ in family_instances()[::4]])
def test_tangent_recovers_families(label, L):
    assert tangent_algebra(cocycle_rack(L)) == L


def test_tangent_recovers_scrambled_algebras():
    # after a basis change the commutator ideal is no longer a coordinate axis
    rng = random.Random(83)
    for L in (heisenberg_jordan(F(1, 2), 2), classical_heisenberg(2),
              realified_complex_heisenberg(GI(1, 1), 1)):
        M = change_basis(L, random_invertible(rng, L.dim))
        R = cocycle_rack(M)
        assert R.basis != Matrix.identity(M.dim)
        assert tangent_algebra(R) == M


def test_tangent_needs_affine_model():
    with pytest.raises(TypeError):
        tangent_algebra(conj_heisenberg(1))


# -- axioms -------------------------------------------------------------------

@pytest.mark.parametrize("label,L", [(lab, L) for lab, L, _ in family_instances()[::6]])
def test_sample_and_symbolic_modes_agree(label, L):
    R = cocycle_rack(L)
    sym, smp = rack_axioms_check(R, "symbolic"), rack_axioms_check(R, 15, seed=1)
    assert sym.is_rack and smp.is_rack
    assert sym.quandle.passed == smp.quandle.passed
    assert (sym.mode, smp.mode) == ("symbolic", "samples")


def _corrupted(a=F(1, 2)) -> AffineModel:
    """The l3 rack with the central increment shifted by the square of the central coordinate."""
    R = l3_rack(a)
    W = R.omega[0]

    def inc(x, c, y):
        return (x[0] * W[0, 1] * y[1] + x[1] * W[1, 0] * y[0] + c[0] ** 2,)

    return AffineModel(R.m, R.omega, R.field, R.basis, "corrupted", increment=inc)


def test_corrupted_increment_breaks_the_axioms():
    R = _corrupted()
    for report in (rack_axioms_check(R, "symbolic"), rack_axioms_check(R, 20, seed=3)):
        assert not report.is_rack
        assert not report.self_distributive.passed
        assert not report.pointed.passed
        # q -> p |> q only shifts q's central coordinate, so it stays bijective
        assert report.left_translation_bijective.passed
        x, y, z = report.self_distributive.witness
        assert R.operate(x, R.operate(y, z)) != R.operate(R.operate(x, y), R.operate(x, z))


@dataclass(frozen=True)
class SquaringModel:
    """``p |> q = q^2`` coordinatewise: self-distributive but not invertible."""
    dim: int = 2

    @property
    def unit(self):
        return (F(0),) * self.dim

    def operate(self, p, q):
        return tuple(v * v for v in q)

    def left_inverse(self, p, r):
        return tuple(r)

    def sample_point(self, rng):
        return tuple(F(rng.randint(2, 9)) for _ in range(self.dim))


def test_non_bijective_left_translation_is_reported():
    report = rack_axioms_check(SquaringModel(), 5, seed=0)
    assert not report.left_translation_bijective.passed
    assert report.left_translation_bijective.witness is not None


def test_explicit_sample_points():
    R = l3_rack(F(2))
    pts = [(1, 2, 3), (0, 0, 0), (F(1, 2), -1, 4)]
    assert rack_axioms_check(R, pts).is_rack
    with pytest.raises(RackError):
        rack_axioms_check(R, [(1, 2)])


def test_symbolic_mode_needs_affine_model():
    with pytest.raises(TypeError):
        rack_axioms_check(conj_heisenberg(1), "symbolic")


def test_report_json():
    doc = rack_axioms_check(l3_rack(F(1, 2)), "symbolic").to_json()
    assert doc["mode"] == "symbolic" and doc["rack"] is True
    assert doc["self_distributive"] == {"pass": True}
    assert doc["quandle"]["pass"] is False
    assert doc["quandle"]["witness"] == [[[1, 1], [1, 1], [0, 1]]]


def test_seed_from_environment(monkeypatch):
    R = _corrupted()
    monkeypatch.setenv(SEED_ENV, "17")
    from_env = rack_axioms_check(R, 20)
    explicit = rack_axioms_check(R, 20, seed=17)
    assert from_env.self_distributive.witness == explicit.self_distributive.witness
    other = rack_axioms_check(R, 20, seed=18)
    assert other.self_distributive.witness != explicit.self_distributive.witness


# -- quandles -----------------------------------------------------------------

@pytest.mark.parametrize("a", [F(1), F(-1, 2), F(3)])
def test_quandle_witness_for_l3(a):
    R = l3_rack(a)
    ok, w = is_quandle(R)
    assert not ok
    assert R.operate(w, w) != w
    assert is_quandle(l3_rack(F(0))) == (True, None)


def test_quandle_witness_from_off_diagonal_symmetric_part():
    # omega = [[0, 1], [1, 0]]: no diagonal term, the witness must be e1 + e2
    L = LeibnizAlgebra(3, {(0, 1): (0, 0, 1), (1, 0): (0, 0, 1)})
    R = cocycle_rack(L)
    ok, w = is_quandle(R)
    assert not ok and w == (1, 1, 0)
    assert R.operate(w, w) != w


def test_duck_typed_quandle_check_samples():
    ok, w = is_quandle(SquaringModel(), samples=5, seed=0)
    assert not ok and SquaringModel().operate(w, w) != w


# -- conjugation in the Heisenberg group --------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3])
def test_conjugation_model(n):
    G = conj_heisenberg(n)
    rng = random.Random(84 + n)
    for _ in range(10):
        p, q = G.sample_point(rng), G.sample_point(rng)
        assert G.from_matrix(G.to_matrix(p)) == p
        assert G.operate(p, q) == G.closed_form(p, q)
        assert G.left_inverse(p, G.operate(p, q)) == q
    report = rack_axioms_check(G, 10, seed=n)
    assert report.is_rack and report.quandle.passed
    assert is_quandle(G) == (True, None)


def test_conjugation_model_rejects_non_group_matrices():
    G = conj_heisenberg(1)
    with pytest.raises(RackError):
        G.from_matrix(Matrix([[1, 2, 3], [0, 2, 4], [0, 0, 1]]))
    with pytest.raises(ValueError):
        conj_heisenberg(0)


# -- the SO(2) chart ----------------------------------------------------------

def test_so2_operation_inside_the_chart():
    R = so2_local_rack(F(1, 2))
    p, q = (F(1, 10), F(1, 5), F(0)), (F(1, 5), F(1, 10), F(1, 2))
    z = F(1, 2) + F(3, 2) * F(1, 10) * F(1, 10) + F(-1, 2) * F(1, 5) * F(1, 5)
    assert R.operate(p, q) == (F(1, 5), F(1, 10), z)
    assert R.left_inverse(p, R.operate(p, q)) == q
    report = rack_axioms_check(R, 20, seed=5)
    assert report.is_rack and not report.quandle.passed


@pytest.mark.parametrize("p,q,coordinate", [
    ((F(1), 0, 0), (0, 0, 0), "left.x"),
    ((0, F(-1, 3), 0), (0, 0, 0), "left.y"),
    ((0, 0, 0), (0, 0, F(3, 2)), "right.z"),
    ((F(9, 10), 0, F(1, 2)), (0, F(9, 10), F(1, 2)), "result.z"),
])
def test_so2_domain_errors(p, q, coordinate):
    with pytest.raises(RackDomainError) as info:
        so2_local_rack(F(1, 2)).operate(p, q)
    assert info.value.coordinate == coordinate


def test_so2_left_inverse_can_leave_the_chart():
    with pytest.raises(RackDomainError) as info:
        so2_local_rack(F(1, 2)).left_inverse((F(1, 2), 0, 0), (0, F(1, 2), 0))
    assert info.value.coordinate == "result.z" and info.value.value < 0


def test_so2_bad_arity():
    with pytest.raises(RackError):
        so2_local_rack(0).operate((0, 0), (0, 0, 0))


def test_so2_quandle_verdict():
    assert is_quandle(so2_local_rack(0)) == (True, None)
    R = so2_local_rack(F(1, 3))
    ok, w = is_quandle(R)
    assert not ok and R.operate(w, w) != w


@settings(max_examples=40)
@given(st.fractions(min_value=-3, max_value=3, max_denominator=4), st.randoms())
def test_so2_samples_stay_in_the_chart(a, rng):
    R = so2_local_rack(a)
    x, y, z = (R.sample_point(rng) for _ in range(3))
    assert R.operate(x, R.operate(y, z)) == R.operate(R.operate(x, y), R.operate(x, z))
