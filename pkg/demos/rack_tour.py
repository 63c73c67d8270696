"""Integrate l3 into its rack, compare with Heisenberg conjugation, and hit the SO(2) chart edge.

Run with ``python3 demos/rack_tour.py``.
"""
from fractions import Fraction

from nilleibniz import (cocycle_rack, conj_heisenberg, heisenberg_jordan, is_quandle,
                        rack_axioms_check, so2_local_rack, tangent_algebra)
from nilleibniz.rack import RackDomainError


def show(pt):
    return "(" + ", ".join(str(c) for c in pt) + ")"


L = heisenberg_jordan(Fraction(1, 2), 1)
R = cocycle_rack(L)
p, q = (Fraction(1), Fraction(2), Fraction(0)), (Fraction(3), Fraction(-1), Fraction(5))
print("l3 rack:", show(p), "|>", show(q), "=", show(R.operate(p, q)))

report = rack_axioms_check(R, "symbolic")
print("symbolic axioms:", "rack" if report.is_rack else "not a rack")
ok, w = is_quandle(R)
print("quandle:", ok, "witness", show(w), "maps to", show(R.operate(w, w)))
print("tangent algebra returns l3:", tangent_algebra(R) == L)
print()

G = conj_heisenberg(1)
print("a = 0 against matrix conjugation in H3:")
R0 = cocycle_rack(heisenberg_jordan(Fraction(0), 1))
for g, h in [((1, 2, 3), (4, 5, 6)), ((Fraction(1, 2), -1, 0), (2, 2, 2))]:
    print(" ", show(g), show(h), R0.operate(g, h) == G.operate(g, h))
print()

S = so2_local_rack(Fraction(1, 2))
print("SO(2) chart, a = 1/2:")
print("  near the unit:", show(S.operate((Fraction(1, 10), 0, Fraction(1, 2)),
                                         (0, Fraction(1, 10), Fraction(1, 2)))))
try:
    S.operate((Fraction(9, 10), 0, Fraction(1, 2)), (0, Fraction(9, 10), Fraction(1, 2)))
except RackDomainError as exc:
    print("  far from it:", exc)
