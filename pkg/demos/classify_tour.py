"""Build a few algebras, hide them behind a random basis, and classify them again.

Run with ``python3 demos/classify_tour.py``.
"""
import random
from fractions import Fraction

from nilleibniz import (change_basis, classify, dieudonne_algebra, extract_pair,
                        heisenberg_jordan, heisenberg_real_jordan, isomorphic, kronecker_algebra)
from nilleibniz.exactla import GaussianRational, Matrix


def scramble(L, rng):
    while True:
        P = Matrix([[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(L.dim)]
                    for _ in range(L.dim)])
        if P.rank() == L.dim:
            return change_basis(L, P)


rng = random.Random(1)
algebras = [
    heisenberg_jordan(Fraction(-1, 2), 2),
    heisenberg_real_jordan(GaussianRational(1, 2), 1),
    kronecker_algebra(3),
    dieudonne_algebra(2),
]

print("The pencil of l3 with a = 1/2:")
pair = extract_pair(heisenberg_jordan(Fraction(1, 2), 1))
print("  skew part", pair.alpha)
print("  symmetric part", pair.sigma)
print()

for L in algebras:
    M = scramble(L, rng)
    print(f"{L.name:<22} dim {L.dim:>2}   {classify(M)}")

print()
print("a and -a give the same algebra:",
      isomorphic(heisenberg_jordan(Fraction(3), 1), heisenberg_jordan(Fraction(-3), 1)))
print("a = 2 and a = 3 do not:",
      isomorphic(heisenberg_jordan(Fraction(2), 1), heisenberg_jordan(Fraction(3), 1)))
