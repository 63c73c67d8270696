"""Dense univariate polynomials over Q or Q(i)."""
from __future__ import annotations

from functools import reduce
from math import comb
from typing import Iterable, Sequence

from .scalar import Q, QI, GaussianRational, field_of, join_fields, scalar_key, to_field


class Polynomial:
    """Polynomial with exact coefficients stored lowest degree first.

    Trailing zero coefficients are stripped, so the zero polynomial has an
    empty coefficient tuple and degree ``-1``.
    """

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Iterable = (), field: str | None = None):
        coeffs = list(coeffs)
        if field is None:
            field = join_fields(*(field_of(c) for c in coeffs)) if coeffs else Q
        cs = [to_field(c, field) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def x(cls, field: str = Q) -> Polynomial:
        return cls([0, 1], field)

    @classmethod
    def constant(cls, c, field: str | None = None) -> Polynomial:
        return cls([c], field)

    @classmethod
    def from_roots(cls, roots: Sequence, field: str | None = None) -> Polynomial:
        if field is None:
            field = join_fields(*(field_of(r) for r in roots)) if roots else Q
        p = cls([1], field)
        for r in roots:
            p = p * cls([-to_field(r, field), 1], field)
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else to_field(0, self.field)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _lift(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        return Polynomial([other], join_fields(self.field, field_of(other)))

    def __add__(self, other):
        other = self._lift(other)
        field = join_fields(self.field, other.field)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out, field)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        field = join_fields(self.field, other.field)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial((), field)
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Polynomial(out, field)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial([1], self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c) -> Polynomial:
        return Polynomial([c * a for a in self.coeffs],
                          join_fields(self.field, field_of(c)))

    def __divmod__(self, other: Polynomial):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        field = join_fields(self.field, other.field)
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = 1 / to_field(other.lead, field)
        if len(rem) - 1 < db:
            return Polynomial((), field), Polynomial(rem, field)
        quot = [to_field(0, field)] * (len(rem) - db)
        bc = other.coeffs
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if not c:
                continue
            q = c * inv_lead
            quot[i - db] = q
            for j in range(db + 1):
                rem[i - db + j] = rem[i - db + j] - q * bc[j]
        return Polynomial(quot, field), Polynomial(rem[:db], field)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: Polynomial) -> bool:
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        inv = 1 / self.lead
        return Polynomial([c * inv for c in self.coeffs], self.field)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.lead == 1

    def __call__(self, value):
        acc = to_field(0, join_fields(self.field, field_of(value)))
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def mirror(self) -> Polynomial:
        """Return ``(-1)**deg * p(-x)``, monic when ``p`` is monic."""
        d = self.degree
        return Polynomial([c if (d - j) % 2 == 0 else -c
                           for j, c in enumerate(self.coeffs)], self.field)

    def derivative(self) -> Polynomial:
        return Polynomial([j * c for j, c in enumerate(self.coeffs)][1:], self.field)

    def to_field(self, field: str) -> Polynomial:
        return Polynomial(self.coeffs, field)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if not self.coeffs:
            return other == 0
        return self.degree == 0 and self.coeffs[0] == other

    def __hash__(self):
        return hash(self.coeffs)

    def sort_key(self) -> tuple:
        return (self.degree, tuple(scalar_key(c) for c in self.coeffs))

    def __repr__(self):
        return f"Polynomial({str(self)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            if isinstance(c, GaussianRational) and c.re != 0 and c.im != 0:
                cs = f"({c})"
                terms.append(("+", cs if not mono else f"{cs}*{mono}"))
                continue
            neg = (c.im < 0 if c.re == 0 else c.re < 0) if isinstance(c, GaussianRational) else c < 0
            mag = -c if neg else c
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            terms.append(("-" if neg else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero() or b.is_zero():
        return Polynomial((), join_fields(a.field, b.field))
    return (a * b // poly_gcd(a, b)).monic()


def poly_product(polys: Iterable[Polynomial], field: str = Q) -> Polynomial:
    return reduce(lambda p, q: p * q, polys, Polynomial([1], field))


def binomial_power_linear(a, k: int, field: str | None = None) -> Polynomial:
    """``(x - a)**k`` via the binomial theorem (independent of repeated products)."""
    if field is None:
        field = field_of(a)
    a = to_field(a, field)
    return Polynomial([comb(k, j) * (-a) ** (k - j) for j in range(k + 1)], field)


def factor_irreducible(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Factor ``p`` into monic irreducibles over its own field.

    Returns ``[(g, multiplicity), ...]`` sorted by :meth:`Polynomial.sort_key`.
    Factorisation itself is delegated to sympy (over QQ, or over the
    Gaussian rationals for field ``"Qi"``).
    """
    import sympy

    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.degree == 0:
        return []
    x = sympy.Symbol("x")
    expr = sum(_to_sympy(c) * x**j for j, c in enumerate(p.coeffs))
    if p.field == QI:
        _, factors = sympy.factor_list(expr, x, gaussian=True)
    else:
        _, factors = sympy.factor_list(expr, x, domain="QQ")
    out = []
    for fac, mult in factors:
        coeffs = sympy.Poly(fac, x).all_coeffs()[::-1]
        g = Polynomial([_from_sympy(c, p.field) for c in coeffs], p.field).monic()
        if g.degree >= 1:
            out.append((g, int(mult)))
    out.sort(key=lambda t: t[0].sort_key())
    return out


def is_irreducible(p: Polynomial) -> bool:
    if p.degree < 1:
        return False
    f = factor_irreducible(p)
    return len(f) == 1 and f[0][1] == 1


def _to_sympy(c):
    import sympy

    if isinstance(c, GaussianRational):
        return sympy.Rational(c.re.numerator, c.re.denominator) + \
            sympy.I * sympy.Rational(c.im.numerator, c.im.denominator)
    return sympy.Rational(c.numerator, c.denominator)


def _from_sympy(c, field: str):
    import sympy
    from fractions import Fraction

    re_part, im_part = sympy.re(c), sympy.im(c)
    re_f = Fraction(int(re_part.p), int(re_part.q))
    im_f = Fraction(int(im_part.p), int(im_part.q))
    if field == Q:
        if im_f:
            raise ValueError("non-rational coefficient in rational factorisation")
        return re_f
    return GaussianRational(re_f, im_f)
