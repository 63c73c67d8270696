"""Exact scalars: rationals (``Fraction``) and Gaussian rationals.

Two coefficient fields are supported, tagged ``"Q"`` and ``"Qi"``.
Rationals are plain :class:`fractions.Fraction` values; elements of Q(i)
are :class:`GaussianRational`.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Union

Q = "Q"
QI = "Qi"
FIELDS = (Q, QI)


class GaussianRational:
    """An element ``re + im*i`` of Q(i) with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> GaussianRational:
        g = object.__new__(cls)
        object.__setattr__(g, "re", re)
        object.__setattr__(g, "im", im)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(other):
        if type(other) is GaussianRational:
            return other
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return GaussianRational(other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational._make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational._make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational._make(a * c, b)
        return GaussianRational._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __neg__(self):
        return GaussianRational._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = GaussianRational(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> GaussianRational:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{_fmt_im(self.im)}"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{_fmt_im(abs(self.im))}"


def _fmt_im(v: Fraction) -> str:
    if v == 1:
        return "i"
    if v == -1:
        return "-i"
    return f"{v}i"


Scalar = Union[Fraction, GaussianRational]

_GAUSS_RE = re.compile(
    r"^\s*(?P<re>[+-]?\d+(?:/\d+)?)?\s*(?:(?P<sign>[+-])?\s*(?P<im>\d+(?:/\d+)?)?\s*i)?\s*$"
)


def parse_scalar(text: str) -> Scalar:
    """Parse ``"3"``, ``"-1/2"``, ``"i"``, ``"2-i"``, ``"1/2+3/4i"``."""
    text = text.strip().replace(" ", "")
    if "i" not in text:
        return Fraction(text)
    m = _GAUSS_RE.match(text)
    if m is None or text == "":
        raise ValueError(f"cannot parse scalar {text!r}")
    re_part = Fraction(m.group("re")) if m.group("re") else Fraction(0)
    im_part = Fraction(m.group("im")) if m.group("im") else Fraction(1)
    if m.group("sign") == "-":
        im_part = -im_part
    if m.group("re") and m.group("sign") is None:
        # "3i" parses as re="3" with no sign; reinterpret as pure imaginary
        return GaussianRational(0, re_part)
    return GaussianRational(re_part, im_part)


def field_of(value) -> str:
    return QI if isinstance(value, GaussianRational) else Q


def join_fields(*fields: str) -> str:
    return QI if QI in fields else Q


def to_field(value, field: str) -> Scalar:
    """Coerce ``value`` into the scalar type of ``field``."""
    t = type(value)
    if (t is Fraction and field == Q) or (t is GaussianRational and field == QI):
        return value
    if isinstance(value, str):
        value = parse_scalar(value)
    if field == Q:
        if isinstance(value, GaussianRational):
            if value.im != 0:
                raise ValueError(f"{value} is not rational")
            return value.re
        return Fraction(value)
    if field == QI:
        if isinstance(value, GaussianRational):
            return value
        return GaussianRational(value, 0)
    raise ValueError(f"unknown field tag {field!r}")


def zero(field: str) -> Scalar:
    return to_field(0, field)


def one(field: str) -> Scalar:
    return to_field(1, field)


def scalar_key(value) -> tuple:
    """Total order used for deterministic sorting of scalars."""
    if isinstance(value, GaussianRational):
        return (value.re, value.im)
    return (Fraction(value), Fraction(0))
