"""Exact scalars: rationals and complex rationals.

Rationals are plain ``fractions.Fraction``.  Complex scalars are pairs of
Fractions forming the field Q(i).  Everything downstream (forms, polyhedra,
linear algebra) works over one of these two fields; no floating point is
used anywhere in the library.
"""

from __future__ import annotations

from fractions import Fraction

Rat = Fraction


def rat(x) -> Fraction:
    """Coerce ints, strings like ``"3/4"``, and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot build exact rational from {type(x).__name__}")


def rat_str(x: Fraction) -> str:
    """Serialize a rational as ``"p"`` or ``"p/q"`` with q > 0, lowest terms."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class CRat:
    """Complex rational a + b*i with exact Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    @staticmethod
    def of(x) -> "CRat":
        if isinstance(x, CRat):
            return x
        if isinstance(x, (int, Fraction)):
            return CRat(x)
        if isinstance(x, str):
            return CRat(Fraction(x))
        raise TypeError(f"cannot build complex rational from {type(x).__name__}")

    def __add__(self, other):
        o = CRat.of(other)
        return CRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = CRat.of(other)
        return CRat(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return CRat.of(other) - self

    def __mul__(self, other):
        o = CRat.of(other)
        return CRat(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = CRat.of(other)
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero complex rational")
        return CRat((self.re * o.re + self.im * o.im) / d,
                    (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, other):
        return CRat.of(other) / self

    def __neg__(self):
        return CRat(-self.re, -self.im)

    def conj(self):
        return CRat(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.re == other and self.im == 0
        if isinstance(other, CRat):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.im == 0:
            return rat_str(self.re)
        if self.re == 0:
            return f"{rat_str(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{rat_str(self.re)}{sign}{rat_str(abs(self.im))}i"


CI = CRat(0, 1)
CONE = CRat(1)
CZERO = CRat(0)


def crat_str(z: CRat) -> dict:
    return {"re": rat_str(z.re), "im": rat_str(z.im)}


def crat_parse(obj) -> CRat:
    if isinstance(obj, dict):
        return CRat(Fraction(obj.get("re", 0)), Fraction(obj.get("im", 0)))
    return CRat.of(obj)
