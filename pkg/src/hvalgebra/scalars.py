"""Exact arithmetic over the Gaussian rationals Q(i).

Scalar is the coefficient field for the whole package: a complex number
whose real and imaginary parts are arbitrary-precision Fractions.  Every
operation is exact, so downstream zero tests are decisive; no module in
this package owns a tolerance.
"""

from __future__ import annotations

from fractions import Fraction


class Scalar:
    """An immutable Gaussian rational re + im*i in canonical reduced form.

    Fraction keeps each part reduced with a positive denominator, so equal
    values always have identical representations and zero is unique.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def coerce(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot interpret {value!r} as a scalar")

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(other.re - self.re, other.im - self.im)

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __mul__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return Scalar(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        d = self.re * self.re + self.im * self.im
        if not d:
            raise ZeroDivisionError("scalar inverse of zero")
        return Scalar(self.re / d, -self.im / d)

    def __truediv__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inv()

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    # -- equality / hashing ---------------------------------------------

    def __eq__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    # -- text -----------------------------------------------------------

    def __str__(self):
        if not self.im:
            return _frac_text(self.re)
        if not self.re:
            return _imag_text(self.im)
        sign = "+" if self.im > 0 else "-"
        return f"{_frac_text(self.re)}{sign}{_imag_text(abs(self.im))}"

    def __repr__(self):
        return f"Scalar({str(self)!r})"


def _frac_text(value: Fraction) -> str:
    return str(value)


def _imag_text(value: Fraction) -> str:
    if value == 1:
        return "i"
    if value == -1:
        return "-i"
    return f"{value}i"


def coefficient_text(value: Scalar):
    """Render a coefficient for use inside a term ``coef*key``.

    Returns (negate, text): ``negate`` pulls a leading minus out of the
    term, ``text`` is the magnitude (None when the magnitude is one and
    the factor should be omitted entirely).  Mixed complex coefficients
    are parenthesized and never split.
    """
    if not value.im:
        mag = abs(value.re)
        return value.re < 0, None if mag == 1 else _frac_text(mag)
    if not value.re:
        mag = abs(value.im)
        return value.im < 0, "i" if mag == 1 else f"{_frac_text(mag)}i"
    return False, f"({value})"


ZERO = Scalar(0)
ONE = Scalar(1)
