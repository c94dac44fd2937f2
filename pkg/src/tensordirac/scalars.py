"""Exact Gaussian rationals.

Every number the package touches is a :class:`ComplexRational`: a pair of
:class:`fractions.Fraction` holding the real and imaginary parts.  Floats are
rejected on purpose so that no rounding can slip in through coercion.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

__all__ = ["ComplexRational", "Scalar", "I", "ONE", "ZERO", "as_scalar", "parse_rational"]

Scalar = Union["ComplexRational", int, Fraction]


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into a Fraction; raise ValueError otherwise."""
    if not isinstance(text, str):
        raise ValueError(f"expected a rational string, got {text!r}")
    s = text.strip()
    if not s:
        raise ValueError("empty rational string")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


class ComplexRational:
    """Immutable complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    re: Fraction
    im: Fraction

    def __init__(self, re: int | Fraction | str = 0, im: int | Fraction | str = 0):
        object.__setattr__(self, "re", _to_fraction(re))
        object.__setattr__(self, "im", _to_fraction(im))

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> ComplexRational:
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("ComplexRational is immutable")

    def __reduce__(self):
        return (ComplexRational, (self.re, self.im))

    # -- text form ---------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> ComplexRational:
        """Parse the canonical text form.

        Accepts ``"3"``, ``"-3/4"``, ``"1/2+3/4*i"``, ``"1/2-3/4*i"``, as well as
        the shorthands ``"i"``, ``"-i"``, ``"2*i"`` and ``"2i"``.
        """
        if not isinstance(text, str):
            raise ValueError(f"expected a complex rational string, got {text!r}")
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty complex rational string")
        if not s.endswith("i"):
            return cls._make(parse_rational(s), Fraction(0))
        body = s[:-1]
        if body.endswith("*"):
            body = body[:-1]
        split = max(body.rfind("+"), body.rfind("-"))
        if split > 0 and body[split - 1] in "eE":
            raise ValueError(f"not a complex rational: {text!r}")
        if split <= 0:
            re_part, im_part = "", body
        else:
            re_part, im_part = body[:split], body[split:]
        if im_part in ("", "+"):
            im = Fraction(1)
        elif im_part == "-":
            im = Fraction(-1)
        else:
            im = parse_rational(im_part)
        re = parse_rational(re_part) if re_part else Fraction(0)
        return cls._make(re, im)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"

    def __repr__(self) -> str:
        return f"ComplexRational('{self}')"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return ComplexRational._make(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return ComplexRational._make(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, ComplexRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            return ComplexRational._make(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return ComplexRational._make(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero ComplexRational")
        return self * ComplexRational._make(o.re / n, -o.im / n)

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self) -> ComplexRational:
        return ComplexRational._make(-self.re, -self.im)

    def __pos__(self) -> ComplexRational:
        return self

    def conjugate(self) -> ComplexRational:
        return ComplexRational._make(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, exact."""
        return self.re * self.re + self.im * self.im

    # -- comparison --------------------------------------------------------

    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return self.im == 0


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational number")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot build an exact rational from {type(x).__name__}")


def _coerce(x) -> ComplexRational | None:
    if isinstance(x, ComplexRational):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return ComplexRational._make(Fraction(x), Fraction(0))
    return None


def as_scalar(x: Scalar | str) -> ComplexRational:
    """Coerce ints, Fractions and canonical strings to ComplexRational."""
    if isinstance(x, str):
        return ComplexRational.parse(x)
    c = _coerce(x)
    if c is None:
        raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")
    return c


ZERO = ComplexRational(0)
ONE = ComplexRational(1)
I = ComplexRational(0, 1)
