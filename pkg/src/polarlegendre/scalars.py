"""Scalar arithmetic helpers for the two coefficient domains.

The exact backend uses ``fractions.Fraction`` for real quantities and
``GaussianRational`` (rational real and imaginary parts) for complex rational
poles.  The float backend uses plain ``complex``/``float``.  Polynomial code
stays agnostic: it only needs ``+ - * /`` and equality, which all of these
types provide for each other.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exceptions import ExactInputError

RATIONAL_TYPES = (int, Fraction)


class GaussianRational:
    """Complex number with exact rational real and imaginary parts.

    Arithmetic with int/Fraction stays exact; arithmetic with float/complex
    degrades to ``complex``.  Division by a GaussianRational multiplies by the
    conjugate, so the result is again exact.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __abs__(self) -> float:
        return math.hypot(float(self.re), float(self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, RATIONAL_TYPES):
            return self.im == 0 and self.re == other
        if isinstance(other, (float, complex)):
            return complex(self) == complex(other)
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, RATIONAL_TYPES):
            return GaussianRational(self.re + other, self.im)
        if isinstance(other, (float, complex)):
            return complex(self) + other
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, RATIONAL_TYPES):
            return GaussianRational(self.re * other, self.im * other)
        if isinstance(other, (float, complex)):
            return complex(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, GaussianRational):
            n = other.norm_sq()
            return GaussianRational(
                (self.re * other.re + self.im * other.im) / n,
                (self.im * other.re - self.re * other.im) / n,
            )
        if isinstance(other, RATIONAL_TYPES):
            return GaussianRational(self.re / other, self.im / other)
        if isinstance(other, (float, complex)):
            return complex(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            return GaussianRational(other) / self
        if isinstance(other, (float, complex)):
            return other / complex(self)
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


EXACT_TYPES = (int, Fraction, GaussianRational)


def is_exact(x) -> bool:
    """True when ``x`` belongs to the exact coefficient domain."""
    return isinstance(x, EXACT_TYPES)


def to_complex(x) -> complex:
    if isinstance(x, GaussianRational):
        return complex(x)
    return complex(x)


def scalar_abs(x) -> float:
    """|x| as a float, for reporting and trim thresholds."""
    return abs(x) if not isinstance(x, Fraction) else abs(float(x))


def real_part(x):
    if isinstance(x, GaussianRational):
        return x.re
    if isinstance(x, complex):
        return x.real
    return x


def imag_part(x):
    if isinstance(x, GaussianRational):
        return x.im
    if isinstance(x, complex):
        return x.imag
    return 0


def as_exact_scalar(x):
    """Coerce ``x`` into the exact domain, rejecting floats.

    Floats are rejected rather than converted: a float argument usually means
    the caller is in float mode by accident, and silently converting 0.3 to
    its binary expansion would be a trap.
    """
    if isinstance(x, (int, Fraction, GaussianRational)):
        return x
    if isinstance(x, str):
        return parse_exact_pair(x)
    raise ExactInputError(
        f"exact mode needs a rational input (int, Fraction, GaussianRational), got {x!r}"
    )


def parse_exact_pair(text: str):
    """Parse 're,im' with rational components, e.g. '2,0', '1/2,-3/4', '0.3,0'."""
    parts = text.split(",")
    if len(parts) == 1:
        parts = [parts[0], "0"]
    if len(parts) != 2:
        raise ExactInputError(f"expected 're,im', got {text!r}")
    try:
        re, im = Fraction(parts[0].strip()), Fraction(parts[1].strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ExactInputError(f"not an exact rational pair: {text!r}") from exc
    if im == 0:
        return re
    return GaussianRational(re, im)


def parse_complex_pair(text: str) -> complex:
    """Parse 're,im' with float components."""
    parts = text.split(",")
    if len(parts) == 1:
        parts = [parts[0], "0"]
    if len(parts) != 2:
        raise ValueError(f"expected 're,im', got {text!r}")
    return complex(float(parts[0]), float(parts[1]))


def format_float(x: float) -> str:
    return f"{x:.17g}"


def format_pair(x) -> str:
    """Serialize a scalar as 're,im'; exact scalars keep their p/q form."""
    if isinstance(x, GaussianRational):
        return f"{x.re},{x.im}"
    if isinstance(x, RATIONAL_TYPES):
        return f"{x},0"
    z = complex(x)
    return f"{format_float(z.real)},{format_float(z.imag)}"
