"""Dense univariate polynomial arithmetic over two coefficient domains.

Coefficients are stored ascending by power.  A polynomial is *exact* when
every coefficient is an int, Fraction or GaussianRational.  Construction
drops trailing coefficients that are exactly zero; ``trim_dust`` additionally
drops trailing float dust below ``TRIM_REL`` times the largest magnitude.
The dust trim is deliberately not automatic: a monic polynomial whose low
coefficients reach 1e16 would otherwise lose its leading term.  Degrees stay
in the hundreds, so the quadratic-time schoolbook product is fine.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import GaussianRational, is_exact, scalar_abs, to_complex

TRIM_REL = 1e-14


def _exact_div_int(c, m: int):
    # division by a positive integer that must stay exact in the exact domain
    if isinstance(c, (int, Fraction)):
        return Fraction(c, m)
    return c / m


class Polynomial:
    """Immutable dense polynomial; the zero polynomial has degree -1."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    def trim_dust(self) -> "Polynomial":
        """Drop trailing coefficients below TRIM_REL times the largest magnitude."""
        coeffs = list(self.coeffs)
        cut = TRIM_REL * self.max_abs()
        while coeffs and scalar_abs(coeffs[-1]) < cut:
            coeffs.pop()
        return Polynomial(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.coeffs)

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __call__(self, z):
        acc = z * 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Polynomial(out)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Polynomial(out)
        return Polynomial([c * other for c in self.coeffs])

    def __rmul__(self, other):
        return self * other

    def times_x(self) -> "Polynomial":
        """Multiply by the variable (shift every power up by one)."""
        if self.is_zero:
            return self
        return Polynomial((0,) + self.coeffs)

    def derivative(self) -> "Polynomial":
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def antiderivative(self, pin=0) -> "Polynomial":
        """Antiderivative whose value at ``pin`` is zero."""
        raw = [0] + [_exact_div_int(c, k + 1) for k, c in enumerate(self.coeffs)]
        p = Polynomial(raw)
        const = -p(pin)
        raw[0] = const
        return Polynomial(raw)

    def divide_linear(self, r):
        """Synthetic division by (x - r): returns (quotient, remainder)."""
        if self.is_zero:
            raise ValueError("cannot divide the zero polynomial")
        cs = self.coeffs
        out = [0] * (len(cs) - 1)
        acc = cs[-1]
        for k in range(len(cs) - 2, -1, -1):
            out[k] = acc
            acc = cs[k] + r * acc
        return Polynomial(out), acc

    def integrate_symmetric(self):
        """Integral over [-1, 1]; odd powers contribute exactly zero."""
        total = 0
        for k in range(0, len(self.coeffs), 2):
            c = self.coeffs[k]
            if is_exact(c):
                total = total + c * Fraction(2, k + 1)
            else:
                total = total + c * (2.0 / (k + 1))
        return total

    def to_complex(self) -> "Polynomial":
        return Polynomial([to_complex(c) for c in self.coeffs])

    def to_exact(self) -> "Polynomial":
        out = []
        for c in self.coeffs:
            if is_exact(c):
                out.append(c)
            elif isinstance(c, complex):
                if c.imag == 0.0:
                    out.append(Fraction(c.real))
                else:
                    out.append(GaussianRational(Fraction(c.real), Fraction(c.imag)))
            else:
                out.append(Fraction(c))
        return Polynomial(out)

    def max_abs(self) -> float:
        return max((scalar_abs(c) for c in self.coeffs), default=0.0)

    def one_norm(self) -> float:
        return sum(scalar_abs(c) for c in self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"


def sup_diff(p: Polynomial, q: Polynomial) -> float:
    """Largest coefficient difference |p_k - q_k| as a float."""
    n = max(len(p.coeffs), len(q.coeffs))
    return max(
        (scalar_abs(p.coeff(k) - q.coeff(k)) for k in range(n)),
        default=0.0,
    )


def monic_from_roots(roots) -> Polynomial:
    """Expand prod (x - r) over the given roots in float arithmetic."""
    out = Polynomial([1.0 + 0.0j])
    for r in roots:
        out = out.times_x() - Polynomial([complex(r) * c for c in out.coeffs])
    return out
