"""Monic Legendre polynomials on [-1, 1] with weight 1.

Everything here follows from the three-term recurrence

    L_0 = 1,  L_1 = x,  L_{k+1} = x L_k - c_k L_{k-1},  c_k = k^2 / (4k^2 - 1),

whose constants are validated against a Gram-Schmidt oracle in the tests.
Values and derivatives are computed by running the recurrence at the point,
which is stable for all z we care about (the wanted solution dominates);
coefficients are built by the same recurrence in exact rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exceptions import ConvergenceError, DegreeBoundError
from .polycore import Polynomial
from .scalars import is_exact

DEFAULT_EXACT_DEGREE_BOUND = 64


def recurrence_constant(k: int) -> Fraction:
    """c_k = k^2 / (4 k^2 - 1), the monic Legendre recurrence constant."""
    if k < 1:
        raise ValueError("k >= 1 required")
    return Fraction(k * k, 4 * k * k - 1)


def norm_sq(n: int) -> Fraction:
    """Squared L2 norm of L_n over [-1, 1]: 2 * prod_{k<=n} c_k."""
    out = Fraction(2)
    for k in range(1, n + 1):
        out *= recurrence_constant(k)
    return out


def norms_sq(n_max: int) -> list[Fraction]:
    out = [Fraction(2)]
    for k in range(1, n_max + 1):
        out.append(out[-1] * recurrence_constant(k))
    return out


def _ck(k: int, exact: bool):
    c = recurrence_constant(k)
    return c if exact else float(c)


def legendre_value_and_derivative(n: int, z):
    """(L_n(z), L_n'(z)) by the value recurrence.

    ``z`` may be a python scalar, an exact scalar, or a numpy array; the
    result has matching type.  Exact inputs give exact outputs.
    """
    one = z * 0 + 1
    if n == 0:
        return one, z * 0
    exact = is_exact(z)
    lm, l = one, z * one
    dm, d = z * 0, one
    for k in range(1, n):
        c = _ck(k, exact)
        lm, l = l, z * l - c * lm
        dm, d = d, lm + z * d - c * dm
    return l, d


@dataclass
class LegendreTable:
    """Values and derivatives of L_0..L_n at one point, plus shared norms."""

    n_max: int
    point: object
    values: list
    derivatives: list
    norms_sq: list


def legendre_values(n_max: int, z) -> LegendreTable:
    one = z * 0 + 1
    values = [one]
    derivs = [z * 0]
    if n_max >= 1:
        values.append(z * one)
        derivs.append(one)
    exact = is_exact(z)
    for k in range(1, n_max):
        c = _ck(k, exact)
        values.append(z * values[k] - c * values[k - 1])
        derivs.append(values[k] + z * derivs[k] - c * derivs[k - 1])
    return LegendreTable(n_max, z, values, derivs, norms_sq(n_max))


def legendre_coeffs(n: int, bound: int = DEFAULT_EXACT_DEGREE_BOUND) -> Polynomial:
    """Exact rational coefficients of monic L_n."""
    if n > bound:
        raise DegreeBoundError(f"degree {n} above exact bound {bound}")
    lm = Polynomial([Fraction(1)])
    if n == 0:
        return lm
    l = Polynomial([Fraction(0), Fraction(1)])
    for k in range(1, n):
        c = recurrence_constant(k)
        lm, l = l, l.times_x() - c * lm
    return l


def legendre_coeffs_float(n: int) -> Polynomial:
    """Float coefficients of monic L_n by the same recurrence."""
    lm = Polynomial([1.0])
    if n == 0:
        return lm
    l = Polynomial([0.0, 1.0])
    for k in range(1, n):
        c = float(recurrence_constant(k))
        lm, l = l, l.times_x() - c * lm
    return l


def _newton_bracketed(func, lo, hi, flo, fhi, cap=80):
    # func(x) -> (f, f'); flo, fhi have opposite signs
    if not (flo < 0) != (fhi < 0):
        raise ConvergenceError(
            "bracket does not straddle a sign change",
            detail={"lo": lo, "hi": hi, "flo": flo, "fhi": fhi},
        )
    x = 0.5 * (lo + hi)
    for _ in range(cap):
        f, fp = func(x)
        if f == 0.0:
            return x
        if (f < 0) == (flo < 0):
            lo, flo = x, f
        else:
            hi, fhi = x, f
        x_new = x - f / fp if fp != 0.0 else 0.5 * (lo + hi)
        if not (lo < x_new < hi):
            x_new = 0.5 * (lo + hi)
        if abs(x_new - x) <= 1e-15 * (1.0 + abs(x_new)):
            f2, fp2 = func(x_new)
            if fp2 != 0.0:
                x_new -= f2 / fp2
            return x_new
        x = x_new
    raise ConvergenceError(
        "bracketed Newton did not converge",
        detail={"lo": lo, "hi": hi, "flo": flo, "fhi": fhi, "last": x},
    )


def legendre_zeros(n: int) -> np.ndarray:
    """All n zeros of L_n, ascending.  Bracketed Newton, cosine brackets.

    The k-th zero (by descending x) lies in (cos(2k pi/(2n+1)),
    cos((2k-1) pi/(2n+1))), which isolates it from its neighbours.
    """
    if n == 0:
        return np.array([])

    def f(x):
        return legendre_value_and_derivative(n, x)

    pos = []
    for k in range(1, n // 2 + 1):
        hi = math.cos((2 * k - 1) * math.pi / (2 * n + 1))
        lo = math.cos(2 * k * math.pi / (2 * n + 1))
        pos.append(_newton_bracketed(f, lo, hi, f(lo)[0], f(hi)[0]))
    pos = np.array(pos[::-1])
    if n % 2:
        return np.concatenate([-pos[::-1], [0.0], pos])
    return np.concatenate([-pos[::-1], pos])


def critical_points(n: int) -> np.ndarray:
    """The n-1 zeros of L_n', ascending; they interlace the zeros of L_n."""
    if n <= 1:
        return np.array([])
    zs = legendre_zeros(n)
    nn1 = float(n * (n + 1))

    def f(x):
        l, d = legendre_value_and_derivative(n, x)
        dd = (2.0 * x * d - nn1 * l) / (1.0 - x * x)
        return d, dd

    out = []
    for lo, hi in zip(zs[:-1], zs[1:]):
        out.append(_newton_bracketed(f, lo, hi, f(lo)[0], f(hi)[0]))
    out = np.array(out)
    # the set is symmetric about 0; average out one-sided rounding
    return 0.5 * (out - out[::-1])


@dataclass
class QuadratureRule:
    """Gauss-Legendre rule: exact for polynomials of degree <= 2m - 1."""

    nodes: np.ndarray
    weights: np.ndarray

    @property
    def npoints(self) -> int:
        return len(self.nodes)

    def integrate(self, func) -> complex:
        return sum(w * func(x) for x, w in zip(self.nodes, self.weights))


def gauss_rule(m: int) -> QuadratureRule:
    """m-point Gauss-Legendre rule with the monic Christoffel weights."""
    if m < 1:
        raise ValueError("m >= 1 required")
    nodes = legendre_zeros(m)
    nsq = float(norm_sq(m - 1))
    weights = np.empty(m)
    for i, x in enumerate(nodes):
        lprev, _ = legendre_value_and_derivative(m - 1, x)
        _, dl = legendre_value_and_derivative(m, x)
        weights[i] = nsq / (lprev * dl)
    weights = 0.5 * (weights + weights[::-1])
    return QuadratureRule(nodes, weights)


def quad_points_for_degree(d: int) -> int:
    """Node count used when verifying a degree-d integrand: exactness plus slack."""
    return (d + 1 + 1) // 2 + 2


def derivative_orthogonality_residual(n: int, k: int) -> Fraction:
    """|integral of L_{n+1}'(x) x^k (1-x^2) dx|, exactly; zero for 0 <= k <= n-1."""
    if not 0 <= k <= n - 1:
        raise ValueError("0 <= k <= n-1 required")
    dpoly = legendre_coeffs(n + 1).derivative()
    weight = Polynomial([Fraction(1), Fraction(0), Fraction(-1)])
    xk = Polynomial([Fraction(0)] * k + [Fraction(1)])
    return abs((dpoly * weight * xk).integrate_symmetric())


def antiderivative_identity_residual(n: int) -> Fraction:
    """Largest coefficient gap between int(L_{n-1}) pinned at 1 and its closed form.

    The closed form is (x^2 - 1) L_{n-1}'(x) / (n (n - 1)); both sides vanish
    at x = +-1.
    """
    if n < 2:
        raise ValueError("n >= 2 required")
    lp = legendre_coeffs(n - 1)
    lhs = lp.antiderivative(pin=Fraction(1))
    rhs = Polynomial([Fraction(-1), Fraction(0), Fraction(1)]) * lp.derivative()
    rhs = Fraction(1, n * (n - 1)) * rhs
    diff = lhs - rhs
    return max((abs(c) for c in diff.coeffs), default=Fraction(0))
