"""Polar Legendre polynomials: the monic family P_n attached to a pole.

For a pole zeta, P_n is the monic degree-n polynomial with

    (n + 1) L_n(z) = d/dz [ (z - zeta) P_n(z) ],

equivalently, via the fundamental identity used as ground truth everywhere,

    n (z - zeta) P_n(z) = (1 - zeta^2) L_n'(zeta) - (1 - z^2) L_n'(z).

The primitive Pi_{n+1} = (z - zeta) P_n is the (n+1)-st monic orthogonal
polynomial of the Sobolev product <p, q> = p(zeta) q(zeta) + int p' q'.

Three construction routes are kept deliberately separate so they can be
cross-checked: the fundamental identity, the integrated primitive, and the
three-term recurrence.  The recurrence inhomogeneous constant ships in two
variants ("corrected" and "paper") that differ by a factor of 2; the
corrected one is the default and is the one consistent with the fundamental
identity.  The verification module adjudicates the pair per degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exceptions import ConsistencyError, ExactInputError
from .legendre import (
    legendre_coeffs,
    legendre_coeffs_float,
    legendre_value_and_derivative,
    norm_sq,
    norms_sq,
)
from .polycore import Polynomial, sup_diff
from .scalars import as_exact_scalar, is_exact, scalar_abs, to_complex

NEAR_POLE_REL = 1e-8
DIVISION_REMAINDER_REL = 1e-10

RECURRENCE_VARIANTS = ("corrected", "paper")


def _prepare_pole(pole, mode: str):
    if mode == "exact":
        return as_exact_scalar(pole)
    if mode == "float":
        return to_complex(pole)
    raise ValueError(f"mode must be 'exact' or 'float', got {mode!r}")


def _legendre_poly(n: int, mode: str) -> Polynomial:
    return legendre_coeffs(n) if mode == "exact" else legendre_coeffs_float(n)


def _check_remainder(remainder, numerator: Polynomial, pole, what: str):
    if is_exact(remainder):
        if remainder == 0:
            return
        raise ConsistencyError(f"{what}: exact division left remainder {remainder}")
    scale = sum(
        scalar_abs(c) * max(1.0, abs(to_complex(pole))) ** k
        for k, c in enumerate(numerator.coeffs)
    )
    if scalar_abs(remainder) > DIVISION_REMAINDER_REL * max(1.0, scale):
        raise ConsistencyError(
            f"{what}: division remainder {scalar_abs(remainder):.3e} "
            f"exceeds tolerance at scale {scale:.3e}"
        )


def polar_fundamental(n: int, pole, mode: str = "float") -> Polynomial:
    """P_n from the fundamental identity; the ground-truth construction."""
    if n < 1:
        raise ValueError("n >= 1 required; P_0 is the constant 1")
    pole = _prepare_pole(pole, mode)
    lp = _legendre_poly(n, mode).derivative()
    _, dz = legendre_value_and_derivative(n, pole)
    head = (1 - pole * pole) * dz
    one_minus_x2 = Polynomial([1, 0, -1])
    numerator = Polynomial([head]) - one_minus_x2 * lp
    quotient, rem = numerator.divide_linear(pole)
    _check_remainder(rem, numerator, pole, f"polar_fundamental(n={n})")
    if mode == "exact":
        return Polynomial([c / Fraction(n) if isinstance(c, (int, Fraction)) else c / n
                           for c in quotient.coeffs])
    return Polynomial([c / n for c in quotient.coeffs])


def primitive_poly(n: int, pole, mode: str = "float") -> Polynomial:
    """Pi_{n+1} = (n+1) * antiderivative of L_n pinned to vanish at the pole."""
    if n < 0:
        raise ValueError("n >= 0 required")
    pole = _prepare_pole(pole, mode)
    return (n + 1) * _legendre_poly(n, mode).antiderivative(pin=pole)


def polar_integral(n: int, pole, mode: str = "float") -> Polynomial:
    """P_n built by dividing the primitive by (z - pole)."""
    pole = _prepare_pole(pole, mode)
    pi = primitive_poly(n, pole, mode)
    quotient, rem = pi.divide_linear(pole)
    _check_remainder(rem, pi, pole, f"polar_integral(n={n})")
    return quotient


def recurrence_coeff_a(n: int) -> Fraction:
    """a_n = ((1 - n^2)/n^2) * ||L_n||^2 / ||L_{n-1}||^2, exactly."""
    if n < 1:
        raise ValueError("n >= 1 required")
    return Fraction(1 - n * n, n * n) * (norm_sq(n) / norm_sq(n - 1))


@dataclass
class RecurrenceCoeffs:
    """Both inhomogeneous constants for one step; b_paper is exactly 2 * b_corrected."""

    n: int
    a: Fraction
    b_corrected: object
    b_paper: object


def recurrence_coeffs(n: int, pole, mode: str = "float") -> RecurrenceCoeffs:
    pole = _prepare_pole(pole, mode)
    _, dz = legendre_value_and_derivative(n, pole)
    base = (pole * pole - 1) * dz
    if mode == "exact":
        b1 = base / Fraction(n) if isinstance(base, (int, Fraction)) else base / n
    else:
        b1 = base / n
    return RecurrenceCoeffs(n=n, a=recurrence_coeff_a(n), b_corrected=b1, b_paper=2 * b1)


def polar_recurrence_family(
    n_max: int, pole, variant: str = "corrected", mode: str = "float"
) -> list[Polynomial]:
    """P_0..P_{n_max} by the three-term recurrence.

    The paper variant is only stated from the step n = 2 onward, so it seeds
    P_2 from the fundamental construction; the corrected variant starts its
    iteration at n = 1.
    """
    if variant not in RECURRENCE_VARIANTS:
        raise ValueError(f"variant must be one of {RECURRENCE_VARIANTS}")
    pole = _prepare_pole(pole, mode)
    one = Fraction(1) if mode == "exact" else 1.0 + 0.0j
    family = [Polynomial([one])]
    if n_max >= 1:
        family.append(Polynomial([pole * one, one]))
    start = 1
    if variant == "paper" and n_max >= 2:
        family.append(polar_fundamental(2, pole, mode))
        start = 2
    for k in range(start, n_max):
        rc = recurrence_coeffs(k, pole, mode)
        b = rc.b_corrected if variant == "corrected" else rc.b_paper
        a = rc.a if mode == "exact" else float(rc.a)
        nxt = family[k].times_x() + a * family[k - 1] + Polynomial([b])
        family.append(nxt)
    return family


def polar_recurrence(n: int, pole, variant: str = "corrected", mode: str = "float") -> Polynomial:
    return polar_recurrence_family(n, pole, variant, mode)[n]


@dataclass
class ConnectionCoeffs:
    """Expansion (x - pole) P_n = sum_k alpha_k P_k over the polar basis."""

    n: int
    alphas: tuple


def connection_coeffs(n: int, pole, mode: str = "float", family=None) -> ConnectionCoeffs:
    """Exact change of basis by back-substitution against P_0..P_{n+1}."""
    if n < 1:
        raise ValueError("n >= 1 required")
    pole = _prepare_pole(pole, mode)
    if family is None:
        family = polar_family_list(n + 1, pole, mode)
    target = family[n].times_x() - pole * family[n]
    alphas = [0] * (n + 2)
    for k in range(n + 1, -1, -1):
        alpha = target.coeff(k)
        alphas[k] = alpha
        if alpha != 0:
            target = target - alpha * family[k]
    if not target.is_zero:
        resid = target.max_abs()
        scale = max(1.0, family[n + 1].max_abs())
        if resid > 1e-9 * scale:
            raise ConsistencyError(
                f"connection_coeffs(n={n}): back-substitution residue {resid:.3e}"
            )
    return ConnectionCoeffs(n=n, alphas=tuple(alphas))


def polar_family_list(n_max: int, pole, mode: str = "float") -> list[Polynomial]:
    """P_0..P_{n_max} built by the fundamental route."""
    pole = _prepare_pole(pole, mode)
    one = Fraction(1) if mode == "exact" else 1.0 + 0.0j
    out = [Polynomial([one])]
    for k in range(1, n_max + 1):
        out.append(polar_fundamental(k, pole, mode))
    return out


def polar_eval_with_derivative(n: int, pole, z):
    """(P_n(z), P_n'(z)) without building coefficients.

    Works on scalars and numpy arrays.  Within NEAR_POLE_REL * (1 + |pole|)
    of the pole the removable singularity is patched with the limit values
    P_n(zeta) = (n+1) L_n(zeta) and P_n'(zeta) = (n+1) L_n'(zeta) / 2.
    """
    zeta = to_complex(pole)
    if n == 0:
        one = z * 0 + 1
        return one, z * 0
    ln_zeta, dl_zeta = legendre_value_and_derivative(n, zeta)
    head = (1 - zeta * zeta) * dl_zeta
    val_at_pole = (n + 1) * ln_zeta
    der_at_pole = 0.5 * (n + 1) * dl_zeta
    ln, dl = legendre_value_and_derivative(n, z)
    dz = z - zeta
    cutoff = NEAR_POLE_REL * (1.0 + abs(zeta))
    if isinstance(z, np.ndarray):
        near = np.abs(dz) < cutoff
        with np.errstate(divide="ignore", invalid="ignore"):
            val = (head - (1 - z * z) * dl) / (n * dz)
            der = ((n + 1) * ln - val) / dz
        return np.where(near, val_at_pole, val), np.where(near, der_at_pole, der)
    if abs(dz) < cutoff:
        return val_at_pole, der_at_pole
    val = (head - (1 - z * z) * dl) / (n * dz)
    der = ((n + 1) * ln - val) / dz
    return val, der


def polar_eval(n: int, pole, z):
    return polar_eval_with_derivative(n, pole, z)[0]


def polar_derivative_eval(n: int, pole, z):
    return polar_eval_with_derivative(n, pole, z)[1]


def polar_eval_exact(n: int, pole, z):
    """Exact P_n(z) for exact pole and point; limit value exactly at the pole."""
    pole = as_exact_scalar(pole)
    z = as_exact_scalar(z)
    ln_z, dl_z = legendre_value_and_derivative(n, z)
    if n == 0:
        return ln_z * 0 + 1
    if z == pole:
        return (n + 1) * ln_z
    _, dl_zeta = legendre_value_and_derivative(n, pole)
    num = (1 - pole * pole) * dl_zeta - (1 - z * z) * dl_z
    return num / (n * (z - pole))


def sobolev_inner(p: Polynomial, q: Polynomial, pole):
    """<p, q> = p(pole) q(pole) + integral over [-1,1] of p' q'."""
    boundary = p(pole) * q(pole)
    return boundary + (p.derivative() * q.derivative()).integrate_symmetric()


def defining_identity_residual(pn: Polynomial, n: int, pole, mode: str = "float") -> float:
    """Sup-norm of the coefficients of P_n + (x - pole) P_n' - (n+1) L_n."""
    pole = _prepare_pole(pole, mode)
    dp = pn.derivative()
    lhs = pn + dp.times_x() - pole * dp
    diff = lhs - (n + 1) * _legendre_poly(n, mode)
    if diff.is_zero:
        return 0.0
    return diff.max_abs()


class PolarFamily:
    """Cached family P_0..P_{n_max} for one pole, plus shared Legendre norms.

    The cache is built by the fundamental route.  ``mode`` controls the
    coefficient domain; evaluation helpers always work in float.
    """

    def __init__(self, pole, n_max: int, mode: str = "float"):
        if mode == "exact":
            pole = as_exact_scalar(pole)
        elif mode == "float":
            pole = to_complex(pole)
        else:
            raise ValueError(f"mode must be 'exact' or 'float', got {mode!r}")
        self.pole = pole
        self.n_max = n_max
        self.mode = mode
        self.polys = polar_family_list(n_max, pole, mode)
        self.norms_sq = norms_sq(n_max + 1)

    def poly(self, n: int) -> Polynomial:
        return self.polys[n]

    def primitive(self, n: int) -> Polynomial:
        """Pi_{n+1} = (z - pole) P_n from the cached P_n."""
        p = self.polys[n]
        return p.times_x() - self.pole * p

    def evaluator(self, n: int):
        """Callable z -> (P_n(z), P_n'(z)) suitable for the root finder."""
        pole = self.pole

        def ev(z):
            return polar_eval_with_derivative(n, pole, z)

        return ev
