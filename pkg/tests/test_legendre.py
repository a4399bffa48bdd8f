"""Monic Legendre layer against a Gram-Schmidt oracle and frozen values.

The oracle builds the monic orthogonal family on [-1, 1] from scratch by
exact rational Gram-Schmidt, so every recurrence constant and norm below is
cross-derived rather than assumed.
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from polarlegendre import (
    ConvergenceError,
    DegreeBoundError,
    Polynomial,
    critical_points,
    gauss_rule,
    legendre_coeffs,
    legendre_coeffs_float,
    legendre_value_and_derivative,
    legendre_values,
    legendre_zeros,
    norm_sq,
    norms_sq,
    recurrence_constant,
    sup_diff,
)
from polarlegendre.legendre import (
    antiderivative_identity_residual,
    derivative_orthogonality_residual,
    quad_points_for_degree,
)

ORACLE_N = 12


def gram_schmidt_monic(n_max: int) -> list[Polynomial]:
    """Exact monic orthogonalization of 1, x, x^2, ... on [-1, 1]."""
    basis: list[Polynomial] = []
    for k in range(n_max + 1):
        mono = Polynomial([Fraction(0)] * k + [Fraction(1)])
        for q in basis:
            coeff = (mono * q).integrate_symmetric() / (q * q).integrate_symmetric()
            mono = mono - coeff * q
        basis.append(mono)
    return basis


def test_family_matches_gram_schmidt_oracle():
    oracle = gram_schmidt_monic(ORACLE_N)
    for n, expected in enumerate(oracle):
        assert legendre_coeffs(n) == expected


def test_norms_match_oracle():
    oracle = gram_schmidt_monic(ORACLE_N)
    for n, q in enumerate(oracle):
        assert norm_sq(n) == (q * q).integrate_symmetric()
    assert norms_sq(ORACLE_N) == [norm_sq(n) for n in range(ORACLE_N + 1)]


def test_frozen_low_degree_values():
    assert legendre_coeffs(2) == Polynomial([Fraction(-1, 3), 0, 1])
    assert legendre_coeffs(3) == Polynomial([0, Fraction(-3, 5), 0, 1])
    assert [norm_sq(n) for n in range(4)] == [
        Fraction(2),
        Fraction(2, 3),
        Fraction(8, 45),
        Fraction(8, 175),
    ]
    assert recurrence_constant(3) == Fraction(9, 35)
    for k in range(1, 20):
        assert recurrence_constant(k) == Fraction(k * k, 4 * k * k - 1)


def test_exact_point_values():
    l2, _ = legendre_value_and_derivative(2, Fraction(2))
    l3, dl3 = legendre_value_and_derivative(3, Fraction(2))
    assert l2 == Fraction(11, 3)
    assert l3 == Fraction(34, 5)
    assert dl3 == Fraction(57, 5)


def test_value_recurrence_matches_coefficient_eval():
    rng = np.random.default_rng(7)
    zs = rng.uniform(-3, 3, 8) + 1j * rng.uniform(-3, 3, 8)
    for n in range(0, 25):
        p = legendre_coeffs_float(n)
        dp = p.derivative()
        for z in zs:
            v, d = legendre_value_and_derivative(n, complex(z))
            assert abs(v - p(z)) <= 1e-10 * max(1.0, abs(p(z)))
            assert abs(d - dp(z)) <= 1e-10 * max(1.0, abs(dp(z)))


def test_value_recurrence_on_arrays():
    z = np.linspace(-1, 1, 11).astype(complex)
    v, d = legendre_value_and_derivative(6, z)
    p = legendre_coeffs_float(6)
    assert np.allclose(v, p(z), atol=1e-14)
    assert np.allclose(d, p.derivative()(z), atol=1e-13)


def test_legendre_values_table():
    table = legendre_values(8, 0.5 + 0.25j)
    for n in range(9):
        v, d = legendre_value_and_derivative(n, 0.5 + 0.25j)
        assert table.values[n] == v
        assert table.derivatives[n] == d


def test_ode_exactly():
    # (1 - x^2) y'' - 2x y' + n(n+1) y = 0 for every member
    one_minus_x2 = Polynomial([Fraction(1), 0, Fraction(-1)])
    two_x = Polynomial([0, Fraction(2)])
    for n in range(ORACLE_N + 1):
        y = legendre_coeffs(n)
        resid = one_minus_x2 * y.derivative().derivative() - two_x * y.derivative() + (
            n * (n + 1)
        ) * y
        assert resid.is_zero


def test_degree_bound_guard():
    with pytest.raises(DegreeBoundError):
        legendre_coeffs(300)


def test_zeros_low_degree():
    z2 = legendre_zeros(2)
    assert np.allclose(z2, [-1 / math.sqrt(3), 1 / math.sqrt(3)], atol=1e-15)
    z3 = legendre_zeros(3)
    assert z3[1] == 0.0
    assert np.allclose(z3, [-math.sqrt(3 / 5), 0.0, math.sqrt(3 / 5)], atol=1e-15)


def test_zeros_are_roots_and_interlace():
    for n in range(1, 41):
        xs = legendre_zeros(n)
        assert len(xs) == n
        assert np.all(np.diff(xs) > 0)
        vals = np.array([legendre_value_and_derivative(n, x)[0] for x in xs])
        # scale by the local derivative: forward error of the Newton iterate
        ders = np.array([legendre_value_and_derivative(n, x)[1] for x in xs])
        assert np.all(np.abs(vals / ders) < 1e-14)
        if n > 1:
            inner = legendre_zeros(n - 1)
            assert np.all(xs[:-1] < inner) and np.all(inner < xs[1:])


def test_zeros_symmetry():
    for n in (5, 8, 13):
        xs = legendre_zeros(n)
        assert np.allclose(xs, -xs[::-1], atol=0)


def test_critical_points():
    assert np.allclose(critical_points(2), [0.0], atol=0)
    assert np.allclose(
        critical_points(3), [-1 / math.sqrt(5), 1 / math.sqrt(5)], atol=1e-15
    )
    for n in range(2, 30):
        cps = critical_points(n)
        assert len(cps) == n - 1
        assert np.allclose(cps, -cps[::-1], atol=0)
        for c in cps:
            _, d = legendre_value_and_derivative(n, c)
            assert abs(d) < 1e-13


def test_gauss_rule_small():
    r1 = gauss_rule(1)
    assert np.allclose(r1.nodes, [0.0], atol=0)
    assert np.allclose(r1.weights, [2.0], atol=1e-15)
    r2 = gauss_rule(2)
    assert np.allclose(r2.nodes, [-1 / math.sqrt(3), 1 / math.sqrt(3)], atol=1e-15)
    assert np.allclose(r2.weights, [1.0, 1.0], atol=1e-14)


def test_gauss_rule_exactness():
    # an m-point rule integrates monomials up to degree 2m - 1
    for m in (3, 6, 11):
        rule = gauss_rule(m)
        assert abs(sum(rule.weights) - 2.0) < 1e-13
        for k in range(2 * m):
            exact = 0.0 if k % 2 else 2.0 / (k + 1)
            assert abs(rule.integrate(lambda x: x**k) - exact) < 1e-13


def test_orthogonality_via_quadrature():
    # bound is the rounding floor of Horner evaluation, not the (far tinier)
    # norm product: values near the segment cancel down from O(1) coefficients
    n_top = 40
    rule = gauss_rule(n_top + 2)
    polys = {n: legendre_coeffs_float(n) for n in range(n_top + 1)}
    for n in range(n_top + 1):
        for m in range(n):
            a, b = polys[n], polys[m]
            q = rule.integrate(lambda x, a=a, b=b: a(x) * b(x))
            assert abs(q) <= 1e-13 * max(1.0, a.one_norm() * b.one_norm()), (n, m)


def test_float_coeffs_track_exact():
    for n in range(0, 40):
        pf = legendre_coeffs_float(n)
        if n <= 64:
            pe = legendre_coeffs(n).to_complex()
            assert sup_diff(pf, pe) <= 1e-15 * max(1.0, pf.max_abs())


def test_derivative_weighted_orthogonality():
    # (1 - x^2) L_{n+1}' is orthogonal to powers below n
    for n in range(1, 11):
        for k in range(n):
            assert derivative_orthogonality_residual(n, k) == 0


def test_antiderivative_identity():
    # the pinned antiderivative of L_{n-1} is a multiple of (x^2 - 1) L_{n-1}'
    for n in range(2, 13):
        assert antiderivative_identity_residual(n) == 0


def test_quad_points_for_degree_covers_exactness():
    for d in range(0, 30):
        m = quad_points_for_degree(d)
        assert 2 * m - 1 >= d
