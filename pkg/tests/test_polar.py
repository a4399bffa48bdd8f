"""The polar family P_n: symbolic anchors, route agreement, identities.

Ground truth ordering: the defining identity and the closed construction
outrank everything else, so the recurrence and the connection formulas are
tested against families built by the fundamental route.
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from polarlegendre import (
    ConsistencyError,
    GaussianRational,
    PolarFamily,
    Polynomial,
    connection_coeffs,
    defining_identity_residual,
    legendre_value_and_derivative,
    norm_sq,
    polar_eval,
    polar_eval_exact,
    polar_eval_with_derivative,
    polar_family_list,
    polar_fundamental,
    polar_integral,
    polar_recurrence,
    polar_recurrence_family,
    primitive_poly,
    recurrence_coeff_a,
    recurrence_coeffs,
    sobolev_inner,
    sup_diff,
)

EXACT_POLES = [Fraction(0), Fraction(1, 2), Fraction(2), Fraction(7, 5), Fraction(1)]
GAUSSIAN_POLES = [GaussianRational(0, 2), GaussianRational(1, 1)]
FLOAT_POLES = [0.0, 2.0, 0.3, 2.0j, 1.0 + 1.0j, 2.0 * math.sqrt(3.0) / 3.0]


def symbolic_p2(zeta):
    return Polynomial([zeta * zeta - 1, zeta, zeta * 0 + 1])


def symbolic_p3(zeta):
    one = zeta * 0 + 1
    return Polynomial(
        [zeta**3 - Fraction(6, 5) * zeta, zeta * zeta - Fraction(6, 5), zeta, one]
    )


def test_p1_is_z_plus_pole():
    for zeta in EXACT_POLES + GAUSSIAN_POLES:
        assert polar_fundamental(1, zeta, "exact") == Polynomial([zeta, 1])
    for zeta in FLOAT_POLES:
        p = polar_fundamental(1, zeta)
        assert sup_diff(p, Polynomial([complex(zeta), 1.0])) < 1e-15


@pytest.mark.parametrize("zeta", EXACT_POLES + GAUSSIAN_POLES)
def test_p2_p3_symbolic(zeta):
    assert polar_fundamental(2, zeta, "exact") == symbolic_p2(zeta)
    assert polar_fundamental(3, zeta, "exact") == symbolic_p3(zeta)


def test_p3_at_two_frozen():
    p = polar_fundamental(3, Fraction(2), "exact")
    assert p == Polynomial([Fraction(28, 5), Fraction(14, 5), 2, 1])


def test_primitive_at_two_frozen():
    # Pi_3 = (z - 2) P_2 = (z - 2)(z^2 + 2z + 3) = z^3 - z - 6
    pi3 = primitive_poly(2, Fraction(2), "exact")
    assert pi3 == Polynomial([-6, -1, 0, 1])
    p2 = polar_fundamental(2, Fraction(2), "exact")
    assert pi3 == p2.times_x() - Fraction(2) * p2


def test_primitive_vanishes_at_pole():
    for zeta in EXACT_POLES + GAUSSIAN_POLES:
        for n in range(0, 9):
            assert primitive_poly(n, zeta, "exact")(zeta) == 0


@pytest.mark.parametrize("zeta", EXACT_POLES + GAUSSIAN_POLES)
def test_three_routes_agree_exactly(zeta):
    fam = polar_family_list(12, zeta, "exact")
    rec = polar_recurrence_family(12, zeta, "corrected", "exact")
    for n in range(13):
        assert fam[n] == rec[n]
        if n >= 1:
            assert fam[n] == polar_integral(n, zeta, "exact")


@pytest.mark.parametrize("zeta", FLOAT_POLES)
def test_three_routes_agree_float(zeta):
    fam = polar_family_list(40, zeta)
    rec = polar_recurrence_family(40, zeta, "corrected")
    for n in range(41):
        scale = max(1.0, fam[n].max_abs())
        assert sup_diff(fam[n], rec[n]) <= 1e-10 * scale
        if n >= 1:
            assert sup_diff(fam[n], polar_integral(n, zeta)) <= 1e-10 * scale


def test_family_is_monic():
    for zeta in EXACT_POLES:
        for n, p in enumerate(polar_family_list(10, zeta, "exact")):
            assert p.degree == n
            assert p.coeffs[-1] == 1
    for zeta in FLOAT_POLES:
        for n, p in enumerate(polar_family_list(30, zeta)):
            assert p.degree == n
            assert p.coeffs[-1] == 1.0  # exactly, by construction


@pytest.mark.parametrize("zeta", EXACT_POLES + GAUSSIAN_POLES)
def test_defining_identity_exact(zeta):
    fam = polar_family_list(12, zeta, "exact")
    for n in range(13):
        assert defining_identity_residual(fam[n], n, zeta, "exact") == 0.0


def test_recurrence_coeff_a_values():
    assert recurrence_coeff_a(1) == 0
    assert recurrence_coeff_a(2) == Fraction(-1, 5)
    for n in range(1, 12):
        expected = Fraction(1 - n * n, n * n) * norm_sq(n) / norm_sq(n - 1)
        assert recurrence_coeff_a(n) == expected


def test_recurrence_coeffs_paper_is_twice_corrected():
    for zeta in EXACT_POLES + GAUSSIAN_POLES:
        for n in range(1, 10):
            rc = recurrence_coeffs(n, zeta, "exact")
            assert rc.b_paper == 2 * rc.b_corrected
            _, dl = legendre_value_and_derivative(n, zeta)
            assert rc.b_corrected * n == (zeta * zeta - 1) * dl


def test_corrected_variant_closes_the_recurrence():
    # R = P_{n+1} - x P_n - a_n P_{n-1} must be the constant b_corrected
    for zeta in (Fraction(2), GaussianRational(0, 2), Fraction(7, 5)):
        fam = polar_family_list(10, zeta, "exact")
        for n in range(1, 10):
            rc = recurrence_coeffs(n, zeta, "exact")
            resid = fam[n + 1] - fam[n].times_x() - rc.a * fam[n - 1]
            assert resid == Polynomial([rc.b_corrected])


def test_paper_variant_gap_is_exactly_b_corrected():
    # replacing b_corrected by b_paper changes one step by b_corrected itself
    for zeta in (Fraction(2), Fraction(7, 5), GaussianRational(1, 1)):
        fam = polar_family_list(10, zeta, "exact")
        for n in range(1, 10):
            rc = recurrence_coeffs(n, zeta, "exact")
            resid = fam[n + 1] - fam[n].times_x() - rc.a * fam[n - 1]
            gap = resid.coeff(0) - rc.b_paper
            assert gap == -rc.b_corrected


def test_paper_variant_family_diverges_from_degree_three():
    fam = polar_family_list(5, Fraction(2), "exact")
    paper = polar_recurrence_family(5, Fraction(2), "paper", "exact")
    assert paper[2] == fam[2]  # seeded
    assert paper[3] != fam[3]
    assert sup_diff(paper[3], fam[3]) == pytest.approx(6.0)


def test_recurrence_variant_validation():
    with pytest.raises(ValueError):
        polar_recurrence_family(5, Fraction(2), "banana", "exact")


@pytest.mark.parametrize("zeta", [Fraction(2), Fraction(7, 5), GaussianRational(0, 2)])
def test_connection_coeffs_structure(zeta):
    # (x - zeta) P_n = P_{n+1} - zeta P_n - a_n P_{n-1} - b_n P_0
    for n in range(1, 9):
        cc = connection_coeffs(n, zeta, "exact")
        alphas = cc.alphas
        assert len(alphas) == n + 2
        assert alphas[n + 1] == 1
        assert alphas[n] == -zeta
        rc = recurrence_coeffs(n, zeta, "exact")
        if n >= 2:
            assert alphas[n - 1] == -rc.a
        for k in range(1, n - 1):
            assert alphas[k] == 0
        _, dl = legendre_value_and_derivative(n, zeta)
        assert alphas[0] * n == (1 - zeta * zeta) * dl  # alpha_0 = -b_n


@pytest.mark.parametrize("zeta", EXACT_POLES[:4])
def test_theorem1_spot_values(zeta):
    # integral (x - zeta) P_n L_m over the six-case table, done longhand here
    # for n = 2 as an independent spot check of the verify module
    from polarlegendre import legendre_coeffs

    p2 = polar_fundamental(2, zeta, "exact")
    shifted = p2.times_x() - zeta * p2
    _, dl = legendre_value_and_derivative(2, zeta)
    head = (1 - zeta * zeta) * dl
    expected = {
        0: head,  # 2/n with n = 2
        1: -Fraction(3, 2) * norm_sq(2),
        2: Fraction(0),
        3: norm_sq(3),
        4: Fraction(0),
    }
    for m, want in expected.items():
        got = (shifted * legendre_coeffs(m)).integrate_symmetric()
        assert got == want, m


def test_theorem1_n2_zeta2_numbers():
    # n=2, zeta=2: head = (1-4) * L_2'(2) = -3 * 4 = -12
    zeta = Fraction(2)
    p2 = polar_fundamental(2, zeta, "exact")
    shifted = p2.times_x() - zeta * p2
    from polarlegendre import legendre_coeffs

    vals = [
        (shifted * legendre_coeffs(m)).integrate_symmetric() for m in range(4)
    ]
    assert vals == [Fraction(-12), Fraction(-4, 15), 0, Fraction(8, 175)]


def test_parity_in_the_pole():
    # flipping the pole mirrors the family: P_n(-zeta)(z) = (-1)^n P_n(zeta)(-z)
    for zeta in (Fraction(2), Fraction(1, 2)):
        for n in range(1, 8):
            plus = polar_fundamental(n, zeta, "exact")
            minus = polar_fundamental(n, -zeta, "exact")
            mirrored = Polynomial(
                [c if (n - k) % 2 == 0 else -c for k, c in enumerate(plus.coeffs)]
            )
            assert minus == mirrored


@pytest.mark.parametrize("zeta", [Fraction(2), Fraction(1, 2), GaussianRational(0, 2)])
def test_sobolev_orthogonality_exact(zeta):
    # <Pi_{n+1}, x^k> = 0 for k <= n under p(zeta)q(zeta) + int p'q'
    for n in range(0, 13):
        pi = primitive_poly(n, zeta, "exact")
        for k in range(n + 1):
            xk = Polynomial([Fraction(0)] * k + [Fraction(1)])
            assert sobolev_inner(pi, xk, zeta) == 0


def test_sobolev_diagonal_value():
    # <Pi_{n+1}, Pi_{n+1}> = (n+1)^2 ||L_n||^2 since Pi' = (n+1) L_n
    for n in range(0, 8):
        pi = primitive_poly(n, Fraction(2), "exact")
        assert sobolev_inner(pi, pi, Fraction(2)) == (n + 1) ** 2 * norm_sq(n)


def test_eval_matches_coefficients():
    rng = np.random.default_rng(11)
    zs = rng.uniform(-2, 2, 6) + 1j * rng.uniform(-2, 2, 6)
    for zeta in (2.0, 2.0j, 0.3):
        fam = polar_family_list(20, zeta)
        for n in (1, 5, 12, 20):
            p = fam[n]
            dp = p.derivative()
            for z in zs:
                v, d = polar_eval_with_derivative(n, zeta, complex(z))
                assert abs(v - p(z)) <= 1e-9 * max(1.0, abs(p(z)))
                assert abs(d - dp(z)) <= 1e-9 * max(1.0, abs(dp(z)))


def test_eval_array_matches_scalar():
    # numpy and CPython complex products round differently in the last ulp
    z = np.linspace(-2, 2, 9) + 0.5j
    v, d = polar_eval_with_derivative(7, 2.0j, z)
    for i, zi in enumerate(z):
        vs, ds = polar_eval_with_derivative(7, 2.0j, complex(zi))
        assert abs(v[i] - vs) <= 1e-14 * max(1.0, abs(vs))
        assert abs(d[i] - ds) <= 1e-14 * max(1.0, abs(ds))


def test_near_pole_limits():
    # P_n(zeta) = (n+1) L_n(zeta) and P_n'(zeta) = (n+1) L_n'(zeta) / 2
    for zeta in (2.0, 2.0j, 0.3):
        for n in (1, 4, 9):
            ln, dl = legendre_value_and_derivative(n, complex(zeta))
            v, d = polar_eval_with_derivative(n, zeta, complex(zeta))
            assert abs(v - (n + 1) * ln) < 1e-12 * max(1.0, abs(ln))
            assert abs(d - 0.5 * (n + 1) * dl) < 1e-12 * max(1.0, abs(dl))
            # just off the patch radius the formula agrees with the limit
            z = complex(zeta) + 1e-6
            v2, _ = polar_eval_with_derivative(n, zeta, z)
            assert abs(v2 - v) < 1e-4 * max(1.0, abs(v))


def test_polar_eval_exact_limit_and_generic():
    zeta = Fraction(2)
    fam = polar_family_list(6, zeta, "exact")
    for n in range(1, 7):
        ln, _ = legendre_value_and_derivative(n, zeta)
        assert polar_eval_exact(n, zeta, zeta) == (n + 1) * ln
        for z in (Fraction(0), Fraction(1, 3), Fraction(-3)):
            assert polar_eval_exact(n, zeta, z) == fam[n](z)


def test_gaussian_pole_tracks_float():
    for gr, fl in ((GaussianRational(0, 2), 2.0j), (GaussianRational(1, 1), 1 + 1j)):
        exact = polar_family_list(10, gr, "exact")
        floats = polar_family_list(10, fl)
        for n in range(11):
            assert sup_diff(exact[n].to_complex(), floats[n]) <= 1e-12 * max(
                1.0, floats[n].max_abs()
            )


def test_polar_family_cache():
    fam = PolarFamily(2.0j, 15)
    assert fam.poly(0).coeffs == (1.0 + 0.0j,)
    assert fam.poly(15).degree == 15
    assert len(fam.norms_sq) == 17
    prim = fam.primitive(4)
    assert prim.degree == 5
    assert abs(prim(2.0j)) < 1e-12
    ev = fam.evaluator(3)
    v, d = ev(np.array([0.5 + 0.0j]))
    assert abs(v[0] - fam.poly(3)(0.5)) < 1e-12


def test_polar_fundamental_rejects_bad_mode_and_degree():
    with pytest.raises(ValueError):
        polar_fundamental(0, Fraction(2), "exact")
    with pytest.raises(ValueError):
        polar_fundamental(2, Fraction(2), "decimal")


def test_exact_mode_rejects_float_pole():
    from polarlegendre import ExactInputError

    with pytest.raises(ExactInputError):
        polar_fundamental(2, 0.5, "exact")


def test_polar_recurrence_single():
    assert polar_recurrence(3, Fraction(2), "corrected", "exact") == polar_fundamental(
        3, Fraction(2), "exact"
    )
