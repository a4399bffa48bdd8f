"""Root finder: reconstruction oracle, multiplicity handling, special poles.

The primary oracle is reconstruction: expanding the computed roots back into
monic coefficients must recover the family polynomial.  np.roots serves as an
independent second opinion at small degree.
"""

import math

import numpy as np
import pytest

from polarlegendre import (
    MultiplicityViolationError,
    RootFindConfig,
    RootSet,
    aberth_find,
    cluster_multiplicities,
    critical_points,
    find_polar_roots,
    polar_family_list,
    reconstruct_monic,
    sup_diff,
)

GRID = [2.0, 2.0j, 1.0 + 1.0j, 0.3, 2.0 * math.sqrt(3.0) / 3.0, 1.0, 0.0]


@pytest.mark.parametrize("zeta", GRID)
def test_reconstruction_oracle(zeta):
    fam = polar_family_list(30, zeta)
    for n in (1, 2, 5, 12, 21, 30):
        rs = find_polar_roots(n, zeta)
        assert rs.converged
        assert rs.total_multiplicity == n
        rebuilt = reconstruct_monic(rs)
        assert sup_diff(rebuilt, fam[n]) <= 1e-8 * max(1.0, fam[n].max_abs()), n


def test_reconstruction_oracle_high_degree():
    for zeta in (2.0, 2.0j):
        fam = polar_family_list(60, zeta)
        rs = find_polar_roots(60, zeta)
        assert rs.converged
        rebuilt = reconstruct_monic(rs)
        assert sup_diff(rebuilt, fam[60]) <= 1e-8 * max(1.0, fam[60].max_abs())


@pytest.mark.parametrize("zeta", [2.0, 2.0j, 0.3])
def test_against_np_roots(zeta):
    # conjugate pairs make sort order ulp-fragile; match by nearest distance
    for n in (2, 3, 5, 8):
        p = polar_family_list(n, zeta)[n]
        rs = find_polar_roots(n, zeta)
        mine = np.repeat(rs.roots, rs.multiplicities)
        theirs = np.roots(list(p.coeffs)[::-1])
        assert len(mine) == len(theirs)
        dist = np.abs(mine[:, None] - theirs[None, :])
        assert np.max(dist.min(axis=1)) < 1e-7
        assert np.max(dist.min(axis=0)) < 1e-7


def test_known_quadratic():
    rs = find_polar_roots(2, 2.0)
    assert np.allclose(rs.roots, [-1 - 1j * math.sqrt(2), -1 + 1j * math.sqrt(2)])
    assert list(rs.multiplicities) == [1, 1]
    assert max(rs.residuals) < 1e-12


def test_double_root_detected():
    # pole 2 sqrt(3)/3 makes P_2 = (z + sqrt(3)/3)^2
    zeta = 2.0 * math.sqrt(3.0) / 3.0
    rs = find_polar_roots(2, zeta)
    assert rs.converged
    assert list(rs.multiplicities) == [2]
    assert abs(rs.roots[0] - (-math.sqrt(3.0) / 3.0)) < 1e-8
    assert abs(rs.roots[0].imag) == 0.0  # merged onto the segment


def test_double_roots_only_on_segment():
    # multiplicity 2 must sit inside [-1, 1]; everything else stays simple
    for zeta in GRID:
        for n in (2, 6, 11, 17):
            rs = find_polar_roots(n, zeta)
            for r, m in zip(rs.roots, rs.multiplicities):
                assert m in (1, 2)
                if m == 2:
                    assert abs(r.imag) < 1e-6
                    assert abs(r.real) <= 1.0 + 1e-6


def test_roots_sorted_deterministically():
    rs = find_polar_roots(14, 1 + 1j)
    order = np.lexsort((rs.roots.imag, rs.roots.real))
    assert np.all(order == np.arange(len(rs.roots)))
    rs2 = find_polar_roots(14, 1 + 1j)
    assert np.array_equal(rs.roots, rs2.roots)


def test_special_pole_roots_are_nodes():
    # pole at 1: P_n = (z + 1) L_n' / n, zeros at -1 and the critical points
    for n in (5, 10, 15):
        rs = find_polar_roots(n, 1.0)
        expected = np.sort(np.concatenate([[-1.0], critical_points(n)]))
        assert rs.total_multiplicity == n
        assert np.max(np.abs(np.sort(rs.roots.real) - expected)) < 1e-9
        assert np.max(np.abs(rs.roots.imag)) < 1e-9


def test_critical_pole_roots_are_remaining_nodes():
    # pole at a critical point c: zeros are +-1 and the other critical points
    n = 7
    cps = critical_points(n)
    c = cps[2]
    rs = find_polar_roots(n, c)
    expected = np.sort(np.concatenate([[-1.0, 1.0], np.delete(cps, 2)]))
    assert np.max(np.abs(np.sort(rs.roots.real) - expected)) < 1e-8
    assert np.max(np.abs(rs.roots.imag)) < 1e-8


def test_aberth_on_plain_polynomial():
    # (z^2 + 1)(z - 3) via an evaluator, no polar structure involved
    def ev(z):
        return (z * z + 1.0) * (z - 3.0), 3.0 * z * z - 6.0 * z + 1.0

    rs = aberth_find(ev, 3, RootFindConfig(radius=4.0))
    assert rs.converged
    got = np.sort_complex(rs.roots)
    want = np.sort_complex(np.array([-1j, 1j, 3.0 + 0j]))
    assert np.max(np.abs(got - want)) < 1e-10


def test_cluster_rejects_triple():
    roots = np.array([0.0 + 0j, 1e-9 + 0j, -1e-9 + 0j])
    rs = RootSet(
        roots=roots,
        multiplicities=np.ones(3, dtype=int),
        residuals=np.zeros(3),
        iterations=1,
        converged=True,
    )
    with pytest.raises(MultiplicityViolationError):
        cluster_multiplicities(rs, 1e-6)


def test_cluster_keeps_off_segment_pairs_split():
    # close pair far from [-1, 1] is not a legal double root; leave both
    roots = np.array([2.0 + 1e-9j, 2.0 - 1e-9j])
    rs = RootSet(
        roots=roots,
        multiplicities=np.ones(2, dtype=int),
        residuals=np.zeros(2),
        iterations=1,
        converged=True,
    )
    out = cluster_multiplicities(rs, 1e-6)
    assert list(out.multiplicities) == [1, 1]
    assert len(out.roots) == 2
    assert out.notes


def test_nonconvergence_reported_not_raised():
    rs = find_polar_roots(25, 2.0, RootFindConfig(radius=3.0, max_iterations=2))
    assert not rs.converged
    assert len(rs.roots) >= 1
