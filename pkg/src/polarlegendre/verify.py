"""Statement-by-statement verification producing a structured report.

Each check function returns report rows; a row records its residual and the
tolerance it was judged against, so pass always means residual <= tolerance
(exact-zero in exact mode, where the recorded tolerance is 0).  Rows where a
statement cannot distinguish the hypotheses (the recurrence constant when
b_n = 0) are marked inconclusive instead of passed.

Ground-truth ordering throughout: the defining identity and the fundamental
formula outrank integration, which outranks any closed-form constant under
test.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exceptions import ConvergenceError, RegionError
from .geometry import (
    ellipse_bound_checks,
    exterior_sqrt,
    joukowski_phi,
    lemniscate,
    lemniscate_residual,
    pole_geometry,
)
from .legendre import (
    critical_points,
    legendre_coeffs,
    legendre_coeffs_float,
    legendre_value_and_derivative,
    legendre_zeros,
    norm_sq,
)
from .polar import (
    defining_identity_residual,
    polar_eval,
    polar_eval_with_derivative,
    polar_family_list,
    polar_integral,
    polar_recurrence_family,
    primitive_poly,
    recurrence_coeffs,
    sobolev_inner,
)
from .polycore import Polynomial, sup_diff
from .roots import find_polar_roots
from .scalars import as_exact_scalar, format_pair, is_exact, scalar_abs, to_complex

TOL_THEOREM1 = 1e-11
TOL_RECURRENCE = 1e-10
TOL_ROUTES = 1e-10
TOL_IDENTITY = 1e-10
TOL_SOBOLEV = 1e-11
TOL_LEMNISCATE = 1e-8
TOL_DISK = 1e-8
TOL_ODD_ROOT = 1e-10
TOL_SPECIAL_POLE = 1e-9
TOL_EQUILIBRIUM = 1e-9
TOL_RATIO1 = 1e-6
TOL_RATIO2 = 1e-2
TOL_NTH_ROOT = 0.05
TREND_SLACK_T5 = 1.1
ADJUDICATION_FLOOR = 1e-12

# pole sweep used by the property suites; rational entries run exactly
STANDARD_POLE_GRID = (
    0.0,
    1.0,
    -1.0,
    2.0,
    2.0j,
    1.0 + 1.0j,
    2.0 * math.sqrt(3.0) / 3.0,
    0.3,
)
EXACT_POLE_GRID = (
    Fraction(0),
    Fraction(1, 2),
    Fraction(2),
    Fraction(7, 5),
)


@dataclass
class CheckRecord:
    check_id: str
    params: dict
    residual: float
    tolerance: float
    passed: bool
    inconclusive: bool = False
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "params": self.params,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "inconclusive": self.inconclusive,
            "note": self.note,
        }


class VerificationReport:
    """Deterministically sorted collection of check records."""

    def __init__(self, records=None):
        self.records: list[CheckRecord] = list(records or [])

    def add(self, record: CheckRecord):
        self.records.append(record)

    def extend(self, records):
        self.records.extend(records)

    def sorted_records(self) -> list[CheckRecord]:
        return sorted(
            self.records,
            key=lambda r: (r.check_id, json.dumps(r.params, sort_keys=True, default=str)),
        )

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.records if not r.inconclusive)

    def summary(self) -> dict:
        inconclusive = sum(1 for r in self.records if r.inconclusive)
        passed = sum(1 for r in self.records if r.passed and not r.inconclusive)
        return {
            "total": len(self.records),
            "passed": passed,
            "inconclusive": inconclusive,
        }

    def to_document(self, version: str, config: dict) -> dict:
        return {
            "version": version,
            "config": config,
            "checks": [r.to_dict() for r in self.sorted_records()],
            "summary": self.summary(),
        }


def _prepare(pole, mode):
    return as_exact_scalar(pole) if mode == "exact" else to_complex(pole)


def _legendre(m, mode):
    return legendre_coeffs(m) if mode == "exact" else legendre_coeffs_float(m)


def _value_row(check_id, params, value, expected, scale, tol, note="") -> CheckRecord:
    diff = value - expected
    if is_exact(diff):
        return CheckRecord(check_id, params, float(abs(diff)), 0.0, diff == 0, note=note)
    residual = scalar_abs(diff) / max(1.0, scale)
    return CheckRecord(check_id, params, residual, tol, residual <= tol, note=note)


def _expected_theorem1(n: int, m: int, head, mode: str):
    """Table value of I_{n,m} = integral (x - pole) P_n L_m.

    ``head`` is (1 - pole^2) L_n'(pole).  At n = 1 the table cases m = 0 and
    m = n - 1 coincide and their contributions add.
    """
    exact = mode == "exact"

    def norm(k):
        return norm_sq(k) if exact else float(norm_sq(k))

    note = ""
    if m == 0:
        v = head * Fraction(2, n) if exact else head * (2.0 / n)
        if n == 1:
            v = v - 2 * norm(1)
            note = "cases m=0 and m=n-1 coincide at n=1; their values add"
        return v, note
    if m < n - 1:
        return (Fraction(0) if exact else 0.0), note
    if m == n - 1:
        return -Fraction(n + 1, n) * norm(n) if exact else -(n + 1) / n * norm(n), note
    if m == n:
        return (Fraction(0) if exact else 0.0), note
    if m == n + 1:
        return norm(n + 1), note
    return (Fraction(0) if exact else 0.0), note


def check_theorem1(n: int, pole, mode: str = "float", tol: float | None = None) -> list[CheckRecord]:
    """Orthogonality table of (x - pole) P_n against L_m, plus the companion
    integrals of [P_n + (x - pole) P_n'] L_m."""
    if n < 1:
        raise ValueError("n >= 1 required")
    tol = TOL_THEOREM1 if tol is None else tol
    pole_s = _prepare(pole, mode)
    zeta = format_pair(pole_s)
    pn = polar_family_list(n, pole_s, mode)[n]
    shifted = pn.times_x() - pole_s * pn
    dp = pn.derivative()
    delta_poly = pn + dp.times_x() - pole_s * dp
    _, dl = legendre_value_and_derivative(n, pole_s)
    head = (1 - pole_s * pole_s) * dl
    rows = []
    for m in range(0, n + 3):
        lm = _legendre(m, mode)
        value = (shifted * lm).integrate_symmetric()
        expected, note = _expected_theorem1(n, m, head, mode)
        scale = 2.0 * shifted.one_norm() * lm.one_norm() + scalar_abs(expected)
        rows.append(
            _value_row(
                "theorem1.table",
                {"n": n, "m": m, "zeta": zeta, "mode": mode},
                value,
                expected,
                scale,
                tol,
                note,
            )
        )
    for m in range(0, n + 2):
        lm = _legendre(m, mode)
        value = (delta_poly * lm).integrate_symmetric()
        if m == n:
            expected = (n + 1) * norm_sq(n) if mode == "exact" else (n + 1) * float(norm_sq(n))
        else:
            expected = Fraction(0) if mode == "exact" else 0.0
        scale = 2.0 * delta_poly.one_norm() * lm.one_norm() + scalar_abs(expected)
        rows.append(
            _value_row(
                "theorem1.delta",
                {"n": n, "m": m, "zeta": zeta, "mode": mode},
                value,
                expected,
                scale,
                tol,
            )
        )
    return rows


def check_recurrence(n_max: int, pole, mode: str = "float", tol: float | None = None) -> list[CheckRecord]:
    """Adjudicate the three-term recurrence constant, step by step.

    For each step k the residual polynomial R = P_{k+1} - x P_k - a_k P_{k-1}
    (family built from the fundamental identity) must be the constant b_k.
    Three rows per step: R has no nonconstant part; the constant matches
    b_corrected; and the as-printed constant b_paper misses it by exactly
    b_corrected.  Steps where b_k = 0 cannot separate the variants and are
    inconclusive.
    """
    if n_max < 2:
        raise ValueError("n_max >= 2 required")
    tol = TOL_RECURRENCE if tol is None else tol
    exact = mode == "exact"
    pole_s = _prepare(pole, mode)
    zeta = format_pair(pole_s)
    family = polar_family_list(n_max, pole_s, mode)
    rows = []
    for k in range(1, n_max):
        rc = recurrence_coeffs(k, pole_s, mode)
        a = rc.a if exact else float(rc.a)
        resid_poly = family[k + 1] - family[k].times_x() - a * family[k - 1]
        r0 = resid_poly.coeff(0)
        scale = max(1.0, family[k + 1].max_abs())
        params = {"n": k, "zeta": zeta, "mode": mode}

        upper = [c for c in resid_poly.coeffs[1:]]
        if exact:
            shape_resid = max((float(abs(c)) for c in upper), default=0.0)
            shape_pass = all(c == 0 for c in upper)
            rows.append(CheckRecord("recurrence.shape", params, shape_resid, 0.0, shape_pass))
        else:
            shape_resid = max((scalar_abs(c) for c in upper), default=0.0) / scale
            rows.append(
                CheckRecord("recurrence.shape", params, shape_resid, tol, shape_resid <= tol)
            )

        corr_diff = r0 - rc.b_corrected
        rows.append(
            _value_row(
                "recurrence.corrected",
                dict(params, variant="corrected"),
                r0,
                rc.b_corrected,
                scale,
                tol,
            )
        )

        # the printed constant should miss by exactly b_corrected
        paper_diff = (r0 - rc.b_paper) + rc.b_corrected
        gap = scalar_abs(rc.b_corrected)
        printed_gap = scalar_abs(r0 - rc.b_paper)
        note = f"printed-constant gap {printed_gap:.6e}, predicted {gap:.6e}"
        if k == 1:
            note += "; step below the stated range of the printed relation"
        indistinct = (rc.b_corrected == 0) if exact else (gap <= ADJUDICATION_FLOOR * scale)
        if indistinct:
            rows.append(
                CheckRecord(
                    "recurrence.printed_gap",
                    dict(params, variant="paper"),
                    residual=scalar_abs(paper_diff) / (1.0 if exact else scale),
                    tolerance=0.0 if exact else tol,
                    passed=True,
                    inconclusive=True,
                    note="b_n = 0: variants coincide, nothing to adjudicate",
                )
            )
        elif exact:
            rows.append(
                CheckRecord(
                    "recurrence.printed_gap",
                    dict(params, variant="paper"),
                    residual=float(abs(paper_diff)),
                    tolerance=0.0,
                    passed=paper_diff == 0,
                    note=note,
                )
            )
        else:
            resid = scalar_abs(paper_diff) / scale
            rows.append(
                CheckRecord(
                    "recurrence.printed_gap",
                    dict(params, variant="paper"),
                    residual=resid,
                    tolerance=tol,
                    passed=resid <= tol,
                    note=note,
                )
            )
    return rows


def check_routes(n_max: int, pole, mode: str = "float", tol: float | None = None) -> list[CheckRecord]:
    """Sup-norm coefficient agreement of the three construction routes."""
    tol = TOL_ROUTES if tol is None else tol
    exact = mode == "exact"
    pole_s = _prepare(pole, mode)
    zeta = format_pair(pole_s)
    fam_f = polar_family_list(n_max, pole_s, mode)
    fam_r = polar_recurrence_family(n_max, pole_s, "corrected", mode)
    rows = []
    for k in range(n_max + 1):
        fam_i_k = polar_integral(k, pole_s, mode)
        d = max(sup_diff(fam_f[k], fam_i_k), sup_diff(fam_f[k], fam_r[k]))
        params = {"n": k, "zeta": zeta, "mode": mode}
        if exact:
            passed = fam_f[k] == fam_i_k and fam_f[k] == fam_r[k]
            rows.append(CheckRecord("routes.agreement", params, d, 0.0, passed))
        else:
            resid = d / max(1.0, fam_f[k].max_abs())
            rows.append(CheckRecord("routes.agreement", params, resid, tol, resid <= tol))
    return rows


def check_defining_identity(n_max: int, pole, mode: str = "float", tol: float | None = None) -> list[CheckRecord]:
    """P_n + (x - pole) P_n' - (n+1) L_n must vanish coefficient-wise."""
    tol = TOL_IDENTITY if tol is None else tol
    exact = mode == "exact"
    pole_s = _prepare(pole, mode)
    zeta = format_pair(pole_s)
    family = polar_family_list(n_max, pole_s, mode)
    rows = []
    for k in range(n_max + 1):
        resid = defining_identity_residual(family[k], k, pole_s, mode)
        params = {"n": k, "zeta": zeta, "mode": mode}
        if exact:
            rows.append(CheckRecord("defining_identity", params, resid, 0.0, resid == 0.0))
        else:
            scaled = resid / max(1.0, (k + 1) * family[k].max_abs())
            rows.append(CheckRecord("defining_identity", params, scaled, tol, scaled <= tol))
    return rows


def check_sobolev(n_max: int, pole, mode: str = "exact", tol: float | None = None) -> list[CheckRecord]:
    """The primitive of degree n+1 kills every monomial x^k, k <= n, under
    <p, q> = p(pole) q(pole) + integral p' q'."""
    tol = TOL_SOBOLEV if tol is None else tol
    exact = mode == "exact"
    pole_s = _prepare(pole, mode)
    zeta = format_pair(pole_s)
    one = Fraction(1) if exact else 1.0
    rows = []
    for n in range(n_max + 1):
        pi = primitive_poly(n, pole_s, mode)
        for k in range(n + 1):
            xk = Polynomial([one * 0] * k + [one])
            value = sobolev_inner(pi, xk, pole_s)
            params = {"n": n + 1, "k": k, "zeta": zeta, "mode": mode}
            if is_exact(value):
                rows.append(
                    CheckRecord("sobolev.orthogonality", params, float(abs(value)), 0.0, value == 0)
                )
            else:
                scale = max(1.0, 2.0 * pi.derivative().one_norm() * max(1, k)
                            + scalar_abs(pi(pole_s)) * (1.0 + abs(to_complex(pole_s))) ** k)
                resid = scalar_abs(value) / scale
                rows.append(
                    CheckRecord("sobolev.orthogonality", params, resid, tol, resid <= tol)
                )
    return rows


def _is_special_pole(n: int, zeta: complex) -> bool:
    if abs(zeta - 1.0) <= 1e-12 or abs(zeta + 1.0) <= 1e-12:
        return True
    l, d = legendre_value_and_derivative(n, zeta)
    dd = (2.0 * zeta * d - n * (n + 1) * l) / (1.0 - zeta * zeta)
    if dd == 0:
        return False
    # within Newton reach of a critical point
    return abs(d / dd) <= 1e-8 * (1.0 + abs(zeta))


def check_zero_geometry(n: int, pole, tol: float | None = None, rootset=None) -> list[CheckRecord]:
    """Root-location statements: multiplicity bound, lemniscate, disk bound,
    ellipse exclusion, odd-degree symmetry, and degenerate-pole root sets."""
    if n < 1:
        raise ValueError("n >= 1 required")
    zeta = to_complex(pole)
    geom = pole_geometry(zeta)
    rs = rootset if rootset is not None else find_polar_roots(n, zeta)
    params = {"n": n, "zeta": format_pair(zeta)}
    rows = [
        CheckRecord(
            "zeros.converged",
            params,
            0.0 if rs.converged else 1.0,
            0.0,
            rs.converged,
            note=f"{rs.iterations} iterations",
        ),
        CheckRecord(
            "zeros.count",
            params,
            float(abs(rs.total_multiplicity - n)),
            0.0,
            rs.total_multiplicity == n,
        ),
    ]
    max_mult = int(rs.multiplicities.max()) if len(rs.multiplicities) else 1
    doubles = [r for r, m in zip(rs.roots, rs.multiplicities) if m == 2]
    rows.append(
        CheckRecord(
            "zeros.multiplicity_bound",
            params,
            float(max(0, max_mult - 2)),
            0.0,
            max_mult <= 2,
            note=f"{len(doubles)} double root(s)" if doubles else "",
        )
    )

    lem = lemniscate(n, zeta)
    lem_resid = max(lemniscate_residual(lem, r) for r in rs.roots)
    lem_note = "degenerate level (pole is a node): absolute defect" if lem.radius < 1e-300 else ""
    lem_tol = TOL_LEMNISCATE if tol is None else tol
    rows.append(
        CheckRecord("zeros.lemniscate", params, lem_resid, lem_tol, lem_resid <= lem_tol, note=lem_note)
    )

    bounds = ellipse_bound_checks(zeta, rs.roots, rs.multiplicities)
    disk_excess = max(
        (abs(r) - bounds.disk_radius for r in rs.roots), default=0.0
    ) / (1.0 + geom.big_delta)
    disk_tol = TOL_DISK if tol is None else tol
    rows.append(
        CheckRecord(
            "zeros.disk_bound",
            params,
            max(0.0, disk_excess),
            disk_tol,
            max(0.0, disk_excess) <= disk_tol,
        )
    )

    if geom.small_delta > 1.0:
        alpha = bounds.alpha
        closest = min(abs(r + 1.0) + abs(r - 1.0) for r in rs.roots)
        margin = max(0.0, 2.0 * alpha - closest) / (2.0 * alpha)
        rows.append(
            CheckRecord(
                "zeros.ellipse_exclusion",
                dict(params, alpha=alpha),
                margin,
                1e-12,
                margin <= 1e-12,
            )
        )
        n_multiple = sum(1 for m in rs.multiplicities if m > 1)
        rows.append(
            CheckRecord(
                "zeros.simple_when_far",
                params,
                float(n_multiple),
                0.0,
                n_multiple == 0,
            )
        )

    if n % 2 == 1 and zeta.imag == 0.0 and zeta.real != 0.0:
        odd_tol = TOL_ODD_ROOT if tol is None else tol
        nearest = min(abs(r + zeta) for r in rs.roots) / (1.0 + abs(zeta))
        rows.append(
            CheckRecord("zeros.odd_symmetry", params, nearest, odd_tol, nearest <= odd_tol)
        )

    if _is_special_pole(n, zeta):
        cands = np.concatenate([[-1.0], critical_points(n), [1.0]]).astype(complex)
        sp_tol = TOL_SPECIAL_POLE if tol is None else tol
        worst = 0.0
        claimed = set()
        for r in rs.roots:
            dists = np.abs(cands - r)
            j = int(np.argmin(dists))
            worst = max(worst, float(dists[j]))
            claimed.add(j)
        left_out = [cands[j].real for j in range(len(cands)) if j not in claimed]
        rows.append(
            CheckRecord(
                "zeros.special_pole",
                params,
                worst,
                sp_tol,
                worst <= sp_tol,
                note=f"candidate point(s) not used: {left_out}",
            )
        )
    return rows


def check_equilibrium(n: int, pole, tol: float | None = None) -> list[CheckRecord]:
    """At each zero x of L_n the field 1/(x - pole) + P_n'(x)/P_n(x) vanishes;
    the residual is scaled by |x - pole|."""
    if n < 1:
        raise ValueError("n >= 1 required")
    tol = TOL_EQUILIBRIUM if tol is None else tol
    zeta = to_complex(pole)
    xs = legendre_zeros(n).astype(complex)
    v, d = polar_eval_with_derivative(n, zeta, xs)
    vmax = float(np.abs(v).max()) if len(xs) else 1.0
    collide = np.abs(v) < 1e-12 * max(1.0, vmax)
    dz = xs - zeta
    with np.errstate(divide="ignore", invalid="ignore"):
        resid = np.abs(1.0 / dz + d / v) * np.abs(dz)
    resid = resid[~collide]
    value = float(resid.max()) if len(resid) else 0.0
    note = f"{int(collide.sum())} node(s) skipped: polar zero collision" if collide.any() else ""
    params = {"n": n, "zeta": format_pair(zeta)}
    row = CheckRecord("equilibrium.residual", params, value, tol, value <= tol, note=note)
    if collide.all():
        row.inconclusive = True
        row.note = "all nodes collide with polar zeros"
    return [row]


def check_theorem5(pole, n_list, rootsets=None) -> list[CheckRecord]:
    """Root moduli under the exterior map against the accumulation level.

    deviation(n) = max over roots of |ln(|phi(root)| / rho)|; the statement
    gives no rate, so the contract is finite deviation, non-increasing within
    a 10% slack along n_list.
    """
    zeta = to_complex(pole)
    geom = pole_geometry(zeta)
    if geom.small_delta <= 1.0:
        raise RegionError(
            f"requires the pole farther than 1 from [-1, 1]: small_delta = {geom.small_delta}"
        )
    n_list = sorted(n_list)
    rho = geom.rho_acc
    rows = []
    devs = []
    for n in n_list:
        rs = rootsets[n] if rootsets else find_polar_roots(n, zeta)
        if not rs.converged:
            raise ConvergenceError(f"roots of degree {n} did not converge", detail=rs)
        mods = np.abs(joukowski_phi(rs.roots))
        params = {"n": n, "zeta": format_pair(zeta)}
        exterior = max(0.0, 1.0 - float(mods.min()))
        rows.append(
            CheckRecord("theorem5.exterior", params, exterior, 0.0, exterior == 0.0)
        )
        dev = float(np.abs(np.log(mods / rho)).max())
        devs.append(dev)
        if n == n_list[0]:
            bound = math.log(2.0 * geom.big_delta + 3.0) + abs(math.log(rho)) + 1.0
            rows.append(
                CheckRecord(
                    "theorem5.deviation_bound",
                    params,
                    dev,
                    bound,
                    dev <= bound,
                    note=f"accumulation level rho = {rho:.17g}",
                )
            )
    for (n_prev, d_prev), (n_next, d_next) in zip(
        zip(n_list, devs), zip(n_list[1:], devs[1:])
    ):
        params = {"n": n_next, "n_prev": n_prev, "zeta": format_pair(zeta)}
        tol = TREND_SLACK_T5 * d_prev
        rows.append(
            CheckRecord(
                "theorem5.trend",
                params,
                d_next,
                tol,
                d_next <= tol,
                note=f"deviation {d_prev:.6e} -> {d_next:.6e}",
            )
        )
    return rows


def check_theorem6(pole, z, n_list, tol1: float | None = None, tol2: float | None = None) -> list[CheckRecord]:
    """Relative asymptotics of P_n against L_n' and L_n at a fixed exterior z."""
    tol1 = TOL_RATIO1 if tol1 is None else tol1
    tol2 = TOL_RATIO2 if tol2 is None else tol2
    zeta = to_complex(pole)
    z = to_complex(z)
    geom = pole_geometry(zeta)
    bound = geom.big_delta + 1.0
    if abs(z) <= bound:
        raise RegionError(f"|z| must exceed big_delta + 1 = {bound:.17g}")
    n_list = sorted(n_list)
    target1 = (z * z - 1.0) / (z - zeta)
    target2 = exterior_sqrt(z) / (z - zeta)
    err1, err2 = [], []
    for n in n_list:
        ln, dl = legendre_value_and_derivative(n, z)
        pn = polar_eval(n, zeta, z)
        err1.append(abs(n * pn / dl - target1))
        err2.append(abs(pn / ln - target2))
    zp = format_pair(z)
    rows = []
    for (n_prev, e_prev), (n_next, e_next) in zip(
        zip(n_list, err1), zip(n_list[1:], err1[1:])
    ):
        params = {"n": n_next, "n_prev": n_prev, "zeta": format_pair(zeta), "z": zp}
        tol = math.nextafter(e_prev, 0.0)  # pass requires strict decrease
        rows.append(
            CheckRecord(
                "theorem6.ratio1_trend",
                params,
                e_next,
                tol,
                e_next <= tol,
                note=f"err1 {e_prev:.6e} -> {e_next:.6e}",
            )
        )
    last = {"n": n_list[-1], "zeta": format_pair(zeta), "z": zp}
    rows.append(
        CheckRecord("theorem6.ratio1_limit", last, err1[-1], tol1, err1[-1] <= tol1)
    )
    rows.append(
        CheckRecord("theorem6.ratio2_limit", last, err2[-1], tol2, err2[-1] <= tol2)
    )
    return rows


def check_nth_root_asymptotic(z, n_list, tol: float | None = None) -> list[CheckRecord]:
    """|L_n'(z)|^(1/n) against |phi(z)|/2 at a fixed z off the segment."""
    tol = TOL_NTH_ROOT if tol is None else tol
    z = to_complex(z)
    target = abs(joukowski_phi(z)) / 2.0
    n_list = sorted(n_list)
    errs = []
    for n in n_list:
        _, dl = legendre_value_and_derivative(n, z)
        root = math.exp(math.log(abs(dl)) / n)
        errs.append(abs(root - target))
    zp = format_pair(z)
    rows = [
        CheckRecord(
            "nthroot.limit",
            {"n": n_list[-1], "z": zp},
            errs[-1] / target,
            tol,
            errs[-1] / target <= tol,
            note=f"target {target:.17g}",
        )
    ]
    late = [(n, e) for n, e in zip(n_list, errs) if n >= 50]
    for (n_prev, e_prev), (n_next, e_next) in zip(late, late[1:]):
        params = {"n": n_next, "n_prev": n_prev, "z": zp}
        rows.append(
            CheckRecord(
                "nthroot.trend",
                params,
                e_next,
                e_prev,
                e_next <= e_prev,
                note=f"err {e_prev:.6e} -> {e_next:.6e}",
            )
        )
    return rows


def run_standard_suite(
    pole,
    n_max: int,
    mode: str = "float",
    tol: float | None = None,
    geometry_cap: int = 25,
    equilibrium_cap: int = 20,
    sobolev_cap: int = 15,
) -> VerificationReport:
    """The full algebraic-plus-geometric sweep for one pole.

    Asymptotic checks need their own parameters (an exterior point, a degree
    list) and are driven separately.
    """
    report = VerificationReport()
    for n in range(1, n_max + 1):
        report.extend(check_theorem1(n, pole, mode, tol))
    if n_max >= 2:
        report.extend(check_recurrence(n_max, pole, mode, tol))
    report.extend(check_routes(n_max, pole, mode, tol))
    report.extend(check_defining_identity(n_max, pole, mode, tol))
    report.extend(check_sobolev(min(n_max, sobolev_cap), pole, mode, tol))
    zeta = to_complex(pole)
    for n in range(1, min(n_max, geometry_cap) + 1):
        report.extend(check_zero_geometry(n, zeta, tol))
    for n in range(1, min(n_max, equilibrium_cap) + 1):
        report.extend(check_equilibrium(n, zeta, tol))
    return report
