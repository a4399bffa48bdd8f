"""Simultaneous root finding for the polar family, evaluation based.

The Ehrlich-Aberth iteration only needs values and derivatives, so the
degree-n polynomial is never expanded: the evaluator runs the stable value
recurrences instead.  Double roots (the only multiplicity the family admits)
make the iteration stall at the sqrt(eps) noise floor; a per-root stagnation
window settles them there, and clustering then merges the pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .exceptions import MultiplicityViolationError
from .geometry import pole_geometry
from .polar import polar_eval_with_derivative

STEP_TOL = 1e-13
STAGNATION_WINDOW = 30
STAGNATION_CAP = 1e-6
MAX_ITERATIONS = 500
CLUSTER_RADIUS_REL = 1e-6
# fixed irrational twist so the start circle never aligns with root symmetries
TWIST = math.pi * (math.sqrt(5.0) - 1.0)


@dataclass
class RootFindConfig:
    radius: float = 2.0
    center: complex = 0.0 + 0.0j
    max_iterations: int = MAX_ITERATIONS
    step_tolerance: float = STEP_TOL
    stagnation_window: int = STAGNATION_WINDOW
    stagnation_cap: float = STAGNATION_CAP


@dataclass
class RootSet:
    """Roots with multiplicities; residuals are |p(r)| / |p'(r)| per root."""

    roots: np.ndarray
    multiplicities: np.ndarray
    residuals: np.ndarray
    iterations: int
    converged: bool
    notes: list = field(default_factory=list)

    @property
    def total_multiplicity(self) -> int:
        return int(self.multiplicities.sum())


def _sorted_rootset(rs: RootSet) -> RootSet:
    order = np.lexsort((rs.roots.imag, rs.roots.real))
    return replace(
        rs,
        roots=rs.roots[order],
        multiplicities=rs.multiplicities[order],
        residuals=rs.residuals[order],
    )


def aberth_find(evaluator, degree: int, config: RootFindConfig | None = None) -> RootSet:
    """All roots of a degree-``degree`` polynomial given by ``evaluator``.

    ``evaluator(z)`` must accept a complex numpy array and return the pair of
    arrays (values, derivatives).  Starts on a circle of ``config.radius``.
    """
    cfg = config or RootFindConfig()
    if degree == 0:
        return RootSet(
            roots=np.array([], dtype=complex),
            multiplicities=np.array([], dtype=int),
            residuals=np.array([]),
            iterations=0,
            converged=True,
        )
    angles = 2.0 * math.pi * np.arange(degree) / degree + TWIST
    z = cfg.center + cfg.radius * np.exp(1j * angles)
    frozen = np.zeros(degree, dtype=bool)
    best = np.full(degree, np.inf)
    stall = np.zeros(degree, dtype=int)
    converged = False
    iterations = 0
    tiny = np.finfo(float).tiny

    for iterations in range(1, cfg.max_iterations + 1):
        v, d = evaluator(z)
        with np.errstate(divide="ignore", invalid="ignore"):
            newton = v / d
        bad = ~np.isfinite(newton)
        if bad.any():
            # deterministic kick off a degenerate point
            newton = np.where(bad, 0.1 * (1.0 + np.abs(z)) * np.exp(1j * iterations), newton)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        repulsion = (1.0 / diff).sum(axis=1)
        denom = 1.0 - newton * repulsion
        denom = np.where(np.abs(denom) < tiny, 1.0, denom)
        w = newton / denom
        w = np.where(frozen, 0.0, w)
        z = z - w
        rel = np.abs(w) / (1.0 + np.abs(z))
        frozen |= rel < cfg.step_tolerance
        improved = rel < 0.9 * best
        best = np.minimum(best, rel)
        stall = np.where(improved | frozen, 0, stall + 1)
        # a root that stopped improving at a small step sits on the noise
        # floor of a multiple root; settle it there
        frozen |= (stall >= cfg.stagnation_window) & (best < cfg.stagnation_cap)
        if frozen.all():
            converged = True
            break

    # Newton polish, accepted per root only when the value improves
    v, d = evaluator(z)
    for _ in range(3):
        with np.errstate(divide="ignore", invalid="ignore"):
            candidate = z - v / d
        ok = np.isfinite(candidate)
        cv, cd = evaluator(np.where(ok, candidate, z))
        accept = ok & (np.abs(cv) < np.abs(v))
        if not accept.any():
            break
        z = np.where(accept, candidate, z)
        v = np.where(accept, cv, v)
        d = np.where(accept, cd, d)

    residuals = np.abs(v) / np.maximum(np.abs(d), tiny)
    rs = RootSet(
        roots=z,
        multiplicities=np.ones(degree, dtype=int),
        residuals=residuals,
        iterations=iterations,
        converged=converged,
    )
    if not converged:
        rs.notes.append(f"iteration cap {cfg.max_iterations} reached")
    return _sorted_rootset(rs)


def cluster_multiplicities(rs: RootSet, radius: float) -> RootSet:
    """Merge pairs of roots within ``radius`` into multiplicity-2 roots.

    Three or more clustered roots violate the multiplicity bound of the
    family and raise.  A merged pair must sit on the real segment (within
    ``radius``); a close pair elsewhere is kept as two simple roots, since a
    genuine double root cannot live there.
    """
    m = len(rs.roots)
    if m == 0:
        return rs
    adj = np.abs(rs.roots[:, None] - rs.roots[None, :]) <= radius
    seen = np.zeros(m, dtype=bool)
    roots, mults, resid = [], [], []
    notes = list(rs.notes)
    for i in range(m):
        if seen[i]:
            continue
        group = [i]
        seen[i] = True
        queue = [i]
        while queue:
            a = queue.pop()
            for b in range(m):
                if not seen[b] and adj[a, b]:
                    seen[b] = True
                    group.append(b)
                    queue.append(b)
        if len(group) == 1:
            roots.append(rs.roots[i])
            mults.append(int(rs.multiplicities[i]))
            resid.append(rs.residuals[i])
            continue
        if len(group) > 2 or any(rs.multiplicities[g] > 1 for g in group):
            raise MultiplicityViolationError(
                f"{len(group)} roots clustered within {radius:.3e}: "
                f"{[rs.roots[g] for g in group]}"
            )
        mean = rs.roots[group].mean()
        if abs(mean.imag) <= radius and abs(mean.real) <= 1.0 + radius:
            roots.append(complex(mean.real, 0.0))
            mults.append(2)
            resid.append(float(rs.residuals[group].max()))
            notes.append(f"double root at {mean.real:.17g}")
        else:
            for g in group:
                roots.append(rs.roots[g])
                mults.append(1)
                resid.append(rs.residuals[g])
            notes.append(f"close pair off the segment left unmerged near {mean}")
    out = RootSet(
        roots=np.array(roots, dtype=complex),
        multiplicities=np.array(mults, dtype=int),
        residuals=np.array(resid),
        iterations=rs.iterations,
        converged=rs.converged,
        notes=notes,
    )
    return _sorted_rootset(out)


def find_polar_roots(
    n: int,
    pole,
    config: RootFindConfig | None = None,
    cluster_radius: float | None = None,
) -> RootSet:
    """Roots of P_n for the given pole, clustered into multiplicities.

    The start circle is the containment bound big_delta + 1, on which all
    roots are known to lie inside.
    """
    geom = pole_geometry(pole)
    if config is None:
        config = RootFindConfig(radius=geom.big_delta + 1.0)
    ev_pole = geom.pole

    def ev(z):
        return polar_eval_with_derivative(n, ev_pole, z)

    rs = aberth_find(ev, n, config)
    if cluster_radius is None:
        cluster_radius = CLUSTER_RADIUS_REL * (1.0 + geom.big_delta)
    return cluster_multiplicities(rs, cluster_radius)


def reconstruct_monic(rs: RootSet):
    """Expand prod (z - r)^m back into coefficients, for cross-checks."""
    from .polycore import monic_from_roots

    expanded = []
    for r, m in zip(rs.roots, rs.multiplicities):
        expanded.extend([r] * int(m))
    return monic_from_roots(expanded)
