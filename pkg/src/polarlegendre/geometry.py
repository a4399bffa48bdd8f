"""Zero geometry: pole distances, the exterior map, lemniscates, ellipses.

The exterior (Joukowski-type) map phi(z) = z + sqrt(z^2 - 1) with the branch
|phi(z)| > 1 sends the outside of [-1, 1] onto the outside of the unit disk.
Level sets |phi| = rho are the ellipses with foci +-1; the zeros of the polar
family accumulate on the level set through the pole.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import RegionError, SegmentBranchError
from .legendre import critical_points
from .scalars import to_complex

SEGMENT_TOL = 1e-12


@dataclass(frozen=True)
class PoleGeometry:
    """Distances from the pole to the segment [-1, 1].

    big_delta = sup |pole - x|, small_delta = inf |pole - x| over x in [-1, 1].
    rho_acc = |phi(pole)| is the accumulation ellipse parameter (1 when the
    pole sits on the segment).
    """

    pole: complex
    big_delta: float
    small_delta: float
    rho_acc: float


def segment_distance(z) -> float:
    """Distance from z to the segment [-1, 1]."""
    z = to_complex(z)
    x = min(1.0, max(-1.0, z.real))
    return abs(z - x)


def pole_geometry(pole) -> PoleGeometry:
    z = to_complex(pole)
    big = max(abs(z - 1.0), abs(z + 1.0))
    small = segment_distance(z)
    rho = abs(joukowski_phi(z)) if small > SEGMENT_TOL else 1.0
    return PoleGeometry(pole=z, big_delta=big, small_delta=small, rho_acc=rho)


def joukowski_phi(z):
    """z + sqrt(z^2 - 1) on the branch with |phi| > 1.

    Accepts scalars or numpy arrays.  Raises SegmentBranchError within
    SEGMENT_TOL of [-1, 1], where the two branches collide on |phi| = 1.
    """
    if isinstance(z, np.ndarray):
        x = np.clip(z.real, -1.0, 1.0)
        if np.any(np.abs(z - x) <= SEGMENT_TOL):
            raise SegmentBranchError("phi is branch-ambiguous on [-1, 1]")
        s = np.sqrt(z * z - 1.0 + 0.0j)
        w1 = z + s
        w2 = z - s
        return np.where(np.abs(w1) >= np.abs(w2), w1, w2)
    z = to_complex(z)
    if segment_distance(z) <= SEGMENT_TOL:
        raise SegmentBranchError(f"phi is branch-ambiguous on [-1, 1]: z = {z}")
    s = cmath.sqrt(z * z - 1.0)
    w1, w2 = z + s, z - s
    return w1 if abs(w1) >= abs(w2) else w2


def exterior_sqrt(z):
    """sqrt(z^2 - 1) on the branch consistent with phi: phi(z) - z."""
    return joukowski_phi(z) - z


def accumulation_ellipse_point(pole, theta: float) -> complex:
    """Point of the zero accumulation ellipse at parameter theta.

    The ellipse has semi-axes (rho^2 + 1)/(2 rho) and (rho^2 - 1)/(2 rho)
    with rho = |phi(pole)|.
    """
    rho = pole_geometry(pole).rho_acc
    if rho <= 1.0:
        raise RegionError("pole on [-1, 1]: the accumulation set degenerates")
    a = (rho * rho + 1.0) / (2.0 * rho)
    b = (rho * rho - 1.0) / (2.0 * rho)
    return complex(a * math.cos(theta), b * math.sin(theta))


def accumulation_ellipse_points(pole, count: int = 256) -> np.ndarray:
    thetas = np.linspace(0.0, 2.0 * math.pi, count, endpoint=False)
    rho = pole_geometry(pole).rho_acc
    if rho <= 1.0:
        raise RegionError("pole on [-1, 1]: the accumulation set degenerates")
    a = (rho * rho + 1.0) / (2.0 * rho)
    b = (rho * rho - 1.0) / (2.0 * rho)
    return a * np.cos(thetas) + 1j * b * np.sin(thetas)


@dataclass
class Lemniscate:
    """The level set prod_k |z - x_k| = radius through the pole.

    Nodes are -1, the critical points of L_n, and 1: the n+1 zeros of
    (z^2 - 1) L_n'(z).  Every zero of P_n lies on the level set through the
    pole.  radius = 0 happens exactly when the pole is one of the nodes.
    """

    n: int
    pole: complex
    nodes: np.ndarray
    radius: float


def lemniscate(n: int, pole) -> Lemniscate:
    if n < 1:
        raise ValueError("n >= 1 required")
    z = to_complex(pole)
    nodes = np.concatenate([[-1.0], critical_points(n), [1.0]])
    radius = float(np.prod(np.abs(z - nodes)))
    return Lemniscate(n=n, pole=z, nodes=nodes, radius=radius)


def lemniscate_residual(lem: Lemniscate, z) -> float:
    """Relative defect of z against the level set; absolute when radius is 0.

    With a degenerate radius the relative form would blow up on rounding
    noise, and the product itself is already the meaningful defect.
    """
    prod = float(np.prod(np.abs(to_complex(z) - lem.nodes)))
    if lem.radius < 1e-300:
        return prod
    return abs(prod - lem.radius) / lem.radius


@dataclass
class EllipseBoundReport:
    """Containment findings for a root set against the pole's exclusion regions."""

    disk_radius: float
    disk_violations: list
    alpha: float | None
    ellipse_violations: list
    multiple_roots_outside: list


def ellipse_bound_checks(pole, roots, multiplicities=None, tol: float = 1e-8) -> EllipseBoundReport:
    """Check |root| <= big_delta + 1 and, when small_delta > 1, exclusion from
    the ellipse |z+1| + |z-1| = 2 alpha with alpha = (1 + small_delta)/2,
    inside which every root must additionally be simple."""
    geom = pole_geometry(pole)
    radius = geom.big_delta + 1.0
    roots = np.asarray(roots, dtype=complex)
    if multiplicities is None:
        multiplicities = np.ones(len(roots), dtype=int)
    slack = tol * (1.0 + geom.big_delta)
    disk_bad = [r for r in roots if abs(r) > radius + slack]
    alpha = None
    ell_bad = []
    mult_bad = []
    if geom.small_delta > 1.0:
        alpha = 0.5 * (1.0 + geom.small_delta)
        for r, m in zip(roots, multiplicities):
            if abs(r + 1.0) + abs(r - 1.0) <= 2.0 * alpha - slack:
                ell_bad.append(r)
            if m > 1:
                mult_bad.append(r)
    return EllipseBoundReport(
        disk_radius=radius,
        disk_violations=disk_bad,
        alpha=alpha,
        ellipse_violations=ell_bad,
        multiple_roots_outside=mult_bad,
    )
