"""Matplotlib figure rendering for the zero and convergence reports.

Import stays inside the save functions so the library works headless and the
plotting dependency is only touched when a figure is actually requested.
"""

from __future__ import annotations

import numpy as np

from .geometry import accumulation_ellipse_points, pole_geometry


def _agg_pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_zeros_figure(path, rootset, pole, title: str = ""):
    """Scatter of a root set with the segment, bounding disk, accumulation
    ellipse (when defined) and pole overlaid."""
    plt = _agg_pyplot()
    zeta = complex(pole)
    geom = pole_geometry(zeta)
    fig, ax = plt.subplots(figsize=(8, 6))
    theta = np.linspace(0.0, 2.0 * np.pi, 512)
    radius = geom.big_delta + 1.0
    ax.plot(radius * np.cos(theta), radius * np.sin(theta), "--", color="gray",
            linewidth=1, label=r"$|z| = \Delta_\zeta + 1$")
    ax.plot([-1.0, 1.0], [0.0, 0.0], color="black", linewidth=2, label="$[-1, 1]$")
    if geom.small_delta > 1.0:
        pts = accumulation_ellipse_points(zeta, count=256)
        closed = np.append(pts, pts[:1])
        ax.plot(closed.real, closed.imag, color="tab:blue", linewidth=1.5,
                label=r"$\Lambda(\zeta)$")
    sizes = 30.0 + 40.0 * (rootset.multiplicities - 1)
    ax.scatter(rootset.roots.real, rootset.roots.imag, s=sizes, color="tab:green",
               edgecolors="black", zorder=3, label="zeros")
    ax.plot([zeta.real], [zeta.imag], "x", color="tab:red", markersize=10,
            markeredgewidth=2, label=r"$\zeta$")
    ax.set_aspect("equal")
    ax.grid(True, alpha=0.3)
    ax.legend(loc="upper right", fontsize=8)
    if title:
        ax.set_title(title)
    fig.savefig(path, dpi=100, bbox_inches="tight")
    plt.close(fig)


def save_convergence_figure(path, ns, errors, label: str, title: str = ""):
    """Semilog error-vs-degree plot for one asymptotic sequence."""
    plt = _agg_pyplot()
    fig, ax = plt.subplots(figsize=(8, 6))
    ax.semilogy(list(ns), [max(e, 1e-300) for e in errors], "o-", label=label)
    ax.set_xlabel("n")
    ax.set_ylabel("absolute error")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    if title:
        ax.set_title(title)
    fig.savefig(path, dpi=100, bbox_inches="tight")
    plt.close(fig)
