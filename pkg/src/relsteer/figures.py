"""Slice layouts reproducing the data behind the published figure panels."""

from __future__ import annotations

import math

import numpy as np

from relsteer.sweep import GridResult, SweepConfig, evaluate_grid
from relsteer.unruh import BETA_MAX, Partition

FIG2_BETAS = (0.0, 0.3, 0.6, BETA_MAX)
FIG4_ALPHAS = (math.pi / 3, math.pi / 4)
FIG6_ALPHAS = (math.pi / 4, math.pi / 8, math.pi / 3)

FIGURES = ("fig2", "fig3", "fig4", "fig5", "fig6", "fig7")


def figure_axes(name: str, cfg: SweepConfig | None = None):
    """Return (alphas, betas, partitions, quantities) for a figure preset.

    Dense axes come from ``cfg`` (default 201 x 101 grid); slice values are
    fixed by the preset.
    """
    cfg = cfg or SweepConfig()
    alphas, betas = cfg.alphas(), cfg.betas()
    every = ("s_ab", "s_ba", "asym", "bn")
    if name == "fig2":
        return alphas, np.array(FIG2_BETAS), (Partition.AB1,), ("s_ab",)
    if name == "fig3":
        return alphas, betas, (Partition.AB1,), ("s_ab", "bn")
    if name == "fig4":
        return np.array(FIG4_ALPHAS), betas, (Partition.AB1,), ("s_ab", "s_ba", "asym")
    if name == "fig5":
        return alphas, betas, (Partition.AB1,), ("asym",)
    if name == "fig6":
        return np.array(FIG6_ALPHAS), betas, tuple(Partition), ("s_ab",)
    if name == "fig7":
        return alphas, betas, (Partition.AB2, Partition.B1B2), ("s_ab",)
    raise KeyError(f"unknown figure {name!r}; choose from {', '.join(FIGURES)}")


def figure_grid(name: str, cfg: SweepConfig | None = None) -> GridResult:
    alphas, betas, partitions, quantities = figure_axes(name, cfg)
    config = {
        "figure": name,
        "alphas": [float(a) for a in alphas] if len(alphas) < 10 else [float(alphas[0]), float(alphas[-1]), len(alphas)],
        "betas": [float(b) for b in betas] if len(betas) < 10 else [float(betas[0]), float(betas[-1]), len(betas)],
        "partitions": [p.value for p in partitions],
        "quantities": list(quantities),
    }
    return evaluate_grid(alphas, betas, partitions, quantities, config)

