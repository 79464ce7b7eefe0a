"""
Grid sweeps over (alpha, beta), threshold and extremum searches, and file output.

Grids are evaluated by the kernel in :mod:`relsteer.kernels` and stored as
raw terms; normalized quantities are derived from them on demand, so
single cells can be turned back into full :class:`CorrelationReport` objects.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from relsteer import kernels
from relsteer.correlations import (
    B_CLASSICAL,
    B_MAX,
    CorrelationReport,
    Direction,
    SteeringValue,
    bell_from_mu,
    correlation_report,
    normalize_steering,
    si_closed_form,
)
from relsteer.errors import DomainError, IoError, MonogamyViolation, NoRoot
from relsteer.unruh import ALPHA_MAX, BETA_MAX, Partition, UnruhScenario, bloch_table, reduced_state

QUANTITIES = ("s_ab", "s_ba", "asym", "bn")
CSV_HEADER = ("alpha", "beta", "partition") + QUANTITIES
MONOGAMY_TOL = 1e-9
_PARTITION_INDEX = {p: i for i, p in enumerate(Partition)}


def _check_range(name, rng, hi_limit):
    lo, hi, count = rng
    if int(count) != count or count < 2:
        raise DomainError(f"{name} count must be an integer >= 2, got {count!r}")
    if not lo <= hi:
        raise DomainError(f"{name} needs lo <= hi, got {lo!r} > {hi!r}")
    if lo < -1e-12 or hi > hi_limit + 1e-12:
        raise DomainError(f"{name} must lie inside [0, {hi_limit!r}]")
    return (max(float(lo), 0.0), min(float(hi), hi_limit), int(count))


@dataclass(frozen=True)
class SweepConfig:
    alpha_range: tuple[float, float, int] = (0.0, ALPHA_MAX, 201)
    beta_range: tuple[float, float, int] = (0.0, BETA_MAX, 101)
    partitions: tuple[Partition, ...] = tuple(Partition)
    quantities: tuple[str, ...] = QUANTITIES
    out: str | None = None
    format: str = "csv"

    def __post_init__(self):
        object.__setattr__(self, "alpha_range", _check_range("alpha_range", self.alpha_range, ALPHA_MAX))
        object.__setattr__(self, "beta_range", _check_range("beta_range", self.beta_range, BETA_MAX))
        object.__setattr__(self, "partitions", tuple(Partition(p) for p in self.partitions))
        bad = [q for q in self.quantities if q not in QUANTITIES]
        if bad:
            raise DomainError(f"unknown quantities {bad}; choose from {QUANTITIES}")
        object.__setattr__(self, "quantities", tuple(self.quantities))
        if self.format not in ("csv", "json"):
            raise DomainError(f"format must be csv or json, got {self.format!r}")

    def alphas(self) -> np.ndarray:
        return np.linspace(*self.alpha_range)

    def betas(self) -> np.ndarray:
        return np.linspace(*self.beta_range)

    def as_dict(self) -> dict:
        return {
            "alpha_range": list(self.alpha_range),
            "beta_range": list(self.beta_range),
            "partitions": [p.value for p in self.partitions],
            "quantities": list(self.quantities),
            "format": self.format,
        }


@dataclass(frozen=True)
class GridCell:
    alpha: float
    beta: float
    partition: Partition
    s_ab: float
    s_ba: float
    asym: float
    bn: float


@dataclass
class GridResult:
    """Row-major (alpha outer, beta inner) grid of per-partition quantities.

    ``terms`` has shape (n_alpha, n_beta, 3, 5) holding si_ab, si_ba and the
    three Horodecki eigenvalues for partitions AB1, AB2, B1B2.
    """

    alphas: np.ndarray
    betas: np.ndarray
    terms: np.ndarray
    partitions: tuple[Partition, ...] = tuple(Partition)
    quantities: tuple[str, ...] = QUANTITIES
    config: dict = field(default_factory=dict)

    def __post_init__(self):
        si_ab, si_ba = self.terms[..., 0], self.terms[..., 1]
        self.s_ab = np.maximum(0.0, (si_ab - 2.0) / 4.0)
        self.s_ba = np.maximum(0.0, (si_ba - 2.0) / 4.0)
        self.asym = np.abs(self.s_ab - self.s_ba)
        mu1, mu2, mu3 = self.terms[..., 2], self.terms[..., 3], self.terms[..., 4]
        b = 2.0 * np.maximum(np.sqrt(mu1 + mu2), np.sqrt(mu1 + mu3))
        self.b = b
        self.bn = np.maximum(0.0, (b - B_CLASSICAL) / (B_MAX - B_CLASSICAL))

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.alphas), len(self.betas))

    def quantity(self, name: str, partition: Partition) -> np.ndarray:
        """(n_alpha, n_beta) array of one quantity for one partition."""
        if name not in QUANTITIES:
            raise KeyError(name)
        return getattr(self, name)[:, :, _PARTITION_INDEX[Partition(partition)]]

    def report(self, i: int, j: int, partition: Partition) -> CorrelationReport:
        k = _PARTITION_INDEX[Partition(partition)]
        si_ab, si_ba, mu1, mu2, mu3 = (float(v) for v in self.terms[i, j, k])
        s_ab = SteeringValue(si_ab, normalize_steering(si_ab), Direction.AtoB)
        s_ba = SteeringValue(si_ba, normalize_steering(si_ba), Direction.BtoA)
        return CorrelationReport(s_ab, s_ba, abs(s_ab.s - s_ba.s), bell_from_mu(mu1, mu2, mu3))

    def cells(self):
        """Yield :class:`GridCell` rows in row-major order, partitions innermost."""
        if not self.quantities:
            return
        for i, a in enumerate(self.alphas):
            for j, b in enumerate(self.betas):
                for p in self.partitions:
                    k = _PARTITION_INDEX[p]
                    yield GridCell(
                        float(a),
                        float(b),
                        p,
                        float(self.s_ab[i, j, k]),
                        float(self.s_ba[i, j, k]),
                        float(self.asym[i, j, k]),
                        float(self.bn[i, j, k]),
                    )


def evaluate_grid(alphas, betas, partitions=tuple(Partition), quantities=QUANTITIES, config=None) -> GridResult:
    alphas = np.ascontiguousarray(alphas, dtype=np.float64)
    betas = np.ascontiguousarray(betas, dtype=np.float64)
    if alphas.ndim != 1 or betas.ndim != 1:
        raise DomainError("alpha and beta values must be one-dimensional")
    if np.any(alphas < 0.0) or np.any(alphas > ALPHA_MAX + 1e-12):
        raise DomainError("alpha values must lie in [0, pi/2]")
    if np.any(betas < 0.0) or np.any(betas > BETA_MAX + 1e-12):
        raise DomainError("beta values must lie in [0, pi/4]")
    terms = kernels.grid_terms(alphas, betas)
    return GridResult(
        alphas=alphas,
        betas=betas,
        terms=np.asarray(terms),
        partitions=tuple(Partition(p) for p in partitions),
        quantities=tuple(quantities),
        config=dict(config or {}),
    )


def run_grid(cfg: SweepConfig) -> GridResult:
    return evaluate_grid(cfg.alphas(), cfg.betas(), cfg.partitions, cfg.quantities, cfg.as_dict())


def point_report(sc: UnruhScenario) -> dict[Partition, CorrelationReport]:
    """Correlation reports for the three reduced states at one scenario."""
    return {p: correlation_report(reduced_state(sc, p)) for p in Partition}


@dataclass(frozen=True)
class PointResult:
    """A :func:`point_report` bundled with its scenario, for :func:`emit`."""

    scenario: UnruhScenario
    reports: dict
    partitions: tuple[Partition, ...] = tuple(Partition)
    quantities: tuple[str, ...] = QUANTITIES

    @classmethod
    def compute(cls, sc: UnruhScenario, partitions=tuple(Partition), quantities=QUANTITIES):
        return cls(sc, point_report(sc), tuple(Partition(p) for p in partitions), tuple(quantities))

    def cells(self):
        if not self.quantities:
            return
        for p in self.partitions:
            rep = self.reports[p]
            yield GridCell(self.scenario.alpha, self.scenario.beta, p, rep.s_ab.s, rep.s_ba.s, rep.asym, rep.bell.bn)


@dataclass(frozen=True)
class ThresholdResult:
    """Bisection outcome; ``parameter`` names the searched coordinate and the
    other of ``alpha``/``beta`` holds the fixed value."""

    parameter: str
    bracket: tuple[float, float]
    root: float
    tolerance: float
    beta: float | None = None
    alpha: float | None = None

    def as_dict(self) -> dict:
        return {
            "parameter": self.parameter,
            "alpha": self.alpha,
            "beta": self.beta,
            "bracket_lo": self.bracket[0],
            "bracket_hi": self.bracket[1],
            "root": self.root,
            "tolerance": self.tolerance,
        }


def _steered_ab1(alpha: float, beta: float) -> bool:
    b = bloch_table(UnruhScenario(alpha, beta), Partition.AB1)
    return normalize_steering(si_closed_form(b, Direction.AtoB)) > 0.0


def find_sudden_death_alpha(beta: float, tol: float = 1e-9, lo: float = 1e-6, hi: float = math.pi / 4) -> ThresholdResult:
    """Smallest alpha at which Alice->Bob steering is witnessed, by bisection.

    Bisects the boolean indicator ``s_ab(AB1) > 0`` on ``[lo, hi]``.
    """
    if not 0.0 <= beta <= BETA_MAX:
        raise DomainError(f"beta must lie in [0, pi/4], got {beta!r}")
    if not tol > 0.0:
        raise DomainError("tol must be positive")
    at_lo, at_hi = _steered_ab1(lo, beta), _steered_ab1(hi, beta)
    if at_lo == at_hi:
        raise NoRoot(
            f"steering indicator is {at_lo} at both alpha={lo!r} and alpha={hi!r} (beta={beta!r})"
        )
    lo, hi = _bisect(lambda a: _steered_ab1(a, beta), lo, hi, tol)
    return ThresholdResult("alpha", (lo, hi), 0.5 * (lo + hi), hi - lo, beta=beta)


def _bisect(indicator, lo, hi, tol):
    at_hi = indicator(hi)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if indicator(mid) == at_hi:
            hi = mid
        else:
            lo = mid
    return lo, hi


def find_asymmetry_onset(alpha: float, eps: float = 1e-6, tol: float = 1e-9) -> ThresholdResult:
    """Acceleration parameter at which the Alice/Bob asymmetry first exceeds ``eps``.

    The two steering directions differ for every beta > 0 whenever the
    marginals differ, so there is no sharp onset; ``eps`` makes the
    detectability level explicit. Bisects ``asym(alpha, beta) > eps`` on
    ``[0, pi/4]``; at beta = 0 the state is symmetric and the asymmetry is 0.
    """
    if not 0.0 <= alpha <= ALPHA_MAX:
        raise DomainError(f"alpha must lie in [0, pi/2], got {alpha!r}")
    if not eps > 0.0:
        raise DomainError("eps must be positive")
    if not tol > 0.0:
        raise DomainError("tol must be positive")

    def detected(beta):
        return _asym(alpha, beta) > eps

    if detected(0.0) or not detected(BETA_MAX):
        raise NoRoot(f"asymmetry does not cross {eps!r} on [0, pi/4] at alpha={alpha!r}")
    lo, hi = _bisect(detected, 0.0, BETA_MAX, tol)
    return ThresholdResult("beta", (lo, hi), 0.5 * (lo + hi), hi - lo, alpha=alpha)


@dataclass(frozen=True)
class Extremum:
    alpha: float
    beta: float
    value: float


def _asym(alpha, beta):
    b = bloch_table(UnruhScenario(alpha, beta), Partition.AB1)
    s_ab = normalize_steering(si_closed_form(b, Direction.AtoB))
    s_ba = normalize_steering(si_closed_form(b, Direction.BtoA))
    return abs(s_ab - s_ba)


def max_asymmetry(cfg: SweepConfig | None = None, tol: float = 1e-6, seeds: int = 4) -> Extremum:
    """Largest Alice/Bob steering asymmetry over a grid, refined locally.

    The best ``seeds`` coarse-grid cells each start a bounded Nelder-Mead
    search confined to the neighbouring grid cells. The maximum typically
    sits on the kink where one steering direction reaches zero, which
    stalls one-coordinate-at-a-time searches.
    """
    cfg = cfg or SweepConfig()
    grid = evaluate_grid(cfg.alphas(), cfg.betas(), (Partition.AB1,))
    asym = grid.quantity("asym", Partition.AB1)
    order = np.argsort(asym, axis=None, kind="stable")[::-1][:seeds]

    def window(values, k):
        return float(values[max(k - 1, 0)]), float(values[min(k + 1, len(values) - 1)])

    best = None
    for flat in order:
        i, j = np.unravel_index(int(flat), asym.shape)
        start = Extremum(float(grid.alphas[i]), float(grid.betas[j]), float(asym[i, j]))
        if best is None or start.value > best.value:
            best = start
        bounds = [window(grid.alphas, i), window(grid.betas, j)]
        if bounds[0][0] == bounds[0][1] and bounds[1][0] == bounds[1][1]:
            continue
        res = minimize(
            lambda x: -_asym(x[0], x[1]),
            x0=[start.alpha, start.beta],
            method="Nelder-Mead",
            bounds=bounds,
            options={"xatol": tol, "fatol": 1e-13, "maxiter": 4000},
        )
        if -res.fun > best.value:
            best = Extremum(float(res.x[0]), float(res.x[1]), float(-res.fun))
    return best


def monogamy_max(cfg: SweepConfig | None = None) -> Extremum:
    """Largest min(S(A->anti-Bob), S(Bob->anti-Bob)) over the grid."""
    cfg = cfg or SweepConfig()
    grid = evaluate_grid(cfg.alphas(), cfg.betas(), (Partition.AB2, Partition.B1B2))
    both = np.minimum(grid.quantity("s_ab", Partition.AB2), grid.quantity("s_ab", Partition.B1B2))
    i, j = np.unravel_index(int(np.argmax(both)), both.shape)
    return Extremum(float(grid.alphas[i]), float(grid.betas[j]), float(both[i, j]))


def monogamy_scan(cfg: SweepConfig | None = None) -> float:
    """Scanned maximum of the simultaneous anti-Bob steering; raises past 1e-9."""
    ext = monogamy_max(cfg)
    if ext.value > MONOGAMY_TOL:
        raise MonogamyViolation(ext.value, ext.alpha, ext.beta)
    return ext.value


def _fmt(x: float) -> str:
    return f"{x:.9f}"


def _grid_rows(result):
    for cell in result.cells():
        row = [_fmt(cell.alpha), _fmt(cell.beta), cell.partition.value]
        for q in QUANTITIES:
            row.append(_fmt(getattr(cell, q)) if q in result.quantities else "")
        yield row


def _grid_json(result) -> dict:
    cells = []
    for row in _grid_rows(result):
        entry = {"alpha": float(row[0]), "beta": float(row[1]), "partition": row[2]}
        for q, v in zip(QUANTITIES, row[3:]):
            entry[q] = float(v) if v else None
        cells.append(entry)
    if isinstance(result, PointResult):
        config = {"alpha": result.scenario.alpha, "beta": result.scenario.beta}
    else:
        config = result.config
    config = dict(config, partitions=[p.value for p in result.partitions], quantities=list(result.quantities))
    return {"config": config, "cells": cells}


THRESHOLD_HEADER = ("parameter", "alpha", "beta", "bracket_lo", "bracket_hi", "root", "tolerance")


def emit(result, path, format: str = "csv") -> None:
    """Write a grid or threshold result as CSV or JSON.

    Grid CSV columns are ``alpha,beta,partition,s_ab,s_ba,asym,bn`` with nine
    decimals and LF line endings; quantities not selected are left blank.
    ``path`` may be a path or an open text stream.
    """
    if format not in ("csv", "json"):
        raise DomainError(f"format must be csv or json, got {format!r}")
    try:
        if hasattr(path, "write"):
            _emit(result, path, format)
        else:
            with open(path, "w", newline="", encoding="utf-8") as fh:
                _emit(result, fh, format)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def _emit(result, fh, format):
    if isinstance(result, (GridResult, PointResult)):
        if format == "csv":
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            writer.writerows(_grid_rows(result))
        else:
            json.dump(_grid_json(result), fh, indent=1)
            fh.write("\n")
    elif isinstance(result, ThresholdResult):
        d = result.as_dict()
        if format == "csv":
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(THRESHOLD_HEADER)
            writer.writerow([d["parameter"]] + ["" if d[k] is None else f"{d[k]:.17g}" for k in THRESHOLD_HEADER[1:]])
        else:
            json.dump(d, fh, indent=1)
            fh.write("\n")
    else:
        raise TypeError(f"cannot emit {type(result).__name__}")
