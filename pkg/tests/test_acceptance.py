"""End-to-end acceptance checks, one test per numbered criterion.

Each test attaches a short ``detail`` user property; the terminal summary hook
in ``conftest.py`` prints one PASS/FAIL line per criterion from these.
"""

import math
import subprocess
import sys
import time

import numpy as np
import pytest
from oracles import random_xstate_entries

from relsteer.correlations import Direction, bell_chsh, eur_sum, si_closed_form
from relsteer.figures import FIGURES
from relsteer.sweep import (
    SweepConfig,
    evaluate_grid,
    find_sudden_death_alpha,
    max_asymmetry,
    monogamy_max,
    point_report,
    run_grid,
)
from relsteer.unruh import Partition, UnruhScenario, crosscheck_deviation, reduced_state
from relsteer.xstate import bloch_from_entries

pytestmark = pytest.mark.acceptance

DEFAULT = SweepConfig()
LN2_BOUND = 0.2 * math.log(2)


@pytest.fixture(scope="module")
def grid():
    return run_grid(DEFAULT)


def test_criterion_01_bell_point(record_property):
    rep = point_report(UnruhScenario(math.pi / 4, 0.0))[Partition.AB1]
    record_property("detail", f"s_ab={rep.s_ab.s:.12f} s_ba={rep.s_ba.s:.12f} bn={rep.bell.bn:.12f}")
    assert rep.s_ab.s == pytest.approx(1.0, abs=1e-9)
    assert rep.s_ba.s == pytest.approx(1.0, abs=1e-9)
    assert rep.bell.bn == pytest.approx(1.0, abs=1e-9)


def test_criterion_02_product_endpoints(grid, record_property):
    worst = (0.0, None)
    for i in (0, len(grid.alphas) - 1):
        for p in Partition:
            for name in ("s_ab", "s_ba", "bn"):
                row = grid.quantity(name, p)[i]
                j = int(np.argmax(row))
                if row[j] > worst[0]:
                    worst = (float(row[j]), f"{name} {p.name} alpha={grid.alphas[i]:.6f} beta={grid.betas[j]:.6f}")
    record_property("detail", f"largest endpoint value {worst[0]:.6g} ({worst[1]})")
    assert worst[0] <= 1e-12, f"nonzero correlation at an endpoint: {worst[0]} at {worst[1]}"


def test_criterion_03_closed_form_matches_entropy_sum(record_property):
    rng = np.random.default_rng(3)
    worst = 0.0
    for _ in range(10_000):
        b = bloch_from_entries(*random_xstate_entries(rng))
        for d in Direction:
            worst = max(worst, abs(si_closed_form(b, d) - (6.0 - 2.0 * eur_sum(b, d))))
    record_property("detail", f"max |closed form - (6 - 2 eur_sum)| = {worst:.3g}")
    assert worst <= 1e-9


def test_criterion_04_table_crosscheck(record_property):
    alphas = DEFAULT.alphas()
    betas = DEFAULT.betas()
    sin_worst = 0.0
    cos_worst = 0.0
    for a in alphas:
        for b in betas:
            sc = UnruhScenario(float(a), float(b))
            sin_worst = max(sin_worst, crosscheck_deviation(sc, "sin"))
            cos_worst = max(cos_worst, crosscheck_deviation(sc, "cos"))
    record_property("detail", f"sin reading max dev {sin_worst:.3g}; cos reading max dev {cos_worst:.3g}")
    assert sin_worst <= 1e-12
    assert cos_worst > 1e-12
    # the coherence entry is off by sin(2a)|cos b - sin b|/2, i.e. 1/2 at a = pi/4, b = 0;
    # the Bloch components built from it move by twice that
    assert cos_worst >= 0.5 - 1e-12


def test_criterion_05_sudden_death_threshold(record_property):
    res = find_sudden_death_alpha(math.pi / 4, tol=1e-9)
    record_property("detail", f"alpha* = {res.root:.10f} (bracket width {res.bracket[1] - res.bracket[0]:.2g})")
    assert 0.55 <= res.root <= 0.65
    assert res.bracket[1] - res.bracket[0] <= 1e-9


def test_criterion_06_bell_vanishes_at_max_acceleration(record_property):
    sc = UnruhScenario(math.pi / 4, math.pi / 4)
    bell = bell_chsh(reduced_state(sc, Partition.AB1))
    s_ab = point_report(sc)[Partition.AB1].s_ab.s
    record_property("detail", f"b = {bell.b:.12f}, bn = {bell.bn:.3g}, s_ab = {s_ab:.6f}")
    assert bell.b == pytest.approx(2.0, abs=1e-9)
    assert bell.bn == pytest.approx(0.0, abs=1e-9)
    assert s_ab == pytest.approx(0.1492, abs=1e-4)
    assert s_ab > 0.0


def test_criterion_07_bob_and_antibob_equivalent_at_infinite_acceleration(record_property):
    grid = evaluate_grid(DEFAULT.alphas(), [math.pi / 4], partitions=(Partition.AB1, Partition.AB2))
    diff = np.abs(grid.quantity("s_ab", Partition.AB1) - grid.quantity("s_ab", Partition.AB2))
    record_property("detail", f"max |s(A->B_I) - s(A->B_II)| = {diff.max():.3g}")
    assert diff.max() <= 1e-9


def test_criterion_08_monogamy(record_property):
    ext = monogamy_max(DEFAULT)
    record_property(
        "detail",
        f"max min(s(A->B_II), s(B_I->B_II)) = {ext.value:.6g} at alpha={ext.alpha:.5f}, beta={ext.beta:.5f}",
    )
    assert ext.value <= 1e-12


def test_criterion_09_asymmetry_bound(record_property):
    ext = max_asymmetry(DEFAULT)
    readings = f"0.2*ln2={LN2_BOUND:.6f}: {'ok' if ext.value <= LN2_BOUND else 'exceeded'}; 0.2: {'ok' if ext.value <= 0.2 else 'exceeded'}"
    record_property(
        "detail",
        f"max asym = {ext.value:.6f} at alpha={ext.alpha:.5f}, beta={ext.beta:.5f} ({readings})",
    )
    assert 0.0 < ext.value <= LN2_BOUND + 5e-3


def test_criterion_10_monotonicity_and_ordering(grid, record_property):
    slices = evaluate_grid([math.pi / 3, math.pi / 4], DEFAULT.betas(), partitions=(Partition.AB1,))
    rises = 0.0
    for name in ("s_ab", "s_ba"):
        q = slices.quantity(name, Partition.AB1)
        rises = max(rises, float(np.max(np.diff(q, axis=1))))
    s_ab = grid.quantity("s_ab", Partition.AB1)
    s_ba = grid.quantity("s_ba", Partition.AB1)
    order_excess = s_ba - s_ab
    i, j = np.unravel_index(np.argmax(order_excess), order_excess.shape)
    row0 = s_ab[:, 0]
    mirror = float(np.max(np.abs(row0 - row0[::-1])))
    record_property(
        "detail",
        f"largest beta-rise {rises:.3g}; mirror dev {mirror:.3g}; "
        f"max s_ba - s_ab = {order_excess[i, j]:.6g} at alpha={grid.alphas[i]:.5f}, beta={grid.betas[j]:.5f}",
    )
    assert rises <= 1e-12
    assert mirror <= 1e-9
    assert order_excess.max() <= 1e-12


def test_criterion_11_determinism_and_runtime(tmp_path, record_property):
    def cli(*args):
        subprocess.run([sys.executable, "-m", "relsteer", *args], check=True, capture_output=True)

    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    cli("figure", "fig3", "--out", str(first))
    cli("figure", "fig3", "--out", str(second))
    start = time.perf_counter()
    for name in FIGURES:
        cli("figure", name, "--out", str(tmp_path / f"{name}.csv"))
    elapsed = time.perf_counter() - start
    same = first.read_bytes() == second.read_bytes()
    record_property("detail", f"fig3 byte-identical: {same}; all presets in {elapsed:.2f} s")
    assert same
    assert elapsed < 60.0
