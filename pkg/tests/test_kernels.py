import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from relsteer import _kernels_py, kernels
from relsteer.correlations import Direction, bell_chsh, si_closed_form
from relsteer.unruh import Partition, UnruhScenario, bloch_table, reduced_state

ALPHAS = np.linspace(0, math.pi / 2, 37)
BETAS = np.linspace(0, math.pi / 4, 23)


def scalar_terms(alphas, betas):
    out = np.empty((len(alphas), len(betas), 3, 5))
    for i, a in enumerate(alphas):
        for j, b in enumerate(betas):
            sc = UnruhScenario(a, b)
            for k, p in enumerate(Partition):
                bx = bloch_table(sc, p)
                bell = bell_chsh(reduced_state(sc, p))
                out[i, j, k] = (
                    si_closed_form(bx, Direction.AtoB),
                    si_closed_form(bx, Direction.BtoA),
                    bell.mu1,
                    bell.mu2,
                    bell.mu3,
                )
    return out


@pytest.fixture(scope="module")
def reference():
    return scalar_terms(ALPHAS, BETAS)


def test_fallback_matches_scalar_path(reference):
    assert_allclose(_kernels_py.grid_terms(ALPHAS, BETAS), reference, atol=1e-12)


def test_compiled_matches_scalar_path(reference):
    compiled = pytest.importorskip("relsteer._kernels")
    assert_allclose(compiled.grid_terms(ALPHAS, BETAS), reference, atol=1e-12)


def test_compiled_matches_fallback_on_default_grid():
    compiled = pytest.importorskip("relsteer._kernels")
    a = np.linspace(0, math.pi / 2, 201)
    b = np.linspace(0, math.pi / 4, 101)
    assert_allclose(compiled.grid_terms(a, b), _kernels_py.grid_terms(a, b), atol=1e-13, rtol=0)


def test_layout():
    out = kernels.grid_terms(np.array([0.1, 0.2, 0.3]), np.array([0.0, 0.4]))
    assert out.shape == (3, 2, 3, 5)


def test_selected_backend():
    try:
        import relsteer._kernels  # noqa: F401
    except ImportError:
        assert kernels.BACKEND == "python"
    else:
        assert kernels.BACKEND in ("cython", "python")


def test_forced_fallback(monkeypatch):
    import importlib

    monkeypatch.setenv("RELSTEER_PURE_PYTHON", "1")
    reloaded = importlib.reload(kernels)
    try:
        assert reloaded.BACKEND == "python"
        assert reloaded.grid_terms is _kernels_py.grid_terms
    finally:
        monkeypatch.delenv("RELSTEER_PURE_PYTHON")
        importlib.reload(kernels)
