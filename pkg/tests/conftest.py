import math
import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from relsteer.xstate import make_xstate  # noqa: E402

BELL = (0.5, 0.0, 0.0, 0.5, 0.5, 0.0)
MIXED = (0.25, 0.25, 0.25, 0.25, 0.0, 0.0)
ZERO_ZERO = (1.0, 0.0, 0.0, 0.0, 0.0, 0.0)
# Alice-Bob state at alpha = beta = pi/4
AB1_QUARTER = (0.25, 0.25, 0.0, 0.5, math.sqrt(2) / 4, 0.0)


@pytest.fixture
def bell():
    return make_xstate(*BELL)


@pytest.fixture
def mixed():
    return make_xstate(*MIXED)


@pytest.fixture
def zero_zero():
    return make_xstate(*ZERO_ZERO)


@pytest.fixture
def ab1_quarter():
    return make_xstate(*AB1_QUARTER)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@st.composite
def xstate_entries(draw):
    """Physical X-state entries, including boundary (rank-deficient) cases."""
    w = [draw(st.floats(0.0, 1.0)) for _ in range(4)]
    total = sum(w)
    if total < 1e-6:
        w, total = [1.0, 0.0, 0.0, 0.0], 1.0
    d = [x / total for x in w]
    u = draw(st.floats(-1.0, 1.0))
    v = draw(st.floats(-1.0, 1.0))
    f = u * math.sqrt(d[0] * d[3])
    g = v * math.sqrt(d[1] * d[2])
    return (*d, f, g)


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: numbered end-to-end acceptance criteria")


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            name = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in name or rep.when != "call" and outcome != "error":
                continue
            number = int(name.split("test_criterion_")[1][:2])
            detail = dict(getattr(rep, "user_properties", [])).get("detail", "")
            rows.append((number, "PASS" if outcome == "passed" else "FAIL", detail))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, verdict, detail in sorted(rows):
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  {detail}")
