"""
Two-qubit X-states and their Bloch parametrization.

Basis order is |00>, |01>, |10>, |11> with the first factor belonging to
the first party of the pair (Alice, or the region-I mode for Bob/anti-Bob).
Only the six real numbers that an X-state can carry are stored: the four
populations ``d1..d4``, the outer coherence ``f`` (rho_14) and the inner
coherence ``g`` (rho_23).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from relsteer.errors import DomainError, NotAState, NotPositive

TRACE_TOL = 1e-10
POSITIVITY_TOL = 1e-12


@dataclass(frozen=True)
class XState:
    d1: float
    d2: float
    d3: float
    d4: float
    f: float
    g: float

    def as_tuple(self) -> tuple[float, float, float, float, float, float]:
        """Serialization order used by the CLI: (d1, d2, d3, d4, f, g)."""
        return (self.d1, self.d2, self.d3, self.d4, self.f, self.g)

    def matrix(self) -> np.ndarray:
        d1, d2, d3, d4, f, g = self.as_tuple()
        return np.array(
            [
                [d1, 0.0, 0.0, f],
                [0.0, d2, g, 0.0],
                [0.0, g, d3, 0.0],
                [f, 0.0, 0.0, d4],
            ]
        )


@dataclass(frozen=True)
class BlochX:
    """Correlation diagonal (c1, c2, c3) and local z components (r, s)."""

    c1: float
    c2: float
    c3: float
    r: float
    s: float

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return (self.c1, self.c2, self.c3, self.r, self.s)

    def swapped(self) -> BlochX:
        """Exchange the roles of the two parties (r <-> s)."""
        return replace(self, r=self.s, s=self.r)


def _real(name, value):
    if isinstance(value, complex) or np.iscomplexobj(value):
        if complex(value).imag != 0.0:
            raise DomainError(f"{name} must be real, got {value!r}")
        value = complex(value).real
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


def make_xstate(d1, d2, d3, d4, f, g) -> XState:
    """Validate X-state entries, clamping float dust onto the constraint surface.

    Raises
    ------
    NotAState
        If the trace differs from one by more than ``TRACE_TOL``.
    NotPositive
        If a population or a 2x2 block determinant is below ``-POSITIVITY_TOL``.
    """
    d = [_real(n, v) for n, v in zip(("d1", "d2", "d3", "d4"), (d1, d2, d3, d4))]
    f = _real("f", f)
    g = _real("g", g)

    trace = sum(d)
    if abs(trace - 1.0) > TRACE_TOL:
        raise NotAState(f"trace is {trace!r}, expected 1")
    for i, di in enumerate(d):
        if di < -POSITIVITY_TOL:
            raise NotPositive(f"population d{i + 1} = {di!r} is negative")
    d = [max(di, 0.0) for di in d]

    def clamp_block(p, q, c, label):
        excess = c * c - p * q
        if excess > POSITIVITY_TOL:
            raise NotPositive(
                f"{label} block has negative determinant {-excess!r}"
            )
        if excess <= 0.0:
            return p, q, c
        # drop the (tiny) negative eigenvalue: nearest PSD block
        w, v = np.linalg.eigh(np.array([[p, c], [c, q]]))
        top = max(w[1], 0.0) * np.outer(v[:, 1], v[:, 1])
        return float(top[0, 0]), float(top[1, 1]), float(top[0, 1])

    d[0], d[3], f = clamp_block(d[0], d[3], f, "outer (|00>,|11>)")
    d[1], d[2], g = clamp_block(d[1], d[2], g, "inner (|01>,|10>)")
    total = sum(d)
    return XState(*(di / total for di in d), f / total, g / total)


def bloch_from_entries(d1, d2, d3, d4, f, g) -> BlochX:
    """Bloch parameters of raw X-shaped entries, without any physicality check."""
    return BlochX(
        c1=2.0 * (g + f),
        c2=2.0 * (g - f),
        c3=d1 - d2 - d3 + d4,
        r=d1 + d2 - d3 - d4,
        s=d1 - d2 + d3 - d4,
    )


def entries_from_bloch(c1, c2, c3, r, s):
    """Inverse of :func:`bloch_from_entries`; returns (d1, d2, d3, d4, f, g)."""
    return (
        (1.0 + c3 + s + r) / 4.0,
        (1.0 - c3 + r - s) / 4.0,
        (1.0 - c3 - r + s) / 4.0,
        (1.0 + c3 - r - s) / 4.0,
        (c1 - c2) / 4.0,
        (c1 + c2) / 4.0,
    )


def bloch_from_xstate(state: XState) -> BlochX:
    return bloch_from_entries(*state.as_tuple())


def xstate_from_bloch(b: BlochX) -> XState:
    """Build the X-state with the given Bloch parameters.

    Raises NotPositive when the 5-tuple lies outside the physical region.
    """
    return make_xstate(*entries_from_bloch(*b.as_tuple()))


def eigenvalues(state: XState) -> tuple[float, float, float, float]:
    """Spectrum from the two decoupled 2x2 blocks, sorted descending."""
    d1, d2, d3, d4, f, g = state.as_tuple()
    outer = math.hypot((d1 - d4) / 2.0, f)
    inner = math.hypot((d2 - d3) / 2.0, g)
    vals = [
        (d1 + d4) / 2.0 + outer,
        (d1 + d4) / 2.0 - outer,
        (d2 + d3) / 2.0 + inner,
        (d2 + d3) / 2.0 - inner,
    ]
    # the smaller root of each block can dip below zero by rounding
    vals = [min(max(v, 0.0), 1.0) for v in vals]
    return tuple(sorted(vals, reverse=True))


def marginals(state: XState) -> tuple[float, float]:
    """z components (r, s) of the two single-qubit reduced states."""
    b = bloch_from_xstate(state)
    return b.r, b.s
