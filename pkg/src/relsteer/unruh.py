"""
Single-mode Unruh channel acting on Bob's half of cos(a)|00> + sin(a)|11>.

Bob's vacuum splits into cos(b)|0>_I|0>_II + sin(b)|1>_I|1>_II while his
one-particle state goes to |1>_I|0>_II. The resulting three-mode pure state
(Alice, region I, region II) yields three bipartite X-states:

* ``AB1``: Alice and Bob (region I), basis |n_A n_I>
* ``AB2``: Alice and anti-Bob (region II), basis |n_A n_II>
* ``B1B2``: Bob and anti-Bob, basis |n_I n_II>

:func:`reduced_state` performs an explicit partial trace of the pure state,
:func:`bloch_table` evaluates closed forms, and :func:`crosscheck` keeps the
two in agreement.

The Alice/anti-Bob inner coherence is cos(a) sin(a) sin(b). A widely
reproduced printed form of this density matrix carries cos(b) instead; that
variant disagrees with the partial trace, with the closed-form Bloch table,
and is not even positive for b < pi/4. It is kept only as
``ab2_coherence="cos"`` in :func:`closed_form_entries` so the discrepancy
can be demonstrated.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from relsteer.errors import CrossCheckFailure, DomainError
from relsteer.xstate import BlochX, XState, bloch_from_entries, bloch_from_xstate, make_xstate

ALPHA_MAX = math.pi / 2
BETA_MAX = math.pi / 4
CROSSCHECK_TOL = 1e-9
_RANGE_TOL = 1e-12


class Partition(enum.Enum):
    AB1 = "AB1"
    AB2 = "AB2"
    B1B2 = "B1B2"


@dataclass(frozen=True)
class UnruhScenario:
    alpha: float
    beta: float

    def __post_init__(self):
        for name, value, hi in (("alpha", self.alpha, ALPHA_MAX), ("beta", self.beta, BETA_MAX)):
            if not math.isfinite(value) or value < -_RANGE_TOL or value > hi + _RANGE_TOL:
                raise DomainError(f"{name} = {value!r} outside [0, {hi!r}]")
        object.__setattr__(self, "alpha", min(max(float(self.alpha), 0.0), ALPHA_MAX))
        object.__setattr__(self, "beta", min(max(float(self.beta), 0.0), BETA_MAX))

    @classmethod
    def from_acceleration(cls, alpha, accel, omega=1.0):
        return cls(alpha, beta_from_acceleration(accel, omega))


@dataclass(frozen=True)
class TripartiteState:
    """Amplitudes on |0,0_I,0_II>, |0,1_I,1_II>, |1,1_I,0_II>."""

    amplitudes: tuple[float, float, float]

    def vector(self) -> np.ndarray:
        """Full 8-component state, index = 4*n_A + 2*n_I + n_II."""
        psi = np.zeros(8)
        psi[0b000], psi[0b011], psi[0b110] = self.amplitudes
        return psi


def beta_from_acceleration(accel: float, omega: float = 1.0) -> float:
    """Acceleration parameter arccos((1 + exp(-2 pi omega / a))^(-1/2)).

    ``accel = 0`` is defined by its limit, 0; ``accel = inf`` gives pi/4.
    """
    accel = float(accel)
    omega = float(omega)
    if math.isnan(accel) or accel < 0.0:
        raise DomainError(f"acceleration must be >= 0, got {accel!r}")
    if not omega > 0.0 or math.isinf(omega):
        raise DomainError(f"mode frequency must be positive and finite, got {omega!r}")
    if accel == 0.0:
        return 0.0
    boltzmann = math.exp(-2.0 * math.pi * omega / accel)
    return math.acos((1.0 + boltzmann) ** -0.5)


def tripartite(sc: UnruhScenario) -> TripartiteState:
    ca, sa = math.cos(sc.alpha), math.sin(sc.alpha)
    cb, sb = math.cos(sc.beta), math.sin(sc.beta)
    return TripartiteState((ca * cb, ca * sb, sa))


# einsum signatures tracing one of the three modes out of |psi><psi|
_TRACE = {
    Partition.AB1: "aix,bjx->aibj",
    Partition.AB2: "aix,biy->axby",
    Partition.B1B2: "aix,ajy->ixjy",
}


def reduced_density_matrix(sc: UnruhScenario, p: Partition) -> np.ndarray:
    """4x4 reduced density matrix obtained by an explicit partial trace."""
    psi = tripartite(sc).vector().reshape(2, 2, 2)
    sig = _TRACE[Partition(p)]
    rho = np.einsum(sig, psi, psi)
    return rho.reshape(4, 4)


def reduced_state(sc: UnruhScenario, p: Partition) -> XState:
    rho = reduced_density_matrix(sc, p)
    x_mask = np.array(
        [[1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 1, 0], [1, 0, 0, 1]], dtype=bool
    )
    leak = np.abs(rho[~x_mask]).max()
    if leak > CROSSCHECK_TOL:
        raise CrossCheckFailure(f"reduced state of {p} is not X-shaped ({leak:.3e})")
    return make_xstate(rho[0, 0], rho[1, 1], rho[2, 2], rho[3, 3], rho[0, 3], rho[1, 2])


def closed_form_entries(sc: UnruhScenario, p: Partition, ab2_coherence: str = "sin"):
    """Reduced-state entries (d1, d2, d3, d4, f, g) written out in closed form."""
    ca2, sa2 = math.cos(sc.alpha) ** 2, math.sin(sc.alpha) ** 2
    cb, sb = math.cos(sc.beta), math.sin(sc.beta)
    casa = math.cos(sc.alpha) * math.sin(sc.alpha)
    p = Partition(p)
    if p is Partition.AB1:
        return (ca2 * cb * cb, ca2 * sb * sb, 0.0, sa2, casa * cb, 0.0)
    if p is Partition.AB2:
        if ab2_coherence == "sin":
            g = casa * sb
        elif ab2_coherence == "cos":
            g = casa * cb
        else:
            raise ValueError(f"ab2_coherence must be 'sin' or 'cos', got {ab2_coherence!r}")
        return (ca2 * cb * cb, ca2 * sb * sb, sa2, 0.0, 0.0, g)
    return (ca2 * cb * cb, 0.0, sa2, ca2 * sb * sb, ca2 * sb * cb, 0.0)


def bloch_table(sc: UnruhScenario, p: Partition) -> BlochX:
    """Closed-form Bloch parameters of the three reduced states."""
    a, b = sc.alpha, sc.beta
    ca2, sa2 = math.cos(a) ** 2, math.sin(a) ** 2
    s2a, c2a = math.sin(2 * a), math.cos(2 * a)
    s2b, c2b = math.sin(2 * b), math.cos(2 * b)
    p = Partition(p)
    if p is Partition.AB1:
        return BlochX(
            c1=s2a * math.cos(b),
            c2=-s2a * math.cos(b),
            c3=c2b * ca2 + sa2,
            r=c2a,
            s=c2b * ca2 - sa2,
        )
    if p is Partition.AB2:
        return BlochX(
            c1=s2a * math.sin(b),
            c2=s2a * math.sin(b),
            c3=c2b * ca2 - sa2,
            r=c2a,
            s=c2b * ca2 + sa2,
        )
    return BlochX(
        c1=s2b * ca2,
        c2=-s2b * ca2,
        c3=c2a,
        r=c2b * ca2 - sa2,
        s=c2b * ca2 + sa2,
    )


def _max_dev(x: BlochX, y: BlochX) -> float:
    return max(abs(u - v) for u, v in zip(x.as_tuple(), y.as_tuple()))


def crosscheck_deviation(sc: UnruhScenario, ab2_coherence: str = "sin") -> float:
    """Largest Bloch-parameter disagreement between the three routes.

    Routes: explicit partial trace, closed-form Bloch table, and the
    closed-form density-matrix entries.
    """
    worst = 0.0
    for p in Partition:
        traced = bloch_from_xstate(reduced_state(sc, p))
        table = bloch_table(sc, p)
        written = bloch_from_entries(*closed_form_entries(sc, p, ab2_coherence))
        worst = max(worst, _max_dev(traced, table), _max_dev(traced, written))
    return worst


def crosscheck(sc: UnruhScenario) -> float:
    """Deviation between the partial trace and the closed forms; raises past 1e-9."""
    dev = crosscheck_deviation(sc)
    if dev > CROSSCHECK_TOL:
        raise CrossCheckFailure(
            f"closed forms disagree with partial trace by {dev:.3e} at "
            f"alpha={sc.alpha!r}, beta={sc.beta!r}"
        )
    return dev
