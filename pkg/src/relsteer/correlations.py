"""
Steering and Bell-CHSH quantifiers for two-qubit X-states.

Steering is witnessed with the three-Pauli entropic uncertainty inequality:
a state is steerable from A to B when the sum of the conditional Shannon
entropies H(sigma_k^B | sigma_k^A), k = x, y, z, drops below 2 bits. Two
independent routes compute that sum:

* :func:`eur_sum` builds the Pauli joint distributions and evaluates
  Shannon entropies directly;
* :func:`si_closed_form` evaluates the algebraic closed form in the Bloch
  parameters, which equals ``6 - 2 * eur_sum``.

All logarithms are base 2.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from relsteer.errors import DomainError
from relsteer.xstate import BlochX, XState, bloch_from_xstate

SI_MAX = 6.0
SI_BOUND = 2.0
B_MAX = 2.0 * math.sqrt(2.0)
B_CLASSICAL = 2.0
LOG_TOL = 1e-12


class Direction(enum.Enum):
    AtoB = "AtoB"
    BtoA = "BtoA"


class Axis(enum.Enum):
    X = "X"
    Y = "Y"
    Z = "Z"


@dataclass(frozen=True)
class SteeringValue:
    si: float
    s: float
    direction: Direction


@dataclass(frozen=True)
class BellValue:
    mu1: float
    mu2: float
    mu3: float
    b: float
    bn: float


@dataclass(frozen=True)
class CorrelationReport:
    s_ab: SteeringValue
    s_ba: SteeringValue
    asym: float
    bell: BellValue


def _xlogx(x: float) -> float:
    if x < -LOG_TOL:
        raise DomainError(f"logarithm argument {x!r} is negative")
    if x <= 0.0:
        return 0.0
    return x * math.log2(x)


def shannon(probs) -> float:
    """Shannon entropy in bits with 0 log 0 = 0."""
    return -sum(_xlogx(p) for p in probs)


def pauli_joint_distribution(b: BlochX, axis: Axis) -> tuple[float, float, float, float]:
    """Outcome probabilities for measuring the same Pauli on both qubits.

    Order is (++, +-, -+, --) with the first sign belonging to the first
    qubit.
    """
    axis = Axis(axis)
    out = []
    for a, bb in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        if axis is Axis.X:
            p = (1.0 + a * bb * b.c1) / 4.0
        elif axis is Axis.Y:
            p = (1.0 + a * bb * b.c2) / 4.0
        else:
            p = (1.0 + a * b.r + bb * b.s + a * bb * b.c3) / 4.0
        out.append(0.0 if -LOG_TOL <= p < 0.0 else p)
    return tuple(out)


def conditional_entropy(b: BlochX, axis: Axis, direction: Direction) -> float:
    """H(measured party | conditioning party) for one Pauli axis, in bits.

    For ``AtoB`` the second qubit is conditioned on the first.
    """
    pp, pm, mp, mm = pauli_joint_distribution(b, axis)
    if Direction(direction) is Direction.AtoB:
        marginal = (pp + pm, mp + mm)
    else:
        marginal = (pp + mp, pm + mm)
    return shannon((pp, pm, mp, mm)) - shannon(marginal)


def eur_sum(b: BlochX, direction: Direction) -> float:
    """Left-hand side of the entropic steering inequality (bound 2)."""
    return sum(conditional_entropy(b, axis, direction) for axis in Axis)


def _pair(x: float) -> float:
    return _xlogx(1.0 + x) + _xlogx(1.0 - x)


def si_closed_form(b: BlochX, direction: Direction) -> float:
    """Closed-form steering inequality value in bits, maximal (6) for a Bell state.

    For ``BtoA`` the two local components are exchanged, so the only
    direction-dependent term is the marginal of the conditioning party.
    """
    c1, c2, c3, r, s = b.as_tuple()
    conditioning = r if Direction(direction) is Direction.AtoB else s
    # grouped so that exchanging r and s is bit-exact
    plus, minus = r + s, r - s
    quad = (_xlogx(1.0 + c3 + plus) + _xlogx(1.0 + c3 - plus)) + (
        _xlogx(1.0 - c3 - minus) + _xlogx(1.0 - c3 + minus)
    )
    return _pair(c1) + _pair(c2) - _pair(conditioning) + 0.5 * quad


def normalize_steering(si: float) -> float:
    return max(0.0, (si - SI_BOUND) / (SI_MAX - SI_BOUND))


def steering(b: BlochX, direction: Direction) -> SteeringValue:
    """Normalized steering quantifier in [0, 1].

    Zero means the entropic witness does not detect steering; the witness is
    sufficient, not necessary.
    """
    direction = Direction(direction)
    si = si_closed_form(b, direction)
    return SteeringValue(si=si, s=normalize_steering(si), direction=direction)


def steering_asymmetry(b: BlochX) -> float:
    return abs(steering(b, Direction.AtoB).s - steering(b, Direction.BtoA).s)


def bell_from_mu(mu1: float, mu2: float, mu3: float) -> BellValue:
    b = 2.0 * max(math.sqrt(mu1 + mu2), math.sqrt(mu1 + mu3))
    bn = max(0.0, (b - B_CLASSICAL) / (B_MAX - B_CLASSICAL))
    return BellValue(mu1=mu1, mu2=mu2, mu3=mu3, b=b, bn=bn)


def bell_chsh(state: XState) -> BellValue:
    """Maximal CHSH value from the Horodecki criterion and its normalization.

    For X-states the correlation matrix is diagonal, so the eigenvalues of
    T^T T are available in closed form from the coherences and c3.
    """
    f, g = abs(state.f), abs(state.g)
    mu1 = 4.0 * (f + g) ** 2
    mu2 = 4.0 * (f - g) ** 2
    mu3 = (state.d1 - state.d2 - state.d3 + state.d4) ** 2
    return bell_from_mu(mu1, mu2, mu3)


def correlation_report(state: XState) -> CorrelationReport:
    b = bloch_from_xstate(state)
    s_ab = steering(b, Direction.AtoB)
    s_ba = steering(b, Direction.BtoA)
    return CorrelationReport(
        s_ab=s_ab,
        s_ba=s_ba,
        asym=abs(s_ab.s - s_ba.s),
        bell=bell_chsh(state),
    )
