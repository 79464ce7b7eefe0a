"""EPR steering, steering asymmetry and Bell-CHSH nonlocality under the Unruh channel."""

from relsteer.correlations import (
    Axis,
    BellValue,
    CorrelationReport,
    Direction,
    SteeringValue,
    bell_chsh,
    conditional_entropy,
    correlation_report,
    eur_sum,
    pauli_joint_distribution,
    si_closed_form,
    steering,
    steering_asymmetry,
)
from relsteer.errors import (
    CrossCheckFailure,
    DomainError,
    IoError,
    MonogamyViolation,
    NoRoot,
    NotAState,
    NotPositive,
)
from relsteer.kernels import BACKEND
from relsteer.sweep import (
    GridResult,
    SweepConfig,
    ThresholdResult,
    emit,
    find_asymmetry_onset,
    find_sudden_death_alpha,
    max_asymmetry,
    monogamy_scan,
    point_report,
    run_grid,
)
from relsteer.unruh import (
    Partition,
    TripartiteState,
    UnruhScenario,
    beta_from_acceleration,
    bloch_table,
    crosscheck,
    reduced_state,
    tripartite,
)
from relsteer.xstate import (
    BlochX,
    XState,
    bloch_from_xstate,
    eigenvalues,
    make_xstate,
    marginals,
    xstate_from_bloch,
)

__version__ = "0.1.0"
