"""Exception hierarchy shared by every module of the package."""


class RelSteerError(Exception):
    """Base class for all package errors."""


class DomainError(RelSteerError, ValueError):
    """An argument lies outside the domain where a quantity is defined."""


class NotAState(DomainError):
    """Matrix entries do not describe a unit-trace density matrix."""


class NotPositive(DomainError):
    """Matrix entries violate positive semidefiniteness."""


class NoRoot(RelSteerError):
    """A bracketing search found the same indicator value at both ends."""


class ContractFailure(RelSteerError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class CrossCheckFailure(ContractFailure):
    pass


class MonogamyViolation(ContractFailure):
    def __init__(self, value, alpha, beta):
        self.value = value
        self.alpha = alpha
        self.beta = beta
        super().__init__(
            f"steering of anti-Bob by both Alice and Bob reaches {value:.3e} "
            f"at alpha={alpha:.6f}, beta={beta:.6f}"
        )


class IoError(RelSteerError, OSError):
    """Output could not be written."""
