"""Typed errors shared across the package.

Scientific guard exits (divergence, guard violations, domain exits) are kept
distinct from plain usage errors so callers can map them to exit codes.
"""


class LqrlError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(LqrlError):
    pass


class NotPositiveDefinite(LqrlError):
    def __init__(self, field: str, detail: str = ""):
        self.field = field
        super().__init__(f"{field} is not positive definite{': ' + detail if detail else ''}")


class NotStable(LqrlError):
    pass


class RhoBarTooSmall(LqrlError):
    pass


class SpectralConditionViolated(LqrlError):
    pass


class NonSymmetricInput(LqrlError):
    pass


class InfeasiblePolicy(LqrlError):
    pass


class NoConvergence(LqrlError):
    def __init__(self, iterations: int, residual: float):
        self.iterations = iterations
        self.residual = residual
        super().__init__(f"no convergence after {iterations} iterations (residual {residual:.3e})")


class NumericalOverflow(LqrlError):
    """State norm exceeded the overflow guard; signals an unstable rollout."""

    def __init__(self, step: int, norm: float):
        self.step = step
        self.norm = norm
        super().__init__(f"state norm {norm:.3e} exceeded overflow guard at step {step}")


class GuardViolated(LqrlError):
    """A boundedness guard (parameter or gradient norm) was exceeded."""

    def __init__(self, step: int, norm: float, bound: float):
        self.step = step
        self.norm = norm
        self.bound = bound
        super().__init__(f"guard violated at step {step}: norm {norm:.3e} > bound {bound:.3e}")


class SingularTheta22(LqrlError):
    pass


class PolicyMismatch(LqrlError):
    pass


class TrajectoryTooShort(LqrlError):
    pass


class IterateLeftDomain(LqrlError):
    """An optimization iterate left the finite-cost domain."""

    def __init__(self, iteration: int, detail: str = ""):
        self.iteration = iteration
        super().__init__(f"iterate left the feasible domain at iteration {iteration}"
                         + (f": {detail}" if detail else ""))


class ConfigInvalid(LqrlError):
    pass


class ModelFileMissing(LqrlError):
    pass
