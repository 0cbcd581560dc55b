"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """Input outside the physical domain of a formula (z <= 0, omega = 0, ...)."""


class PoleError(DomainError):
    """Evaluation exactly on a pole (undamped polarizability on resonance)."""


class ResolutionError(ValueError):
    """Fixed-step integrator asked to run with a step too coarse for the dynamics."""


class ConvergenceError(RuntimeError):
    """Adaptive quadrature did not converge within its evaluation budget.

    Carries the partial value so the caller can report it.
    """

    def __init__(self, message: str, partial_value: float, est_error: float, n_evals: int):
        super().__init__(message)
        self.partial_value = partial_value
        self.est_error = est_error
        self.n_evals = n_evals


class ConfigError(ValueError):
    """Malformed run configuration (CLI / config file)."""
