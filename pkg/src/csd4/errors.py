"""Exceptions shared across the package."""

from __future__ import annotations


class PoleAtKappa(ArithmeticError):
    """Evaluation of a rational function at a zero of its denominator.

    Raised when a coefficient is specialized at a coupling value where an
    eigenvalue-difference denominator vanishes (a resonance).  ``kappa`` is
    the offending value; ``mu`` identifies the coefficient, when known.
    """

    def __init__(self, kappa, mu=None):
        self.kappa = kappa
        self.mu = mu
        where = f" at coefficient mu={mu}" if mu is not None else ""
        super().__init__(f"pole at kappa={kappa}{where}")


class NearSingularity(ValueError):
    """A torus point too close to a node of the interaction potential."""


class ResidualNonzero(RuntimeError):
    """A character product left a remainder outside the admissible shift slots."""


class InternalInconsistency(RuntimeError):
    """An ordering invariant of the coefficient recursion was violated."""
