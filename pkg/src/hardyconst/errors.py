"""Semantic exception hierarchy.

Every error carries a machine-readable ``name`` used by the CLI when writing
diagnostics ("error: <name>: <detail>").
"""


class HardyConstError(Exception):
    """Base class for all errors raised by this package."""

    name = "error"


class DomainError(HardyConstError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""

    name = "domain-error"


class OutsideDomainError(DomainError):
    """The parameter point is not strictly inside the admissible region."""

    name = "outside-domain"


class SingularityError(DomainError):
    """Evaluation requested exactly at a singular point of the formula."""

    name = "singularity"


class InfeasibleTauError(HardyConstError):
    """The reparameterization tau left [0, 1], where omega_q is undefined."""

    name = "infeasible-tau"


class NoRootError(HardyConstError):
    """The implicit equation has no root in the open bracket.

    Treated as an operational domain exclusion, not a solver defect: the
    admissible region has an upper-left boundary that is not available in
    closed form, and points beyond it produce a single-signed residual.
    """

    name = "no-root"


class BoundaryCaseError(HardyConstError):
    """A step function induced a boundary parameter point (e.g. constant h)."""

    name = "boundary-case"


class InconsistentMomentsError(HardyConstError, ValueError):
    """Moment values violate the power-mean chain beyond rounding tolerance."""

    name = "inconsistent-moments"


class StencilError(HardyConstError):
    """A finite-difference stencil point left the admissible region."""

    name = "stencil"


class ConvergenceError(HardyConstError, RuntimeError):
    """An iteration cap was exceeded; indicates an internal defect."""

    name = "internal"
