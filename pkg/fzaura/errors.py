"""Exceptions raised by fzaura. Everything derives from FzAuraError, which is a ValueError."""


class FzAuraError(ValueError):
  """Base class of all domain errors."""


class UniverseError(FzAuraError):
  """Malformed universe or unknown point."""


class UniverseMismatchError(FzAuraError):
  """Operands live on different universes."""


class GradeError(FzAuraError):
  """A membership grade outside of [0, 1]."""


class TopologyError(FzAuraError):
  """A family of fuzzy sets that is not a Chang fuzzy topology.

  Parameters
  ----------
  message : str
    Human readable description.
  report : AxiomReport or None
    The violation report, when the error comes from axiom verification.

  """

  def __init__(self, message, report=None):
    super(TopologyError, self).__init__(message)
    self.report = report


class ScopeError(FzAuraError):
  """A scope function breaking the diagonal axiom or strict membership."""


class InapplicableError(FzAuraError):
  """The operation cannot be evaluated on this input (e.g. needs an enumerated topology)."""


class WeightError(FzAuraError):
  """Criteria weights that do not sum to one."""


class ProblemError(FzAuraError):
  """Malformed decision problem or pipeline parameter."""


class InternalError(FzAuraError, AssertionError):
  """An invariant guaranteed by theory was observed violated. Always a library bug."""
