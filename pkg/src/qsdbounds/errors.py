"""Exception types raised by the qsdbounds library."""


class QsdError(ValueError):
    """Base class for all qsdbounds input and invariant errors."""


class NonHermitianInput(QsdError):
    """Matrix failed the Hermitian symmetry (or finiteness) check."""


class ConvergenceFailure(QsdError):
    """Eigensolver exceeded its iteration budget."""


class DimensionMismatch(QsdError):
    """Operands have incompatible shapes."""


class DomainError(QsdError):
    """A spectral function was evaluated outside its domain."""


class NotNormalized(QsdError):
    """Probabilities do not sum to one (or contain negative mass)."""


class ProbabilityOutOfRange(QsdError):
    """A probability parameter lies outside [0, 1]."""


class InvalidState(QsdError):
    """A density operator violates positivity, unit trace, or Hermiticity."""


class MixedStateMember(QsdError):
    """An operation restricted to pure states received a mixed state."""


class WrongMemberCount(QsdError):
    """An operation requires a specific number of ensemble members."""


class InconsistentInput(QsdError):
    """Inputs are mutually inconsistent (e.g. entropy exceeds log2 of the state count)."""


class SchemaError(QsdError):
    """An ensemble JSON document is structurally malformed."""
