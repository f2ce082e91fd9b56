"""Exception hierarchy shared by all modules."""


class TopologyError(ValueError):
    """Base class for every error raised on invalid input."""


class MalformedInput(TopologyError):
    """Input that cannot be interpreted at all (bad references, bad shapes, bad JSON)."""


class AxiomViolation(TopologyError):
    """A family of subsets that is not a topology."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class MissingEmptyOrFull(AxiomViolation):
    pass


class NotClosedUnderUnion(AxiomViolation):
    pass


class NotClosedUnderIntersection(AxiomViolation):
    pass


class DuplicateLabel(AxiomViolation):
    pass


class NotAPreorder(TopologyError):
    pass


class BudgetExceeded(TopologyError):
    pass


class NotDiscrete(TopologyError):
    pass


class NotT0(TopologyError):
    pass


class CarrierMismatch(TopologyError):
    pass


class InvalidCandidate(MalformedInput):
    """A flow candidate whose schedule or map table is structurally broken."""


class ConsistencyError(AssertionError):
    """Two independent derivations of the same fact disagreed."""
