"""Exception types raised by matroidfix."""


class MatroidError(ValueError):
    """Base class for malformed input and contract violations."""


class EmptyFamily(MatroidError):
    pass


class UnequalCardinality(MatroidError):
    pass


class ExchangeViolation(MatroidError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CircuitContainment(MatroidError):
    pass


class EmptyCircuit(MatroidError):
    pass


class UnknownElement(MatroidError):
    pass


class LabelCollision(MatroidError):
    pass


class TooSmall(MatroidError):
    pass


class TooLarge(MatroidError):
    pass


class BadParams(MatroidError):
    pass


class UnknownName(MatroidError, KeyError):
    pass


class NotABasis(MatroidError):
    pass


class DegreeMismatch(MatroidError):
    pass


class NotAGroup(MatroidError):
    pass


class HypothesisFail(MatroidError):
    pass


class NotTransitive(RuntimeError):
    """Clone relation failed transitivity; indicates an engine bug."""


class CapExceeded(RuntimeError):
    """A permutation group would exceed the configured element cap."""

    def __init__(self, cap, found):
        super().__init__(f"group has at least {found} elements, cap is {cap}")
        self.cap = cap
        self.found = found


class RankDeficient(UserWarning):
    """A transversal presentation matches fewer than |Y| elements."""
