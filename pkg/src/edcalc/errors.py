"""Exception hierarchy shared across the package."""


class EdcalcError(Exception):
    """Base class for all errors raised by edcalc."""


class MalformedElement(EdcalcError):
    """A group element's coordinates do not fit the ambient decomposition."""


class MalformedMuGenerator(MalformedElement):
    pass


class TrivialSocle(EdcalcError):
    """Requested p-socle is trivial (p does not divide the group order)."""


class TooLarge(EdcalcError):
    """Brute-force enumeration refused: group exceeds the size cap."""


class UnsupportedComponent(EdcalcError):
    """No tabulated n-value / representation for this character component."""


class UnsupportedFamilyMix(EdcalcError):
    """Simple factors from incompatible families in one product."""


class BadParameter(EdcalcError):
    """Factor parameter outside the supported range (Spin(4), Sp(<6), ...)."""


class NotReduced(EdcalcError):
    """The central subgroup splits off a full center factor."""


class WrongFamily(EdcalcError):
    """A family-specific predicate was called on the wrong factor family."""


class NotSpinFamily(WrongFamily):
    pass


class NotSpFamily(WrongFamily):
    pass


class NotSLFamily(WrongFamily):
    pass


class NoAdmissibleLift(EdcalcError):
    """No lift of the socle basis satisfies the component restrictions."""


class HypothesisFailed(EdcalcError):
    """Upper-bound hypotheses (support cover / generic freeness) violated."""


class ExtensionHypothesisFailed(EdcalcError):
    """Central-extension transfer preconditions do not hold."""


class DslError(EdcalcError):
    """Problem with a textual group description; carries a position."""

    def __init__(self, message: str, pos: int = -1):
        self.pos = pos
        if pos >= 0:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class DslSyntaxError(DslError):
    pass


class ArityMismatch(DslError):
    pass


class ValueOutOfRange(DslError):
    pass
