"""Exception hierarchy shared across the package."""


class VanishError(Exception):
    """Base class for all package errors."""


class RingMismatchError(VanishError):
    """Operands belong to different polynomial rings."""


class ParseError(VanishError):
    """Invalid polynomial or ideal-file syntax.

    Carries the 0-based offset of the offending token in ``position``.
    """

    def __init__(self, message, position=None):
        super().__init__(message)
        self.raw_message = message
        self.position = position

    def __str__(self):
        if self.position is not None:
            return f"{self.raw_message} (at position {self.position})"
        return self.raw_message


class UnknownVariableError(ParseError):
    """A name in the input is not a variable of the active ring."""


class TermCapExceededError(VanishError):
    """An operation would produce more terms than the configured cap."""


class UnitIdealError(VanishError):
    """The operation requires a proper ideal but received the unit ideal."""


class ZeroDivisorRequestError(VanishError):
    """Colon or saturation by the zero polynomial was requested."""


class WitnessError(VanishError):
    """A saturation witness fails its validity requirements."""


class NonHomogeneousError(VanishError):
    """The operation requires a (weighted-)homogeneous ideal."""


class UncertifiedSymbolicPowerError(VanishError):
    """A computed symbolic power failed one of its certification probes.

    ``diagnostics`` lists the failed probes; the raw saturation result is
    kept in ``ideal`` so callers can report it without trusting it.
    """

    def __init__(self, message, diagnostics=(), ideal=None):
        super().__init__(message)
        self.diagnostics = list(diagnostics)
        self.ideal = ideal


class OrdSearchCapError(VanishError):
    """The order-of-vanishing search exceeded its iteration cap."""
