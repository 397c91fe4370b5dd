"""Exception hierarchy; every class knows the CLI exit code it maps to."""


class SqctError(Exception):
    """Base class for all errors raised by the compiler."""
    exit_code: int = 3


class InputError(SqctError):
    """Malformed or out-of-range user input."""
    exit_code = 2


class AngleParseError(InputError):
    pass


class CircuitFormatError(InputError):
    pass


class MatrixFormatError(InputError):
    pass


class NonUnitaryError(InputError):
    pass


class PrecisionError(InputError):
    pass


class CertificationError(SqctError):
    """The certified error bound exceeds the requested precision."""
    exit_code = 1


class InternalError(SqctError):
    """A bug: some exactness invariant of the pipeline failed."""
    exit_code = 3


class SynthesisInvariantError(InternalError):
    pass


class CatalogCorruptError(InternalError):
    pass


class VerificationError(InternalError):
    pass


class FloorUndecidedError(InternalError):
    pass


class NumberTheoryError(SqctError):
    pass


class CompositeModulusError(NumberTheoryError):
    """A probable prime turned out to be composite; callers retry."""
