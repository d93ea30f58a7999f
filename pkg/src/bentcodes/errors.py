"""Exception hierarchy.

Everything raised on purpose by this package derives from BentcodesError, so
callers can catch one type at an API boundary.  A few classes also inherit the
matching builtin (IndexError, ZeroDivisionError) to stay idiomatic.
"""


class BentcodesError(Exception):
    """Base class for all errors raised by bentcodes."""


# ---------------------------------------------------------------- gf2e

class ReducibleModulus(BentcodesError):
    """Field modulus is not irreducible over GF(2)."""


class NotAGenerator(BentcodesError):
    """Claimed generator does not have full multiplicative order."""


class FieldMismatch(BentcodesError):
    """Operands belong to different field instances."""


class InvalidSubfield(BentcodesError):
    """Requested subfield degree does not divide the field degree."""


class DivisionByZero(BentcodesError, ZeroDivisionError):
    """Polynomial or field division by zero."""


class InvalidBasis(BentcodesError):
    """Claimed subfield basis is dependent or not inside the subfield."""


# ---------------------------------------------------------------- boolfun

class OddDimension(BentcodesError):
    """Operation requires an even number of variables."""


class UnsupportedDimension(BentcodesError):
    """Exhaustive enumeration implemented only for this fixed dimension."""


class SchemeMismatch(BentcodesError):
    """Truth tables with different coordinate orders were combined."""


# ---------------------------------------------------------------- bentvec

class PreconditionViolated(BentcodesError):
    """Arguments fail a documented construction precondition."""


class IndexOutOfRange(BentcodesError, IndexError):
    """Component selection index outside 1..ell."""


# ---------------------------------------------------------------- lincode

class DimensionMismatch(BentcodesError):
    """Row lengths or vector lengths are inconsistent."""


class DimensionTooLarge(BentcodesError):
    """Enumeration refused: 2**k exceeds the configured budget."""


class NotADivisor(BentcodesError):
    """Check polynomial does not divide x^n + 1."""


class NonIntegerResult(BentcodesError):
    """Transform produced a non-integral coefficient; input was not a
    weight distribution of a linear code with the stated parameters."""


class NotACodeword(BentcodesError):
    """Vector is not in the span of the code."""


# ---------------------------------------------------------------- designs

class InvalidDesign(BentcodesError):
    """Block collection violates a design invariant (empty block, or
    non-uniform block size)."""


class EmptyWeightClass(BentcodesError):
    """No codeword has the requested weight."""


class NotA2Design(BentcodesError):
    """Pair coverage is not uniform; args carry a witness point pair."""


class WrongSourceDesign(BentcodesError):
    """Design parameters do not match the shape the derivation needs."""


class BudgetExceeded(BentcodesError):
    """Scan refused: block count above the configured cap."""


# ---------------------------------------------------------------- amcheck

class InvalidStrength(BentcodesError):
    """Strength t must satisfy 1 <= t < d."""
