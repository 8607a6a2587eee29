"""Exception hierarchy shared by all modules.

Guard violations (deliberate refusal to start an exponential enumeration)
are separated from validation errors so the CLI can map them to distinct
exit codes.
"""


class MatroidWeightsError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(MatroidWeightsError):
    """Malformed input file; carries a human-readable location."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f"line {line}"
            if column is not None:
                loc += f", column {column}"
            loc += ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column


class GuardExceeded(MatroidWeightsError):
    """An enumeration guard refused to run an exponential computation."""


class GroundSetTooLarge(GuardExceeded):
    pass


class OracleGuardExceeded(GuardExceeded):
    pass


class TooLarge(GuardExceeded):
    """Requested family instance exceeds its construction size cap."""


# --- algebra ---------------------------------------------------------------

class NonPrime(MatroidWeightsError):
    pass


class FieldTooLarge(MatroidWeightsError):
    pass


class ColumnOutOfRange(MatroidWeightsError):
    pass


class NotFullRowRank(MatroidWeightsError):
    pass


# --- matroid ---------------------------------------------------------------

class ElementOutOfRange(MatroidWeightsError):
    pass


class RankOutOfRange(MatroidWeightsError):
    pass


class ElongationOutOfRange(MatroidWeightsError):
    pass


class TruncationOutOfRange(MatroidWeightsError):
    pass


class RankHypothesisViolated(MatroidWeightsError):
    """Paving/sparse-paving tests require rank at least two."""


class InvalidBases(MatroidWeightsError):
    """Explicit basis family violates the exchange axiom or cardinality."""


# --- codes / weights / symbolic --------------------------------------------

class ROutOfRange(MatroidWeightsError):
    pass


class NotStrictlyIncreasing(MatroidWeightsError):
    pass


class DimensionMismatch(MatroidWeightsError):
    pass


# --- families ---------------------------------------------------------------

class BadParams(MatroidWeightsError):
    pass


class InvalidSteiner(MatroidWeightsError):
    """Block family is not a Steiner system; names an offending t-subset."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DivisibilityViolated(MatroidWeightsError):
    pass


# --- configurations ----------------------------------------------------------

class MixedDegreesForEqualDegreeBound(MatroidWeightsError):
    """The equal-degree resurgence lower bound needs a constant degree vector."""
