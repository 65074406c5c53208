"""Exception hierarchy shared by every module.

Two top branches matter for the CLI exit-code contract: ``DataError`` maps to
exit code 1 and ``ConfigError`` to exit code 2.
"""


class UpdrsBenchError(Exception):
    """Base class for all errors raised by this package."""


class DataError(UpdrsBenchError):
    """A problem with the input data (file, schema, values)."""


class ConfigError(UpdrsBenchError):
    """A problem with requested parameters rather than with the data."""


class MissingFile(DataError):
    pass


class SchemaMismatch(DataError):
    """CSV header does not match the expected column set."""


class ParseError(DataError):
    """A data cell could not be parsed; message carries row and column."""


class RangeError(DataError):
    """A value is outside its documented domain."""


class EmptyInput(DataError):
    pass


class EmptySubset(DataError):
    """A filtering step removed every row."""


class LengthMismatch(UpdrsBenchError):
    """Paired vectors have different lengths."""


class DegenerateInput(UpdrsBenchError):
    """A statistic is undefined for this input (e.g. zero variance)."""


class DimensionMismatch(UpdrsBenchError):
    """Query width does not match the fitted feature count."""


class NonFiniteQuery(UpdrsBenchError):
    pass


class KTooLarge(ConfigError):
    """Neighbor count outside [1, n_training_rows]."""


class TooFewRows(DataError):
    """Not enough rows to fit the requested model."""


class BadFoldSpec(ConfigError):
    """Cross-validation fold specification is unsatisfiable."""
