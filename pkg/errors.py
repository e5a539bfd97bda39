# errors.py


class PipelineError(Exception):
    """Base class for every error the toolkit raises on purpose."""
    exit_code = 1

    def __init__(self, detail="", line=None):
        self.detail = detail
        self.line = line
        if line is not None:
            detail = f"line {line}: {detail}"
        super().__init__(detail)

    @property
    def kind(self):
        name = type(self).__name__
        return name[:-len("Error")] if name.endswith("Error") else name


class ValidationError(PipelineError):
    """Input did not meet a precondition (exit code 1)."""
    exit_code = 1


class NumericError(PipelineError):
    """Numeric failure during training or verification (exit code 2)."""
    exit_code = 2


# --- ingest ---
class MissingHeaderError(ValidationError):
    pass


class UnknownLabelError(ValidationError):
    pass


class MalformedLineError(ValidationError):
    pass


class NonMonotonicTimestampError(ValidationError):
    pass


class DurationOutOfRangeError(ValidationError):
    pass


class IrregularSamplingError(ValidationError):
    pass


class HeaderMismatchError(ValidationError):
    pass


class RowArityMismatchError(ValidationError):
    pass


# --- dsp / features / scaler ---
class AlphaOutOfRangeError(ValidationError):
    pass


class EmptySeriesError(ValidationError):
    pass


class EmptyFitSetError(ValidationError):
    pass


class ArityMismatchError(ValidationError):
    pass


# --- nn ---
class InvalidSpecError(ValidationError):
    pass


class BadMagicError(ValidationError):
    pass


class VersionMismatchError(ValidationError):
    pass


class TruncatedFileError(ValidationError):
    pass


class NonFiniteLossError(NumericError):
    pass


class GradCheckFailedError(NumericError):
    pass


# --- experiment / synth / cli ---
class ClassTooSmallError(ValidationError):
    pass


class InvalidBudgetError(ValidationError):
    pass


class InvalidParamsError(ValidationError):
    pass


class ConfigError(ValidationError):
    pass
