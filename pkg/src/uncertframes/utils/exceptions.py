# === Domain Exceptions ===


class UncertFramesError(Exception):
    """Base class for every error raised by the toolkit."""
    pass


class InputError(UncertFramesError, ValueError):
    """Raised when an input is malformed, non-finite or dimension-mismatched."""
    pass


class RegimeError(InputError):
    """Raised when an exponent p lies outside the regime an operation accepts."""
    pass


class ExcludedInputError(InputError):
    """Raised when the zero vector is passed to a verifier that excludes it."""
    pass


class DegenerateBoundError(UncertFramesError):
    """Raised when a cross-coherence vanishes and the bound would be infinite."""
    pass


class ClassificationError(UncertFramesError):
    """Raised when a frame pair does not satisfy the definition a theorem assumes."""
    pass


class GenerationError(UncertFramesError):
    """Raised when a random construction cannot meet its conditioning cap."""
    pass


class SearchBudgetError(UncertFramesError):
    """Raised when a search exhausts its budget without examining a candidate."""
    pass


class MatrixFormatError(InputError):
    """Raised when a pair file cannot be parsed. The message names the offending row."""

    def __init__(self, message: str, row: int = None):
        self.row = row
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)
