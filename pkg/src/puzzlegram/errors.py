"""Exception types shared across the package."""


class PuzzlegramError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(PuzzlegramError):
    """A game configuration violates the fixed constants or is unusable."""


class DomainError(PuzzlegramError):
    """An argument is outside its domain (bad player id, region, layer...)."""


class SessionFullError(PuzzlegramError):
    """A join was attempted on a session that already has three players."""


class NotStartedError(PuzzlegramError):
    """A press arrived while the session is still pairing."""


class ProtocolError(PuzzlegramError):
    """A wire message could not be decoded. Carries a machine-readable code."""

    def __init__(self, message: str, code: str = "bad_message"):
        super().__init__(message)
        self.code = code


class AudioDecodeError(PuzzlegramError):
    """A WAV file is malformed or not 16-bit PCM."""


class StemTooShortError(PuzzlegramError):
    """A stem has fewer frames than the number of segments requested."""


class StemLayoutError(PuzzlegramError):
    """The stem directory does not contain exactly the four expected stems."""


class StemConsistencyError(PuzzlegramError):
    """The four stems disagree on sample rate, channels or frame count."""


class SampleSizeError(PuzzlegramError):
    """Not enough sessions/logs to compute the requested statistic."""
