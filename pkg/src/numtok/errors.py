"""Exception types and the stable error codes they carry.

Every failure mode in the package is identified by a short string code so
callers (CLI, wrappers, tests) can match on behavior instead of message text.
"""

from __future__ import annotations

# Configuration / input errors
INVALID_CONFIG = "invalid_config"
MALFORMED_LITERAL = "malformed_literal"

# Range errors raised while encoding or classifying tokens
LEVEL_OVERFLOW = "level_overflow"
DEPTH_OVERFLOW = "depth_overflow"
MARKER_RANGE = "marker_range"
TERMINATOR_RANGE = "terminator_range"

# Token-level errors
UNKNOWN_TOKEN = "unknown_token"
NON_VALUE_TOKEN = "non_value_token"

# Structural validation rules (first violation wins)
EMPTY_SEQUENCE = "empty_sequence"
MISPLACED_SIGN = "misplaced_sign"
DUPLICATE_LEVEL = "duplicate_level"
NON_MONOTONE_LEVEL = "non_monotone_level"
LEVEL_GAP = "level_gap"
MISSING_LEVEL0 = "missing_level0"
DUPLICATE_DEPTH = "duplicate_depth"
NON_MONOTONE_DEPTH = "non_monotone_depth"
DEPTH_GAP = "depth_gap"
EXTRA_DECIMAL_POINT = "extra_decimal_point"
MISSING_DECIMAL_POINT = "missing_decimal_point"
EMPTY_FRACTION = "empty_fraction"
BAD_PADDING = "bad_padding"
DANGLING_MARKER = "dangling_marker"
MISSING_FRACTION_MARKER = "missing_fraction_marker"
EMPTY_GROUP = "empty_group"
GROUP_TOO_LONG = "group_too_long"
UNEXPECTED_TERMINATOR = "unexpected_terminator"
MISPLACED_TERMINATOR = "misplaced_terminator"
MISSING_TERMINATOR = "missing_terminator"


class NumtokError(Exception):
    """Base error; ``code`` is a stable machine-readable identifier."""

    code = "error"

    def __init__(self, message: str, *, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class ConfigError(NumtokError):
    code = INVALID_CONFIG


class MalformedLiteralError(NumtokError):
    code = MALFORMED_LITERAL


class RangeOverflowError(NumtokError):
    """A literal needs a magnitude level or precision depth beyond the config.

    Carries the offending literal surface (when known) and the magnitude
    (level or depth) that was required.
    """

    def __init__(self, message: str, *, code: str, literal: str | None = None,
                 magnitude: int | None = None):
        super().__init__(message, code=code)
        self.literal = literal
        self.magnitude = magnitude


class MarkerRangeError(NumtokError):
    code = MARKER_RANGE


class NonValueTokenError(NumtokError):
    code = NON_VALUE_TOKEN


class DecodeError(NumtokError):
    """Token classification or sequence-structure failure.

    ``code`` names the violated rule; ``index`` points at the offending token
    within the sequence when applicable.
    """

    def __init__(self, message: str, *, code: str, index: int | None = None):
        super().__init__(message, code=code)
        self.index = index
