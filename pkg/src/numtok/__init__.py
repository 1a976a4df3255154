"""Deterministic magnitude-annotated number tokenization.

Numeric literals are grouped into fixed-size digit groups; every group above
the units position carries an explicit magnitude marker and every fraction
group a precision marker, so each token names both its digits and its scale.
Encoding is canonical (equal values share one token sequence) and decoding
restores the exact value.
"""

from .config import (
    MARKER_STYLES,
    MODE_COMPOUND,
    MODE_DIGIT_MARKER,
    MODE_MARKER,
    MODES,
    STYLE_SYSTEMATIC,
    STYLE_TRIADIC,
    TokenizerConfig,
)
from .codec import (
    DecodedNumber,
    DigitGroup,
    Token,
    TokenKind,
    TokenSequence,
    ValidationReport,
    canonicalize,
    classify_token,
    decode,
    encode,
    fraction_marker,
    group_fraction,
    group_integer,
    integer_marker,
    token_value,
    validate,
)
from .errors import (
    ConfigError,
    DecodeError,
    MalformedLiteralError,
    MarkerRangeError,
    NonValueTokenError,
    NumtokError,
    RangeOverflowError,
)
from .pipeline import decode_line, decode_tokens, encode_line, encode_text
from .scanner import (
    BUILTIN_LOCALES,
    LocaleRule,
    NumericLiteral,
    ScanSegment,
    format_grouped,
    load_locale_rule,
    normalize_digits,
    parse_literal,
    resolve_locale,
    scan,
)
from .stats import compute_stats, tokens_per_literal
from .values import ExactValue, value_from_digits
from .vocab import (
    VocabCounts,
    Vocabulary,
    VocabEntry,
    build_vocabulary,
    export_vocabulary,
    vocabulary_counts,
)

__version__ = "0.1.0"


def __getattr__(name):
    # scikit-learn is only needed for the estimator wrapper; import it on
    # first use so CLI startup stays fast.
    if name == "MagnitudeTokenizer":
        from .estimator import MagnitudeTokenizer

        return MagnitudeTokenizer
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


__all__ = [
    "BUILTIN_LOCALES",
    "ConfigError",
    "DecodeError",
    "DecodedNumber",
    "DigitGroup",
    "ExactValue",
    "LocaleRule",
    "MagnitudeTokenizer",
    "MalformedLiteralError",
    "MarkerRangeError",
    "MARKER_STYLES",
    "MODE_COMPOUND",
    "MODE_DIGIT_MARKER",
    "MODE_MARKER",
    "MODES",
    "NonValueTokenError",
    "NumericLiteral",
    "NumtokError",
    "RangeOverflowError",
    "ScanSegment",
    "STYLE_SYSTEMATIC",
    "STYLE_TRIADIC",
    "Token",
    "TokenKind",
    "TokenSequence",
    "TokenizerConfig",
    "ValidationReport",
    "VocabCounts",
    "VocabEntry",
    "Vocabulary",
    "build_vocabulary",
    "canonicalize",
    "classify_token",
    "compute_stats",
    "decode",
    "decode_line",
    "decode_tokens",
    "encode",
    "encode_line",
    "encode_text",
    "export_vocabulary",
    "format_grouped",
    "fraction_marker",
    "group_fraction",
    "group_integer",
    "integer_marker",
    "load_locale_rule",
    "normalize_digits",
    "parse_literal",
    "resolve_locale",
    "scan",
    "token_value",
    "tokens_per_literal",
    "validate",
    "value_from_digits",
    "vocabulary_counts",
]
