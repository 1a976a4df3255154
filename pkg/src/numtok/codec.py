"""Encoding numeric literals into magnitude-annotated token sequences.

The integer part is grouped right to left, the fractional part left to
right, into groups of ``group_size`` digits. Every group above the units
position carries a magnitude marker (k, m, b, t, q for 10^3..10^15 with
3-digit groups), every fraction group a precision marker ("p" repeated by
depth, so "pp" means 10^-6). Grouping plus zero padding makes the mapping
canonical: numerically equal literals produce identical token sequences,
and decoding recovers the exact value.

Three emission modes share the same grouping:

* compound:     one fused token per group, e.g. ``111k`` (bijective with its
                value 111000)
* marker:       digits and marker as two tokens, e.g. ``111`` ``k``
* digit_marker: one token per digit with the marker closing each group,
                e.g. ``1`` ``m`` ``2`` ``3`` ``4`` ``k`` ``5`` ``6`` ``7``
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, NamedTuple

from . import errors as E
from .config import (
    MODE_COMPOUND,
    MODE_DIGIT_MARKER,
    MODE_MARKER,
    STYLE_TRIADIC,
    TRIADIC_INTEGER_MARKERS,
    TokenizerConfig,
)
from .errors import DecodeError, MarkerRangeError, RangeOverflowError
from .scanner import SIGN_MINUS, SIGN_NONE, SIGN_PLUS, NumericLiteral
from .values import ExactValue, require_value


class TokenKind(str, Enum):
    GROUP = "group"
    GROUP_WITH_MARKER = "group_with_marker"
    MARKER = "marker"
    DIGIT = "digit"
    DECIMAL_POINT = "decimal_point"
    SIGN = "sign"
    TERMINATOR = "terminator"


VALUE_BEARING_KINDS = frozenset(
    {TokenKind.GROUP, TokenKind.GROUP_WITH_MARKER, TokenKind.DIGIT})


class Token(NamedTuple):
    kind: TokenKind
    text: str
    value: ExactValue | None = None


class DigitGroup(NamedTuple):
    """One digit group: ``value`` scaled by 10^(N*level) for integer groups
    (level >= 0) or 10^(-N*level) for fraction groups (level >= 1).

    ``sig_len`` counts the group's digits before zero padding; it matters
    only for the last fraction group.
    """

    value: int
    level: int
    sig_len: int


_K_GROUP = TokenKind.GROUP
_K_GWM = TokenKind.GROUP_WITH_MARKER
_K_MARKER = TokenKind.MARKER
_K_DIGIT = TokenKind.DIGIT
_K_POINT = TokenKind.DECIMAL_POINT
_K_SIGN = TokenKind.SIGN
_K_TERM = TokenKind.TERMINATOR


@dataclass(frozen=True, slots=True)
class TokenSequence:
    tokens: tuple[Token, ...]
    source: NumericLiteral | None = None

    def __iter__(self):
        return iter(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def texts(self) -> list[str]:
        return [t.text for t in self.tokens]


class DecodedNumber(NamedTuple):
    literal: NumericLiteral
    value: ExactValue


@dataclass(frozen=True, slots=True)
class ValidationReport:
    ok: bool
    code: str | None = None
    message: str | None = None
    index: int | None = None


def group_integer(int_digits: str, group_size: int,
                  max_levels: int | None = None) -> list[DigitGroup]:
    """Group an integer digit string right to left, most significant first.

    Raises RangeOverflowError when the top group would sit above
    ``max_levels``.
    """
    if not int_digits or not int_digits.isdigit():
        raise E.MalformedLiteralError(f"integer digits required, got {int_digits!r}")
    n = group_size
    n_groups = (len(int_digits) + n - 1) // n
    top_level = n_groups - 1
    if max_levels is not None and top_level > max_levels:
        raise RangeOverflowError(
            f"integer part {int_digits!r} needs magnitude level {top_level}, "
            f"but the configuration allows at most {max_levels}",
            code=E.LEVEL_OVERFLOW, literal=int_digits, magnitude=top_level)
    groups = []
    end = len(int_digits)
    for level in range(n_groups):
        start = max(0, end - n)
        piece = int_digits[start:end]
        groups.append(DigitGroup(value=int(piece), level=level, sig_len=len(piece)))
        end = start
    groups.reverse()
    return groups


def group_fraction(frac_digits: str, group_size: int,
                   max_depth: int | None = None) -> list[DigitGroup]:
    """Group a fraction digit string left to right, right-padding the last
    group with zeros to ``group_size`` digits.

    ``sig_len`` of the final group records the pre-padding digit count.
    Raises RangeOverflowError when the depth exceeds ``max_depth``.
    """
    if not frac_digits:
        return []
    if not frac_digits.isdigit():
        raise E.MalformedLiteralError(f"fraction digits required, got {frac_digits!r}")
    n = group_size
    n_groups = (len(frac_digits) + n - 1) // n
    if max_depth is not None and n_groups > max_depth:
        raise RangeOverflowError(
            f"fraction part {frac_digits!r} needs precision depth {n_groups}, "
            f"but the configuration allows at most {max_depth}",
            code=E.DEPTH_OVERFLOW, literal=frac_digits, magnitude=n_groups)
    groups = []
    for d in range(n_groups):
        piece = frac_digits[d * n:(d + 1) * n]
        sig = len(piece)
        groups.append(DigitGroup(value=int(piece.ljust(n, "0")), level=d + 1, sig_len=sig))
    return groups


@lru_cache(maxsize=None)
def _marker_string(side: str, idx: int, style: str, n: int) -> str:
    if style == STYLE_TRIADIC:
        return TRIADIC_INTEGER_MARKERS[idx - 1] if side == "int" else "p" * idx
    return f"⟨E{'+' if side == 'int' else '-'}{n * idx}⟩"


def integer_marker(level: int, config: TokenizerConfig) -> str:
    """Marker string for integer magnitude level ``level`` (>= 1)."""
    if not 1 <= level <= config.max_int_levels:
        raise MarkerRangeError(
            f"integer level {level} outside 1..{config.max_int_levels}")
    return _marker_string("int", level, config.marker_style, config.group_size)


def fraction_marker(depth: int, config: TokenizerConfig) -> str:
    """Marker string for fraction precision depth ``depth`` (>= 1)."""
    if not 1 <= depth <= config.max_frac_depth:
        raise MarkerRangeError(
            f"fraction depth {depth} outside 1..{config.max_frac_depth}")
    return _marker_string("frac", depth, config.marker_style, config.group_size)


def terminator_text(sig_len: int) -> str:
    return f"[T{sig_len}]"


def canonicalize(literal: NumericLiteral, config: TokenizerConfig | None = None) -> NumericLiteral:
    """Canonical form: integer part stripped of leading zeros, fraction part
    stripped of trailing zeros then right-padded to a multiple of the group
    size. Idempotent; the numeric value is unchanged.
    """
    n = (config or TokenizerConfig()).group_size
    int_digits = literal.int_digits.lstrip("0") or "0"
    frac = literal.frac_digits.rstrip("0")
    if frac and len(frac) % n:
        frac = frac.ljust(len(frac) + n - len(frac) % n, "0")
    return NumericLiteral(sign=literal.sign, int_digits=int_digits,
                          frac_digits=frac, surface=literal.surface)


def encode(literal: NumericLiteral, config: TokenizerConfig | None = None) -> TokenSequence:
    """Encode one literal into its token sequence under ``config``.

    Raises RangeOverflowError when the literal's magnitude or precision lies
    outside the configured level/depth bounds.
    """
    config = config or TokenizerConfig()
    n = config.group_size
    mode = config.mode
    style = config.marker_style
    int_digits = literal.int_digits.lstrip("0") or "0"
    frac_digits = literal.frac_digits
    if not config.preserve_precision:
        frac_digits = frac_digits.rstrip("0")

    try:
        int_groups = group_integer(int_digits, n, config.max_int_levels)
        frac_groups = group_fraction(frac_digits, n, config.max_frac_depth)
    except RangeOverflowError as exc:
        raise RangeOverflowError(
            f"cannot encode {literal.surface!r}: {exc}",
            code=exc.code, literal=literal.surface, magnitude=exc.magnitude) from None

    tokens: list[Token] = []
    append = tokens.append
    if literal.sign == SIGN_MINUS:
        append(Token(_K_SIGN, "-"))
    elif literal.sign == SIGN_PLUS:
        append(Token(_K_SIGN, "+"))

    pad_top = config.pad_leading_group
    top_level = int_groups[0].level
    for value, level, _ in int_groups:
        if level == 0:
            digits = str(value)
            if mode == MODE_DIGIT_MARKER:
                tokens.extend(_digit_tokens(digits, 0))
            else:
                append(Token(_K_GROUP, digits, ExactValue(value, 0)))
            continue
        marker = _marker_string("int", level, style, n)
        digits = str(value)
        if pad_top or level != top_level:
            digits = digits.zfill(n)
        if mode == MODE_COMPOUND:
            append(Token(_K_GWM, digits + marker, ExactValue(value, n * level)))
        elif mode == MODE_MARKER:
            append(Token(_K_GROUP, digits, ExactValue(value, n * level)))
            append(Token(_K_MARKER, marker))
        else:
            tokens.extend(_digit_tokens(digits, n * level))
            append(Token(_K_MARKER, marker))

    if frac_groups:
        append(Token(_K_POINT, "."))
        for value, depth, _ in frac_groups:
            marker = _marker_string("frac", depth, style, n)
            digits = str(value).zfill(n)
            if mode == MODE_COMPOUND:
                append(Token(_K_GWM, digits + marker, ExactValue(value, -n * depth)))
            elif mode == MODE_MARKER:
                append(Token(_K_GROUP, digits, ExactValue(value, -n * depth)))
                append(Token(_K_MARKER, marker))
            else:
                tokens.extend(_digit_tokens(digits, -n * depth))
                append(Token(_K_MARKER, marker))
        if config.preserve_precision:
            append(Token(_K_TERM, terminator_text(frac_groups[-1].sig_len)))

    return TokenSequence(tokens=tuple(tokens), source=literal)


def _digit_tokens(digits: str, group_exponent: int) -> list[Token]:
    # The leftmost digit of a group scaled by 10^e sits at place e + len - 1.
    top_place = group_exponent + len(digits) - 1
    return [Token(_K_DIGIT, ch, ExactValue(int(ch), top_place - i))
            for i, ch in enumerate(digits)]


def token_value(token: Token) -> ExactValue:
    """Exact value of a value-bearing token (group, compound group, digit)."""
    return require_value(token.value, f"token {token.text!r} of kind {token.kind.value}")


# --- token classification (text -> Token) -----------------------------------

_TRIADIC_LEVEL_BY_CHAR = {c: i + 1 for i, c in enumerate(TRIADIC_INTEGER_MARKERS)}


@lru_cache(maxsize=65536)
def _parse_marker_impl(text: str, style: str, n: int) -> tuple[str, int] | None:
    if style == STYLE_TRIADIC:
        if text in _TRIADIC_LEVEL_BY_CHAR:
            return ("int", _TRIADIC_LEVEL_BY_CHAR[text])
        if text and not text.strip("p"):
            return ("frac", len(text))
        return None
    if text.startswith("⟨E") and text.endswith("⟩") and len(text) >= 5:
        body = text[2:-1]
        if body[0] not in "+-" or not body[1:].isdigit():
            return None
        exp = int(body[1:])
        if exp == 0 or exp % n:
            return None
        return ("int", exp // n) if body[0] == "+" else ("frac", exp // n)
    return None


def _parse_marker_text(text: str, config: TokenizerConfig) -> tuple[str, int] | None:
    """Return ("int", level) or ("frac", depth) when text is a marker."""
    return _parse_marker_impl(text, config.marker_style, config.group_size)


@lru_cache(maxsize=65536)
def _split_compound_impl(text: str, style: str, n: int) -> tuple[str, str, int] | None:
    if style == STYLE_TRIADIC:
        i = len(text)
        while i > 0 and text[i - 1] not in "0123456789":
            i -= 1
        digits, marker = text[:i], text[i:]
    else:
        i = text.find("⟨")
        if i < 0:
            return None
        digits, marker = text[:i], text[i:]
    if not digits or not marker:
        return None
    parsed = _parse_marker_impl(marker, style, n)
    if parsed is None:
        return None
    return (digits, parsed[0], parsed[1])


def _split_compound(text: str, config: TokenizerConfig) -> tuple[str, str, int] | None:
    """Split compound token text into (digits, side, level)."""
    return _split_compound_impl(text, config.marker_style, config.group_size)


def classify_token(text: str, config: TokenizerConfig) -> Token:
    """Map a surface string to a Token under ``config`` (mode-aware).

    Raises DecodeError with code ``unknown_token`` for unrecognizable text
    and with a range code for structurally valid but out-of-bounds markers.
    """
    n = config.group_size
    mode = config.mode
    if text == ".":
        return Token(TokenKind.DECIMAL_POINT, text)
    if text == "-" or text == "+":
        return Token(TokenKind.SIGN, text)
    if text.startswith("[T") and text.endswith("]"):
        body = text[2:-1]
        if body.isdigit():
            sig = int(body)
            if not 1 <= sig <= n:
                raise DecodeError(f"terminator {text!r} outside [T1]..[T{n}]",
                                  code=E.TERMINATOR_RANGE)
            return Token(TokenKind.TERMINATOR, text)
        raise DecodeError(f"unrecognized token {text!r}", code=E.UNKNOWN_TOKEN)

    if text.isdigit():
        if mode == MODE_DIGIT_MARKER:
            if len(text) == 1:
                return Token(TokenKind.DIGIT, text, ExactValue(int(text), 0))
            raise DecodeError(f"digit mode takes single digits, got {text!r}",
                              code=E.UNKNOWN_TOKEN)
        if len(text) <= n:
            return Token(TokenKind.GROUP, text, ExactValue(int(text), 0))
        raise DecodeError(f"group {text!r} longer than {n} digits", code=E.UNKNOWN_TOKEN)

    if mode in (MODE_MARKER, MODE_DIGIT_MARKER):
        parsed = _parse_marker_text(text, config)
        if parsed is not None:
            side, idx = parsed
            _check_marker_bounds(side, idx, text, config)
            return Token(TokenKind.MARKER, text)

    if mode == MODE_COMPOUND:
        split = _split_compound(text, config)
        if split is not None:
            digits, side, idx = split
            if not digits.isdigit() or len(digits) > n:
                raise DecodeError(f"unrecognized token {text!r}", code=E.UNKNOWN_TOKEN)
            _check_marker_bounds(side, idx, text, config)
            exp = n * idx if side == "int" else -n * idx
            return Token(TokenKind.GROUP_WITH_MARKER, text, ExactValue(int(digits), exp))

    raise DecodeError(f"unrecognized token {text!r}", code=E.UNKNOWN_TOKEN)


def _check_marker_bounds(side: str, idx: int, text: str, config: TokenizerConfig) -> None:
    if side == "int" and idx > config.max_int_levels:
        raise DecodeError(
            f"marker {text!r} means level {idx}, above the configured "
            f"{config.max_int_levels}", code=E.LEVEL_OVERFLOW)
    if side == "frac" and idx > config.max_frac_depth:
        raise DecodeError(
            f"marker {text!r} means depth {idx}, below the configured "
            f"{config.max_frac_depth}", code=E.DEPTH_OVERFLOW)


# --- structural parsing ------------------------------------------------------

@dataclass(slots=True)
class _Structure:
    sign: str = SIGN_NONE
    int_items: list = field(default_factory=list)   # (value, level, digits_text)
    frac_items: list = field(default_factory=list)  # (value, depth, digits_text)
    terminator_sig: int | None = None


def _tokens_of(tokens: TokenSequence | Iterable[Token]) -> tuple[Token, ...]:
    if isinstance(tokens, TokenSequence):
        return tokens.tokens
    return tuple(tokens)


def _fail(code: str, message: str, index: int) -> None:
    raise DecodeError(message, code=code, index=index)


def _parse_structure(toks: tuple[Token, ...], config: TokenizerConfig) -> _Structure:
    """Parse a token sequence into sign/integer/fraction structure.

    Enforces the ordering rules shared by all modes: one optional leading
    sign, integer levels strictly descending and contiguous down to 0, at
    most one decimal point sitting between the parts, fraction depths
    strictly ascending and contiguous from 1, terminator last and only in
    preserve_precision mode. Group padding is checked separately.
    """
    if not toks:
        _fail(E.EMPTY_SEQUENCE, "empty token sequence", 0)
    st = _Structure()
    n = config.group_size
    mode = config.mode
    style = config.marker_style
    max_int = config.max_int_levels
    max_frac = config.max_frac_depth
    int_items = st.int_items
    frac_items = st.frac_items
    k_gwm, k_group, k_digit = _K_GWM, _K_GROUP, _K_DIGIT
    k_marker, k_point, k_sign, k_term = _K_MARKER, _K_POINT, _K_SIGN, _K_TERM

    i = 0
    if toks[0].kind is k_sign:
        st.sign = SIGN_MINUS if toks[0].text == "-" else SIGN_PLUS
        i = 1

    in_fraction = False
    pending_digits: list[str] = []  # digit-mode accumulator
    pending_group: str | None = None  # marker-mode group awaiting its marker

    def close_pending_int(idx: int) -> None:
        nonlocal pending_group
        if pending_digits:
            text = "".join(pending_digits)
            if len(text) > n:
                _fail(E.GROUP_TOO_LONG, f"group {text!r} longer than {n} digits", idx)
            int_items.append((int(text), 0, text))
            pending_digits.clear()
        if pending_group is not None:
            int_items.append((int(pending_group), 0, pending_group))
            pending_group = None

    for idx in range(i, len(toks)):
        tok = toks[idx]
        kind = tok.kind
        if st.terminator_sig is not None:
            _fail(E.MISPLACED_TERMINATOR, "terminator must be the last token", idx)

        if kind is k_gwm:
            if mode != MODE_COMPOUND:
                _fail(E.UNKNOWN_TOKEN,
                      f"compound token {tok.text!r} in {mode} mode", idx)
            split = _split_compound_impl(tok.text, style, n)
            if split is None:
                _fail(E.UNKNOWN_TOKEN, f"unrecognized token {tok.text!r}", idx)
            digits, side, level = split
            if len(digits) > n:
                _fail(E.GROUP_TOO_LONG, f"group {digits!r} longer than {n} digits", idx)
            if side == "int":
                if in_fraction:
                    _fail(E.NON_MONOTONE_LEVEL,
                          "integer-magnitude token after the decimal point", idx)
                if level > max_int:
                    _fail(E.LEVEL_OVERFLOW, f"level {level} above configured maximum", idx)
                int_items.append((int(digits), level, digits))
            else:
                if not in_fraction:
                    _fail(E.MISSING_DECIMAL_POINT,
                          "fraction token before the decimal point", idx)
                if level > max_frac:
                    _fail(E.DEPTH_OVERFLOW, f"depth {level} beyond configured maximum", idx)
                frac_items.append((int(digits), level, digits))
            continue

        if kind is k_group or kind is k_digit:
            text = tok.text
            if not text.isdigit():
                _fail(E.UNKNOWN_TOKEN, f"bad group token {text!r}", idx)
            if mode == MODE_DIGIT_MARKER:
                pending_digits.extend(text)
                continue
            if len(text) > n:
                _fail(E.GROUP_TOO_LONG, f"group {text!r} longer than {n} digits", idx)
            if mode == MODE_COMPOUND:
                if in_fraction:
                    _fail(E.MISSING_FRACTION_MARKER,
                          "fraction group must carry its marker", idx)
                int_items.append((int(text), 0, text))
            else:  # marker mode: a group waits for its marker unless it is the units group
                if pending_group is not None:
                    if in_fraction:
                        _fail(E.MISSING_FRACTION_MARKER,
                              "fraction group must carry its marker", idx)
                    int_items.append((int(pending_group), 0, pending_group))
                pending_group = text
            continue

        if kind is k_marker:
            parsed = _parse_marker_impl(tok.text, style, n)
            if parsed is None:
                _fail(E.UNKNOWN_TOKEN, f"unrecognized marker {tok.text!r}", idx)
            side, level = parsed
            if mode == MODE_COMPOUND:
                _fail(E.DANGLING_MARKER, "bare marker in compound mode", idx)
            if mode == MODE_DIGIT_MARKER:
                if not pending_digits:
                    _fail(E.DANGLING_MARKER, "marker without preceding digits", idx)
                digits_text = "".join(pending_digits)
                pending_digits.clear()
            else:
                if pending_group is None:
                    _fail(E.DANGLING_MARKER, "marker without preceding group", idx)
                digits_text = pending_group
                pending_group = None
            if len(digits_text) > n:
                _fail(E.GROUP_TOO_LONG, f"group {digits_text!r} longer than {n} digits", idx)
            if side == "int":
                if in_fraction:
                    _fail(E.NON_MONOTONE_LEVEL,
                          "integer-magnitude marker after the decimal point", idx)
                if level > max_int:
                    _fail(E.LEVEL_OVERFLOW, f"level {level} above configured maximum", idx)
                int_items.append((int(digits_text), level, digits_text))
            else:
                if not in_fraction:
                    _fail(E.MISSING_DECIMAL_POINT,
                          "fraction marker before the decimal point", idx)
                if level > max_frac:
                    _fail(E.DEPTH_OVERFLOW, f"depth {level} beyond configured maximum", idx)
                frac_items.append((int(digits_text), level, digits_text))
            continue

        if kind is k_point:
            if in_fraction:
                _fail(E.EXTRA_DECIMAL_POINT, "more than one decimal point", idx)
            close_pending_int(idx)
            in_fraction = True
            continue

        if kind is k_term:
            if not config.preserve_precision:
                _fail(E.UNEXPECTED_TERMINATOR,
                      "terminator token without preserve_precision", idx)
            if not in_fraction or (not frac_items and not pending_digits
                                   and pending_group is None):
                _fail(E.MISPLACED_TERMINATOR, "terminator before any fraction group", idx)
            if pending_digits or pending_group is not None:
                _fail(E.MISSING_FRACTION_MARKER, "fraction group missing its marker", idx)
            st.terminator_sig = int(tok.text[2:-1])
            if st.terminator_sig > n or st.terminator_sig < 1:
                _fail(E.TERMINATOR_RANGE, f"terminator {tok.text!r} outside [T1]..[T{n}]", idx)
            continue

        if kind is k_sign:
            _fail(E.MISPLACED_SIGN, "sign allowed only at the first position", idx)

        _fail(E.UNKNOWN_TOKEN, f"unrecognized token {tok.text!r}", idx)

    last = len(toks) - 1
    if in_fraction:
        if pending_digits or pending_group is not None:
            _fail(E.MISSING_FRACTION_MARKER, "fraction group missing its marker", last)
        if not st.frac_items:
            _fail(E.EMPTY_FRACTION, "decimal point without fraction groups", last)
    else:
        close_pending_int(last)

    # Integer levels: strictly descending, contiguous, ending at level 0.
    levels = [lvl for _, lvl, _ in st.int_items]
    if not levels:
        _fail(E.MISSING_LEVEL0, "no integer group", last)
    for a, b in zip(levels, levels[1:]):
        if b == a:
            _fail(E.DUPLICATE_LEVEL, f"magnitude level {a} appears twice", last)
        if b > a:
            _fail(E.NON_MONOTONE_LEVEL, f"magnitude level rises from {a} to {b}", last)
        if b != a - 1:
            _fail(E.LEVEL_GAP, f"magnitude level {a - 1} is missing", last)
    if levels[-1] != 0:
        _fail(E.MISSING_LEVEL0, "integer groups must end at the units group", last)

    # Fraction depths: strictly ascending, contiguous, starting at 1.
    depths = [d for _, d, _ in st.frac_items]
    if depths:
        if depths[0] != 1:
            _fail(E.DEPTH_GAP, "fraction depths must start at 1", last)
        for a, b in zip(depths, depths[1:]):
            if b == a:
                _fail(E.DUPLICATE_DEPTH, f"precision depth {a} appears twice", last)
            if b < a:
                _fail(E.NON_MONOTONE_DEPTH, f"precision depth falls from {a} to {b}", last)
            if b != a + 1:
                _fail(E.DEPTH_GAP, f"precision depth {a + 1} is missing", last)

    if config.preserve_precision and depths and st.terminator_sig is None:
        _fail(E.MISSING_TERMINATOR,
              "preserve_precision sequences end with a terminator", last)
    return st


def _check_padding(st: _Structure, config: TokenizerConfig) -> None:
    n = config.group_size
    top_level = st.int_items[0][1]
    for value, level, text in st.int_items:
        if level == 0:
            expected = str(value)
        elif level == top_level and not config.pad_leading_group:
            expected = str(value)
        else:
            expected = str(value).zfill(n)
        if text != expected:
            raise DecodeError(
                f"group {text!r} at level {level} should read {expected!r}",
                code=E.BAD_PADDING)
    for value, depth, text in st.frac_items:
        expected = str(value).zfill(n)
        if text != expected:
            raise DecodeError(
                f"fraction group {text!r} at depth {depth} should read {expected!r}",
                code=E.BAD_PADDING)


def validate(tokens: TokenSequence | Iterable[Token],
             config: TokenizerConfig | None = None) -> ValidationReport:
    """Check a token sequence against the structural rules; report the first
    violation (including padding, which encode() always satisfies)."""
    config = config or TokenizerConfig()
    toks = _tokens_of(tokens)
    try:
        st = _parse_structure(toks, config)
        _check_padding(st, config)
    except DecodeError as exc:
        return ValidationReport(ok=False, code=exc.code, message=str(exc), index=exc.index)
    return ValidationReport(ok=True)


def decode(tokens: TokenSequence | Iterable[Token],
           config: TokenizerConfig | None = None, *,
           strict: bool = False) -> DecodedNumber:
    """Decode a token sequence back into a literal and its exact value.

    Lenient decoding (the default) accepts groups whose digits are not
    padded the way the encoder writes them; strict decoding additionally
    enforces the exact padding for the given config.
    """
    config = config or TokenizerConfig()
    toks = _tokens_of(tokens)
    st = _parse_structure(toks, config)
    if strict:
        _check_padding(st, config)

    n = config.group_size
    parts = [str(st.int_items[0][0])]
    parts.extend(str(v).zfill(n) for v, _, _ in st.int_items[1:])
    int_digits = "".join(parts).lstrip("0") or "0"

    frac_padded = "".join(str(v).zfill(n) for v, _, _ in st.frac_items)
    frac_digits = frac_padded
    if st.terminator_sig is not None and st.frac_items:
        cut = (len(st.frac_items) - 1) * n + st.terminator_sig
        frac_digits = frac_padded[:cut]

    coeff = int((int_digits + frac_padded) or "0")
    if st.sign == SIGN_MINUS:
        coeff = -coeff
    value = ExactValue(coeff, -len(frac_padded))
    sign_char = "-" if st.sign == SIGN_MINUS else ("+" if st.sign == SIGN_PLUS else "")
    surface = sign_char + int_digits + ("." + frac_digits if frac_digits else "")
    literal = NumericLiteral(sign=st.sign, int_digits=int_digits,
                             frac_digits=frac_digits, surface=surface)
    return DecodedNumber(literal=literal, value=value)


def classify_all(texts: Iterable[str], config: TokenizerConfig) -> TokenSequence:
    """Classify a list of surface strings into a TokenSequence."""
    return TokenSequence(tokens=tuple(classify_token(t, config) for t in texts))
