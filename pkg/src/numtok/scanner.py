"""Locating and parsing numeric literals in raw text.

The scanner splits text into contiguous segments, each either plain text or
one numeric literal. Scanning never fails: anything that does not match the
literal grammar (including digit runs with malpositioned separators or more
than one decimal mark) is passed through as text. Locale rules decide which
separator placements are legal, e.g. 1,234,567 (western), 12,34,567 (indian
lakh/crore), 1,2345 (east asian myriad).
"""

from __future__ import annotations

import json
import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

from .errors import ConfigError, MalformedLiteralError

SIGN_NONE = "none"
SIGN_MINUS = "minus"
SIGN_PLUS = "plus"

_SIGN_BY_CHAR = {"-": SIGN_MINUS, "+": SIGN_PLUS}
_CHAR_BY_SIGN = {SIGN_MINUS: "-", SIGN_PLUS: "+", SIGN_NONE: ""}


@dataclass(frozen=True, slots=True)
class LocaleRule:
    """Digit-grouping convention for one locale.

    ``group_pattern`` lists group sizes starting from the rightmost group;
    the last entry repeats for all remaining groups. Western [3] accepts
    1,234,567; indian [3, 2] accepts 12,34,567; east_asian [4] accepts
    1,2345,6789.
    """

    name: str
    group_pattern: tuple[int, ...]
    separator: str
    decimal_mark: str

    def __post_init__(self) -> None:
        if not self.group_pattern or any(g < 1 for g in self.group_pattern):
            raise ConfigError(f"locale {self.name!r}: group sizes must be positive")
        if len(self.decimal_mark) != 1:
            raise ConfigError(f"locale {self.name!r}: decimal_mark must be one character")
        if self.decimal_mark in self.separator:
            raise ConfigError(
                f"locale {self.name!r}: separator and decimal_mark must be disjoint")


WESTERN = LocaleRule("western", (3,), ",", ".")
INDIAN = LocaleRule("indian", (3, 2), ",", ".")
EAST_ASIAN = LocaleRule("east_asian", (4,), ",", ".")

BUILTIN_LOCALES: dict[str, LocaleRule] = {
    r.name: r for r in (WESTERN, INDIAN, EAST_ASIAN)
}


def resolve_locale(locale: str | Mapping[str, Any] | LocaleRule) -> LocaleRule:
    """Turn a locale name, mapping, or rule into a LocaleRule."""
    if isinstance(locale, LocaleRule):
        return locale
    if isinstance(locale, str):
        try:
            return BUILTIN_LOCALES[locale]
        except KeyError:
            raise ConfigError(
                f"unknown locale {locale!r}; built-ins: {sorted(BUILTIN_LOCALES)}") from None
    if isinstance(locale, Mapping):
        try:
            return LocaleRule(
                name=locale["name"],
                group_pattern=tuple(locale["group_pattern"]),
                separator=locale["separator"],
                decimal_mark=locale["decimal_mark"],
            )
        except KeyError as exc:
            raise ConfigError(f"locale rule is missing field {exc}") from None
    raise ConfigError(f"cannot interpret locale {locale!r}")


def load_locale_rule(path: str | Path) -> LocaleRule:
    """Load a LocaleRule from a JSON file with the LocaleRule field names."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read locale file {path}: {exc}") from exc
    return resolve_locale(data)


@dataclass(frozen=True, slots=True)
class NumericLiteral:
    """One numeric literal, split into sign and exact digit strings.

    ``int_digits`` and ``frac_digits`` hold ASCII digits only, with
    separators removed; ``surface`` is the exact source substring.
    """

    sign: str
    int_digits: str
    frac_digits: str
    surface: str

    @property
    def negative(self) -> bool:
        return self.sign == SIGN_MINUS

    def render(self, decimal_mark: str = ".") -> str:
        """Plain separator-free rendering of sign and digits."""
        out = _CHAR_BY_SIGN[self.sign] + self.int_digits
        if self.frac_digits:
            out += decimal_mark + self.frac_digits
        return out


@dataclass(frozen=True, slots=True)
class ScanSegment:
    kind: str  # "text" | "number"
    span: tuple[int, int]  # byte offsets into the UTF-8 input
    text: str
    literal: NumericLiteral | None = None


def _is_ascii_digit(ch: str) -> bool:
    return "0" <= ch <= "9"


def _is_unicode_digit(ch: str) -> bool:
    return unicodedata.decimal(ch, None) is not None


def normalize_digits(s: str) -> str:
    """Map every Unicode decimal digit to its ASCII form; keep the rest."""
    if s.isascii():
        return s
    out = []
    for ch in s:
        d = unicodedata.decimal(ch, None)
        out.append(chr(ord("0") + d) if d is not None else ch)
    return "".join(out)


def _split_groups(int_surface: str, rule: LocaleRule) -> list[str] | None:
    """Split a separated integer surface into groups; None if malformed."""
    groups = [[]]
    for ch in int_surface:
        if ch in rule.separator:
            groups.append([])
        else:
            groups[-1].append(ch)
    pieces = ["".join(g) for g in groups]
    if any(not p for p in pieces):
        return None
    if len(pieces) > 1:
        pattern = rule.group_pattern
        sizes = [len(p) for p in pieces]
        # Validate sizes right to left; the last pattern entry repeats and
        # the leftmost group may be shorter but never longer.
        for i, size in enumerate(reversed(sizes)):
            expected = pattern[i] if i < len(pattern) else pattern[-1]
            leftmost = i == len(sizes) - 1
            if leftmost:
                if not (1 <= size <= expected):
                    return None
            elif size != expected:
                return None
    return pieces


def format_grouped(int_digits: str, rule: LocaleRule) -> str:
    """Re-insert separators into a plain digit string per the locale rule."""
    sep = rule.separator[0] if rule.separator else ""
    if not sep:
        return int_digits
    pattern = rule.group_pattern
    pieces: list[str] = []
    pos = len(int_digits)
    i = 0
    while pos > 0:
        size = pattern[i] if i < len(pattern) else pattern[-1]
        pieces.append(int_digits[max(0, pos - size):pos])
        pos -= size
        i += 1
    return sep.join(reversed(pieces))


def _parse_run(run: str, rule: LocaleRule, is_digit) -> tuple[str, str] | None:
    """Validate a sign-free candidate run; return (int_digits, frac_digits)."""
    mark = rule.decimal_mark
    n_marks = run.count(mark)
    if n_marks > 1:
        return None
    if n_marks:
        int_surface, frac_surface = run.split(mark)
    else:
        int_surface, frac_surface = run, ""
    if n_marks and not frac_surface:
        return None
    if any(not is_digit(ch) for ch in frac_surface):
        return None
    if int_surface:
        pieces = _split_groups(int_surface, rule)
        if pieces is None or any(not all(is_digit(c) for c in p) for p in pieces):
            return None
        int_digits = "".join(pieces)
    else:
        # A leading-mark literal like ".5"; grouping needs an integer part.
        if not n_marks:
            return None
        int_digits = "0"
    return normalize_digits(int_digits), normalize_digits(frac_surface)


def parse_literal(s: str, rule: LocaleRule | None = None, *,
                  normalize: bool = False) -> NumericLiteral:
    """Parse one literal string (no surrounding text) under a locale rule.

    Raises MalformedLiteralError when the string violates the grammar or its
    separators contradict the rule's group pattern.
    """
    rule = rule or WESTERN
    is_digit = _is_unicode_digit if normalize else _is_ascii_digit
    if not s:
        raise MalformedLiteralError("empty literal")
    sign = SIGN_NONE
    body = s
    if s[0] in _SIGN_BY_CHAR:
        sign = _SIGN_BY_CHAR[s[0]]
        body = s[1:]
    if not body:
        raise MalformedLiteralError(f"{s!r} has no digits")
    allowed = set(rule.separator) | {rule.decimal_mark}
    for ch in body:
        if not is_digit(ch) and ch not in allowed:
            raise MalformedLiteralError(f"{s!r} contains non-numeric character {ch!r}")
    parsed = _parse_run(body, rule, is_digit)
    if parsed is None:
        raise MalformedLiteralError(
            f"{s!r} does not match the numeric literal grammar for locale {rule.name!r}")
    int_digits, frac_digits = parsed
    return NumericLiteral(sign=sign, int_digits=int_digits, frac_digits=frac_digits, surface=s)


def scan(text: str, rule: LocaleRule | None = None, *,
         normalize: bool = False) -> list[ScanSegment]:
    """Split text into text/number segments covering the input exactly.

    A number segment is a maximal run matching the literal grammar: optional
    sign (not preceded by an alphanumeric character), digits with separators
    placed per the rule, at most one decimal mark followed by at least one
    digit. Runs with two or more digit-flanked decimal marks (version strings
    like "3.1.4") and runs whose separators sit in illegal positions are
    emitted untransformed as text.
    """
    rule = rule or WESTERN
    is_digit = _is_unicode_digit if normalize else _is_ascii_digit
    mark = rule.decimal_mark
    seps = set(rule.separator)

    raw: list[tuple[str, int, int, NumericLiteral | None]] = []
    n = len(text)
    i = 0
    text_start = 0

    def flush_text(upto: int) -> None:
        if upto > text_start:
            raw.append(("text", text_start, upto, None))

    while i < n:
        ch = text[i]
        start = i
        sign_char = ""
        if ch in _SIGN_BY_CHAR and i + 1 < n and (
                is_digit(text[i + 1]) or (text[i + 1] == mark and i + 2 < n and is_digit(text[i + 2]))):
            # A sign glued to a letter or digit is an operator/hyphen, not a sign.
            prev = text[i - 1] if i > 0 else ""
            if not prev or not prev.isalnum():
                sign_char = ch
                i += 1
                ch = text[i]
        if is_digit(ch) or (ch == mark and i + 1 < n and is_digit(text[i + 1])):
            # Consume the maximal digit run, letting separators and the
            # decimal mark in only when the next character is a digit.
            j = i
            while j < n:
                c = text[j]
                if is_digit(c):
                    j += 1
                elif (c == mark or c in seps) and j + 1 < n and is_digit(text[j + 1]):
                    j += 2
                else:
                    break
            run = text[i:j]
            parsed = _parse_run(run, rule, is_digit)
            if parsed is not None:
                flush_text(start)
                surface = text[start:j]
                literal = NumericLiteral(
                    sign=_SIGN_BY_CHAR.get(sign_char, SIGN_NONE),
                    int_digits=parsed[0],
                    frac_digits=parsed[1],
                    surface=surface,
                )
                raw.append(("number", start, j, literal))
                text_start = j
            i = j
        else:
            i += 1
    flush_text(n)

    # Convert to byte offsets and materialize segments.
    segments: list[ScanSegment] = []
    byte_pos = 0
    for kind, s0, s1, literal in raw:
        chunk = text[s0:s1]
        blen = len(chunk.encode("utf-8"))
        segments.append(ScanSegment(kind=kind, span=(byte_pos, byte_pos + blen),
                                    text=chunk, literal=literal))
        byte_pos += blen
    return segments
