"""Sequence-length accounting for a corpus, per tokenization scheme.

The three suffix schemes are counted from the canonical digit strings using
the same grouping the encoder applies; the digit_level and comma_grouped
baselines are counted analytically from the literal as written (one token
per digit, plus point and sign; comma grouping adds one separator token per
three-digit boundary of the integer part).
"""

from __future__ import annotations

from typing import Iterable

from .config import TokenizerConfig
from .scanner import LocaleRule, NumericLiteral, resolve_locale, scan

SCHEMES = ("compound", "marker", "digit_marker", "digit_level", "comma_grouped")


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def tokens_per_literal(literal: NumericLiteral, scheme: str,
                       config: TokenizerConfig) -> int:
    """Token count one literal would occupy under a scheme.

    Counting works for any magnitude, independent of the configured
    level/depth bounds.
    """
    n = config.group_size
    sign = 0 if literal.sign == "none" else 1
    written_int = len(literal.int_digits)
    written_frac = len(literal.frac_digits)

    if scheme == "digit_level":
        return written_int + written_frac + (1 if written_frac else 0) + sign
    if scheme == "comma_grouped":
        separators = (written_int - 1) // 3
        return written_int + written_frac + (1 if written_frac else 0) + sign + separators

    int_digits = literal.int_digits.lstrip("0") or "0"
    frac = literal.frac_digits
    if not config.preserve_precision:
        frac = frac.rstrip("0")
    gi = _ceil_div(len(int_digits), n)
    gf = _ceil_div(len(frac), n)
    point = 1 if gf else 0
    terminator = 1 if (config.preserve_precision and gf) else 0

    if scheme == "compound":
        return sign + gi + point + gf + terminator
    if scheme == "marker":
        return sign + gi + (gi - 1) + point + 2 * gf + terminator
    if scheme == "digit_marker":
        # The units group renders as the unpadded decimal of its value, so
        # its digit count depends on the actual digits.
        if gi == 1:
            int_digit_tokens = len(int_digits)
        else:
            top_len = n if config.pad_leading_group else len(int_digits) - n * (gi - 1)
            units_len = len(str(int(int_digits[-n:])))
            int_digit_tokens = top_len + n * (gi - 2) + units_len
        frac_digit_tokens = n * gf
        return (sign + int_digit_tokens + (gi - 1) + point
                + frac_digit_tokens + gf + terminator)
    raise ValueError(f"unknown scheme {scheme!r}")


def compute_stats(lines: Iterable[str], config: TokenizerConfig,
                  rule: LocaleRule | None = None) -> dict:
    """Count numbers and per-scheme token totals over a corpus."""
    rule = rule or resolve_locale(config.locale)
    totals = {scheme: 0 for scheme in SCHEMES}
    numbers_seen = 0
    for line in lines:
        for seg in scan(line, rule, normalize=config.normalize_digits):
            if seg.kind != "number":
                continue
            numbers_seen += 1
            for scheme in SCHEMES:
                totals[scheme] += tokens_per_literal(seg.literal, scheme, config)
    per_scheme = {
        scheme: {
            "total_tokens": totals[scheme],
            "numbers_seen": numbers_seen,
            "mean_tokens_per_number": (totals[scheme] / numbers_seen) if numbers_seen else 0.0,
        }
        for scheme in SCHEMES
    }
    return {"numbers_seen": numbers_seen, "per_scheme": per_scheme}
