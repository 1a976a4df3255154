"""Scikit-learn compatible wrapper around the line codec."""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .config import TokenizerConfig
from .pipeline import decode_line, encode_line
from .scanner import resolve_locale


def _check_text_input(X) -> list[str]:
    if isinstance(X, str):
        raise TypeError("expected an iterable of strings, got a single string; wrap it in a list")
    lines = list(X)
    for i, line in enumerate(lines):
        if not isinstance(line, str):
            raise TypeError(f"document {i} is {type(line).__name__}, expected str")
    return lines


class MagnitudeTokenizer(BaseEstimator, TransformerMixin):
    """Rewrite numeric literals as magnitude-annotated token runs.

    A stateless text-to-text transformer: ``transform`` maps each document
    to its encoded form ("price 100400 usd" -> "price 100k 400 usd") and
    ``inverse_transform`` restores canonical numerals. Composes with
    downstream text vectorizers in a Pipeline.

    Parameters mirror TokenizerConfig; see that class for semantics.
    """

    def __init__(self, group_size=3, mode="compound", marker_style="triadic_human",
                 max_int_levels=5, max_frac_depth=5, pad_leading_group=True,
                 preserve_precision=False, locale="western", normalize_digits=False):
        self.group_size = group_size
        self.mode = mode
        self.marker_style = marker_style
        self.max_int_levels = max_int_levels
        self.max_frac_depth = max_frac_depth
        self.pad_leading_group = pad_leading_group
        self.preserve_precision = preserve_precision
        self.locale = locale
        self.normalize_digits = normalize_digits

    def fit(self, X, y=None):
        """Validate parameters and the input; no statistics are learned."""
        _check_text_input(X)
        self.config_ = TokenizerConfig(
            group_size=self.group_size,
            mode=self.mode,
            marker_style=self.marker_style,
            max_int_levels=self.max_int_levels,
            max_frac_depth=self.max_frac_depth,
            pad_leading_group=self.pad_leading_group,
            preserve_precision=self.preserve_precision,
            locale=self.locale,
            normalize_digits=self.normalize_digits,
        )
        self.rule_ = resolve_locale(self.locale)
        return self

    def transform(self, X) -> list[str]:
        check_is_fitted(self, "config_")
        lines = _check_text_input(X)
        return [encode_line(line, self.config_, self.rule_)[0] for line in lines]

    def inverse_transform(self, X) -> list[str]:
        check_is_fitted(self, "config_")
        lines = _check_text_input(X)
        return [decode_line(line, self.config_) for line in lines]
