"""Tokenizer configuration.

A config pins every degree of freedom the codec has, so that one config plus
one input always yields one output.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Mapping

from .errors import ConfigError

MODE_COMPOUND = "compound"
MODE_MARKER = "marker"
MODE_DIGIT_MARKER = "digit_marker"
MODES = (MODE_COMPOUND, MODE_MARKER, MODE_DIGIT_MARKER)

STYLE_TRIADIC = "triadic_human"
STYLE_SYSTEMATIC = "systematic"
MARKER_STYLES = (STYLE_TRIADIC, STYLE_SYSTEMATIC)

# Human-readable magnitude suffixes for 3-digit groups, by level.
TRIADIC_INTEGER_MARKERS = ("k", "m", "b", "t", "q")


@dataclass(frozen=True, slots=True)
class TokenizerConfig:
    """All knobs of the number codec.

    group_size:         digits per group (N >= 1)
    mode:               "compound" fuses digits and marker into one token;
                        "marker" emits them as two tokens; "digit_marker"
                        emits single digits with a marker closing each group
    marker_style:       "triadic_human" uses k/m/b/t/q and repeated "p"
                        (requires group_size 3); "systematic" uses reserved
                        "⟨E+n⟩"/"⟨E-n⟩" markers for any group size
    max_int_levels:     highest suffixed magnitude level above the units group
    max_frac_depth:     deepest fraction group
    pad_leading_group:  zero-pad the most significant suffixed group to N
                        digits (canonical); False renders it unpadded
    preserve_precision: append a "[Tn]" terminator recording how many of the
                        final fraction group's digits were written, and keep
                        written trailing zeros instead of canonicalizing them
    locale:             name of a built-in separator rule, or a mapping with
                        LocaleRule fields
    normalize_digits:   accept any Unicode decimal digit and map it to ASCII
    """

    group_size: int = 3
    mode: str = MODE_COMPOUND
    marker_style: str = STYLE_TRIADIC
    max_int_levels: int = 5
    max_frac_depth: int = 5
    pad_leading_group: bool = True
    preserve_precision: bool = False
    locale: str | Mapping[str, Any] = "western"
    normalize_digits: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.group_size, int) or self.group_size < 1:
            raise ConfigError(f"group_size must be an integer >= 1, got {self.group_size!r}")
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.marker_style not in MARKER_STYLES:
            raise ConfigError(
                f"marker_style must be one of {MARKER_STYLES}, got {self.marker_style!r}")
        if not isinstance(self.max_int_levels, int) or self.max_int_levels < 0:
            raise ConfigError(f"max_int_levels must be an integer >= 0, got {self.max_int_levels!r}")
        if not isinstance(self.max_frac_depth, int) or self.max_frac_depth < 0:
            raise ConfigError(f"max_frac_depth must be an integer >= 0, got {self.max_frac_depth!r}")
        if self.marker_style == STYLE_TRIADIC:
            if self.group_size != 3:
                raise ConfigError("triadic_human markers require group_size 3")
            if self.max_int_levels > len(TRIADIC_INTEGER_MARKERS):
                raise ConfigError(
                    "triadic_human markers support at most "
                    f"{len(TRIADIC_INTEGER_MARKERS)} integer levels")

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        if not isinstance(d["locale"], str):
            d["locale"] = dict(d["locale"])
        return d

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "TokenizerConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config fields: {sorted(unknown)}")
        return cls(**dict(data))

    @classmethod
    def from_json_file(cls, path: str | Path) -> "TokenizerConfig":
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config file {path}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError(f"config file {path} must hold a JSON object")
        return cls.from_dict(data)

    def fingerprint(self) -> str:
        import hashlib

        blob = json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False)
        return hashlib.sha256(blob.encode("utf-8")).hexdigest()[:16]
