"""Enumerating the token inventory a configuration can emit.

The compound-mode inventory is the scheme's main cost: one entry per
(group value, marker) pair, so 10^N entries per magnitude level and per
precision depth, plus the unpadded units-group strings and the structural
tokens. Marker mode needs only the markers themselves next to the group
strings, and digit_marker mode just the ten digits and the markers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .codec import TokenKind, fraction_marker, integer_marker, terminator_text
from .config import (
    MODE_COMPOUND,
    MODE_DIGIT_MARKER,
    MODE_MARKER,
    TokenizerConfig,
)
from .values import ExactValue

_KIND_ORDER = {
    TokenKind.SIGN: 0,
    TokenKind.DECIMAL_POINT: 1,
    TokenKind.TERMINATOR: 2,
    TokenKind.DIGIT: 3,
    TokenKind.MARKER: 4,
    TokenKind.GROUP: 5,
    TokenKind.GROUP_WITH_MARKER: 6,
}


@dataclass(frozen=True, slots=True)
class VocabEntry:
    id: int
    text: str
    kind: TokenKind
    value: ExactValue | None = None


@dataclass(frozen=True)
class Vocabulary:
    entries: tuple[VocabEntry, ...]
    config_fingerprint: str
    _by_text: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_by_text", {e.text: e for e in self.entries})

    def __len__(self) -> int:
        return len(self.entries)

    def lookup(self, text: str) -> VocabEntry | None:
        """Exact-match lookup by token text; None when absent."""
        return self._by_text.get(text)

    def __contains__(self, text: str) -> bool:
        return text in self._by_text


@dataclass(frozen=True, slots=True)
class VocabCounts:
    by_kind: dict
    total: int
    suffixed: int
    value_bearing: int


def _structural(config: TokenizerConfig) -> list[tuple[TokenKind, str, ExactValue | None]]:
    items: list[tuple[TokenKind, str, ExactValue | None]] = [
        (TokenKind.SIGN, "-", None),
        (TokenKind.SIGN, "+", None),
        (TokenKind.DECIMAL_POINT, ".", None),
    ]
    if config.preserve_precision:
        items += [(TokenKind.TERMINATOR, terminator_text(i), None)
                  for i in range(1, config.group_size + 1)]
    return items


def build_vocabulary(config: TokenizerConfig | None = None) -> Vocabulary:
    """Enumerate every token the encoder can emit under ``config``.

    Entries are ordered by kind, then level/depth, then group value, so the
    same config always produces the same id assignment.
    """
    config = config or TokenizerConfig()
    n = config.group_size
    base = 10 ** n
    items = _structural(config)

    if config.mode == MODE_DIGIT_MARKER:
        items += [(TokenKind.DIGIT, str(d), ExactValue(d, 0)) for d in range(10)]

    if config.mode in (MODE_MARKER, MODE_DIGIT_MARKER):
        items += [(TokenKind.MARKER, integer_marker(k, config), None)
                  for k in range(1, config.max_int_levels + 1)]
        items += [(TokenKind.MARKER, fraction_marker(d, config), None)
                  for d in range(1, config.max_frac_depth + 1)]

    if config.mode in (MODE_COMPOUND, MODE_MARKER):
        # Unpadded units-group strings, then (marker mode) the zero-padded
        # renderings of suffixed groups that do not already appear.
        items += [(TokenKind.GROUP, str(v), ExactValue(v, 0)) for v in range(base)]
        if config.mode == MODE_MARKER and (config.max_int_levels or config.max_frac_depth):
            items += [(TokenKind.GROUP, str(v).zfill(n), ExactValue(v, 0))
                      for v in range(base) if len(str(v)) < n]

    if config.mode == MODE_COMPOUND:
        for k in range(1, config.max_int_levels + 1):
            marker = integer_marker(k, config)
            items += [(TokenKind.GROUP_WITH_MARKER, str(v).zfill(n) + marker,
                       ExactValue(v, n * k)) for v in range(base)]
            if not config.pad_leading_group:
                # The most significant group renders unpadded, so those
                # surfaces must be present as well.
                items += [(TokenKind.GROUP_WITH_MARKER, str(v) + marker,
                           ExactValue(v, n * k))
                          for v in range(1, base) if len(str(v)) < n]
        for d in range(1, config.max_frac_depth + 1):
            marker = fraction_marker(d, config)
            items += [(TokenKind.GROUP_WITH_MARKER, str(v).zfill(n) + marker,
                       ExactValue(v, -n * d)) for v in range(base)]

    entries = tuple(VocabEntry(id=i, text=text, kind=kind, value=value)
                    for i, (kind, text, value) in enumerate(items))
    return Vocabulary(entries=entries, config_fingerprint=config.fingerprint())


def vocabulary_counts(config: TokenizerConfig | None = None) -> VocabCounts:
    """Closed-form entry counts per kind, matching build_vocabulary()."""
    config = config or TokenizerConfig()
    n = config.group_size
    base = 10 ** n
    short = (10 ** (n - 1)) if n > 1 else 0  # values whose decimal is shorter than n digits
    levels = config.max_int_levels
    depths = config.max_frac_depth

    by_kind = {
        TokenKind.SIGN: 2,
        TokenKind.DECIMAL_POINT: 1,
        TokenKind.TERMINATOR: n if config.preserve_precision else 0,
        TokenKind.DIGIT: 0,
        TokenKind.MARKER: 0,
        TokenKind.GROUP: 0,
        TokenKind.GROUP_WITH_MARKER: 0,
    }
    if config.mode == MODE_DIGIT_MARKER:
        by_kind[TokenKind.DIGIT] = 10
    if config.mode in (MODE_MARKER, MODE_DIGIT_MARKER):
        by_kind[TokenKind.MARKER] = levels + depths
    if config.mode in (MODE_COMPOUND, MODE_MARKER):
        by_kind[TokenKind.GROUP] = base
        if config.mode == MODE_MARKER and (levels or depths):
            by_kind[TokenKind.GROUP] += short
    if config.mode == MODE_COMPOUND:
        suffixed = base * (levels + depths)
        if not config.pad_leading_group and n > 1:
            suffixed += levels * (short - 1)
        by_kind[TokenKind.GROUP_WITH_MARKER] = suffixed

    total = sum(by_kind.values())
    value_bearing = (by_kind[TokenKind.GROUP] + by_kind[TokenKind.DIGIT]
                     + by_kind[TokenKind.GROUP_WITH_MARKER])
    return VocabCounts(by_kind={k.value: v for k, v in by_kind.items()},
                       total=total,
                       suffixed=by_kind[TokenKind.GROUP_WITH_MARKER],
                       value_bearing=value_bearing)


def export_vocabulary(vocab: Vocabulary, fmt: str = "lines") -> bytes:
    """Serialize a vocabulary; byte-deterministic for a given vocabulary.

    lines: one token text per line in id order.
    json:  array of {id, text, kind, coefficient, exponent} objects
           (coefficient/exponent are null for non-value tokens).
    """
    if fmt == "lines":
        return "".join(e.text + "\n" for e in vocab.entries).encode("utf-8")
    if fmt == "json":
        payload = [
            {
                "id": e.id,
                "text": e.text,
                "kind": e.kind.value,
                "coefficient": e.value.coefficient if e.value else None,
                "exponent": e.value.exponent if e.value else None,
            }
            for e in vocab.entries
        ]
        return json.dumps(payload, ensure_ascii=False).encode("utf-8")
    raise ValueError(f"unknown export format {fmt!r}")
