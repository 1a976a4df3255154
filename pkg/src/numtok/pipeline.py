"""Line-oriented encoding and decoding of mixed text.

Encoding scans a line, rewrites every numeric literal as its token sequence
(tokens joined by single spaces, sign fused onto the following token), and
passes text through verbatim. Decoding finds maximal runs of token-shaped,
single-space-separated words, decodes the longest structurally valid prefix
of each run, and leaves everything else untouched, so unencoded text
survives a decode pass byte for byte.

Plain token streams cannot distinguish prose that happens to look like an
encoded run from a real one; the JSONL format carries spans and literal
fields per segment and is the lossless representation.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache

from . import errors as E
from .codec import TokenSequence, classify_token, decode, encode
from .config import MODE_COMPOUND, MODE_MARKER, STYLE_TRIADIC, TokenizerConfig
from .errors import DecodeError, NumtokError, RangeOverflowError
from .scanner import LocaleRule, resolve_locale, scan


@dataclass(frozen=True, slots=True)
class LineError:
    """One recoverable per-line failure (e.g. a literal out of range)."""

    span: tuple[int, int]
    surface: str
    code: str
    message: str


def render_tokens(tokens: TokenSequence) -> str:
    """Join token texts with single spaces, fusing a sign onto its number."""
    parts: list[str] = []
    fuse = ""
    for tok in tokens:
        if tok.kind.value == "sign":
            fuse = tok.text
            continue
        parts.append(fuse + tok.text)
        fuse = ""
    if fuse:
        parts.append(fuse)
    return " ".join(parts)


def encode_segments(line: str, config: TokenizerConfig,
                    rule: LocaleRule | None = None) -> tuple[list[dict], list[LineError]]:
    """Scan one line and encode its numbers; returns JSON-ready segments."""
    rule = rule or resolve_locale(config.locale)
    segments: list[dict] = []
    errs: list[LineError] = []
    for seg in scan(line, rule, normalize=config.normalize_digits):
        if seg.kind == "text":
            segments.append({"kind": "text", "span": list(seg.span), "text": seg.text})
            continue
        try:
            seq = encode(seg.literal, config)
        except RangeOverflowError as exc:
            err = LineError(span=seg.span, surface=seg.text, code=exc.code, message=str(exc))
            errs.append(err)
            segments.append({"kind": "error", "span": list(seg.span),
                             "surface": seg.text, "code": err.code, "message": err.message})
            continue
        segments.append({
            "kind": "number",
            "span": list(seg.span),
            "surface": seg.text,
            "sign": seg.literal.sign,
            "int_digits": seg.literal.int_digits,
            "frac_digits": seg.literal.frac_digits,
            "tokens": seq.texts(),
        })
    return segments, errs


def encode_line(line: str, config: TokenizerConfig,
                rule: LocaleRule | None = None) -> tuple[str, list[LineError]]:
    """Rewrite the numbers in one line as token runs; text stays verbatim.

    Out-of-range literals are left untransformed and reported as LineErrors.
    """
    rule = rule or resolve_locale(config.locale)
    parts: list[str] = []
    errs: list[LineError] = []
    for seg in scan(line, rule, normalize=config.normalize_digits):
        if seg.kind == "text":
            parts.append(seg.text)
            continue
        try:
            seq = encode(seg.literal, config)
        except RangeOverflowError as exc:
            errs.append(LineError(span=seg.span, surface=seg.text,
                                  code=exc.code, message=str(exc)))
            parts.append(seg.text)
            continue
        parts.append(render_tokens(seq))
    return "".join(parts), errs


# --- plain-text decoding -----------------------------------------------------

@lru_cache(maxsize=32)
def _run_regex(group_size: int, mode: str, marker_style: str) -> re.Pattern:
    n = group_size
    digits = rf"\d{{1,{n}}}"
    if marker_style == STYLE_TRIADIC:
        marker = r"(?:[kmbtq]|p+)"
        guard = r"[0-9kmbtqpT\[\]+-]"
    else:
        marker = r"(?:⟨E[+-]\d+⟩)"
        guard = r"[0-9⟨⟩ET\[\]+-]"
    alts = [r"\[T\d+\]", r"\."]
    if mode == MODE_COMPOUND:
        alts.append(digits + marker + "?")
    elif mode == MODE_MARKER:
        alts.append(digits)
        alts.append(marker)
    else:
        alts.append(r"\d")
        alts.append(marker)
    token = "(?:" + "|".join(alts) + ")"
    pattern = rf"(?<!{guard})[+-]?{token}(?: {token})*(?!{guard})"
    return re.compile(pattern)


def _max_tokens_per_number(config: TokenizerConfig) -> int:
    groups = config.max_int_levels + 1 + config.max_frac_depth
    if config.mode == MODE_COMPOUND:
        body = groups
    elif config.mode == MODE_MARKER:
        body = 2 * groups
    else:
        body = groups * (config.group_size + 1)
    return body + 3  # sign, decimal point, terminator


def _classify_words(words: list[str], config: TokenizerConfig) -> list[list | None]:
    """Each word becomes a token list ([sign, value] when fused) or None."""
    out: list[list | None] = []
    for word in words:
        texts = [word]
        if len(word) > 1 and word[0] in "+-":
            texts = [word[0], word[1:]]
        try:
            out.append([classify_token(t, config) for t in texts])
        except (DecodeError, NumtokError):
            out.append(None)
    return out


def decode_line(line: str, config: TokenizerConfig) -> str:
    """Replace decodable token runs with canonical numerals.

    Words that look like tokens but do not form a structurally valid
    sequence are kept verbatim, so plain prose and unencoded numbers pass
    through unchanged.
    """
    pattern = _run_regex(config.group_size, config.mode, config.marker_style)
    window = _max_tokens_per_number(config)
    out: list[str] = []
    pos = 0
    for m in pattern.finditer(line):
        start, end = m.span()
        out.append(line[pos:start])
        words = m.group().split(" ")
        toks = _classify_words(words, config)
        pieces: list[str] = []
        i = 0
        while i < len(words):
            decoded = None
            if toks[i] is not None:
                limit = i
                while limit < len(words) and toks[limit] is not None:
                    limit += 1
                for k in range(min(limit - i, window), 0, -1):
                    candidate = [t for ts in toks[i:i + k] for t in ts]
                    try:
                        decoded = decode(candidate, config)
                    except DecodeError:
                        continue
                    pieces.append(decoded.literal.surface)
                    i += k
                    break
            if decoded is None:
                pieces.append(words[i])
                i += 1
        out.append(" ".join(pieces))
        pos = end
    out.append(line[pos:])
    return "".join(out)


# --- JSONL records ------------------------------------------------------------

def segments_to_json(segments: list[dict]) -> str:
    return json.dumps({"segments": segments}, ensure_ascii=False)


def decode_record(record: dict, config: TokenizerConfig) -> str:
    """Rebuild the text of one JSONL record, restoring canonical numerals."""
    parts: list[str] = []
    for seg in record.get("segments", []):
        kind = seg.get("kind")
        if kind == "text":
            parts.append(seg["text"])
        elif kind == "number":
            seq = TokenSequence(tokens=tuple(
                classify_token(t, config) for t in seg["tokens"]))
            parts.append(decode(seq, config).literal.surface)
        elif kind == "error":
            parts.append(seg["surface"])
        else:
            raise DecodeError(f"unknown segment kind {kind!r}", code=E.UNKNOWN_TOKEN)
    return "".join(parts)


# --- in-process convenience API -----------------------------------------------

def encode_text(text: str, config: TokenizerConfig | None = None) -> list[str]:
    """Token list for one line of text (text words pass through as items)."""
    config = config or TokenizerConfig()
    line, _ = encode_line(text, config)
    return line.split()


def decode_tokens(tokens: list[str], config: TokenizerConfig | None = None) -> str:
    """Inverse of encode_text: rebuild the line from a token list."""
    config = config or TokenizerConfig()
    fused: list[str] = []
    for t in tokens:
        if fused and fused[-1] in "+-":
            fused[-1] = fused[-1] + t
        else:
            fused.append(t)
    return decode_line(" ".join(fused), config)
