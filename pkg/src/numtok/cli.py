"""Command-line front end: encode/decode corpora, vocabularies, validation,
and sequence-length statistics.

Exit codes: 0 on success, 1 when any per-line data error occurred, 2 for
usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .codec import classify_token, validate
from .config import MARKER_STYLES, MODES, TokenizerConfig
from .errors import ConfigError, DecodeError
from .pipeline import (
    decode_line,
    decode_record,
    encode_line,
    encode_segments,
    segments_to_json,
)
from .scanner import BUILTIN_LOCALES, resolve_locale
from .stats import compute_stats
from .vocab import build_vocabulary, export_vocabulary

_CONFIG_FLAGS = (
    ("--group-size", "group_size", int),
    ("--mode", "mode", str),
    ("--marker-style", "marker_style", str),
    ("--max-int-levels", "max_int_levels", int),
    ("--max-frac-depth", "max_frac_depth", int),
    ("--locale", "locale", str),
)


def _add_common(p: argparse.ArgumentParser, *, output_default: str = "-") -> None:
    p.add_argument("--config", metavar="FILE", help="JSON file with TokenizerConfig fields")
    for flag, dest, typ in _CONFIG_FLAGS:
        kwargs = {"dest": dest, "type": typ, "default": None}
        if dest == "mode":
            kwargs["choices"] = MODES
        elif dest == "marker_style":
            kwargs["choices"] = MARKER_STYLES
        elif dest == "locale":
            kwargs["choices"] = sorted(BUILTIN_LOCALES)
        p.add_argument(flag, **kwargs)
    p.add_argument("--pad-leading", dest="pad_leading_group",
                   action=argparse.BooleanOptionalAction, default=None)
    p.add_argument("--preserve-precision", dest="preserve_precision",
                   action=argparse.BooleanOptionalAction, default=None)
    p.add_argument("--input", default="-", metavar="FILE")
    p.add_argument("--output", default=output_default, metavar="FILE")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numtok",
        description="Deterministic magnitude-annotated number tokenization.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="rewrite numerals in text as token runs")
    _add_common(p)
    p.add_argument("--format", choices=("tokens", "jsonl"), default="tokens")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("decode", help="restore numerals from token runs")
    _add_common(p)
    p.add_argument("--format", choices=("tokens", "jsonl"), default="tokens")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("vocab", help="emit the token inventory for a config")
    _add_common(p)
    p.add_argument("--format", choices=("lines", "json"), default="lines")

    p = sub.add_parser("validate", help="check token streams, one sequence per line")
    _add_common(p)

    p = sub.add_parser("stats", help="sequence-length report per scheme")
    _add_common(p)
    return parser


def resolve_config(args: argparse.Namespace) -> TokenizerConfig:
    data = TokenizerConfig.from_json_file(args.config).to_dict() if args.config else {}
    for _, dest, _ in _CONFIG_FLAGS:
        value = getattr(args, dest, None)
        if value is not None:
            data[dest] = value
    for dest in ("pad_leading_group", "preserve_precision"):
        value = getattr(args, dest, None)
        if value is not None:
            data[dest] = value
    return TokenizerConfig.from_dict(data)


def _read_lines(path: str) -> list[str]:
    if path == "-":
        return sys.stdin.read().split("\n")
    with open(path, encoding="utf-8") as fh:
        return fh.read().split("\n")


def _write_lines(path: str, lines: list[str]) -> None:
    text = "\n".join(lines)
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _write_bytes(path: str, blob: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(blob)
        sys.stdout.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(blob)


_WORK: dict = {}


def _init_worker(config: TokenizerConfig, fmt: str) -> None:
    _WORK["config"] = config
    _WORK["rule"] = resolve_locale(config.locale)
    _WORK["fmt"] = fmt


def _encode_one(line: str) -> tuple[str, list[tuple[str, str, str]]]:
    config, rule, fmt = _WORK["config"], _WORK["rule"], _WORK["fmt"]
    if fmt == "jsonl":
        segments, errs = encode_segments(line, config, rule)
        out = segments_to_json(segments)
    else:
        out, errs = encode_line(line, config, rule)
    return out, [(e.code, e.surface, e.message) for e in errs]


def _decode_one(line: str) -> tuple[str, list[tuple[str, str, str]]]:
    config, fmt = _WORK["config"], _WORK["fmt"]
    if fmt == "jsonl":
        if not line:
            return "", []
        try:
            record = json.loads(line)
            return decode_record(record, config), []
        except (json.JSONDecodeError, DecodeError, KeyError, TypeError) as exc:
            return line, [("bad_record", line[:80], str(exc))]
    return decode_line(line, config), []


def _map_lines(fn, lines: list[str], workers: int, config: TokenizerConfig,
               fmt: str) -> list[tuple[str, list]]:
    _init_worker(config, fmt)
    if workers <= 1 or len(lines) < 2:
        return [fn(line) for line in lines]
    chunk = max(64, len(lines) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker,
                             initargs=(config, fmt)) as pool:
        return list(pool.map(fn, lines, chunksize=chunk))


def _run_codec(args: argparse.Namespace, fn) -> int:
    config = resolve_config(args)
    lines = _read_lines(args.input)
    results = _map_lines(fn, lines, args.workers, config, args.format)
    out_lines = [r[0] for r in results]
    _write_lines(args.output, out_lines)
    had_errors = False
    for i, (_, errs) in enumerate(results):
        for code, surface, message in errs:
            had_errors = True
            record = {"line": i + 1, "code": code, "surface": surface, "message": message}
            print(json.dumps(record, ensure_ascii=False), file=sys.stderr)
    return 1 if had_errors else 0


def _run_vocab(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    blob = export_vocabulary(build_vocabulary(config), args.format)
    _write_bytes(args.output, blob)
    return 0


def _run_validate(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    lines = _read_lines(args.input)
    if lines and lines[-1] == "":
        lines = lines[:-1]
    out = []
    failed = False
    for i, line in enumerate(lines, start=1):
        words = line.split()
        if not words:
            out.append(f"line {i}: ok")
            continue
        try:
            tokens = [classify_token(w, config) for w in words]
        except DecodeError as exc:
            out.append(f"line {i}: {exc.code}: {exc}")
            failed = True
            continue
        report = validate(tokens, config)
        if report.ok:
            out.append(f"line {i}: ok")
        else:
            where = f" at token {report.index}" if report.index is not None else ""
            out.append(f"line {i}: {report.code}{where}: {report.message}")
            failed = True
    _write_lines(args.output, out + [""])
    return 1 if failed else 0


def _run_stats(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    lines = _read_lines(args.input)
    report = compute_stats(lines, config)
    _write_lines(args.output, [json.dumps(report, ensure_ascii=False), ""])
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "encode":
            return _run_codec(args, _encode_one)
        if args.command == "decode":
            return _run_codec(args, _decode_one)
        if args.command == "vocab":
            return _run_vocab(args)
        if args.command == "validate":
            return _run_validate(args)
        if args.command == "stats":
            return _run_stats(args)
    except ConfigError as exc:
        print(f"numtok: configuration error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"numtok: {exc}", file=sys.stderr)
        return 1
    return 2


if __name__ == "__main__":
    sys.exit(main())
