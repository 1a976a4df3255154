import json
import random
from fractions import Fraction

import pytest

from numtok.codec import TokenKind, encode
from numtok.config import TokenizerConfig
from numtok.scanner import NumericLiteral, parse_literal
from numtok.vocab import (
    Vocabulary,
    build_vocabulary,
    export_vocabulary,
    vocabulary_counts,
)
from conftest import random_literal

CANON = TokenizerConfig()


def lit(s: str) -> NumericLiteral:
    return parse_literal(s)


# --- counts -----------------------------------------------------------------

def test_compound_suffixed_count_is_ten_thousand():
    counts = vocabulary_counts(CANON)
    assert counts.suffixed == 10_000
    assert counts.by_kind["group_with_marker"] == 10_000
    assert counts.by_kind["group"] == 1000  # bare units-group strings


def test_marker_mode_has_ten_markers():
    counts = vocabulary_counts(TokenizerConfig(mode="marker"))
    assert counts.by_kind["marker"] == 10
    vocab = build_vocabulary(TokenizerConfig(mode="marker"))
    markers = [e.text for e in vocab.entries if e.kind is TokenKind.MARKER]
    assert markers == ["k", "m", "b", "t", "q", "p", "pp", "ppp", "pppp", "ppppp"]


def test_n1_thirty_three_positions_is_330_value_bearing():
    cfg = TokenizerConfig(group_size=1, marker_style="systematic",
                          max_int_levels=32, max_frac_depth=0)
    counts = vocabulary_counts(cfg)
    assert counts.value_bearing == 330
    vocab = build_vocabulary(cfg)
    assert sum(1 for e in vocab.entries if e.value is not None) == 330


def test_added_level_adds_exactly_one_thousand():
    for style, base_levels in (("triadic_human", 4), ("systematic", 5)):
        a = vocabulary_counts(TokenizerConfig(marker_style=style, max_int_levels=base_levels))
        b = vocabulary_counts(TokenizerConfig(marker_style=style, max_int_levels=base_levels + 1))
        assert b.suffixed - a.suffixed == 1000


def test_zero_levels_zero_suffixed():
    counts = vocabulary_counts(TokenizerConfig(max_int_levels=0, max_frac_depth=0))
    assert counts.suffixed == 0


def _random_config(rng: random.Random) -> TokenizerConfig:
    n = rng.choice([1, 2, 3, 4])
    style = "triadic_human" if (n == 3 and rng.random() < 0.5) else "systematic"
    max_levels = rng.randint(0, 5 if style == "triadic_human" else 7)
    return TokenizerConfig(
        group_size=n,
        mode=rng.choice(["compound", "marker", "digit_marker"]),
        marker_style=style,
        max_int_levels=max_levels,
        max_frac_depth=rng.randint(0, 6),
        pad_leading_group=rng.random() < 0.5,
        preserve_precision=rng.random() < 0.5,
    )


def test_counts_match_enumeration_for_random_configs():
    rng = random.Random(99)
    for _ in range(50):
        cfg = _random_config(rng)
        counts = vocabulary_counts(cfg)
        vocab = build_vocabulary(cfg)
        assert counts.total == len(vocab), cfg
        by_kind = {}
        for e in vocab.entries:
            by_kind[e.kind.value] = by_kind.get(e.kind.value, 0) + 1
        for kind, expected in counts.by_kind.items():
            assert by_kind.get(kind, 0) == expected, (cfg, kind)


# --- closure and reachability --------------------------------------------------

@pytest.mark.parametrize("cfg", [
    CANON,
    TokenizerConfig(pad_leading_group=False),
    TokenizerConfig(mode="marker"),
    TokenizerConfig(mode="marker", pad_leading_group=False),
    TokenizerConfig(mode="digit_marker"),
    TokenizerConfig(preserve_precision=True),
    TokenizerConfig(group_size=2, marker_style="systematic", pad_leading_group=False),
])
def test_closure_every_emitted_token_is_in_vocabulary(cfg):
    vocab = build_vocabulary(cfg)
    rng = random.Random(4)
    n = cfg.group_size
    for _ in range(1500):
        s = random_literal(rng, max_int_digits=n * (cfg.max_int_levels + 1),
                           max_frac_digits=n * cfg.max_frac_depth)
        for tok in encode(lit(s), cfg):
            assert tok.text in vocab, (s, tok.text, cfg)


def _emitted_texts_exhaustive(cfg: TokenizerConfig) -> set:
    """Every token text reachable by encoding, for small bounds."""
    n = cfg.group_size
    out = set()
    max_int = 10 ** (n * (cfg.max_int_levels + 1))
    for i in range(max_int):
        out.update(t.text for t in encode(lit(str(i)), cfg))
    for frac_len in range(1, n * cfg.max_frac_depth + 1):
        for f in range(10 ** frac_len):
            frac = str(f).zfill(frac_len)
            surface = "0." + frac
            out.update(t.text for t in encode(lit(surface), cfg))
    out.update(t.text for t in encode(lit("-1"), cfg))
    out.update(t.text for t in encode(lit("+1"), cfg))
    return out


@pytest.mark.parametrize("n", [1, 2])
def test_reachability_exhaustive_small(n):
    cfg = TokenizerConfig(group_size=n, marker_style="systematic",
                          max_int_levels=2, max_frac_depth=2)
    vocab = build_vocabulary(cfg)
    emitted = _emitted_texts_exhaustive(cfg)
    # A zero group at the extreme level/depth cannot occur: the top integer
    # group is never zero and the final fraction group is never all zeros.
    from numtok.codec import fraction_marker, integer_marker
    unreachable = {
        "0".zfill(n) + integer_marker(cfg.max_int_levels, cfg),
        "0".zfill(n) + fraction_marker(cfg.max_frac_depth, cfg),
    }
    vocab_texts = {e.text for e in vocab.entries}
    assert emitted <= vocab_texts
    assert vocab_texts - emitted == unreachable


def test_reachability_sampled_n3():
    vocab = build_vocabulary(CANON)
    rng = random.Random(21)
    emitted = set()
    for _ in range(4000):
        s = random_literal(rng)
        emitted.update(t.text for t in encode(lit(s), CANON))
    # targeted literals for sparsely sampled entries
    emitted.update(t.text for t in encode(lit("1" + "0" * 15), CANON))
    assert emitted <= {e.text for e in vocab.entries}
    for probe in ["012k", "999q", "000k", "001ppppp", "0", "999"]:
        assert probe in vocab


# --- injectivity -----------------------------------------------------------------

def test_compound_text_to_value_injective():
    # Every compound entry names a distinct (digits, scale) pair. As plain
    # rationals the all-zero groups necessarily coincide (000k and 000m are
    # both zero), so the rational-value map is injective over the nonzero
    # entries and the raw pair map over all of them.
    vocab = build_vocabulary(CANON)
    value_bearing = [e for e in vocab.entries if e.value is not None]
    pairs = {(e.value.coefficient, e.value.exponent) for e in value_bearing}
    assert len(pairs) == len(value_bearing)
    nonzero = [e for e in value_bearing if e.value.coefficient != 0]
    rationals = {e.value.as_fraction() for e in nonzero}
    assert len(rationals) == len(nonzero)


# --- lookup ----------------------------------------------------------------------

def test_lookup_examples():
    vocab = build_vocabulary(CANON)
    entry = vocab.lookup("012k")
    assert entry is not None
    assert entry.value.as_fraction() == Fraction(12_000)
    entry = vocab.lookup("111k")
    assert (entry.value.coefficient, entry.value.exponent) == (111, 3)
    assert vocab.lookup("zzz") is None


# --- export ----------------------------------------------------------------------

def test_export_lines_structural_and_marker_subset():
    vocab = build_vocabulary(TokenizerConfig(mode="marker"))
    lines = export_vocabulary(vocab, "lines").decode("utf-8").splitlines()
    assert len(lines) == len(vocab)
    special = [t for t in lines if not t.isdigit()]
    # 10 markers plus ".", "-", "+"
    assert len(special) == 13
    assert {".", "-", "+"} <= set(special)


def test_export_json_schema():
    vocab = build_vocabulary(TokenizerConfig(max_int_levels=1, max_frac_depth=0))
    payload = json.loads(export_vocabulary(vocab, "json"))
    assert [e["id"] for e in payload] == list(range(len(vocab)))
    sample = payload[-1]
    assert set(sample) == {"id", "text", "kind", "coefficient", "exponent"}
    point = next(e for e in payload if e["text"] == ".")
    assert point["coefficient"] is None and point["exponent"] is None
    k999 = next(e for e in payload if e["text"] == "999k")
    assert (k999["coefficient"], k999["exponent"]) == (999, 3)


def test_export_deterministic_and_empty():
    vocab = build_vocabulary(CANON)
    assert export_vocabulary(vocab, "lines") == export_vocabulary(vocab, "lines")
    assert export_vocabulary(vocab, "json") == export_vocabulary(vocab, "json")
    empty = Vocabulary(entries=(), config_fingerprint="0" * 16)
    assert export_vocabulary(empty, "json") == b"[]"
    assert export_vocabulary(empty, "lines") == b""
    with pytest.raises(ValueError):
        export_vocabulary(empty, "xml")


def test_fingerprint_tracks_config():
    a = build_vocabulary(CANON)
    b = build_vocabulary(TokenizerConfig(max_int_levels=4))
    assert a.config_fingerprint != b.config_fingerprint
