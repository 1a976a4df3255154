from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from numtok.codec import canonicalize, decode, encode, validate
from numtok.config import TokenizerConfig
from numtok.scanner import NumericLiteral
from numtok.stats import tokens_per_literal

# Bounds chosen so every generated literal is in range for every config.
CONFIGS = [
    TokenizerConfig(),
    TokenizerConfig(pad_leading_group=False),
    TokenizerConfig(mode="marker"),
    TokenizerConfig(mode="digit_marker"),
    TokenizerConfig(mode="marker", pad_leading_group=False),
    TokenizerConfig(group_size=1, marker_style="systematic",
                    max_int_levels=17, max_frac_depth=15),
    TokenizerConfig(group_size=2, marker_style="systematic",
                    max_int_levels=9, max_frac_depth=8),
    TokenizerConfig(group_size=3, marker_style="systematic"),
    TokenizerConfig(group_size=4, marker_style="systematic",
                    max_int_levels=5, max_frac_depth=4),
]

digits = st.text("0123456789", min_size=1, max_size=18)
fracs = st.text("0123456789", min_size=0, max_size=15)
signs = st.sampled_from(["none", "minus", "plus"])


@st.composite
def literals(draw, with_sign=True):
    i = draw(digits)
    f = draw(fracs)
    s = draw(signs) if with_sign else "none"
    surface = ("-" if s == "minus" else "+" if s == "plus" else "") + i + ("." + f if f else "")
    return NumericLiteral(sign=s, int_digits=i, frac_digits=f, surface=surface)


def exact_value(lit: NumericLiteral) -> Fraction:
    v = Fraction(int(lit.int_digits + lit.frac_digits), 10 ** len(lit.frac_digits))
    return -v if lit.sign == "minus" else v


@settings(max_examples=250)
@given(lit=literals(), cfg=st.sampled_from(CONFIGS))
def test_round_trip_is_canonicalization(lit, cfg):
    out = decode(encode(lit, cfg), cfg)
    canon = canonicalize(lit, cfg)
    assert (out.literal.sign, out.literal.int_digits, out.literal.frac_digits) == (
        canon.sign, canon.int_digits, canon.frac_digits)
    assert out.value.as_fraction() == exact_value(lit)


@settings(max_examples=150)
@given(lit=literals(), cfg=st.sampled_from(CONFIGS))
def test_preserve_precision_round_trip_keeps_written_fraction(lit, cfg):
    cfg = TokenizerConfig.from_dict({**cfg.to_dict(), "preserve_precision": True})
    out = decode(encode(lit, cfg), cfg)
    assert out.literal.int_digits == (lit.int_digits.lstrip("0") or "0")
    assert out.literal.frac_digits == lit.frac_digits
    assert out.value.as_fraction() == exact_value(lit)


@settings(max_examples=200)
@given(lit=literals(), cfg=st.sampled_from(CONFIGS),
       lead=st.integers(0, 3), trail=st.integers(0, 3))
def test_canonical_equivalence(lit, cfg, lead, trail):
    # numerically equal rewrites (leading integer zeros, trailing fraction
    # zeros) must produce the identical token sequence
    rewritten = NumericLiteral(
        sign=lit.sign,
        int_digits="0" * lead + lit.int_digits,
        frac_digits=lit.frac_digits + "0" * trail,
        surface=lit.surface)
    a = encode(lit, cfg).texts()
    b = encode(rewritten, cfg).texts()
    assert a == b


@settings(max_examples=200)
@given(a=literals(with_sign=False), b=literals(with_sign=False),
       cfg=st.sampled_from([TokenizerConfig(), TokenizerConfig(pad_leading_group=False)]))
def test_compound_injectivity(a, b, cfg):
    # equal values <-> identical sequences (sign-free literals)
    same_value = exact_value(a) == exact_value(b)
    same_tokens = encode(a, cfg).texts() == encode(b, cfg).texts()
    assert same_value == same_tokens


@settings(max_examples=150)
@given(lit=literals())
def test_mode_consistency(lit):
    values = set()
    for mode in ("compound", "marker", "digit_marker"):
        cfg = TokenizerConfig(mode=mode)
        values.add(decode(encode(lit, cfg), cfg).value)
    assert len(values) == 1


@settings(max_examples=200)
@given(lit=literals(), cfg=st.sampled_from(CONFIGS))
def test_token_count_matches_closed_form(lit, cfg):
    seq = encode(lit, cfg)
    assert len(seq) == tokens_per_literal(lit, cfg.mode, cfg)


@settings(max_examples=200)
@given(lit=literals())
def test_length_law(lit):
    canon = canonicalize(lit, TokenizerConfig())
    di, df = len(canon.int_digits), len(canon.frac_digits)
    sign = 0 if lit.sign == "none" else 1
    n3 = len(encode(lit, TokenizerConfig()))
    assert n3 == -(-di // 3) + -(-df // 3) + (1 if df else 0) + sign

    cfg1 = TokenizerConfig(group_size=1, marker_style="systematic",
                           max_int_levels=17, max_frac_depth=15)
    canon1 = canonicalize(lit, cfg1)
    d1 = len(canon1.int_digits) + len(canon1.frac_digits)
    assert len(encode(lit, cfg1)) <= d1 + 2


@settings(max_examples=150)
@given(lit=literals(), cfg=st.sampled_from(CONFIGS))
def test_encoder_output_validates(lit, cfg):
    seq = encode(lit, cfg)
    assert validate(seq, cfg).ok
    # and strict decoding accepts the encoder's own padding
    assert decode(seq, cfg, strict=True).value.as_fraction() == exact_value(lit)


@settings(max_examples=100)
@given(lit=literals(), cfg=st.sampled_from(CONFIGS))
def test_encode_is_deterministic(lit, cfg):
    assert encode(lit, cfg).texts() == encode(lit, cfg).texts()
