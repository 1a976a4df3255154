import random
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"

WORDS = (
    "alpha bravo charlie delta echo foxtrot golf hotel india juliet kilo "
    "lima mike november oscar papa quebec romeo sierra tango uniform victor "
    "whiskey xray yankee zulu total price amount reading sensor value sum "
    "offset delta gain measured expected observed"
).split()


def random_literal(rng: random.Random, *, max_int_digits: int = 18,
                   max_frac_digits: int = 15, allow_sign: bool = True,
                   canonical_group: int | None = None) -> str:
    """A random decimal literal string.

    With ``canonical_group`` set, the literal is already in canonical form
    for that group size (no leading integer zeros, fraction length a
    multiple of the group size with a nonzero final group), so a perfect
    encode/decode round trip reproduces it byte for byte.
    """
    while True:
        int_len = rng.randint(1, max_int_digits)
        int_digits = str(rng.randint(1, 10 ** int_len - 1)) if rng.random() < 0.9 else "0"
        frac_digits = ""
        if rng.random() < 0.6:
            frac_len = rng.randint(1, max_frac_digits)
            if canonical_group:
                n = canonical_group
                frac_len = min(max_frac_digits, max(n, (frac_len // n) * n or n))
                last = str(rng.randint(1, 10 ** n - 1)).zfill(n)
                frac_digits = "".join(str(rng.randint(0, 9))
                                      for _ in range(frac_len - n)) + last
            else:
                frac_digits = "".join(str(rng.randint(0, 9)) for _ in range(frac_len))
        if int_digits == "0" and not frac_digits.strip("0"):
            continue
        sign = "-" if (allow_sign and rng.random() < 0.15) else ""
        out = sign + int_digits
        if frac_digits:
            out += "." + frac_digits
        return out


def corpus_lines(seed: int, n_lines: int, *, canonical_group: int | None = 3,
                 max_int_digits: int = 18, max_frac_digits: int = 15) -> list[str]:
    """Deterministic mixed prose/number corpus, numbers whitespace-delimited."""
    rng = random.Random(seed)
    lines = []
    for _ in range(n_lines):
        parts = []
        for _ in range(rng.randint(3, 12)):
            if rng.random() < 0.35:
                parts.append(random_literal(
                    rng, max_int_digits=max_int_digits,
                    max_frac_digits=max_frac_digits,
                    canonical_group=canonical_group))
            else:
                parts.append(rng.choice(WORDS))
        lines.append(" ".join(parts))
    return lines


@pytest.fixture(scope="session")
def fixture_corpus_path() -> Path:
    return FIXTURES / "mixed_corpus.txt"


@pytest.fixture(scope="session")
def fixture_corpus(fixture_corpus_path) -> str:
    return fixture_corpus_path.read_text(encoding="utf-8")
