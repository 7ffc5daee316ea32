import random

import pytest

from tspecific import SourceTag, build_dawg

R_FIG = b"abbab"
T_FIG = b"abaab"


def random_word_set(rng: random.Random, letters: bytes, max_words: int, max_total: int) -> list[bytes]:
    n = rng.randint(0, max_words)
    words = []
    budget = max_total
    for _ in range(n):
        k = rng.randint(0, min(budget, max_total // max(n, 1) + 2))
        budget -= k
        words.append(bytes(rng.choice(letters) for _ in range(k)))
    return words


def random_letters(rng: random.Random, lo: int = 1, hi: int = 4) -> bytes:
    return b"abcd"[: rng.randint(lo, hi)]


@pytest.fixture
def fig1_dawg():
    return build_dawg([(R_FIG, SourceTag.REF), (T_FIG, SourceTag.TGT)])


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
