import random

import pytest

from tspecific import LinkMode, Scanner, build_reference_machine, scan_stream, ts_pairs, ts_table
from tspecific.oracle import factors_naive, specific_naive, ts_table_naive

from .conftest import random_letters, random_word_set

MODES = list(LinkMode)


@pytest.mark.parametrize("mode", MODES)
def test_worked_instance(mode):
    m = build_reference_machine([b"abbab"])
    assert ts_table(m, b"abaab", mode) == [2, -1, 3, -1, -1]
    assert ts_pairs(m, b"abaab", mode) == [(0, 2), (2, 3)]


@pytest.mark.parametrize("mode", MODES)
def test_small_cases(mode):
    assert ts_table(build_reference_machine([b"ab"]), b"c", mode) == [0]
    assert ts_table(build_reference_machine([b"abbab"]), b"abb", mode) == [-1, -1, -1]
    assert ts_table(build_reference_machine([b"abbab"]), b"", mode) == []
    assert ts_pairs(build_reference_machine([]), b"ab", mode) == [(0, 0), (1, 1)]
    assert ts_pairs(build_reference_machine([b"xabcabx"]), b"abcab", mode) == []


def test_reference_machine_shapes():
    m = build_reference_machine([])
    assert m.dawg.num_states == 1
    m = build_reference_machine([b"ab"])
    assert m.dawg.num_states == 3
    assert m.g[1] == 0 and m.g[2] == 0
    m = build_reference_machine([b"abbab"])
    assert all(m.dawg.accepts_factor(u) for u in factors_naive([b"abbab"]))
    assert not m.dawg.accepts_factor(b"aa")


def test_stream_emits_at_end_position():
    m = build_reference_machine([b"abbab"])
    sc = Scanner(m)
    emitted = [sc.feed(a) for a in b"abaab"]
    assert emitted == [None, None, (0, 2), (2, 3), None]
    assert list(scan_stream(m, iter(()))) == []
    assert list(scan_stream(m, iter(b"bbab"))) == []


def _longest_ref_suffix(text: bytes, facts: set[bytes]) -> bytes:
    for k in range(len(text) + 1):
        if text[k:] in facts:
            return text[k:]
    raise AssertionError("empty word is always a factor")


@pytest.mark.parametrize("mode", MODES)
def test_loop_invariant_and_emissions(mode):
    rng = random.Random(5)
    for _ in range(200):
        letters = random_letters(rng)
        r = random_word_set(rng, letters, 4, 25)
        t = bytes(rng.choice(letters + b"x") for _ in range(rng.randint(0, 30)))
        m = build_reference_machine(r)
        facts = factors_naive(r)
        spec = set(specific_naive(r, [t]))
        sc = Scanner(m, mode)
        starts = set()
        for j, a in enumerate(t):
            ev = sc.feed(a)
            assert sc.state == m.dawg.state_of(_longest_ref_suffix(t[: j + 1], facts))
            if ev is not None:
                assert ev.end == j
                assert t[ev.start : ev.end + 1] in spec
                assert ev.start not in starts
                starts.add(ev.start)


def test_random_against_oracle_both_modes():
    rng = random.Random(17)
    for _ in range(500):
        letters = random_letters(rng)
        r = random_word_set(rng, letters, 5, 40)
        t = bytes(rng.choice(letters) for _ in range(rng.randint(0, 60)))
        m = build_reference_machine(r)
        expected = ts_table_naive(r, t)
        for mode in MODES:
            assert ts_table(m, t, mode) == expected


def test_follow_counters():
    rng = random.Random(23)
    for _ in range(300):
        letters = random_letters(rng)
        r = random_word_set(rng, letters, 5, 40)
        t = bytes(rng.choice(letters) for _ in range(rng.randint(0, 60)))
        m = build_reference_machine(r)
        plain = Scanner(m, LinkMode.PLAIN_S)
        list(plain.feed_all(t))
        assert plain.follows <= 2 * len(t)
        opt = Scanner(m, LinkMode.OPTIMIZED_G)
        list(opt.feed_all(t))
        assert opt.max_follows <= len(m.alphabet) + 1
