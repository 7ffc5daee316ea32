"""Brute-force mirrors of the automaton-based computations.

Everything here works on plain Python sets of substrings and is quadratic or
worse; it exists to cross-check the fast paths on small inputs.
"""

from __future__ import annotations

from collections.abc import Iterable

MAX_ORACLE_SIZE = 10_000


def _guard(*groups: Iterable[bytes]) -> None:
    total = sum(len(w) for g in groups for w in g)
    if total > MAX_ORACLE_SIZE:
        raise ValueError(f"oracle input too large ({total} > {MAX_ORACLE_SIZE} symbols)")


def factors_naive(words: Iterable[bytes]) -> set[bytes]:
    words = [bytes(w) for w in words]
    _guard(words)
    out = {b""}
    for w in words:
        n = len(w)
        for i in range(n):
            for j in range(i + 1, n + 1):
                out.add(w[i:j])
    return out


def _proper_factors_in(u: bytes, facts: set[bytes]) -> bool:
    # the two longest proper factors cover every shorter one
    return u[1:] in facts and u[:-1] in facts


def specific_naive(reference: Iterable[bytes], target: Iterable[bytes]) -> list[bytes]:
    reference, target = list(reference), list(target)
    _guard(reference, target)
    fr = factors_naive(reference)
    out = [
        u
        for u in factors_naive(target)
        if u and u not in fr and _proper_factors_in(u, fr)
    ]
    return sorted(out)


def ts_table_naive(reference: Iterable[bytes], target: bytes) -> list[int]:
    reference = list(reference)
    _guard(reference, [target])
    fr = factors_naive(reference)
    n = len(target)
    table = [-1] * n
    for i in range(n):
        for j in range(i, n):
            u = target[i : j + 1]
            if u not in fr:
                if _proper_factors_in(u, fr):
                    table[i] = j
                break
    return table


def maw_naive(reference: Iterable[bytes], alphabet: Iterable[int]) -> list[bytes]:
    """Minimal absent words of the reference factors over ``alphabet``.

    A minimal absent word drops its last letter into a reference factor, so
    candidates are every factor followed by every letter; none is longer than
    the longest reference word plus one.
    """
    reference = list(reference)
    _guard(reference)
    letters = sorted(set(alphabet))
    fr = factors_naive(reference)
    out = set()
    for u in fr:
        for a in letters:
            w = u + bytes([a])
            if w not in fr and _proper_factors_in(w, fr):
                out.add(w)
    return sorted(out)
