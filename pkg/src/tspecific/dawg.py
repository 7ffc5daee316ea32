"""Generalized suffix automaton (DAWG) of a finite set of byte strings.

States are numbered densely in creation order, state 0 being the initial
state.  Each state carries its outgoing transitions, its suffix link, the
length of the longest word it represents and a mark telling whether its words
are factors of reference words, target words, or both.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass


class SourceTag(enum.Enum):
    REF = "ref"
    TGT = "tgt"


class Mark(enum.IntFlag):
    NONE = 0
    R = 1
    T = 2
    BOTH = 3

    def label(self) -> str:
        return {Mark.NONE: "-", Mark.R: "r", Mark.T: "t", Mark.BOTH: "r,t"}[self]


_TAG_FLAG = {SourceTag.REF: Mark.R, SourceTag.TGT: Mark.T}

INITIAL = 0


class Dawg:
    """Read-only view over a built automaton.

    Use :func:`build_dawg` to construct one.  ``suffix_link`` and
    ``opt_link`` values of ``-1`` stand for "no link" in the raw arrays.
    """

    __slots__ = ("transitions", "links", "lengths", "marks")

    def __init__(
        self,
        transitions: Sequence[dict[int, int]],
        links: Sequence[int],
        lengths: Sequence[int],
        marks: Sequence[Mark],
    ) -> None:
        self.transitions = tuple(transitions)
        self.links = tuple(links)
        self.lengths = tuple(lengths)
        self.marks = tuple(marks)

    initial = INITIAL

    def __len__(self) -> int:
        return len(self.lengths)

    @property
    def num_states(self) -> int:
        return len(self.lengths)

    @property
    def num_transitions(self) -> int:
        return sum(len(t) for t in self.transitions)

    @property
    def alphabet(self) -> frozenset[int]:
        return frozenset(self.transitions[INITIAL])

    def _check(self, q: int) -> None:
        if not 0 <= q < len(self.lengths):
            raise IndexError(f"state {q} out of range (0..{len(self.lengths) - 1})")

    def walk(self, q: int, a: int) -> int | None:
        """Return the target of the transition from ``q`` by ``a``, if any."""
        self._check(q)
        return self.transitions[q].get(a)

    def suffix_link(self, q: int) -> int | None:
        self._check(q)
        s = self.links[q]
        return None if s < 0 else s

    def out_degree(self, q: int) -> int:
        return len(self.transitions[q])

    def out_symbols(self, q: int) -> list[int]:
        return sorted(self.transitions[q])

    def state_of(self, word: bytes) -> int | None:
        q = INITIAL
        transitions = self.transitions
        for a in word:
            q = transitions[q].get(a)
            if q is None:
                return None
        return q

    def accepts_factor(self, word: bytes) -> bool:
        """True iff ``word`` is a factor of some input word."""
        return self.state_of(word) is not None

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(source, symbol, target)`` sorted by source then symbol."""
        for p, trans in enumerate(self.transitions):
            for a in sorted(trans):
                yield p, a, trans[a]

    def states_by_length(self) -> list[int]:
        """States ordered by increasing ``length`` (counting sort)."""
        buckets: list[list[int]] = [[] for _ in range(max(self.lengths) + 1)]
        for q, n in enumerate(self.lengths):
            buckets[n].append(q)
        return [q for bucket in buckets for q in bucket]


class _Builder:
    def __init__(self) -> None:
        self.transitions: list[dict[int, int]] = [{}]
        self.links: list[int] = [-1]
        self.lengths: list[int] = [0]

    def _new_state(self, length: int, transitions: dict[int, int], link: int) -> int:
        self.transitions.append(transitions)
        self.lengths.append(length)
        self.links.append(link)
        return len(self.lengths) - 1

    def _split(self, p: int, a: int, q: int) -> int:
        # Clone q so that the class of (longest word of p) + a gets its own state.
        trans, links = self.transitions, self.links
        clone = self._new_state(self.lengths[p] + 1, dict(trans[q]), links[q])
        links[q] = clone
        while p != -1 and trans[p].get(a) == q:
            trans[p][a] = clone
            p = links[p]
        return clone

    def extend(self, last: int, a: int) -> int:
        trans, links, lengths = self.transitions, self.links, self.lengths
        q = trans[last].get(a)
        if q is not None:
            # The extended word is already a factor of an earlier word.
            if lengths[q] == lengths[last] + 1:
                return q
            return self._split(last, a, q)

        cur = self._new_state(lengths[last] + 1, {}, 0)
        p = last
        while p != -1 and a not in trans[p]:
            trans[p][a] = cur
            p = links[p]
        if p != -1:
            q = trans[p][a]
            if lengths[p] + 1 == lengths[q]:
                links[cur] = q
            else:
                links[cur] = self._split(p, a, q)
        return cur

    def add_word(self, word: bytes) -> None:
        last = INITIAL
        for a in word:
            last = self.extend(last, a)


def build_dawg(words: Iterable[tuple[bytes, SourceTag]]) -> Dawg:
    """Build the DAWG of a tagged word collection.

    Words are inserted one by one in the given order.  Marks are computed in a
    second pass: for every prefix of every word, the flag of the word's tag is
    pushed along the suffix-link chain until a state already carrying it.

    >>> d = build_dawg([(b"ab", SourceTag.REF)])
    >>> d.num_states, d.walk(0, ord("b"))
    (3, 2)
    """
    words = [(bytes(w), tag) for w, tag in words]
    builder = _Builder()
    for w, _ in words:
        builder.add_word(w)

    trans, links = builder.transitions, builder.links
    marks = [Mark.NONE] * len(builder.lengths)
    for w, tag in words:
        flag = _TAG_FLAG[tag]
        marks[INITIAL] |= flag
        q = INITIAL
        for a in w:
            q = trans[q][a]
            p = q
            while p != -1 and not marks[p] & flag:
                marks[p] |= flag
                p = links[p]
    return Dawg(trans, links, builder.lengths, marks)


@dataclass(frozen=True)
class OptLinkTable:
    """Optimized suffix links; ``targets[q] == -1`` means no link."""

    targets: tuple[int, ...]

    def __getitem__(self, q: int) -> int | None:
        g = self.targets[q]
        return None if g < 0 else g

    def __len__(self) -> int:
        return len(self.targets)

    def chain(self, q: int) -> list[int]:
        """States visited by following links from ``q`` (``q`` excluded)."""
        out = []
        g = self.targets[q]
        while g >= 0:
            out.append(g)
            g = self.targets[g]
        return out


def build_optimized_links(d: Dawg) -> OptLinkTable:
    """Compute, for every state, the nearest suffix-link ancestor with a
    strictly larger out-degree, skipping ancestors that offer exactly the same
    outgoing symbols.

    Since the outgoing symbol set only grows along a suffix-link chain,
    comparing degrees is enough.  States are processed by increasing length so
    the link of a state's suffix link is always ready.
    """
    targets = [-1] * d.num_states
    links, transitions = d.links, d.transitions
    for q in d.states_by_length():
        s = links[q]
        if s < 0:
            continue
        if len(transitions[q]) < len(transitions[s]):
            targets[q] = s
        else:
            targets[q] = targets[s]
    return OptLinkTable(tuple(targets))
