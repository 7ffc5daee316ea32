"""Left-to-right scan of a target word against a preprocessed reference.

The reference set is turned into its suffix automaton once
(:func:`build_reference_machine`).  A scan then reads the target one symbol at
a time, keeping the state of the longest suffix of the text read so far that
is a reference factor.  When the next symbol cannot be appended, suffix links
are followed until it can; the length of the state where this succeeds tells
where the newly completed target-specific factor starts.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from typing import NamedTuple

from .dawg import INITIAL, Dawg, OptLinkTable, SourceTag, build_dawg, build_optimized_links


class LinkMode(enum.Enum):
    PLAIN_S = "plain-s"
    OPTIMIZED_G = "optimized-g"


class ScanEvent(NamedTuple):
    """Occurrence ``T[start..end]`` (0-based, end inclusive) of a specific factor."""

    start: int
    end: int


@dataclass(frozen=True)
class ReferenceMachine:
    dawg: Dawg
    g: OptLinkTable
    _fail: dict[LinkMode, tuple[int, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        s_links = tuple(max(s, INITIAL) for s in self.dawg.links)
        # a missing optimized link means no ancestor offers more symbols
        g_links = tuple(max(g, INITIAL) for g in self.g.targets)
        object.__setattr__(
            self, "_fail", {LinkMode.PLAIN_S: s_links, LinkMode.OPTIMIZED_G: g_links}
        )

    @property
    def alphabet(self) -> frozenset[int]:
        return self.dawg.alphabet

    def failure_links(self, mode: LinkMode) -> tuple[int, ...]:
        return self._fail[mode]


def build_reference_machine(reference: Iterable[bytes]) -> ReferenceMachine:
    d = build_dawg((bytes(w), SourceTag.REF) for w in reference)
    return ReferenceMachine(d, build_optimized_links(d))


class Scanner:
    """Push-style scan: feed symbols, get back the occurrence ending there.

    At most one specific factor ends at each position, so :meth:`feed` returns
    a single event or ``None``.  ``follows`` counts failure-link hops over the
    whole scan and ``max_follows`` the largest number spent on one symbol.
    """

    def __init__(self, machine: ReferenceMachine, mode: LinkMode = LinkMode.OPTIMIZED_G) -> None:
        self.machine = machine
        self.mode = mode
        self.state = INITIAL
        self.position = 0
        self.follows = 0
        self.max_follows = 0
        self._transitions = machine.dawg.transitions
        self._lengths = machine.dawg.lengths
        self._fail = machine.failure_links(mode)

    def feed(self, a: int) -> ScanEvent | None:
        transitions = self._transitions
        q = self.state
        j = self.position
        self.position = j + 1
        nxt = transitions[q].get(a)
        if nxt is not None:
            self.state = nxt
            return None

        fail = self._fail
        hops = 0
        while q != INITIAL and nxt is None:
            q = fail[q]
            hops += 1
            nxt = transitions[q].get(a)
        self.follows += hops
        if hops > self.max_follows:
            self.max_follows = hops
        if nxt is None:
            # only the initial state is left: the letter itself is specific
            self.state = INITIAL
            return ScanEvent(j, j)
        self.state = nxt
        return ScanEvent(j - self._lengths[q] - 1, j)

    def feed_all(self, symbols: Iterable[int]) -> Iterator[ScanEvent]:
        feed = self.feed
        for a in symbols:
            ev = feed(a)
            if ev is not None:
                yield ev


def scan_stream(
    machine: ReferenceMachine,
    symbols: Iterable[int],
    mode: LinkMode = LinkMode.OPTIMIZED_G,
) -> Iterator[ScanEvent]:
    """Lazily yield events while consuming ``symbols``; each event is produced
    as soon as its end symbol has been read."""
    return Scanner(machine, mode).feed_all(symbols)


def ts_pairs(
    machine: ReferenceMachine, target: bytes, mode: LinkMode = LinkMode.OPTIMIZED_G
) -> list[ScanEvent]:
    return list(Scanner(machine, mode).feed_all(target))


def ts_table(
    machine: ReferenceMachine, target: bytes, mode: LinkMode = LinkMode.OPTIMIZED_G
) -> list[int]:
    """``table[i]`` is the end of the specific factor starting at ``i``, or -1.

    >>> m = build_reference_machine([b"abbab"])
    >>> ts_table(m, b"abaab")
    [2, -1, 3, -1, -1]
    """
    table = [-1] * len(target)
    for start, end in Scanner(machine, mode).feed_all(target):
        table[start] = end
    return table
