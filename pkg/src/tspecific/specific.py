"""Trie of the target-specific words of a target set against a reference set.

A target-specific word is a factor of some target word that is absent from the
reference words while all of its proper factors occur there, i.e. a minimal
absent word of the reference that shows up in the target.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from .dawg import INITIAL, Dawg, Mark, SourceTag, build_dawg


@dataclass
class SpecificTrie:
    """Tree-shaped automaton whose accepted words are the root-to-sink labels.

    ``origin[n]`` is the DAWG state that node ``n`` mirrors, or ``None`` for
    sinks.  Node 0 is the root.
    """

    transitions: list[dict[int, int]] = field(default_factory=lambda: [{}])
    origin: list[int | None] = field(default_factory=lambda: [INITIAL])
    sinks: set[int] = field(default_factory=set)

    root = 0

    @property
    def num_nodes(self) -> int:
        return len(self.transitions)

    def _add_node(self, origin: int | None) -> int:
        self.transitions.append({})
        self.origin.append(origin)
        return len(self.transitions) - 1

    def accepts(self, word: bytes) -> bool:
        n = self.root
        for a in word:
            n = self.transitions[n].get(a)
            if n is None:
                return False
        return n in self.sinks

    def edges(self) -> Iterator[tuple[int, int, int]]:
        for p, trans in enumerate(self.transitions):
            for a in sorted(trans):
                yield p, a, trans[a]

    def pruned(self) -> SpecificTrie:
        """Copy without the internal branches that lead to no sink.

        The root is always kept.  Node numbering is compacted in the original
        order.
        """
        alive = set(self.sinks)
        # children always have larger ids than their parent
        for p in range(self.num_nodes - 1, -1, -1):
            if any(c in alive for c in self.transitions[p].values()):
                alive.add(p)
        alive.add(self.root)
        renum = {old: new for new, old in enumerate(sorted(alive))}
        out = SpecificTrie(transitions=[], origin=[], sinks=set())
        for old in sorted(alive):
            out.transitions.append(
                {a: renum[c] for a, c in self.transitions[old].items() if c in alive}
            )
            out.origin.append(self.origin[old])
        out.sinks = {renum[s] for s in self.sinks}
        return out


def build_specific_trie(d: Dawg) -> SpecificTrie:
    """Extract the trie of target-specific words from the marked DAWG of R ∪ T.

    States seen by both sets are visited breadth-first from the initial state,
    so each visited state is first reached through its shortest word ``u``.
    For a letter ``a``, ``ua`` is specific when it occurs in the target only
    and, writing ``u = bv``, ``va`` occurs in the reference; ``va`` lives in
    the state reached from the suffix link of ``u``'s state.
    """
    trie = SpecificTrie()
    trans, links, marks = d.transitions, d.links, d.marks
    node_of = {INITIAL: trie.root}
    queue = deque([INITIAL])
    while queue:
        p = queue.popleft()
        node = node_of[p]
        s = links[p]
        for a in sorted(trans[p]):
            q = trans[p][a]
            if marks[q] == Mark.T:
                if p == INITIAL:
                    specific = True
                else:
                    r = trans[s].get(a)
                    specific = r is not None and bool(marks[r] & Mark.R)
                if specific:
                    sink = trie._add_node(None)
                    trie.sinks.add(sink)
                    trie.transitions[node][a] = sink
                    continue
            if marks[q] == Mark.BOTH and q not in node_of:
                child = trie._add_node(q)
                node_of[q] = child
                trie.transitions[node][a] = child
                queue.append(q)
    return trie


def enumerate_words(trie: SpecificTrie) -> list[bytes]:
    """All accepted words in lexicographic (byte) order."""
    words = []
    stack: list[tuple[int, bytes]] = [(trie.root, b"")]
    while stack:
        n, prefix = stack.pop()
        if n in trie.sinks:
            words.append(prefix)
        for a, child in trie.transitions[n].items():
            stack.append((child, prefix + bytes([a])))
    return sorted(words)


def count_bound(size_r: int, m: int, alpha_r: int, alpha_t_minus_r: int) -> int:
    """Counting-bound formula for the number of target-specific words.

    ``size_r`` is the total length of the reference words, ``m`` their number,
    ``alpha_r`` the number of distinct letters in the reference and
    ``alpha_t_minus_r`` the number of target letters missing from it.  The
    value is returned as is, even when the formula goes negative for tiny
    inputs.  It is not a true upper bound on every input: ``R = {ab}`` gives
    1, yet ``aa``, ``ba`` and ``bb`` can all be specific.

    >>> count_bound(5, 1, 2, 0)
    7
    """
    if size_r <= 1:
        return alpha_t_minus_r
    return (2 * size_r - 2) * (alpha_r - 1) + alpha_t_minus_r - alpha_r + m


@dataclass(frozen=True)
class SpecificWordReport:
    words: list[bytes]
    count: int
    bound: int


def specific_words(reference: Iterable[bytes], target: Iterable[bytes]) -> SpecificWordReport:
    """Build DAWG(R ∪ T), extract the specific-word trie and report its words."""
    reference = [bytes(w) for w in reference]
    target = [bytes(w) for w in target]
    d = build_dawg(
        [(w, SourceTag.REF) for w in reference] + [(w, SourceTag.TGT) for w in target]
    )
    words = enumerate_words(build_specific_trie(d))
    alpha_r = set().union(*reference) if reference else set()
    alpha_t = set().union(*target) if target else set()
    bound = count_bound(
        sum(map(len, reference)), len(reference), len(alpha_r), len(alpha_t - alpha_r)
    )
    return SpecificWordReport(words=words, count=len(words), bound=bound)
