"""Graphviz renderings of the DAWG and of the specific-word trie."""

from __future__ import annotations

from collections.abc import Iterator

from .dawg import Dawg
from .specific import SpecificTrie


def symbol_label(a: int) -> str:
    if 0x21 <= a < 0x7F and chr(a) not in '"\\':
        return chr(a)
    return f"\\\\x{a:02x}"


def dawg_dot(d: Dawg) -> Iterator[str]:
    """Transitions as solid labelled edges, suffix links as dashed edges."""
    yield "digraph dawg {\n"
    yield "  rankdir=LR;\n"
    yield "  node [shape=circle];\n"
    for q in range(d.num_states):
        extra = " peripheries=2" if q == d.initial else ""
        yield f'  q{q} [label="{q}\\n{d.marks[q].label()}"{extra}];\n'
    for p, a, q in d.edges():
        yield f'  q{p} -> q{q} [label="{symbol_label(a)}"];\n'
    for q, s in enumerate(d.links):
        if s >= 0:
            yield f"  q{q} -> q{s} [style=dashed];\n"
    yield "}\n"


def trie_dot(trie: SpecificTrie, d: Dawg) -> Iterator[str]:
    """Internal nodes are labelled with the DAWG state they mirror; sinks are
    filled boxes."""
    yield "digraph trie {\n"
    yield "  rankdir=LR;\n"
    for n in range(trie.num_nodes):
        origin = trie.origin[n]
        if n in trie.sinks:
            yield f'  n{n} [shape=box style=filled fillcolor=black label=""];\n'
        else:
            extra = " peripheries=2" if n == trie.root else ""
            yield (
                f'  n{n} [shape=circle label="{origin}\\n{d.marks[origin].label()}"{extra}];\n'
            )
    for p, a, q in trie.edges():
        yield f'  n{p} -> n{q} [label="{symbol_label(a)}"];\n'
    yield "}\n"
