"""Target-specific factors: minimal absent words of a reference that occur in
a target, found with suffix automata."""

from .dawg import Dawg, Mark, OptLinkTable, SourceTag, build_dawg, build_optimized_links
from .scan import (
    LinkMode,
    ReferenceMachine,
    ScanEvent,
    Scanner,
    build_reference_machine,
    scan_stream,
    ts_pairs,
    ts_table,
)
from .specific import (
    SpecificTrie,
    SpecificWordReport,
    build_specific_trie,
    count_bound,
    enumerate_words,
    specific_words,
)

__all__ = [
    "Dawg",
    "LinkMode",
    "Mark",
    "OptLinkTable",
    "ReferenceMachine",
    "ScanEvent",
    "Scanner",
    "SourceTag",
    "SpecificTrie",
    "SpecificWordReport",
    "build_dawg",
    "build_optimized_links",
    "build_reference_machine",
    "build_specific_trie",
    "count_bound",
    "enumerate_words",
    "scan_stream",
    "specific_words",
    "ts_pairs",
    "ts_table",
]
