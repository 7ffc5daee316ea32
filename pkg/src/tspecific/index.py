"""Binary serialization of a :class:`ReferenceMachine`.

Layout (all integers little-endian)::

    magic        4 bytes   b"TSF1"
    version      u32       FORMAT_VERSION
    n_states     u32
    n_edges      u32
    states       n_states x (length u32, suffix link i32, opt link i32, mark u8)
    edges        n_edges  x (source u32, symbol u8, target u32)
    checksum     u32       CRC-32 of every preceding byte

Links use -1 for "none".  Edges are sorted by source then symbol, so a given
machine always serializes to the same bytes.
"""

from __future__ import annotations

import os
import struct
import tempfile
import zlib

from .dawg import Dawg, Mark, OptLinkTable
from .scan import ReferenceMachine

MAGIC = b"TSF1"
FORMAT_VERSION = 1

_HEADER = struct.Struct("<4sIII")
_STATE = struct.Struct("<IiiB")
_EDGE = struct.Struct("<IBI")
_CRC = struct.Struct("<I")


class IndexFormatError(ValueError):
    pass


def serialize(m: ReferenceMachine) -> bytes:
    d = m.dawg
    edges = list(d.edges())
    parts = [_HEADER.pack(MAGIC, FORMAT_VERSION, d.num_states, len(edges))]
    for q in range(d.num_states):
        parts.append(_STATE.pack(d.lengths[q], d.links[q], m.g.targets[q], int(d.marks[q])))
    parts.extend(_EDGE.pack(*e) for e in edges)
    body = b"".join(parts)
    return body + _CRC.pack(zlib.crc32(body))


def deserialize(blob: bytes) -> ReferenceMachine:
    if len(blob) < _HEADER.size + _CRC.size:
        raise IndexFormatError("index file truncated (no header)")
    magic, version, n_states, n_edges = _HEADER.unpack_from(blob)
    if magic != MAGIC:
        raise IndexFormatError(f"bad magic {magic!r}, expected {MAGIC!r}")
    if version != FORMAT_VERSION:
        raise IndexFormatError(
            f"unsupported index version: expected {FORMAT_VERSION}, found {version}"
        )
    expected = _HEADER.size + n_states * _STATE.size + n_edges * _EDGE.size + _CRC.size
    if len(blob) != expected:
        raise IndexFormatError(f"index file size {len(blob)} != expected {expected}")
    body, (crc,) = blob[: -_CRC.size], _CRC.unpack_from(blob, len(blob) - _CRC.size)
    if zlib.crc32(body) != crc:
        raise IndexFormatError("index checksum mismatch")

    off = _HEADER.size
    lengths, links, g, marks = [], [], [], []
    for length, link, opt, mark in _STATE.iter_unpack(blob[off : off + n_states * _STATE.size]):
        lengths.append(length)
        links.append(link)
        g.append(opt)
        marks.append(Mark(mark))
    off += n_states * _STATE.size
    transitions: list[dict[int, int]] = [{} for _ in range(n_states)]
    for src, sym, dst in _EDGE.iter_unpack(blob[off : off + n_edges * _EDGE.size]):
        if src >= n_states or dst >= n_states:
            raise IndexFormatError(f"edge {src}->{dst} out of range")
        transitions[src][sym] = dst
    if n_states == 0:
        raise IndexFormatError("index holds no states")
    return ReferenceMachine(Dawg(transitions, links, lengths, marks), OptLinkTable(tuple(g)))


def save_index(m: ReferenceMachine, path: str | os.PathLike) -> None:
    """Write atomically: a temporary file in the same directory is renamed
    over ``path``."""
    path = os.fspath(path)
    fd, tmp = tempfile.mkstemp(prefix=".tsf-", dir=os.path.dirname(os.path.abspath(path)))
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(serialize(m))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_index(path: str | os.PathLike) -> ReferenceMachine:
    with open(path, "rb") as fh:
        return deserialize(fh.read())
