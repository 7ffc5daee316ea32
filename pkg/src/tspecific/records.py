"""Reading sequence records from FASTA or one-sequence-per-line files."""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass


class InputFormat(enum.Enum):
    FASTA = "fasta"
    LINES = "lines"


class FormatError(ValueError):
    def __init__(self, path: str | os.PathLike, line: int, message: str) -> None:
        super().__init__(f"{os.fspath(path)}:{line}: {message}")
        self.path = path
        self.line = line


@dataclass(frozen=True)
class SequenceRecord:
    id: str
    data: bytes


def _parse_fasta(path, lines: list[bytes]) -> list[SequenceRecord]:
    records: list[SequenceRecord] = []
    header: str | None = None
    chunks: list[bytes] = []
    for lineno, line in enumerate(lines, 1):
        if line.startswith(b">"):
            if header is not None:
                records.append(SequenceRecord(header, b"".join(chunks)))
            fields = line[1:].split()
            if not fields:
                raise FormatError(path, lineno, "empty FASTA header")
            header = fields[0].decode("utf-8", errors="replace")
            chunks = []
            continue
        data = b"".join(line.split())
        if not data:
            continue
        if header is None:
            raise FormatError(path, lineno, "sequence data before first '>' header")
        chunks.append(data)
    if header is not None:
        records.append(SequenceRecord(header, b"".join(chunks)))
    return records


def _parse_lines(lines: list[bytes]) -> list[SequenceRecord]:
    return [
        SequenceRecord(f"line-{lineno}", line.rstrip(b"\r\n"))
        for lineno, line in enumerate(lines, 1)
        if line.strip()
    ]


def parse_input(
    path: str | os.PathLike,
    fmt: InputFormat = InputFormat.FASTA,
    normalize_case: bool = False,
) -> list[SequenceRecord]:
    """Read all records of ``path``.

    FASTA sequence lines are concatenated with all whitespace removed; the
    record id is the first word of the header.  In LINES format every
    non-blank line is a record named after its physical line number.
    ``normalize_case`` upper-cases ASCII letters and leaves other bytes alone.

    Raises ``OSError`` for unreadable files and :class:`FormatError` for
    malformed FASTA.
    """
    with open(path, "rb") as fh:
        lines = fh.read().splitlines(keepends=True)
    if fmt is InputFormat.FASTA:
        records = _parse_fasta(path, lines)
    else:
        records = _parse_lines(lines)
    if normalize_case:
        records = [SequenceRecord(r.id, r.data.upper()) for r in records]
    return records
