"""Binary (+1/-1) sequences and the shared text format.

A sequence is serialized as one line of '+' and '-' characters; lines
starting with '#' are comments.  A pair file is two non-comment lines.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class BinarySequence:
    """Finite vector of +1/-1 terms, read as a polynomial's coefficients."""

    terms: tuple[int, ...]

    def __post_init__(self):
        if len(self.terms) < 1:
            raise ValueError("sequence must have at least one term")
        if any(t not in (1, -1) for t in self.terms):
            raise ValueError("sequence terms must be +1 or -1")

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, j: int) -> int:
        return self.terms[j]

    def __iter__(self):
        return iter(self.terms)

    def __neg__(self) -> "BinarySequence":
        return BinarySequence(tuple(-t for t in self.terms))

    def as_array(self) -> np.ndarray:
        return np.array(self.terms, dtype=np.int64)

    def to_line(self) -> str:
        return "".join("+" if t > 0 else "-" for t in self.terms)

    def __str__(self) -> str:
        return self.to_line()


def from_array(arr) -> BinarySequence:
    return BinarySequence(tuple(1 if int(x) > 0 else -1 for x in arr))


def parse_line(line: str) -> BinarySequence:
    line = line.strip()
    bad = set(line) - set("+-")
    if not line or bad:
        raise ValueError(f"sequence line must be nonempty '+'/'-' text, got {line!r}")
    return BinarySequence(tuple(1 if c == "+" else -1 for c in line))


def parse_sequences(text: str) -> list[BinarySequence]:
    """All non-comment, non-blank lines of a sequence file."""
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        out.append(parse_line(line))
    return out


def load_sequences(path) -> list[BinarySequence]:
    with open(path, "r", encoding="ascii") as fh:
        return parse_sequences(fh.read())


def load_pair(path) -> tuple[BinarySequence, BinarySequence]:
    seqs = load_sequences(path)
    if len(seqs) != 2:
        raise ValueError(f"pair file must contain exactly 2 sequences, found {len(seqs)}")
    return seqs[0], seqs[1]


def dump_sequences(seqs, comment: str | None = None) -> str:
    lines = []
    if comment:
        for c in comment.splitlines():
            lines.append(f"# {c}")
    lines.extend(s.to_line() for s in seqs)
    return "\n".join(lines) + "\n"
