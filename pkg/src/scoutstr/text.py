"""Code-point text representation and the instrumented access layer.

All search algorithms operate on :class:`CodePointText`, an immutable indexed
sequence of Unicode scalar values.  Exact operation counters live in
:class:`Metrics`; the accounting rules are:

* every indexed read of a character (and every read or write of an auxiliary
  table slot) costs one memory lookup,
* every character-versus-character equality test costs one comparison,
* every multiplication, division or modulo costs one heavy-arithmetic tick.

Integer signature equality in the rolling algorithms is deliberately *not*
a comparison, and plain local-variable arithmetic is never a lookup.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from typing import Iterator


class UnsupportedCharsetError(ValueError):
    """Raised by ASCII-restricted algorithms on a non-ASCII code point."""


class TextDecodeError(ValueError):
    """Raised when bytes are not valid UTF-8; carries the failing byte offset."""

    def __init__(self, message: str, byte_offset: int) -> None:
        super().__init__(message)
        self.byte_offset = byte_offset


class CodePointText:
    """Immutable sequence of Unicode scalar values.

    Indexing is by code point, never by byte or UTF-16 unit, so "character"
    is unambiguous for every input.  Instances are safely shareable across
    threads.
    """

    __slots__ = ("points", "_max_point")

    def __init__(self, points: array) -> None:
        if points.typecode != "I":
            points = array("I", points)
        self.points = points
        # Cached so the byte-alphabet gate is O(1) per search call.
        self._max_point = max(points) if len(points) else 0

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> int:
        return self.points[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.points)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CodePointText):
            return self.points == other.points
        return NotImplemented

    def __hash__(self) -> int:
        return hash(bytes(self.points))

    def __repr__(self) -> str:
        return f"CodePointText({self.as_str()!r})"

    @property
    def max_point(self) -> int:
        return self._max_point

    def is_ascii(self) -> bool:
        """True when every code point is ASCII (< 128)."""
        return self._max_point < 128

    def as_str(self) -> str:
        return "".join(map(chr, self.points))

    def to_utf8(self) -> bytes:
        return self.as_str().encode("utf-8")


def from_string(s: str) -> CodePointText:
    """Build a CodePointText from an already-decoded string."""
    return CodePointText(array("I", map(ord, s)))


def from_utf8(data: bytes) -> CodePointText:
    """Decode UTF-8 bytes; reports the byte offset of the first invalid byte."""
    try:
        return from_string(data.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise TextDecodeError(
            f"invalid UTF-8 at byte offset {exc.start}: {exc.reason}", exc.start
        ) from exc


@dataclass
class Metrics:
    """Per-invocation operation counters.

    Counters start at zero and are owned by a single invocation; nothing is
    global, so concurrent searches never share an accumulator.  Python
    integers are unbounded, so the 64-bit saturation bound is unreachable by
    construction.
    """

    comparisons: int = 0
    memory_lookups: int = 0
    heavy_arith: int = 0

    def copy(self) -> "Metrics":
        return Metrics(self.comparisons, self.memory_lookups, self.heavy_arith)


@dataclass
class InstrumentedReader:
    """Read-only view of a text that charges one lookup per indexed read."""

    text: CodePointText
    metrics: Metrics

    def read(self, i: int) -> int:
        if i < 0 or i >= len(self.text):
            raise IndexError(f"read index {i} out of range for length {len(self.text)}")
        self.metrics.memory_lookups += 1
        return self.text.points[i]


def count_comparison(metrics: Metrics, a: int, b: int) -> bool:
    """Character equality test; charges exactly one comparison."""
    metrics.comparisons += 1
    return a == b


def count_heavy(metrics: Metrics) -> None:
    """Record one multiplication, division or modulo."""
    metrics.heavy_arith += 1
