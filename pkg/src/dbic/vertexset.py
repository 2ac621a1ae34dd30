"""Vertex sets as dense bitmasks.

A ``VertexSet`` is a plain Python int used as a bitset over the d^n vertex
ids: bit v is set iff vertex v belongs to the set.  Intersection, union,
symmetric difference, and equality are then single int operations, which is
what the ball comparisons and the hitting-set solver spend their time on.
"""

from __future__ import annotations

from typing import Iterable, Iterator

VertexSet = int


def mask_of(ids: Iterable[int]) -> VertexSet:
    """Build a bitmask from an iterable of vertex ids."""
    mask = 0
    for v in ids:
        mask |= 1 << v
    return mask


def bits(mask: VertexSet) -> Iterator[int]:
    """Yield the vertex ids in `mask` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_ids(mask: VertexSet) -> list[int]:
    return list(bits(mask))


def popcount(mask: VertexSet) -> int:
    return mask.bit_count()
