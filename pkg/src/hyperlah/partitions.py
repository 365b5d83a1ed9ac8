"""Ordered set partitions of {1..n} and their weight statistic.

A partition splits {1..n} into nonempty blocks whose internal order
matters but whose order among each other does not.  The canonical form
lists blocks by increasing minimum element.  The weight of a block is
the number of its elements smaller than its first element; the weight
of a partition is the sum over blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

__all__ = ["OrderedSetPartition", "enumerate_ordered_partitions", "partition_weight"]


@dataclass(frozen=True)
class OrderedSetPartition:
    """Canonicalized partition of {1..n} into linearly ordered blocks."""

    blocks: tuple
    n: int

    def __post_init__(self):
        blocks = tuple(sorted((tuple(b) for b in self.blocks), key=min))
        object.__setattr__(self, "blocks", blocks)
        seen = []
        for b in blocks:
            if not b:
                raise ValueError("blocks must be nonempty")
            seen.extend(b)
        if sorted(seen) != list(range(1, self.n + 1)):
            raise ValueError(f"blocks do not partition {{1..{self.n}}}")

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def __str__(self):
        return "{" + ", ".join("(" + ",".join(map(str, b)) + ")" for b in self.blocks) + "}"


def partition_weight(p: OrderedSetPartition) -> int:
    """Total count, over blocks, of elements smaller than the block's first."""
    total = 0
    for b in p.blocks:
        first = b[0]
        total += sum(1 for v in b if v < first)
    return total


def enumerate_ordered_partitions(n: int, m: int) -> Iterator[OrderedSetPartition]:
    """Yield each partition of {1..n} into m ordered blocks exactly once.

    Builds partitions by inserting 1, 2, ..., n in turn: each element
    either opens a new block or lands in any position of an existing
    block.  Removing the largest element inverts the step, so every
    partition is produced once.  Blocks open in order of their minima,
    which is exactly the canonical block order.
    """
    if n < 1 or m < 1:
        raise ValueError(f"enumeration requires n, m >= 1, got ({n}, {m})")
    return _generate(n, m)


def _generate(n, m):
    if m > n:
        return
    yield from _extend(1, n, m, [])


def _extend(e, n, m, blocks):
    if e > n:
        yield OrderedSetPartition(tuple(tuple(b) for b in blocks), n)
        return
    if len(blocks) < m:
        blocks.append([e])
        yield from _extend(e + 1, n, m, blocks)
        blocks.pop()
    # skip placements that leave too few elements to open the remaining blocks
    if len(blocks) + (n - e) >= m:
        for b in blocks:
            for pos in range(len(b) + 1):
                b.insert(pos, e)
                yield from _extend(e + 1, n, m, blocks)
                del b[pos]
