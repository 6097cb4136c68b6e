"""Pure-Python kernels; reference twins of the compiled versions."""

from __future__ import annotations


def count_independent_partitions(masks: list[int]) -> list[int]:
    """Count partitions of ``{0..n-1}`` into independent blocks, by block count.

    ``masks[v]`` is the neighbourhood bitmask of vertex ``v``.  Vertices are
    placed in order as a restricted growth string: vertex ``v`` joins an open
    block containing none of its neighbours, or opens a new block.  Returns a
    list ``c`` of length ``n + 1`` with ``c[k]`` the number of partitions into
    ``k`` blocks.
    """
    n = len(masks)
    counts = [0] * (n + 1)
    if n == 0:
        counts[0] = 1
        return counts
    blocks = [0] * n
    last = n - 1

    def place(v: int, nblocks: int) -> None:
        nb = masks[v]
        bit = 1 << v
        if v == last:
            free = 0
            for b in range(nblocks):
                if not blocks[b] & nb:
                    free += 1
            counts[nblocks] += free
            counts[nblocks + 1] += 1
            return
        for b in range(nblocks):
            if not blocks[b] & nb:
                blocks[b] |= bit
                place(v + 1, nblocks)
                blocks[b] ^= bit
        blocks[nblocks] = bit
        place(v + 1, nblocks + 1)
        blocks[nblocks] = 0

    place(0, 0)
    return counts
