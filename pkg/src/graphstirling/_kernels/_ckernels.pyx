# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_pykernels`` for the reference versions."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free

DEF MAX_VERTICES = 63


cdef void _place(int v, int nblocks, int last, const uint64_t* masks,
                 uint64_t* blocks, uint64_t* counts) noexcept nogil:
    cdef uint64_t nb = masks[v]
    cdef uint64_t bit = (<uint64_t>1) << v
    cdef int b
    cdef uint64_t free_blocks
    if v == last:
        free_blocks = 0
        for b in range(nblocks):
            if (blocks[b] & nb) == 0:
                free_blocks += 1
        counts[nblocks] += free_blocks
        counts[nblocks + 1] += 1
        return
    for b in range(nblocks):
        if (blocks[b] & nb) == 0:
            blocks[b] |= bit
            _place(v + 1, nblocks, last, masks, blocks, counts)
            blocks[b] ^= bit
    blocks[nblocks] = bit
    _place(v + 1, nblocks + 1, last, masks, blocks, counts)
    blocks[nblocks] = 0


def count_independent_partitions(masks):
    """Count partitions into independent blocks, indexed by block count.

    Same contract as the pure-Python version; at most 63 vertices, and
    counts must fit in 64 bits (true for up to 20 vertices).
    """
    cdef int n = len(masks)
    if n == 0:
        return [1]
    if n > MAX_VERTICES:
        raise ValueError(f"compiled kernel handles at most {MAX_VERTICES} vertices")
    cdef uint64_t* cmasks = <uint64_t*>calloc(n, sizeof(uint64_t))
    cdef uint64_t* blocks = <uint64_t*>calloc(n, sizeof(uint64_t))
    cdef uint64_t* counts = <uint64_t*>calloc(n + 1, sizeof(uint64_t))
    cdef int i
    if cmasks == NULL or blocks == NULL or counts == NULL:
        free(cmasks); free(blocks); free(counts)
        raise MemoryError()
    try:
        for i in range(n):
            cmasks[i] = <uint64_t>masks[i]
        with nogil:
            _place(0, 0, n - 1, cmasks, blocks, counts)
        return [counts[i] for i in range(n + 1)]
    finally:
        free(cmasks)
        free(blocks)
        free(counts)
