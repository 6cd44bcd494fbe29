# cython: boundscheck=False, wraparound=False, cdivision=True
"""Bit-parallel reachability closure over dense node indices.

Same contract as ``reach_py.reach_closure``: rows are returned as Python
ints so callers never see the block layout.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free


def reach_closure(int n, edges):
    cdef int blocks = (n + 63) >> 6
    cdef size_t cells = <size_t> n * <size_t> blocks
    cdef uint64_t* r
    cdef int i, k, b, kb, lo, hi
    cdef uint64_t ko_bit
    cdef uint64_t* row_k

    if n == 0:
        return []
    r = <uint64_t*> calloc(cells, sizeof(uint64_t))
    if r == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            r[i * blocks + (i >> 6)] |= (<uint64_t> 1) << (i & 63)
        for lo, hi in edges:
            if lo < 0 or lo >= n or hi < 0 or hi >= n:
                raise IndexError("edge endpoint out of range")
            r[lo * blocks + (hi >> 6)] |= (<uint64_t> 1) << (hi & 63)
        for k in range(n):
            kb = k >> 6
            ko_bit = (<uint64_t> 1) << (k & 63)
            row_k = r + k * blocks
            with nogil:
                for i in range(n):
                    if r[i * blocks + kb] & ko_bit:
                        for b in range(blocks):
                            r[i * blocks + b] |= row_k[b]
        out = []
        for i in range(n):
            val = 0
            for b in range(blocks - 1, -1, -1):
                val = (val << 64) | r[i * blocks + b]
            out.append(val)
        return out
    finally:
        free(r)
