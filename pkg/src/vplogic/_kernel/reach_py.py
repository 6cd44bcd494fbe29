"""Pure-Python reachability closure (bitset Floyd-Warshall)."""


def reach_closure(n, edges):
    """Reflexive-transitive closure as one bitmask per node.

    ``edges`` is an iterable of ``(lo, hi)`` index pairs meaning ``hi`` is
    directly reachable from ``lo``.  Row ``i`` of the result has bit ``j``
    set iff ``j`` is reachable from ``i`` (always including ``i`` itself).
    """
    reach = [1 << i for i in range(n)]
    for lo, hi in edges:
        reach[lo] |= 1 << hi
    for k in range(n):
        bit = 1 << k
        row_k = reach[k]
        for i in range(n):
            if reach[i] & bit:
                reach[i] |= row_k
    return reach
