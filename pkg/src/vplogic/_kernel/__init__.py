"""Reachability kernel with a compiled fast path.

``reach_closure(n, edges)`` returns the reflexive-transitive closure of a
directed graph on nodes ``0..n-1`` as one Python-int bitmask per node
(bit ``j`` of row ``i`` set iff ``j`` is reachable from ``i``).

The Cython extension and the pure-Python module implement the same
contract; whichever is importable wins.  Set ``VPLOGIC_PURE=1`` to force
the fallback, e.g. for benchmarking.
"""

import os

from . import reach_py

if os.environ.get("VPLOGIC_PURE"):
    backend = "python"
    reach_closure = reach_py.reach_closure
else:
    try:
        from . import _reach

        backend = "compiled"
        reach_closure = _reach.reach_closure
    except ImportError:
        backend = "python"
        reach_closure = reach_py.reach_closure

__all__ = ["reach_closure", "backend"]
