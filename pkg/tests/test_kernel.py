import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vplogic._kernel import backend, reach_py

from oracles import dfs_pairs

try:
    from vplogic._kernel import _reach
except ImportError:
    _reach = None


def to_pairs(masks):
    return {
        (i, j)
        for i, mask in enumerate(masks)
        for j in range(len(masks))
        if mask >> j & 1
    }


graphs = st.integers(0, 14).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(
            st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))),
            max_size=30,
        )
        if n
        else st.just([]),
    )
)


@given(graphs)
def test_pure_matches_dfs(graph):
    n, edges = graph
    assert to_pairs(reach_py.reach_closure(n, edges)) == dfs_pairs(n, edges)


@pytest.mark.skipif(_reach is None, reason="compiled kernel not built")
@given(graphs)
@settings(max_examples=200)
def test_compiled_matches_pure(graph):
    n, edges = graph
    assert _reach.reach_closure(n, edges) == reach_py.reach_closure(n, edges)


@pytest.mark.skipif(_reach is None, reason="compiled kernel not built")
def test_compiled_handles_wide_graphs():
    # More than one 64-bit block per row.
    n = 150
    edges = [(i, i + 1) for i in range(n - 1)]
    assert _reach.reach_closure(n, edges) == reach_py.reach_closure(n, edges)


def test_backend_is_reported():
    assert backend in ("compiled", "python")


def test_empty_graph():
    assert reach_py.reach_closure(0, []) == []
