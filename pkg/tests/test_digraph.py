import pytest
from hypothesis import given

from conftest import digraphs
from rainbowdom.digraph import (
    Digraph,
    cartesian_product,
    degrees,
    format_edge_list,
    from_mask,
    has_isolated_in,
    has_isolated_vertex,
    induced_subdigraph,
    is_packing,
    is_weakly_connected,
    out_neighborhood,
    parse_edge_list,
    to_dot,
    to_mask,
    weak_components,
)
from rainbowdom.errors import InvalidInput
from rainbowdom.families import directed_cycle, directed_path


def test_from_arcs_rejects_loops_duplicates_and_range():
    with pytest.raises(InvalidInput):
        Digraph.from_arcs(2, [(0, 0)])
    with pytest.raises(InvalidInput):
        Digraph.from_arcs(2, [(0, 1), (0, 1)])
    with pytest.raises(InvalidInput):
        Digraph.from_arcs(2, [(0, 2)])


def test_opposite_arcs_are_allowed():
    d = Digraph.from_arcs(2, [(0, 1), (1, 0)])
    assert d.num_arcs == 2
    assert d.in_adj[0] == (1,) or set(d.in_adj[0]) == {1}


def test_mask_helpers():
    assert to_mask([0, 3]) == 0b1001
    assert from_mask(0b1010) == frozenset({1, 3})


def test_neighbourhoods_of_path():
    p = directed_path(4)
    assert out_neighborhood(p, [1]) == {2}
    assert out_neighborhood(p, [1], closed=True) == {1, 2}
    assert degrees(p) == (1, 1, 0, 0)


def test_degrees_of_empty_digraph_rejected():
    with pytest.raises(InvalidInput):
        degrees(Digraph.from_arcs(0, []))


def test_isolation_and_components():
    d = Digraph.from_arcs(5, [(0, 1), (2, 3)])
    assert has_isolated_vertex(d)
    assert sorted(weak_components(d)) == [0b00011, 0b01100, 0b10000]
    assert not is_weakly_connected(d)
    assert has_isolated_in(d, to_mask([0, 2, 3]))
    assert not has_isolated_in(d, to_mask([2, 3]))


def test_induced_subdigraph_relabels():
    c = directed_cycle(4)
    sub, relabel = induced_subdigraph(c, [1, 2, 3])
    assert relabel == {1: 0, 2: 1, 3: 2}
    assert sub.arcs == ((0, 1), (1, 2))


def test_packing():
    p = directed_path(5)
    assert is_packing(p, [0, 2, 4])
    assert not is_packing(p, [0, 1])


def test_cartesian_product_of_paths():
    g = cartesian_product(directed_path(2), directed_path(3))
    assert g.n == 6
    # (x, y) is vertex x*3 + y; arcs move along one coordinate
    assert set(g.arcs) == {(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)}


def test_edge_list_parse_errors():
    for bad in ["", "2", "2 1\n0", "2 1\n0 x", "2 2\n0 1", "2 1\n0 5", "2 1\n1 1"]:
        with pytest.raises(InvalidInput):
            parse_edge_list(bad)


def test_dot_output():
    text = to_dot(directed_path(2))
    assert "0 -> 1;" in text and text.startswith("digraph")


@given(digraphs(max_n=7))
def test_edge_list_round_trip(d):
    assert parse_edge_list(format_edge_list(d)) == d


@given(digraphs(max_n=6))
def test_in_and_out_adjacency_agree(d):
    for u, v in d.arcs:
        assert v in d.out_adj[u] and u in d.in_adj[v]
    assert sum(len(a) for a in d.in_adj) == d.num_arcs


@given(digraphs(max_n=4), digraphs(max_n=3))
def test_product_arc_count(d1, d2):
    g = cartesian_product(d1, d2)
    assert g.n == d1.n * d2.n
    assert g.num_arcs == d1.n * d2.num_arcs + d2.n * d1.num_arcs
