import json

import hypothesis.strategies as st
import pytest
from hypothesis import given

from conftest import no_isolated_digraphs
from rainbowdom.digraph import Digraph
from rainbowdom.errors import InvalidInput
from rainbowdom.families import directed_path, directed_star
from rainbowdom.rainbow import (
    RainbowAssignment,
    class_sizes,
    colorset,
    colors_of,
    isolated_positive_vertex,
    is_dominating_set,
    is_krdf,
    is_tkrdf,
    is_total_dominating_set,
    uncovered_empty_vertex,
    weight,
)


def A(k, *sets):
    return RainbowAssignment.from_sets(k, sets)


def test_colour_bits():
    assert colorset([1, 3]) == 0b101
    assert colors_of(0b110) == [2, 3]


def test_colours_out_of_range_rejected():
    with pytest.raises(InvalidInput):
        A(2, [3], [])
    with pytest.raises(InvalidInput):
        RainbowAssignment(0, ())
    with pytest.raises(InvalidInput):
        RainbowAssignment(17, ())


def test_star_labellings():
    s4 = directed_star(4)
    f = A(2, [1, 2], [1], [], [])
    assert is_krdf(s4, f) and is_tkrdf(s4, f)
    assert weight(f) == 3
    lonely = A(2, [1, 2], [], [], [])
    assert is_krdf(s4, lonely)
    assert not is_tkrdf(s4, lonely)
    assert isolated_positive_vertex(s4, lonely) == 0


def test_uncovered_vertex_reported():
    p = directed_path(3)
    f = A(2, [1], [], [1, 2])
    assert uncovered_empty_vertex(p, f) == 1
    assert not is_krdf(p, f)


def test_isolated_vertex_makes_total_undefined():
    d = Digraph.from_arcs(3, [(0, 1)])
    with pytest.raises(InvalidInput):
        is_tkrdf(d, A(1, [1], [1], [1]))


def test_size_mismatch_rejected():
    with pytest.raises(InvalidInput):
        is_krdf(directed_path(3), A(1, [1], [1]))


def test_dominating_sets():
    p = directed_path(4)
    assert is_dominating_set(p, [0, 2])
    assert not is_dominating_set(p, [1, 2])
    assert not is_total_dominating_set(p, [0, 2])
    assert is_total_dominating_set(p, [0, 1, 2])
    assert not is_total_dominating_set(p, [])


def test_json_round_trip_and_validation():
    f = A(3, [1, 3], [], [2])
    assert f.to_json() == {"k": 3, "values": [[1, 3], [], [2]]}
    assert RainbowAssignment.from_json(json.dumps(f.to_json())) == f
    for bad in ['{"k": 2}', '{"k": 2, "values": [[2, 1]]}', '{"k": 2, "values": [[1, 1]]}', '{"k": "2", "values": []}']:
        with pytest.raises(InvalidInput):
            RainbowAssignment.from_json(bad)


assignments = st.integers(1, 4).flatmap(
    lambda k: st.lists(st.integers(0, (1 << k) - 1), max_size=8).map(lambda vs: RainbowAssignment(k, tuple(vs)))
)


@given(assignments)
def test_weight_is_sum_of_class_sizes(f):
    assert weight(f) == sum(class_sizes(f))
    assert RainbowAssignment.from_json(f.to_json()) == f


@given(no_isolated_digraphs(max_n=6), st.integers(1, 3))
def test_all_colours_everywhere_is_total(d, k):
    f = RainbowAssignment.constant(k, d.n, range(1, k + 1))
    assert is_tkrdf(d, f)
    assert weight(f) == k * d.n


@given(no_isolated_digraphs(max_n=6), st.integers(1, 3))
def test_single_colour_everywhere_is_total(d, k):
    assert is_tkrdf(d, RainbowAssignment.constant(k, d.n, [1]))
