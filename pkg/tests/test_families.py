import pytest
from hypothesis import given
import hypothesis.strategies as st

from rainbowdom.digraph import degrees, has_isolated_vertex, is_weakly_connected
from rainbowdom.errors import InvalidInput
from rainbowdom.families import (
    FamilySpec,
    bipartite_kxm,
    enumerate_small,
    generate,
    parse_family,
    random_digraph,
    remark1,
    remark2_stars,
    thm23_lower_stars,
    thm33_sharp,
    thm34_sharp_stars,
)


def test_parse_family_strings():
    assert parse_family("star:4") == FamilySpec("directed_star", {"n": 4})
    assert parse_family("grid:2x5") == FamilySpec("grid", {"m": 2, "n": 5})
    assert parse_family("remark2:t=2,k=2,sizes=4,4") == FamilySpec("remark2_stars", {"t": 2, "k": 2, "sizes": [4, 4]})
    assert parse_family("thm34:t=2,k=1,kp=2").params == {"t": 2, "k": 1, "k2": 2}
    assert parse_family("bipartite:2,3").params == {"k": 2, "m": 3}


@pytest.mark.parametrize("text", ["nope:3", "star:x", "grid:2by3", "star:1,2", "remark2:t=2,k=2,5"])
def test_parse_family_rejects(text):
    with pytest.raises(InvalidInput):
        parse_family(text)


def test_generate_checks_parameters():
    with pytest.raises(InvalidInput):
        generate(FamilySpec("directed_star", {}))
    with pytest.raises(InvalidInput):
        generate(FamilySpec("directed_star", {"n": 3, "q": 1}))
    with pytest.raises(InvalidInput):
        FamilySpec("bogus")


def test_star_order_constraints():
    with pytest.raises(InvalidInput):
        remark2_stars(2, 2, sizes=[4, 3])
    with pytest.raises(InvalidInput):
        thm23_lower_stars(2, 2, sizes=[3, 2])
    with pytest.raises(InvalidInput):
        thm34_sharp_stars(2, 2, 2)
    with pytest.raises(InvalidInput):
        remark1(2, 2)


def test_family_shapes():
    assert remark1(3, 2).n == 5
    assert remark2_stars(2, 2).n == 8
    b = bipartite_kxm(2, 3)
    assert b.n == 5 and b.num_arcs == 6
    t = thm33_sharp(3)
    assert t.n == 6 and degrees(t)[0] == 4


@given(st.integers(2, 4), st.integers(1, 3), st.integers(0, 10**6))
def test_seeded_joins_stay_admissible(t, k, seed):
    for d in (remark2_stars(t, k, seed=seed), thm23_lower_stars(t, k, seed=seed)):
        assert is_weakly_connected(d) and not has_isolated_vertex(d)
    assert not has_isolated_vertex(thm34_sharp_stars(t, k, k + 1, seed=seed))


def test_enumerate_small_counts():
    # 2^(n(n-1)) labelled digraphs
    assert [sum(1 for _ in enumerate_small(n)) for n in (1, 2, 3)] == [1, 4, 64]
    # no-isolated counts: n=2 -> 3, n=3 -> 54 (inclusion-exclusion)
    assert sum(1 for _ in enumerate_small(2, True)) == 3
    assert sum(1 for _ in enumerate_small(3, True)) == 54
    with pytest.raises(InvalidInput):
        next(enumerate_small(5))


def test_random_digraph_is_seeded():
    assert random_digraph(7, 0.3, 5) == random_digraph(7, 0.3, 5)
    assert random_digraph(5, 0.0, 1).num_arcs == 0
    assert random_digraph(5, 1.0, 1).num_arcs == 20
