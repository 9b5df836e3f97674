import hypothesis.strategies as st
import pytest
from hypothesis import assume, given

from conftest import no_isolated_digraphs
from rainbowdom import constructions as cons
from rainbowdom.digraph import Digraph, is_weakly_connected
from rainbowdom.errors import InvalidInput
from rainbowdom.families import directed_path, directed_star, remark1, thm33_sharp
from rainbowdom.grid import GridSpec, closed_form
from rainbowdom.rainbow import RainbowAssignment, is_krdf, is_tkrdf, weight
from rainbowdom.solve import gamma, gamma_rk, gamma_t, gamma_trk


def test_dominating_set_construction_on_star():
    s = directed_star(4)
    f = cons.tkrdf_from_dominating_set(s, {0}, 2)
    assert is_tkrdf(s, f) and weight(f) == 3
    with pytest.raises(InvalidInput):
        cons.tkrdf_from_dominating_set(s, {1}, 2)


def test_td_set_construction():
    p = directed_path(4)
    f = cons.tkrdf_from_td_set(p, {0, 1, 2}, 2)
    assert weight(f) == 6 and is_tkrdf(p, f)
    with pytest.raises(InvalidInput):
        cons.tkrdf_from_td_set(p, {0, 2}, 2)


def test_partitioned_td_set():
    d = thm33_sharp(2)  # v_1 = 2, v_2 = 3 both reach u_1, u_2
    f = cons.tkrdf_from_partitioned_td_set(d, [{2}, {3}], 2)
    assert f.as_sets() == [[], [], [1], [2]]
    assert is_tkrdf(d, f)
    with pytest.raises(InvalidInput, match="part 2"):
        cons.tkrdf_from_partitioned_td_set(d, [{2, 3}, set()], 2)
    with pytest.raises(InvalidInput):
        cons.tkrdf_from_partitioned_td_set(d, [{2}], 2)


def test_extend_colors_uses_smallest_class():
    d = directed_star(4)
    f = RainbowAssignment.from_sets(2, [[1, 2], [1], [], []])
    g = cons.extend_colors(d, f, 3)
    assert g.as_sets() == [[1, 2, 3], [1], [], []]
    with pytest.raises(InvalidInput):
        cons.extend_colors(d, f, 2)


def test_totalize_rejects_bad_input():
    with pytest.raises(InvalidInput):
        cons.totalize_rkdf(Digraph.from_arcs(4, [(0, 1), (2, 3)]), RainbowAssignment.constant(1, 4, [1]))
    with pytest.raises(InvalidInput):
        cons.totalize_rkdf(directed_path(3), RainbowAssignment.constant(2, 3))


@pytest.mark.parametrize("m,k", [(2, 2), (2, 3), (3, 3)])
def test_grid_certificates(m, k):
    for n in range(m, 13):
        spec = GridSpec(m, n, k)
        f = cons.grid_certificate(spec)
        assert is_tkrdf(spec.digraph(), f)
        assert weight(f) == closed_form(spec)


def test_grid_certificate_uncovered():
    with pytest.raises(InvalidInput):
        cons.grid_certificate(GridSpec(3, 4, 2))


def test_equals_k_cases():
    r = cons.check_gamma_trk_equals_k(thm33_sharp(2), 2)
    assert r.holds and r.case == "b"
    assert cons.check_gamma_trk_equals_k(Digraph.from_arcs(2, [(0, 1)]), 2).case == "a"
    assert not cons.check_gamma_trk_equals_k(directed_path(4), 2).holds
    with pytest.raises(InvalidInput):
        cons.check_gamma_trk_equals_k(directed_path(4), 1)


def test_packing_condition_is_not_sufficient():
    d = remark1(3, 2)
    rep = cons.check_equality_condition_2_1(d, 2)
    assert rep.all_packings and not rep.equality and not rep.violation


def test_support_vertices():
    assert cons.support_vertices(directed_star(4)) == {0}


@given(no_isolated_digraphs(max_n=6), st.integers(1, 3))
def test_constructions_respect_their_bounds(d, k):
    g, gt = gamma(d), gamma_t(d)
    f = cons.tkrdf_from_dominating_set(d, g.certificate, k)
    assert is_tkrdf(d, f) and weight(f) <= (k + 1) * g.value
    f = cons.tkrdf_from_td_set(d, gt.certificate, k)
    assert is_tkrdf(d, f) and weight(f) == k * gt.value
    t = gamma_trk(d, k)
    f = cons.extend_colors(d, t.certificate, k + 1)
    assert is_tkrdf(d, f) and weight(f) <= t.value + t.value // k


@given(no_isolated_digraphs(max_n=6), st.integers(1, 3))
def test_totalize_bound(d, k):
    assume(is_weakly_connected(d) and d.n >= max(k, 2))
    r = gamma_rk(d, k)
    f = cons.totalize_rkdf(d, r.certificate)
    assert is_krdf(d, f) and is_tkrdf(d, f)
    assert weight(f) <= min(d.n, 2 * r.value - k + 1)


@given(no_isolated_digraphs(max_n=6), st.integers(2, 3))
def test_equals_k_characterisation(d, k):
    res = cons.check_gamma_trk_equals_k(d, k)
    assert res.holds == (gamma_trk(d, k).value == k)
    if res.witness is not None:
        f = cons.tkrdf_from_equals_k_witness(d, res.witness, k)
        assert is_tkrdf(d, f) and weight(f) == k


@given(no_isolated_digraphs(max_n=6), st.integers(1, 3))
def test_total_equality_conditions(d, k):
    assume(d.n >= k)
    rep = cons.check_equality_condition_2_2(d, k)
    assert rep.consistent
    if rep.partition is not None:
        f = cons.tkrdf_from_partitioned_td_set(d, rep.partition, k)
        assert weight(f) == rep.gamma_t


@given(no_isolated_digraphs(max_n=6), st.integers(1, 3))
def test_packing_is_necessary(d, k):
    assert not cons.check_equality_condition_2_1(d, k).violation
