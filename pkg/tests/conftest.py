import sys
from pathlib import Path

import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

from rainbowdom.digraph import Digraph, has_isolated_vertex

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def digraphs(draw, min_n=1, max_n=6, no_isolated=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    d = Digraph.from_arcs(n, chosen)
    if no_isolated:
        # attach every isolated vertex to its successor mod n
        extra = [(v, (v + 1) % n) for v in range(n) if not d.nbr_mask[v] and n > 1]
        d = Digraph.from_arcs(n, sorted(set(chosen) | set(extra)))
    return d


def no_isolated_digraphs(min_n=2, max_n=6):
    return digraphs(min_n=max(2, min_n), max_n=max_n, no_isolated=True).filter(lambda d: not has_isolated_vertex(d))
