"""Generators for the digraph families behind the bounds and their sharpness.

Where a construction allows "any" set of joining arcs, the canonical choice
is a directed path through the designated vertices in index order.  Passing
``seed`` adds further random arcs among the designated vertices; every such
choice is still admissible.
"""

from __future__ import annotations

import random
from collections.abc import Iterator
from dataclasses import dataclass, field
from itertools import product

from .digraph import Digraph, cartesian_product, has_isolated_in, has_isolated_vertex, is_weakly_connected, to_mask
from .errors import InvalidInput

FAMILIES = (
    "directed_path",
    "directed_cycle",
    "directed_star",
    "remark1",
    "remark2_stars",
    "thm23_lower_stars",
    "bipartite_kxm",
    "thm33_sharp",
    "thm34_sharp_stars",
    "grid",
)

# short names accepted on the command line
ALIASES = {
    "path": "directed_path",
    "cycle": "directed_cycle",
    "star": "directed_star",
    "remark2": "remark2_stars",
    "thm23": "thm23_lower_stars",
    "bipartite": "bipartite_kxm",
    "thm33": "thm33_sharp",
    "thm34": "thm34_sharp_stars",
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidInput(f"unknown family {self.family!r}")

    def __hash__(self):
        return hash((self.family, tuple(sorted((k, str(v)) for k, v in self.params.items()))))


def directed_path(n: int) -> Digraph:
    if n < 1:
        raise InvalidInput("a path needs at least one vertex")
    return Digraph.from_arcs(n, [(i, i + 1) for i in range(n - 1)])


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise InvalidInput("a directed cycle needs at least two vertices")
    return Digraph.from_arcs(n, [(i, (i + 1) % n) for i in range(n)])


def directed_star(n: int) -> Digraph:
    """``S_n``: centre 0 with arcs to leaves ``1..n-1`` (order ``n``)."""
    if n < 2:
        raise InvalidInput("a directed star has order at least 2")
    return Digraph.from_arcs(n, [(0, i) for i in range(1, n)])


def _join(vertices: list[int], seed: int | None) -> list[tuple[int, int]]:
    arcs = list(zip(vertices, vertices[1:]))
    if seed is not None:
        rng = random.Random(seed)
        have = set(arcs)
        for u in vertices:
            for v in vertices:
                if u != v and (u, v) not in have and rng.random() < 0.5:
                    arcs.append((u, v))
    return arcs


def _stars(sizes: list[int]) -> tuple[list[tuple[int, int]], list[int]]:
    """Disjoint stars laid out consecutively; returns arcs and centre indices."""
    arcs, centres = [], []
    base = 0
    for size in sizes:
        centres.append(base)
        arcs += [(base, base + i) for i in range(1, size)]
        base += size
    return arcs, centres


def _star_sizes(t: int, sizes, least: int, rule: str) -> list[int]:
    if t < 2:
        raise InvalidInput("need t >= 2 stars")
    sizes = [least] * t if sizes is None else list(sizes)
    if len(sizes) != t:
        raise InvalidInput(f"expected {t} star sizes, got {len(sizes)}")
    if any(s < least for s in sizes):
        raise InvalidInput(f"every star order must satisfy {rule} (>= {least})")
    return sizes


def remark1(t: int, k: int) -> Digraph:
    """Star ``S_t`` (centre 0) plus ``x = t``, ``y = t + 1`` and arcs ``x->y->0``."""
    if t < k + 1 or t < 2:
        raise InvalidInput("remark1 needs t >= k + 1 (and t >= 2)")
    arcs = [(0, i) for i in range(1, t)] + [(t, t + 1), (t + 1, 0)]
    return Digraph.from_arcs(t + 2, arcs)


def remark2_stars(t: int, k: int, sizes=None, seed: int | None = None) -> Digraph:
    """``t`` stars of order ``>= k + 2`` whose first leaves are joined into a connected digraph."""
    sizes = _star_sizes(t, sizes, k + 2, "i_j >= k+2")
    arcs, centres = _stars(sizes)
    d = Digraph.from_arcs(sum(sizes), arcs + _join([c + 1 for c in centres], seed))
    if not is_weakly_connected(d):
        raise InvalidInput("joining arcs failed to connect the stars")
    return d


def thm23_lower_stars(t: int, k: int, sizes=None, seed: int | None = None) -> Digraph:
    """``t`` stars of order ``>= k + 1`` whose centres are joined into a connected digraph."""
    sizes = _star_sizes(t, sizes, k + 1, "i_j >= k+1")
    arcs, centres = _stars(sizes)
    d = Digraph.from_arcs(sum(sizes), arcs + _join(centres, seed))
    if not is_weakly_connected(d):
        raise InvalidInput("joining arcs failed to connect the stars")
    return d


def thm34_sharp_stars(t: int, k: int, k2: int, sizes=None, seed: int | None = None) -> Digraph:
    """``t`` stars of order ``>= k2 + 1``; the centres induce a digraph without isolated vertices."""
    if not 1 <= k < k2:
        raise InvalidInput("need 1 <= k < k2")
    sizes = _star_sizes(t, sizes, k2 + 1, "i_j >= k'+1")
    arcs, centres = _stars(sizes)
    d = Digraph.from_arcs(sum(sizes), arcs + _join(centres, seed))
    if has_isolated_in(d, to_mask(centres)):
        raise InvalidInput("centres must induce a digraph without isolated vertices")
    return d


def bipartite_kxm(k: int, m: int) -> Digraph:
    """``x_1..x_k`` (vertices ``0..k-1``) each with an arc to every ``y_1..y_m``."""
    if k < 1 or m < 1:
        raise InvalidInput("need k >= 1 and m >= 1")
    return Digraph.from_arcs(k + m, [(i, k + j) for i in range(k) for j in range(m)])


def thm33_sharp(k: int) -> Digraph:
    """``u_1..u_k`` (``0..k-1``), ``v_1..v_k`` (``k..2k-1``), all arcs ``v_i->u_j``, path ``v_1->..->v_k``."""
    if k < 2:
        raise InvalidInput("thm33_sharp needs k >= 2")
    arcs = [(k + i, j) for i in range(k) for j in range(k)]
    arcs += [(k + i, k + i + 1) for i in range(k - 1)]
    return Digraph.from_arcs(2 * k, arcs)


def grid(m: int, n: int) -> Digraph:
    return cartesian_product(directed_path(m), directed_path(n))


_BUILDERS = {
    "directed_path": (directed_path, ("n",)),
    "directed_cycle": (directed_cycle, ("n",)),
    "directed_star": (directed_star, ("n",)),
    "remark1": (remark1, ("t", "k")),
    "remark2_stars": (remark2_stars, ("t", "k")),
    "thm23_lower_stars": (thm23_lower_stars, ("t", "k")),
    "bipartite_kxm": (bipartite_kxm, ("k", "m")),
    "thm33_sharp": (thm33_sharp, ("k",)),
    "thm34_sharp_stars": (thm34_sharp_stars, ("t", "k", "k2")),
    "grid": (grid, ("m", "n")),
}
_OPTIONAL = {"sizes", "seed"}


def generate(spec: FamilySpec) -> Digraph:
    builder, required = _BUILDERS[spec.family]
    params = dict(spec.params)
    missing = [p for p in required if p not in params]
    if missing:
        raise InvalidInput(f"{spec.family} needs parameter(s) {', '.join(missing)}")
    unknown = set(params) - set(required) - _OPTIONAL
    if unknown:
        raise InvalidInput(f"{spec.family} does not take {', '.join(sorted(unknown))}")
    return builder(**params)


def parse_family(text: str) -> FamilySpec:
    """Parse strings such as ``star:4``, ``grid:2x5`` or ``remark2:t=2,k=2,sizes=4,4``."""
    name, _, rest = text.partition(":")
    family = ALIASES.get(name, name)
    if family not in FAMILIES:
        raise InvalidInput(f"unknown family {name!r}")
    required = _BUILDERS[family][1]
    params: dict = {}
    try:
        if family == "grid":
            m, n = rest.lower().split("x")
            return FamilySpec(family, {"m": int(m), "n": int(n)})
        key = None
        positional = []
        for tok in filter(None, rest.split(",")):
            if "=" in tok:
                key, val = tok.split("=", 1)
                key = "k2" if key in ("kp", "k'") else key
                params[key] = [int(val)] if key == "sizes" else int(val)
            elif key == "sizes":
                params["sizes"].append(int(tok))
            elif key is None:
                positional.append(int(tok))
            else:
                raise InvalidInput(f"stray value {tok!r} after {key}=")
    except ValueError:
        raise InvalidInput(f"cannot parse family string {text!r}") from None
    for p, v in zip(required, positional):
        params.setdefault(p, v)
    if len(positional) > len(required):
        raise InvalidInput(f"too many positional values in {text!r}")
    return FamilySpec(family, params)


def enumerate_small(n: int, require_no_isolated: bool = False) -> Iterator[Digraph]:
    """Every labelled loop-free digraph on ``n <= 4`` vertices, by arc bit pattern.

    Bit ``b`` of the pattern switches on the ``b``-th ordered pair ``(u, v)``,
    ``u != v``, in lexicographic order.
    """
    if not 1 <= n <= 4:
        raise InvalidInput("enumerate_small supports 1 <= n <= 4")
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for pattern in range(1 << len(pairs)):
        d = Digraph.from_arcs(n, [p for b, p in enumerate(pairs) if pattern >> b & 1])
        if require_no_isolated and has_isolated_vertex(d):
            continue
        yield d


def random_digraph(n: int, p: float, seed: int) -> Digraph:
    """Independent arcs with probability ``p``, drawn from ``random.Random(seed)`` (MT19937).

    Ordered pairs are visited lexicographically and pair ``(u, v)`` gets an arc
    when the next ``random()`` draw is below ``p``.
    """
    if n < 1 or not 0.0 <= p <= 1.0:
        raise InvalidInput("need n >= 1 and 0 <= p <= 1")
    rng = random.Random(seed)
    arcs = [(u, v) for u, v in product(range(n), repeat=2) if u != v and rng.random() < p]
    return Digraph.from_arcs(n, arcs)
