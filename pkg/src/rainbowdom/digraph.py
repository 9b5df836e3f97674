"""Loop-free digraphs on vertices ``0..n-1``.

Vertex sets are passed in as any iterable of ints and returned as
``frozenset``.  Internally most code works on int bitmasks, where bit ``v``
stands for vertex ``v``; ``Digraph.out_mask``/``in_mask`` expose them.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

from .errors import InvalidInput

# Largest vertex count a product may have (vertex ids must fit a signed 32-bit index).
MAX_INDEX = 2**31 - 1


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


@dataclass(frozen=True)
class Digraph:
    n: int
    out_adj: tuple[tuple[int, ...], ...]
    in_adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInput("vertex count must be non-negative")
        if len(self.out_adj) != self.n or len(self.in_adj) != self.n:
            raise InvalidInput("adjacency lists must have one entry per vertex")
        check_consistency(self)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
        """Build from an arc list, rejecting loops, repeated arcs and bad indices."""
        out: list[list[int]] = [[] for _ in range(n)]
        inn: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInput(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidInput(f"loop at vertex {u}")
            if (u, v) in seen:
                raise InvalidInput(f"duplicate arc ({u}, {v})")
            seen.add((u, v))
            out[u].append(v)
            inn[v].append(u)
        return cls(
            n,
            tuple(tuple(sorted(a)) for a in out),
            tuple(tuple(sorted(a)) for a in inn),
        )

    @cached_property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in self.out_adj[u])

    @property
    def num_arcs(self) -> int:
        return sum(len(a) for a in self.out_adj)

    @cached_property
    def out_mask(self) -> tuple[int, ...]:
        return tuple(to_mask(a) for a in self.out_adj)

    @cached_property
    def in_mask(self) -> tuple[int, ...]:
        return tuple(to_mask(a) for a in self.in_adj)

    @cached_property
    def nbr_mask(self) -> tuple[int, ...]:
        """Underlying undirected neighbourhood of each vertex."""
        return tuple(o | i for o, i in zip(self.out_mask, self.in_mask))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def out_degree(self, v: int) -> int:
        return len(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_adj[v])

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={list(self.arcs)})"


def check_consistency(d: Digraph) -> None:
    """Raise if the adjacency lists violate the digraph invariants."""
    for u in range(d.n):
        outs = d.out_adj[u]
        if len(set(outs)) != len(outs):
            raise InvalidInput(f"duplicate out-neighbour at {u}")
        if u in outs:
            raise InvalidInput(f"loop at vertex {u}")
        for v in outs:
            if not 0 <= v < d.n:
                raise InvalidInput(f"arc ({u}, {v}) out of range")
            if u not in d.in_adj[v]:
                raise InvalidInput(f"arc ({u}, {v}) missing from in-list of {v}")
    if sum(len(a) for a in d.in_adj) != sum(len(a) for a in d.out_adj):
        raise InvalidInput("in-lists and out-lists disagree")


def _checked_mask(d: Digraph, vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        if not 0 <= v < d.n:
            raise InvalidInput(f"vertex {v} out of range for n={d.n}")
        m |= 1 << v
    return m


def out_neighborhood_mask(d: Digraph, s: int, closed: bool = False) -> int:
    acc = s if closed else 0
    out = d.out_mask
    for v in iter_bits(s):
        acc |= out[v]
    return acc


def out_neighborhood(d: Digraph, s: Iterable[int], closed: bool = False) -> frozenset[int]:
    """Union of out-neighbourhoods of ``s``; includes ``s`` itself when ``closed``."""
    return from_mask(out_neighborhood_mask(d, _checked_mask(d, s), closed))


def degrees(d: Digraph) -> tuple[int, int, int, int]:
    """Return ``(max out, max in, min out, min in)`` degree."""
    if d.n == 0:
        raise InvalidInput("degrees of the empty digraph are undefined")
    outs = [len(a) for a in d.out_adj]
    ins = [len(a) for a in d.in_adj]
    return max(outs), max(ins), min(outs), min(ins)


def has_isolated_vertex(d: Digraph) -> bool:
    return any(not m for m in d.nbr_mask)


def induced_subdigraph(d: Digraph, s: Iterable[int]) -> tuple[Digraph, dict[int, int]]:
    """Subdigraph induced by ``s`` plus the relabelling old index -> new index."""
    keep = sorted(from_mask(_checked_mask(d, s)))
    relabel = {v: i for i, v in enumerate(keep)}
    arcs = [(relabel[u], relabel[v]) for u in keep for v in d.out_adj[u] if v in relabel]
    return Digraph.from_arcs(len(keep), arcs), relabel


def has_isolated_in(d: Digraph, s: int) -> bool:
    """True iff some member of mask ``s`` has no neighbour inside ``s``."""
    nbr = d.nbr_mask
    for v in iter_bits(s):
        if not nbr[v] & s:
            return True
    return False


def weak_components(d: Digraph, s: int | None = None) -> list[int]:
    """Weakly connected components of ``d[s]`` as masks, ordered by smallest vertex."""
    remaining = d.full_mask if s is None else s
    nbr = d.nbr_mask
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= nbr[v]
            frontier = grow & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_weakly_connected(d: Digraph) -> bool:
    if d.n == 0:
        raise InvalidInput("connectivity of the empty digraph is undefined")
    return len(weak_components(d)) == 1


def is_packing(d: Digraph, s: Iterable[int]) -> bool:
    """Closed out-neighbourhoods of distinct members of ``s`` are pairwise disjoint."""
    seen = 0
    out = d.out_mask
    for v in iter_bits(_checked_mask(d, s)):
        closed = out[v] | (1 << v)
        if closed & seen:
            return False
        seen |= closed
    return True


def cartesian_product(d1: Digraph, d2: Digraph) -> Digraph:
    """Cartesian product; vertex ``(x, y)`` gets index ``x * d2.n + y``."""
    if d1.n == 0 or d2.n == 0:
        raise InvalidInput("product factors must be nonempty")
    if d1.n * d2.n > MAX_INDEX:
        raise InvalidInput(f"product of orders {d1.n} and {d2.n} overflows the vertex index")
    n2 = d2.n
    arcs = [(x1 * n2 + y, x2 * n2 + y) for x1, x2 in d1.arcs for y in range(n2)]
    arcs += [(x * n2 + y1, x * n2 + y2) for x in range(d1.n) for y1, y2 in d2.arcs]
    return Digraph.from_arcs(d1.n * n2, arcs)


def parse_edge_list(text: str) -> Digraph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-indexed)."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InvalidInput("empty edge list")
    try:
        header = [int(x) for x in lines[0]]
        body = [tuple(int(x) for x in ln) for ln in lines[1:]]
    except ValueError as exc:
        raise InvalidInput(f"non-integer token in edge list: {exc}") from None
    if len(header) != 2:
        raise InvalidInput("first line must be 'n m'")
    n, m = header
    if n < 0 or m < 0:
        raise InvalidInput("n and m must be non-negative")
    if len(body) != m:
        raise InvalidInput(f"header announces {m} arcs, found {len(body)}")
    for row in body:
        if len(row) != 2:
            raise InvalidInput(f"arc line must have two integers, got {row}")
    return Digraph.from_arcs(n, body)


def format_edge_list(d: Digraph) -> str:
    lines = [f"{d.n} {d.num_arcs}"] + [f"{u} {v}" for u, v in d.arcs]
    return "\n".join(lines) + "\n"


def to_dot(d: Digraph, name: str = "D") -> str:
    body = "".join(f"  {v};\n" for v in range(d.n))
    body += "".join(f"  {u} -> {v};\n" for u, v in d.arcs)
    return f"digraph {name} {{\n{body}}}\n"
