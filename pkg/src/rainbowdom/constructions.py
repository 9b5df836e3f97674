"""Constructive upper-bound certificates and the structural equality tests.

Whenever a construction has a free choice of vertex, it takes the smallest
index, trying out-neighbours before in-neighbours.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations

from .digraph import (
    Digraph,
    has_isolated_in,
    has_isolated_vertex,
    is_packing,
    is_weakly_connected,
    iter_bits,
    out_neighborhood_mask,
    to_mask,
    weak_components,
)
from .errors import InvalidInput
from .grid import GridSpec, closed_form
from .rainbow import (
    RainbowAssignment,
    check_k,
    class_sizes,
    colorset,
    full_colors,
    is_dominating_set,
    is_krdf,
    is_tkrdf,
    is_total_dominating_set,
    weight,
)
from .solve import SolveBudget, gamma_trk, minimum_dominating_sets


def _pick_neighbour(d: Digraph, v: int, allowed: int) -> int | None:
    """Smallest out-neighbour of ``v`` within ``allowed``, else smallest in-neighbour."""
    for m in (d.out_mask[v] & allowed, d.in_mask[v] & allowed):
        if m:
            return (m & -m).bit_length() - 1
    return None


def tkrdf_from_dominating_set(d: Digraph, s: Iterable[int], k: int) -> RainbowAssignment:
    """All colours on a dominating set, plus ``{1}`` on one neighbour of each
    member that has no neighbour inside the set."""
    check_k(k)
    if has_isolated_vertex(d):
        raise InvalidInput("the digraph has an isolated vertex")
    s = set(s)
    if not is_dominating_set(d, s):
        raise InvalidInput("S is not a dominating set")
    sm = to_mask(s)
    values = [full_colors(k) if v in s else 0 for v in range(d.n)]
    for v in sorted(s):
        if d.nbr_mask[v] & sm:
            continue
        w = _pick_neighbour(d, v, d.full_mask & ~sm)
        values[w] |= 1
    return RainbowAssignment(k, tuple(values))


def tkrdf_from_td_set(d: Digraph, x: Iterable[int], k: int) -> RainbowAssignment:
    check_k(k)
    x = set(x)
    if not is_total_dominating_set(d, x):
        raise InvalidInput("X is not a total dominating set")
    return RainbowAssignment(k, tuple(full_colors(k) if v in x else 0 for v in range(d.n)))


def tkrdf_from_partitioned_td_set(d: Digraph, parts: Sequence[Iterable[int]], k: int) -> RainbowAssignment:
    """Colour ``i`` on the ``i``-th part; each part must dominate everything outside the union."""
    check_k(k)
    parts = [set(p) for p in parts]
    if len(parts) != k:
        raise InvalidInput(f"expected {k} parts, got {len(parts)}")
    union: set[int] = set()
    for i, p in enumerate(parts, start=1):
        if not p:
            raise InvalidInput(f"part {i} is empty")
        if union & p:
            raise InvalidInput(f"part {i} overlaps an earlier part")
        union |= p
    if not is_total_dominating_set(d, union):
        raise InvalidInput("the union of the parts is not a total dominating set")
    rest = d.full_mask & ~to_mask(union)
    for i, p in enumerate(parts, start=1):
        if rest & ~out_neighborhood_mask(d, to_mask(p)):
            raise InvalidInput(f"part {i} does not dominate every vertex outside the union")
    values = [0] * d.n
    for i, p in enumerate(parts):
        for v in p:
            values[v] = 1 << i
    return RainbowAssignment(k, tuple(values))


def totalize_rkdf(d: Digraph, f: RainbowAssignment) -> RainbowAssignment:
    """Turn a k-rainbow dominating function into a total one.

    With ``u`` the first empty vertex: every component of the positive part
    with no in-neighbour of ``u`` gets one adjacent empty vertex labelled
    ``{1}``, and so does ``u``.  Falls back to all ``{1}`` if that is cheaper.
    """
    k = f.k
    if d.n < max(k, 2):
        raise InvalidInput("need n >= max(k, 2)")
    if has_isolated_vertex(d):
        raise InvalidInput("the digraph has an isolated vertex")
    if not is_weakly_connected(d):
        raise InvalidInput("the digraph is not connected")
    if not is_krdf(d, f):
        raise InvalidInput("f is not a k-rainbow dominating function")
    pos = f.positive_mask
    empty = d.full_mask & ~pos
    if not empty:
        return f
    u = (empty & -empty).bit_length() - 1
    values = list(f.values)
    for comp in weak_components(d, pos):
        if comp & d.in_mask[u]:
            continue
        reach_out = out_neighborhood_mask(d, comp) & empty
        if reach_out:
            w = (reach_out & -reach_out).bit_length() - 1
        else:
            reach_in = 0
            for v in iter_bits(comp):
                reach_in |= d.in_mask[v]
            reach_in &= empty
            w = (reach_in & -reach_in).bit_length() - 1
        values[w] |= 1
    values[u] |= 1
    g = RainbowAssignment(k, tuple(values))
    if weight(g) > d.n:
        return RainbowAssignment(k, (1,) * d.n)
    return g


def extend_colors(d: Digraph, f: RainbowAssignment, k2: int) -> RainbowAssignment:
    """Add colours ``k+1..k2`` to every vertex of the smallest colour class of ``f``."""
    k = f.k
    if k2 <= k:
        raise InvalidInput("k' must exceed k")
    check_k(k2)
    sizes = class_sizes(f)
    c = min(range(k), key=lambda i: (sizes[i], i))
    extra = full_colors(k2) & ~full_colors(k)
    values = tuple(cs | extra if cs >> c & 1 else cs for cs in f.values)
    return RainbowAssignment(k2, values)


def grid_certificate(spec: GridSpec) -> RainbowAssignment:
    """Explicit optimal labelling of ``P_m x P_n`` for the three solved cases."""
    m, n, k = spec.m, spec.n, spec.k
    if (m, k) not in ((2, 2), (2, 3), (3, 3)) or closed_form(spec) is None:
        raise InvalidInput(f"no explicit labelling for (m={m}, n={n}, k={k})")
    cells = [[0] * n for _ in range(m)]
    if (m, k) == (2, 2):
        for j in range(n):
            cells[0][j] = colorset([1])
            cells[1][j] = colorset([2]) if j % 2 == 0 else 0
    elif (m, k) == (2, 3):
        for j in range(n):
            cells[0][j] = colorset([1])
            cells[1][j] = colorset([2])
    else:
        for i in range(3):
            for j in range(n):
                cells[i][j] = colorset([3])
        if n % 3 == 0:
            pairs = range(n // 3)  # t with j = 3t+1
            gaps = range(n // 3 - 1)  # t with j = 3t+2
        else:
            pairs = range(-(-(n - 1) // 3))
            gaps = range(-(-(n - 2) // 3))
        for t in pairs:
            cells[1][3 * t + 1] = colorset([1, 2])
            cells[2][3 * t + 1] = 0
        for t in gaps:
            cells[1][3 * t + 2] = 0
    values = [cells[i][j] for i in range(m) for j in range(n)]
    return RainbowAssignment(k, tuple(values))


@dataclass
class EqualsKResult:
    holds: bool
    case: str | None  # "a" (n == k), "b" (witness set) or None
    witness: frozenset[int] | None = None


def check_gamma_trk_equals_k(d: Digraph, k: int) -> EqualsKResult:
    """Structural test for ``gamma_trk(D) == k`` (needs ``k >= 2``)."""
    if k < 2:
        raise InvalidInput("the characterisation needs k >= 2")
    check_k(k)
    if has_isolated_vertex(d):
        raise InvalidInput("the digraph has an isolated vertex")
    if d.n == k:
        return EqualsKResult(True, "a")
    if d.n < k + 1:
        return EqualsKResult(False, None)
    full = d.full_mask
    for t in range(2, k + 1):
        for combo in combinations(range(d.n), t):
            x = to_mask(combo)
            if has_isolated_in(d, x):
                continue
            rest = full & ~x
            if all(rest & ~d.out_mask[v] == 0 for v in combo):
                return EqualsKResult(True, "b", frozenset(combo))
    return EqualsKResult(False, None)


def tkrdf_from_equals_k_witness(d: Digraph, x, k: int) -> RainbowAssignment:
    """Weight-``k`` labelling from a witness set ``v_1..v_t``: ``{i}`` on ``v_i``
    for ``i < t`` and ``{t..k}`` on ``v_t``."""
    x = sorted(x)
    t = len(x)
    if not 2 <= t <= k:
        raise InvalidInput("witness must have between 2 and k vertices")
    values = [0] * d.n
    for i, v in enumerate(x[:-1], start=1):
        values[v] = colorset([i])
    values[x[-1]] = colorset(range(t, k + 1))
    return RainbowAssignment(k, tuple(values))


@dataclass
class PackingReport:
    k: int
    gamma: int
    gamma_trk: int
    equality: bool  # gamma_trk == (k+1) * gamma
    gamma_sets: list = field(default_factory=list)
    all_packings: bool = True
    violation: bool = False  # equality holds yet some gamma-set is not a packing


def check_equality_condition_2_1(
    d: Digraph, k: int, budget: SolveBudget | None = None, trk: int | None = None
) -> PackingReport:
    """Compare ``gamma_trk == (k+1) gamma`` with "every minimum dominating set is a packing".

    ``trk`` may pass in an already known ``gamma_trk``.
    """
    if has_isolated_vertex(d):
        raise InvalidInput("the digraph has an isolated vertex")
    sets = minimum_dominating_sets(d, budget=budget)
    g = len(sets[0])
    if trk is None:
        trk = gamma_trk(d, k, budget, tie_break=False).value
    equality = trk == (k + 1) * g
    packings = all(is_packing(d, s) for s in sets)
    return PackingReport(k, g, trk, equality, sets, packings, equality and not packings)


def _partition_dominating(d: Digraph, x: list[int], k: int, rest: int) -> list[list[int]] | None:
    """Split ``x`` into ``k`` nonempty parts each dominating ``rest``; ``None`` if impossible."""
    if len(x) < k:
        return None
    out = d.out_mask
    parts: list[list[int]] = [[] for _ in range(k)]
    reach = [0] * k

    def place(i: int, used: int) -> bool:
        left = len(x) - i
        if k - used > left:
            return False
        if i == len(x):
            return all(reach[c] & rest == rest for c in range(k))
        v = x[i]
        # colours are interchangeable, so only the first unused part is tried
        for c in range(min(used + 1, k)):
            parts[c].append(v)
            saved = reach[c]
            reach[c] |= out[v]
            if place(i + 1, max(used, c + 1)):
                return True
            reach[c] = saved
            parts[c].pop()
        return False

    return [list(p) for p in parts] if place(0, 0) else None


@dataclass
class TotalEqualityReport:
    k: int
    gamma_t: int
    gamma_trk: int
    left_equality: bool  # gamma_trk == gamma_t
    partition_exists: bool  # condition (a)
    partition: list | None
    right_equality: bool  # gamma_trk == k * gamma_t
    all_or_nothing_exists: bool  # condition (b)
    all_or_nothing: RainbowAssignment | None

    @property
    def consistent(self) -> bool:
        return self.left_equality == self.partition_exists and self.right_equality == self.all_or_nothing_exists


def check_equality_condition_2_2(
    d: Digraph, k: int, budget: SolveBudget | None = None, trk: int | None = None
) -> TotalEqualityReport:
    """Decide both structural conditions for ``gamma_t <= gamma_trk <= k gamma_t`` equality.

    (a) some minimum total dominating set splits into ``k`` nonempty parts
    that each dominate everything outside it; (b) some optimal labelling uses
    only the empty set and the full colour set.
    """
    check_k(k)
    if d.n < k:
        raise InvalidInput("need n >= k")
    td_sets = minimum_dominating_sets(d, total=True, budget=budget)
    gt = len(td_sets[0])
    if trk is None:
        trk = gamma_trk(d, k, budget, tie_break=False).value
    partition = None
    for x in td_sets:
        partition = _partition_dominating(d, sorted(x), k, d.full_mask & ~to_mask(x))
        if partition is not None:
            break
    witness = None
    if trk % k == 0:
        size = trk // k
        for combo in combinations(range(d.n), size):
            f = RainbowAssignment(k, tuple(full_colors(k) if v in combo else 0 for v in range(d.n)))
            if is_tkrdf(d, f):
                witness = f
                break
    return TotalEqualityReport(
        k,
        gt,
        trk,
        trk == gt,
        partition is not None,
        partition,
        trk == k * gt,
        witness is not None,
        witness,
    )


def support_vertices(d: Digraph) -> frozenset[int]:
    """Vertices adjacent to a leaf (out-degree 0, in-degree 1)."""
    leaves = [v for v in range(d.n) if not d.out_adj[v] and len(d.in_adj[v]) == 1]
    return frozenset(d.in_adj[v][0] for v in leaves)

