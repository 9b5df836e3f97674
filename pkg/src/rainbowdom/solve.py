"""Exact domination parameters with certificates.

All four parameters are found by enumerating candidate vertex sets in order
of increasing size.  For the rainbow parameters the enumerated set is the
positive set ``P`` of the labelling; given ``P`` the cheapest labelling is

    |P| + min over colour classes C_1..C_k (each C_c within P dominating V - P)
          of  sum |C_c| - |C_1 | ... | C_k|

because every member of ``P`` outside all classes still costs one colour.
Since the weight is at least ``|P|``, the scan stops as soon as ``|P|``
reaches the incumbent.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from .digraph import Digraph, has_isolated_in, has_isolated_vertex, iter_bits
from .errors import BudgetExceeded, InvalidInput
from .rainbow import RainbowAssignment, check_k

DEFAULT_MAX_NODES = 10**9
DEFAULT_TIME_CAP = 300.0


@dataclass(frozen=True)
class SolveBudget:
    max_nodes: int = DEFAULT_MAX_NODES
    time_cap: float = DEFAULT_TIME_CAP

    def __post_init__(self):
        if self.max_nodes <= 0 or self.time_cap <= 0:
            raise InvalidInput("budget limits must be positive")


@dataclass(frozen=True)
class SolveResult:
    parameter: str
    value: int
    certificate: RainbowAssignment | frozenset[int]
    nodes_explored: int
    k: int | None = None
    # minimum number of empty vertices over all optimal labellings; None if not computed
    tie_break_empty_count: int | None = None

    def certificate_json(self):
        if isinstance(self.certificate, RainbowAssignment):
            return self.certificate.to_json()
        return sorted(self.certificate)


@dataclass
class _Counter:
    budget: SolveBudget
    nodes: int = 0
    start: float = field(default_factory=time.monotonic)

    def tick(self, amount: int = 1) -> bool:
        """Count nodes; returns False once the budget is gone."""
        self.nodes += amount
        if self.nodes > self.budget.max_nodes:
            return False
        if self.nodes & 1023 == 0 and time.monotonic() - self.start > self.budget.time_cap:
            return False
        return True


def branch_order(d: Digraph) -> list[int]:
    """Vertices by decreasing out-degree, ties by index."""
    return sorted(range(d.n), key=lambda v: (-len(d.out_adj[v]), v))


def _require_vertices(d: Digraph) -> None:
    if d.n < 1:
        raise InvalidInput("the digraph must have at least one vertex")


def _require_no_isolated(d: Digraph) -> None:
    _require_vertices(d)
    if has_isolated_vertex(d):
        raise InvalidInput("the digraph has an isolated vertex")


def _closed_cover(d: Digraph, s: int) -> int:
    acc = s
    for v in iter_bits(s):
        acc |= d.out_mask[v]
    return acc


def _subsets_by_size(order, size):
    for combo in combinations(order, size):
        m = 0
        for v in combo:
            m |= 1 << v
        yield m


def _set_search(d: Digraph, total: bool, budget: SolveBudget | None, collect_all: bool):
    counter = _Counter(budget or SolveBudget())
    order = branch_order(d)
    full = d.full_mask
    found = []
    for size in range(1, d.n + 1):
        for s in _subsets_by_size(order, size):
            if not counter.tick():
                incumbent = None
                if found:
                    incumbent = SolveResult(
                        "gamma_t" if total else "gamma", size, frozenset(iter_bits(found[0])), counter.nodes
                    )
                raise BudgetExceeded("set search budget exhausted", incumbent)
            if _closed_cover(d, s) != full:
                continue
            if total and has_isolated_in(d, s):
                continue
            found.append(s)
            if not collect_all:
                return size, found, counter.nodes
        if found:
            return size, found, counter.nodes
    raise InvalidInput("no feasible set exists")  # only reachable for total with isolated vertices


def gamma(d: Digraph, budget: SolveBudget | None = None) -> SolveResult:
    """Domination number with a minimum dominating set."""
    _require_vertices(d)
    size, found, nodes = _set_search(d, False, budget, False)
    return SolveResult("gamma", size, frozenset(iter_bits(found[0])), nodes)


def gamma_t(d: Digraph, budget: SolveBudget | None = None) -> SolveResult:
    """Total domination number with a minimum total dominating set."""
    _require_no_isolated(d)
    size, found, nodes = _set_search(d, True, budget, False)
    return SolveResult("gamma_t", size, frozenset(iter_bits(found[0])), nodes)


def minimum_dominating_sets(d: Digraph, total: bool = False, budget: SolveBudget | None = None) -> list[frozenset[int]]:
    """Every minimum (total) dominating set, in enumeration order."""
    if total:
        _require_no_isolated(d)
    else:
        _require_vertices(d)
    _, found, _ = _set_search(d, total, budget, True)
    return [frozenset(iter_bits(s)) for s in found]


# -- rainbow search ---------------------------------------------------------


def _minimal_covers(d: Digraph, pos: int, target: int, counter: _Counter) -> list[int] | None:
    """Inclusion-minimal subsets of ``pos`` whose out-neighbourhoods cover ``target``."""
    in_mask = d.in_mask
    out_mask = d.out_mask
    raw = set()

    def grow(chosen: int, uncovered: int) -> bool:
        if not counter.tick():
            return False
        if not uncovered:
            raw.add(chosen)
            return True
        low = uncovered & -uncovered
        t = low.bit_length() - 1
        for w in iter_bits(in_mask[t] & pos):
            if not grow(chosen | (1 << w), uncovered & ~out_mask[w]):
                return False
        return True

    if not grow(0, target):
        return None
    covers = sorted(raw, key=lambda c: (c.bit_count(), c))
    minimal = []
    for c in covers:
        if not any(m & c == m for m in minimal):
            minimal.append(c)
    return minimal


def _best_classes(covers: list[int], k: int, allowed: int, counter: _Counter):
    """Pick ``k`` covers (repeats allowed) minimising total size minus union size.

    Only overlaps ``<= allowed`` are of interest.  Returns ``(overlap, classes)``,
    ``None`` if nothing fits, or raises ``_OutOfBudget``.
    """
    best = [allowed + 1, None]
    chosen = []

    def rec(start: int, union: int, overlap: int) -> None:
        if not counter.tick():
            raise _OutOfBudget
        if len(chosen) == k:
            if overlap < best[0]:
                best[0] = overlap
                best[1] = list(chosen)
            return
        for i in range(start, len(covers)):
            c = covers[i]
            extra = (c & union).bit_count()
            if overlap + extra >= best[0]:
                continue
            chosen.append(c)
            rec(i, union | c, overlap + extra)
            chosen.pop()
            if best[0] == 0:
                return

    rec(0, 0, 0)
    if best[1] is None:
        return None
    return best[0], best[1]


class _OutOfBudget(Exception):
    pass


def _labelling(n: int, k: int, pos: int, classes: list[int]) -> RainbowAssignment:
    values = [0] * n
    for c, cls in enumerate(classes):
        for v in iter_bits(cls):
            values[v] |= 1 << c
    for v in iter_bits(pos):
        if not values[v]:
            values[v] = 1
    return RainbowAssignment(k, tuple(values))


class _RainbowSearch:
    def __init__(self, d: Digraph, k: int, total: bool, counter: _Counter):
        self.d = d
        self.k = k
        self.total = total
        self.counter = counter
        self.order = branch_order(d)
        self.max_out = max((len(a) for a in d.out_adj), default=0)

    def cheapest(self, pos: int, limit: int):
        """Cheapest labelling with positive set ``pos`` and weight ``<= limit``."""
        d, k = self.d, self.k
        size = pos.bit_count()
        if self.total and has_isolated_in(d, pos):
            return None
        target = d.full_mask & ~pos
        if not target:
            return size, [0] * k
        for t in iter_bits(target):
            if not d.in_mask[t] & pos:
                return None
        # each class must dominate the target, so holds at least ceil(|T| / max out-degree)
        if k * -(-target.bit_count() // self.max_out) > limit:
            return None
        if k == 1:
            return size, [pos]
        covers = _minimal_covers(d, pos, target, self.counter)
        if covers is None:
            raise _OutOfBudget
        found = _best_classes(covers, k, limit - size, self.counter)
        if found is None:
            return None
        overlap, classes = found
        return size + overlap, classes

    def run(self):
        d, k = self.d, self.k
        n = d.n
        best_value = n
        best = RainbowAssignment(k, (1,) * n)
        best_pos_size = n
        try:
            for size in range(1, n):
                if size >= best_value:
                    break
                for pos in _subsets_by_size(self.order, size):
                    if not self.counter.tick():
                        raise _OutOfBudget
                    got = self.cheapest(pos, best_value - 1)
                    if got is None:
                        continue
                    value, classes = got
                    best_value = value
                    best = _labelling(n, k, pos, classes)
                    best_pos_size = size
                    if size >= best_value:
                        break
        except _OutOfBudget:
            return best_value, best, best_pos_size, False
        return best_value, best, best_pos_size, True

    def max_positive_size(self, value: int, known: int) -> int | None:
        """Largest positive-set size among labellings of weight ``value``."""
        n = self.d.n
        try:
            for size in range(min(value, n - 1), known, -1):
                for pos in _subsets_by_size(self.order, size):
                    if not self.counter.tick():
                        raise _OutOfBudget
                    got = self.cheapest(pos, value)
                    if got is not None and got[0] == value:
                        return size
        except _OutOfBudget:
            return None
        return known


def _rainbow(d: Digraph, k: int, total: bool, budget: SolveBudget | None, tie_break: bool) -> SolveResult:
    check_k(k)
    if total:
        _require_no_isolated(d)
    else:
        _require_vertices(d)
    name = "gamma_trk" if total else "gamma_rk"
    budget = budget or SolveBudget()
    counter = _Counter(budget)
    search = _RainbowSearch(d, k, total, counter)
    value, cert, pos_size, complete = search.run()
    if not complete:
        raise BudgetExceeded(f"{name} search budget exhausted", SolveResult(name, value, cert, counter.nodes, k))
    empties = None
    if tie_break:
        # separate allowance so the main result survives a tie-break overrun
        search.counter = _Counter(budget)
        largest = search.max_positive_size(value, pos_size)
        if largest is not None:
            empties = d.n - largest
    return SolveResult(name, value, cert, counter.nodes, k, empties)


def gamma_rk(d: Digraph, k: int, budget: SolveBudget | None = None, tie_break: bool = False) -> SolveResult:
    """k-rainbow domination number with an optimal labelling."""
    return _rainbow(d, k, False, budget, tie_break)


def gamma_trk(d: Digraph, k: int, budget: SolveBudget | None = None, tie_break: bool = True) -> SolveResult:
    """Total k-rainbow domination number with an optimal labelling.

    ``tie_break_empty_count`` is the fewest empty vertices any optimal labelling
    can have; the returned certificate itself need not attain it.
    """
    return _rainbow(d, k, True, budget, tie_break)


def solve(d: Digraph, parameter: str, k: int | None = None, budget: SolveBudget | None = None) -> SolveResult:
    if parameter == "gamma":
        return gamma(d, budget)
    if parameter == "gamma_t":
        return gamma_t(d, budget)
    if k is None:
        raise InvalidInput(f"{parameter} needs k")
    if parameter == "gamma_rk":
        return gamma_rk(d, k, budget)
    if parameter == "gamma_trk":
        return gamma_trk(d, k, budget)
    raise InvalidInput(f"unknown parameter {parameter!r}")
