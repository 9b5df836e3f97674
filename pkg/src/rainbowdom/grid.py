"""Column-by-column dynamic program for total rainbow domination of P_m x P_n.

Cell ``(i, j)`` (row ``i`` of ``P_m``, column ``j`` of ``P_n``) is vertex
``i * n + j``.  Its in-neighbours are ``(i-1, j)`` and ``(i, j-1)``, so an
empty cell can be checked the moment its column is placed.  The only thing a
column must carry forward is which of its positive cells still lack a positive
neighbour; those need a positive right neighbour.

A profile is the pair (column labelling, pending flags).  The labelling of a
column is packed base ``2**k``: cell ``i`` holds digit ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .digraph import Digraph, cartesian_product
from .errors import InvalidInput
from .families import directed_path
from .rainbow import RainbowAssignment, check_k, full_colors
from .solve import SolveResult

MAX_COLUMN_STATES = 2**20
_INF = np.int64(2**62)
_CHUNK = 1 << 11


@dataclass(frozen=True)
class GridSpec:
    m: int
    n: int
    k: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise InvalidInput("grid dimensions must be positive")
        check_k(self.k)

    @property
    def column_states(self) -> int:
        return 1 << (self.k * self.m)

    def digraph(self) -> Digraph:
        return cartesian_product(directed_path(self.m), directed_path(self.n))

    def vertex(self, i: int, j: int) -> int:
        return i * self.n + j


@dataclass(frozen=True)
class _Tables:
    m: int
    k: int
    cells: np.ndarray  # (S, m) colour set of each cell
    pos: np.ndarray  # (S,) bitmask of positive cells
    lonely: np.ndarray  # (S,) positive cells with no positive vertical neighbour
    weight: np.ndarray  # (S,)
    empties: np.ndarray  # (S,)
    by_pos: tuple  # state indices grouped by positive pattern

    def cover_ok(self, cur: np.ndarray) -> np.ndarray:
        """``ok[p, c]``: every empty cell of column ``cur[c]`` sees all colours
        from its upper neighbour and from column ``p`` on its left."""
        full = full_colors(self.k)
        ok = np.ones((len(self.cells), len(cur)), dtype=bool)
        cc = self.cells[cur]
        for i in range(self.m):
            up = cc[:, i - 1] if i else np.zeros(len(cur), dtype=np.int64)
            seen = self.cells[:, i][:, None] | up[None, :]
            ok &= (cc[:, i] != 0)[None, :] | (seen == full)
        return ok


@lru_cache(maxsize=16)
def _tables(m: int, k: int) -> _Tables:
    s = 1 << (k * m)
    idx = np.arange(s, dtype=np.int64)
    full = full_colors(k)
    cells = np.stack([(idx >> (k * i)) & full for i in range(m)], axis=1)
    bits = np.array([1 << i for i in range(m)], dtype=np.int64)
    pos = ((cells != 0) * bits).sum(axis=1)
    rows = (1 << m) - 1
    lonely = pos & ~(pos << 1) & ~(pos >> 1) & rows
    pop = np.vectorize(int.bit_count, otypes=[np.int64])
    weight = pop(cells).sum(axis=1)
    empties = (cells == 0).sum(axis=1)
    by_pos = tuple(np.flatnonzero(pos == q) for q in range(1 << m))
    return _Tables(m, k, cells, pos, lonely, weight, empties, by_pos)


def _check(spec: GridSpec) -> _Tables:
    if spec.m * spec.n < 2:
        raise InvalidInput("a 1 x 1 grid is a single isolated vertex")
    if spec.column_states > MAX_COLUMN_STATES:
        raise InvalidInput(f"(2^k)^m = {spec.column_states} column states exceeds the cap {MAX_COLUMN_STATES}")
    return _tables(spec.m, spec.k)


def _subset_min(cost: np.ndarray, m: int):
    """For each flag pattern ``P``: min over flag sets ``F`` within ``P`` (ties to smaller F)."""
    best = cost.copy()
    arg = np.broadcast_to(np.arange(cost.shape[1]), cost.shape).copy()
    for b in range(m):
        for p in range(cost.shape[1]):
            if p >> b & 1:
                q = p ^ (1 << b)
                take = (best[:, q] < best[:, p]) | ((best[:, q] == best[:, p]) & (arg[:, q] < arg[:, p]))
                best[:, p] = np.where(take, best[:, q], best[:, p])
                arg[:, p] = np.where(take, arg[:, q], arg[:, p])
    return best, arg


def _sweep(t: _Tables, n: int, scale: int):
    """Run ``n`` columns.  Yields ``(cost, pred)`` after each column, where
    ``cost[a, F]`` is the best ``weight*scale + empties`` of a labelling of the
    columns so far ending in profile ``(a, F)`` and ``pred`` the packed
    predecessor profile ``a_prev << m | F_prev``."""
    m = t.m
    s = len(t.cells)
    nflags = 1 << m
    step_cost = t.weight * scale + (t.empties if scale > 1 else 0)
    cost = np.full((s, nflags), _INF, dtype=np.int64)
    cost[0, 0] = 0  # virtual all-empty column to the left of column 0
    for _ in range(n):
        best_sub, arg_sub = _subset_min(cost, m)
        new_cost = np.full((s, nflags), _INF, dtype=np.int64)
        new_pred = np.full((s, nflags), -1, dtype=np.int64)
        for lo in range(0, s, _CHUNK):
            cur = np.arange(lo, min(s, lo + _CHUNK))
            cur_pos = t.pos[cur]
            val = np.where(t.cover_ok(cur), best_sub[:, cur_pos], _INF)
            for q, rows in enumerate(t.by_pos):
                sub = val[rows]
                pick = sub.argmin(axis=0)
                g = sub[pick, np.arange(len(cur))]
                a_prev = rows[pick]
                f_prev = arg_sub[a_prev, cur_pos]
                packed = (a_prev << m) | f_prev
                nf = t.lonely[cur] & ~q
                reach = g < _INF
                cand = np.where(reach, g + step_cost[cur], _INF)
                old = new_cost[cur, nf]
                old_pred = new_pred[cur, nf]
                better = reach & ((cand < old) | ((cand == old) & ((old_pred < 0) | (packed < old_pred))))
                new_cost[cur, nf] = np.where(better, cand, old)
                new_pred[cur, nf] = np.where(better, packed, old_pred)
        cost = new_cost
        yield cost, new_pred


def _final(cost: np.ndarray) -> tuple[int, int]:
    """Best finished profile: no pending flags.  Returns (cost, state)."""
    col = cost[:, 0]
    a = int(col.argmin())
    return int(col[a]), a


def dp_values(m: int, k: int, n_max: int) -> list[int]:
    """``gamma_trk(P_m x P_n)`` for ``n = 1..n_max`` in one sweep (``None`` where undefined)."""
    spec = GridSpec(m, max(n_max, 2), k)
    t = _check(spec)
    out = []
    for j, (cost, _) in enumerate(_sweep(t, n_max, 1), start=1):
        out.append(None if m * j < 2 else _final(cost)[0])
    return out


def dp_gamma_trk(spec: GridSpec, min_empty: bool = True) -> SolveResult:
    """Exact ``gamma_trk(P_m x P_n)`` with a witness labelling.

    With ``min_empty`` the objective is (weight, number of empty cells)
    lexicographically, so the witness also has the fewest empty cells among
    all optimal labellings and ``tie_break_empty_count`` is filled in.
    """
    t = _check(spec)
    m, n = spec.m, spec.n
    scale = m * n + 1 if min_empty else 1
    preds = []
    cost = None
    for cost, pred in _sweep(t, n, scale):
        preds.append(pred)
    best, a = _final(cost)
    if best >= _INF:
        raise InvalidInput("no total rainbow dominating function exists")  # unreachable for m*n >= 2
    columns = [0] * n
    f = 0
    for j in range(n - 1, -1, -1):
        columns[j] = a
        packed = int(preds[j][a, f])
        a, f = packed >> m, packed & ((1 << m) - 1)
    values = [0] * (m * n)
    for j, state in enumerate(columns):
        for i in range(m):
            values[spec.vertex(i, j)] = int(t.cells[state, i])
    cert = RainbowAssignment(spec.k, tuple(values))
    value, empties = divmod(best, scale) if min_empty else (best, None)
    nodes = n * len(t.cells) ** 2
    return SolveResult("gamma_trk", value, cert, nodes, spec.k, empties)


def closed_form(spec: GridSpec) -> int | None:
    """Known formula for ``gamma_trk(P_m x P_n)``, or ``None`` when none applies."""
    m, n, k = spec.m, spec.n, spec.k
    if k >= 2 and (m == 1 or n == 1) and m * n >= 2:
        return m * n  # a directed path
    if (m, k) == (2, 2) and n >= 2:
        return -(-3 * n // 2)
    if (m, k) == (2, 3) and n >= 2:
        return 2 * n
    if (m, k) == (3, 3) and n >= 3:
        return -(-8 * n // 3) + (1 if n % 3 == 0 else 0)
    return None


def column_weight_profile(f: RainbowAssignment, spec: GridSpec) -> list[int]:
    """Per-column weight ``a_j`` of a labelling of the grid."""
    if f.n != spec.m * spec.n:
        raise InvalidInput(f"labelling has {f.n} entries, grid has {spec.m * spec.n} cells")
    return [sum(f.values[spec.vertex(i, j)].bit_count() for i in range(spec.m)) for j in range(spec.n)]
