"""Colour-set assignments and the four domination verifiers.

A colour set over ``{1..k}`` is an int in which bit ``c - 1`` marks colour
``c``.  ``k`` is capped at ``MAX_K``.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .digraph import Digraph, from_mask, has_isolated_in, has_isolated_vertex, iter_bits, to_mask
from .errors import InvalidInput

MAX_K = 16


def full_colors(k: int) -> int:
    return (1 << k) - 1


def colorset(colors: Iterable[int]) -> int:
    return to_mask(c - 1 for c in colors)


def colors_of(cs: int) -> list[int]:
    return [b + 1 for b in iter_bits(cs)]


def check_k(k: int) -> None:
    if not 1 <= k <= MAX_K:
        raise InvalidInput(f"k must be in 1..{MAX_K}, got {k}")


@dataclass(frozen=True)
class RainbowAssignment:
    k: int
    values: tuple[int, ...]

    def __post_init__(self):
        check_k(self.k)
        full = full_colors(self.k)
        for v, cs in enumerate(self.values):
            if cs < 0 or cs & ~full:
                raise InvalidInput(f"vertex {v} uses a colour outside 1..{self.k}")

    @classmethod
    def from_sets(cls, k: int, sets: Iterable[Iterable[int]]) -> RainbowAssignment:
        values = []
        for v, s in enumerate(sets):
            s = list(s)
            if any(not 1 <= c <= k for c in s):
                raise InvalidInput(f"vertex {v}: colours {s} not within 1..{k}")
            values.append(colorset(s))
        return cls(k, tuple(values))

    @classmethod
    def constant(cls, k: int, n: int, colors: Iterable[int] = ()) -> RainbowAssignment:
        return cls(k, (colorset(colors),) * n)

    @property
    def n(self) -> int:
        return len(self.values)

    def colors(self, v: int) -> list[int]:
        return colors_of(self.values[v])

    def as_sets(self) -> list[list[int]]:
        return [colors_of(cs) for cs in self.values]

    @property
    def positive_mask(self) -> int:
        return to_mask(v for v, cs in enumerate(self.values) if cs)

    def to_json(self) -> dict:
        return {"k": self.k, "values": self.as_sets()}

    @classmethod
    def from_json(cls, obj: dict | str) -> RainbowAssignment:
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            k, values = obj["k"], obj["values"]
        except (KeyError, TypeError):
            raise InvalidInput("assignment JSON needs 'k' and 'values'") from None
        if not isinstance(k, int) or not isinstance(values, list):
            raise InvalidInput("'k' must be an int and 'values' a list")
        check_k(k)
        for v, s in enumerate(values):
            if not isinstance(s, list) or s != sorted(set(s)):
                raise InvalidInput(f"vertex {v}: colours must be an ascending list without repeats")
        return cls.from_sets(k, values)


def weight(f: RainbowAssignment) -> int:
    return sum(cs.bit_count() for cs in f.values)


def positive_set(f: RainbowAssignment) -> frozenset[int]:
    return from_mask(f.positive_mask)


def _mask_of(d: Digraph, s: Iterable[int]) -> int:
    m = to_mask(s)
    if m >> d.n:
        raise InvalidInput("vertex set has members outside the digraph")
    return m


def _dominates(d: Digraph, s: int) -> bool:
    covered = s
    for v in iter_bits(s):
        covered |= d.out_mask[v]
    return covered == d.full_mask


def is_dominating_set(d: Digraph, s: Iterable[int]) -> bool:
    return _dominates(d, _mask_of(d, s))


def is_total_dominating_set(d: Digraph, s: Iterable[int]) -> bool:
    m = _mask_of(d, s)
    if d.n and not m:
        return False
    return _dominates(d, m) and not has_isolated_in(d, m)


def _check_size(d: Digraph, f: RainbowAssignment) -> None:
    if f.n != d.n:
        raise InvalidInput(f"assignment covers {f.n} vertices, digraph has {d.n}")


def uncovered_empty_vertex(d: Digraph, f: RainbowAssignment) -> int | None:
    """First empty vertex whose in-neighbours miss some colour, else ``None``."""
    _check_size(d, f)
    full = full_colors(f.k)
    vals = f.values
    for v in range(d.n):
        if vals[v]:
            continue
        seen = 0
        for u in d.in_adj[v]:
            seen |= vals[u]
        if seen != full:
            return v
    return None


def isolated_positive_vertex(d: Digraph, f: RainbowAssignment) -> int | None:
    """First positive vertex with no positive neighbour, else ``None``."""
    _check_size(d, f)
    pos = f.positive_mask
    for v in iter_bits(pos):
        if not d.nbr_mask[v] & pos:
            return v
    return None


def is_krdf(d: Digraph, f: RainbowAssignment) -> bool:
    return uncovered_empty_vertex(d, f) is None


def is_tkrdf(d: Digraph, f: RainbowAssignment) -> bool:
    if has_isolated_vertex(d):
        raise InvalidInput("total rainbow domination needs a digraph without isolated vertices")
    return is_krdf(d, f) and isolated_positive_vertex(d, f) is None


def class_sizes(f: RainbowAssignment) -> list[int]:
    """``|{v : c in f(v)}|`` for each colour ``c = 1..k``."""
    return [sum(1 for cs in f.values if cs >> (c - 1) & 1) for c in range(1, f.k + 1)]


def assignment_from_indicator(k: int, n: int, s: Sequence[int] | Iterable[int], colors=None) -> RainbowAssignment:
    """Give ``colors`` (default all of ``1..k``) to members of ``s`` and nothing elsewhere."""
    cs = full_colors(k) if colors is None else colorset(colors)
    members = set(s)
    return RainbowAssignment(k, tuple(cs if v in members else 0 for v in range(n)))
