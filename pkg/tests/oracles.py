"""Plain enumeration oracles, deliberately sharing no code with the solvers."""

from itertools import combinations, product


def _adj(n, arcs):
    ins = [set() for _ in range(n)]
    nbr = [set() for _ in range(n)]
    for u, v in arcs:
        ins[v].add(u)
        nbr[u].add(v)
        nbr[v].add(u)
    return ins, nbr


def brute_rainbow(n, arcs, k, total):
    """Minimum weight over all (2^k)^n labellings, with the fewest empties among optima."""
    ins, nbr = _adj(n, arcs)
    full = frozenset(range(1, k + 1))
    subsets = [frozenset(c) for r in range(k + 1) for c in combinations(range(1, k + 1), r)]
    best = None
    for f in product(subsets, repeat=n):
        ok = True
        for v in range(n):
            if not f[v]:
                seen = set()
                for u in ins[v]:
                    seen |= f[u]
                if seen != full:
                    ok = False
                    break
            elif total and not any(f[u] for u in nbr[v]):
                ok = False
                break
        if not ok:
            continue
        key = (sum(len(s) for s in f), sum(1 for s in f if not s))
        if best is None or key < best:
            best = key
    return best


def brute_domination(n, arcs, total):
    ins, nbr = _adj(n, arcs)
    outs = [set() for _ in range(n)]
    for u, v in arcs:
        outs[u].add(v)
    for r in range(1, n + 1):
        for s in combinations(range(n), r):
            s = set(s)
            covered = set(s)
            for v in s:
                covered |= outs[v]
            if len(covered) != n:
                continue
            if total and any(not (nbr[v] & s) for v in s):
                continue
            return r
    return None
