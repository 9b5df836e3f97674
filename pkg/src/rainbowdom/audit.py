"""Run every bound, equality condition and closed form against exact values.

Each instance yields records ``(check, status, detail)``; ``status`` is one of
``pass``, ``equality`` (passes and attains the bound), ``violation`` or
``skip`` (hypothesis not met, or the solver ran out of budget).  Records are
folded into one :class:`CheckResult` per check.
"""

from __future__ import annotations

import json
import random
import time
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import constructions as cons
from .digraph import Digraph, degrees, has_isolated_vertex, is_packing, is_weakly_connected
from .errors import BudgetExceeded, InvalidInput
from .families import (
    bipartite_kxm,
    directed_cycle,
    directed_path,
    enumerate_small,
    random_digraph,
    remark1,
    remark2_stars,
    thm23_lower_stars,
    thm33_sharp,
    thm34_sharp_stars,
)
from .grid import GridSpec, closed_form, column_weight_profile, dp_gamma_trk, dp_values
from .rainbow import (
    is_dominating_set,
    is_krdf,
    is_tkrdf,
    is_total_dominating_set,
    weight,
)
from .solve import SolveBudget, gamma, gamma_rk, gamma_t, gamma_trk, minimum_dominating_sets

SUITES = ("bounds", "corollaries", "characterizations", "grids", "lemmas")
MAX_LISTED_WITNESSES = 10


@dataclass
class CheckResult:
    check: str
    corpus: str
    instances: int = 0
    violations: list = field(default_factory=list)
    equality_count: int = 0
    witnesses: list = field(default_factory=list)
    skipped: int = 0
    runtime_s: float = 0.0

    def add(self, status: str, detail: dict) -> None:
        if status == "skip":
            self.skipped += 1
            return
        self.instances += 1
        if status == "violation":
            self.violations.append(detail)
        elif status == "equality":
            self.equality_count += 1
            if len(self.witnesses) < MAX_LISTED_WITNESSES:
                self.witnesses.append(detail)


@dataclass
class AuditReport:
    suite: str
    seed: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def violations(self) -> int:
        return sum(len(c.violations) for c in self.checks)

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.check == name:
                return c
        raise KeyError(name)

    def to_dict(self, timing: bool = True) -> dict:
        checks = []
        for c in self.checks:
            d = asdict(c)
            if not timing:
                del d["runtime_s"]
            checks.append(d)
        return {"suite": self.suite, "seed": self.seed, "violations": self.violations, "checks": checks}

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)

    def to_text(self) -> str:
        head = f"{'check':34} {'corpus':28} {'tested':>7} {'equal':>7} {'skip':>6} {'viol':>5} {'secs':>7}"
        lines = [f"audit suite={self.suite} seed={self.seed}", head, "-" * len(head)]
        for c in self.checks:
            lines.append(
                f"{c.check:34} {c.corpus[:28]:28} {c.instances:7d} {c.equality_count:7d} "
                f"{c.skipped:6d} {len(c.violations):5d} {c.runtime_s:7.2f}"
            )
        lines.append(f"total violations: {self.violations}")
        return "\n".join(lines) + "\n"


# -- corpora ----------------------------------------------------------------


def exhaustive_corpus(n_max: int = 4) -> list[tuple[str, Digraph]]:
    """Every labelled digraph without isolated vertices on ``2..n_max`` vertices."""
    out = []
    for n in range(1, n_max + 1):
        for i, d in enumerate(enumerate_small(n)):
            if not has_isolated_vertex(d):
                out.append((f"exh:n={n}:pattern={i}", d))
    return out


def random_corpus(count: int = 200, n_max: int = 8, seed: int = 0, ps=(0.2, 0.4, 0.6)) -> list[tuple[str, Digraph]]:
    """``count`` seeded random digraphs without isolated vertices, ``2 <= n <= n_max``.

    Draws that have an isolated vertex are discarded and redrawn.
    """
    rng = random.Random(seed)
    out = []
    draw = 0
    while len(out) < count:
        n = rng.randint(2, n_max)
        p = ps[draw % len(ps)]
        s = rng.getrandbits(32)
        draw += 1
        d = random_digraph(n, p, s)
        if not has_isolated_vertex(d):
            out.append((f"rand:n={n}:p={p}:seed={s}", d))
    return out


def default_corpus(seed: int = 0, n_max: int = 4, random_count: int = 200) -> list[tuple[str, Digraph]]:
    return exhaustive_corpus(n_max) + random_corpus(random_count, seed=seed)


# -- per-instance facts -----------------------------------------------------


@dataclass
class _Facts:
    d: Digraph
    budget: SolveBudget
    _cache: dict = field(default_factory=dict)

    def get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def gamma(self):
        return self.get("gamma", lambda: gamma(self.d, self.budget))

    def gamma_t(self):
        return self.get("gamma_t", lambda: gamma_t(self.d, self.budget))

    def rk(self, k):
        return self.get(("rk", k), lambda: gamma_rk(self.d, k, self.budget))

    def trk(self, k):
        return self.get(("trk", k), lambda: gamma_trk(self.d, k, self.budget, tie_break=False))

    def gamma_sets(self):
        return self.get("gsets", lambda: minimum_dominating_sets(self.d, budget=self.budget))


def _detail(iid: str, d: Digraph, k=None, **extra) -> dict:
    out = {"instance": iid, "n": d.n, "arcs": [list(a) for a in d.arcs]}
    if k is not None:
        out["k"] = k
    out.update(extra)
    return out


def _cmp(le_ok: bool, eq: bool) -> str:
    if not le_ok:
        return "violation"
    return "equality" if eq else "pass"


def _bounds_records(iid: str, d: Digraph, ks: Sequence[int], facts: _Facts):
    n = d.n
    dmax_out = degrees(d)[0]
    connected = is_weakly_connected(d)
    g = facts.gamma().value
    gt = facts.gamma_t().value
    trk = {k: facts.trk(k).value for k in ks}
    for k in ks:
        t = trk[k]
        det = _detail(iid, d, k, gamma_trk=t)
        yield "dom_upper", _cmp(t <= (k + 1) * g, t == (k + 1) * g), dict(det, gamma=g)
        if n >= k:
            yield "total_lower", _cmp(gt <= t, gt == t), dict(det, gamma_t=gt)
            yield "total_upper", _cmp(t <= k * gt, t == k * gt), dict(det, gamma_t=gt)
        else:
            yield "total_lower", "skip", det
            yield "total_upper", "skip", det
        if connected and n >= max(k, 2):
            rk = facts.rk(k).value
            yield "rainbow_lower", _cmp(rk <= t, rk == t), dict(det, gamma_rk=rk)
            yield "rainbow_upper", _cmp(t <= 2 * rk - k + 1, t == 2 * rk - k + 1), dict(det, gamma_rk=rk)
        else:
            yield "rainbow_lower", "skip", det
            yield "rainbow_upper", "skip", det
        yield "order_lower", _cmp(min(k, n) <= t, min(k, n) == t), det
        yield "order_upper", _cmp(t <= n, t == n), det
        lb = -(-(k * n + 1) // (dmax_out + k))
        yield "degree_lower", _cmp(lb <= t, lb == t), dict(det, bound=lb)
        if k == 1:
            yield "k1_reduction", "equality" if t == gt else "violation", dict(det, gamma_t=gt)
        for k2 in ks:
            if k2 > k:
                bound = t + (k2 - k) * (t // k)
                yield "color_extension", _cmp(trk[k2] <= bound, trk[k2] == bound), dict(det, k2=k2, gamma_trk2=trk[k2])
                yield "monotone_k", _cmp(t <= trk[k2], t == trk[k2]), dict(det, k2=k2, gamma_trk2=trk[k2])
    yield from _certificate_records(iid, d, ks, facts)


def _certificate_records(iid: str, d: Digraph, ks: Sequence[int], facts: _Facts):
    """Solver witnesses and every applicable construction must pass their verifiers."""
    problems = []
    g, gt = facts.gamma(), facts.gamma_t()
    if not is_dominating_set(d, g.certificate) or len(g.certificate) != g.value:
        problems.append("gamma witness")
    if not is_total_dominating_set(d, gt.certificate) or len(gt.certificate) != gt.value:
        problems.append("gamma_t witness")
    connected = is_weakly_connected(d)
    for k in ks:
        trk, rk = facts.trk(k), facts.rk(k)
        if not is_tkrdf(d, trk.certificate) or weight(trk.certificate) != trk.value:
            problems.append(f"gamma_trk witness k={k}")
        if not is_krdf(d, rk.certificate) or weight(rk.certificate) != rk.value:
            problems.append(f"gamma_rk witness k={k}")
        f = cons.tkrdf_from_dominating_set(d, g.certificate, k)
        if not is_tkrdf(d, f) or weight(f) > (k + 1) * g.value:
            problems.append(f"dominating-set construction k={k}")
        f = cons.tkrdf_from_td_set(d, gt.certificate, k)
        if not is_tkrdf(d, f) or weight(f) != k * gt.value:
            problems.append(f"td-set construction k={k}")
        if connected and d.n >= max(k, 2):
            f = cons.totalize_rkdf(d, rk.certificate)
            if not is_tkrdf(d, f) or weight(f) > min(d.n, 2 * rk.value - k + 1):
                problems.append(f"totalize k={k}")
        for k2 in ks:
            if k2 > k:
                f = cons.extend_colors(d, trk.certificate, k2)
                if not is_tkrdf(d, f) or weight(f) > trk.value + (k2 - k) * (trk.value // k):
                    problems.append(f"extend_colors k={k}->{k2}")
    det = _detail(iid, d, problems=problems)
    yield "certificate_soundness", "violation" if problems else "pass", det


def _corollary_records(iid: str, d: Digraph, ks: Sequence[int], facts: _Facts):
    dout, din, _, _ = degrees(d)
    for k in ks:
        det = _detail(iid, d, k, max_in=din, max_out=dout)
        if din >= dout >= 1 and k > din * din:
            t = facts.trk(k).value
            yield "full_weight", "equality" if t == d.n else "violation", dict(det, gamma_trk=t)
        else:
            yield "full_weight", "skip", det
        if din >= dout and k > din * din:
            rk = facts.rk(k).value
            yield "full_weight_rainbow", "equality" if rk == d.n else "violation", dict(det, gamma_rk=rk)
        else:
            yield "full_weight_rainbow", "skip", det


def _characterization_records(iid: str, d: Digraph, ks: Sequence[int], facts: _Facts):
    for k in ks:
        t = facts.trk(k).value
        det = _detail(iid, d, k, gamma_trk=t)
        if k >= 2:
            res = cons.check_gamma_trk_equals_k(d, k)
            ok = res.holds == (t == k)
            if ok and res.witness is not None:
                f = cons.tkrdf_from_equals_k_witness(d, res.witness, k)
                ok = is_tkrdf(d, f) and weight(f) == k
            status = "violation" if not ok else ("equality" if res.holds else "pass")
            yield "equals_k", status, dict(det, structural=res.holds, case=res.case)
        rep = cons.check_equality_condition_2_1(d, k, facts.budget, trk=t)
        status = "violation" if rep.violation else ("equality" if rep.equality else "pass")
        yield "packing_necessary", status, dict(det, gamma=rep.gamma, all_packings=rep.all_packings)
        if d.n >= k:
            rep2 = cons.check_equality_condition_2_2(d, k, facts.budget, trk=t)
            ok_a = rep2.left_equality == rep2.partition_exists
            if ok_a and rep2.partition is not None:
                f = cons.tkrdf_from_partitioned_td_set(d, rep2.partition, k)
                ok_a = is_tkrdf(d, f) and weight(f) == rep2.gamma_t
            status = "violation" if not ok_a else ("equality" if rep2.left_equality else "pass")
            yield "left_equality_partition", status, dict(det, gamma_t=rep2.gamma_t, partition=rep2.partition)
            ok_b = rep2.right_equality == rep2.all_or_nothing_exists
            status = "violation" if not ok_b else ("equality" if rep2.right_equality else "pass")
            yield "right_equality_all_or_nothing", status, dict(det, gamma_t=rep2.gamma_t)
        else:
            yield "left_equality_partition", "skip", det
            yield "right_equality_all_or_nothing", "skip", det


_WORKERS = {
    "bounds": _bounds_records,
    "corollaries": _corollary_records,
    "characterizations": _characterization_records,
}


def _instance(args):
    iid, d, ks, suites, budget = args
    facts = _Facts(d, budget)
    out = []
    for suite in suites:
        try:
            out.extend((suite, check, status, det) for check, status, det in _WORKERS[suite](iid, d, ks, facts))
        except BudgetExceeded:
            out.append((suite, "budget", "skip", _detail(iid, d)))
    return out


def _run_corpus(
    suites: Sequence[str],
    corpus: Iterable[tuple[str, Digraph]],
    ks: Sequence[int],
    corpus_name: str,
    budget: SolveBudget | None,
    jobs: int,
) -> dict[str, list[CheckResult]]:
    budget = budget or SolveBudget()
    tasks = [(iid, d, tuple(ks), tuple(suites), budget) for iid, d in corpus]
    start = time.monotonic()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_instance, tasks, chunksize=16))
    else:
        results = [_instance(t) for t in tasks]
    elapsed = time.monotonic() - start
    by_suite: dict[str, dict[str, CheckResult]] = {s: {} for s in suites}
    for records in results:
        for suite, check, status, det in records:
            cr = by_suite[suite].setdefault(check, CheckResult(check, corpus_name))
            cr.add(status, det)
    out = {}
    for suite, checks in by_suite.items():
        for cr in checks.values():
            cr.runtime_s = elapsed / max(1, len(suites))
        out[suite] = list(checks.values())
    return out


# -- sharpness families -----------------------------------------------------


def _sharp(check: str, iid: str, d: Digraph, attained: bool, **extra) -> tuple[str, str, dict]:
    return check, "equality" if attained else "violation", _detail(iid, d, **extra)


def sharpness_records(budget: SolveBudget | None = None) -> list[tuple[str, str, dict]]:
    """Equality witnesses for every bound claimed to be sharp."""
    out = []
    for k in (1, 2):
        d = remark2_stars(2, k)
        g, t = gamma(d, budget).value, gamma_trk(d, k, budget).value
        out.append(_sharp("sharp_dom_upper", f"remark2_stars:t=2,k={k}", d, g == 2 and t == (k + 1) * g, k=k, gamma=g, gamma_trk=t))
    for k in (1, 2):
        d = thm23_lower_stars(2, k)
        r, t = gamma_rk(d, k, budget).value, gamma_trk(d, k, budget).value
        out.append(_sharp("sharp_rainbow_lower", f"thm23_lower_stars:t=2,k={k}", d, r == t == 2 * k, k=k, gamma_rk=r, gamma_trk=t))
    for k in (1, 2, 3):
        for m in (1, 2, 3):
            d = bipartite_kxm(k, m)
            r, t = gamma_rk(d, k, budget).value, gamma_trk(d, k, budget).value
            ok = r == k and t == k + 1 == 2 * r - k + 1
            out.append(_sharp("sharp_rainbow_upper", f"bipartite_kxm:k={k},m={m}", d, ok, k=k, gamma_rk=r, gamma_trk=t))
    d = directed_path(3)
    t = gamma_trk(d, 1, budget).value
    out.append(_sharp("sharp_degree_lower", "directed_path:3,k=1", d, t == 2 == -(-4 // 2), k=1, gamma_trk=t))
    for k in (2, 3):
        d = thm33_sharp(k)
        t = gamma_trk(d, k, budget).value
        lb = -(-(k * d.n + 1) // (degrees(d)[0] + k))
        out.append(_sharp("sharp_degree_lower", f"thm33_sharp:k={k}", d, t == lb == k, k=k, gamma_trk=t, bound=lb))
    for k, k2 in ((1, 2), (1, 3), (2, 3)):
        d = thm34_sharp_stars(2, k, k2)
        t, t2 = gamma_trk(d, k, budget).value, gamma_trk(d, k2, budget).value
        bound = t + (k2 - k) * (t // k)
        ok = t == 2 * k and t2 == 2 * k2 == bound
        out.append(_sharp("sharp_color_extension", f"thm34_sharp_stars:t=2,k={k},k2={k2}", d, ok, k=k, k2=k2, gamma_trk=t, gamma_trk2=t2))
    for d, k, name in ((directed_path(2), 2, "directed_path:2"), (directed_cycle(3), 3, "directed_cycle:3"), (directed_cycle(2), 3, "directed_cycle:2")):
        t = gamma_trk(d, k, budget).value
        out.append(_sharp("sharp_order", f"{name},k={k}", d, t == d.n == min(k, d.n), k=k, gamma_trk=t))
    return out


def remark1_records(budget: SolveBudget | None = None) -> list[tuple[str, str, dict]]:
    """The packing condition is necessary but not sufficient: a witness family."""
    out = []
    for t, k in ((3, 2), (4, 2), (4, 3)):
        d = remark1(t, k)
        sets = minimum_dominating_sets(d, budget=budget)
        trk = gamma_trk(d, k, budget).value
        x, v = t, 0
        ok = (
            sets == [frozenset({x, v})]
            and is_packing(d, sets[0])
            and trk <= k + 2 < (k + 1) * len(sets[0])
        )
        out.append(_sharp("packing_not_sufficient", f"remark1:t={t},k={k}", d, ok, k=k, gamma_trk=trk))
    return out


def path_cycle_records(budget: SolveBudget | None = None, n_max: int = 8) -> list[tuple[str, str, dict]]:
    out = []
    for k in (2, 3):
        for n in range(2, n_max + 1):
            for name, d in (("directed_path", directed_path(n)), ("directed_cycle", directed_cycle(n))):
                t = gamma_trk(d, k, budget).value
                out.append(_sharp("paths_cycles_full_weight", f"{name}:{n},k={k}", d, t == n, k=k, gamma_trk=t))
    return out


def _fold(records, corpus: str, start: float) -> list[CheckResult]:
    checks: dict[str, CheckResult] = {}
    for check, status, det in records:
        checks.setdefault(check, CheckResult(check, corpus)).add(status, det)
    for c in checks.values():
        c.runtime_s = time.monotonic() - start
    return list(checks.values())


# -- public audits ----------------------------------------------------------


def audit_bounds(corpus, ks=(1, 2, 3), budget=None, jobs: int = 1, corpus_name="custom", families: bool = True) -> AuditReport:
    rep = AuditReport("bounds", 0)
    rep.checks = _run_corpus(["bounds"], corpus, ks, corpus_name, budget, jobs)["bounds"]
    if families:
        start = time.monotonic()
        rep.checks += _fold(sharpness_records(budget), "sharpness families", start)
    return rep


def audit_corollary_full_weight(corpus, ks=(1, 2, 3), budget=None, jobs: int = 1, corpus_name="custom") -> AuditReport:
    rep = AuditReport("corollaries", 0)
    rep.checks = _run_corpus(["corollaries"], corpus, ks, corpus_name, budget, jobs)["corollaries"]
    start = time.monotonic()
    rep.checks += _fold(path_cycle_records(budget), "paths and cycles n<=8", start)
    return rep


def audit_characterizations(corpus, ks=(1, 2, 3), budget=None, jobs: int = 1, corpus_name="custom") -> AuditReport:
    rep = AuditReport("characterizations", 0)
    rep.checks = _run_corpus(["characterizations"], corpus, ks, corpus_name, budget, jobs)["characterizations"]
    start = time.monotonic()
    rep.checks += _fold(remark1_records(budget), "remark1 family", start)
    return rep


COVERED_GRIDS = ((2, 2, 2), (2, 3, 2), (3, 3, 3), (1, 2, 2), (1, 3, 2))


def audit_grid_formulas(n_max: int = 12, bf_n_max: int = 4, extra=((2, 5, 2),), budget=None) -> AuditReport:
    """DP against closed forms, explicit labellings, and brute force on small grids.

    ``extra`` lists additional ``(m, n, k)`` grids for the brute-force comparison.
    """
    if n_max > 12 or bf_n_max > 5:
        raise InvalidInput("grid audit supports n_max <= 12 and bf_n_max <= 5")
    start = time.monotonic()
    records = []
    for m, k, lo in COVERED_GRIDS:
        values = dp_values(m, k, n_max)
        for n in range(lo, n_max + 1):
            spec = GridSpec(m, n, k)
            cf = closed_form(spec)
            iid = f"grid:{m}x{n},k={k}"
            records.append(("grid_closed_form", "equality" if values[n - 1] == cf else "violation", {"instance": iid, "dp": values[n - 1], "formula": cf}))
            if m >= 2:
                g = cons.grid_certificate(spec)
                ok = is_tkrdf(spec.digraph(), g) and weight(g) == cf
                records.append(("grid_certificate", "equality" if ok else "violation", {"instance": iid, "weight": weight(g)}))
        mono = all(a <= b for a, b in zip(values[lo - 1 :], values[lo:]))
        records.append(("grid_monotone_n", "pass" if mono else "violation", {"instance": f"grid:{m}xN,k={k}", "values": values}))
    grids = [(m, n, k) for m in (1, 2, 3) for k in (1, 2, 3) for n in range(1, bf_n_max + 1) if m * n >= 2]
    grids += [g for g in extra if g not in grids]
    for m, n, k in grids:
        spec = GridSpec(m, n, k)
        d = spec.digraph()
        r = dp_gamma_trk(spec)
        iid = f"grid:{m}x{n},k={k}"
        records.append(("grid_dp_witness", "pass" if is_tkrdf(d, r.certificate) and weight(r.certificate) == r.value else "violation", {"instance": iid}))
        try:
            b = gamma_trk(d, k, budget)
        except BudgetExceeded:
            records.append(("grid_vs_bruteforce", "skip", {"instance": iid}))
            continue
        same = (b.value, b.tie_break_empty_count) == (r.value, r.tie_break_empty_count)
        records.append(("grid_vs_bruteforce", "equality" if same else "violation", {"instance": iid, "dp": r.value, "brute": b.value}))
    rep = AuditReport("grids", 0)
    rep.checks = _fold(records, f"grids n<={n_max}, brute n<={bf_n_max}", start)
    return rep


def lemma_violations(m: int, k: int, profile: list[int]) -> list[str]:
    """Column-sum properties that every minimum-empty optimum must satisfy."""
    bad = []
    if (m, k) == (2, 2):
        if profile[0] < 2:
            bad.append("a_0 >= 2")
        bad += [f"a_{j} >= 1" for j, a in enumerate(profile) if a < 1]
        bad += [f"a_{j}+a_{j + 1} >= 3" for j in range(len(profile) - 1) if profile[j] + profile[j + 1] < 3]
    elif (m, k) == (2, 3):
        bad += [f"a_{j} >= 2" for j, a in enumerate(profile) if a < 2]
    elif (m, k) == (3, 3):
        bad += [f"a_{j}+a_{j + 1}+a_{j + 2} >= 8" for j in range(len(profile) - 2) if sum(profile[j : j + 3]) < 8]
    return bad


def audit_column_lemmas(n_max: int = 10) -> AuditReport:
    start = time.monotonic()
    records = []
    names = {(2, 2): "lemma_pair_sums_2x2", (2, 3): "lemma_columns_2x3", (3, 3): "lemma_windows_3x3"}
    for (m, k), name in names.items():
        for n in range(m, n_max + 1):
            spec = GridSpec(m, n, k)
            r = dp_gamma_trk(spec, min_empty=True)
            prof = column_weight_profile(r.certificate, spec)
            bad = lemma_violations(m, k, prof)
            det = {"instance": f"grid:{m}x{n},k={k}", "profile": prof, "empties": r.tie_break_empty_count, "failed": bad}
            records.append((name, "violation" if bad else "pass", det))
    rep = AuditReport("lemmas", 0)
    rep.checks = _fold(records, f"tie-broken DP optima n<={n_max}", start)
    return rep


def run_suite(
    suite: str,
    seed: int = 0,
    budget: SolveBudget | None = None,
    jobs: int = 1,
    n_max: int = 4,
    random_count: int = 200,
    ks=(1, 2, 3),
) -> AuditReport:
    """Run one named suite (or ``all``) on the exhaustive + seeded random corpus."""
    if suite not in SUITES + ("all",):
        raise InvalidInput(f"unknown suite {suite!r}")
    wanted = SUITES if suite == "all" else (suite,)
    report = AuditReport(suite, seed)
    corpus_suites = [s for s in wanted if s in _WORKERS]
    if corpus_suites:
        corpus = default_corpus(seed, n_max, random_count)
        name = f"exhaustive n<={n_max} + {random_count} random (seed {seed})"
        per_suite = _run_corpus(corpus_suites, corpus, ks, name, budget, jobs)
        for s in corpus_suites:
            report.checks += per_suite[s]
            start = time.monotonic()
            if s == "bounds":
                report.checks += _fold(sharpness_records(budget), "sharpness families", start)
            elif s == "corollaries":
                report.checks += _fold(path_cycle_records(budget), "paths and cycles n<=8", start)
            else:
                report.checks += _fold(remark1_records(budget), "remark1 family", start)
    if "grids" in wanted:
        report.checks += audit_grid_formulas(budget=budget).checks
    if "lemmas" in wanted:
        report.checks += audit_column_lemmas().checks
    return report
