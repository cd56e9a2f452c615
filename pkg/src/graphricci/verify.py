"""Invariant suites shared by the ``verify`` command and the test-suite."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import coxeter as cx
from .corpus import random_graph, regular_tree, small_corpus
from .curvature import (
    curvature_matrix,
    gamma,
    gamma2,
    gamma2_expanded,
    global_ricci,
    local_ricci,
    local_ricci_oracle,
)
from .graph import Graph, local_neighborhood
from .linalg import eigenvalues_symmetric, gershgorin_intervals, in_gershgorin_union
from .spectral import (
    cayley_gap_lower_bound,
    check_gap_vs_curvature,
    spectral_profile,
    verify_isoperimetry,
)

CAYLEY_TAGS = ("A2", "A3", "A4", "B2", "B3", "D4", "I2:3", "I2:4", "I2:5", "I2:6", "I2:7", "I2:8")


@dataclass
class Check:
    name: str
    ok: bool
    worst: float = 0.0
    witness: str = ""
    count: int = 0


@dataclass
class SuiteResult:
    scope: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def cayley_graphs(tags=CAYLEY_TAGS) -> dict[str, tuple[cx.CoxeterDiagram, Graph]]:
    out = {}
    for tag in tags:
        d = cx.parse_tag(tag)[0]
        out[tag] = (d, cx.weak_order_graph(cx.model_for(d)))
    return out


def oracle_corpus() -> dict[str, Graph]:
    graphs = dict(small_corpus())
    for tag in ("A2", "A3", "B2", "B3") + tuple(f"I2:{m}" for m in range(3, 9)):
        graphs[f"weak_{tag}"] = cx.weak_order_graph(cx.model_for(cx.parse_tag(tag)[0]))
    for n in (3, 4):
        graphs[f"bruhat_S{n}"] = cx.bruhat_graph_symmetric(n)
    return graphs


def _random_function(rng: random.Random, g: Graph, x: str) -> dict[str, float]:
    f = {v: rng.uniform(-3, 3) for v in g.vertices}
    f[x] = 0.0
    return f


def operators_suite(seed: int = 0, trials: int = 1000) -> SuiteResult:
    rng = random.Random(seed)
    worst_exp = worst_shift = 0.0
    witness_exp = witness_shift = ""
    for k in range(trials):
        g = random_graph(rng)
        x = rng.choice(g.vertices)
        f = _random_function(rng, g, x)
        err = abs(gamma2(g, f, x) - gamma2_expanded(g, f, x))
        if err > worst_exp:
            worst_exp, witness_exp = err, f"trial {k}"
        c = rng.uniform(-5, 5)
        shifted = {v: val + c for v, val in f.items()}
        h = {v: rng.uniform(-1, 1) for v in g.vertices}
        h_shift = {v: val - c for v, val in h.items()}
        err = max(
            abs(gamma2(g, shifted, x) - gamma2(g, f, x)),
            abs(gamma(g, shifted, h_shift, x) - gamma(g, f, h, x)),
        )
        if err > worst_shift:
            worst_shift, witness_shift = err, f"trial {k}"
    result = SuiteResult("operators")
    result.checks.append(Check("gamma2 == gamma2_expanded", worst_exp <= 1e-9, worst_exp, witness_exp, trials))
    result.checks.append(Check("shift invariance", worst_shift <= 1e-9, worst_shift, witness_shift, trials))

    worst, witness, count = 0.0, "", 0
    for name, g in oracle_corpus().items():
        for x in g.vertices:
            err = abs(local_ricci(g, x) - local_ricci_oracle(g, x))
            count += 1
            if err > worst:
                worst, witness = err, f"{name}@{x}"
    result.checks.append(Check("A(x) eigenvalue == definitional oracle", worst <= 1e-6, worst, witness, count))
    return result


def bounds_suite() -> SuiteResult:
    result = SuiteResult("bounds")
    failures: dict[str, list[str]] = {}
    counts: dict[str, int] = {}
    gersh_worst, gersh_witness, gersh_count = 0.0, "", 0
    for name, g in oracle_corpus().items():
        report = global_ricci(g)
        for b in report.bounds:
            counts[b.name] = counts.get(b.name, 0) + 1
            if not b.satisfied:
                failures.setdefault(b.name, []).append(name)
        for x in g.vertices:
            m = curvature_matrix(local_neighborhood(g, x)).matrix
            intervals = gershgorin_intervals(m)
            for ev in eigenvalues_symmetric(m).eigenvalues:
                gersh_count += 1
                if not in_gershgorin_union(ev, intervals):
                    gersh_worst, gersh_witness = ev, f"{name}@{x}"
    for bound_name in sorted(counts):
        bad = failures.get(bound_name, [])
        result.checks.append(Check(bound_name, not bad, len(bad), ",".join(bad[:5]), counts[bound_name]))
    result.checks.append(Check("gershgorin containment", not gersh_witness, gersh_worst, gersh_witness, gersh_count))

    worst, witness = 0.0, ""
    for d in (3, 4, 5):
        t = regular_tree(d, 3)
        err = abs(local_ricci(t, "r") - (2 - d))
        if err > worst:
            worst, witness = err, f"d={d}"
    result.checks.append(Check("regular tree centre == 2 - d", worst <= 1e-9, worst, witness, 3))
    return result


def coxeter_suite() -> SuiteResult:
    result = SuiteResult("coxeter")
    worst, witness = 0.0, ""
    rel_bad, vt_bad = [], []
    for tag, (d, g) in cayley_graphs().items():
        report = global_ricci(g)
        err = abs(report.global_ - cx.weak_order_ricci_spectral(d))
        if err > worst:
            worst, witness = err, tag
        if not cx.check_relations(cx.model_for(d), d):
            rel_bad.append(tag)
        values = list(report.per_vertex.values())
        if max(values) - min(values) > 1e-9:
            vt_bad.append(tag)
    n = len(CAYLEY_TAGS)
    result.checks.append(Check("explicit Cayley == 2 - lambda_max(M_W)", worst <= 1e-6, worst, witness, n))
    result.checks.append(Check("generator relations", not rel_bad, len(rel_bad), ",".join(rel_bad), n))
    result.checks.append(Check("vertex transitivity", not vt_bad, len(vt_bad), ",".join(vt_bad), n))

    worst, witness, count = 0.0, "", 0
    interval_bad = []
    tags = [f"A{n}" for n in range(1, 9)] + [f"B{n}" for n in range(2, 9)] + [f"D{n}" for n in range(3, 9)]
    tags += [f"I2:{m}" for m in range(3, 9)] + ["H3", "H4", "F4", "~A1", "~G2", "~F4"]
    tags += [f"~C{n}" for n in range(2, 8)] + [f"~A{n}" for n in range(2, 12)]
    tags += [f"~B{n}" for n in range(3, 8)] + [f"~D{n}" for n in range(4, 9)]
    for tag in tags:
        d = cx.parse_tag(tag)[0]
        spec_val = cx.weak_order_ricci_spectral(d)
        closed = cx.weak_order_ricci_closed_form(d)
        count += 1
        if isinstance(closed, cx.Interval):
            if not closed.contains(spec_val):
                interval_bad.append(tag)
        else:
            err = abs(closed - spec_val)
            if err > worst:
                worst, witness = err, tag
    result.checks.append(Check("closed form == spectral (exact types)", worst <= 1e-9, worst, witness, count))
    result.checks.append(Check("interval types contain spectral value", not interval_bad, len(interval_bad), ",".join(interval_bad), count))
    return result


def isoperimetry_suite(seed: int = 0, samples: int = 100_000) -> SuiteResult:
    result = SuiteResult("isoperimetry")
    gap_bad, iso_bad, applicable = [], [], 0
    gap_count = 0
    for name, g in small_corpus().items():
        verdict = check_gap_vs_curvature(g)
        gap_count += verdict.status != "not applicable"
        if verdict.status == "fail":
            gap_bad.append(name)
        if len(g) <= 14:
            iso = verify_isoperimetry(g, mode="exhaustive")
            applicable += iso.status != "not applicable"
            if iso.status == "fail":
                iso_bad.append(f"{name}:{','.join(iso.worst_subset)}")
    bruhat = cx.bruhat_graph_symmetric(3)
    gap_count += 1
    if check_gap_vs_curvature(bruhat).status != "pass":
        gap_bad.append("bruhat_S3")
    applicable += 1
    if verify_isoperimetry(bruhat, mode="exhaustive").status != "pass":
        iso_bad.append("bruhat_S3")
    result.checks.append(Check("gap >= curvature (positive curvature)", not gap_bad, len(gap_bad), ",".join(gap_bad), gap_count))
    result.checks.append(Check("exhaustive isoperimetry", not iso_bad, len(iso_bad), ";".join(iso_bad[:3]), applicable))

    cay_bad, sampled_bad = [], []
    for tag, (d, g) in cayley_graphs().items():
        prof = spectral_profile(g)
        bound = cayley_gap_lower_bound(len(g), d.rank, prof.diameter)
        if prof.spectral_gap < bound - 1e-9:
            cay_bad.append(tag)
    _, a3 = cayley_graphs(("A3",))["A3"]
    if verify_isoperimetry(a3, mode="sampled", seed=seed, samples=samples).status == "fail":
        sampled_bad.append("A3")
    result.checks.append(Check("Cayley gap lower bound", not cay_bad, len(cay_bad), ",".join(cay_bad), len(CAYLEY_TAGS)))
    result.checks.append(Check("sampled isoperimetry (A3 weak order)", not sampled_bad, len(sampled_bad), ",".join(sampled_bad), samples))
    return result


SUITES = {
    "operators": operators_suite,
    "bounds": bounds_suite,
    "coxeter": coxeter_suite,
    "isoperimetry": isoperimetry_suite,
}


def run_scope(scope: str, seed: int = 0, samples: int = 100_000) -> list[SuiteResult]:
    names = list(SUITES) if scope == "all" else [scope]
    out = []
    for name in names:
        if name == "operators":
            out.append(operators_suite(seed))
        elif name == "isoperimetry":
            out.append(isoperimetry_suite(seed, samples))
        elif name in SUITES:
            out.append(SUITES[name]())
        else:
            raise ValueError(f"unknown scope {scope!r}")
    return out

