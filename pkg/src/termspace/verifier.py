"""Run every theorem check on one monoid and collect a structured report.

Check statuses:

``pass``        the claim holds on this instance
``fail``        the claim is violated; the row carries a witness
``vacuous``     nothing to check (e.g. the terminal space is empty)
``degenerate``  holds for a reason that makes it uninformative at finite scale

Characterized properties (T1, distributivity, literal readings of a few
identities) are not claims, so they never produce ``fail``; they show up in
the payloads and in ``findings``.
"""
from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field

from .ideals import (Ideal, IdealLattice, arithmetic_check, enumerate_ideals, is_ideal,
                     lattice_analysis, product_ideal, radical)
from .monoid import ElementSet, FiniteMonoid, InvariantViolation, nonunits, permute, units
from .topology import (SearchConfig, TerminalSpace, build_terminal_space, closure_class_check,
                       compactness_witness, density_check, invertibility_check,
                       irreducible_closed_analysis, irreducible_components, noetherian_check,
                       open_sets, radicals, separation_check, verify_kuratowski, DEFAULT_CONFIG)

PASS, FAIL, VACUOUS, DEGENERATE = "pass", "fail", "vacuous", "degenerate"
STATUSES = (PASS, FAIL, VACUOUS, DEGENERATE)

CHECK_IDS = (
    "lattice.ring_of_sets",
    "lattice.nonunits_maximal",
    "classification.implications",
    "classification.irreducible_eq_strongly",
    "radical.closure_properties",
    "kuratowski.empty",
    "kuratowski.extensive",
    "kuratowski.idempotent",
    "kuratowski.additive",
    "hull_kernel.hull_of_whole",
    "hull_kernel.closure_is_topological",
    "hull_kernel.union_via_kernels",
    "hull_kernel.intersection_via_joins",
    "hull_kernel.generated_radical_chain",
    "closure_class.strongly_irreducible",
    "closure_class.prime",
    "closure_class.proper",
    "separation.t0",
    "separation.t1_iff_antichain",
    "compactness.finite_subcover",
    "irreducible.generic_points",
    "components.bijection",
    "invertibility.criterion",
    "noetherian.dcc",
    "arithmetic.equivalence",
    "radicals.chain",
    "density.pairing",
    "invariance.relabel",
)

# checks that only look at points / nonempty closed sets
_SPACE_CHECKS = {
    "kuratowski.empty", "kuratowski.extensive", "kuratowski.idempotent", "kuratowski.additive",
    "hull_kernel.closure_is_topological", "hull_kernel.union_via_kernels",
    "hull_kernel.generated_radical_chain", "separation.t0", "separation.t1_iff_antichain",
    "compactness.finite_subcover", "irreducible.generic_points", "components.bijection",
}


@dataclass
class CheckResult:
    id: str
    status: str
    payload: dict = field(default_factory=dict)
    elapsed: float = 0.0


@dataclass
class VerificationReport:
    name: str
    order: int
    table_hash: str
    checks: list[CheckResult]
    findings: list[str]

    @property
    def summary(self) -> dict[str, int]:
        counts = {s: 0 for s in STATUSES}
        for c in self.checks:
            counts[c.status] += 1
        return counts

    @property
    def failed(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failed

    def check(self, check_id: str) -> CheckResult:
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)


def table_hash(m: FiniteMonoid) -> str:
    blob = json.dumps([list(m.element_names), m.identity, [list(r) for r in m.table]],
                      separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class _Context:
    """Shared state for the checks of one run, plus JSON-friendly renderers."""

    def __init__(self, m: FiniteMonoid, config: SearchConfig):
        self.m = m
        self.config = config
        self.lattice: IdealLattice = enumerate_ideals(m)
        self.space: TerminalSpace = build_terminal_space(m, self.lattice)
        self.findings: list[str] = []
        self._kuratowski = None

    def names(self, s: ElementSet | None):
        if s is None:
            return None
        return [self.m.element_names[i] for i in s]

    def point_set(self, bits: int):
        return [self.names(self.space.points[j]) for j in range(len(self.space.points)) if bits >> j & 1]

    @property
    def kuratowski(self):
        if self._kuratowski is None:
            self._kuratowski = verify_kuratowski(self.space, self.config)
        return self._kuratowski


def _result(ok: bool, payload=None, witness=None) -> tuple[str, dict]:
    payload = dict(payload or {})
    if not ok:
        payload["witness"] = witness if witness is not None else "unspecified"
    return (PASS if ok else FAIL), payload


def _lattice_ring(cx: _Context):
    m, lat = cx.m, cx.lattice
    bits = {I.bits for I in lat}
    for A in lat:
        for B in lat:
            if (A.bits & B.bits) not in bits or (A.bits | B.bits) not in bits:
                return _result(False, witness=[cx.names(A), cx.names(B)])
    for A in lat:
        ok, wit = is_ideal(m, A)
        if not ok:
            return _result(False, witness=[cx.names(A), list(wit)])
        union = 0
        for a in A:
            union |= m.principal_bits[a]
        if union != A.bits:
            return _result(False, witness=cx.names(A))
    return _result(True, {"ideals": len(lat), "contains_whole": lat.top.bits == m.full_bits})


def _nonunits_maximal(cx: _Context):
    m, lat = cx.m, cx.lattice
    nu = nonunits(m)
    if not nu:
        return VACUOUS, {"note": "every element is a unit"}
    if nu not in lat:
        return _result(False, witness=cx.names(nu))
    for I in lat.proper:
        if not I <= nu:
            return _result(False, witness=cx.names(I))
    maximal = lat.with_flag("maximal")
    ok = len(maximal) == 1 and maximal[0] == nu
    return _result(ok, {"maximal": [cx.names(I) for I in maximal]}, witness=[cx.names(I) for I in maximal])


def _implications(cx: _Context):
    m, lat = cx.m, cx.lattice
    for c in lat.classifications:
        if c.prime and not c.strongly_irreducible:
            return _result(False, witness=["prime but not strongly irreducible", cx.names(c.ideal)])
        if c.strongly_irreducible and not c.irreducible:
            return _result(False, witness=["strongly irreducible but not irreducible", cx.names(c.ideal)])
        if c.maximal and not c.prime:
            return _result(False, witness=["maximal but not prime", cx.names(c.ideal)])
    for I in lat:
        for J in lat:
            product_ideal(m, I, J)  # raises on IJ not inside I & J
    counts = {f: sum(getattr(c, f) for c in lat.classifications)
              for f in ("prime", "maximal", "irreducible", "strongly_irreducible", "semiprime")}
    return _result(True, {"counts": counts})


def _irreducible_eq_strongly(cx: _Context):
    lat = cx.lattice
    if not lattice_analysis(lat).is_distributive:
        return VACUOUS, {"note": "ideal lattice is not distributive"}
    for c in lat.classifications:
        if c.irreducible != c.strongly_irreducible:
            return _result(False, witness=cx.names(c.ideal))
    return _result(True)


def _radical_properties(cx: _Context):
    m, lat = cx.m, cx.lattice
    rads = {I.bits: radical(m, I) for I in lat}
    for I in lat:
        r = rads[I.bits]
        if not I <= r:
            return _result(False, witness=["not extensive", cx.names(I)])
        if radical(m, r) != r:
            return _result(False, witness=["not idempotent", cx.names(I)])
        if lat.classification(I).semiprime != (r == I) and I.bits != m.full_bits:
            return _result(False, witness=["semiprime flag disagrees", cx.names(I)])
    for I in lat:
        for J in lat:
            if I <= J and not rads[I.bits] <= rads[J.bits]:
                return _result(False, witness=["not monotone", cx.names(I), cx.names(J)])
    return _result(True)


def _kuratowski_item(check_id):
    name = check_id.split(".", 1)[1]

    def check(cx: _Context):
        rep = cx.kuratowski
        o = rep.checks[name]
        wit = o.witness
        if isinstance(wit, tuple):
            wit = [cx.point_set(w) if isinstance(w, int) else list(w) for w in wit]
        elif isinstance(wit, int):
            wit = cx.point_set(wit)
        payload = {"exhaustive": rep.exhaustive, "subsets": rep.subsets_checked}
        literal_key = {"union_via_kernels": "union_of_closures_is_closure_of_meet",
                       "intersection_via_joins": "meet_of_closures_is_closure_of_meet",
                       "generated_radical_chain": "closure_below_generated_below_radical"}.get(name)
        if literal_key:
            lit = rep.literal[literal_key]
            payload["literal_reading_holds"] = lit.ok
            if not lit.ok:
                w = lit.witness
                payload["literal_counterexample"] = (
                    [cx.point_set(x) for x in w] if isinstance(w, tuple) else cx.point_set(w))
                cx.findings.append(f"{check_id}: literal set-level reading fails")
        return _result(o.ok, payload, wit)
    return check


def _closure_class(flag):
    def check(cx: _Context):
        m, lat = cx.m, cx.lattice
        if flag == "proper":
            fam = lat.proper
        else:
            fam = lat.with_flag(flag)
        res = closure_class_check(m, lat, fam, cx.config)
        payload = {"class_size": len(fam), "is_kuratowski": res.is_kuratowski,
                   "direct_kuratowski": res.direct_kuratowski, "exhaustive": res.exhaustive}
        if res.witness:
            payload["absorption_witness"] = [cx.names(x) for x in res.witness]
        ok = res.agree and (res.is_kuratowski or flag == "proper")
        return _result(ok, payload, payload.get("absorption_witness") or [str(res.direct_witness)])
    return check


def _t0(cx: _Context):
    sep = separation_check(cx.space)
    return _result(sep.t0, {"points": len(cx.space.points)}, witness="two points share a closure")


def _t1(cx: _Context):
    sep = separation_check(cx.space)
    payload = {"t1": sep.t1, "antichain": sep.antichain}
    if sep.witness:
        i, j = sep.witness
        payload["inclusion"] = [cx.names(cx.space.points[i]), cx.names(cx.space.points[j])]
    if not sep.t1:
        cx.findings.append("separation: space is not T1")
    return _result(sep.t1_iff_antichain, payload, witness=payload.get("inclusion", "mismatch"))


def _compactness(cx: _Context):
    cover = open_sets(cx.space)
    sub = compactness_witness(cx.space, cover)
    covered = 0
    for i in sub:
        for p in cover[i]:
            covered |= 1 << p
    ok = covered == cx.space.all_bits
    return _result(ok, {"cover_size": len(cover), "subcover": [sorted(cover[i]) for i in sub]},
                   witness=list(sub))


def _generic_points(cx: _Context):
    space = cx.space
    n_irr = 0
    for c in space.closed_sets:
        if not c.members:
            continue
        res = irreducible_closed_analysis(space, c)
        n_irr += res.irreducible_topological
        if not res.consistent:
            return _result(False, witness={"closed_set": cx.point_set(c.bits),
                                           "irreducible": res.irreducible_topological,
                                           "kernel_strongly_irreducible": res.kernel_strongly_irreducible,
                                           "generic_points": res.generic_count})
        if res.irreducible_topological and cx.space.up[res.generic_point] != c.bits:
            return _result(False, witness=cx.point_set(c.bits))
    return _result(True, {"nonempty_closed": len(space.closed_sets) - 1, "irreducible": n_irr})


def _components(cx: _Context):
    res = irreducible_components(cx.space)
    payload = {"components": [cx.point_set(c.bits) for c in res.components],
               "minimal": [cx.names(cx.space.points[i]) for i in res.minimal_si]}
    return _result(res.is_bijection, payload, witness=[list(p) for p in res.bijection])


def _invertibility(cx: _Context):
    for a in range(cx.m.order):
        res = invertibility_check(cx.space, a)
        if not res.agree:
            return _result(False, witness={"element": cx.m.element_names[a],
                                           "criterion": res.criterion_holds, "unit": res.is_unit})
    return _result(True, {"units": cx.names(units(cx.m))})


def _noetherian(cx: _Context):
    res = noetherian_check(cx.space)
    if not res.dcc_closed_sets:
        return _result(False, witness="infinite descending chain")
    return DEGENERATE, {"longest_chain": res.longest_chain,
                        "note": "finitely many closed sets"}


def _arithmetic(cx: _Context):
    res = arithmetic_check(cx.m, cx.lattice)
    dist = lattice_analysis(cx.lattice)
    payload = {"distributive": res.side_a, "meet_of_strongly_irreducible": res.side_b}
    if dist.counterexample:
        payload["distributivity_counterexample"] = [cx.names(x) for x in dist.counterexample]
    if res.witness is not None:
        payload["unrepresented_ideal"] = cx.names(res.witness)
    return _result(res.agree, payload, witness=payload.get("unrepresented_ideal", "sides disagree"))


def _radical_chain(cx: _Context):
    rad = radicals(cx.m, cx.lattice, cx.space)  # raises if s <= p <= m fails
    points = {p.bits for p in cx.space.points}
    ok = all(p.bits in points for p in rad.primes) and all(mx in rad.primes for mx in rad.maximal)
    payload = {"m_radical": cx.names(rad.m_radical), "p_radical": cx.names(rad.p_radical),
               "s_radical": cx.names(rad.s_radical), "max_count": len(rad.maximal),
               "spec_count": len(rad.primes)}
    return _result(ok, payload, witness="Max <= Spec <= S fails")


def _density(cx: _Context):
    d = density_check(cx.m, cx.space)
    payload = {"spec_dense": d.spec_dense, "max_dense": d.max_dense, "p_eq_s": d.p_eq_s,
               "m_eq_s": d.m_eq_s, "literal_pairing_holds": d.literal_pairing_holds}
    if not d.literal_pairing_holds:
        cx.findings.append("density: literal item pairing violated (corrected pairing holds)"
                           if d.corrected_pairing_holds else "density: literal item pairing violated")
    return _result(d.corrected_pairing_holds, payload, witness=payload)


def _relabel(cx: _Context):
    m = cx.m
    n = m.order
    perm = [(a + 1) % n for a in range(n)]
    m2 = permute(m, perm)
    lat2 = enumerate_ideals(m2)
    space2 = build_terminal_space(m2, lat2)

    def moved(I):
        return sum(1 << perm[a] for a in I)

    ideals1 = {moved(I) for I in cx.lattice}
    ideals2 = {I.bits for I in lat2}
    pts1 = {moved(p) for p in cx.space.points}
    pts2 = {p.bits for p in space2.points}
    flags_ok = all(
        lat2.classification(Ideal(n, moved(I))).flags() == cx.lattice.classification(I).flags()
        for I in cx.lattice)
    ok = ideals1 == ideals2 and pts1 == pts2 and flags_ok
    return _result(ok, {"permutation": perm}, witness={"permutation": perm})


_CHECKS = {
    "lattice.ring_of_sets": _lattice_ring,
    "lattice.nonunits_maximal": _nonunits_maximal,
    "classification.implications": _implications,
    "classification.irreducible_eq_strongly": _irreducible_eq_strongly,
    "radical.closure_properties": _radical_properties,
    "kuratowski.empty": _kuratowski_item("kuratowski.empty"),
    "kuratowski.extensive": _kuratowski_item("kuratowski.extensive"),
    "kuratowski.idempotent": _kuratowski_item("kuratowski.idempotent"),
    "kuratowski.additive": _kuratowski_item("kuratowski.additive"),
    "hull_kernel.hull_of_whole": _kuratowski_item("hull_kernel.hull_of_whole"),
    "hull_kernel.closure_is_topological": _kuratowski_item("hull_kernel.closure_is_topological"),
    "hull_kernel.union_via_kernels": _kuratowski_item("hull_kernel.union_via_kernels"),
    "hull_kernel.intersection_via_joins": _kuratowski_item("hull_kernel.intersection_via_joins"),
    "hull_kernel.generated_radical_chain": _kuratowski_item("hull_kernel.generated_radical_chain"),
    "closure_class.strongly_irreducible": _closure_class("strongly_irreducible"),
    "closure_class.prime": _closure_class("prime"),
    "closure_class.proper": _closure_class("proper"),
    "separation.t0": _t0,
    "separation.t1_iff_antichain": _t1,
    "compactness.finite_subcover": _compactness,
    "irreducible.generic_points": _generic_points,
    "components.bijection": _components,
    "invertibility.criterion": _invertibility,
    "noetherian.dcc": _noetherian,
    "arithmetic.equivalence": _arithmetic,
    "radicals.chain": _radical_chain,
    "density.pairing": _density,
    "invariance.relabel": _relabel,
}
assert tuple(_CHECKS) == CHECK_IDS


def run_all(m: FiniteMonoid, *, name: str = "", config: SearchConfig = DEFAULT_CONFIG) -> VerificationReport:
    cx = _Context(m, config)
    empty_space = not cx.space.points
    rows = []
    for check_id, fn in _CHECKS.items():
        t0 = time.perf_counter()
        try:
            status, payload = fn(cx)
        except InvariantViolation as exc:
            status, payload = FAIL, {"witness": str(exc)}
        if status == PASS and empty_space and check_id in _SPACE_CHECKS:
            status = VACUOUS
        rows.append(CheckResult(check_id, status, payload, time.perf_counter() - t0))
    if lattice_analysis(cx.lattice).is_distributive:
        cx.findings.append("arithmetic: ideal lattice is distributive")
    findings = sorted(set(cx.findings))
    return VerificationReport(name, m.order, table_hash(m), rows, findings)


__all__ = ["run_all", "VerificationReport", "CheckResult", "CHECK_IDS", "STATUSES", "table_hash"]
