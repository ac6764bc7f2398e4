"""Fixed checklist reproducing the worked examples on S3, D12, D8, A5 and A4,
followed by the empirical property sweeps over the small-group corpus."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .audit import PROPERTIES
from .catalog import build_named, parse_element, parse_generators
from .classify import (is_modular_lattice, is_nilpotent, is_pt_group, is_solvable, is_sq4t_group,
                       is_supersolvable, sqn4_in_own_table, zacher_witness)
from .config import DEFAULT_LIMITS, Limits
from .lattice import all_subgroups, commutator_subgroup, cyclic_subgroup, generated_subgroup
from .perm import GroupTable, quotient
from .permutability import hkhk, is_permutable, is_qn4, is_sqn4, perm4, permutes, sqn4_in_subgroup
from .sets import SubgroupSet
from .survey import run_survey
from . import bitset


@dataclass
class Check:
    id: str
    expected: str
    actual: str
    passed: bool

    def to_dict(self) -> dict:
        return {"id": self.id, "expected": self.expected, "actual": self.actual, "pass": self.passed}


@dataclass
class VerifyPaperResult:
    checks: list[Check] = field(default_factory=list)

    def add(self, id: str, expected, actual) -> None:
        if any(c.id == id for c in self.checks):
            raise ValueError(f"duplicate check id {id}")
        self.checks.append(Check(id, _fmt(expected), _fmt(actual), expected == actual))

    @property
    def summary(self) -> dict:
        passed = sum(c.passed for c in self.checks)
        return {"passed": passed, "failed": len(self.checks) - passed, "total": len(self.checks)}

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"checks": [c.to_dict() for c in self.checks], "summary": self.summary}


def _fmt(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


def _sub(g: GroupTable, *texts: str) -> SubgroupSet:
    return generated_subgroup(g, bitset.from_indices(parse_generators(g, texts)))


def _count(pred, items) -> str:
    items = list(items)
    return f"{sum(bool(pred(x)) for x in items)}/{len(items)}"


def check_s3(res: VerifyPaperResult, limits: Limits) -> None:
    g = build_named("S3", limits)
    lat = all_subgroups(g, limits)
    h, k = _sub(g, "(1 2)"), _sub(g, "(1 3)")
    v = perm4(g, h, k)
    res.add("e1-permutes-H-K", False, permutes(g, h, k))
    res.add("e1-perm4-H-K", True, v.holds)
    res.add("e1-join-product-is-G", "6/6", f"{v.join.size}/{v.product.size}")
    res.add("e1-perm4-H-23", True, perm4(g, h, _sub(g, "(2 3)")).holds)
    res.add("e1-sqn4-S3", f"{len(lat)}/{len(lat)}", _count(lambda s: is_sqn4(g, s, lat), lat))
    res.add("e1-qn4-S3", f"{len(lat)}/{len(lat)}", _count(lambda s: is_qn4(g, s, lat), lat))
    res.add("r1-sqn4-not-permutable", "true/false", f"{_fmt(is_sqn4(g, h, lat))}/{_fmt(is_permutable(g, h, lat))}")


def check_d12(res: VerifyPaperResult, limits: Limits) -> None:
    g = build_named("D12", limits)
    lat = all_subgroups(g, limits)
    r, s = parse_element(g, "r"), parse_element(g, "s")
    res.add("e2-relation-r^s=r^5", True,
            int(g.mul[g.mul[g.inv[s], r], s]) == g.power(r, 5))
    res.add("e2-pt-direct", True, is_pt_group(g, lat, limits).holds)
    w = zacher_witness(g, lat, limits)
    res.add("e2-zacher-L-order", 3, w.L.size if w else None)
    res.add("e2-zacher-L-is-r2", True, bool(w) and w.L.members == cyclic_subgroup(g, g.power(r, 2)).members)
    qm = quotient(g, cyclic_subgroup(g, g.power(r, 2)))
    q = qm.quotient
    res.add("e2-quotient-Z2xZ2", "order=4 abelian=true exponent=2",
            f"order={q.order} abelian={_fmt(q.is_abelian())} "
            f"exponent={max(q.element_order(i) for i in range(q.order))}")
    res.add("e2-quotient-nilpotent-modular", "true/true",
            f"{_fmt(is_nilpotent(q, limits))}/{_fmt(is_modular_lattice(q, all_subgroups(q, limits)))}")
    h = _sub(g, "r^2", "s")
    kk = _sub(g, "s")
    m = _sub(g, "s r")
    res.add("e2-H-sqn4", True, is_sqn4(g, h, lat))
    res.add("e2-K-sqn4-in-H", "true/true",
            f"{_fmt(sqn4_in_subgroup(g, kk, h, lat))}/{_fmt(sqn4_in_own_table(g, kk, h, limits))}")
    res.add("e2-kmkm-size", 8, hkhk(g, kk, m).size)
    res.add("e2-KM-join-order", 12, perm4(g, kk, m).join.size)
    res.add("e2-K-not-sqn4", False, is_sqn4(g, kk, lat))
    v = is_sq4t_group(g, lat, limits)
    res.add("e2-not-sq4t", False, v.holds)
    res.add("e2-sq4t-chain-K-in-H", "order 2 in order 6",
            f"order {v.chain[0].size} in order {v.chain[1].size}" if v.chain else "none")
    res.add("e2-solvable", True, is_solvable(g))


def check_d8(res: VerifyPaperResult, limits: Limits) -> None:
    g = build_named("D8", limits)
    lat = all_subgroups(g, limits)
    s = _sub(g, "s")
    h = _sub(g, "r^2", "s")
    h_lat = [x for x in lat if bitset.is_subset(x.members, h.members)]
    res.add("ex2-s-perm-in-r2s", True, all(permutes(g, s, x) for x in h_lat))
    res.add("ex2-r2s-perm-in-G", True, is_permutable(g, h, lat))
    res.add("ex2-s-not-perm-in-G", False, is_permutable(g, s, lat))
    res.add("ex2-all-sqn4", f"{len(lat)}/{len(lat)}", _count(lambda x: is_sqn4(g, x, lat), lat))
    res.add("ex2-sq4t", True, is_sq4t_group(g, lat, limits).holds)
    res.add("ex2-pt", False, is_pt_group(g, lat, limits).holds)


def check_a5(res: VerifyPaperResult, limits: Limits) -> None:
    g = build_named("A5", limits)
    lat = all_subgroups(g, limits)
    res.add("ex3-a5-subgroups", 59, len(lat))
    res.add("ex3-a5-normals", "[1, 60]", str([x.size for x in lat.normal_subgroups()]))
    res.add("ex3-a5-permutables", "[1, 60]", str([x.size for x in lat if is_permutable(g, x, lat)]))
    res.add("ex3-pt", True, is_pt_group(g, lat, limits).holds)
    res.add("ex3-solvable", False, is_solvable(g))
    res.add("ex3-sq4t", False, is_sq4t_group(g, lat, limits).holds)


def check_a4(res: VerifyPaperResult, limits: Limits) -> None:
    g = build_named("A4", limits)
    lat = all_subgroups(g, limits)
    p = _sub(g, "(1 2)(3 4)", "(1 3)(2 4)")
    w1 = lat.normal_subgroups()
    w2 = [x for x in lat if x.size == 2]
    w3 = [x for x in lat if x.size == 3]
    res.add("ex4-lattice-size", 10, len(lat))
    res.add("ex4-partition", "3/3/4", f"{len(w1)}/{len(w2)}/{len(w3)}")
    res.add("ex4-W1-is-A4-P-1", True,
            sorted(x.members for x in w1) == sorted([1, p.members, g.whole.members]))
    res.add("ex4-P-order", 4, p.size)
    res.add("ex4-commutator-h1h2", "1",
            ",".join(sorted({str(commutator_subgroup(g, a, b).size) for a, b in combinations(w2, 2)})))
    res.add("ex4-h1h2-is-P", True,
            all(perm4(g, a, b).product.members == p.members for a, b in combinations(w2, 2)))
    res.add("ex4-commutator-k1k2", "P",
            ",".join(sorted({"P" if commutator_subgroup(g, a, b).members == p.members else "other"
                             for a, b in combinations(w3, 2)})))
    res.add("ex4-k1k2-perm4-A4", True,
            all(perm4(g, a, b).product.members == g.whole.members for a, b in combinations(w3, 2)))
    res.add("ex4-hk-perm4-A4", True,
            all(perm4(g, a, b).product.members == g.whole.members for a in w2 for b in w3))
    res.add("ex4-all-sqn4", f"{len(lat)}/{len(lat)}", _count(lambda x: is_sqn4(g, x, lat), lat))
    res.add("ex4-sq4t", True, is_sq4t_group(g, lat, limits).holds)
    res.add("ex4-supersolvable", False, is_supersolvable(g, limits))
    res.add("ex4-solvable", True, is_solvable(g))


SWEEP_IDS = {
    "commutator_normal_in_join": "L1-1", "commutator_symmetric": "L1-2", "commutator_in_k_iff_normalizes": "L1-3",
    "sqn4_restricts_to_subgroups": "L2", "sqn4_passes_to_quotients": "L3", "sq4t_subgroup_closed": "P1",
    "sq4t_implies_solvable": "TA", "permutable_implies_sqn4": "perm-sqn4",
    "ore_subnormal": "ore", "zacher_pt": "zacher",
}


def check_sweeps(res: VerifyPaperResult, max_order: int, jobs: int | None, limits: Limits) -> None:
    sv = run_survey(max_order, jobs, limits)
    bad = {p: sum(v["property"] == p for v in sv.violations) for p in PROPERTIES}
    for prop in PROPERTIES:
        if prop in SWEEP_IDS:
            res.add(f"sweep-{SWEEP_IDS[prop]}-{prop}", "0 violations",
                    f"{bad[prop]} violations")


def verify_paper(sweep_max_order: int = 16, jobs: int | None = None,
                 limits: Limits = DEFAULT_LIMITS) -> VerifyPaperResult:
    res = VerifyPaperResult()
    check_s3(res, limits)
    check_d12(res, limits)
    check_d8(res, limits)
    check_a5(res, limits)
    check_a4(res, limits)
    check_sweeps(res, sweep_max_order, jobs, limits)
    return res
