"""Exhaustive property sweeps over one group's lattice.

Each property is a statement that must hold in every finite group (standard
facts, or results this engine tests empirically).  A sweep counts how many
instances were checked and records every violation with enough detail to
reproduce it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import bitset
from .classify import ChainVerdict, is_pt_group, is_solvable, is_sq4t_group, zacher_witness
from .config import DEFAULT_LIMITS, Limits
from .lattice import all_subgroups, commutator_subgroup, is_subnormal
from .perm import GroupTable, quotient, subgroup_table
from .permutability import (hkhk, is_permutable, is_sqn4, perm4, permutes, product_set,
                            sqn4_in_subgroup)

PROPERTIES = (
    "lagrange",
    "commutator_normal_in_join",
    "commutator_symmetric",
    "commutator_in_k_iff_normalizes",
    "hkhk_in_join",
    "product_formula",
    "permuting_pair_perm4",
    "permutable_implies_sqn4",
    "sqn4_restricts_to_subgroups",
    "sqn4_passes_to_quotients",
    "ore_subnormal",
    "sq4t_implies_solvable",
    "sq4t_subgroup_closed",
    "zacher_pt",
)


@dataclass
class AuditResult:
    group: str
    checked: Counter = field(default_factory=Counter)
    violations: list[dict] = field(default_factory=list)

    def fail(self, prop: str, detail: dict) -> None:
        self.violations.append({"property": prop, "group": self.group, **detail})

    def merge(self, other: "AuditResult") -> None:
        self.checked.update(other.checked)
        self.violations.extend(other.violations)


def _conj_all_preserve(g: GroupTable, target_idx: np.ndarray, target_mask: np.ndarray,
                       by_idx: np.ndarray) -> bool:
    conj = g.mul[g.mul[g.inv[by_idx][:, None], target_idx[None, :]], by_idx[:, None]]
    return bool(target_mask[conj].all())


def audit_pairs(g: GroupTable, res: AuditResult, limits: Limits = DEFAULT_LIMITS) -> None:
    lat = all_subgroups(g, limits)
    n = g.order
    for h in lat:
        res.checked["lagrange"] += 1
        if n % h.size:
            res.fail("lagrange", {"H": h.one_based()})
    for i, h in enumerate(lat):
        for j, k in enumerate(lat):
            hk = commutator_subgroup(g, h, k)
            kh = commutator_subgroup(g, k, h)
            v = perm4(g, h, k)
            # recomputed here so the shortcuts inside perm4 are checked too
            join = lat[lat.join(i, j)]
            prod4 = hkhk(g, h, k)

            res.checked["commutator_normal_in_join"] += 1
            if not _conj_all_preserve(g, hk.indices, bitset.to_mask(hk.members, n), join.indices):
                res.fail("commutator_normal_in_join", {"H": h.one_based(), "K": k.one_based()})

            res.checked["commutator_symmetric"] += 1
            if hk.members != kh.members:
                res.fail("commutator_symmetric", {"H": h.one_based(), "K": k.one_based()})

            res.checked["commutator_in_k_iff_normalizes"] += 1
            normalizes = _conj_all_preserve(g, k.indices, bitset.to_mask(k.members, n), h.indices)
            if bitset.is_subset(hk.members, k.members) != normalizes:
                res.fail("commutator_in_k_iff_normalizes", {"H": h.one_based(), "K": k.one_based()})

            res.checked["hkhk_in_join"] += 1
            if not bitset.is_subset(prod4.members, join.members) or \
                    v.holds != (prod4.members == join.members) or \
                    v.product.members != prod4.members or v.join.members != join.members:
                res.fail("hkhk_in_join", {"H": h.one_based(), "K": k.one_based()})

            res.checked["product_formula"] += 1
            prod = product_set(h, k)
            inter = (h.members & k.members).bit_count()
            if prod.size * inter != h.size * k.size:
                res.fail("product_formula", {"H": h.one_based(), "K": k.one_based(),
                                             "HK": prod.size})

            if permutes(g, h, k):
                res.checked["permuting_pair_perm4"] += 1
                if not v.holds:
                    res.fail("permuting_pair_perm4", {"H": h.one_based(), "K": k.one_based()})


def audit_subgroup_statements(g: GroupTable, res: AuditResult, limits: Limits = DEFAULT_LIMITS) -> None:
    lat = all_subgroups(g, limits)
    sqn4 = {h.members: is_sqn4(g, h, lat) for h in lat}
    for h in lat:
        if is_permutable(g, h, lat):
            res.checked["permutable_implies_sqn4"] += 1
            if not sqn4[h.members]:
                res.fail("permutable_implies_sqn4", {"H": h.one_based()})
            res.checked["ore_subnormal"] += 1
            if not is_subnormal(g, h):
                res.fail("ore_subnormal", {"H": h.one_based()})

    for h in lat:
        if not sqn4[h.members]:
            continue
        for k in lat:
            if not bitset.is_subset(h.members, k.members):
                continue
            res.checked["sqn4_restricts_to_subgroups"] += 1
            if not sqn4_in_subgroup(g, h, k, lat):
                res.fail("sqn4_restricts_to_subgroups", {"H": h.one_based(), "K": k.one_based()})

    for i, nsub in enumerate(lat):
        if not lat.normal_flags[i]:
            continue
        qm = None
        for h in lat:
            if not sqn4[h.members] or not bitset.is_subset(nsub.members, h.members):
                continue
            if qm is None:
                qm = quotient(g, nsub)
                qlat = all_subgroups(qm.quotient, limits)
            res.checked["sqn4_passes_to_quotients"] += 1
            if not is_sqn4(qm.quotient, qm.image(h), qlat):
                res.fail("sqn4_passes_to_quotients", {"H": h.one_based(), "N": nsub.one_based()})


def audit_group_classes(g: GroupTable, res: AuditResult, limits: Limits = DEFAULT_LIMITS,
                        sq4t: ChainVerdict | None = None, solvable: bool | None = None,
                        pt: ChainVerdict | None = None) -> None:
    lat = all_subgroups(g, limits)
    sq4t = sq4t if sq4t is not None else is_sq4t_group(g, lat, limits)
    solvable = solvable if solvable is not None else is_solvable(g)
    if sq4t:
        res.checked["sq4t_implies_solvable"] += 1
        if not solvable:
            res.fail("sq4t_implies_solvable", {})
        for h in lat:
            res.checked["sq4t_subgroup_closed"] += 1
            t = subgroup_table(g, h)
            v = is_sq4t_group(t, all_subgroups(t, limits), limits)
            if not v:
                inner, middle = v.chain
                res.fail("sq4t_subgroup_closed", {
                    "H": h.one_based(),
                    "chain_in_H": [from_sub(t, inner), from_sub(t, middle)]})
    if solvable:
        pt = pt if pt is not None else is_pt_group(g, lat, limits)
        res.checked["zacher_pt"] += 1
        if bool(pt) != (zacher_witness(g, lat, limits) is not None):
            res.fail("zacher_pt", {"pt": bool(pt)})


def from_sub(t: GroupTable, s) -> list[int]:
    """Members of a subgroup of a subgroup table, as 1-based parent indices."""
    return [int(t.embedding[i]) + 1 for i in s.indices]


def audit_group(g: GroupTable, name: str | None = None, limits: Limits = DEFAULT_LIMITS,
                **known) -> AuditResult:
    res = AuditResult(name or g.name or f"order{g.order}")
    audit_pairs(g, res, limits)
    audit_subgroup_statements(g, res, limits)
    audit_group_classes(g, res, limits, **known)
    return res

