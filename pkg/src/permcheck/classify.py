"""Group-level classes: abelian, nilpotent, solvable, supersolvable, PT, Sq4T.

Inner predicates ("permutable in H", "sqn4 in K") are decided on a freshly
built table for the subgroup, never by filtering the parent lattice.
"""

from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from . import bitset
from .config import DEFAULT_LIMITS, Limits
from .errors import ImplicationViolated
from .lattice import Lattice, all_subgroups, derived_series, is_prime, prime_factors, sylow_subgroups
from .perm import GroupTable, quotient, subgroup_table
from .permutability import is_permutable, is_sqn4
from .sets import SubgroupSet

FLAGS = ("abelian", "nilpotent", "solvable", "supersolvable", "pt", "sq4t")


def to_subtable(t: GroupTable, h: SubgroupSet) -> SubgroupSet:
    """``h`` (a subgroup of ``t``'s parent, inside it) as a subgroup of ``t``."""
    mask = bitset.to_mask(h.members, h.parent.order)[t.embedding]
    return SubgroupSet(t, bitset.from_mask(mask))


def from_subtable(g: GroupTable, t: GroupTable, s: SubgroupSet) -> SubgroupSet:
    return SubgroupSet(g, bitset.from_indices(t.embedding[s.indices]))


def is_solvable(g: GroupTable) -> bool:
    return derived_series(g)[-1].is_trivial()


def is_nilpotent(g: GroupTable, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Every Sylow subgroup is normal."""
    lat = all_subgroups(g, limits)
    for p in prime_factors(g.order):
        for s in sylow_subgroups(g, p, limits):
            if not lat.normal_flags[lat.find(s)]:
                return False
    return True


_SUPERSOLVABLE: dict[tuple[int, str], bool] = {}


def _table_key(g: GroupTable) -> tuple[int, str]:
    return g.order, hashlib.sha1(g.mul.tobytes()).hexdigest()


def is_supersolvable(g: GroupTable, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Trivial, or some prime-order normal N has a supersolvable quotient."""
    if g.order == 1:
        return True
    key = _table_key(g)
    r = _SUPERSOLVABLE.get(key)
    if r is None:
        lat = all_subgroups(g, limits)
        r = any(is_supersolvable(quotient(g, n).quotient, limits)
                for n, normal in zip(lat.subgroups, lat.normal_flags)
                if normal and is_prime(n.size))
        _SUPERSOLVABLE[key] = r
    return r


def is_modular_lattice(g: GroupTable, lattice: Lattice) -> bool:
    """Modular law: for X <= Z, ``<X, Y n Z> == <X, Y> n Z`` for every Y."""
    subs = lattice.subgroups
    n = len(subs)
    for z in range(n):
        zb = subs[z].members
        for x in range(n):
            if not bitset.is_subset(subs[x].members, zb):
                continue
            for y in range(n):
                lhs = lattice.join(x, lattice.meet(y, z))
                rhs = lattice.meet(lattice.join(x, y), z)
                if lhs != rhs:
                    return False
    return True


@dataclass(frozen=True)
class ChainVerdict:
    """Outcome of a transitivity check; ``chain`` is ``(inner, middle)`` on failure."""

    holds: bool
    chain: tuple[SubgroupSet, SubgroupSet] | None = None

    def __bool__(self) -> bool:
        return self.holds


def is_pt_group(g: GroupTable, lattice: Lattice, limits: Limits = DEFAULT_LIMITS) -> ChainVerdict:
    if all(lattice.normal_flags):
        return ChainVerdict(True)  # every subgroup is normal, hence permutable
    for h in lattice:
        if h.is_whole() or not is_permutable(g, h, lattice):
            continue
        if all(is_permutable(g, k, lattice) for k in lattice.contained_in(h)):
            continue
        t = subgroup_table(g, h)
        tl = all_subgroups(t, limits)
        for k in tl:
            k_in_g = from_subtable(g, t, k)
            if not is_permutable(g, k_in_g, lattice) and is_permutable(t, k, tl):
                return ChainVerdict(False, (k_in_g, h))
    return ChainVerdict(True)


def sqn4_in_own_table(g: GroupTable, h: SubgroupSet, k: SubgroupSet, limits: Limits = DEFAULT_LIMITS) -> bool:
    t = subgroup_table(g, k)
    return is_sqn4(t, to_subtable(t, h), all_subgroups(t, limits))


def is_sq4t_group(g: GroupTable, lattice: Lattice, limits: Limits = DEFAULT_LIMITS) -> ChainVerdict:
    """sqn4 transitivity: ``H sqn4 K sqn4 G`` must give ``H sqn4 G``.

    Middle terms are visited largest first; the whole group is skipped as a
    middle term because there the hypothesis and conclusion coincide.
    """
    if all(lattice.normal_flags):
        return ChainVerdict(True)  # normal implies permutable implies sqn4
    for k in sorted(lattice, key=lambda s: -s.size):
        if k.is_whole() or not is_sqn4(g, k, lattice):
            continue
        if all(is_sqn4(g, h, lattice) for h in lattice.contained_in(k)):
            continue
        t = subgroup_table(g, k)
        tl = all_subgroups(t, limits)
        for h_t in tl:
            h = from_subtable(g, t, h_t)
            if not is_sqn4(g, h, lattice) and is_sqn4(t, h_t, tl):
                return ChainVerdict(False, (h, k))
    return ChainVerdict(True)


@dataclass
class ZacherWitness:
    L: SubgroupSet
    checks: dict[str, bool]


def _is_abelian_subgroup(g: GroupTable, h: SubgroupSet) -> bool:
    gens = np.asarray(h.generators, dtype=np.intp)
    return bool(np.array_equal(g.mul[np.ix_(gens, gens)], g.mul[np.ix_(gens, gens)].T))


def induces_power_automorphisms(g: GroupTable, l: SubgroupSet) -> bool:
    """Every ``x^y`` for x in L, y in G lies in ``<x>``."""
    from .lattice import cyclic_subgroup

    for x in l:
        cx = cyclic_subgroup(g, x).members
        for y in range(g.order):
            conj = int(g.mul[g.mul[g.inv[y], x], y])
            if not cx >> conj & 1:
                return False
    return True


def zacher_witness(g: GroupTable, lattice: Lattice, limits: Limits = DEFAULT_LIMITS) -> ZacherWitness | None:
    """Search for a normal abelian odd-order Hall L with the soluble-PT structure.

    Candidates are tried largest first.
    """
    for i in sorted(range(len(lattice)), key=lambda i: -lattice[i].size):
        l = lattice[i]
        if not lattice.normal_flags[i] or l.size % 2 == 0:
            continue
        if gcd(l.size, g.order // l.size) != 1 or not _is_abelian_subgroup(g, l):
            continue
        q = quotient(g, l).quotient
        checks = {"quotient_nilpotent": is_nilpotent(q, limits)}
        if not checks["quotient_nilpotent"]:
            continue
        checks["quotient_modular"] = is_modular_lattice(q, all_subgroups(q, limits))
        if not checks["quotient_modular"]:
            continue
        checks["power_automorphisms"] = induces_power_automorphisms(g, l)
        if checks["power_automorphisms"]:
            return ZacherWitness(l, checks)
    return None


@dataclass
class ClassificationReport:
    group_name: str
    order: int
    num_subgroups: int
    flags: dict[str, bool]
    witnesses: list[dict] = field(default_factory=list)
    elapsed_ms: dict[str, float] = field(default_factory=dict)

    def check_implications(self) -> None:
        f = self.flags
        for a, b in (("abelian", "nilpotent"), ("nilpotent", "supersolvable"),
                     ("supersolvable", "solvable"), ("nilpotent", "solvable")):
            if f[a] and not f[b]:
                raise ImplicationViolated(f"{self.group_name}: {a} but not {b}")

    def to_dict(self, timings: bool = False) -> dict:
        d = {"group": self.group_name, "order": self.order,
             "num_subgroups": self.num_subgroups, "flags": dict(self.flags),
             "witnesses": self.witnesses}
        if timings:
            d["elapsed_ms"] = {k: round(v, 3) for k, v in self.elapsed_ms.items()}
        return d


def classify(g: GroupTable, name: str | None = None, limits: Limits = DEFAULT_LIMITS) -> ClassificationReport:
    name = name or g.name or f"order{g.order}"
    elapsed: dict[str, float] = {}

    def timed(flag, fn):
        t0 = time.perf_counter()
        r = fn()
        elapsed[flag] = (time.perf_counter() - t0) * 1000
        return r

    lat = timed("lattice", lambda: all_subgroups(g, limits))
    flags = {
        "abelian": timed("abelian", g.is_abelian),
        "nilpotent": timed("nilpotent", lambda: is_nilpotent(g, limits)),
        "solvable": timed("solvable", lambda: is_solvable(g)),
        "supersolvable": timed("supersolvable", lambda: is_supersolvable(g, limits)),
    }
    pt = timed("pt", lambda: is_pt_group(g, lat, limits))
    sq = timed("sq4t", lambda: is_sq4t_group(g, lat, limits))
    flags["pt"] = pt.holds
    flags["sq4t"] = sq.holds
    witnesses = []
    if pt.chain:
        k, h = pt.chain
        witnesses.append({"claim": "pt", "verdict": False,
                          "chain": [k.one_based(), h.one_based()],
                          "note": "K permutable in H, H permutable in G, K not permutable in G"})
    if sq.chain:
        h, k = sq.chain
        witnesses.append({"claim": "sq4t", "verdict": False,
                          "chain": [h.one_based(), k.one_based()],
                          "note": "H sqn4 K, K sqn4 G, H not sqn4 G"})
    report = ClassificationReport(name, g.order, len(lat), flags, witnesses, elapsed)
    report.check_implications()
    return report
