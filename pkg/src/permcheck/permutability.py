"""Pairwise and global permutability predicates decided by explicit product sets.

``sqn4`` (strongly 4-quasinormal) is the single name used here for what the
literature also writes as ``sq4`` or "strong 4-quasinormal".
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import bitset
from .errors import NotASubgroup
from .lattice import Lattice, prime_factors, sylow_subgroups
from .perm import GroupTable, close_bits
from .sets import ElementSet, SubgroupSet


def _product_mask(g: GroupTable, a_idx: np.ndarray, b_idx: np.ndarray) -> np.ndarray:
    mask = np.zeros(g.order, dtype=bool)
    mask[g.mul[a_idx[:, None], b_idx[None, :]].ravel()] = True
    return mask


def product_set(a: ElementSet, b: ElementSet) -> ElementSet:
    """``{x y : x in a, y in b}``."""
    if a.parent is not b.parent:
        raise ValueError("element sets belong to different groups")
    g = a.parent
    return ElementSet(g, bitset.from_mask(_product_mask(g, a.indices, b.indices)))


@dataclass(frozen=True)
class Perm4Verdict:
    holds: bool
    join: SubgroupSet
    product: ElementSet
    witness_note: str = ""

    def __bool__(self) -> bool:
        return self.holds


def _cache(g: GroupTable, name: str) -> dict:
    return g._memo.setdefault(name, {})


def hkhk(g: GroupTable, h: SubgroupSet, k: SubgroupSet) -> ElementSet:
    """``((H K) H) K`` as an element set."""
    hk = product_set(h, k)
    return product_set(product_set(hk, h), k)


def perm4(g: GroupTable, h: SubgroupSet, k: SubgroupSet) -> Perm4Verdict:
    """Is ``H`` 4-permutable with ``K``, i.e. ``<H, K> == HKHK``?

    Verdicts are memoized per ``(h, k)`` on the table; ``perm4(h, k)`` and
    ``perm4(k, h)`` are separate entries.
    """
    cache = _cache(g, "perm4")
    key = (h.members, k.members)
    v = cache.get(key)
    if v is None:
        cache[key] = v = _perm4(g, h, k)
    return v


def _perm4(g: GroupTable, h: SubgroupSet, k: SubgroupSet) -> Perm4Verdict:
    # nested pair: HKHK is the larger subgroup
    if bitset.is_subset(h.members, k.members) or bitset.is_subset(k.members, h.members):
        big = k if h.size <= k.size else h
        return Perm4Verdict(True, big, ElementSet(g, big.members))
    hk = _product_mask(g, h.indices, k.indices)
    if np.array_equal(hk, _product_mask(g, k.indices, h.indices)):
        # HK = KH is a subgroup, so HKHK = HK = <H, K>
        bits = bitset.from_mask(hk)
        return Perm4Verdict(True, SubgroupSet(g, bits), ElementSet(g, bits))
    prod = hkhk(g, h, k)
    gens = h.generators + k.generators
    # HKHK holds the identity and lies in <H, K>, so closure may start there
    join = SubgroupSet(g, close_bits(g, gens, start=prod.members), gens=gens)
    holds = prod.members == join.members
    note = "" if holds else f"|HKHK|={prod.size} < |<H,K>|={join.size}"
    return Perm4Verdict(holds, join, prod, note)


def permutes(g: GroupTable, h: SubgroupSet, k: SubgroupSet) -> bool:
    cache = _cache(g, "permutes")
    key = (h.members, k.members) if h.members <= k.members else (k.members, h.members)
    r = cache.get(key)
    if r is None:
        if bitset.is_subset(h.members, k.members) or bitset.is_subset(k.members, h.members):
            r = True
        else:
            hk = _product_mask(g, h.indices, k.indices)
            kh = _product_mask(g, k.indices, h.indices)
            r = bool(np.array_equal(hk, kh))
        cache[key] = r
    return r


def is_permutable(g: GroupTable, h: SubgroupSet, lattice: Lattice) -> bool:
    return all(permutes(g, h, k) for k in lattice)


def is_s_permutable(g: GroupTable, h: SubgroupSet) -> bool:
    return all(permutes(g, h, p)
               for q in prime_factors(g.order)
               for p in sylow_subgroups(g, q))


def sqn4_witness(g: GroupTable, h: SubgroupSet, lattice: Lattice,
                 candidates=None) -> SubgroupSet | None:
    """First subgroup (canonical order) that ``h`` fails to 4-permute with."""
    for k in (lattice if candidates is None else candidates):
        if not perm4(g, h, k).holds:
            return k
    return None


def is_sqn4(g: GroupTable, h: SubgroupSet, lattice: Lattice) -> bool:
    cache = _cache(g, "sqn4")
    r = cache.get(h.members)
    if r is None:
        r = cache[h.members] = sqn4_witness(g, h, lattice) is None
    return r


def is_qn4(g: GroupTable, h: SubgroupSet, lattice: Lattice) -> bool:
    return sqn4_witness(g, h, lattice, lattice.cyclic_subgroups()) is None


def sqn4_in_subgroup(g: GroupTable, h: SubgroupSet, k: SubgroupSet, lattice: Lattice) -> bool:
    """``h`` sqn4 in ``k``, quantifying over the members of ``lattice`` inside ``k``."""
    if not bitset.is_subset(h.members, k.members):
        raise NotASubgroup("h is not contained in k")
    return sqn4_witness(g, h, lattice, lattice.contained_in(k)) is None
