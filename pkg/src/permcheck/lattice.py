"""Subgroup lattice enumeration and structural queries on a GroupTable."""

from __future__ import annotations

import json

import numpy as np

from . import bitset
from .config import DEFAULT_LIMITS, Limits
from .errors import CapExceeded
from .perm import GroupTable, close_bits
from .sets import ElementSet, SubgroupSet


def prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n > 1 and prime_factors(n) == [n]


def generated_subgroup(g: GroupTable, seed: ElementSet | int) -> SubgroupSet:
    bits = seed if isinstance(seed, int) else seed.members
    gens = tuple(int(i) for i in bitset.to_indices(bits) if i != 0)
    return SubgroupSet(g, close_bits(g, gens), gens=gens)


def cyclic_subgroup(g: GroupTable, x: int) -> SubgroupSet:
    bits, y = 1, x
    while y != 0:
        bits |= 1 << y
        y = int(g.mul[y, x])
    return SubgroupSet(g, bits, gens=(x,) if x else ())


class Lattice:
    """All subgroups of ``parent`` in canonical order (size, then sorted members).

    ``join`` and ``meet`` work on positions in ``subgroups`` and are memoized.
    """

    def __init__(self, parent: GroupTable, subgroups: list[SubgroupSet], cyclic_bits: set[int]):
        self.parent = parent
        self.subgroups = subgroups
        self.position = {s.members: i for i, s in enumerate(subgroups)}
        self.normal_flags = [is_normal(parent, s) for s in subgroups]
        self.cyclic_flags = [s.members in cyclic_bits for s in subgroups]
        self._joins: dict[tuple[int, int], int] = {}

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def __getitem__(self, i: int) -> SubgroupSet:
        return self.subgroups[i]

    def find(self, s: ElementSet | int) -> int:
        bits = s if isinstance(s, int) else s.members
        return self.position[bits]

    def join(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        key = (i, j)
        r = self._joins.get(key)
        if r is None:
            a, b = self.subgroups[i], self.subgroups[j]
            if bitset.is_subset(a.members, b.members):
                r = j
            elif bitset.is_subset(b.members, a.members):
                r = i
            else:
                bits = close_bits(self.parent, a.generators + b.generators, start=a.members)
                r = self.position[bits]
            self._joins[key] = r
        return r

    def meet(self, i: int, j: int) -> int:
        return self.position[self.subgroups[i].members & self.subgroups[j].members]

    def normal_subgroups(self) -> list[SubgroupSet]:
        return [s for s, f in zip(self.subgroups, self.normal_flags) if f]

    def cyclic_subgroups(self) -> list[SubgroupSet]:
        return [s for s, f in zip(self.subgroups, self.cyclic_flags) if f]

    def contained_in(self, k: SubgroupSet) -> list[SubgroupSet]:
        return [s for s in self.subgroups if bitset.is_subset(s.members, k.members)]

    def maximal_inclusions(self) -> list[tuple[int, int]]:
        """Hasse-diagram edges ``(i, j)``: subgroup i is maximal in subgroup j."""
        subs = self.subgroups
        edges = []
        for j, big in enumerate(subs):
            below = [i for i in range(j) if subs[i].size < big.size
                     and bitset.is_subset(subs[i].members, big.members)]
            for i in below:
                if not any(subs[i].size < subs[k].size and bitset.is_subset(subs[i].members, subs[k].members)
                           for k in below if k != i):
                    edges.append((i, j))
        return edges

    def to_json_obj(self) -> list[dict]:
        return [{"order": s.size, "members": s.one_based(), "normal": bool(f)}
                for s, f in zip(self.subgroups, self.normal_flags)]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    def to_dot(self, name: str = "lattice") -> str:
        lines = [f'digraph "{name}" {{', "  rankdir=BT;", "  node [shape=box];"]
        for i, (s, f) in enumerate(zip(self.subgroups, self.normal_flags)):
            style = ", style=bold" if f else ""
            lines.append(f'  s{i} [label="#{i} |{s.size}|"{style}];')
        for i, j in self.maximal_inclusions():
            lines.append(f"  s{i} -> s{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def all_subgroups(g: GroupTable, limits: Limits = DEFAULT_LIMITS) -> Lattice:
    """Every subgroup, found as a fixpoint of joins with cyclic subgroups.

    Each subgroup is the join of the cyclic subgroups it contains, so seeding
    with the cyclic ones and joining until nothing new appears is complete.
    """
    if g.order > limits.lattice_cap:
        raise CapExceeded("group order for lattice enumeration", limits.lattice_cap)
    cached = g._memo.get("lattice")
    if cached is not None:
        return cached
    cyclic: dict[int, SubgroupSet] = {}
    for x in range(g.order):
        c = cyclic_subgroup(g, x)
        cyclic.setdefault(c.members, c)
    cyc_list = list(cyclic.values())
    found: dict[int, SubgroupSet] = dict(cyclic)
    work = list(cyc_list)
    while work:
        s = work.pop()
        for c in cyc_list:
            if bitset.is_subset(c.members, s.members):
                continue
            gens = s.generators + c.generators
            bits = close_bits(g, gens, start=s.members)
            if bits not in found:
                t = SubgroupSet(g, bits, gens=gens)
                found[bits] = t
                work.append(t)
    subs = sorted(found.values(), key=lambda s: (s.size, tuple(s.indices.tolist())))
    lat = Lattice(g, subs, set(cyclic))
    g._memo["lattice"] = lat
    return lat


def is_normal(g: GroupTable, h: SubgroupSet) -> bool:
    return all(g.conjugate_bits(h.members, x) == h.members for x in g.generator_indices)


def _commutators(g: GroupTable, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    mul, inv = g.mul, g.inv
    left = mul[inv[a][:, None], inv[b][None, :]]
    right = mul[a[:, None], b[None, :]]
    return np.unique(mul[left, right])


def commutator_subgroup(g: GroupTable, h: SubgroupSet, k: SubgroupSet) -> SubgroupSet:
    """``[H, K]``, generated by all ``h^-1 k^-1 h k``."""
    comms = _commutators(g, h.indices, k.indices)
    return generated_subgroup(g, bitset.from_indices(comms))


def derived_series(g: GroupTable) -> list[SubgroupSet]:
    """``G >= G' >= G'' ...`` ending at the trivial group or at the first repeat."""
    series = [g.whole]
    cur = series[0]
    while not cur.is_trivial():
        nxt = commutator_subgroup(g, cur, cur)
        series.append(nxt)
        if nxt.members == cur.members:
            break
        cur = nxt
    return series


def lower_central_series(g: GroupTable) -> list[SubgroupSet]:
    series = [g.whole]
    cur = series[0]
    while not cur.is_trivial():
        nxt = commutator_subgroup(g, cur, g.whole)
        series.append(nxt)
        if nxt.members == cur.members:
            break
        cur = nxt
    return series


def sylow_subgroups(g: GroupTable, p: int, limits: Limits = DEFAULT_LIMITS) -> list[SubgroupSet]:
    if not is_prime(p) or g.order % p:
        raise ValueError(f"{p} is not a prime dividing {g.order}")
    q = 1
    while g.order % (q * p) == 0:
        q *= p
    return [s for s in all_subgroups(g, limits) if s.size == q]


def hall_subgroups(g: GroupTable, primes, limits: Limits = DEFAULT_LIMITS) -> list[SubgroupSet]:
    """Subgroups whose order uses only ``primes`` and whose index avoids them."""
    primes = set(primes)
    if not primes:
        raise ValueError("need at least one prime")
    out = []
    for s in all_subgroups(g, limits):
        index = g.order // s.size
        if set(prime_factors(s.size)) <= primes and all(index % p for p in primes):
            out.append(s)
    return out


def centralizer(g: GroupTable, h: SubgroupSet) -> SubgroupSet:
    gens = np.asarray(h.generators, dtype=np.intp)
    if gens.size == 0:
        return g.whole
    ok = np.all(g.mul[:, gens] == g.mul[gens, :].T, axis=1)
    return SubgroupSet(g, bitset.from_mask(ok))


def normalizer(g: GroupTable, h: SubgroupSet) -> SubgroupSet:
    hidx = h.indices
    allx = np.arange(g.order)
    conj = g.mul[g.mul[g.inv[allx][:, None], hidx[None, :]], allx[:, None]]
    mask = bitset.to_mask(h.members, g.order)
    return SubgroupSet(g, bitset.from_mask(mask[conj].all(axis=1)))


def normal_closure(g: GroupTable, h: SubgroupSet, ambient: SubgroupSet | None = None) -> SubgroupSet:
    """Smallest subgroup of ``ambient`` containing ``h`` and normal in ``ambient``."""
    amb = (ambient or g.whole).indices
    hidx = h.indices
    conj = g.mul[g.mul[g.inv[amb][:, None], hidx[None, :]], amb[:, None]]
    return generated_subgroup(g, bitset.from_indices(np.unique(conj)))


def is_subnormal(g: GroupTable, h: SubgroupSet) -> bool:
    """Normal-closure descent: replace the ambient by ``h``'s normal closure in it."""
    ambient = g.whole
    while True:
        nc = normal_closure(g, h, ambient)
        if nc.members == ambient.members:
            return ambient.members == h.members
        ambient = nc

