"""Permutations, Cayley-table groups built by closure, and quotient groups.

Points are 0-based internally.  Cycle strings and group files are 1-based, as
in the usual textbook notation ``(1 2)(3 4)``.

Multiplication convention: ``compose(a, b)`` maps ``i`` to ``a(b(i))`` and the
group product ``x * y`` of table elements is ``compose(x, y)``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from . import bitset
from .config import DEFAULT_LIMITS, Limits
from .errors import CapExceeded, DegreeMismatch, InputError, NotASubgroup, NotNormal
from .sets import ElementSet, SubgroupSet


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n < 1:
            raise ValueError("degree must be at least 1")
        if sorted(self.images) != list(range(n)):
            raise ValueError(f"not a bijection on 0..{n - 1}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], degree: int) -> "Permutation":
        """Build from disjoint 0-based cycles."""
        images = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for p in cyc:
                if not 0 <= p < degree:
                    raise ValueError(f"point {p} outside 0..{degree - 1}")
                if p in seen:
                    raise ValueError(f"point {p} repeated; cycles must be disjoint")
                seen.add(p)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                images[a] = b
        return cls(tuple(images))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point (0-based)."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_notation(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_notation()}, degree={self.degree})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    if a.degree != b.degree:
        raise DegreeMismatch(f"degrees differ: {a.degree} != {b.degree}")
    ai = a.images
    return Permutation(tuple(ai[j] for j in b.images))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based disjoint cycle notation such as ``(1 2)(3 4)`` or ``(1,2,3)``."""
    s = text.strip()
    if s in ("", "()", "1", "e", "id"):
        return Permutation.identity(degree)
    if _CYCLE_RE.sub("", s).strip():
        raise InputError(f"cannot parse cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(s):
        tokens = [t for t in re.split(r"[\s,]+", body.strip()) if t]
        if not tokens:
            continue
        try:
            pts = [int(t) - 1 for t in tokens]
        except ValueError:
            raise InputError(f"non-numeric point in {text!r}") from None
        if len(set(pts)) != len(pts):
            raise InputError(f"repeated point inside a cycle: {text!r}")
        if min(pts) < 0 or max(pts) >= degree:
            raise InputError(f"{text!r}: points must lie in 1..{degree}")
        cycles.append(pts)
    try:
        return Permutation.from_cycles(cycles, degree)
    except ValueError as exc:
        raise InputError(f"{text!r}: {exc}") from None


class GroupTable:
    """A finite group given by a full multiplication table over indexed elements.

    ``elements[0]`` is the identity.  ``mul[i, j]`` is the index of
    ``elements[i] * elements[j]`` and ``inv[i]`` that of the inverse.
    Treat instances as immutable; a private memo dict caches derived data
    (lattice, subgroup tables, quotients).
    """

    def __init__(self, elements: Sequence[Permutation], mul: np.ndarray,
                 generator_indices: Sequence[int], name: str | None = None):
        self.elements = tuple(elements)
        self.order = len(self.elements)
        self.degree = self.elements[0].degree
        self.mul = np.ascontiguousarray(mul, dtype=np.intp)
        self.mul.setflags(write=False)
        inv = np.argmax(self.mul == 0, axis=1)
        self.inv = inv.astype(np.intp)
        self.inv.setflags(write=False)
        self.generator_indices = tuple(int(i) for i in generator_indices)
        self.name = name
        self._index = {p.images: i for i, p in enumerate(self.elements)}
        self._memo: dict = {}

    def __repr__(self) -> str:
        label = self.name or "GroupTable"
        return f"<{label} order={self.order} degree={self.degree}>"

    def __getstate__(self):
        state = self.__dict__.copy()
        state["_memo"] = {}
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)
        self.mul.setflags(write=False)
        self.inv.setflags(write=False)

    # -- convenience ------------------------------------------------------

    @property
    def identity_set(self) -> SubgroupSet:
        return SubgroupSet(self, 1, gens=())

    @property
    def whole(self) -> SubgroupSet:
        return SubgroupSet(self, (1 << self.order) - 1, gens=self.generator_indices)

    def element_set(self, indices) -> ElementSet:
        return ElementSet(self, bitset.from_indices(indices))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != 0:
            x = int(self.mul[x, i])
            k += 1
        return k

    def power(self, i: int, e: int) -> int:
        e %= self.element_order(i)
        x = 0
        for _ in range(e):
            x = int(self.mul[x, i])
        return x

    def conjugate_bits(self, bits: int, x: int) -> int:
        """Bits of ``x^-1 S x``."""
        idx = bitset.to_indices(bits)
        return bitset.from_indices(self.mul[self.mul[self.inv[x], idx], x])

    def check_invariants(self, sample_threshold: int = 64, seed: int = 0) -> None:
        """Raise AssertionError if the table is not a group table."""
        n = self.order
        mul = self.mul
        assert self.elements[0].is_identity(), "identity must be element 0"
        assert mul.shape == (n, n)
        assert mul.min() >= 0 and mul.max() < n, "mul entry out of range"
        full = np.arange(n)
        assert all(np.array_equal(np.sort(mul[i]), full) for i in range(n)), "row not a permutation"
        assert all(np.array_equal(np.sort(mul[:, j]), full) for j in range(n)), "column not a permutation"
        assert np.all(mul[full, self.inv] == 0) and np.all(mul[self.inv, full] == 0)
        assert np.array_equal(self.inv[self.inv], full)
        if n <= sample_threshold:
            lhs = mul[mul[:, :, None], full[None, None, :]]
            rhs = mul[full[:, None, None], mul[None, :, :]]
            assert np.array_equal(lhs, rhs), "not associative"
        else:
            rng = np.random.default_rng(seed)
            i, j, k = rng.integers(0, n, size=(3, 10 * n))
            assert np.array_equal(mul[mul[i, j], k], mul[i, mul[j, k]]), "not associative"


def closure(generators: Sequence[Permutation], limits: Limits = DEFAULT_LIMITS,
            name: str | None = None) -> GroupTable:
    """Breadth-first closure from the identity under right multiplication.

    Elements are numbered in discovery order, expanding each element by the
    generators in input order, so the table depends only on the generator list.
    """
    if not generators:
        raise InputError("closure needs at least one generator")
    degree = generators[0].degree
    for p in generators:
        if p.degree != degree:
            raise DegreeMismatch(f"generator degrees differ: {p.degree} != {degree}")
    if degree > limits.max_degree:
        raise CapExceeded(f"degree {degree}", limits.max_degree)

    gen_images = [p.images for p in generators]
    ident = tuple(range(degree))
    index = {ident: 0}
    elems = [ident]
    parent = [-1]
    via = [-1]
    right: list[list[int]] = [[] for _ in gen_images]
    queue = deque([0])
    while queue:
        x = queue.popleft()
        xi = elems[x]
        for k, gi in enumerate(gen_images):
            y = tuple(xi[j] for j in gi)
            yi = index.get(y)
            if yi is None:
                yi = len(elems)
                if yi >= limits.max_order:
                    raise CapExceeded("group order", limits.max_order)
                index[y] = yi
                elems.append(y)
                parent.append(x)
                via.append(k)
                queue.append(yi)
            right[k].append(yi)
    # right[k][x] is filled in BFS order, which is index order
    n = len(elems)
    R = np.array(right, dtype=np.intp).reshape(len(gen_images), n)
    mul = np.empty((n, n), dtype=np.intp)
    mul[:, 0] = np.arange(n)
    for j in range(1, n):
        mul[:, j] = R[via[j]][mul[:, parent[j]]]
    gens = [index[g] for g in gen_images]
    return GroupTable([Permutation(e) for e in elems], mul, gens, name=name)


def element_index(g: GroupTable, p: Permutation) -> int | None:
    if p.degree != g.degree:
        raise DegreeMismatch(f"permutation degree {p.degree} != group degree {g.degree}")
    return g._index.get(p.images)


def close_bits(g: GroupTable, gens: Sequence[int], start: int = 1) -> int:
    """Bits of the subgroup generated by ``gens``.

    ``start`` must contain the identity and lie inside the result; passing an
    already-closed subgroup whose generators are among ``gens`` saves work.
    """
    gens_arr = np.asarray(list(gens), dtype=np.intp)
    if gens_arr.size == 0:
        return start
    mask = bitset.to_mask(start, g.order)
    frontier = np.flatnonzero(mask)
    mul = g.mul
    while frontier.size:
        nxt = mul[frontier[:, None], gens_arr[None, :]].ravel()
        nxt = nxt[~mask[nxt]]
        if nxt.size == 0:
            break
        nxt = np.unique(nxt)
        mask[nxt] = True
        frontier = nxt
    return bitset.from_mask(mask)


def is_closed(g: GroupTable, bits: int) -> bool:
    if not bits & 1:
        return False
    idx = bitset.to_indices(bits)
    prods = g.mul[np.ix_(idx, idx)]
    mask = bitset.to_mask(bits, g.order)
    return bool(mask[prods].all())


def as_subgroup(g: GroupTable, s: ElementSet | int) -> SubgroupSet:
    bits = s if isinstance(s, int) else s.members
    if not is_closed(g, bits):
        raise NotASubgroup("element set is not closed under multiplication")
    return SubgroupSet(g, bits)


def subgroup_table(g: GroupTable, h: SubgroupSet) -> GroupTable:
    """The subgroup ``h`` as a group in its own right.

    Elements keep their relative parent order; ``result.embedding[i]`` is the
    parent index of sub-element ``i``.  Memoized per subgroup.
    """
    key = ("subtable", h.members)
    cached = g._memo.get(key)
    if cached is not None:
        return cached
    idx = h.indices
    pos = np.full(g.order, -1, dtype=np.intp)
    pos[idx] = np.arange(idx.size)
    sub_mul = pos[g.mul[np.ix_(idx, idx)]]
    if (sub_mul < 0).any():
        raise NotASubgroup("element set is not closed under multiplication")
    parent_gens = h.generators
    t = GroupTable([g.elements[i] for i in idx], sub_mul, [int(pos[i]) for i in parent_gens] or [0])
    t.embedding = idx
    g._memo[key] = t
    return t


@dataclass(frozen=True, eq=False)
class QuotientMap:
    parent: GroupTable
    kernel: SubgroupSet
    coset_of: np.ndarray
    quotient: GroupTable

    def image(self, s: ElementSet) -> ElementSet:
        bits = bitset.from_indices(np.unique(self.coset_of[s.indices]))
        if isinstance(s, SubgroupSet):
            return SubgroupSet(self.quotient, bits)
        return ElementSet(self.quotient, bits)

    def preimage(self, s: ElementSet) -> ElementSet:
        mask = bitset.to_mask(s.members, self.quotient.order)[self.coset_of]
        bits = bitset.from_mask(mask)
        if isinstance(s, SubgroupSet):
            return SubgroupSet(self.parent, bits)
        return ElementSet(self.parent, bits)


def quotient(g: GroupTable, n: SubgroupSet) -> QuotientMap:
    """Quotient by a normal subgroup, realized by left translation on cosets.

    Cosets are labelled in order of their smallest parent index, so the
    identity coset is 0.  Quotient element ``c`` is the permutation of coset
    labels ``c' -> c c'``; its multiplication table row is exactly that map.
    """
    if n.parent is not g:
        raise NotASubgroup("kernel belongs to a different group")
    if not is_closed(g, n.members):
        raise NotASubgroup("kernel is not a subgroup")
    for x in g.generator_indices:
        if g.conjugate_bits(n.members, x) != n.members:
            raise NotNormal("kernel is not normal")
    key = ("quotient", n.members)
    cached = g._memo.get(key)
    if cached is not None:
        return cached
    nidx = n.indices
    coset_of = np.full(g.order, -1, dtype=np.intp)
    reps = []
    for i in range(g.order):
        if coset_of[i] < 0:
            coset_of[g.mul[i, nidx]] = len(reps)
            reps.append(i)
    reps_arr = np.asarray(reps, dtype=np.intp)
    qmul = coset_of[g.mul[np.ix_(reps_arr, reps_arr)]]
    elements = [Permutation(tuple(int(v) for v in row)) for row in qmul]
    qgens = []
    for x in g.generator_indices:
        c = int(coset_of[x])
        if c and c not in qgens:
            qgens.append(c)
    name = f"{g.name}/N{n.order}" if g.name else None
    q = GroupTable(elements, qmul, qgens or [0], name=name)
    coset_of.setflags(write=False)
    qm = QuotientMap(g, n, coset_of, q)
    g._memo[key] = qm
    return qm


def read_group_file(path: str | Path, limits: Limits = DEFAULT_LIMITS) -> GroupTable:
    """Parse a generator file: ``degree <d>`` then ``gen <cycles>`` lines, 1-based."""
    degree = None
    gens: list[Permutation] = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if degree is None:
            if key != "degree":
                raise InputError(f"{path}:{lineno}: first directive must be 'degree <d>'")
            try:
                degree = int(rest)
            except ValueError:
                raise InputError(f"{path}:{lineno}: bad degree {rest!r}") from None
            if degree < 1:
                raise InputError(f"{path}:{lineno}: degree must be positive")
            if degree > limits.max_degree:
                raise CapExceeded(f"degree {degree}", limits.max_degree)
        elif key == "gen":
            gens.append(parse_cycles(rest, degree))
        else:
            raise InputError(f"{path}:{lineno}: unknown directive {key!r}")
    if degree is None:
        raise InputError(f"{path}: missing 'degree' line")
    if not gens:
        gens = [Permutation.identity(degree)]
    return closure(gens, limits, name=f"file:{path}")
