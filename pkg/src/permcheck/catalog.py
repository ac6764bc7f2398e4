"""Builtin group constructors, group-name grammar, and the survey corpus.

Names: ``S<n>``, ``A<n>``, ``D<2n>`` (dihedral of order 2n), ``C<n>``, ``Q8``,
direct products joined by ``x`` (``C2xC2``, ``D12xC2``), and ``file:<path>``.

Each builtin carries named generators usable in element words:

=============  ===========================================
cyclic         ``g``
dihedral       ``r`` (rotation), ``s`` (reflection fixing point 1)
symmetric      ``t`` = (1 2), ``c`` = (1 2 ... n)
alternating    ``a`` = (1 2 3), ``b`` = long cycle
Q8             ``i``, ``j``
=============  ===========================================

In a product with m factors, factor k's names get the suffix ``k``
(``r1``, ``s1``, ``g2`` for ``D12xC2``).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Sequence

from .config import DEFAULT_LIMITS, Limits
from .errors import InputError
from .perm import GroupTable, Permutation, closure, compose, read_group_file


@dataclass(frozen=True)
class GroupSpec:
    name: str
    kind: str  # cyclic | dihedral | symmetric | alternating | quaternion8 | direct_product | file
    n: int = 0
    factors: tuple["GroupSpec", ...] = ()
    path: str | None = None

    @property
    def order(self) -> int | None:
        """Order predicted by the constructor formula (None for files)."""
        k = self.kind
        if k == "cyclic":
            return self.n
        if k == "dihedral":
            return self.n
        if k == "symmetric":
            return math.factorial(self.n)
        if k == "alternating":
            return max(math.factorial(self.n) // 2, 1)
        if k == "quaternion8":
            return 8
        if k == "direct_product":
            return math.prod(f.order for f in self.factors)
        return None


def cyclic(n: int) -> GroupSpec:
    return GroupSpec(f"C{n}", "cyclic", n)


def dihedral(order: int) -> GroupSpec:
    return GroupSpec(f"D{order}", "dihedral", order)


def symmetric(n: int) -> GroupSpec:
    return GroupSpec(f"S{n}", "symmetric", n)


def alternating(n: int) -> GroupSpec:
    return GroupSpec(f"A{n}", "alternating", n)


def quaternion8() -> GroupSpec:
    return GroupSpec("Q8", "quaternion8", 8)


def direct_product(*factors: GroupSpec) -> GroupSpec:
    flat: list[GroupSpec] = []
    for f in factors:
        flat.extend(f.factors if f.kind == "direct_product" else (f,))
    if len(flat) == 1:
        return flat[0]
    return GroupSpec("x".join(f.name for f in flat), "direct_product", factors=tuple(flat))


def from_file(path: str) -> GroupSpec:
    return GroupSpec(f"file:{path}", "file", path=path)


_ATOM = re.compile(r"^(S|A|D|C)(\d+)$|^Q8$")


def parse_group_name(text: str) -> GroupSpec:
    text = text.strip()
    if text.startswith("file:"):
        return from_file(text[5:])
    parts = text.split("x")
    specs = []
    for part in parts:
        m = _ATOM.match(part)
        if not m:
            raise InputError(f"unknown group name {part!r} in {text!r}")
        if part == "Q8":
            specs.append(quaternion8())
            continue
        kind, n = m.group(1), int(m.group(2))
        if n < 1:
            raise InputError(f"invalid size in {part!r}")
        if kind == "D" and (n % 2 or n < 4):
            raise InputError(f"dihedral order must be even and >= 4: {part!r}")
        specs.append({"S": symmetric, "A": alternating, "D": dihedral, "C": cyclic}[kind](n))
    return direct_product(*specs)


# -- concrete generators (0-based) ----------------------------------------

def _cycle(points: Sequence[int], degree: int) -> Permutation:
    return Permutation.from_cycles([list(points)] if len(points) > 1 else [], degree)


def _quaternion_generators() -> dict[str, Permutation]:
    # index = basis + 4 * negative, basis 0..3 = 1, i, j, k
    table = {  # (basis, basis) -> (sign, basis)
        (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
        (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
        (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2),
    }

    def mult(x: int, y: int) -> int:
        sx, bx = (-1 if x >= 4 else 1), x % 4
        sy, by = (-1 if y >= 4 else 1), y % 4
        if bx == 0:
            s, b = 1, by
        elif by == 0:
            s, b = 1, bx
        else:
            s, b = table[(bx, by)]
        s *= sx * sy
        return b + (4 if s < 0 else 0)

    return {name: Permutation(tuple(mult(x, y) for y in range(8))) for name, x in (("i", 1), ("j", 2))}


def _atom_generators(spec: GroupSpec) -> tuple[int, dict[str, Permutation]]:
    """Degree and ordered named generators for a non-product builtin."""
    k, n = spec.kind, spec.n
    if k == "cyclic":
        return n, {"g": _cycle(range(n), n)}
    if k == "dihedral":
        m = n // 2
        if m == 2:
            # order 4: two points are too few, use the Klein four group on 4 points
            return 4, {"r": Permutation.from_cycles([[0, 1], [2, 3]], 4),
                       "s": Permutation.from_cycles([[0, 2], [1, 3]], 4)}
        return m, {"r": _cycle(range(m), m),
                   "s": Permutation(tuple((-i) % m for i in range(m)))}
    if k == "symmetric":
        d = max(n, 1)
        if n < 2:
            return d, {"t": Permutation.identity(d)}
        return d, {"t": _cycle([0, 1], d), "c": _cycle(range(n), d)}
    if k == "alternating":
        d = max(n, 1)
        if n < 3:
            return d, {"a": Permutation.identity(d)}
        long = range(n) if n % 2 else range(1, n)
        return d, {"a": _cycle([0, 1, 2], d), "b": _cycle(long, d)}
    if k == "quaternion8":
        return 8, _quaternion_generators()
    raise InputError(f"not an atomic builtin: {spec.name}")


def _shift(p: Permutation, offset: int, degree: int) -> Permutation:
    images = list(range(degree))
    for i, j in enumerate(p.images):
        images[i + offset] = j + offset
    return Permutation(tuple(images))


def named_generators(spec: GroupSpec) -> dict[str, Permutation]:
    if spec.kind == "direct_product":
        parts = [_atom_generators(f) for f in spec.factors]
        degree = sum(d for d, _ in parts)
        out: dict[str, Permutation] = {}
        offset = 0
        for pos, (d, gens) in enumerate(parts, 1):
            for name, p in gens.items():
                out[f"{name}{pos}"] = _shift(p, offset, degree)
            offset += d
        return out
    return _atom_generators(spec)[1]


def build(spec: GroupSpec, limits: Limits = DEFAULT_LIMITS) -> GroupTable:
    if spec.kind == "file":
        g = read_group_file(spec.path, limits)
        g.named_generators = {}
        return g
    if spec.kind in ("cyclic", "symmetric", "alternating") and spec.n < 1:
        raise InputError(f"invalid n for {spec.name}")
    named = named_generators(spec)
    g = closure(list(named.values()), limits, name=spec.name)
    if g.order != spec.order:
        raise AssertionError(f"{spec.name}: built order {g.order}, expected {spec.order}")
    if spec.kind == "dihedral" and spec.n >= 6:
        r, s = named["r"], named["s"]
        assert compose(compose(s.inverse(), r), s) == r.inverse(), "reflection must invert rotation"
    g.named_generators = named
    return g


def build_named(name: str, limits: Limits = DEFAULT_LIMITS) -> GroupTable:
    return build(parse_group_name(name), limits)


# -- survey corpus ------------------------------------------------------

def survey_corpus(max_order: int) -> list[GroupSpec]:
    """Deterministic list of small groups used for empirical sweeps.

    Cyclic and dihedral groups up to ``max_order``, S3, S4, A4, A5, Q8,
    elementary abelian 2-groups up to order 16, then direct products of two
    nontrivial members within the bound.  Names are unique; isomorphic copies
    under different names are kept.
    """
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    base: list[GroupSpec] = [cyclic(n) for n in range(1, max_order + 1)]
    base += [dihedral(n) for n in range(4, max_order + 1, 2)]
    base += [s for s in (symmetric(3), symmetric(4), alternating(4), alternating(5), quaternion8())
             if s.order <= max_order]
    c2 = cyclic(2)
    for k in (2, 3, 4):
        if 2 ** k <= max_order:
            base.append(direct_product(*[c2] * k))
    out: dict[str, GroupSpec] = {}
    for s in base:
        out.setdefault(s.name, s)
    nontrivial = [s for s in base if s.order > 1]
    for i, a in enumerate(nontrivial):
        for b in nontrivial[i:]:
            if a.order * b.order <= max_order:
                p = direct_product(a, b)
                out.setdefault(p.name, p)
    return list(out.values())


# -- element words --------------------------------------------------------

_WORD_TOKEN = re.compile(r"^([A-Za-z]\w*?)(?:\^(-?\d+))?$")


def parse_element(g: GroupTable, text: str) -> int:
    """Element index for a point-cycle string or a word in named generators.

    ``"(1 2)(3 4)"`` is read as 1-based cycles; ``"(s r)"``, ``"s r"`` or
    ``"r^2 s"`` multiply named generators left to right.
    """
    from .perm import element_index, parse_cycles

    body = text.replace("(", " ").replace(")", " ").replace(",", " ").replace("*", " ").split()
    if not body or all(t.isdigit() for t in body):
        p = parse_cycles(text, g.degree)
        idx = element_index(g, p)
        if idx is None:
            raise InputError(f"{text!r} is not an element of {g.name}")
        return idx
    named = getattr(g, "named_generators", {}) or {}
    x = 0
    for tok in body:
        m = _WORD_TOKEN.match(tok)
        if not m or m.group(1) not in named:
            known = ", ".join(sorted(named)) or "none"
            raise InputError(f"unknown generator {tok!r} (named generators: {known})")
        idx = element_index(g, named[m.group(1)])
        e = int(m.group(2) or 1)
        x = int(g.mul[x, g.power(idx, e)])
    return x


def parse_generators(g: GroupTable, texts: Sequence[str]) -> list[int]:
    """Parse one or more element strings; each may hold several split by ``;``."""
    out = []
    for t in texts:
        for piece in t.split(";"):
            if piece.strip():
                out.append(parse_element(g, piece))
    return out
