"""Element subsets of a group table, stored as bitsets over element indices."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING, Iterator

import numpy as np

from . import bitset

if TYPE_CHECKING:
    from .perm import GroupTable


@dataclass(frozen=True, eq=False)
class ElementSet:
    """Arbitrary subset of ``parent``'s elements (product sets need not be subgroups)."""

    parent: "GroupTable"
    members: int

    def __post_init__(self):
        if self.members >> self.parent.order:
            raise ValueError("element set refers to indices outside the group")

    @cached_property
    def indices(self) -> np.ndarray:
        return bitset.to_indices(self.members)

    @property
    def size(self) -> int:
        return self.members.bit_count()

    def __len__(self) -> int:
        return self.size

    def __contains__(self, i: int) -> bool:
        return bool(self.members >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices.tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.parent is other.parent and self.members == other.members

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    def __le__(self, other: "ElementSet") -> bool:
        return bitset.is_subset(self.members, other.members)

    def one_based(self) -> list[int]:
        return [i + 1 for i in self]

    def __repr__(self) -> str:
        return f"{type(self).__name__}(size={self.size}, members={self.one_based()})"


@dataclass(frozen=True, eq=False, repr=False)
class SubgroupSet(ElementSet):
    """A subset closed under the group operation.

    ``gens`` optionally records element indices known to generate the subgroup;
    it is a cache and never affects equality.
    """

    gens: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        super().__post_init__()
        if not self.members & 1:
            raise ValueError("subgroup must contain the identity")

    @property
    def order(self) -> int:
        return self.size

    @cached_property
    def generators(self) -> tuple[int, ...]:
        if self.gens is not None:
            return self.gens
        return greedy_generators(self.parent, self.indices)

    def is_trivial(self) -> bool:
        return self.members == 1

    def is_whole(self) -> bool:
        return self.size == self.parent.order


def greedy_generators(g: "GroupTable", indices) -> tuple[int, ...]:
    """Scan ``indices`` in order, keeping each element not yet generated."""
    from .perm import close_bits

    gens: list[int] = []
    bits = 1
    for i in indices:
        i = int(i)
        if not bits >> i & 1:
            gens.append(i)
            bits = close_bits(g, gens, start=bits)
    return tuple(gens)
