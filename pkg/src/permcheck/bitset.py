"""Python-int bitsets over element indices, with numpy conversion helpers.

An int is hashable, supports fast ``& | ^ ~`` and equality, which is what the
lattice dedupe and subset tests need.  Iteration goes through numpy.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np


def from_indices(indices: Iterable[int] | np.ndarray) -> int:
    idx = np.asarray(list(indices) if not isinstance(indices, np.ndarray) else indices, dtype=np.int64)
    if idx.size == 0:
        return 0
    mask = np.zeros(int(idx.max()) + 1, dtype=bool)
    mask[idx] = True
    return from_mask(mask)


def from_mask(mask: np.ndarray) -> int:
    if mask.size == 0:
        return 0
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def to_indices(bits: int) -> np.ndarray:
    if bits == 0:
        return np.zeros(0, dtype=np.int64)
    nbytes = (bits.bit_length() + 7) // 8
    raw = np.frombuffer(bits.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.flatnonzero(np.unpackbits(raw, bitorder="little"))


def to_mask(bits: int, n: int) -> np.ndarray:
    mask = np.zeros(n, dtype=bool)
    mask[to_indices(bits)] = True
    return mask


def popcount(bits: int) -> int:
    return bits.bit_count()


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0
