"""
Bitmask Kernels - Vectorized Subset Tables

numpy helpers shared by the rank tables, the connectivity scans and the
canonical-form search. Every array here is indexed by subset mask, so a
table for an n-element ground set has 2^n entries.
"""

from functools import lru_cache
from typing import Iterable

import numpy as np

from matroids.element_set import iter_bits


@lru_cache(maxsize=32)
def popcounts(n: int) -> np.ndarray:
    """popcounts(n)[mask] = number of set bits of mask, for mask < 2^n."""
    pc = np.zeros(1, dtype=np.int8)
    for _ in range(n):
        pc = np.concatenate([pc, pc + 1])
    pc.setflags(write=False)
    return pc


@lru_cache(maxsize=4096)
def submasks(ground: int) -> np.ndarray:
    """
    All submasks of ground as an int64 array.

    Order is the binary counting order over the bits of ground, so index 0 is
    the empty set and the last entry is ground itself.
    """
    arr = np.zeros(1, dtype=np.int64)
    for i in iter_bits(ground):
        arr = np.concatenate([arr, arr | (1 << i)])
    arr.setflags(write=False)
    return arr


@lru_cache(maxsize=256)
def masks_of_size(n: int, size: int) -> np.ndarray:
    """Masks below 2^n with exactly `size` bits, ascending (colex order)."""
    arr = np.flatnonzero(popcounts(n) == size).astype(np.int64)
    arr.setflags(write=False)
    return arr


def down_close(flags: np.ndarray, n: int) -> None:
    """In place: flags[X] |= flags[Y] for every Y containing X."""
    for i in range(n):
        view = flags.reshape(-1, 2, 1 << i)
        view[:, 0, :] |= view[:, 1, :]


def subset_max(values: np.ndarray, n: int) -> None:
    """In place: values[X] = max over Y subset of X of values[Y]."""
    for i in range(n):
        view = values.reshape(-1, 2, 1 << i)
        np.maximum(view[:, 1, :], view[:, 0, :], out=view[:, 1, :])


def rank_table_from_bases(n: int, bases: Iterable[int]) -> np.ndarray:
    """
    Rank of every subset, computed from the basis family.

    A set is independent iff it lies inside some basis; its rank is the size
    of its largest independent subset.
    """
    indep = np.zeros(1 << n, dtype=bool)
    basis_arr = np.fromiter(bases, dtype=np.int64)
    indep[basis_arr] = True
    down_close(indep, n)
    table = np.where(indep, popcounts(n), 0).astype(np.int8)
    subset_max(table, n)
    return table


def compress_masks(masks: np.ndarray, keep: int) -> np.ndarray:
    """Renumber the bits of `keep` to 0..|keep|-1 in every mask (others dropped)."""
    out = np.zeros_like(masks)
    for j, i in enumerate(iter_bits(keep)):
        out |= ((masks >> i) & 1) << j
    return out


def permute_masks(masks: np.ndarray, perm) -> np.ndarray:
    """Apply perm (old index -> new index) to every mask."""
    out = np.zeros_like(masks)
    for i, j in enumerate(perm):
        out |= ((masks >> i) & 1) << j
    return out


def lex_compare(a: np.ndarray, b: np.ndarray) -> int:
    """-1, 0 or 1 as 0/1 array a is lexicographically below, equal to or above b."""
    diff = np.flatnonzero(a != b)
    if diff.size == 0:
        return 0
    return -1 if a[diff[0]] < b[diff[0]] else 1
