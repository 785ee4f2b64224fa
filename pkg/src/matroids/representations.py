"""
Matroid Representations

Concrete ways to define a matroid. Each representation answers rank queries
for bitmask subsets and can list its bases; Matroid (matroid.py) wraps one of
them and adds caching.

Representations:
- BasesRep: explicit basis family
- LinearRep: r x n matrix over GF(p), p in {2, 3, 5, 7}
- GraphicRep: multigraph edge list, edge index = element index
- UniformRep: rank r on n elements
"""

from dataclasses import dataclass
from itertools import combinations
from typing import List, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from matroids.element_set import iter_bits, mask_of, popcount
from matroids.errors import MatroidInputError

SUPPORTED_PRIMES = (2, 3, 5, 7)


# ==================== GF(p) ELIMINATION ====================

def gf_row_echelon(matrix: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """
    Row-reduce a matrix over GF(p).

    Args:
        matrix: Integer matrix (m x k), entries taken mod p
        p: Prime field size

    Returns:
        (R, pivot_cols): reduced matrix and pivot columns (length = rank)
    """
    R = (np.asarray(matrix, dtype=np.int64) % p).copy()
    m, k = R.shape
    pivot_cols: List[int] = []
    pivot_row = 0

    for col in range(k):
        if pivot_row == m:
            break
        nonzero = np.flatnonzero(R[pivot_row:, col])
        if nonzero.size == 0:
            continue
        found = pivot_row + int(nonzero[0])
        if found != pivot_row:
            R[[pivot_row, found]] = R[[found, pivot_row]]

        inv = pow(int(R[pivot_row, col]), p - 2, p)
        R[pivot_row] = (R[pivot_row] * inv) % p
        below = R[pivot_row + 1:, col].copy()
        R[pivot_row + 1:] = (R[pivot_row + 1:] - np.outer(below, R[pivot_row])) % p

        pivot_cols.append(col)
        pivot_row += 1

    return R, pivot_cols


def gf_rank(matrix: np.ndarray, p: int) -> int:
    """Rank of a matrix over GF(p)."""
    if matrix.size == 0:
        return 0
    _, pivots = gf_row_echelon(matrix, p)
    return len(pivots)


# ==================== REPRESENTATIONS ====================

def _bases_by_rank_oracle(rep, n: int, r: int) -> Tuple[int, ...]:
    found = []
    for combo in combinations(range(n), r):
        mask = mask_of(combo)
        if rep.rank_mask(mask) == r:
            found.append(mask)
    return tuple(sorted(found))


@dataclass(frozen=True)
class BasesRep:
    """Explicit basis family; bases are masks sorted ascending."""

    bases: Tuple[int, ...]
    rank: int

    kind = "bases"

    def __post_init__(self):
        if not self.bases:
            raise MatroidInputError("basis family is empty")
        if any(popcount(b) != self.rank for b in self.bases):
            raise MatroidInputError("bases have different sizes")

    @classmethod
    def from_masks(cls, masks) -> "BasesRep":
        family = tuple(sorted(set(int(m) for m in masks)))
        if not family:
            raise MatroidInputError("basis family is empty")
        return cls(family, popcount(family[0]))

    def rank_mask(self, mask: int) -> int:
        return max(popcount(b & mask) for b in self.bases)

    def list_bases(self, n: int) -> Tuple[int, ...]:
        return self.bases


@dataclass(frozen=True)
class LinearRep:
    """Column matroid of an r x n matrix over GF(p)."""

    p: int
    rows: Tuple[Tuple[int, ...], ...]

    kind = "linear"

    def __post_init__(self):
        if self.p not in SUPPORTED_PRIMES:
            raise MatroidInputError(f"field GF({self.p}) not supported; use one of {SUPPORTED_PRIMES}")
        widths = {len(row) for row in self.rows}
        if len(widths) > 1:
            raise MatroidInputError("matrix rows have different lengths")
        for row in self.rows:
            for x in row:
                if not 0 <= x < self.p:
                    raise MatroidInputError(f"entry {x} is not a residue mod {self.p}")

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(len(self.rows), -1)

    def rank_mask(self, mask: int) -> int:
        cols = list(iter_bits(mask))
        if not cols or not self.rows:
            return 0
        return gf_rank(self.matrix[:, cols], self.p)

    def list_bases(self, n: int) -> Tuple[int, ...]:
        return _bases_by_rank_oracle(self, n, self.rank_mask((1 << n) - 1))


@dataclass(frozen=True)
class GraphicRep:
    """Cycle matroid of a multigraph; loops (u == v) are allowed."""

    vertices: int
    edges: Tuple[Tuple[int, int], ...]

    kind = "graphic"

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < self.vertices and 0 <= v < self.vertices):
                raise MatroidInputError(f"edge ({u}, {v}) uses a vertex outside 0..{self.vertices - 1}")

    def rank_mask(self, mask: int) -> int:
        """Vertices spanned minus components, via union-find."""
        parent = list(range(self.vertices))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        rank = 0
        for e in iter_bits(mask):
            u, v = self.edges[e]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                rank += 1
        return rank

    def list_bases(self, n: int) -> Tuple[int, ...]:
        return _bases_by_rank_oracle(self, n, self.rank_mask((1 << n) - 1))


@dataclass(frozen=True)
class UniformRep:
    """U_{r,n}: every r-subset is a basis."""

    rank: int
    size: int

    kind = "uniform"

    def __post_init__(self):
        if not 0 <= self.rank <= self.size:
            raise MatroidInputError(f"uniform matroid needs 0 <= r <= n, got r={self.rank}, n={self.size}")

    def rank_mask(self, mask: int) -> int:
        return min(popcount(mask), self.rank)

    def list_bases(self, n: int) -> Tuple[int, ...]:
        return tuple(sorted(mask_of(c) for c in combinations(range(n), self.rank)))


Representation = Union[BasesRep, LinearRep, GraphicRep, UniformRep]


def ground_size(rep: Representation) -> int:
    """Number of elements a representation defines, or -1 if BasesRep (implicit)."""
    if isinstance(rep, LinearRep):
        return len(rep.rows[0]) if rep.rows else -1
    if isinstance(rep, GraphicRep):
        return len(rep.edges)
    if isinstance(rep, UniformRep):
        return rep.size
    return -1


def graphic_from_networkx(graph: nx.MultiGraph) -> GraphicRep:
    """GraphicRep from a networkx multigraph; nodes are relabeled 0..v-1 in sorted order."""
    index = {node: i for i, node in enumerate(sorted(graph.nodes))}
    edges: Sequence[Tuple[int, int]] = [
        (index[u], index[v]) for u, v, _ in sorted(graph.edges(keys=True), key=lambda e: e[2])
    ]
    return GraphicRep(len(index), tuple(edges))
