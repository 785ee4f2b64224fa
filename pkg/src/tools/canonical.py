"""
Canonical Forms - Isomorphism Keys for Small Matroids

The canonical form of M is the lexicographically least basis-indicator
string over all relabelings, where the indicator lists every r-subset of
{0..n-1} in ascending mask (colex) order. Two matroids with n <= 12 are
isomorphic iff their canonical forms agree.

Search:
- elements are split into ordered cells by a refined invariant (basis count,
  then counts of bases shared with each other cell); labelings must place
  cells in that order
- positions are assigned one at a time; assigning position j fixes the
  indicator bits of all r-subsets whose largest element is j, so a prefix
  that already exceeds the best encoding is cut
- automorphisms found at equal leaves prune orbit-equivalent children

Keys serialize as `cf1:n<n>-r<r>-<hex>`.
"""

import logging
import re
from dataclasses import dataclass
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from matroids.element_set import mask_of
from matroids.errors import CANONICAL_CAPACITY, SEARCH_CAPACITY, MatroidInputError, require_capacity
from matroids.kernels import lex_compare, masks_of_size, permute_masks
from matroids.matroid import Matroid
from matroids.representations import BasesRep

logger = logging.getLogger(__name__)

KEY_VERSION = "cf1"
_KEY_PATTERN = re.compile(r"^cf1:n(\d+)-r(\d+)-([0-9a-f]+)$")


# ==================== CANONICAL FORM VALUE ====================

@dataclass(frozen=True)
class CanonicalForm:
    """Permutation-minimal basis indicator of a matroid."""

    n: int
    r: int
    bits: str

    @property
    def key(self) -> str:
        padded = self.bits + "0" * (-len(self.bits) % 4)
        width = len(padded) // 4
        return f"{KEY_VERSION}:n{self.n}-r{self.r}-{int(padded, 2):0{width}x}"

    @classmethod
    def from_key(cls, key: str) -> "CanonicalForm":
        """
        Parse a canonical key.

        Raises:
            MatroidInputError: If the key is malformed
        """
        match = _KEY_PATTERN.match(key)
        if not match:
            raise MatroidInputError(f"malformed canonical key '{key}'")
        n, r, digits = int(match.group(1)), int(match.group(2)), match.group(3)
        if r > n:
            raise MatroidInputError(f"canonical key '{key}' has rank above size")
        length = comb(n, r)
        if len(digits) != -(-length // 4):
            raise MatroidInputError(f"canonical key '{key}' has the wrong length")
        padded = format(int(digits, 16), f"0{len(digits) * 4}b")
        if "1" in padded[length:]:
            raise MatroidInputError(f"canonical key '{key}' has nonzero padding")
        return cls(n, r, padded[:length])

    def sort_key(self) -> Tuple[int, int, str]:
        return (self.n, self.r, self.bits)

    def to_matroid(self, name: str = "") -> Matroid:
        """The labeled representative whose bases are the set bits."""
        subsets = masks_of_size(self.n, self.r)
        chosen = [int(subsets[i]) for i, bit in enumerate(self.bits) if bit == "1"]
        return Matroid(self.n, BasesRep.from_masks(chosen), name)

    def __str__(self) -> str:
        return self.key


def matroid_from_key(key: str, name: str = "") -> Matroid:
    return CanonicalForm.from_key(key).to_matroid(name)


# ==================== ELEMENT INVARIANTS ====================

def element_colors(n: int, bases: Sequence[int]) -> np.ndarray:
    """
    Isomorphism-invariant color of each element, refined until stable.

    Colors are ranks of sorted signatures, so isomorphic matroids get the
    same color multiset.
    """
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    B = ((np.array(bases, dtype=np.int64)[:, None] >> np.arange(n)) & 1).astype(np.int64)
    pair = B.T @ B
    signatures: List[tuple] = [(int(pair[e, e]),) for e in range(n)]
    colors = _rank_signatures(signatures)
    classes = len(set(colors))
    while True:
        signatures = [
            (colors[e], tuple(sorted((colors[f], int(pair[e, f])) for f in range(n) if f != e)))
            for e in range(n)
        ]
        refined = _rank_signatures(signatures)
        refined_classes = len(set(refined))
        colors = refined
        if refined_classes == classes:
            break
        classes = refined_classes
    return np.array(colors, dtype=np.int64)


def _rank_signatures(signatures: List[tuple]) -> List[int]:
    ranking: Dict[tuple, int] = {s: i for i, s in enumerate(sorted(set(signatures)))}
    return [ranking[s] for s in signatures]


# ==================== SEARCH ====================

class _CanonicalSearch:
    """One canonical-labeling search over a fixed matroid."""

    def __init__(self, M: Matroid):
        self.n = M.n
        self.r = M.r
        bases = M.bases()
        self.is_basis = np.zeros(1 << self.n, dtype=bool)
        self.is_basis[np.array(bases, dtype=np.int64)] = True

        colors = element_colors(self.n, bases)
        self.colors = colors
        self.cell_color = np.sort(colors)

        self.chunks = [masks_of_size(j, self.r - 1) for j in range(self.n)]
        self.offsets = np.concatenate([[0], np.cumsum([c.size for c in self.chunks])]).astype(int)
        self.current = np.zeros(int(self.offsets[-1]), dtype=np.uint8)

        self.best: Optional[np.ndarray] = None
        self.best_order: Optional[List[int]] = None
        self.generators: List[List[int]] = []
        self.leaves = 0

    def run(self) -> Tuple[np.ndarray, List[int]]:
        self._search(0, np.zeros(1, dtype=np.int64), [], 0)
        return self.best, self.best_order

    def _orbit_roots(self, prefix: List[int], candidates: List[int]) -> Dict[int, int]:
        """Union-find roots of candidates under generators fixing the prefix pointwise."""
        parent = {c: c for c in candidates}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gen in self.generators:
            if any(gen[x] != x for x in prefix):
                continue
            for c in candidates:
                image = gen[c]
                if image in parent:
                    a, b = find(c), find(image)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return {c: find(c) for c in candidates}

    def _search(self, depth: int, lookup: np.ndarray, order: List[int], used: int) -> Optional[int]:
        """
        Extend the labeling at position `depth`.

        Returns the depth to unwind to after an automorphism was found, or None.
        """
        if depth == self.n:
            return self._leaf(order)

        color = self.cell_color[depth]
        candidates = [e for e in range(self.n) if not used >> e & 1 and self.colors[e] == color]
        explored_roots = set()
        start, stop = int(self.offsets[depth]), int(self.offsets[depth + 1])

        for c in candidates:
            roots = self._orbit_roots(order, candidates)
            if any(roots[c] == roots[x] for x in explored_roots):
                continue
            explored_roots.add(c)

            chunk = self.is_basis[lookup[self.chunks[depth]] | (1 << c)]
            self.current[start:stop] = chunk
            if self.best is not None and lex_compare(self.current[:stop], self.best[:stop]) > 0:
                continue

            child_lookup = np.concatenate([lookup, lookup | (1 << c)])
            result = self._search(depth + 1, child_lookup, order + [c], used | 1 << c)
            if result is not None and result < depth:
                return result
        return None

    def _leaf(self, order: List[int]) -> Optional[int]:
        self.leaves += 1
        if self.best is None or lex_compare(self.current, self.best) < 0:
            self.best = self.current.copy()
            self.best_order = list(order)
            return None

        gen = [0] * self.n
        for old, new in zip(self.best_order, order):
            gen[old] = new
        if any(gen[x] != x for x in range(self.n)):
            self.generators.append(gen)
        for depth, (a, b) in enumerate(zip(self.best_order, order)):
            if a != b:
                return depth
        return None


def canonical_form(M: Matroid) -> CanonicalForm:
    """
    Permutation-invariant encoding of M.

    Raises:
        CapacityError: If M has more than 12 elements
    """
    require_capacity(M.n, CANONICAL_CAPACITY, "canonical form")
    if M.r in (0, M.n):
        return CanonicalForm(M.n, M.r, "1")
    search = _CanonicalSearch(M)
    best, _ = search.run()
    logger.debug(f"canonical form n={M.n} r={M.r} after {search.leaves} leaves")
    return CanonicalForm(M.n, M.r, "".join("1" if b else "0" for b in best))


def canonical_key(M: Matroid) -> str:
    return canonical_form(M).key


# ==================== ISOMORPHISM ====================

def are_isomorphic(M1: Matroid, M2: Matroid) -> bool:
    """
    Exact isomorphism test.

    Canonical forms decide n <= 12; larger ground sets use a backtracking
    search over color-preserving bijections.
    """
    if M1.n != M2.n or M1.r != M2.r or len(M1.bases()) != len(M2.bases()):
        return False
    if M1.n <= CANONICAL_CAPACITY:
        return canonical_form(M1) == canonical_form(M2)
    return find_isomorphism(M1, M2) is not None


def find_isomorphism(M1: Matroid, M2: Matroid) -> Optional[List[int]]:
    """
    A bijection phi (phi[e] = image of e) mapping bases of M1 onto bases of
    M2, or None.
    """
    if M1.n != M2.n or M1.r != M2.r or len(M1.bases()) != len(M2.bases()):
        return None
    n = M1.n
    require_capacity(n, SEARCH_CAPACITY, "isomorphism search")
    c1 = element_colors(n, M1.bases())
    c2 = element_colors(n, M2.bases())
    if sorted(c1.tolist()) != sorted(c2.tolist()):
        return None

    sizes = {color: int(np.sum(c1 == color)) for color in set(c1.tolist())}
    order = sorted(range(n), key=lambda e: (sizes[int(c1[e])], int(c1[e]), e))
    target = M2.basis_set()
    source = np.array(M1.bases(), dtype=np.int64)
    phi = [-1] * n

    def consistent(x: int, y: int, assigned: List[int]) -> bool:
        if M1.rank_mask(1 << x) != M2.rank_mask(1 << y):
            return False
        for i, a in enumerate(assigned):
            if M1.rank_mask(1 << x | 1 << a) != M2.rank_mask(1 << y | 1 << phi[a]):
                return False
            for b in assigned[i + 1:]:
                if M1.rank_mask(mask_of((x, a, b))) != M2.rank_mask(mask_of((y, phi[a], phi[b]))):
                    return False
        return True

    def extend(index: int, assigned: List[int], taken: int) -> bool:
        if index == n:
            mapped = permute_masks(source, phi)
            return all(int(b) in target for b in mapped)
        x = order[index]
        for y in range(n):
            if taken >> y & 1 or c2[y] != c1[x]:
                continue
            if not consistent(x, y, assigned):
                continue
            phi[x] = y
            if extend(index + 1, assigned + [x], taken | 1 << y):
                return True
            phi[x] = -1
        return False

    return list(phi) if extend(0, [], 0) else None
