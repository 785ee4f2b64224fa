"""
Connectivity Tool - Tutte Connectivity Predicates

Connectivity function, k-separation search and the predicates built on them:
k-connected, minimally and super-minimally k-connected, brittle, plus
triangle, triad and essential-element enumeration.

All searches evaluate the connectivity function of a minor directly from the
parent's rank table. For ground set G and contracted set C,

    lambda'(X) = r(X u C) + r((G - X) u C) - r(G u C) - r(C)

so restrictions, deletions and contractions are tested without building the
minor. A minor is k-connected iff no X has lambda'(X) < min(|X|, |G - X|, k - 1).

Role: Connectivity oracle for the census and every verification suite
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import numpy as np

from matroids.algebra import parallel_classes
from matroids.element_set import ElementLike, ElementSet, as_mask, popcount
from matroids.errors import SEARCH_CAPACITY, MatroidInputError, require_capacity
from matroids.kernels import masks_of_size, popcounts
from matroids.matroid import Matroid

logger = logging.getLogger(__name__)

# rows x columns budget for one batched connectivity evaluation
_BATCH_CELLS = 1 << 22


# ==================== DATA TYPES ====================

@dataclass(frozen=True)
class SeparationWitness:
    """
    A certified k-separation {side, E - side}.

    min(|side|, |E - side|) >= order and lambda_value <= order - 1.
    """

    side: ElementSet
    order: int
    lambda_value: int
    nonminimal: bool

    def to_json(self) -> Dict[str, Any]:
        return {
            "side": list(self.side.indices()),
            "order": self.order,
            "lambda": self.lambda_value,
            "nonminimal": self.nonminimal,
        }


@dataclass(frozen=True)
class PropertyFlags:
    """Connectivity profile of one matroid, as stored in census records."""

    is_3connected: bool
    is_min_3connected: bool
    is_sm_3connected: bool
    is_brittle: bool
    triangle_count: int
    triad_count: int
    elements_in_triads: int
    essential_count: Optional[int]

    def to_json(self) -> Dict[str, Any]:
        return {
            "3c": self.is_3connected,
            "min3c": self.is_min_3connected,
            "sm3c": self.is_sm_3connected,
            "brittle": self.is_brittle,
            "triangles": self.triangle_count,
            "triads": self.triad_count,
            "eit": self.elements_in_triads,
            "essential": self.essential_count,
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "PropertyFlags":
        return cls(
            is_3connected=bool(data["3c"]),
            is_min_3connected=bool(data["min3c"]),
            is_sm_3connected=bool(data["sm3c"]),
            is_brittle=bool(data["brittle"]),
            triangle_count=int(data["triangles"]),
            triad_count=int(data["triads"]),
            elements_in_triads=int(data["eit"]),
            essential_count=None if data["essential"] is None else int(data["essential"]),
        )


# ==================== KERNELS ====================

def _table(M: Matroid) -> np.ndarray:
    require_capacity(M.n, SEARCH_CAPACITY, "connectivity search")
    return M.rank_table()


def _expand_submasks(grounds: np.ndarray, size: int) -> np.ndarray:
    """Row i lists all submasks of grounds[i]; every ground has `size` bits."""
    rows = grounds.shape[0]
    counting = np.arange(1 << size, dtype=np.int64)
    if size == 0:
        return np.zeros((rows, 1), dtype=np.int64)
    width = int(grounds.max()).bit_length()
    bits = ((grounds[:, None] >> np.arange(width, dtype=np.int64)) & 1).astype(bool)
    positions = np.nonzero(bits)[1].reshape(rows, size)
    sub = np.zeros((rows, 1 << size), dtype=np.int64)
    for j in range(size):
        sub |= ((counting >> j) & 1)[None, :] << positions[:, j:j + 1]
    return sub


def _minors_k_connected(table: np.ndarray, grounds: np.ndarray, size: int,
                        contracted: int, k: int) -> np.ndarray:
    """
    For each ground G in grounds (all of the same size), whether the minor
    with ground G and contracted set `contracted` is k-connected.
    """
    out = np.ones(grounds.shape[0], dtype=bool)
    if k <= 1 or size < 2 or grounds.size == 0:
        return out
    columns = 1 << size
    step = max(1, _BATCH_CELLS // columns)
    counting = np.arange(columns, dtype=np.int64)
    sides = popcounts(size)[counting].astype(np.int16)
    threshold = np.minimum(np.minimum(sides, size - sides), k - 1)
    r_c = int(table[contracted])

    for start in range(0, grounds.shape[0], step):
        G = grounds[start:start + step]
        sub = _expand_submasks(G, size)
        comp = G[:, None] ^ sub
        lam = (
            table[sub | contracted].astype(np.int16)
            + table[comp | contracted]
            - table[G | contracted][:, None]
            - r_c
        )
        out[start:start + step] = ~np.any(lam < threshold[None, :], axis=1)
    return out


def minor_is_k_connected(M: Matroid, ground: int, contracted: int, k: int) -> bool:
    """Whether the minor of M on `ground` with `contracted` contracted is k-connected."""
    table = _table(M)
    grounds = np.array([ground], dtype=np.int64)
    return bool(_minors_k_connected(table, grounds, popcount(ground), contracted, k)[0])


# ==================== CONNECTIVITY FUNCTION ====================

def connectivity(M: Matroid, X: ElementLike) -> int:
    """lambda_M(X) = r(X) + r(E - X) - r(M)."""
    mask = as_mask(X, M.n)
    return M.rank_mask(mask) + M.rank_mask(M.full ^ mask) - M.r


def find_k_separation(M: Matroid, k: int, require_nonminimal: bool = False) -> Optional[SeparationWitness]:
    """
    Least k-separation of M, or None.

    Candidate sides X satisfy |X| <= |E - X|, lambda(X) <= k - 1 and
    |X| >= k (k + 1 when require_nonminimal); the one with the smallest mask
    is returned.

    Raises:
        MatroidInputError: If k < 1
        CapacityError: If M has more elements than the search capacity
    """
    if k < 1:
        raise MatroidInputError(f"separation order must be at least 1, got {k}")
    table = _table(M)
    n = M.n
    masks = np.arange(1 << n, dtype=np.int64)
    sizes = popcounts(n).astype(np.int16)
    lam = table.astype(np.int16) + table[M.full ^ masks] - M.r
    least = k + 1 if require_nonminimal else k
    hits = np.flatnonzero((sizes <= n - sizes) & (sizes >= least) & (lam <= k - 1))
    if hits.size == 0:
        return None
    side = int(hits[0])
    size = popcount(side)
    return SeparationWitness(
        side=ElementSet(side, n),
        order=k,
        lambda_value=int(lam[side]),
        nonminimal=min(size, n - size) >= k + 1,
    )


def lambda_profile(M: Matroid) -> np.ndarray:
    """lambda(X) for every mask X."""
    table = _table(M)
    masks = np.arange(1 << M.n, dtype=np.int64)
    return table.astype(np.int16) + table[M.full ^ masks] - M.r


# ==================== CONNECTIVITY PREDICATES ====================

def is_k_connected(M: Matroid, n_level: int) -> bool:
    """
    Tutte n-connectivity: no j-separation for any j < n_level.

    Matroids too small to have a separation are vacuously connected.
    """
    if n_level < 1:
        raise MatroidInputError(f"connectivity level must be at least 1, got {n_level}")
    return minor_is_k_connected(M, M.full, 0, n_level)


def _deletions_k_connected(M: Matroid, k: int) -> np.ndarray:
    table = _table(M)
    grounds = np.array([M.full ^ (1 << e) for e in range(M.n)], dtype=np.int64)
    return _minors_k_connected(table, grounds, M.n - 1, 0, k)


def is_minimally_k_connected(M: Matroid, n_level: int) -> bool:
    """k-connected, and no single-element deletion is k-connected."""
    if not is_k_connected(M, n_level):
        return False
    return not np.any(_deletions_k_connected(M, n_level))


def _parallel_pairs(M: Matroid) -> List[int]:
    pairs = []
    for cls in parallel_classes(M):
        members = cls.indices()
        for i, e in enumerate(members):
            for f in members[i + 1:]:
                pairs.append(1 << e | 1 << f)
    return pairs


def _has_k_connected_restriction(M: Matroid, k: int, min_size: int, include_full: bool) -> bool:
    """
    Whether some restriction M|S with |S| >= min_size is k-connected.

    Sizes are scanned in increasing order. For k >= 2 sets holding a loop are
    skipped (a k-connected matroid on >= 2 elements is loopless); for k >= 3
    sets holding a parallel pair are skipped once |S| >= 4.
    """
    table = _table(M)
    n = M.n
    loops = M.loops()
    pairs = _parallel_pairs(M) if k >= 3 else []
    last = n if include_full else n - 1

    for size in range(max(min_size, 0), last + 1):
        candidates = masks_of_size(n, size)
        if k >= 2 and size >= 2 and loops:
            candidates = candidates[(candidates & loops) == 0]
        if k >= 3 and size >= 4:
            for pair in pairs:
                candidates = candidates[(candidates & pair) != pair]
        if candidates.size == 0:
            continue
        if np.any(_minors_k_connected(table, candidates, size, 0, k)):
            return True
    return False


def is_super_minimally_k_connected(M: Matroid, k: int) -> bool:
    """
    k-connected with no proper k-connected restriction on >= 2k - 2 elements.

    Raises:
        CapacityError: If M has more elements than the search capacity
    """
    if not is_k_connected(M, k):
        return False
    return not _has_k_connected_restriction(M, k, 2 * k - 2, include_full=False)


def is_brittle(M: Matroid) -> bool:
    """
    Simple M with no 3-connected restriction on four or more elements.

    Raises:
        MatroidInputError: If M has loops or parallel pairs
    """
    if not M.is_simple():
        raise MatroidInputError("brittleness is defined for simple matroids only")
    return not _has_k_connected_restriction(M, 3, 4, include_full=True)


# ==================== TRIANGLES, TRIADS, ESSENTIAL ELEMENTS ====================

def _triangle_masks(M: Matroid) -> np.ndarray:
    table = _table(M)
    triples = masks_of_size(M.n, 3)
    ok = table[triples] == 2
    for i in range(M.n):
        has = ((triples >> i) & 1).astype(bool)
        ok &= ~has | (table[triples ^ (1 << i)] == 2)
    return triples[ok]


def _triad_masks(M: Matroid) -> np.ndarray:
    """3-sets whose complement is a hyperplane."""
    table = _table(M)
    triples = masks_of_size(M.n, 3)
    rest = M.full ^ triples
    ok = table[rest] == M.r - 1
    for i in range(M.n):
        has = ((triples >> i) & 1).astype(bool)
        ok &= ~has | (table[rest | (1 << i)] == M.r)
    return triples[ok]


def triangles(M: Matroid) -> List[ElementSet]:
    """3-element circuits, ascending by mask."""
    return [ElementSet(int(t), M.n) for t in _triangle_masks(M)]


def triads(M: Matroid) -> List[ElementSet]:
    """3-element cocircuits, ascending by mask."""
    return [ElementSet(int(t), M.n) for t in _triad_masks(M)]


def elements_in_triads(M: Matroid) -> int:
    """Number of elements lying in at least one triad."""
    union = 0
    for t in _triad_masks(M):
        union |= int(t)
    return popcount(union)


def essential_elements(M: Matroid) -> ElementSet:
    """
    Elements e with neither M\\e nor M/e 3-connected.

    Raises:
        MatroidInputError: If M is not 3-connected
    """
    if not is_k_connected(M, 3):
        raise MatroidInputError("essential elements are defined for 3-connected matroids")
    deletions = _deletions_k_connected(M, 3)
    out = 0
    for e in range(M.n):
        if deletions[e]:
            continue
        if not minor_is_k_connected(M, M.full ^ (1 << e), 1 << e, 3):
            out |= 1 << e
    return ElementSet(out, M.n)


def nonessential_elements(M: Matroid) -> ElementSet:
    return essential_elements(M).complement()


# ==================== PROPERTY FLAGS ====================

def property_flags(M: Matroid) -> PropertyFlags:
    """
    Compute the census flag set for M.

    Non-simple matroids are recorded as not brittle; essential_count is None
    when M is not 3-connected.
    """
    three = is_k_connected(M, 3)
    minimal = three and not np.any(_deletions_k_connected(M, 3))
    proper = _has_k_connected_restriction(M, 3, 4, include_full=False)
    super_minimal = three and not proper
    brittle = M.is_simple() and not proper and not (three and M.n >= 4)
    triad_masks = _triad_masks(M)
    union = 0
    for t in triad_masks:
        union |= int(t)
    return PropertyFlags(
        is_3connected=three,
        is_min_3connected=minimal,
        is_sm_3connected=super_minimal,
        is_brittle=brittle,
        triangle_count=int(_triangle_masks(M).size),
        triad_count=int(triad_masks.size),
        elements_in_triads=popcount(union),
        essential_count=len(essential_elements(M)) if three else None,
    )
