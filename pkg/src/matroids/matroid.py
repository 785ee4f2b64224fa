"""
Matroid - Rank Oracle over an Indexed Ground Set

A Matroid wraps one representation and answers rank, corank and closure
queries. Values are immutable; the rank table and memo are built lazily
under a lock and are dropped when a matroid is pickled, so worker processes
rebuild them locally.
"""

import logging
import threading
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

import numpy as np

from matroids.element_set import (
    ElementLike,
    ElementSet,
    as_element,
    as_mask,
    full_mask,
    iter_bits,
    popcount,
)
from matroids.errors import CONSTRUCTION_CAPACITY, SEARCH_CAPACITY, MatroidInputError, require_capacity
from matroids.kernels import permute_masks, popcounts, rank_table_from_bases
from matroids.representations import (
    BasesRep,
    Representation,
    UniformRep,
    ground_size,
)

logger = logging.getLogger(__name__)


class Matroid:
    """
    A matroid on elements 0..n-1 backed by a representation.

    Attributes:
        n: Ground-set size
        rep: BasesRep, LinearRep, GraphicRep or UniformRep
        name: Free-form label used in files and reports
    """

    __slots__ = ("n", "rep", "name", "_table", "_memo", "_bases", "_rank", "_lock")

    def __init__(self, n: int, rep: Representation, name: str = ""):
        require_capacity(n, CONSTRUCTION_CAPACITY, "matroid construction")
        declared = ground_size(rep)
        if declared not in (-1, n):
            raise MatroidInputError(f"representation defines {declared} elements, expected {n}")
        if isinstance(rep, BasesRep) and rep.bases[-1] >> n:
            raise MatroidInputError(f"basis {rep.bases[-1]:#x} outside ground set of size {n}")
        self.n = n
        self.rep = rep
        self.name = name
        self._init_caches()

    def _init_caches(self) -> None:
        self._table: Optional[np.ndarray] = None
        self._memo: Dict[int, int] = {}
        self._bases: Optional[Tuple[int, ...]] = None
        self._rank: Optional[int] = None
        self._lock = threading.RLock()

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_bases(
        cls,
        n: int,
        bases: Iterable[int],
        name: str = "",
        validate: bool = True,
    ) -> "Matroid":
        """
        Matroid from a basis family given as masks or ElementSets.

        Raises:
            MatroidInputError: If validate is set and the family fails basis exchange
        """
        masks = [b.bits if isinstance(b, ElementSet) else int(b) for b in bases]
        if validate:
            from matroids.algebra import validate_bases

            if not validate_bases(masks, n):
                raise MatroidInputError("family does not satisfy the basis axioms")
        return cls(n, BasesRep.from_masks(masks), name)

    # ------------------------------------------------------------------
    # Pickling
    # ------------------------------------------------------------------

    def __getstate__(self):
        return {"n": self.n, "rep": self.rep, "name": self.name}

    def __setstate__(self, state):
        self.n = state["n"]
        self.rep = state["rep"]
        self.name = state["name"]
        self._init_caches()

    # ------------------------------------------------------------------
    # Cached structure
    # ------------------------------------------------------------------

    def bases(self) -> Tuple[int, ...]:
        """All bases as masks, ascending."""
        if self._bases is None:
            with self._lock:
                if self._bases is None:
                    self._bases = tuple(self.rep.list_bases(self.n))
        return self._bases

    def rank_table(self) -> np.ndarray:
        """
        Rank of every subset, indexed by mask.

        Raises:
            CapacityError: If n exceeds the subset-search capacity
        """
        if self._table is None:
            require_capacity(self.n, SEARCH_CAPACITY, "rank table")
            with self._lock:
                if self._table is None:
                    if isinstance(self.rep, UniformRep):
                        table = np.minimum(popcounts(self.n), self.rep.rank).astype(np.int8)
                    else:
                        table = rank_table_from_bases(self.n, self.bases())
                    table.setflags(write=False)
                    logger.debug(f"built rank table for {self.name or 'matroid'} (n={self.n})")
                    self._table = table
        return self._table

    @property
    def r(self) -> int:
        """Rank of the whole ground set."""
        if self._rank is None:
            self._rank = self.rep.rank_mask(full_mask(self.n))
        return self._rank

    @property
    def full(self) -> int:
        return full_mask(self.n)

    # ------------------------------------------------------------------
    # Rank queries
    # ------------------------------------------------------------------

    def rank_mask(self, mask: int) -> int:
        """Rank of an already-validated mask."""
        if self._table is not None:
            return int(self._table[mask])
        cached = self._memo.get(mask)
        if cached is None:
            cached = self.rep.rank_mask(mask)
            with self._lock:
                self._memo[mask] = cached
        return cached

    def rank(self, X: ElementLike) -> int:
        return self.rank_mask(as_mask(X, self.n))

    def corank_mask(self, mask: int) -> int:
        return popcount(mask) + self.rank_mask(self.full ^ mask) - self.r

    def corank(self, X: ElementLike) -> int:
        """r*(X) = |X| + r(E - X) - r(M)."""
        return self.corank_mask(as_mask(X, self.n))

    def closure_mask(self, mask: int) -> int:
        base = self.rank_mask(mask)
        out = mask
        for e in range(self.n):
            if not mask >> e & 1 and self.rank_mask(mask | 1 << e) == base:
                out |= 1 << e
        return out

    def closure(self, X: ElementLike) -> ElementSet:
        return ElementSet(self.closure_mask(as_mask(X, self.n)), self.n)

    def coclosure_mask(self, mask: int) -> int:
        base = self.corank_mask(mask)
        out = mask
        for e in range(self.n):
            if not mask >> e & 1 and self.corank_mask(mask | 1 << e) == base:
                out |= 1 << e
        return out

    def coclosure(self, X: ElementLike) -> ElementSet:
        """Closure in the dual matroid."""
        return ElementSet(self.coclosure_mask(as_mask(X, self.n)), self.n)

    def is_basis(self, X: ElementLike) -> bool:
        mask = as_mask(X, self.n)
        return popcount(mask) == self.r and self.rank_mask(mask) == self.r

    def is_circuit(self, X: ElementLike) -> bool:
        mask = as_mask(X, self.n)
        size = popcount(mask)
        if size == 0 or self.rank_mask(mask) != size - 1:
            return False
        return all(self.rank_mask(mask ^ 1 << e) == size - 1 for e in iter_bits(mask))

    def is_hyperplane(self, X: ElementLike) -> bool:
        mask = as_mask(X, self.n)
        return self.rank_mask(mask) == self.r - 1 and self.closure_mask(mask) == mask

    def loops(self) -> int:
        return sum(1 << e for e in range(self.n) if self.rank_mask(1 << e) == 0)

    def coloops(self) -> int:
        return sum(1 << e for e in range(self.n) if self.corank_mask(1 << e) == 0)

    def is_simple(self) -> bool:
        if self.loops():
            return False
        return all(
            self.rank_mask(1 << e | 1 << f) == 2
            for e in range(self.n)
            for f in range(e + 1, self.n)
        )

    # ------------------------------------------------------------------
    # Relabeling and comparison
    # ------------------------------------------------------------------

    def relabel(self, perm: Sequence[int], name: Optional[str] = None) -> "Matroid":
        """
        Relabeled copy: element i becomes perm[i].

        Raises:
            MatroidInputError: If perm is not a permutation of 0..n-1
        """
        if sorted(perm) != list(range(self.n)):
            raise MatroidInputError(f"{list(perm)} is not a permutation of 0..{self.n - 1}")
        for e in perm:
            as_element(e, self.n)
        if isinstance(self.rep, UniformRep):
            return Matroid(self.n, self.rep, self.name if name is None else name)
        masks = permute_masks(np.array(self.bases(), dtype=np.int64), perm)
        return Matroid(self.n, BasesRep.from_masks(masks.tolist()), self.name if name is None else name)

    def basis_set(self) -> FrozenSet[int]:
        return frozenset(self.bases())

    def __eq__(self, other) -> bool:
        """Labeled equality: same ground set and the same bases."""
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and self.bases() == other.bases()

    def __hash__(self) -> int:
        return hash((self.n, self.bases()))

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<Matroid{label} n={self.n} r={self.r} {self.rep.kind}>"
