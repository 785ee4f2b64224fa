"""
Element Sets - Bitmask Subsets of a Ground Set

Ground-set elements are the indices 0..n-1. Every subset is a Python int
whose bit i is set when element i belongs to it; ElementSet wraps such a
mask together with n so that complements and range checks are well defined.

Functions:
- iter_bits(): indices of the set bits of a mask
- popcount(): size of a mask
- mask_of(): mask from an iterable of indices
- as_mask(): coerce ElementSet / int / iterable to a validated mask

ElementMap records where elements go when a construction drops or renumbers
them (deletion, contraction, simplification).
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Tuple, Union

from matroids.errors import MatroidInputError


# ==================== BIT HELPERS ====================

def popcount(mask: int) -> int:
    """Number of set bits in mask."""
    return mask.bit_count()


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    """Bitmask with the given indices set."""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def full_mask(n: int) -> int:
    """Mask of the whole ground set {0..n-1}."""
    return (1 << n) - 1


# ==================== ELEMENT SET ====================

@dataclass(frozen=True, order=False)
class ElementSet:
    """
    Fixed-width subset of the ground set {0..n-1}.

    Set algebra is taken relative to the full set of size n, so complement()
    is an involution and union/intersection behave as usual.
    """

    bits: int
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise MatroidInputError(f"negative ground-set size {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise MatroidInputError(
                f"mask {self.bits:#x} has bits outside ground set of size {self.n}"
            )

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def of(cls, indices: Iterable[int], n: int) -> "ElementSet":
        """Build from element indices; out-of-range indices are an input error."""
        indices = list(indices)
        for i in indices:
            if not 0 <= i < n:
                raise MatroidInputError(f"element {i} outside ground set of size {n}")
        return cls(mask_of(indices), n)

    @classmethod
    def empty(cls, n: int) -> "ElementSet":
        return cls(0, n)

    @classmethod
    def full(cls, n: int) -> "ElementSet":
        return cls(full_mask(n), n)

    # ------------------------------------------------------------------
    # Set algebra
    # ------------------------------------------------------------------

    def _check_width(self, other: "ElementSet") -> None:
        if other.n != self.n:
            raise MatroidInputError(
                f"element sets over different ground sets ({self.n} vs {other.n})"
            )

    def __or__(self, other: "ElementSet") -> "ElementSet":
        self._check_width(other)
        return ElementSet(self.bits | other.bits, self.n)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        self._check_width(other)
        return ElementSet(self.bits & other.bits, self.n)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        self._check_width(other)
        return ElementSet(self.bits & ~other.bits, self.n)

    def __xor__(self, other: "ElementSet") -> "ElementSet":
        self._check_width(other)
        return ElementSet(self.bits ^ other.bits, self.n)

    def complement(self) -> "ElementSet":
        return ElementSet(full_mask(self.n) ^ self.bits, self.n)

    def issubset(self, other: "ElementSet") -> bool:
        self._check_width(other)
        return self.bits & ~other.bits == 0

    def __le__(self, other: "ElementSet") -> bool:
        return self.issubset(other)

    def __lt__(self, other: "ElementSet") -> bool:
        return self.issubset(other) and self.bits != other.bits

    # ------------------------------------------------------------------
    # Container protocol
    # ------------------------------------------------------------------

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __contains__(self, e: int) -> bool:
        return 0 <= e < self.n and bool(self.bits >> e & 1)

    def __bool__(self) -> bool:
        return self.bits != 0

    def indices(self) -> Tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    def sort_key(self) -> Tuple[int, int]:
        """Deterministic order: by size, then by mask value."""
        return (len(self), self.bits)

    def __repr__(self) -> str:
        return "{" + ",".join(str(i) for i in self) + "}"


ElementLike = Union[ElementSet, int, Iterable[int]]


def as_mask(X: ElementLike, n: int) -> int:
    """
    Coerce an element-set argument to a validated bitmask.

    Args:
        X: ElementSet, raw int mask, or iterable of element indices
        n: Ground-set size the argument must fit in

    Returns:
        Bitmask over 0..n-1

    Raises:
        MatroidInputError: If X mentions an element outside the ground set
    """
    if isinstance(X, ElementSet):
        if X.n != n:
            raise MatroidInputError(f"element set is over {X.n} elements, matroid has {n}")
        return X.bits
    if isinstance(X, bool):
        raise MatroidInputError("boolean is not an element set")
    if isinstance(X, int):
        if X < 0 or X >> n:
            raise MatroidInputError(f"mask {X:#x} outside ground set of size {n}")
        return X
    return ElementSet.of(X, n).bits


def as_element(e: int, n: int) -> int:
    """Validate a single element index."""
    if isinstance(e, bool) or not isinstance(e, int) or not 0 <= e < n:
        raise MatroidInputError(f"element {e!r} outside ground set of size {n}")
    return e


# ==================== ELEMENT MAP ====================

@dataclass(frozen=True)
class ElementMap:
    """
    Tracks element identity through a construction.

    forward[i] is the new index of old element i, or None if i was removed.
    """

    forward: Tuple[Optional[int], ...]
    description: str = ""

    def __post_init__(self):
        images = [j for j in self.forward if j is not None]
        if len(images) != len(set(images)):
            raise MatroidInputError("element map is not injective")

    @classmethod
    def keeping(cls, n: int, keep_mask: int, description: str = "") -> "ElementMap":
        """Map that keeps the elements of keep_mask, renumbered in index order."""
        forward: List[Optional[int]] = []
        nxt = 0
        for i in range(n):
            if keep_mask >> i & 1:
                forward.append(nxt)
                nxt += 1
            else:
                forward.append(None)
        return cls(tuple(forward), description)

    @classmethod
    def identity(cls, n: int, description: str = "identity") -> "ElementMap":
        return cls(tuple(range(n)), description)

    def __getitem__(self, old: int) -> Optional[int]:
        return self.forward[old]

    def survivors(self) -> Tuple[int, ...]:
        """Old indices that survive, in new-index order."""
        pairs = sorted((j, i) for i, j in enumerate(self.forward) if j is not None)
        return tuple(i for _, i in pairs)

    def compose(self, after: "ElementMap") -> "ElementMap":
        """Apply self, then after."""
        forward = tuple(
            None if j is None else after.forward[j] for j in self.forward
        )
        desc = "; ".join(d for d in (self.description, after.description) if d)
        return ElementMap(forward, desc)

    def image(self, mask: int) -> int:
        """Image of an old-index mask (removed elements are dropped)."""
        out = 0
        for i in iter_bits(mask):
            j = self.forward[i]
            if j is not None:
                out |= 1 << j
        return out
