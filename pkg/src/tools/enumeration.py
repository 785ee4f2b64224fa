"""
Enumeration Tool - Matroids on Small Ground Sets

Every isomorphism class on n + 1 elements is a single-element extension of a
class on n elements, and single-element extensions correspond one-to-one to
modular cuts. enumerate_matroids() walks the levels 0..n_max, extends every
representative by every modular cut and keeps one labeled representative per
canonical form.

Modular cuts are generated through linear subclasses of hyperplanes: a set S
of hyperplanes such that whenever two members meet in a coline, every
hyperplane over that coline is a member. The cut of S is the set of flats
whose containing hyperplanes all lie in S; the empty cut (coloop extension)
is added separately.

naive_enumerate() is an independent oracle that scans basis families
directly and shares nothing with the extension path except canonical forms.

Role: Source of the census and of the enumeration cross-checks
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from matroids.algebra import validate_bases
from matroids.element_set import ElementSet, iter_bits, popcount
from matroids.errors import (
    ENUMERATION_CAPACITY,
    FLATS_CAPACITY,
    NAIVE_CAPACITY,
    MatroidInputError,
    require_capacity,
)
from matroids.kernels import masks_of_size
from matroids.matroid import Matroid
from matroids.representations import BasesRep
from tools.canonical import CanonicalForm, canonical_form
from tools.parallel import ordered_map

logger = logging.getLogger(__name__)

# families scanned per vectorized block in the naive oracle
_NAIVE_BLOCK = 1 << 16


# ==================== FLATS ====================

def _flat_masks(M: Matroid) -> List[int]:
    require_capacity(M.n, FLATS_CAPACITY, "flat enumeration")
    table = M.rank_table()
    masks = np.arange(1 << M.n, dtype=np.int64)
    closed = np.ones(masks.size, dtype=bool)
    for e in range(M.n):
        outside = ((masks >> e) & 1) == 0
        closed &= ~outside | (table[masks | (1 << e)] > table[masks])
    found = masks[closed]
    order = np.lexsort((found, table[found]))
    return [int(f) for f in found[order]]


def flats(M: Matroid) -> List[ElementSet]:
    """
    All flats of M, ordered by rank and then by mask.

    Raises:
        CapacityError: If M has more than 9 elements
    """
    return [ElementSet(f, M.n) for f in _flat_masks(M)]


# ==================== MODULAR CUTS ====================

@dataclass(frozen=True)
class ModularCut:
    """
    A modular cut of a matroid on n elements, given by its flats.

    The empty cut is allowed and describes the coloop extension.
    """

    n: int
    flats: Tuple[ElementSet, ...]

    @classmethod
    def of(cls, masks: Iterable[int], n: int) -> "ModularCut":
        ordered = sorted(set(int(m) for m in masks), key=lambda m: (popcount(m), m))
        return cls(n, tuple(ElementSet(m, n) for m in ordered))

    def masks(self) -> frozenset:
        return frozenset(f.bits for f in self.flats)

    def __len__(self) -> int:
        return len(self.flats)

    def __contains__(self, flat) -> bool:
        bits = flat.bits if isinstance(flat, ElementSet) else int(flat)
        return bits in self.masks()


def is_modular_cut(M: Matroid, cut: ModularCut) -> bool:
    """
    Whether cut is empty, or contains E, consists of flats, is closed upward
    and is closed under intersections of modular pairs.
    """
    if cut.n != M.n:
        return False
    chosen = cut.masks()
    if not chosen:
        return True
    all_flats = _flat_masks(M)
    flat_set = set(all_flats)
    if M.full not in chosen or not chosen <= flat_set:
        return False
    for F in chosen:
        for G in all_flats:
            if G & F == F and G not in chosen:
                return False
    ranks = {F: M.rank_mask(F) for F in chosen}
    for F1, F2 in combinations(sorted(chosen), 2):
        meet = F1 & F2
        if ranks[F1] + ranks[F2] == M.rank_mask(F1 | F2) + M.rank_mask(meet) and meet not in chosen:
            return False
    return True


class _LinearSubclassSearch:
    """Include/exclude backtracking over hyperplanes with coline propagation."""

    def __init__(self, M: Matroid, all_flats: Sequence[int]):
        r = M.r
        self.hyperplanes = [F for F in all_flats if M.rank_mask(F) == r - 1]
        colines = [F for F in all_flats if M.rank_mask(F) == r - 2]
        self.over_coline: List[int] = []
        for L in colines:
            over = 0
            for i, H in enumerate(self.hyperplanes):
                if H & L == L:
                    over |= 1 << i
            if popcount(over) >= 2:
                self.over_coline.append(over)
        self.found: List[int] = []

    def _close(self, included: int, excluded: int) -> Optional[int]:
        changed = True
        while changed:
            changed = False
            for over in self.over_coline:
                if popcount(included & over) >= 2 and over & ~included:
                    if over & excluded:
                        return None
                    included |= over
                    changed = True
        return included

    def run(self) -> List[int]:
        self._search(0, 0, 0)
        return self.found

    def _search(self, index: int, included: int, excluded: int) -> None:
        while index < len(self.hyperplanes) and (included >> index & 1):
            index += 1
        if index == len(self.hyperplanes):
            self.found.append(included)
            return
        self._search(index + 1, included, excluded | 1 << index)
        closed = self._close(included | 1 << index, excluded)
        if closed is not None:
            self._search(index + 1, closed, excluded)


def modular_cuts(M: Matroid) -> List[ModularCut]:
    """
    Every modular cut of M, including the empty cut, {E} and the full cut.

    Raises:
        CapacityError: If M has more than 8 elements
    """
    require_capacity(M.n, ENUMERATION_CAPACITY, "modular cut enumeration")
    all_flats = _flat_masks(M)
    search = _LinearSubclassSearch(M, all_flats)
    hyperplanes = search.hyperplanes

    containing = {}
    for F in all_flats:
        over = 0
        for i, H in enumerate(hyperplanes):
            if H & F == F:
                over |= 1 << i
        containing[F] = over

    cuts = [ModularCut(M.n, ())]
    for subclass in search.run():
        chosen = [F for F in all_flats if containing[F] & ~subclass == 0]
        cuts.append(ModularCut.of(chosen, M.n))
    logger.debug(f"{len(cuts)} modular cuts for n={M.n} r={M.r}")
    return cuts


# ==================== EXTENSION ====================

def extend(M: Matroid, cut: ModularCut, validate: bool = True) -> Matroid:
    """
    Single-element extension of M by a new element n lying in exactly the
    flats of cut.

    Raises:
        MatroidInputError: If validate is set and cut is not a modular cut of M
    """
    if validate and not is_modular_cut(M, cut):
        raise MatroidInputError("not a modular cut of the base matroid")
    new = 1 << M.n
    if not cut.flats:
        return Matroid(M.n + 1, BasesRep.from_masks(b | new for b in M.bases()))
    chosen = cut.masks()
    bases = list(M.bases())
    if M.r >= 1:
        for I in masks_of_size(M.n, M.r - 1):
            I = int(I)
            if M.rank_mask(I) == M.r - 1 and M.closure_mask(I) not in chosen:
                bases.append(I | new)
    extended = Matroid(M.n + 1, BasesRep.from_masks(bases))
    if validate and not validate_bases(extended.bases(), extended.n):
        raise MatroidInputError("extension failed basis exchange")
    return extended


def _extension_forms(M: Matroid) -> List[CanonicalForm]:
    M.rank_table()
    seen: Dict[str, CanonicalForm] = {}
    for cut in modular_cuts(M):
        form = canonical_form(extend(M, cut, validate=False))
        seen.setdefault(form.key, form)
    return list(seen.values())


def empty_matroid() -> Matroid:
    return Matroid(0, BasesRep.from_masks([0]), "U0,0")


def enumerate_matroids(n_max: int, workers: int = 1) -> Iterator[Tuple[CanonicalForm, Matroid]]:
    """
    Every isomorphism class on 0..n_max elements exactly once, as
    (canonical form, representative) pairs.

    Classes are yielded level by level and in (n, r, encoding) order within a
    level. The representative is the matroid decoded from its canonical form.

    Raises:
        CapacityError: If n_max exceeds 8
    """
    require_capacity(n_max, ENUMERATION_CAPACITY, "enumeration")
    if n_max < 0:
        return
    level = [canonical_form(empty_matroid())]
    for n in range(n_max + 1):
        representatives = [form.to_matroid() for form in level]
        for form, M in zip(level, representatives):
            yield form, M
        if n == n_max:
            break
        merged: Dict[str, CanonicalForm] = {}
        for forms in ordered_map(_extension_forms, representatives, workers, desc=f"extend n={n}"):
            for form in forms:
                merged.setdefault(form.key, form)
        level = sorted(merged.values(), key=CanonicalForm.sort_key)
        logger.info(f"{len(level)} classes on {n + 1} elements")


# ==================== NAIVE ORACLE ====================

def _exchange_clauses(n: int, r: int) -> List[Tuple[int, int, int]]:
    """
    Exchange clauses (i, j, targets) over the r-subsets in colex order: when
    subsets i and j are both bases, some subset in the index mask targets is
    a basis. One clause per element of subset i missing from subset j.
    """
    subsets = [int(s) for s in masks_of_size(n, r)]
    index = {s: i for i, s in enumerate(subsets)}
    clauses = []
    for i, A in enumerate(subsets):
        for j, B in enumerate(subsets):
            if i == j:
                continue
            only_b = B & ~A
            for a in iter_bits(A & ~B):
                targets = 0
                for b in iter_bits(only_b):
                    targets |= 1 << index[A ^ (1 << a) | (1 << b)]
                clauses.append((i, j, targets))
    return clauses


def naive_enumerate(n: int) -> Tuple[int, List[CanonicalForm]]:
    """
    Isomorphism classes on exactly n elements by direct scan of basis families.

    For every rank r, scans all families of r-subsets that contain {0..r-1}
    (every class has such a labeled member), keeps those satisfying basis
    exchange and dedups by canonical form.

    Returns:
        (class count, canonical forms sorted by (r, encoding))

    Raises:
        CapacityError: If n exceeds 6
    """
    require_capacity(n, NAIVE_CAPACITY, "naive enumeration")
    if n < 0:
        raise MatroidInputError(f"ground set size must be non-negative, got {n}")
    seen: Dict[str, CanonicalForm] = {}
    for r in range(n + 1):
        subsets = masks_of_size(n, r)
        m = subsets.size
        clauses = _exchange_clauses(n, r)
        # family code: bit i set iff subsets[i] is a basis; bit 0 always set
        total = 1 << (m - 1)
        for start in range(0, total, _NAIVE_BLOCK):
            codes = (np.arange(start, min(start + _NAIVE_BLOCK, total), dtype=np.int64) << 1) | 1
            ok = np.ones(codes.size, dtype=bool)
            for i, j, targets in clauses:
                ok &= ~((((codes >> i) & (codes >> j)) & 1).astype(bool) & ((codes & targets) == 0))
            for code in codes[ok]:
                code = int(code)
                bases = [int(subsets[i]) for i in iter_bits(code)]
                form = canonical_form(Matroid(n, BasesRep.from_masks(bases)))
                seen.setdefault(form.key, form)
    forms = sorted(seen.values(), key=CanonicalForm.sort_key)
    logger.info(f"naive scan found {len(forms)} classes on {n} elements")
    return len(forms), forms
