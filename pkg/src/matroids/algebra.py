"""
Matroid Algebra

Duals, minors, circuits, simplification and the sum constructions. Derived
matroids are materialized as BasesRep; uniform inputs keep a UniformRep
where the result is again uniform.

Functions:
- dual(), minor(), delete(), contract(), restrict()
- circuits(), cocircuits(), fundamental_circuit()
- parallel_classes(), series_classes(), simplify(), cosimplify()
- direct_sum(), two_sum(), relax_circuit_hyperplane()
- validate_bases()
"""

import logging
from itertools import combinations
from typing import Iterable, List, Tuple

import numpy as np

from matroids.element_set import (
    ElementLike,
    ElementMap,
    ElementSet,
    as_element,
    as_mask,
    iter_bits,
    mask_of,
    popcount,
)
from matroids.errors import SEARCH_CAPACITY, MatroidInputError
from matroids.kernels import compress_masks, popcounts, submasks
from matroids.matroid import Matroid
from matroids.representations import BasesRep, UniformRep

logger = logging.getLogger(__name__)


# ==================== DUALITY ====================

def dual(M: Matroid) -> Matroid:
    """Matroid whose bases are the complements of the bases of M."""
    name = f"{M.name}*" if M.name else ""
    if isinstance(M.rep, UniformRep):
        return Matroid(M.n, UniformRep(M.n - M.rep.rank, M.n), name)
    full = M.full
    return Matroid(M.n, BasesRep.from_masks(full ^ b for b in M.bases()), name)


# ==================== MINORS ====================

def minor(M: Matroid, deleted: ElementLike = 0, contracted: ElementLike = 0) -> Tuple[Matroid, ElementMap]:
    """
    M \\ deleted / contracted, with surviving elements renumbered in index order.

    Returns:
        (minor, map from old element indices to new ones)

    Raises:
        MatroidInputError: If the deleted and contracted sets overlap
    """
    D = as_mask(deleted, M.n)
    C = as_mask(contracted, M.n)
    if D & C:
        raise MatroidInputError("an element cannot be both deleted and contracted")
    G = M.full & ~D & ~C
    m = popcount(G)
    element_map = ElementMap.keeping(M.n, G, "minor")

    if isinstance(M.rep, UniformRep):
        r = max(M.rep.rank - popcount(C), 0) if C else M.rep.rank
        r = min(r, m)
        return Matroid(m, UniformRep(r, m)), element_map

    rC = M.rank_mask(C)
    target = M.rank_mask(G | C) - rC

    if M.n <= SEARCH_CAPACITY:
        table = M.rank_table()
        subs = submasks(G)
        cand = subs[popcounts(M.n)[subs] == target]
        kept = cand[table[cand | C] == target + rC]
        new_bases = compress_masks(kept, G).tolist()
    else:
        ground = list(iter_bits(G))
        new_bases = []
        for combo in combinations(range(m), target):
            old = mask_of(ground[j] for j in combo)
            if M.rank_mask(old | C) == target + rC:
                new_bases.append(mask_of(combo))

    return Matroid(m, BasesRep.from_masks(new_bases)), element_map


def delete(M: Matroid, X: ElementLike) -> Matroid:
    return minor(M, deleted=X)[0]


def contract(M: Matroid, X: ElementLike) -> Matroid:
    """M / X; ranks satisfy r_{M/X}(Y) = r(X u Y) - r(X)."""
    return minor(M, contracted=X)[0]


def restrict(M: Matroid, X: ElementLike) -> Matroid:
    """M | X = M \\ (E - X)."""
    return minor(M, deleted=M.full & ~as_mask(X, M.n))[0]


# ==================== CIRCUITS ====================

def _circuit_masks(M: Matroid, max_size: int) -> List[int]:
    max_size = min(max_size, M.n)
    if max_size < 1:
        return []
    if M.n > SEARCH_CAPACITY:
        found = [
            mask_of(c)
            for size in range(1, max_size + 1)
            for c in combinations(range(M.n), size)
            if M.is_circuit(mask_of(c))
        ]
        return sorted(found, key=lambda x: (popcount(x), x))

    table = M.rank_table().astype(np.int16)
    pc = popcounts(M.n).astype(np.int16)
    sel = np.flatnonzero((pc >= 1) & (pc <= max_size))
    cand = sel[table[sel] == pc[sel] - 1]
    ok = np.ones(cand.shape, dtype=bool)
    size = pc[cand]
    for i in range(M.n):
        has = ((cand >> i) & 1).astype(bool)
        ok &= ~has | (table[cand ^ (1 << i)] == size - 1)
    found = cand[ok]
    order = np.lexsort((found, pc[found]))
    return [int(x) for x in found[order]]


def circuits(M: Matroid, max_size: int) -> List[ElementSet]:
    """
    All circuits with at most max_size elements.

    Sorted by size, then by mask.
    """
    if max_size < 0:
        raise MatroidInputError(f"max_size must be non-negative, got {max_size}")
    return [ElementSet(c, M.n) for c in _circuit_masks(M, max_size)]


def cocircuits(M: Matroid, max_size: int) -> List[ElementSet]:
    """Circuits of the dual."""
    return circuits(dual(M), max_size)


def fundamental_circuit(M: Matroid, B: ElementLike, e: int) -> ElementSet:
    """
    The unique circuit inside B + e that contains e.

    Raises:
        MatroidInputError: If B is not a basis or e is in B
    """
    basis = as_mask(B, M.n)
    as_element(e, M.n)
    if not M.is_basis(basis):
        raise MatroidInputError(f"{ElementSet(basis, M.n)} is not a basis")
    if basis >> e & 1:
        raise MatroidInputError(f"element {e} lies in the basis")
    out = 1 << e
    for b in iter_bits(basis):
        if M.rank_mask(basis ^ (1 << b) | (1 << e)) == M.r:
            out |= 1 << b
    return ElementSet(out, M.n)


# ==================== PARALLEL AND SERIES CLASSES ====================

def parallel_classes(M: Matroid) -> List[ElementSet]:
    """
    Parallel classes of the non-loop elements, ordered by lowest member.

    Loops are not part of any class; see Matroid.loops().
    """
    loops = M.loops()
    classes: List[int] = []
    for e in range(M.n):
        if loops >> e & 1:
            continue
        for i, cls in enumerate(classes):
            rep = (cls & -cls).bit_length() - 1
            if M.rank_mask(1 << rep | 1 << e) == 1:
                classes[i] |= 1 << e
                break
        else:
            classes.append(1 << e)
    return [ElementSet(c, M.n) for c in classes]


def series_classes(M: Matroid) -> List[ElementSet]:
    """Parallel classes of the dual (coloops excluded)."""
    return parallel_classes(dual(M))


def simplify(M: Matroid) -> Tuple[Matroid, ElementMap]:
    """
    si(M): delete loops and all but the lowest element of each parallel class.
    """
    keep = 0
    for cls in parallel_classes(M):
        keep |= cls.bits & -cls.bits
    simple, element_map = minor(M, deleted=M.full & ~keep)
    logger.debug(f"simplify removed {M.n - simple.n} elements")
    return simple, ElementMap(element_map.forward, "parallel class representative")


def cosimplify(M: Matroid) -> Tuple[Matroid, ElementMap]:
    """
    co(M) = (si(M*))*, realized as contraction of coloops and series copies.
    """
    simple_dual, element_map = simplify(dual(M))
    return dual(simple_dual), ElementMap(element_map.forward, "series class representative")


# ==================== SUMS ====================

def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    """M1 + M2 on the disjoint union; M2's elements follow M1's."""
    shift = M1.n
    bases = [b1 | (b2 << shift) for b1 in M1.bases() for b2 in M2.bases()]
    return Matroid(M1.n + M2.n, BasesRep.from_masks(bases))


def two_sum(M1: Matroid, M2: Matroid, p1: int, p2: int) -> Matroid:
    """
    2-sum of M1 and M2 at basepoints p1, p2.

    The ground set is (E1 - p1) followed by (E2 - p2). A basis is a basis of
    M1 with p1 removed together with a basis of M2 avoiding p2, or the other
    way around, so the rank is r(M1) + r(M2) - 1.

    Raises:
        MatroidInputError: If a part has fewer than 3 elements or a basepoint
            is a loop or coloop
    """
    for label, M, p in (("first", M1, p1), ("second", M2, p2)):
        if M.n < 3:
            raise MatroidInputError(f"{label} part of a 2-sum needs at least 3 elements")
        as_element(p, M.n)
        if M.loops() >> p & 1 or M.coloops() >> p & 1:
            raise MatroidInputError(f"basepoint {p} of the {label} part is a loop or coloop")

    keep1 = M1.full ^ (1 << p1)
    keep2 = M2.full ^ (1 << p2)
    shift = M1.n - 1

    bases1 = np.array(M1.bases(), dtype=np.int64)
    bases2 = np.array(M2.bases(), dtype=np.int64)
    with_p1 = compress_masks(bases1[((bases1 >> p1) & 1) == 1], keep1)
    without_p1 = compress_masks(bases1[((bases1 >> p1) & 1) == 0], keep1)
    with_p2 = compress_masks(bases2[((bases2 >> p2) & 1) == 1], keep2) << shift
    without_p2 = compress_masks(bases2[((bases2 >> p2) & 1) == 0], keep2) << shift

    combined = np.concatenate([
        (with_p1[:, None] | without_p2[None, :]).ravel(),
        (without_p1[:, None] | with_p2[None, :]).ravel(),
    ])
    return Matroid(M1.n + M2.n - 2, BasesRep.from_masks(combined.tolist()))


def relax_circuit_hyperplane(M: Matroid, X: ElementLike, name: str = "") -> Matroid:
    """
    Declare a circuit-hyperplane to be a basis.

    Raises:
        MatroidInputError: If X is not both a circuit and a hyperplane
    """
    mask = as_mask(X, M.n)
    if not (M.is_circuit(mask) and M.is_hyperplane(mask)):
        raise MatroidInputError(f"{ElementSet(mask, M.n)} is not a circuit-hyperplane")
    return Matroid(M.n, BasesRep.from_masks(M.bases() + (mask,)), name)


# ==================== BASIS AXIOMS ====================

def validate_bases(family: Iterable, n: int) -> bool:
    """
    True iff family is a nonempty set of equal-size subsets of 0..n-1 that
    satisfies basis exchange.
    """
    masks = [b.bits if isinstance(b, ElementSet) else int(b) for b in family]
    if not masks:
        return False
    if any(m < 0 or m >> n for m in masks):
        return False
    size = popcount(masks[0])
    if any(popcount(m) != size for m in masks):
        return False

    present = set(masks)
    for A in present:
        for B in present:
            only_b = B & ~A
            for a in iter_bits(A & ~B):
                base = A ^ (1 << a)
                if not any(base | (1 << b) in present for b in iter_bits(only_b)):
                    return False
    return True
