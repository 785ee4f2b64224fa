"""
Wheel and Whirl Recognition

Finds a labeling a_1, b_1, ..., a_k, b_k with triads {a_i, b_i, a_{i+1}} and
triangles {b_i, a_{i+1}, b_{i+1}} by walking the alternating cycle, then
confirms the candidate by comparing bases with wheel(k) or whirl(k). Works
beyond the canonical-form capacity (wheels up to the search capacity).
"""

import logging
from typing import Dict, List, Optional

from matroids.element_set import iter_bits, mask_of
from matroids.matroid import Matroid
from tools.connectivity import triads, triangles
from tools.constructions import WHEEL, WHIRL, WheelLabeling, wheel, whirl

logger = logging.getLogger(__name__)


def _confirm(M: Matroid, rim: List[int], spokes: List[int]) -> Optional[WheelLabeling]:
    """Compare M, relabeled into standard order, with wheel(k) or whirl(k)."""
    k = len(rim)
    candidate = WheelLabeling(WHEEL, k, tuple(rim), tuple(spokes))
    rim_dependent = M.rank_mask(candidate.rim_mask()) < k
    reference = wheel(k)[0] if rim_dependent else whirl(k)[0]
    relabeled = M.relabel(candidate.standard_order())
    if relabeled.basis_set() != reference.basis_set():
        return None
    return WheelLabeling(WHEEL if rim_dependent else WHIRL, k, tuple(rim), tuple(spokes))


def recognize_wheel_or_whirl(M: Matroid) -> Optional[WheelLabeling]:
    """
    Labeling realizing M as M(W_k) (k >= 3) or W^k (k >= 2), or None.

    U_{2,4} is reported as whirl(2). The rim is dependent in a wheel and a
    basis in a whirl.
    """
    if M.n < 4 or M.n % 2 or M.r != M.n // 2:
        return None
    k = M.r
    if k == 2:
        if len(M.bases()) == 6:
            return WheelLabeling(WHIRL, 2, (0, 2), (1, 3))
        return None

    triangle_set = {t.bits for t in triangles(M)}
    triad_list = [t.bits for t in triads(M)]
    if len(triangle_set) < k or len(triad_list) < k:
        return None
    triads_at: Dict[int, List[int]] = {}
    for t in triad_list:
        for e in iter_bits(t):
            triads_at.setdefault(e, []).append(t)

    def walk(rim: List[int], spokes: List[int], used: int) -> Optional[WheelLabeling]:
        i = len(spokes)
        a_i = rim[i]
        for t in triads_at.get(a_i, ()):
            for b in iter_bits(t & ~(1 << a_i)):
                if used >> b & 1:
                    continue
                if i > 0 and mask_of((spokes[-1], a_i, b)) not in triangle_set:
                    continue
                a_next = (t & ~(1 << a_i) & ~(1 << b)).bit_length() - 1
                if i == k - 1:
                    if a_next != rim[0] or mask_of((b, rim[0], spokes[0])) not in triangle_set:
                        continue
                    found = _confirm(M, rim, spokes + [b])
                elif used >> a_next & 1:
                    continue
                else:
                    found = walk(rim + [a_next], spokes + [b], used | 1 << b | 1 << a_next)
                if found is not None:
                    return found
        return None

    for a_1 in range(M.n):
        found = walk([a_1], [], 1 << a_1)
        if found is not None:
            logger.debug(f"recognized {found.label}")
            return found
    return None


def is_wheel_or_whirl(M: Matroid) -> bool:
    return recognize_wheel_or_whirl(M) is not None
