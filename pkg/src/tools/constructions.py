"""
Constructions Tool - Named Matroids

Uniform matroids, wheels and whirls.

Wheel element order: a_1, b_1, a_2, b_2, ..., a_k, b_k where a_i is the rim
edge v_{i-1} v_i (a_1 closes the rim at v_k v_1) and b_i is the spoke from
the hub to v_i. With this order the triangles are {b_i, a_{i+1}, b_{i+1}}
and the triads are {a_i, b_i, a_{i+1}}, indices mod k.
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

import networkx as nx

from matroids.algebra import relax_circuit_hyperplane
from matroids.element_set import mask_of
from matroids.errors import CONSTRUCTION_CAPACITY, SEARCH_CAPACITY, MatroidInputError, require_capacity
from matroids.matroid import Matroid
from matroids.representations import GraphicRep, UniformRep, graphic_from_networkx

logger = logging.getLogger(__name__)

WHEEL = "wheel"
WHIRL = "whirl"


@dataclass(frozen=True)
class WheelLabeling:
    """
    Rim and spoke elements realizing the wheel/whirl pattern.

    rim[i] is a_{i+1} and spokes[i] is b_{i+1} (0-based tuples).
    """

    kind: str
    k: int
    rim: Tuple[int, ...]
    spokes: Tuple[int, ...]

    def __post_init__(self):
        if self.kind not in (WHEEL, WHIRL):
            raise MatroidInputError(f"unknown wheel kind '{self.kind}'")
        if len(self.rim) != self.k or len(self.spokes) != self.k:
            raise MatroidInputError("rim and spoke lists must both have k entries")

    @property
    def label(self) -> str:
        return f"{self.kind}({self.k})"

    def rim_mask(self) -> int:
        return mask_of(self.rim)

    def triangle_masks(self) -> List[int]:
        """{b_i, a_{i+1}, b_{i+1}} for every i."""
        k = self.k
        return [
            mask_of((self.spokes[i], self.rim[(i + 1) % k], self.spokes[(i + 1) % k]))
            for i in range(k)
        ]

    def triad_masks(self) -> List[int]:
        """{a_i, b_i, a_{i+1}} for every i."""
        k = self.k
        return [
            mask_of((self.rim[i], self.spokes[i], self.rim[(i + 1) % k]))
            for i in range(k)
        ]

    def standard_order(self) -> List[int]:
        """perm with perm[old element] = its index in a_1, b_1, ..., a_k, b_k order."""
        perm = [0] * (2 * self.k)
        for i in range(self.k):
            perm[self.rim[i]] = 2 * i
            perm[self.spokes[i]] = 2 * i + 1
        return perm


def standard_labeling(kind: str, k: int) -> WheelLabeling:
    return WheelLabeling(kind, k, tuple(range(0, 2 * k, 2)), tuple(range(1, 2 * k, 2)))


# ==================== CONSTRUCTORS ====================

def uniform(r: int, n: int) -> Matroid:
    """
    U_{r,n}.

    Raises:
        MatroidInputError: If not 0 <= r <= n
    """
    if r < 0 or r > n:
        raise MatroidInputError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    return Matroid(n, UniformRep(r, n), f"U{r},{n}")


def wheel_graph(k: int) -> GraphicRep:
    """Hub 0 and rim vertices 1..k, edges in a_1, b_1, ..., a_k, b_k order."""
    hub_graph = nx.wheel_graph(k + 1)
    labeled = nx.MultiGraph()
    labeled.add_nodes_from(hub_graph)
    for u, v in hub_graph.edges:
        u, v = min(u, v), max(u, v)
        if u == 0:
            labeled.add_edge(u, v, key=2 * v - 1)
        elif (u, v) == (1, k):
            labeled.add_edge(k, 1, key=0)
        else:
            labeled.add_edge(u, v, key=2 * v - 2)
    if k == 2:
        # W_2 has a doubled rim; the simple wheel graph keeps one copy
        labeled.add_edge(1, 2, key=2)
    return graphic_from_networkx(labeled)


def wheel(k: int) -> Tuple[Matroid, WheelLabeling]:
    """
    M(W_k): cycle matroid of the wheel with k spokes; 2k elements, rank k.

    Raises:
        MatroidInputError: If k < 2
    """
    if k < 2:
        raise MatroidInputError(f"wheel needs k >= 2, got {k}")
    require_capacity(2 * k, CONSTRUCTION_CAPACITY, "wheel construction")
    M = Matroid(2 * k, wheel_graph(k), f"wheel({k})")
    return M, standard_labeling(WHEEL, k)


def whirl(k: int) -> Tuple[Matroid, WheelLabeling]:
    """
    W^k: M(W_k) with its rim circuit-hyperplane relaxed. whirl(2) is U_{2,4}.

    Raises:
        MatroidInputError: If k < 2
        CapacityError: If 2k exceeds the capacity for materialized bases
    """
    if k < 2:
        raise MatroidInputError(f"whirl needs k >= 2, got {k}")
    require_capacity(2 * k, SEARCH_CAPACITY, "whirl construction")
    base, labeling = wheel(k)
    relaxed = relax_circuit_hyperplane(base, labeling.rim_mask(), f"whirl({k})")
    return relaxed, standard_labeling(WHIRL, k)


def build_named(kind: str, params: List[int]) -> Matroid:
    """Construct by name: ('wheel', [k]), ('whirl', [k]) or ('uniform', [r, n])."""
    if kind == WHEEL and len(params) == 1:
        return wheel(params[0])[0]
    if kind == WHIRL and len(params) == 1:
        return whirl(params[0])[0]
    if kind == "uniform" and len(params) == 2:
        return uniform(params[0], params[1])
    raise MatroidInputError(f"cannot build '{kind}' from parameters {params}")
