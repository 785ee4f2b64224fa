"""
Operation Coverage

Every public operation of the matroid core, connectivity, constructions and
enumeration layers is exercised on a small fixture whose answer is known.
The coverage report fails when an operation has no registered check, when a
check returns False, or when it raises.
"""

import logging
from typing import Callable, Dict, Tuple

from agents.report import SuiteReport
from matroids.algebra import (
    circuits,
    cocircuits,
    contract,
    cosimplify,
    delete,
    direct_sum,
    dual,
    fundamental_circuit,
    parallel_classes,
    relax_circuit_hyperplane,
    restrict,
    series_classes,
    simplify,
    two_sum,
    validate_bases,
)
from tools.canonical import CanonicalForm, are_isomorphic, canonical_form
from tools.census import census
from tools.connectivity import (
    connectivity,
    elements_in_triads,
    essential_elements,
    find_k_separation,
    is_brittle,
    is_k_connected,
    is_minimally_k_connected,
    is_super_minimally_k_connected,
    triads,
    triangles,
)
from tools.constructions import uniform, wheel, whirl
from tools.enumeration import ModularCut, enumerate_matroids, extend, flats, modular_cuts, naive_enumerate
from tools.recognition import recognize_wheel_or_whirl

logger = logging.getLogger(__name__)

REQUIRED_OPERATIONS: Tuple[str, ...] = (
    # matroid core
    "rank", "corank", "closure", "coclosure", "dual", "delete", "contract",
    "restrict", "circuits", "cocircuits", "fundamental_circuit", "simplify",
    "cosimplify", "direct_sum", "two_sum", "relax_circuit_hyperplane",
    "validate_bases", "parallel_classes", "series_classes",
    # connectivity
    "lambda", "find_k_separation", "is_k_connected", "is_minimally_k_connected",
    "is_super_minimally_k_connected", "is_brittle", "triangles", "triads",
    "essential_elements", "elements_in_triads",
    # constructions and isomorphism
    "uniform", "wheel", "whirl", "canonical_form", "are_isomorphic",
    "recognize_wheel_or_whirl",
    # enumeration
    "flats", "modular_cuts", "extend", "enumerate_matroids", "naive_enumerate",
    "census",
)


def _u24():
    return uniform(2, 4)


def _w3():
    return wheel(3)[0]


def _recognized_wheel4() -> bool:
    found = recognize_wheel_or_whirl(wheel(4)[0])
    return found is not None and found.kind == "wheel" and found.k == 4


def _free_extension() -> bool:
    M = uniform(2, 3)
    return are_isomorphic(extend(M, ModularCut.of([M.full], M.n)), _u24())


CHECKS: Dict[str, Callable[[], bool]] = {
    "rank": lambda: _u24().rank([0, 1, 2]) == 2,
    "corank": lambda: _u24().corank([0, 1, 2, 3]) == 2,
    "closure": lambda: _u24().closure([0, 1]).bits == 0b1111,
    "coclosure": lambda: uniform(2, 3).coclosure([0]).bits == 0b111,
    "dual": lambda: dual(uniform(1, 3)) == uniform(2, 3),
    "delete": lambda: delete(_u24(), [3]) == uniform(2, 3),
    "contract": lambda: contract(_u24(), [3]) == uniform(1, 3),
    "restrict": lambda: restrict(_u24(), [0, 1]) == uniform(2, 2),
    "circuits": lambda: len(circuits(_u24(), 3)) == 4,
    "cocircuits": lambda: len(cocircuits(_w3(), 3)) == 4,
    "fundamental_circuit": lambda: fundamental_circuit(_u24(), [0, 1], 2).bits == 0b0111,
    "simplify": lambda: simplify(uniform(1, 3))[0].n == 1,
    "cosimplify": lambda: cosimplify(uniform(2, 3))[0].n == 1,
    "direct_sum": lambda: (lambda M: (M.n, M.r))(direct_sum(uniform(1, 1), uniform(0, 1))) == (2, 1),
    "two_sum": lambda: two_sum(uniform(2, 3), uniform(2, 3), 0, 0) == uniform(3, 4),
    "relax_circuit_hyperplane": lambda: are_isomorphic(
        relax_circuit_hyperplane(_w3(), wheel(3)[1].rim_mask()), whirl(3)[0]
    ),
    "validate_bases": lambda: validate_bases([0b011, 0b101], 3) and not validate_bases([0b0011, 0b1100], 4),
    "parallel_classes": lambda: [c.bits for c in parallel_classes(uniform(1, 3))] == [0b111],
    "series_classes": lambda: [c.bits for c in series_classes(uniform(2, 3))] == [0b111],
    "lambda": lambda: connectivity(_u24(), [0, 1]) == 2,
    "find_k_separation": lambda: (
        find_k_separation(_u24(), 3) is None
        and find_k_separation(direct_sum(uniform(1, 1), uniform(1, 1)), 1) is not None
    ),
    "is_k_connected": lambda: is_k_connected(_u24(), 3) and not is_k_connected(uniform(1, 4), 3),
    "is_minimally_k_connected": lambda: is_minimally_k_connected(_w3(), 3),
    "is_super_minimally_k_connected": lambda: (
        is_super_minimally_k_connected(_w3(), 3) and not is_super_minimally_k_connected(uniform(2, 5), 3)
    ),
    "is_brittle": lambda: is_brittle(uniform(2, 3)) and not is_brittle(_u24()),
    "triangles": lambda: len(triangles(_w3())) == 4,
    "triads": lambda: len(triads(_w3())) == 4,
    "essential_elements": lambda: len(essential_elements(_w3())) == 6,
    "elements_in_triads": lambda: elements_in_triads(_w3()) == 6,
    "uniform": lambda: (lambda M: (M.n, M.r, len(M.bases())))(_u24()) == (4, 2, 6),
    "wheel": lambda: (lambda M: (M.n, M.r))(_w3()) == (6, 3),
    "whirl": lambda: (lambda M: (M.n, M.r))(whirl(3)[0]) == (6, 3) and not are_isomorphic(whirl(3)[0], _w3()),
    "canonical_form": lambda: CanonicalForm.from_key(canonical_form(_w3()).key) == canonical_form(_w3()),
    "are_isomorphic": lambda: are_isomorphic(_w3().relabel([5, 4, 3, 2, 1, 0]), _w3()),
    "recognize_wheel_or_whirl": _recognized_wheel4,
    "flats": lambda: len(flats(_u24())) == 6,
    "modular_cuts": lambda: len(modular_cuts(uniform(2, 3))) == 6,
    "extend": _free_extension,
    "enumerate_matroids": lambda: sum(1 for _ in enumerate_matroids(3)) == 15,
    "naive_enumerate": lambda: naive_enumerate(3)[0] == 8,
    "census": lambda: len(census(3)) == 15 and len(census(3, ["3connected"])) == 5,
}


def suite_coverage() -> SuiteReport:
    report = SuiteReport("coverage", scope=f"{len(REQUIRED_OPERATIONS)} operations on fixtures")
    for name in REQUIRED_OPERATIONS:
        check = CHECKS.get(name)
        if check is None:
            report.fail(name, "no coverage check registered")
            continue
        try:
            ok = bool(check())
        except Exception as e:
            logger.error(f"Coverage check {name} raised: {e}")
            ok = False
        report.check(ok, name, "fixture check returned false or raised")
    return report.finish()
