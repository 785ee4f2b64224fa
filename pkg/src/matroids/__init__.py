"""
Matroid core: element sets, representations and the basic matroid algebra.
"""

from matroids.algebra import (
    circuits,
    cocircuits,
    contract,
    cosimplify,
    delete,
    direct_sum,
    dual,
    fundamental_circuit,
    minor,
    parallel_classes,
    relax_circuit_hyperplane,
    restrict,
    series_classes,
    simplify,
    two_sum,
    validate_bases,
)
from matroids.element_set import ElementMap, ElementSet
from matroids.errors import CapacityError, MatroidError, MatroidInputError
from matroids.matroid import Matroid
from matroids.matroid_io import format_matroid, parse_matroid, read_matroid, write_matroid
from matroids.representations import BasesRep, GraphicRep, LinearRep, UniformRep

__all__ = [
    "BasesRep",
    "CapacityError",
    "ElementMap",
    "ElementSet",
    "GraphicRep",
    "LinearRep",
    "Matroid",
    "MatroidError",
    "MatroidInputError",
    "UniformRep",
    "circuits",
    "cocircuits",
    "contract",
    "cosimplify",
    "delete",
    "direct_sum",
    "dual",
    "format_matroid",
    "fundamental_circuit",
    "minor",
    "parallel_classes",
    "parse_matroid",
    "read_matroid",
    "relax_circuit_hyperplane",
    "restrict",
    "series_classes",
    "simplify",
    "two_sum",
    "validate_bases",
    "write_matroid",
]
