"""Tests for flats, modular cuts, single-element extensions and enumeration."""

from collections import Counter

import pytest

from matroids.errors import CapacityError, MatroidInputError
from tools.canonical import are_isomorphic, canonical_form, find_isomorphism
from tools.constructions import uniform
from tools.enumeration import (
    ModularCut,
    empty_matroid,
    enumerate_matroids,
    extend,
    flats,
    is_modular_cut,
    modular_cuts,
    naive_enumerate,
)

# Isomorphism classes of matroids on n elements, n = 0..8
KNOWN_CLASS_COUNTS = (1, 2, 4, 8, 17, 38, 98, 306, 1724)


class TestFlats:

    def test_uniform(self, u24):
        found = flats(u24)
        assert len(found) == 6
        assert found[0].bits == 0
        assert found[-1].bits == u24.full

    def test_wheel3_flats(self, w3):
        # empty set, 6 points, 4 triangles, 3 two-point lines, E
        assert len(flats(w3)) == 15

    def test_capacity(self):
        with pytest.raises(CapacityError):
            flats(uniform(2, 10))


class TestModularCuts:

    def test_triangle(self):
        cuts = modular_cuts(uniform(2, 3))
        assert len(cuts) == 6
        assert len(cuts[0]) == 0
        assert all(is_modular_cut(uniform(2, 3), cut) for cut in cuts)

    def test_rejects_non_cuts(self):
        M = uniform(2, 3)
        assert not is_modular_cut(M, ModularCut.of([0b111, 0b001, 0b010], 3))
        assert not is_modular_cut(M, ModularCut.of([0b001], 3))
        assert not is_modular_cut(M, ModularCut.of([0b111, 0b011], 3))
        assert not is_modular_cut(M, ModularCut.of([0b1111], 4))

    def test_membership(self):
        cut = ModularCut.of([0b111, 0b001], 3)
        assert 0b001 in cut
        assert 0b010 not in cut
        assert [f.bits for f in cut.flats] == [0b001, 0b111]


class TestExtend:

    def test_coloop_extension(self):
        M = extend(uniform(2, 3), ModularCut(3, ()))
        assert (M.n, M.r) == (4, 3)
        assert M.coloops() == 0b1000

    def test_free_extension(self, u24):
        assert extend(uniform(2, 3), ModularCut.of([0b111], 3)) == u24

    def test_parallel_and_loop_extensions(self):
        M = uniform(2, 3)
        parallel = extend(M, ModularCut.of([0b111, 0b001], 3))
        assert parallel.rank([0, 3]) == 1
        full_cut = ModularCut.of([f.bits for f in flats(M)], 3)
        assert extend(M, full_cut).loops() == 0b1000

    def test_invalid_cut(self):
        with pytest.raises(MatroidInputError):
            extend(uniform(2, 3), ModularCut.of([0b001], 3))

    def test_extensions_of_u23_cover_every_class(self):
        forms = {canonical_form(extend(uniform(2, 3), cut)).key for cut in modular_cuts(uniform(2, 3))}
        # coloop, free, parallel and loop extensions
        assert len(forms) == 4


class TestEnumeration:

    def test_empty_matroid(self):
        M = empty_matroid()
        assert (M.n, M.r) == (0, 0)

    def test_counts_to_five(self):
        per_level = Counter(form.n for form, _ in enumerate_matroids(5))
        assert [per_level[n] for n in range(6)] == list(KNOWN_CLASS_COUNTS[:6])

    def test_levels_are_ordered_and_representatives_match(self):
        pairs = list(enumerate_matroids(4))
        keys = [form.sort_key() for form, _ in pairs]
        assert keys == sorted(keys)
        for form, M in pairs:
            assert canonical_form(M) == form

    def test_negative_and_oversized(self):
        assert list(enumerate_matroids(-1)) == []
        with pytest.raises(CapacityError):
            list(enumerate_matroids(9))

    def test_parallel_workers_agree(self):
        serial = [form.key for form, _ in enumerate_matroids(4)]
        parallel = [form.key for form, _ in enumerate_matroids(4, workers=2)]
        assert serial == parallel

    def test_known_classes_on_four_elements(self, u24):
        level = [M for form, M in enumerate_matroids(4) if form.n == 4]
        assert any(are_isomorphic(M, u24) for M in level)
        assert sum(M.r == 2 for M in level) == 7


class TestNaiveOracle:

    @pytest.mark.parametrize("n", range(6))
    def test_agrees_with_extension(self, n):
        count, forms = naive_enumerate(n)
        assert count == KNOWN_CLASS_COUNTS[n]
        extension = sorted(
            (form for form, _ in enumerate_matroids(n) if form.n == n),
            key=lambda f: f.sort_key(),
        )
        assert forms == extension

    def test_input_limits(self):
        with pytest.raises(CapacityError):
            naive_enumerate(7)
        with pytest.raises(MatroidInputError):
            naive_enumerate(-1)

    @pytest.mark.slow
    def test_six_elements(self):
        count, forms = naive_enumerate(6)
        assert count == KNOWN_CLASS_COUNTS[6]
        extension = [form for form, _ in enumerate_matroids(6) if form.n == 6]
        assert {f.key for f in forms} == {f.key for f in extension}


@pytest.mark.slow
@pytest.mark.parametrize("n_max", [7, 8])
def test_known_counts_to_eight(n_max):
    per_level = Counter(form.n for form, _ in enumerate_matroids(n_max, workers=2))
    assert [per_level[n] for n in range(n_max + 1)] == list(KNOWN_CLASS_COUNTS[: n_max + 1])


@pytest.mark.slow
def test_classes_to_seven_are_pairwise_non_isomorphic():
    # the search does not use canonical forms, so this checks them independently
    by_size = {}
    for form, M in enumerate_matroids(7, workers=2):
        by_size.setdefault(form.n, []).append(M)
    for level in by_size.values():
        for i, first in enumerate(level):
            for second in level[i + 1:]:
                assert find_isomorphism(first, second) is None
