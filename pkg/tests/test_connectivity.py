"""Tests for the connectivity function and the predicates built on it."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from matroids.algebra import direct_sum, dual, minor
from matroids.errors import MatroidInputError
from tests.conftest import graphic_matroids, small_matroids
from tests.settings import SLOW_SETTINGS, STANDARD_SETTINGS
from tools.connectivity import (
    PropertyFlags,
    connectivity,
    elements_in_triads,
    essential_elements,
    find_k_separation,
    is_brittle,
    is_k_connected,
    is_minimally_k_connected,
    is_super_minimally_k_connected,
    lambda_profile,
    minor_is_k_connected,
    nonessential_elements,
    property_flags,
    triads,
    triangles,
)
from tools.constructions import uniform


class TestConnectivityFunction:

    def test_values(self, u24, w3):
        assert connectivity(u24, [0, 1]) == 2
        assert connectivity(uniform(3, 4), [0, 1]) == 1
        assert connectivity(w3, []) == 0
        assert connectivity(w3, [1, 2, 3]) == 2

    @given(M=small_matroids())
    @STANDARD_SETTINGS
    def test_profile_is_symmetric_and_self_dual(self, M):
        profile = lambda_profile(M)
        masks = np.arange(1 << M.n)
        assert np.array_equal(profile, profile[M.full ^ masks])
        assert np.array_equal(profile, lambda_profile(dual(M)))
        assert int(profile.min()) >= 0

    @given(M=small_matroids(), data=st.data())
    @STANDARD_SETTINGS
    def test_matches_profile(self, M, data):
        X = data.draw(st.integers(min_value=0, max_value=M.full))
        assert connectivity(M, X) == int(lambda_profile(M)[X])


class TestSeparations:

    def test_least_two_separation(self):
        witness = find_k_separation(uniform(3, 4), 2)
        assert witness is not None
        assert witness.side.indices() == (0, 1)
        assert witness.lambda_value == 1
        assert witness.to_json() == {"side": [0, 1], "order": 2, "lambda": 1, "nonminimal": False}

    def test_nonminimal_needs_bigger_sides(self):
        assert find_k_separation(uniform(3, 4), 2, require_nonminimal=True) is None

    def test_nonminimal_means_both_sides_exceed_the_order(self):
        # two rank-1 blocks of three parallel elements
        M = direct_sum(uniform(1, 3), uniform(1, 3))
        small = find_k_separation(M, 2)
        assert small.side.indices() == (0, 1)
        assert not small.nonminimal
        big = find_k_separation(M, 2, require_nonminimal=True)
        assert big.side.indices() == (0, 1, 2)
        assert (big.lambda_value, big.nonminimal) == (0, True)

    def test_wheel_has_only_exact_three_separations(self, w4):
        assert find_k_separation(w4, 2) is None
        witness = find_k_separation(w4, 3)
        assert witness is not None
        assert witness.lambda_value <= 2
        assert len(witness.side) >= 3

    def test_order_must_be_positive(self, u24):
        with pytest.raises(MatroidInputError):
            find_k_separation(u24, 0)
        with pytest.raises(MatroidInputError):
            is_k_connected(u24, 0)


class TestPredicates:

    def test_uniform_connectivity(self, u24):
        assert is_k_connected(u24, 3)
        assert is_k_connected(uniform(2, 5), 3)
        assert not is_k_connected(uniform(1, 4), 3)
        assert not is_k_connected(uniform(3, 4), 3)
        assert is_k_connected(uniform(3, 4), 2)

    def test_small_matroids_are_vacuously_connected(self):
        assert is_k_connected(uniform(1, 3), 3)
        assert is_k_connected(uniform(0, 1), 5)

    def test_super_minimal(self, u24, w3, w4, whirl3):
        for M in (u24, w3, w4, whirl3):
            assert is_super_minimally_k_connected(M, 3), M.name
        assert not is_super_minimally_k_connected(uniform(2, 5), 3)

    def test_super_minimal_two_connected_are_circuits(self, u24):
        assert is_super_minimally_k_connected(uniform(3, 4), 2)
        assert not is_super_minimally_k_connected(u24, 2)

    def test_minimally_three_connected(self, w3, w4):
        assert is_minimally_k_connected(w3, 3)
        assert is_minimally_k_connected(w4, 3)
        assert not is_minimally_k_connected(uniform(2, 5), 3)

    def test_brittle(self, w3):
        assert is_brittle(uniform(3, 4))
        assert is_brittle(uniform(2, 3))
        assert not is_brittle(w3)
        assert not is_brittle(uniform(2, 5))
        with pytest.raises(MatroidInputError):
            is_brittle(uniform(1, 3))

    @given(M=graphic_matroids(max_edges=7), data=st.data())
    @SLOW_SETTINGS
    def test_minor_check_matches_built_minor(self, M, data):
        deleted = data.draw(st.integers(min_value=0, max_value=M.full))
        contracted = data.draw(st.integers(min_value=0, max_value=M.full)) & ~deleted
        ground = M.full & ~deleted & ~contracted
        N, _ = minor(M, deleted=deleted, contracted=contracted)
        for k in (2, 3):
            assert minor_is_k_connected(M, ground, contracted, k) == is_k_connected(N, k)

    @given(M=graphic_matroids(max_edges=8))
    @SLOW_SETTINGS
    def test_super_minimal_implies_minimal_from_five_elements(self, M):
        if M.n >= 5 and is_super_minimally_k_connected(M, 3):
            assert is_minimally_k_connected(M, 3)
        if is_k_connected(M, 3):
            assert is_k_connected(M, 2)


class TestTrianglesAndTriads:

    def test_wheel(self, w4):
        assert len(triangles(w4)) == 4
        assert len(triads(w4)) == 4
        assert elements_in_triads(w4) == 8

    def test_uniform(self):
        assert len(triangles(uniform(2, 5))) == 10
        assert triads(uniform(2, 5)) == []
        assert len(triads(uniform(3, 5))) == 10
        assert triangles(uniform(3, 4)) == []

    def test_duality_swaps_triangles_and_triads(self, whirl3):
        assert [t.bits for t in triads(dual(whirl3))] == [t.bits for t in triangles(whirl3)]


class TestEssentialElements:

    def test_every_wheel_element_is_essential(self, w4, whirl3):
        assert essential_elements(w4).bits == w4.full
        assert essential_elements(whirl3).bits == whirl3.full
        assert not nonessential_elements(w4)

    def test_uniform_elements_are_not_essential(self):
        assert nonessential_elements(uniform(2, 5)).bits == 0b11111

    def test_requires_three_connected(self):
        with pytest.raises(MatroidInputError):
            essential_elements(uniform(3, 4))


class TestPropertyFlags:

    def test_wheel3(self, w3):
        flags = property_flags(w3)
        assert flags == PropertyFlags(
            is_3connected=True,
            is_min_3connected=True,
            is_sm_3connected=True,
            is_brittle=False,
            triangle_count=4,
            triad_count=4,
            elements_in_triads=6,
            essential_count=6,
        )

    def test_four_circuit(self):
        flags = property_flags(uniform(3, 4))
        assert not flags.is_3connected
        assert flags.is_brittle
        assert flags.essential_count is None

    def test_non_simple_is_not_brittle(self):
        assert not property_flags(uniform(1, 3)).is_brittle

    def test_json_keys(self, w3):
        data = property_flags(w3).to_json()
        assert set(data) == {"3c", "min3c", "sm3c", "brittle", "triangles", "triads", "eit", "essential"}
        assert PropertyFlags.from_json(data) == property_flags(w3)
