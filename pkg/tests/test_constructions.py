"""Tests for named constructions, canonical forms, isomorphism and wheel recognition."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from matroids.algebra import dual
from matroids.errors import CapacityError, MatroidInputError
from tests.conftest import graphic_matroids
from tests.settings import DETERMINISM_SETTINGS, STANDARD_SETTINGS
from tools.canonical import (
    CanonicalForm,
    are_isomorphic,
    canonical_form,
    canonical_key,
    find_isomorphism,
    matroid_from_key,
)
from tools.connectivity import triangles
from tools.constructions import WheelLabeling, build_named, uniform, wheel, wheel_graph, whirl
from tools.recognition import is_wheel_or_whirl, recognize_wheel_or_whirl


# ==================== CONSTRUCTIONS ====================

class TestConstructions:

    def test_uniform(self):
        M = uniform(2, 5)
        assert (M.n, M.r, M.name) == (5, 2, "U2,5")
        with pytest.raises(MatroidInputError):
            uniform(4, 3)

    def test_wheel_and_whirl_shapes(self):
        M, labeling = wheel(4)
        assert (M.n, M.r, M.name) == (8, 4, "wheel(4)")
        assert labeling.label == "wheel(4)"
        W, labeling = whirl(4)
        assert (W.n, W.r, W.name) == (8, 4, "whirl(4)")
        assert len(W.bases()) == len(M.bases()) + 1
        assert labeling.kind == "whirl"

    def test_standard_labeling(self):
        _, labeling = wheel(3)
        assert labeling.rim == (0, 2, 4)
        assert labeling.spokes == (1, 3, 5)
        assert labeling.standard_order() == list(range(6))
        assert labeling.triangle_masks()[0] == 0b001110

    @pytest.mark.parametrize("k", [2, 3, 5])
    def test_wheel_graph_edges_follow_the_labeling(self, k):
        edges = wheel_graph(k).edges
        assert len(edges) == 2 * k
        for i in range(1, k + 1):
            assert set(edges[2 * i - 2]) == {k if i == 1 else i - 1, i}
            assert set(edges[2 * i - 1]) == {0, i}

    @pytest.mark.parametrize("factory", [wheel, whirl])
    def test_too_small(self, factory):
        with pytest.raises(MatroidInputError):
            factory(1)

    def test_whirl_capacity(self):
        with pytest.raises(CapacityError):
            whirl(13)

    def test_bad_labeling(self):
        with pytest.raises(MatroidInputError):
            WheelLabeling("fan", 2, (0, 2), (1, 3))
        with pytest.raises(MatroidInputError):
            WheelLabeling("wheel", 3, (0, 2), (1, 3, 5))

    def test_build_named(self, u24, w3):
        assert build_named("uniform", [2, 4]) == u24
        assert build_named("wheel", [3]) == w3
        assert build_named("whirl", [2]) == u24
        with pytest.raises(MatroidInputError):
            build_named("wheel", [3, 4])
        with pytest.raises(MatroidInputError):
            build_named("fano", [])


# ==================== CANONICAL FORMS ====================

class TestCanonicalForm:

    def test_known_keys(self, u24):
        assert canonical_key(u24) == "cf1:n4-r2-fc"
        assert canonical_key(uniform(0, 3)) == "cf1:n3-r0-8"
        assert canonical_key(uniform(3, 3)) == "cf1:n3-r3-8"

    def test_key_decodes_to_the_same_class(self, u24, w3):
        assert matroid_from_key(canonical_key(u24)) == u24
        form = canonical_form(w3)
        assert CanonicalForm.from_key(form.key) == form
        assert are_isomorphic(form.to_matroid(), w3)

    @pytest.mark.parametrize("key", [
        "xyz",
        "cf2:n4-r2-fc",
        "cf1:n2-r3-8",
        "cf1:n4-r2-f",
        "cf1:n4-r2-fd",
    ])
    def test_malformed_keys(self, key):
        with pytest.raises(MatroidInputError):
            CanonicalForm.from_key(key)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            canonical_form(uniform(2, 13))

    @given(M=graphic_matroids(max_vertices=5, max_edges=7), data=st.data())
    @DETERMINISM_SETTINGS
    def test_invariant_under_relabeling(self, M, data):
        perm = data.draw(st.permutations(list(range(M.n))))
        assert canonical_form(M.relabel(perm)) == canonical_form(M)

    @given(M=graphic_matroids(max_vertices=5, max_edges=7))
    @STANDARD_SETTINGS
    def test_representative_is_isomorphic(self, M):
        if M.n == 0:
            return
        assert find_isomorphism(M, canonical_form(M).to_matroid()) is not None


class TestIsomorphism:

    def test_wheel_is_not_whirl(self, w3, whirl3):
        assert not are_isomorphic(w3, whirl3)
        assert find_isomorphism(w3, whirl3) is None

    def test_size_mismatch(self, u24):
        assert not are_isomorphic(u24, uniform(2, 5))
        assert find_isomorphism(u24, uniform(1, 4)) is None

    @given(data=st.data())
    @STANDARD_SETTINGS
    def test_found_map_carries_bases(self, data):
        w4 = wheel(4)[0]
        perm = data.draw(st.permutations(list(range(8))))
        target = w4.relabel(perm)
        phi = find_isomorphism(w4, target)
        assert phi is not None
        assert w4.relabel(phi) == target

    def test_beyond_canonical_capacity(self):
        M = wheel(7)[0]
        shuffled = M.relabel([(3 * e + 5) % 14 for e in range(14)])
        assert are_isomorphic(M, shuffled)
        assert not are_isomorphic(M, whirl(7)[0])


# ==================== RECOGNITION ====================

class TestRecognition:

    def test_wheels_and_whirls(self, u24, w4, whirl3):
        assert recognize_wheel_or_whirl(w4).label == "wheel(4)"
        assert recognize_wheel_or_whirl(whirl3).label == "whirl(3)"
        assert recognize_wheel_or_whirl(u24).label == "whirl(2)"

    def test_rejects_other_matroids(self):
        assert recognize_wheel_or_whirl(uniform(2, 5)) is None
        assert recognize_wheel_or_whirl(uniform(3, 6)) is None
        assert recognize_wheel_or_whirl(uniform(1, 2)) is None
        assert not is_wheel_or_whirl(uniform(2, 3))

    def test_dual_of_a_wheel_is_a_wheel(self, w4):
        assert is_wheel_or_whirl(dual(w4))

    @given(data=st.data())
    @STANDARD_SETTINGS
    def test_relabeled_whirl(self, data):
        perm = data.draw(st.permutations(list(range(10))))
        M = whirl(5)[0].relabel(perm)
        labeling = recognize_wheel_or_whirl(M)
        assert labeling is not None
        assert labeling.label == "whirl(5)"
        assert M.relabel(labeling.standard_order()) == whirl(5)[0]

    def test_beyond_canonical_capacity(self):
        M = wheel(7)[0].relabel([(5 * e + 3) % 14 for e in range(14)])
        labeling = recognize_wheel_or_whirl(M)
        assert labeling is not None
        assert labeling.label == "wheel(7)"
        assert {t.bits for t in triangles(M)} == set(labeling.triangle_masks())
