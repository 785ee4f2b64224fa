"""Tests for census records, filters, caching and the summary tables."""

import io
import json

import pytest

from matroids.errors import CapacityError, MatroidInputError
from tools import census as census_module
from tools.canonical import canonical_form, canonical_key
from tools.census import (
    FILTERS,
    CensusRecord,
    apply_filters,
    cache_path,
    census,
    class_counts,
    classify,
    duality_asymmetries,
    load_census,
    load_records,
    missing_duals,
    records_frame,
    save_records,
    write_records,
)
from tools.constructions import uniform


def _keys(records):
    return {rec.key for rec in records}


class TestRecords:

    def test_classify_u24(self, u24):
        record = classify(canonical_form(u24))
        assert (record.n, record.r) == (4, 2)
        assert record.flags.is_3connected
        assert record.flags.triangle_count == 4
        assert record.matroid() == u24

    def test_line_format(self, u24):
        data = json.loads(classify(canonical_form(u24)).line())
        assert list(data)[:3] == ["cf", "n", "r"]
        assert data["cf"] == "cf1:n4-r2-fc"
        assert data["essential"] == 0
        assert "sep" not in data

    def test_from_json_rejects_inconsistent_records(self, u24):
        data = classify(canonical_form(u24)).to_json()
        with pytest.raises(MatroidInputError):
            CensusRecord.from_json({**data, "n": 5})
        with pytest.raises(MatroidInputError):
            CensusRecord.from_json({k: v for k, v in data.items() if k != "triads"})
        with pytest.raises(MatroidInputError):
            CensusRecord.from_json({**data, "cf": "nonsense"})


class TestBuild:

    def test_class_counts(self, census5):
        counts = class_counts(census5)
        assert counts.sum(axis=1).tolist() == [1, 2, 4, 8, 17, 38]
        assert counts.loc[4].tolist() == [1, 4, 7, 4, 1, 0]
        assert duality_asymmetries(counts) == []
        assert missing_duals(census5) == []

    def test_sorted_and_unique(self, census5):
        keys = [rec.sort_key() for rec in census5]
        assert keys == sorted(keys)
        assert len(_keys(census5)) == len(census5)

    def test_frame_columns(self, census5):
        frame = records_frame(census5)
        assert {"cf", "n", "r", "3c", "sm3c", "brittle", "essential"} <= set(frame.columns)
        assert len(frame) == 70

    def test_asymmetry_is_reported(self, census5):
        lopsided = [rec for rec in census5 if not (rec.n == 3 and rec.r == 1)]
        problems = duality_asymmetries(class_counts(lopsided))
        assert problems == [
            "n=3: 0 classes of rank 1 but 3 of rank 2",
            "n=3: 3 classes of rank 2 but 0 of rank 1",
        ]
        assert missing_duals(lopsided)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            census(9)


class TestFilters:

    def test_three_connected(self, census5):
        found = apply_filters(census5, ["3connected"])
        assert len(found) == 8
        assert canonical_key(uniform(2, 4)) in _keys(found)
        assert all(rec.n > 0 for rec in found)

    def test_super_minimal(self, census5):
        found = apply_filters(census5, ["sm3c"])
        assert _keys(found) <= _keys(apply_filters(census5, ["3connected"]))
        assert canonical_key(uniform(3, 5)) in _keys(found)
        assert canonical_key(uniform(2, 5)) not in _keys(found)
        assert len(found) == 7

    def test_super_minimal_two_connected_are_circuits(self, census5):
        expected = {canonical_key(uniform(0, 1)), canonical_key(uniform(1, 1))}
        expected |= {canonical_key(uniform(n - 1, n)) for n in range(2, 6)}
        assert _keys(apply_filters(census5, ["sm2c"])) == expected

    def test_combined_filters(self, census5):
        found = apply_filters(census5, ["3connected", "trianglefree"])
        assert all(rec.flags.triangle_count == 0 for rec in found)
        assert canonical_key(uniform(3, 5)) in _keys(found)
        assert canonical_key(uniform(2, 4)) not in _keys(found)

    def test_brittle(self, census5):
        keys = _keys(apply_filters(census5, ["brittle"]))
        assert canonical_key(uniform(3, 4)) in keys
        assert canonical_key(uniform(2, 4)) not in keys
        assert canonical_key(uniform(1, 2)) not in keys

    def test_unknown_filter(self, census5):
        with pytest.raises(MatroidInputError):
            apply_filters(census5, ["planar"])
        assert "planar" not in FILTERS


class TestPersistence:

    def test_write_and_load(self, census5, tmp_path):
        buffer = io.StringIO()
        assert write_records(census5[:10], buffer) == 10
        path = tmp_path / "nested" / "census.ndjson"
        save_records(census5, path)
        assert load_records(path) == census5

    def test_bad_line_names_the_location(self, tmp_path):
        path = tmp_path / "bad.ndjson"
        path.write_text('{"cf": "cf1:n0-r0-8"}\nnot json\n', encoding="utf-8")
        with pytest.raises(MatroidInputError, match="bad.ndjson:1"):
            load_records(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(MatroidInputError):
            load_records(tmp_path / "absent.ndjson")

    def test_cache_is_truncated(self, census5, tmp_path, monkeypatch):
        save_records(census5, cache_path(tmp_path, 5))

        def no_build(*args, **kwargs):
            raise AssertionError("census rebuilt despite cache")

        monkeypatch.setattr(census_module, "build_census", no_build)
        records = load_census(3, cache_dir=tmp_path)
        assert len(records) == 15
        assert all(rec.n <= 3 for rec in records)

    def test_fresh_build_is_cached(self, tmp_path):
        records = load_census(2, cache_dir=tmp_path)
        assert len(records) == 7
        assert load_records(cache_path(tmp_path, 2)) == records


class TestWitnesses:

    def test_only_separable_classes_get_witnesses(self, tmp_path):
        records = census(3, witnesses=True, cache_dir=tmp_path)
        for rec in records:
            if rec.flags.is_3connected:
                assert rec.witness is None
            else:
                assert rec.witness["order"] in (1, 2)
                assert "sep" in rec.to_json()

    def test_two_coloops(self, tmp_path):
        key = canonical_key(uniform(2, 2))
        record = next(rec for rec in census(2, witnesses=True, cache_dir=tmp_path) if rec.key == key)
        assert record.witness == {"side": [0], "order": 1, "lambda": 0, "nonminimal": False}
