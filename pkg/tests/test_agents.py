"""Tests for suite reports, the verification corpus and every suite agent."""

from dataclasses import replace
from fractions import Fraction

import pytest

from agents import coverage
from agents.background_agent import separation_violation, suite_background
from agents.brittle_agent import suite_brittle
from agents.census_agent import census_agent
from agents.corpus import build_corpus
from agents.coverage import CHECKS, REQUIRED_OPERATIONS, suite_coverage
from agents.density_agent import equality_classes, suite_density
from agents.reduction_agent import (
    co_deletion_sm3c,
    si_contraction_3connected,
    suite_lemma31,
    suite_lemma32,
    suite_wheel_growth,
)
from agents.report import FAIL, PASS, SuiteReport, collect, instance_label
from agents.synthesis_agent import synthesis_agent
from agents.table1_agent import prop11_agent, suite_prop11, suite_table1, table1_agent
from agents.triad_agent import element_bound, suite_triads, triad_bound
from matroids.algebra import delete, two_sum
from matroids.errors import CapacityError
from matroids.matroid import Matroid
from tools.canonical import canonical_key
from tools.connectivity import is_brittle
from tools.constructions import uniform, wheel


def _tampered(records, key, **changes):
    return [
        replace(rec, flags=replace(rec.flags, **changes)) if rec.key == key else rec
        for rec in records
    ]


def _size_check(n):
    report = SuiteReport("sizes", quiet=True)
    report.check(n % 3 != 1, f"n{n}", "one more than a multiple of three")
    return report


# ==================== REPORTS ====================

class TestSuiteReport:

    def test_check_and_fail(self):
        report = SuiteReport("demo", scope="unit")
        assert report.check(True, "a", "", "first")
        assert not report.check(False, "b", "broken", "first")
        report.fail("c", "unattached")
        report.finish()
        assert report.checked == 2
        assert report.verdict == FAIL
        assert not report.passed
        data = report.to_json()
        assert data["counts"] == {"first": 2}
        assert data["fails"] == [{"cf": "b", "detail": "broken"}, {"cf": "c", "detail": "unattached"}]
        assert SuiteReport.from_json(data) == report

    def test_empty_report_passes(self):
        report = SuiteReport("empty").finish()
        assert report.verdict == PASS
        assert "counts" not in report.to_json()
        assert report.line().startswith('{"suite":"empty","checked":0')

    def test_instance_label(self, u24):
        assert instance_label(u24) == "cf1:n4-r2-fc"
        assert instance_label(wheel(7)[0]) == "wheel(7)"

    def test_merge_keeps_order_and_counts(self):
        report = SuiteReport("demo")
        for label in ("a", "b"):
            part = SuiteReport("demo", quiet=True)
            part.check(True, label, "", "x")
            part.check(False, label, f"{label} broken", "y")
            report.merge(part)
        assert report.checked == 4
        assert report.counts == {"x": 2, "y": 2}
        assert [f.cf for f in report.fails] == ["a", "b"]

    def test_collect_is_ordered(self):
        serial = collect(SuiteReport("sizes"), _size_check, range(12))
        parallel = collect(SuiteReport("sizes"), _size_check, range(12), workers=2)
        assert serial == parallel
        assert [f.cf for f in serial.fails] == ["n1", "n4", "n7", "n10"]

    def test_quiet_report_does_not_log(self, caplog):
        SuiteReport("demo", quiet=True).fail("a", "broken")
        assert caplog.records == []


# ==================== CORPUS ====================

class TestCorpus:

    def test_members(self, small_corpus):
        assert len(small_corpus.records) == 70
        assert len(small_corpus.constructed_members) == 4
        assert all(m.n > 0 for m in small_corpus.members())
        assert {m.k for m in small_corpus.members(kmax=3) if m.constructed} == {3}

    def test_sm3c_members(self, small_corpus):
        labels = {m.label for m in small_corpus.sm3c(min_size=4)}
        assert canonical_key(uniform(2, 4)) in labels
        assert canonical_key(uniform(3, 5)) in labels
        assert {"wheel(3)", "whirl(3)", "wheel(4)", "whirl(4)"} <= labels

    def test_records_are_truncated(self, census5):
        corpus = build_corpus(3, 3, records=census5)
        assert len(corpus.census_members) == 15
        assert len(corpus.constructed_members) == 2

    def test_census_agent(self, tmp_path):
        update = census_agent({"nmax": 2, "kmax": 3, "workers": 1, "cache_dir": str(tmp_path)})
        assert len(update["corpus"].records) == 7
        assert update["evidence_chain"][0].startswith("Corpus: 7 census classes")

    def test_census_agent_propagates_capacity_errors(self, tmp_path):
        with pytest.raises(CapacityError):
            census_agent({"nmax": 9, "kmax": 3, "cache_dir": str(tmp_path)})


# ==================== SUITES ====================

@pytest.mark.parametrize("suite", [
    suite_density,
    suite_lemma31,
    suite_lemma32,
    suite_wheel_growth,
    suite_brittle,
    suite_triads,
    suite_background,
])
def test_corpus_suites_pass(suite, small_corpus):
    report = suite(small_corpus)
    assert report.fails == []
    assert report.checked > 0


@pytest.mark.parametrize("suite", [suite_brittle, suite_triads, suite_background])
def test_corpus_suites_match_across_workers(suite, small_corpus):
    serial = suite(small_corpus).to_json()
    parallel = suite(small_corpus, workers=2).to_json()
    serial.pop("elapsed_s")
    parallel.pop("elapsed_s")
    assert serial == parallel


class TestSmallCensusSuites:

    def test_table1(self, census5):
        report = suite_table1(census5)
        assert report.passed
        assert report.checked == 6

    def test_table1_detects_a_missing_class(self, census5):
        key = canonical_key(uniform(2, 4))
        report = suite_table1(_tampered(census5, key, is_3connected=False))
        assert not report.passed
        assert report.fails[0].cf == key

    def test_prop11(self, census5):
        report = suite_prop11(census5)
        assert report.passed
        assert report.counts == {"class": 6, "bound": 6}

    def test_agent_wrappers(self, small_corpus):
        update = table1_agent({"corpus": small_corpus})
        assert update["completed_suites"] == ["table1"]
        assert update["reports"][0]["verdict"] == PASS
        assert prop11_agent({"corpus": small_corpus})["reports"][0]["suite"] == "prop11"


class TestDensity:

    def test_equality_classes(self):
        assert list(equality_classes(5).values()) == ["U2,4"]
        assert len(equality_classes(8)) == 5

    def test_detects_an_overfull_class(self, census5):
        key = canonical_key(uniform(2, 5))
        corpus = build_corpus(5, 3, records=_tampered(census5, key, is_sm_3connected=True))
        report = suite_density(corpus)
        assert any(f.cf == key and "exceeds 2r" in f.detail for f in report.fails)


class TestReductions:

    def test_wheel_elements(self, w4):
        # spoke 1: M/b has parallel pairs, co(M\b) is wheel(3)
        assert co_deletion_sm3c(w4, 1)
        assert not si_contraction_3connected(w4, 1)
        # rim 0: si(M/a) is wheel(3)
        assert si_contraction_3connected(w4, 0)

    def test_growth_counts(self, small_corpus):
        report = suite_wheel_growth(small_corpus)
        assert report.counts["growth"] == report.counts["triad"] > 0


class TestBrittle:

    def test_bounds(self):
        assert element_bound(8) == Fraction(70, 9)
        assert triad_bound(2) == 2

    def test_two_sum_converse_fails(self, u24):
        # rank 2 on four elements with 0 and 1 parallel
        doubled = Matroid.from_bases(4, [0b0101, 0b1001, 0b0110, 0b1010, 0b1100])
        combined = two_sum(u24, doubled, 0, 0)
        assert combined.is_simple()
        assert not is_brittle(combined)
        assert is_brittle(delete(u24, [0]))
        assert is_brittle(delete(doubled, [0]))


class TestBackground:

    def test_separation_growth(self, w4):
        for k in (1, 2, 3):
            assert separation_violation(w4, k) is None

    def test_detects_stale_records(self, census5):
        key = canonical_key(uniform(2, 3))
        corpus = build_corpus(3, 3, records=_tampered(census5, key, triad_count=1))
        report = suite_background(corpus)
        assert [f.cf for f in report.fails] == [key]
        assert report.fails[0].detail == "stored flags differ from recomputed flags"


# ==================== COVERAGE AND SYNTHESIS ====================

class TestCoverage:

    def test_every_operation_has_a_check(self):
        assert set(CHECKS) == set(REQUIRED_OPERATIONS)

    def test_passes(self):
        report = suite_coverage()
        assert report.fails == []
        assert report.checked == len(REQUIRED_OPERATIONS)

    def test_missing_and_raising_checks_fail(self, monkeypatch):
        monkeypatch.delitem(coverage.CHECKS, "rank")
        monkeypatch.setitem(coverage.CHECKS, "dual", lambda: 1 / 0)
        report = suite_coverage()
        assert [f.cf for f in report.fails] == ["rank", "dual"]


class TestSynthesis:

    @staticmethod
    def _state(reports, requested, **extra):
        state = {"reports": [r.to_json() for r in reports], "requested_suites": requested}
        state.update(extra)
        return state

    def test_pass(self):
        update = synthesis_agent(self._state([SuiteReport("table1").finish()], ["table1"]))
        assert update["verdict"] == PASS
        assert update["reports"] == []

    def test_missing_report_fails(self):
        update = synthesis_agent(self._state([], ["table1"]))
        assert update["verdict"] == FAIL
        assert "missing reports: table1" in update["evidence_chain"]

    def test_failed_report_fails(self):
        bad = SuiteReport("density")
        bad.fail("x", "broken")
        update = synthesis_agent(self._state([bad.finish()], ["density"]))
        assert update["verdict"] == FAIL
        assert "failed suites: density" in update["evidence_chain"]

    def test_error_fails_without_coverage(self):
        update = synthesis_agent(
            self._state([SuiteReport("table1").finish()], ["table1"], error_message="boom", run_coverage=True)
        )
        assert update["verdict"] == FAIL
        assert "completed_suites" not in update
