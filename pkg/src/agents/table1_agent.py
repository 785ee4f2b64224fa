"""
Small Census Agent

Checks the classification claims that are read straight off the census:
- table1: the 3-connected classes on at most four elements are exactly
  U_{0,1}, U_{1,1}, U_{1,2}, U_{1,3}, U_{2,3}, U_{2,4}
- prop11: the super-minimally 2-connected classes are exactly U_{1,1} and
  the circuits U_{r,r+1}, each with |E| <= r + 1

State keys read:
  - corpus   (census records)

State keys written:
  - reports, completed_suites, evidence_chain   (appended)

Role: Census classification suites
"""

import logging
from collections import Counter
from functools import partial
from typing import Any, Dict, Optional, Sequence

from agents.report import SuiteReport, collect
from tools.canonical import canonical_key
from tools.census import CensusRecord, apply_filters, census
from tools.constructions import uniform
from workflow.state import report_update

logger = logging.getLogger(__name__)

TABLE1_CLASSES = ((0, 1), (1, 1), (1, 2), (1, 3), (2, 3), (2, 4))
"""(r, n) of the uniform matroids listed as the 3-connected classes on <= 4 elements."""

TABLE1_SIZES = {1: 2, 2: 1, 3: 2, 4: 1}


# ==================== SUITES ====================

def _listed_instance(rec: CensusRecord, expected: Dict[str, str]) -> SuiteReport:
    report = SuiteReport("table1", quiet=True)
    report.check(rec.key in expected, rec.key, "3-connected class missing from the listed six")
    return report


def suite_table1(records: Optional[Sequence[CensusRecord]] = None, workers: int = 1) -> SuiteReport:
    """3-connected census classes on at most four elements."""
    report = SuiteReport("table1", scope="census n<=4")
    if records is None:
        records = census(4, workers=workers)
    found = apply_filters([rec for rec in records if rec.n <= 4], ["3connected"])
    expected = {canonical_key(uniform(r, n)): f"U{r},{n}" for r, n in TABLE1_CLASSES}

    collect(report, partial(_listed_instance, expected=expected), found, workers)
    found_keys = {rec.key for rec in found}
    for key, name in expected.items():
        if key not in found_keys:
            report.fail(key, f"listed class {name} not 3-connected in the census")

    sizes = dict(Counter(rec.n for rec in found))
    if sizes != TABLE1_SIZES:
        report.fail("census", f"size partition {sorted(sizes.items())} differs from {sorted(TABLE1_SIZES.items())}")
    return report.finish()


def _circuit_instance(rec: CensusRecord, expected: Dict[str, str]) -> SuiteReport:
    report = SuiteReport("prop11", quiet=True)
    report.check(rec.key in expected, rec.key, "super-minimally 2-connected but not U1,1 or a circuit", "class")
    report.check(rec.n <= rec.r + 1, rec.key, f"|E|={rec.n} exceeds r+1={rec.r + 1}", "bound")
    return report


def suite_prop11(
    records: Optional[Sequence[CensusRecord]] = None,
    nmax: int = 8,
    workers: int = 1,
) -> SuiteReport:
    """Super-minimally 2-connected classes are U_{1,1} and the circuits U_{r,r+1}."""
    if records is None:
        records = census(nmax, workers=workers)
    top = max((rec.n for rec in records), default=0)
    report = SuiteReport("prop11", scope=f"census n<={top}")

    expected = {canonical_key(uniform(1, 1)): "U1,1"}
    for r in range(top):
        expected[canonical_key(uniform(r, r + 1))] = f"U{r},{r + 1}"

    found = apply_filters(records, ["sm2c"])
    collect(report, partial(_circuit_instance, expected=expected), found, workers)
    found_keys = {rec.key for rec in found}
    for key, name in expected.items():
        if key not in found_keys:
            report.fail(key, f"{name} is not super-minimally 2-connected in the census")
    return report.finish()


# ==================== AGENT ====================

class SmallCensusAgent:
    """
    Specialist agent for the census classification suites.
    """

    def run(self, state: Dict[str, Any], suite: str) -> Dict[str, Any]:
        logger.info(f"Running suite {suite}")
        corpus = state["corpus"]
        workers = state.get("workers", 1)
        if suite == "table1":
            report = suite_table1(corpus.records if corpus.nmax >= 4 else None, workers)
        else:
            report = suite_prop11(corpus.records, corpus.nmax, workers)
        return report_update(report)


def table1_agent(state: Dict[str, Any]) -> Dict[str, Any]:
    """Entry point for LangGraph workflow."""
    return SmallCensusAgent().run(state, "table1")


def prop11_agent(state: Dict[str, Any]) -> Dict[str, Any]:
    return SmallCensusAgent().run(state, "prop11")
