"""
Triad Agent

Lower bounds on triads in super-minimally 3-connected matroids:
- elements: sm3c with |E| >= 8 has at least (5|E| + 30) / 9 elements in triads
- count: sm3c with |E| >= 4 has at least (r + 6) / 4 triads

Bounds are compared as exact fractions.

Role: Triad bound suite
"""

import logging
from fractions import Fraction
from typing import Any, Dict

from agents.corpus import Corpus, Member
from agents.report import SuiteReport, collect
from workflow.state import report_update

logger = logging.getLogger(__name__)


def element_bound(n: int) -> Fraction:
    return Fraction(5 * n + 30, 9)


def triad_bound(r: int) -> Fraction:
    return Fraction(r + 6, 4)


def _triad_instance(m: Member) -> SuiteReport:
    report = SuiteReport("triads", quiet=True)
    if m.n >= 8:
        bound = element_bound(m.n)
        report.check(
            m.flags.elements_in_triads >= bound,
            m.label,
            f"{m.flags.elements_in_triads} elements in triads, need >= {bound}",
            "elements",
        )
    bound = triad_bound(m.r)
    report.check(
        m.flags.triad_count >= bound,
        m.label,
        f"{m.flags.triad_count} triads, need >= {bound}",
        "count",
    )
    return report


def suite_triads(corpus: Corpus, workers: int = 1) -> SuiteReport:
    report = SuiteReport(
        "triads",
        scope=f"sm3c: census n<={corpus.nmax}, wheels and whirls k<={corpus.kmax}",
    )
    return collect(report, _triad_instance, corpus.sm3c(min_size=4), workers).finish()


class TriadAgent:
    """
    Specialist agent for the triad bounds.
    """

    def run(self, state: Dict[str, Any]) -> Dict[str, Any]:
        logger.info("Running suite triads")
        return report_update(suite_triads(state["corpus"], state.get("workers", 1)))


def triad_agent(state: Dict[str, Any]) -> Dict[str, Any]:
    """Entry point for LangGraph workflow."""
    return TriadAgent().run(state)
