"""
Reduction Agent

Structural reductions of super-minimally 3-connected matroids:
- lemma31: for sm3c M with |E| >= 5 and every e, si(M/e) is 3-connected or
  co(M\\e) is sm3c
- lemma32: for sm3c M with |E| >= 7 and every triangle, some element x of
  the triangle has co(M\\x) sm3c
- wheelgrowth: for minimally 3-connected M and every ordered pair (x, y)
  with M\\x/y a wheel or whirl of rank k, M is a wheel or whirl of rank
  k + 1 and {x, y} lies in a triad of M

Role: Reduction lemma suites
"""

import logging
from typing import Any, Dict

from agents.corpus import Corpus, Member
from agents.report import SuiteReport, collect
from matroids.algebra import contract, cosimplify, delete, minor, simplify
from matroids.matroid import Matroid
from tools.connectivity import (
    is_k_connected,
    is_super_minimally_k_connected,
    minor_is_k_connected,
    triads,
    triangles,
)
from tools.recognition import recognize_wheel_or_whirl
from workflow.state import report_update

logger = logging.getLogger(__name__)

# constructed members used by the reduction suites
REDUCTION_KMAX = 6


def si_contraction_3connected(M: Matroid, e: int) -> bool:
    simple, _ = simplify(contract(M, 1 << e))
    return is_k_connected(simple, 3)


def co_deletion_sm3c(M: Matroid, e: int) -> bool:
    cosimple, _ = cosimplify(delete(M, 1 << e))
    return is_super_minimally_k_connected(cosimple, 3)


# ==================== SUITES ====================

def _lemma31_instance(m: Member) -> SuiteReport:
    report = SuiteReport("lemma31", quiet=True)
    for e in range(m.n):
        ok = si_contraction_3connected(m.matroid, e) or co_deletion_sm3c(m.matroid, e)
        report.check(ok, m.label, f"element {e}: si(M/e) not 3-connected and co(M\\e) not sm3c")
    return report


def suite_lemma31(corpus: Corpus, workers: int = 1) -> SuiteReport:
    report = SuiteReport(
        "lemma31",
        scope=f"sm3c with |E|>=5: census n<={corpus.nmax}, wheels and whirls k<={min(corpus.kmax, REDUCTION_KMAX)}",
    )
    return collect(report, _lemma31_instance, corpus.sm3c(min_size=5, kmax=REDUCTION_KMAX), workers).finish()


def _lemma32_instance(m: Member) -> SuiteReport:
    report = SuiteReport("lemma32", quiet=True)
    reducible: Dict[int, bool] = {}
    for triangle in triangles(m.matroid):
        for x in triangle:
            if x not in reducible:
                reducible[x] = co_deletion_sm3c(m.matroid, x)
        ok = any(reducible[x] for x in triangle)
        report.check(ok, m.label, f"triangle {triangle}: no x with co(M\\x) sm3c")
    return report


def suite_lemma32(corpus: Corpus, workers: int = 1) -> SuiteReport:
    report = SuiteReport(
        "lemma32",
        scope=f"sm3c with |E|>=7: census n<={corpus.nmax}, wheels and whirls k<={min(corpus.kmax, REDUCTION_KMAX)}",
    )
    return collect(report, _lemma32_instance, corpus.sm3c(min_size=7, kmax=REDUCTION_KMAX), workers).finish()


def _growth_instance(m: Member) -> SuiteReport:
    report = SuiteReport("wheelgrowth", quiet=True)
    M = m.matroid
    grown = None
    recognized = False
    triad_masks = [t.bits for t in triads(M)]
    for y in range(M.n):
        for x in range(M.n):
            if x == y:
                continue
            ground = M.full ^ (1 << x) ^ (1 << y)
            if not minor_is_k_connected(M, ground, 1 << y, 3):
                continue
            reduced, _ = minor(M, deleted=1 << x, contracted=1 << y)
            small = recognize_wheel_or_whirl(reduced)
            if small is None:
                continue
            if not recognized:
                grown = recognize_wheel_or_whirl(M)
                recognized = True
            ok = grown is not None and grown.k == small.k + 1
            report.check(
                ok,
                m.label,
                f"M\\{x}/{y} is {small.label} but M is {grown.label if grown else 'no wheel or whirl'}",
                "growth",
            )
            pair = 1 << x | 1 << y
            in_triad = any(t & pair == pair for t in triad_masks)
            report.check(in_triad, m.label, f"M\\{x}/{y} is {small.label} but {{{x},{y}}} is in no triad", "triad")
    return report


def suite_wheel_growth(corpus: Corpus, workers: int = 1) -> SuiteReport:
    report = SuiteReport(
        "wheelgrowth",
        scope=f"minimally 3-connected: census n<={corpus.nmax}, wheels and whirls k<={min(corpus.kmax, REDUCTION_KMAX)}",
    )
    members = corpus.members(lambda m: m.flags.is_min_3connected, kmax=REDUCTION_KMAX)
    return collect(report, _growth_instance, members, workers).finish()


# ==================== AGENT ====================

class ReductionAgent:
    """
    Specialist agent for the reduction lemmas and wheel growth.
    """

    SUITES = {
        "lemma31": suite_lemma31,
        "lemma32": suite_lemma32,
        "wheelgrowth": suite_wheel_growth,
    }

    def run(self, state: Dict[str, Any], suite: str) -> Dict[str, Any]:
        logger.info(f"Running suite {suite}")
        return report_update(self.SUITES[suite](state["corpus"], state.get("workers", 1)))


def lemma31_agent(state: Dict[str, Any]) -> Dict[str, Any]:
    """Entry point for LangGraph workflow."""
    return ReductionAgent().run(state, "lemma31")


def lemma32_agent(state: Dict[str, Any]) -> Dict[str, Any]:
    return ReductionAgent().run(state, "lemma32")


def wheel_growth_agent(state: Dict[str, Any]) -> Dict[str, Any]:
    return ReductionAgent().run(state, "wheelgrowth")
