"""
Brittle Agent

Checks the brittle-matroid bounds and how brittleness behaves under sums:
- bound: triangle-free brittle classes other than U_{1,1} have |E| <= 2r - 2
- sm3c-bound: triangle-free sm3c classes with |E| >= 4 have |E| <= 2r - 1
- direct-sum: M1 + M2 is brittle iff both parts are
- two-sum: if a 2-sum of 2-connected parts is brittle, each part with its
  basepoint deleted is brittle
- deletion: every single-element deletion of an sm3c matroid with at least
  four elements is brittle

The converse of the two-sum statement is false and is not checked.

Role: Brittle matroid suite
"""

import logging
from functools import partial
from itertools import product
from typing import Any, Dict, List, Tuple

from agents.corpus import Corpus, Member
from agents.report import SuiteReport, collect
from matroids.algebra import delete, direct_sum, two_sum
from matroids.matroid import Matroid
from tools.canonical import canonical_key
from tools.connectivity import is_brittle, is_k_connected
from tools.constructions import uniform
from workflow.state import report_update

logger = logging.getLogger(__name__)

# largest part used for the sum checks
PART_NMAX = 5

# constructed members used for the deletion check
DELETION_KMAX = 6


def _parts(corpus: Corpus, where) -> List[Member]:
    return [m for m in corpus.census_members if 1 <= m.n <= PART_NMAX and where(m)]


def _bound_instance(m: Member, exception: str) -> SuiteReport:
    report = SuiteReport("brittle", quiet=True)
    if m.flags.triangle_count:
        return report
    if m.flags.is_brittle and m.label != exception:
        report.check(m.n <= 2 * m.r - 2, m.label, f"|E|={m.n} exceeds 2r-2={2 * m.r - 2}", "bound")
    if m.flags.is_sm_3connected and m.n >= 4:
        report.check(m.n <= 2 * m.r - 1, m.label, f"|E|={m.n} exceeds 2r-1={2 * m.r - 1}", "sm3c-bound")
    return report


def _direct_sum_instance(pair: Tuple[Member, Member]) -> SuiteReport:
    report = SuiteReport("brittle", quiet=True)
    first, second = pair
    combined = direct_sum(first.matroid, second.matroid)
    expected = first.flags.is_brittle and second.flags.is_brittle
    report.check(
        is_brittle(combined) == expected,
        f"{first.label}+{second.label}",
        f"direct sum brittle={not expected}, parts brittle={first.flags.is_brittle},{second.flags.is_brittle}",
        "direct-sum",
    )
    return report


def _usable_basepoints(M: Matroid) -> List[int]:
    blocked = M.loops() | M.coloops()
    return [p for p in range(M.n) if not blocked >> p & 1]


def _two_sum_instance(pair: Tuple[Member, Member]) -> SuiteReport:
    report = SuiteReport("brittle", quiet=True)
    first, second = pair
    for p1 in _usable_basepoints(first.matroid):
        for p2 in _usable_basepoints(second.matroid):
            combined = two_sum(first.matroid, second.matroid, p1, p2)
            if not combined.is_simple() or not is_brittle(combined):
                continue
            left = delete(first.matroid, 1 << p1)
            right = delete(second.matroid, 1 << p2)
            ok = is_brittle(left) and is_brittle(right)
            report.check(
                ok,
                f"{first.label}@{p1}+{second.label}@{p2}",
                "brittle 2-sum with a part that is not brittle after deleting its basepoint",
                "two-sum",
            )
    return report


def _deletion_instance(m: Member) -> SuiteReport:
    report = SuiteReport("brittle", quiet=True)
    for e in range(m.n):
        reduced = delete(m.matroid, 1 << e)
        ok = reduced.is_simple() and is_brittle(reduced)
        report.check(ok, m.label, f"M\\{e} is not brittle", "deletion")
    return report


def suite_brittle(corpus: Corpus, workers: int = 1) -> SuiteReport:
    report = SuiteReport(
        "brittle",
        scope=(
            f"census n<={corpus.nmax}, wheels and whirls k<={corpus.kmax}; "
            f"sums over census parts with n<={PART_NMAX}"
        ),
    )
    bound = partial(_bound_instance, exception=canonical_key(uniform(1, 1)))
    collect(report, bound, corpus.members(), workers)

    simple = _parts(corpus, lambda m: m.matroid.is_simple())
    pairs = [(first, second) for i, first in enumerate(simple) for second in simple[i:]]
    collect(report, _direct_sum_instance, pairs, workers)

    connected = _parts(corpus, lambda m: m.n >= 3 and is_k_connected(m.matroid, 2))
    collect(report, _two_sum_instance, product(connected, repeat=2), workers)

    collect(report, _deletion_instance, corpus.sm3c(min_size=4, kmax=DELETION_KMAX), workers)
    return report.finish()


class BrittleAgent:
    """
    Specialist agent for brittle matroids.
    """

    def run(self, state: Dict[str, Any]) -> Dict[str, Any]:
        logger.info("Running suite brittle")
        return report_update(suite_brittle(state["corpus"], state.get("workers", 1)))


def brittle_agent(state: Dict[str, Any]) -> Dict[str, Any]:
    """Entry point for LangGraph workflow."""
    return BrittleAgent().run(state)
