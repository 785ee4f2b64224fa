"""
Background Agent

Connectivity facts the reductions rest on, each checked over the corpus:
- separation: for a k-separation (X, Y) and e in Y lying in cl(X) or
  cl*(X), (X u e, Y - e) is a k-separation iff |Y - e| >= k (k = 1, 2, 3)
- bixby: 3-connected M with |E| >= 4 has si(M/e) or co(M\\e) 3-connected
  for every e
- triangle: if {e, f, g} is a triangle of a 3-connected M with |E| >= 4 and
  neither M\\e nor M\\f is 3-connected, a triad holds e and exactly one of f, g
- nonessential: a 3-connected M with |E| >= 4 that is not a wheel or whirl
  has at least two nonessential elements
- cocircuit: for an n-connected M with |E| >= 2(n - 1) (n = 2, 3), if M\\x/y
  is n-connected and M\\x is not, a cocircuit of size n holds x and y
- restriction: with |E| <= 2k - 2, sm-k-c is k-connectivity; with larger
  |E|, sm-k-c implies minimally k-connected (k = 2, 3)
- lambda: lambda_M = lambda_M* and lambda(X) = r(X) + r*(X) - |X|
- records: stored census flags match a fresh computation

Role: Background property suite
"""

import logging
from typing import Any, Dict, Optional

import numpy as np

from agents.corpus import Corpus, Member
from agents.report import SuiteReport, collect
from matroids.algebra import contract, cosimplify, delete, dual, simplify
from matroids.element_set import ElementSet
from matroids.kernels import masks_of_size, popcounts
from matroids.matroid import Matroid
from tools.connectivity import (
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
from tools.recognition import is_wheel_or_whirl
from workflow.state import report_update

logger = logging.getLogger(__name__)

# constructed members used by the background suite
BACKGROUND_KMAX = 6


# ==================== HELPERS ====================

def _cocircuit_masks(M: Matroid, size: int) -> np.ndarray:
    """size-element sets whose complement is a hyperplane."""
    table = M.rank_table()
    candidates = masks_of_size(M.n, size)
    rest = M.full ^ candidates
    ok = table[rest] == M.r - 1
    for i in range(M.n):
        has = ((candidates >> i) & 1).astype(bool)
        ok &= ~has | (table[rest | (1 << i)] == M.r)
    return candidates[ok]


def _deletion_connected(M: Matroid, e: int, k: int) -> bool:
    return minor_is_k_connected(M, M.full ^ (1 << e), 0, k)


def separation_violation(M: Matroid, k: int) -> Optional[str]:
    """First (X, e) where growing a k-separation by a spanned element misbehaves."""
    table = M.rank_table().astype(np.int16)
    n = M.n
    masks = np.arange(1 << n, dtype=np.int64)
    sizes = popcounts(n).astype(np.int16)
    lam = table + table[M.full ^ masks] - M.r
    separating = (sizes >= k) & (n - sizes >= k) & (lam <= k - 1)
    for e in range(n):
        bit = 1 << e
        X = masks[separating & ((masks & bit) == 0)]
        if X.size == 0:
            continue
        Y = M.full ^ X
        in_cl = table[X | bit] == table[X]
        in_cocl = table[Y ^ bit] == table[Y] - 1
        X = X[in_cl | in_cocl]
        expected = n - sizes[X] - 1 >= k
        bad = np.flatnonzero(separating[X | bit] != expected)
        if bad.size:
            side = ElementSet(int(X[bad[0]]), n)
            return f"k={k}, X={list(side.indices())}, e={e}"
    return None


# ==================== CHECKS ====================

def _check_separations(m: Member, report: SuiteReport) -> None:
    for k in (1, 2, 3):
        problem = separation_violation(m.matroid, k)
        report.check(problem is None, m.label, f"separation growth fails at {problem}", "separation")


def _check_bixby(m: Member, report: SuiteReport) -> None:
    M = m.matroid
    for e in range(M.n):
        simple, _ = simplify(contract(M, 1 << e))
        if is_k_connected(simple, 3):
            report.check(True, m.label, "", "bixby")
            continue
        cosimple, _ = cosimplify(delete(M, 1 << e))
        report.check(
            is_k_connected(cosimple, 3),
            m.label,
            f"element {e}: neither si(M/e) nor co(M\\e) is 3-connected",
            "bixby",
        )


def _check_triangles(m: Member, report: SuiteReport) -> None:
    M = m.matroid
    triad_masks = [t.bits for t in triads(M)]
    deletable = [_deletion_connected(M, e, 3) for e in range(M.n)]
    for triangle in triangles(M):
        members = triangle.indices()
        for e in members:
            for f in members:
                if f == e or deletable[e] or deletable[f]:
                    continue
                g = next(x for x in members if x not in (e, f))
                found = any(
                    t >> e & 1 and (t >> f & 1) != (t >> g & 1)
                    for t in triad_masks
                )
                report.check(
                    found,
                    m.label,
                    f"triangle {list(members)}: no triad holds {e} and exactly one of {f}, {g}",
                    "triangle",
                )


def _check_nonessential(m: Member, report: SuiteReport) -> None:
    if is_wheel_or_whirl(m.matroid):
        return
    spare = nonessential_elements(m.matroid)
    report.check(
        len(spare) >= 2 and len(spare) == m.n - m.flags.essential_count,
        m.label,
        f"nonessential elements {list(spare.indices())}, stored essential count {m.flags.essential_count}",
        "nonessential",
    )


def _check_cocircuits(m: Member, level: int, report: SuiteReport) -> None:
    M = m.matroid
    cocircuits = [int(c) for c in _cocircuit_masks(M, level)]
    for x in range(M.n):
        if _deletion_connected(M, x, level):
            continue
        for y in range(M.n):
            if y == x:
                continue
            ground = M.full ^ (1 << x) ^ (1 << y)
            if not minor_is_k_connected(M, ground, 1 << y, level):
                continue
            pair = 1 << x | 1 << y
            report.check(
                any(c & pair == pair for c in cocircuits),
                m.label,
                f"level {level}: M\\{x}/{y} connected, M\\{x} not, no {level}-cocircuit holds both",
                "cocircuit",
            )


def _check_restrictions(m: Member, report: SuiteReport) -> None:
    M = m.matroid
    for k in (2, 3):
        if k == 3:
            connected, super_minimal = m.flags.is_3connected, m.flags.is_sm_3connected
        else:
            connected, super_minimal = is_k_connected(M, 2), is_super_minimally_k_connected(M, 2)
        if M.n <= 2 * k - 2:
            report.check(super_minimal == connected, m.label, f"k={k}: sm-k-c={super_minimal}, k-connected={connected}", "restriction")
        elif super_minimal:
            report.check(is_minimally_k_connected(M, k), m.label, f"k={k}: sm-k-c but not minimally k-connected", "restriction")


def _check_lambda(m: Member, report: SuiteReport) -> None:
    M = m.matroid
    profile = lambda_profile(M)
    other = dual(M)
    sizes = popcounts(M.n).astype(np.int16)
    formula = M.rank_table().astype(np.int16) + other.rank_table() - sizes
    report.check(
        np.array_equal(profile, lambda_profile(other)) and np.array_equal(profile, formula),
        m.label,
        "connectivity function differs from the dual's or from r(X) + r*(X) - |X|",
        "lambda",
    )


def _member_instance(m: Member) -> SuiteReport:
    report = SuiteReport("background", quiet=True)
    _check_separations(m, report)
    _check_restrictions(m, report)
    _check_lambda(m, report)
    if is_k_connected(m.matroid, 2) and m.n >= 2:
        _check_cocircuits(m, 2, report)
    if m.flags.is_3connected and m.n >= 4:
        _check_bixby(m, report)
        _check_triangles(m, report)
        _check_nonessential(m, report)
        _check_cocircuits(m, 3, report)
    return report


def _record_instance(m: Member) -> SuiteReport:
    report = SuiteReport("background", quiet=True)
    report.check(property_flags(m.matroid) == m.flags, m.label, "stored flags differ from recomputed flags", "records")
    return report


def suite_background(corpus: Corpus, workers: int = 1) -> SuiteReport:
    report = SuiteReport(
        "background",
        scope=f"census n<={corpus.nmax}, wheels and whirls k<={min(corpus.kmax, BACKGROUND_KMAX)}",
    )
    collect(report, _member_instance, corpus.members(kmax=BACKGROUND_KMAX), workers)
    collect(report, _record_instance, corpus.census_members, workers)
    return report.finish()


class BackgroundAgent:
    """
    Specialist agent for the background connectivity facts.
    """

    def run(self, state: Dict[str, Any]) -> Dict[str, Any]:
        logger.info("Running suite background")
        return report_update(suite_background(state["corpus"], state.get("workers", 1)))


def background_agent(state: Dict[str, Any]) -> Dict[str, Any]:
    """Entry point for LangGraph workflow."""
    return BackgroundAgent().run(state)
