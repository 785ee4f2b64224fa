"""
Density Agent

Checks the density bound for super-minimally 3-connected matroids:
- every sm3c census class with |E| >= 4 has |E| <= 2r
- the classes attaining |E| = 2r are exactly U_{2,4}, M(W_3), W^3, M(W_4), W^4
  (restricted to the sizes the census reaches)
- constructed wheels and whirls are sm3c with |E| = 2r
- minimally 3-connected census classes of rank 3 or 4 with 2r elements are
  exactly the wheel and whirl of that rank
- U_{2,5} is 3-connected but not sm3c

The bound for rank at most six rests on an external density theorem for
minimally 3-connected matroids; here it is verified only on the corpus, and
the report's scope says so.

Role: Density theorem suite
"""

import logging
from typing import Any, Dict, List

from agents.corpus import Corpus, Member
from agents.report import SuiteReport, collect
from tools.canonical import canonical_key
from tools.connectivity import is_k_connected, is_super_minimally_k_connected
from tools.constructions import uniform, wheel, whirl
from workflow.state import report_update

logger = logging.getLogger(__name__)


def equality_classes(nmax: int) -> Dict[str, str]:
    """Canonical keys of the |E| = 2r classes with at most nmax elements."""
    named = [(uniform(2, 4), "U2,4")]
    for k in (3, 4):
        named += [(wheel(k)[0], f"wheel({k})"), (whirl(k)[0], f"whirl({k})")]
    return {canonical_key(M): name for M, name in named if M.n <= nmax}


def _bound_instance(m: Member) -> SuiteReport:
    report = SuiteReport("density", quiet=True)
    report.check(m.n <= 2 * m.r, m.label, f"|E|={m.n} exceeds 2r={2 * m.r}", "bound")
    return report


def _wheel_instance(m: Member) -> SuiteReport:
    report = SuiteReport("density", quiet=True)
    report.check(
        m.flags.is_sm_3connected and m.n == 2 * m.r,
        m.label,
        f"sm3c={m.flags.is_sm_3connected}, |E|={m.n}, r={m.r}",
        "wheels",
    )
    return report


def suite_density(corpus: Corpus, workers: int = 1) -> SuiteReport:
    report = SuiteReport(
        "density",
        scope=(
            f"census n<={corpus.nmax}; wheels and whirls 3<=k<={corpus.kmax}; "
            "rank<=6 bound verified on this corpus only"
        ),
    )
    census_sm3c: List[Member] = [m for m in corpus.sm3c(min_size=4) if not m.constructed]
    collect(report, _bound_instance, census_sm3c, workers)

    expected = equality_classes(corpus.nmax)
    attained = {m.label for m in census_sm3c if m.n == 2 * m.r}
    for label in sorted(attained):
        report.check(label in expected, label, "attains |E| = 2r but is not a wheel, whirl or U2,4", "equality")
    for key, name in expected.items():
        if key not in attained:
            report.fail(key, f"{name} should attain |E| = 2r as an sm3c class")

    collect(report, _wheel_instance, corpus.constructed_members, workers)

    for r in (3, 4):
        if 2 * r > corpus.nmax:
            continue
        wanted = {canonical_key(wheel(r)[0]), canonical_key(whirl(r)[0])}
        got = {
            m.label for m in corpus.census_members
            if m.flags.is_min_3connected and m.r == r and m.n == 2 * r
        }
        report.check(got == wanted, f"rank-{r}", f"minimally 3-connected 2r-element classes {sorted(got)}", "min3c-2r")

    control = uniform(2, 5)
    report.check(
        is_k_connected(control, 3) and not is_super_minimally_k_connected(control, 3),
        canonical_key(control),
        "U2,5 must be 3-connected and not sm3c",
        "control",
    )
    return report.finish()


class DensityAgent:
    """
    Specialist agent for the density theorem.
    """

    def run(self, state: Dict[str, Any]) -> Dict[str, Any]:
        logger.info("Running suite density")
        return report_update(suite_density(state["corpus"], state.get("workers", 1)))


def density_agent(state: Dict[str, Any]) -> Dict[str, Any]:
    """Entry point for LangGraph workflow."""
    return DensityAgent().run(state)
