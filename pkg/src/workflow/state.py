"""
State Definition - Verification State

Defines the shared state that flows between all agents in the verify
workflow.

The state contains:
- Inputs (requested suites, corpus scope)
- The loaded corpus
- Suite reports and progress tracking
- Control flow (supervisor decisions)
- Final verdict
"""

import operator
from typing import Annotated, Any, Dict, List, Optional, Sequence, TypedDict

from agents.report import SuiteReport


class VerificationState(TypedDict):
    """
    The complete state of one verify run.

    Agents return partial updates; list fields marked with operator.add are
    appended to, everything else is overwritten.
    """

    # ==================== INPUTS ====================

    requested_suites: List[str]
    """Suites to run, in execution order"""

    run_coverage: bool
    """Whether synthesis appends the operation coverage report (suite 'all')"""

    nmax: int
    kmax: int
    workers: int
    cache_dir: Optional[str]

    # ==================== CORPUS ====================

    corpus: Optional[Any]
    """agents.corpus.Corpus, loaded by the load_census node"""

    # ==================== RESULTS ====================

    reports: Annotated[List[Dict[str, Any]], operator.add]
    """SuiteReport.to_json() of every finished suite, in completion order"""

    completed_suites: Annotated[List[str], operator.add]

    evidence_chain: Annotated[List[str], operator.add]
    """
    One line per step:
    [
        'Corpus: 2237 census classes, 10 constructed',
        'table1: pass (6 checked, 0 failed)',
    ]
    """

    # ==================== SUPERVISOR CONTROL ====================

    supervisor_decision: str
    """
    Supervisor's decision for what to do next:
    - 'load_census': build or load the corpus
    - 'run_<suite>': run one suite
    - 'synthesize': aggregate and finish
    """

    iterations: int

    # ==================== FINAL OUTPUT ====================

    verdict: Optional[str]
    error_message: Optional[str]
    """Set when a suite stopped on an error; the supervisor then goes to synthesis"""


# ==================== DEFAULT STATE ====================

def create_initial_state(
    suites: Sequence[str],
    nmax: int,
    kmax: int,
    workers: int = 1,
    cache_dir: Optional[str] = None,
    run_coverage: bool = False,
) -> VerificationState:
    """Create the initial state for a verify run."""
    return VerificationState(
        requested_suites=list(suites),
        run_coverage=run_coverage,
        nmax=nmax,
        kmax=kmax,
        workers=workers,
        cache_dir=cache_dir,
        corpus=None,
        reports=[],
        completed_suites=[],
        evidence_chain=[],
        supervisor_decision="",
        iterations=0,
        verdict=None,
        error_message=None,
    )


# ==================== STATE HELPER FUNCTIONS ====================

def report_update(report: SuiteReport) -> Dict[str, Any]:
    """Partial state update recording one finished suite."""
    return {
        "reports": [report.to_json()],
        "completed_suites": [report.suite],
        "evidence_chain": [
            f"{report.suite}: {report.verdict} ({report.checked} checked, {len(report.fails)} failed)"
        ],
    }


def error_update(suite: str, error: Exception) -> Dict[str, Any]:
    """Partial state update for a suite that stopped on an error: a failing report."""
    report = SuiteReport(suite, scope="stopped by error")
    report.fail(suite, f"{type(error).__name__}: {error}")
    update = report_update(report.finish())
    update["error_message"] = f"{suite}: {error}"
    return update


def pending_suites(state: VerificationState) -> List[str]:
    done = set(state.get("completed_suites", []))
    return [s for s in state.get("requested_suites", []) if s not in done]


def is_max_iterations_reached(state: VerificationState, max_iter: int) -> bool:
    return state.get("iterations", 0) >= max_iter
