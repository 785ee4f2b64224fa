"""
Synthesis Agent - Verdict Writer

Takes all suite reports and produces the run's verdict:
- appends the operation coverage report when every suite was requested
- checks that every requested suite reported
- the run passes only if every report passes and nothing errored

Role: Final verdict synthesis
"""

import logging
from typing import Any, Dict, List

from agents.coverage import suite_coverage
from agents.report import FAIL, PASS, SuiteReport

logger = logging.getLogger(__name__)


class SynthesisAgent:
    """
    Specialist agent for aggregating suite reports.
    """

    def run(self, state: Dict[str, Any]) -> Dict[str, Any]:
        reports: List[SuiteReport] = [SuiteReport.from_json(r) for r in state.get("reports", [])]
        update: Dict[str, Any] = {"reports": [], "evidence_chain": []}

        if state.get("run_coverage") and not state.get("error_message"):
            coverage = suite_coverage()
            reports.append(coverage)
            update["reports"].append(coverage.to_json())
            update["completed_suites"] = [coverage.suite]

        missing = [s for s in state.get("requested_suites", []) if s not in {r.suite for r in reports}]
        failed = [r.suite for r in reports if not r.passed]
        ok = not missing and not failed and not state.get("error_message")

        if missing:
            update["evidence_chain"].append(f"missing reports: {', '.join(missing)}")
        if failed:
            update["evidence_chain"].append(f"failed suites: {', '.join(failed)}")
        verdict = PASS if ok else FAIL
        update["evidence_chain"].append(f"verdict: {verdict} ({len(reports)} reports)")
        update["verdict"] = verdict

        logger.info(f"Synthesis: {verdict} over {len(reports)} reports")
        return update


def synthesis_agent(state: Dict[str, Any]) -> Dict[str, Any]:
    """Wrapper for LangGraph integration"""
    return SynthesisAgent().run(state)
