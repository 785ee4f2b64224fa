"""
Supervisor Agent - Main Coordinator

Decides the next step of a verify run:
- load the corpus if no suite has it yet
- run the next requested suite that has not completed
- hand over to synthesis when nothing is left, or when a step failed

Role: Orchestrates the verify workflow
"""

import logging
from typing import Any, Dict

from workflow.routing import RUN_PREFIX
from workflow.state import is_max_iterations_reached, pending_suites

logger = logging.getLogger(__name__)


class SupervisorAgent:
    """
    Main supervisor agent that coordinates the suite agents.
    """

    def __init__(self, max_iterations: int = 40):
        self.max_iterations = max_iterations

    def __call__(self, state: Dict[str, Any]) -> Dict[str, Any]:
        decision, reasoning = self._make_decision(state)
        logger.info(f"Supervisor: {decision} ({reasoning})")
        return {
            "supervisor_decision": decision,
            "iterations": state.get("iterations", 0) + 1,
        }

    def _make_decision(self, state: Dict[str, Any]):
        if state.get("error_message"):
            return "synthesize", "a step failed"
        if is_max_iterations_reached(state, self.max_iterations):
            return "synthesize", "iteration limit reached"
        pending = pending_suites(state)
        if not pending:
            return "synthesize", "all requested suites completed"
        if state.get("corpus") is None:
            return "load_census", f"{len(pending)} suites need the corpus"
        return f"{RUN_PREFIX}{pending[0]}", f"{len(pending)} suites pending"
