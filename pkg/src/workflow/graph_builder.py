"""
Graph Builder - LangGraph Workflow Construction

Builds the verify workflow using LangGraph:
- Defines all nodes (supervisor, corpus loader, suites, synthesis)
- Defines edges (every suite returns to the supervisor)
- Sets up conditional routing
- Compiles the executable workflow
"""

import logging
from typing import Any, Callable, Dict, Optional, Sequence

from langgraph.graph import END, StateGraph

from agents.background_agent import background_agent
from agents.brittle_agent import brittle_agent
from agents.census_agent import census_agent
from agents.density_agent import density_agent
from agents.reduction_agent import lemma31_agent, lemma32_agent, wheel_growth_agent
from agents.supervisor import SupervisorAgent
from agents.synthesis_agent import synthesis_agent
from agents.table1_agent import prop11_agent, table1_agent
from agents.triad_agent import triad_agent
from matroids.errors import MatroidError, MatroidInputError
from workflow.routing import SUITE_NODES, NodeNames, route_supervisor_decision
from workflow.state import VerificationState, create_initial_state, error_update

logger = logging.getLogger(__name__)

SuiteNode = Callable[[Dict[str, Any]], Dict[str, Any]]

SUITE_AGENTS: Dict[str, SuiteNode] = {
    NodeNames.TABLE1: table1_agent,
    NodeNames.PROP11: prop11_agent,
    NodeNames.DENSITY: density_agent,
    NodeNames.LEMMA31: lemma31_agent,
    NodeNames.LEMMA32: lemma32_agent,
    NodeNames.WHEEL_GROWTH: wheel_growth_agent,
    NodeNames.BRITTLE: brittle_agent,
    NodeNames.TRIADS: triad_agent,
    NodeNames.BACKGROUND: background_agent,
}

# supervisor visits are bounded by one per suite plus loading and synthesis
RECURSION_LIMIT = 100


def guarded(suite: str, agent: SuiteNode) -> SuiteNode:
    """
    Wrap a suite node so a MatroidError ends the suite with a failing report
    and sets error_message instead of aborting the whole run.
    """

    def node(state: Dict[str, Any]) -> Dict[str, Any]:
        try:
            return agent(state)
        except MatroidError as e:
            logger.error(f"Suite {suite} stopped: {e}")
            return error_update(suite, e)

    return node


def resolve_suites(name: str) -> Sequence[str]:
    """
    Suites for a `--suite` value: 'all' or one suite name.

    Raises:
        MatroidInputError: If the name is unknown
    """
    if name == "all":
        return SUITE_NODES
    if name not in SUITE_AGENTS:
        raise MatroidInputError(f"unknown suite '{name}'; expected all or one of {', '.join(SUITE_NODES)}")
    return (name,)


def build_workflow(suites: Sequence[str] = SUITE_NODES, max_iterations: int = 40):
    """
    Build the verify workflow with one node per requested suite.

    Returns:
        Compiled LangGraph workflow
    """
    workflow = StateGraph(VerificationState)

    # ==================== ADD NODES ====================

    workflow.add_node(NodeNames.SUPERVISOR, SupervisorAgent(max_iterations))
    workflow.add_node(NodeNames.LOAD_CENSUS, census_agent)
    for suite in suites:
        workflow.add_node(suite, guarded(suite, SUITE_AGENTS[suite]))
    workflow.add_node(NodeNames.SYNTHESIS, synthesis_agent)

    # ==================== ADD EDGES ====================

    routes = {suite: suite for suite in suites}
    routes.update({
        NodeNames.LOAD_CENSUS: NodeNames.LOAD_CENSUS,
        NodeNames.SYNTHESIS: NodeNames.SYNTHESIS,
        NodeNames.END: END,
    })
    workflow.add_conditional_edges(NodeNames.SUPERVISOR, route_supervisor_decision, routes)

    workflow.add_edge(NodeNames.LOAD_CENSUS, NodeNames.SUPERVISOR)
    for suite in suites:
        workflow.add_edge(suite, NodeNames.SUPERVISOR)
    workflow.add_edge(NodeNames.SYNTHESIS, END)

    workflow.set_entry_point(NodeNames.SUPERVISOR)

    logger.debug(f"Workflow built with suites {list(suites)}")
    return workflow.compile()


# ==================== EXECUTION HELPERS ====================

def run_verification(
    suite: str,
    nmax: int,
    kmax: int,
    workers: int = 1,
    cache_dir: Optional[str] = None,
    corpus=None,
) -> Dict[str, Any]:
    """
    Run `verify --suite <suite>` and return the final state.

    A prebuilt corpus may be passed to skip loading.

    Raises:
        MatroidInputError: If the suite name is unknown
    """
    suites = resolve_suites(suite)
    workflow = build_workflow(suites)
    initial_state = create_initial_state(
        suites, nmax, kmax, workers=workers, cache_dir=cache_dir, run_coverage=suite == "all"
    )
    if corpus is not None:
        initial_state["corpus"] = corpus

    logger.info(f"Starting verification: {', '.join(suites)} (nmax={nmax}, kmax={kmax})")
    final_state = workflow.invoke(initial_state, {"recursion_limit": RECURSION_LIMIT})
    logger.info(f"Verification complete: {final_state.get('verdict')}")
    return final_state
