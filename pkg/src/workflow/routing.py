"""
Routing Logic - Traffic Controller

Routes between nodes based on supervisor decisions.

Key Concept:
- Routing functions read state and return a node name (string)
- LangGraph uses the node name to determine where to go
- No decisions here, just a mapping from supervisor decision to node
"""

import logging
from typing import Any, Dict, Tuple

logger = logging.getLogger(__name__)


# ==================== NODE NAMES ====================

class NodeNames:
    """Constants for all node names in the workflow"""
    SUPERVISOR = "supervisor"
    LOAD_CENSUS = "load_census"
    TABLE1 = "table1"
    PROP11 = "prop11"
    DENSITY = "density"
    LEMMA31 = "lemma31"
    LEMMA32 = "lemma32"
    WHEEL_GROWTH = "wheelgrowth"
    BRITTLE = "brittle"
    TRIADS = "triads"
    BACKGROUND = "background"
    SYNTHESIS = "synthesis"
    END = "END"


SUITE_NODES: Tuple[str, ...] = (
    NodeNames.TABLE1,
    NodeNames.PROP11,
    NodeNames.DENSITY,
    NodeNames.LEMMA31,
    NodeNames.LEMMA32,
    NodeNames.WHEEL_GROWTH,
    NodeNames.BRITTLE,
    NodeNames.TRIADS,
    NodeNames.BACKGROUND,
)
"""Suites in the order `verify --suite all` runs them."""

RUN_PREFIX = "run_"


# ==================== ROUTING FUNCTIONS ====================

def route_supervisor_decision(state: Dict[str, Any]) -> str:
    """
    Route based on the supervisor's decision.

    Routing Logic:
        - "load_census" → load_census node
        - "run_<suite>" → the suite's node
        - "synthesize" → synthesis node
        - anything else → END
    """
    decision = state.get("supervisor_decision", "")
    if decision == "load_census":
        next_node = NodeNames.LOAD_CENSUS
    elif decision == "synthesize":
        next_node = NodeNames.SYNTHESIS
    elif decision.startswith(RUN_PREFIX) and decision[len(RUN_PREFIX):] in SUITE_NODES:
        next_node = decision[len(RUN_PREFIX):]
    else:
        logger.warning(f"Unknown supervisor decision '{decision}', ending workflow")
        next_node = NodeNames.END

    logger.debug(f"Routing: '{decision}' → {next_node}")
    return next_node

