"""
Census Agent

Loads the census (from the cache when possible) and classifies the
constructed wheels and whirls into the shared corpus.

State keys read:
  - nmax, kmax, workers, cache_dir

State keys written:
  - corpus, evidence_chain

Role: Corpus loader
"""

import logging
from typing import Any, Dict

from agents.corpus import build_corpus
from matroids.errors import MatroidError

logger = logging.getLogger(__name__)


class CensusAgent:
    """
    Builds the corpus every suite reads.
    """

    def run(self, state: Dict[str, Any]) -> Dict[str, Any]:
        try:
            corpus = build_corpus(
                state["nmax"],
                state["kmax"],
                workers=state.get("workers", 1),
                cache_dir=state.get("cache_dir"),
            )
        except MatroidError as e:
            logger.error(f"Corpus load failed: {e}")
            raise
        return {
            "corpus": corpus,
            "evidence_chain": [
                f"Corpus: {len(corpus.census_members)} census classes (n<={corpus.nmax}), "
                f"{len(corpus.constructed_members)} constructed (k<={corpus.kmax})"
            ],
        }


def census_agent(state: Dict[str, Any]) -> Dict[str, Any]:
    """Entry point for LangGraph workflow."""
    return CensusAgent().run(state)
