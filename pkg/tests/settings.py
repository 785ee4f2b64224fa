"""Standardized Hypothesis settings profiles for property tests.

Import these instead of using inline @settings(max_examples=...).

Usage:
    from tests.settings import STANDARD_SETTINGS

    @given(M=small_matroids())
    @STANDARD_SETTINGS
    def test_something(M):
        ...

Tiers:
- DETERMINISM_SETTINGS: 200 examples - canonical forms and relabeling invariance
- STANDARD_SETTINGS: 100 examples - rank axioms, duality
- SLOW_SETTINGS: 30 examples - connectivity scans on up to 8 elements
- QUICK_SETTINGS: 20 examples - input rejection
"""

from hypothesis import HealthCheck, settings

# Canonical keys feed the census cache, so they must not depend on labeling
DETERMINISM_SETTINGS = settings(max_examples=200, deadline=None)

STANDARD_SETTINGS = settings(max_examples=100, deadline=None)

# Each example runs a full subset scan
SLOW_SETTINGS = settings(
    max_examples=30,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)

QUICK_SETTINGS = settings(max_examples=20, deadline=None)
