"""
Suite Reports

A SuiteReport is the outcome of one verification suite: how many instances
were checked, every counterexample found and the verdict. Reports serialize
as one ndjson line with fixed fields:

    {"suite": ..., "checked": ..., "fails": [{"cf": ..., "detail": ...}],
     "elapsed_s": ..., "verdict": "pass" | "fail", "scope": ...}

Suites that bundle several properties add a "counts" object with the
instances checked per property.

Per-member checks run through `collect`: each member yields a quiet partial
report, and partials are merged in member order, so a report does not depend
on the worker count.
"""

import json
import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional, TypeVar

from matroids.errors import CANONICAL_CAPACITY
from matroids.matroid import Matroid
from tools.canonical import canonical_key
from tools.parallel import ordered_map

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"

T = TypeVar("T")


def instance_label(M: Matroid) -> str:
    """Canonical key when one exists, else the construction name."""
    if M.n <= CANONICAL_CAPACITY:
        return canonical_key(M)
    return M.name or f"n{M.n}-r{M.r}"


@dataclass
class Counterexample:
    cf: str
    detail: str

    def to_json(self) -> Dict[str, str]:
        return {"cf": self.cf, "detail": self.detail}


@dataclass
class SuiteReport:
    """
    Outcome of one suite.

    verdict is "pass" exactly when fails is empty.
    """

    suite: str
    checked: int = 0
    fails: List[Counterexample] = field(default_factory=list)
    elapsed_s: float = 0.0
    scope: str = ""
    counts: Dict[str, int] = field(default_factory=dict)
    quiet: bool = field(default=False, repr=False, compare=False)
    _started: float = field(default_factory=time.perf_counter, repr=False, compare=False)

    @property
    def verdict(self) -> str:
        return PASS if not self.fails else FAIL

    @property
    def passed(self) -> bool:
        return not self.fails

    def check(self, ok: bool, label: str, detail: str, part: Optional[str] = None) -> bool:
        """
        Record one checked instance. A failure is kept and the suite goes on;
        only the first counterexample is logged as a warning.
        """
        self.checked += 1
        if part is not None:
            self.counts[part] = self.counts.get(part, 0) + 1
        if not ok:
            self.fail(label, detail)
        return ok

    def fail(self, label: str, detail: str) -> None:
        """Record a failure that is not tied to a counted instance."""
        if not self.fails and not self.quiet:
            logger.warning(f"{self.suite}: first counterexample {label}: {detail}")
        self.fails.append(Counterexample(label, detail))

    def merge(self, other: "SuiteReport") -> None:
        """Fold a partial report into this one; fails keep their order."""
        if other.fails and not self.fails and not self.quiet:
            first = other.fails[0]
            logger.warning(f"{self.suite}: first counterexample {first.cf}: {first.detail}")
        self.checked += other.checked
        self.fails.extend(other.fails)
        for part, count in other.counts.items():
            self.counts[part] = self.counts.get(part, 0) + count

    def finish(self) -> "SuiteReport":
        self.elapsed_s = round(time.perf_counter() - self._started, 3)
        logger.info(f"{self.suite}: {self.verdict} ({self.checked} checked, {len(self.fails)} failed)")
        return self

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "suite": self.suite,
            "checked": self.checked,
            "fails": [c.to_json() for c in self.fails],
            "elapsed_s": self.elapsed_s,
            "verdict": self.verdict,
            "scope": self.scope,
        }
        if self.counts:
            data["counts"] = dict(sorted(self.counts.items()))
        return data

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "SuiteReport":
        return cls(
            suite=data["suite"],
            checked=int(data["checked"]),
            fails=[Counterexample(f["cf"], f["detail"]) for f in data["fails"]],
            elapsed_s=float(data["elapsed_s"]),
            scope=data.get("scope", ""),
            counts=dict(data.get("counts", {})),
        )

    def line(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def collect(
    report: SuiteReport,
    check: Callable[[T], SuiteReport],
    items: Iterable[T],
    workers: int = 1,
) -> SuiteReport:
    """
    Run check on every item and merge the partial reports into report.

    check must be module-level (or a functools.partial of one) so it pickles
    for worker processes. Merging follows input order.
    """
    for partial in ordered_map(check, items, workers, desc=report.suite):
        report.merge(partial)
    return report
