"""
Census Tool - Classified Isomorphism Classes

Builds one CensusRecord per isomorphism class on at most n_max elements,
persists the records as ndjson and answers filter queries against them.

Record line format (field names fixed):
    {"cf":"cf1:n6-r3-...","n":6,"r":3,"3c":true,"min3c":true,"sm3c":true,
     "brittle":false,"triangles":4,"triads":4,"eit":6,"essential":6}
An optional "sep" field holds the least separation witness of order 1 or 2
for classes that are not 3-connected.

Role: Shared corpus for the CLI census command and every verification suite
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, TextIO, Union

import pandas as pd

from matroids.algebra import dual
from matroids.errors import ENUMERATION_CAPACITY, MatroidInputError, require_capacity
from matroids.matroid import Matroid
from tools.canonical import CanonicalForm, canonical_form
from tools.connectivity import (
    PropertyFlags,
    find_k_separation,
    is_super_minimally_k_connected,
    property_flags,
)
from tools.enumeration import enumerate_matroids
from tools.parallel import ordered_map

logger = logging.getLogger(__name__)

FILTERS = ("3connected", "min3c", "sm3c", "sm2c", "brittle", "trianglefree")


# ==================== RECORDS ====================

@dataclass(frozen=True)
class CensusRecord:
    """One isomorphism class with its connectivity profile."""

    canonical: CanonicalForm
    flags: PropertyFlags
    witness: Optional[Dict[str, Any]] = None

    @property
    def n(self) -> int:
        return self.canonical.n

    @property
    def r(self) -> int:
        return self.canonical.r

    @property
    def key(self) -> str:
        return self.canonical.key

    def matroid(self) -> Matroid:
        return self.canonical.to_matroid()

    def sort_key(self):
        return self.canonical.sort_key()

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"cf": self.key, "n": self.n, "r": self.r}
        data.update(self.flags.to_json())
        if self.witness is not None:
            data["sep"] = self.witness
        return data

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "CensusRecord":
        """
        Raises:
            MatroidInputError: If fields are missing or disagree with the key
        """
        canonical = CanonicalForm.from_key(str(data.get("cf", "")))
        try:
            flags = PropertyFlags.from_json(data)
            sizes = (int(data["n"]), int(data["r"]))
        except (KeyError, TypeError, ValueError) as e:
            raise MatroidInputError(f"malformed census record {canonical.key}: {e}") from e
        if sizes != (canonical.n, canonical.r):
            raise MatroidInputError(f"record {canonical.key} has inconsistent n or r")
        return cls(canonical, flags, data.get("sep"))

    def line(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def classify(form: CanonicalForm) -> CensusRecord:
    """Compute the record of one class from its canonical form."""
    return CensusRecord(form, property_flags(form.to_matroid()))


def separation_witness(M: Matroid) -> Optional[Dict[str, Any]]:
    """Least 1-separation, else least 2-separation, serialized; None if 3-connected."""
    for k in (1, 2):
        found = find_k_separation(M, k)
        if found is not None:
            return found.to_json()
    return None


# ==================== BUILD, LOAD, SAVE ====================

def build_census(n_max: int, workers: int = 1) -> List[CensusRecord]:
    """
    Classify every isomorphism class on 0..n_max elements.

    Raises:
        CapacityError: If n_max exceeds 8
    """
    require_capacity(n_max, ENUMERATION_CAPACITY, "census")
    forms = [form for form, _ in enumerate_matroids(n_max, workers)]
    records = ordered_map(classify, forms, workers, desc="classify")
    records.sort(key=CensusRecord.sort_key)
    logger.info(f"Census n<={n_max}: {len(records)} classes")
    return records


def write_records(records: Iterable[CensusRecord], stream: TextIO) -> int:
    count = 0
    for record in records:
        stream.write(record.line() + "\n")
        count += 1
    return count


def save_records(records: Sequence[CensusRecord], path: Union[str, Path]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as handle:
        count = write_records(records, handle)
    logger.info(f"Wrote {count} census records to {path}")


def load_records(path: Union[str, Path]) -> List[CensusRecord]:
    """
    Read an ndjson census file.

    Raises:
        MatroidInputError: If the file cannot be read or a line is malformed
    """
    path = Path(path)
    records = []
    try:
        with path.open("r", encoding="utf-8") as handle:
            for number, raw in enumerate(handle, start=1):
                if not raw.strip():
                    continue
                try:
                    records.append(CensusRecord.from_json(json.loads(raw)))
                except (json.JSONDecodeError, MatroidInputError) as e:
                    raise MatroidInputError(f"{path}:{number}: {e}") from e
    except OSError as e:
        logger.error(f"Cannot read census file {path}: {e}")
        raise MatroidInputError(f"cannot read census file {path}: {e}") from e
    return records


def cache_path(cache_dir: Union[str, Path], n_max: int) -> Path:
    return Path(cache_dir) / f"census-n{n_max}.ndjson"


def load_census(
    n_max: int,
    workers: int = 1,
    cache_dir: Optional[Union[str, Path]] = None,
) -> List[CensusRecord]:
    """
    Census records on 0..n_max elements, from the cache when possible.

    Any cached census for a larger n is reused by truncation. A freshly built
    census is written back to the cache.
    """
    require_capacity(n_max, ENUMERATION_CAPACITY, "census")
    if cache_dir is not None:
        for size in range(n_max, ENUMERATION_CAPACITY + 1):
            path = cache_path(cache_dir, size)
            if path.exists():
                logger.info(f"Loading cached census from {path}")
                return [rec for rec in load_records(path) if rec.n <= n_max]
    records = build_census(n_max, workers)
    if cache_dir is not None:
        save_records(records, cache_path(cache_dir, n_max))
    return records


# ==================== QUERIES ====================

def _matches(record: CensusRecord, keyword: str) -> bool:
    flags = record.flags
    if keyword == "trianglefree":
        return flags.triangle_count == 0
    # connectivity filters ignore the empty matroid
    if record.n == 0:
        return False
    if keyword == "3connected":
        return flags.is_3connected
    if keyword == "min3c":
        return flags.is_min_3connected
    if keyword == "sm3c":
        return flags.is_sm_3connected
    if keyword == "brittle":
        return flags.is_brittle
    if keyword == "sm2c":
        return is_super_minimally_k_connected(record.matroid(), 2)
    raise MatroidInputError(f"unknown census filter '{keyword}'")


def _check_filters(filters: Sequence[str]) -> None:
    for keyword in filters:
        if keyword not in FILTERS:
            raise MatroidInputError(f"unknown census filter '{keyword}' (expected one of {', '.join(FILTERS)})")


def apply_filters(records: Iterable[CensusRecord], filters: Sequence[str]) -> List[CensusRecord]:
    """Records matching every keyword in filters."""
    _check_filters(filters)
    return [rec for rec in records if all(_matches(rec, kw) for kw in filters)]


def census(
    n_max: int,
    filters: Sequence[str] = (),
    workers: int = 1,
    cache_dir: Optional[Union[str, Path]] = None,
    witnesses: bool = False,
) -> List[CensusRecord]:
    """
    Filtered census on 0..n_max elements, ordered by (n, r, encoding).

    Raises:
        MatroidInputError: If a filter keyword is unknown
        CapacityError: If n_max exceeds 8
    """
    _check_filters(filters)
    selected = apply_filters(load_census(n_max, workers, cache_dir), filters)
    if witnesses:
        selected = [
            rec if rec.flags.is_3connected else CensusRecord(rec.canonical, rec.flags, separation_witness(rec.matroid()))
            for rec in selected
        ]
    return selected


# ==================== SUMMARIES ====================

def records_frame(records: Iterable[CensusRecord]) -> pd.DataFrame:
    return pd.DataFrame([rec.to_json() for rec in records])


def class_counts(records: Iterable[CensusRecord]) -> pd.DataFrame:
    """Pivot of class counts with n as rows and r as columns."""
    frame = records_frame(records)
    if frame.empty:
        return pd.DataFrame()
    return frame.pivot_table(index="n", columns="r", values="cf", aggfunc="count", fill_value=0)


def duality_asymmetries(counts: pd.DataFrame) -> List[str]:
    """(n, r) cells whose count differs from the (n, n - r) cell."""
    problems = []
    for n in counts.index:
        for r in range(int(n) + 1):
            here = int(counts.at[n, r]) if r in counts.columns else 0
            there = int(counts.at[n, n - r]) if (n - r) in counts.columns else 0
            if here != there:
                problems.append(f"n={n}: {here} classes of rank {r} but {there} of rank {n - r}")
    return problems


def missing_duals(records: Sequence[CensusRecord]) -> List[str]:
    """Keys of records whose dual class is absent from records."""
    present = {rec.key for rec in records}
    return [rec.key for rec in records if canonical_form(dual(rec.matroid())).key not in present]
