"""
Verification Corpus

The census on at most nmax elements plus the constructed wheels and whirls
of rank 3..kmax. Constructed members are classified once here so every suite
shares the same flags.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Union

from matroids.matroid import Matroid
from tools.census import CensusRecord, load_census
from tools.connectivity import PropertyFlags, property_flags
from tools.constructions import wheel, whirl
from tools.parallel import ordered_map

logger = logging.getLogger(__name__)


@dataclass
class Member:
    """One corpus matroid with its label and connectivity profile."""

    label: str
    matroid: Matroid
    flags: PropertyFlags
    constructed: bool = False
    k: Optional[int] = None

    @property
    def n(self) -> int:
        return self.matroid.n

    @property
    def r(self) -> int:
        return self.matroid.r


def _constructed_member(kind_and_rank) -> Member:
    kind, k = kind_and_rank
    M = wheel(k)[0] if kind == "wheel" else whirl(k)[0]
    return Member(M.name, M, property_flags(M), constructed=True, k=k)


@dataclass
class Corpus:
    nmax: int
    kmax: int
    records: List[CensusRecord]
    census_members: List[Member]
    constructed_members: List[Member] = field(default_factory=list)

    def members(
        self,
        where: Callable[[Member], bool] = lambda m: True,
        kmax: Optional[int] = None,
    ) -> List[Member]:
        """
        Census members (empty matroid excluded) followed by constructed ones,
        optionally capping the constructed rank at kmax.
        """
        limit = self.kmax if kmax is None else min(kmax, self.kmax)
        chosen = [m for m in self.census_members if m.n > 0 and where(m)]
        chosen += [m for m in self.constructed_members if m.k <= limit and where(m)]
        return chosen

    def sm3c(self, min_size: int = 4, kmax: Optional[int] = None) -> List[Member]:
        return self.members(lambda m: m.flags.is_sm_3connected and m.n >= min_size, kmax)


def census_member(record: CensusRecord) -> Member:
    return Member(record.key, record.matroid(), record.flags)


def build_corpus(
    nmax: int,
    kmax: int,
    workers: int = 1,
    cache_dir: Optional[Union[str, Path]] = None,
    records: Optional[Sequence[CensusRecord]] = None,
) -> Corpus:
    """
    Load (or build) the census and classify wheels and whirls of rank 3..kmax.
    """
    if records is None:
        records = load_census(nmax, workers, cache_dir)
    records = [rec for rec in records if rec.n <= nmax]
    shapes = [(kind, k) for k in range(3, kmax + 1) for kind in ("wheel", "whirl")]
    constructed = ordered_map(_constructed_member, shapes, workers, desc="wheels and whirls")
    logger.info(f"Corpus: {len(records)} census classes (n<={nmax}), {len(constructed)} constructed (k<={kmax})")
    return Corpus(
        nmax=nmax,
        kmax=kmax,
        records=list(records),
        census_members=[census_member(rec) for rec in records],
        constructed_members=constructed,
    )
