"""
Ordered per-instance maps with progress bars.

Results always come back in input order, so aggregation downstream is
independent of the worker count.
"""

import logging
from typing import Callable, Iterable, List, Optional, TypeVar

from tqdm import tqdm
from tqdm.contrib.concurrent import process_map

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(
    fn: Callable[[T], R],
    items: Iterable[T],
    workers: int = 1,
    desc: Optional[str] = None,
    chunksize: int = 8,
) -> List[R]:
    """
    Apply fn to every item, in worker processes when workers > 1.

    fn must be a module-level function so it pickles. Progress bars are
    disabled automatically when stderr is not a terminal.
    """
    items = list(items)
    if workers > 1 and len(items) > 1:
        logger.debug(f"mapping {len(items)} items over {workers} workers")
        return process_map(
            fn,
            items,
            max_workers=workers,
            chunksize=chunksize,
            desc=desc,
            disable=None,
            leave=False,
        )
    return [fn(item) for item in tqdm(items, desc=desc, disable=None, leave=False)]
