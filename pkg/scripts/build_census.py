#!/usr/bin/env python3
"""
Census Builder

Enumerates every matroid on at most NMAX elements, classifies each class and
writes the ndjson census into the cache directory, where `matroid census` and
`matroid verify` pick it up.

Usage:
    python scripts/build_census.py [NMAX] [--force]
"""

import argparse
import logging
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from tools.census import build_census, cache_path, class_counts, duality_asymmetries, save_records  # noqa: E402
from workflow.config import Settings  # noqa: E402

settings = Settings.from_env()

# Configure logging
logging.basicConfig(
    level=getattr(logging, settings.log_level, logging.INFO),
    format="%(asctime)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger(__name__)


def main() -> int:
    parser = argparse.ArgumentParser(description="Build the matroid census cache")
    parser.add_argument("nmax", type=int, nargs="?", default=settings.nmax)
    parser.add_argument("--force", action="store_true", help="Rebuild even if the cache exists")
    args = parser.parse_args()

    target = cache_path(settings.cache_dir, args.nmax)
    if target.exists() and not args.force:
        logger.info(f"Census cache {target} already exists (use --force to rebuild)")
        return 0

    logger.info(f"Building census for n<={args.nmax} with {settings.workers} workers")
    records = build_census(args.nmax, settings.workers)
    save_records(records, target)

    counts = class_counts(records)
    logger.info(f"Classes per (n, r):\n{counts.to_string()}")
    problems = duality_asymmetries(counts)
    for problem in problems:
        logger.error(f"Duality asymmetry: {problem}")
    logger.info(f"✓ Saved {len(records)} classes to {target}")
    return 1 if problems else 0


if __name__ == "__main__":
    sys.exit(main())
