"""
Settings

Environment-driven defaults for the CLI and the verify workflow. Values come
from the process environment, with a .env file loaded first if present.
"""

import os
from dataclasses import dataclass

from dotenv import load_dotenv

from matroids.errors import MatroidInputError


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise MatroidInputError(f"{name} must be an integer, got '{raw}'") from None


@dataclass(frozen=True)
class Settings:
    cache_dir: str = ".matroid_cache"
    workers: int = 1
    log_level: str = "INFO"
    nmax: int = 8
    kmax: int = 7

    @classmethod
    def from_env(cls) -> "Settings":
        """
        Read MATROID_CACHE_DIR, MATROID_WORKERS, MATROID_LOG_LEVEL,
        MATROID_NMAX and MATROID_KMAX.

        Raises:
            MatroidInputError: If a numeric key is not an integer
        """
        load_dotenv()
        return cls(
            cache_dir=os.getenv("MATROID_CACHE_DIR", cls.cache_dir),
            workers=max(1, _int_env("MATROID_WORKERS", cls.workers)),
            log_level=os.getenv("MATROID_LOG_LEVEL", cls.log_level).upper(),
            nmax=_int_env("MATROID_NMAX", cls.nmax),
            kmax=_int_env("MATROID_KMAX", cls.kmax),
        )
