import logging
import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel

from .errors import ConfigError

# Load environment variables
load_dotenv()


class Settings(BaseModel):
    """Runtime configuration read from the environment / .env file"""
    threads: int = 1
    log_level: str = "WARNING"
    search_budget: Optional[int] = None
    c9_budget: int = 2000


def _int_env(name: str, default: Optional[int]) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from exc


def get_settings() -> Settings:
    """Build settings from PRISMATIC_* environment variables"""
    threads = _int_env("PRISMATIC_THREADS", os.cpu_count() or 1)
    return Settings(
        threads=max(1, threads),
        log_level=os.getenv("PRISMATIC_LOG_LEVEL", "WARNING").upper(),
        search_budget=_int_env("PRISMATIC_SEARCH_BUDGET", None),
        c9_budget=_int_env("PRISMATIC_C9_BUDGET", 2000),
    )


def configure_logging(level: Optional[str] = None) -> None:
    settings = get_settings()
    logging.basicConfig(
        level=getattr(logging, (level or settings.log_level).upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
