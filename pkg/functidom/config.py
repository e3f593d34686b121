from __future__ import annotations

import logging
import os
import sys
from pathlib import Path
from typing import Optional

import psutil
from dotenv import load_dotenv

from .errors import ConfigurationError

# Load environment variables from .env before anything else
load_dotenv()

# --- Version ---
FUNCTIDOM_VERSION: str = "1.0.0"

# --- Paths ---
PACKAGE_DIR: Path = Path(__file__).resolve().parent
LOG_DIR: Path = Path(os.getenv("FUNCTIDOM_LOG_DIR", "logs"))
LOG_FILE_NAME: str = "functidom.log"
DEFAULT_REPORT_PATH: Path = Path("results") / "acceptance_report.csv"

# --- Solver budget defaults ---
DEFAULT_MAX_VERTICES: int = 64
DEFAULT_NODE_LIMIT: int = 10**8

# --- Desk-scale limits ---
MAX_GRAPH_ORDER: int = 128
BRUTEFORCE_MAX_ORDER: int = 24
ISOMORPHISM_MAX_ORDER: int = 32
GEN_WITNESS_MAX_BASE: int = 12
ENUMERATE_ALL_MAX_N: int = 7
ENUMERATE_PERMUTATIONS_MAX_N: int = 9

# --- Environment variable names ---
ENV_BUDGET_NODES: str = "FUNCTIDOM_BUDGET_NODES"
ENV_BUDGET_VERTICES: str = "FUNCTIDOM_BUDGET_VERTICES"
ENV_WORKERS: str = "FUNCTIDOM_WORKERS"


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}")
    if value <= 0:
        raise ConfigurationError(f"{name} must be positive, got {value}")
    return value


def budget_node_limit() -> int:
    """Node limit honoring FUNCTIDOM_BUDGET_NODES."""
    return _env_int(ENV_BUDGET_NODES, DEFAULT_NODE_LIMIT)


def budget_max_vertices() -> int:
    return _env_int(ENV_BUDGET_VERTICES, DEFAULT_MAX_VERTICES)


def worker_count(requested: Optional[int] = None) -> int:
    """Size of the enumeration worker pool.

    Explicit request wins, then FUNCTIDOM_WORKERS, then the number of
    physical cores reported by psutil.
    """
    if requested is not None:
        if requested <= 0:
            raise ConfigurationError(f"worker count must be positive, got {requested}")
        return requested
    cores = psutil.cpu_count(logical=False) or psutil.cpu_count() or 1
    return _env_int(ENV_WORKERS, max(1, cores))


# --- Logging Setup ---
_LOG = logging.getLogger(__name__)


def setup_logging(level: int = logging.INFO, log_dir: Optional[Path] = None) -> Path:
    """Configure root logger for file + console output.

    The console handler writes to stderr; stdout is reserved for reports.
    """
    target_dir = Path(log_dir) if log_dir is not None else LOG_DIR
    target_dir.mkdir(parents=True, exist_ok=True)
    log_file = target_dir / LOG_FILE_NAME

    logger = logging.getLogger()
    logger.setLevel(logging.DEBUG)

    # Purge duplicate handlers to avoid multiple log entries
    if logger.hasHandlers():
        logger.handlers.clear()

    # Overwrite the log file on each run
    file_handler = logging.FileHandler(log_file, mode="w", encoding="utf-8")
    file_handler.setLevel(logging.DEBUG)
    file_handler.setFormatter(
        logging.Formatter("%(asctime)s - %(threadName)s - %(name)s - %(levelname)s - %(message)s")
    )
    logger.addHandler(file_handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(logging.Formatter("%(asctime)s - %(levelname)s - %(message)s"))
    logger.addHandler(console_handler)

    logger.info("Logging initialised → %s", log_file)
    return log_file
