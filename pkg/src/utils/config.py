"""
Runtime configuration for qtorus, read from the environment (and .env)
"""
import os
import random
from typing import Optional

from dotenv import load_dotenv

load_dotenv()

SEED = int(os.getenv("QTORUS_SEED", "20240607"))

# Default bounds for the bounded searches and probes
K_MAX = int(os.getenv("QTORUS_K_MAX", "6"))
DEG_BOUND = int(os.getenv("QTORUS_DEG_BOUND", "3"))
S_MAX = int(os.getenv("QTORUS_S_MAX", "12"))
SEARCH_BOUND = int(os.getenv("QTORUS_SEARCH_BOUND", "2"))
SEARCH_NODE_LIMIT = int(os.getenv("QTORUS_SEARCH_NODE_LIMIT", "200000"))
RANDOM_TRIALS = int(os.getenv("QTORUS_RANDOM_TRIALS", "200"))

LOG_LEVEL = os.getenv("QTORUS_LOG_LEVEL", "WARNING")


def get_rng(seed: Optional[int] = None) -> random.Random:
    """
    Random generator for the randomized checks

    Usage:
        rng = get_rng()
        rng.randint(-2, 2)
    """
    return random.Random(SEED if seed is None else seed)
