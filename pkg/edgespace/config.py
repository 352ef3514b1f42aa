# edgespace/config.py

import os

# Environment variable overriding the brute-force vertex bound
BOUND_ENV_VAR = "EDGESPACE_BOUND"

# Brute-force enumeration bounds
DEFAULT_VERTEX_BOUND = 12
DEFAULT_CIRCUIT_LENGTH = 16
DEFAULT_SIDE_SIZE = 3

# Padded-radius search
DEFAULT_SEARCH_DEPTH = 8
DEFAULT_WINDOW_PADDING = 3

# Deterministic sampling
DEFAULT_SAMPLE_COUNT = 200
DEFAULT_SEED = 0

# Radius-level thread pool
DEFAULT_WORKERS = 1

# Exhaustive finite corpus
DEFAULT_CORPUS_VERTICES = 6
DEFAULT_RANDOM_GRAPHS = 200
DEFAULT_RANDOM_VERTICES = 8
# Graphs with at most this many edges get every span element and every edge set
DEFAULT_EXHAUSTIVE_EDGES = 12
DEFAULT_CORPUS_SAMPLES = 1000


def get_vertex_bound(override=None):
    """
    Get the brute-force vertex bound

    Args:
        override (int, optional): Explicit bound. Takes precedence over the
                                  environment.

    Returns:
        int: Bound from the override, the EDGESPACE_BOUND variable, or the default

    Raises:
        ValueError: If EDGESPACE_BOUND is set but not a non-negative integer
    """
    if override is not None:
        return int(override)
    raw = os.environ.get(BOUND_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_VERTEX_BOUND
    bound = int(raw)
    if bound < 0:
        raise ValueError(f"{BOUND_ENV_VAR} must be non-negative, got {raw}")
    return bound


def get_radii(text):
    """
    Parse a radius list

    Accepts ``a..b`` (inclusive range) or a comma separated list.

    Args:
        text (str): Radius specification

    Returns:
        list: Radii in ascending order without duplicates

    Raises:
        ValueError: If the text is malformed or contains negative radii
    """
    text = text.strip()
    if ".." in text:
        low, _, high = text.partition("..")
        radii = list(range(int(low), int(high) + 1))
    else:
        radii = [int(part) for part in text.split(",") if part.strip()]
    if not radii:
        raise ValueError(f"empty radius list: '{text}'")
    if min(radii) < 0:
        raise ValueError(f"radii must be non-negative: '{text}'")
    return sorted(set(radii))
