"""
Helper functions for the Egonet Paradox toolkit
"""

import hashlib
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, TypeVar

import numpy as np
from tqdm import tqdm

T = TypeVar("T")
R = TypeVar("R")


# =============================================================================
# CONSOLE FORMATTING
# =============================================================================

def print_header(text: str, char: str = "═", width: int = 80):
    """Print a formatted header"""
    print(f"\n{char * width}")
    print(f" {text}")
    print(f"{char * width}\n")


def print_section(text: str, char: str = "─", width: int = 60):
    """Print a formatted section header"""
    print(f"\n{char * width}")
    print(f"📌 {text}")
    print(f"{char * width}")


def format_percentage(value: float, decimals: int = 1) -> str:
    """Format a fraction in [0, 1] as a percentage"""
    return f"{value * 100:.{decimals}f}%"


def format_number(value: int) -> str:
    """Format a number with thousand separators"""
    return f"{value:,}"


# =============================================================================
# RANDOM STREAMS
# =============================================================================

def derive_rng(master_seed: int, index: int) -> np.random.Generator:
    """
    Independent generator for work item `index` of a run seeded by `master_seed`

    SeedSequence(master_seed, spawn_key=(index,)) is the same stream that
    SeedSequence(master_seed).spawn(...)[index] yields, so results do not depend on
    which worker runs which item, or in what order.
    """
    return np.random.default_rng(np.random.SeedSequence(master_seed, spawn_key=(index,)))


# =============================================================================
# PARALLEL EXECUTION
# =============================================================================

def parallel_map(fn: Callable[[T], R], items: Iterable[T], workers: int = 1,
                 progress: bool = False, desc: str = None) -> List[R]:
    """
    Apply fn to every item, in a process pool when workers > 1

    Results come back in item order either way. fn and items must be picklable
    for the pool.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in tqdm(items, desc=desc, disable=not progress)]

    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(tqdm(pool.map(fn, items), total=len(items), desc=desc, disable=not progress))


def chunk_ranges(total: int, chunk_size: int) -> List[range]:
    """Split range(total) into consecutive ranges of at most chunk_size"""
    return [range(start, min(start + chunk_size, total)) for start in range(0, total, chunk_size)]


# =============================================================================
# FILE DIGESTS
# =============================================================================

def sha256_file(path: str, block_size: int = 1 << 20) -> str:
    """Hex SHA-256 of a file's contents"""
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for block in iter(lambda: f.read(block_size), b""):
            digest.update(block)
    return digest.hexdigest()
