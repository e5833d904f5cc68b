"""
Significance tests
Wilcoxon signed-rank (exact or normal approximation) and Spearman's rho
with a Monte Carlo permutation p-value
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy import stats

from src.config import SPEARMAN_PERMUTATIONS, WILCOXON_EXACT_MAX_N
from src.exceptions import (
    ConfigError,
    ConstantInputError,
    InsufficientDataError,
    ZeroDifferencesError,
)

logger = logging.getLogger(__name__)

_PERMUTATION_CHUNK = 1000


class TestMethod(str, Enum):
    __test__ = False

    EXACT = "exact"
    PERMUTATION = "permutation"
    NORMAL_APPROX = "normal_approx"


@dataclass(frozen=True)
class TestResult:
    __test__ = False

    statistic: float
    p_value: float
    n: int
    method: TestMethod


# =============================================================================
# WILCOXON SIGNED-RANK
# =============================================================================

def _exact_lower_tail(doubled_ranks: np.ndarray, threshold: int) -> int:
    """
    Number of sign assignments whose positive rank sum is <= threshold

    Works on doubled ranks so that average (half-integer) tie ranks stay integral.
    Counts every one of the 2^n sign patterns by convolution.
    """
    total = int(doubled_ranks.sum())
    counts = np.zeros(total + 1, dtype=np.int64)
    counts[0] = 1
    for r in doubled_ranks:
        shifted = np.zeros_like(counts)
        shifted[r:] = counts[: total + 1 - r]
        counts = counts + shifted
    return int(counts[: threshold + 1].sum())


def wilcoxon_signed_rank(pairs: Sequence[Tuple[float, float]],
                         exact_max_n: int = WILCOXON_EXACT_MAX_N) -> TestResult:
    """
    Two-sided Wilcoxon signed-rank test on paired samples

    Zero differences are dropped and tied |differences| get average ranks.
    The statistic is min(W+, W-). With n <= exact_max_n non-zero differences
    the p-value is exact, otherwise a normal approximation with continuity and
    tie correction is used.

    Args:
        pairs: (x, y) pairs; differences are x - y
        exact_max_n: Largest n for exact enumeration

    Returns:
        TestResult
    """
    data = np.asarray(pairs, dtype=float).reshape(-1, 2)
    diffs = data[:, 0] - data[:, 1]
    nonzero = diffs[diffs != 0]

    if len(diffs) > 0 and len(nonzero) == 0:
        raise ZeroDifferencesError(f"all {len(diffs)} paired differences are zero")
    if len(nonzero) < 2:
        raise InsufficientDataError(
            f"need at least 2 non-zero differences, got {len(nonzero)}"
        )

    n = len(nonzero)
    ranks = stats.rankdata(np.abs(nonzero))
    w_plus = float(ranks[nonzero > 0].sum())
    w_minus = float(ranks[nonzero < 0].sum())
    statistic = min(w_plus, w_minus)

    if n <= exact_max_n:
        doubled = np.rint(2 * ranks).astype(np.int64)
        lower = _exact_lower_tail(doubled, int(round(2 * statistic)))
        p_value = min(1.0, 2.0 * lower / 2.0 ** n)
        method = TestMethod.EXACT
    else:
        mean = n * (n + 1) / 4.0
        _, tie_counts = np.unique(ranks, return_counts=True)
        var = n * (n + 1) * (2 * n + 1) / 24.0 - float(np.sum(tie_counts ** 3 - tie_counts)) / 48.0
        z = max(abs(w_plus - mean) - 0.5, 0.0) / np.sqrt(var)
        p_value = min(1.0, 2.0 * float(stats.norm.sf(z)))
        method = TestMethod.NORMAL_APPROX

    return TestResult(statistic=statistic, p_value=p_value, n=n, method=method)


# =============================================================================
# SPEARMAN RANK CORRELATION
# =============================================================================

def _standardize(values: np.ndarray) -> np.ndarray:
    centered = values - values.mean()
    return centered / np.sqrt(np.sum(centered ** 2))


def spearman(x: Sequence[float], y: Sequence[float],
             n_perm: int = SPEARMAN_PERMUTATIONS,
             seed: Optional[int] = None) -> TestResult:
    """
    Spearman's rho with a two-sided Monte Carlo permutation p-value

    rho is the Pearson correlation of average-tie ranks. The p-value shuffles y
    n_perm times and applies the add-one correction (count + 1) / (n_perm + 1).

    Args:
        x, y: Equal-length samples, at least 3 values each
        n_perm: Number of shuffles
        seed: Seed of the shuffle stream

    Returns:
        TestResult with statistic = rho
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ConfigError(f"x and y must be 1-d and the same length, got {x.shape} and {y.shape}")
    if len(x) < 3:
        raise InsufficientDataError(f"need at least 3 observations, got {len(x)}")
    if n_perm < 1:
        raise ConfigError(f"n_perm must be >= 1, got {n_perm}")
    if np.all(x == x[0]):
        raise ConstantInputError("x is constant, rho is undefined")
    if np.all(y == y[0]):
        raise ConstantInputError("y is constant, rho is undefined")

    a = _standardize(stats.rankdata(x))
    b = _standardize(stats.rankdata(y))
    rho = float(np.clip(a @ b, -1.0, 1.0))

    rng = np.random.default_rng(seed)
    n = len(b)
    extreme = 0
    for start in range(0, n_perm, _PERMUTATION_CHUNK):
        size = min(_PERMUTATION_CHUNK, n_perm - start)
        shuffles = rng.permuted(np.tile(np.arange(n), (size, 1)), axis=1)
        permuted_rho = b[shuffles] @ a
        extreme += int(np.sum(np.abs(permuted_rho) >= abs(rho) - 1e-12))

    p_value = (extreme + 1) / (n_perm + 1)
    logger.debug("spearman rho=%.4f p=%.4g (n=%d, %d shuffles)", rho, p_value, n, n_perm)
    return TestResult(statistic=rho, p_value=p_value, n=n, method=TestMethod.PERMUTATION)
