"""
Hub Alter Analysis
Per-rank proportion of hub alters and its availability-constrained
permutation null model
"""

import logging
from dataclasses import dataclass
from functools import partial
from typing import List, Sequence

import numpy as np
import pandas as pd

from src.config import MIN_AVAILABLE, N_PERMUTATIONS, NULL_COVERAGE, SPEARMAN_PERMUTATIONS
from src.aggregators.significance import TestResult, spearman
from src.egodata.records import EgoDataset, EgoRecord
from src.exceptions import ConfigError, EmptyResultError
from src.utils.helpers import chunk_ranges, derive_rng, parallel_map

logger = logging.getLogger(__name__)

_PERMUTATIONS_PER_TASK = 50


# =============================================================================
# RESULT TYPES
# =============================================================================

@dataclass(frozen=True)
class HubProportionCurve:
    """Index i of every array describes rank i + 1"""
    ranks: np.ndarray
    n_dyads: np.ndarray
    n_hub: np.ndarray
    n_egos: int

    @property
    def proportion(self) -> np.ndarray:
        with np.errstate(invalid="ignore", divide="ignore"):
            return np.where(self.n_dyads > 0, self.n_hub / np.maximum(self.n_dyads, 1), np.nan)


@dataclass(frozen=True)
class NullBand:
    """Pointwise middle-`coverage` envelope of the hub proportion under the null"""
    ranks: np.ndarray
    lo: np.ndarray
    hi: np.ndarray
    mean: np.ndarray
    n_perm: int
    coverage: float


# =============================================================================
# HUB ALTERS
# =============================================================================

def hub_rank(ego: EgoRecord) -> int:
    """
    Rank of the ego's available alter with the largest outdegree

    Ties go to the lowest rank.
    """
    best = None
    for alter in ego.alters:
        if not alter.available:
            continue
        if best is None or alter.outdegree > best.outdegree:
            best = alter
    if best is None:
        raise EmptyResultError(f"ego {ego.ego_id} has no alter with available outdegree")
    return best.rank


def eligible_egos(dataset: EgoDataset, min_available: int = MIN_AVAILABLE) -> List[EgoRecord]:
    """Egos with at least min_available alters of known outdegree"""
    if min_available < 1:
        raise ConfigError(f"min_available must be >= 1, got {min_available}")
    eligible = [ego for ego in dataset.egos if len(ego.available_ranks) >= min_available]
    if not eligible:
        raise EmptyResultError(f"no ego has at least {min_available} available alters")
    logger.info("%d of %d egos have >= %d available alters", len(eligible), len(dataset.egos), min_available)
    return eligible


def _dyads_by_rank(egos: Sequence[EgoRecord]) -> np.ndarray:
    max_rank = max(max(ego.available_ranks) for ego in egos)
    counts = np.zeros(max_rank, dtype=np.int64)
    for ego in egos:
        counts[np.asarray(ego.available_ranks) - 1] += 1
    return counts


def hub_proportion_by_rank(dataset: EgoDataset, min_available: int = MIN_AVAILABLE) -> HubProportionCurve:
    """
    Share of eligible egos whose hub alter sits at each rank

    n_dyads(r) counts eligible egos with an available alter at rank r and
    n_hub(r) those whose hub alter has rank r.
    """
    egos = eligible_egos(dataset, min_available)
    n_dyads = _dyads_by_rank(egos)
    n_hub = np.zeros_like(n_dyads)
    for ego in egos:
        n_hub[hub_rank(ego) - 1] += 1

    return HubProportionCurve(
        ranks=np.arange(1, len(n_dyads) + 1),
        n_dyads=n_dyads,
        n_hub=n_hub,
        n_egos=len(egos),
    )


# =============================================================================
# PERMUTATION NULL
# =============================================================================

def _null_proportions(indices: range, flat_ranks: np.ndarray, offsets: np.ndarray,
                      sizes: np.ndarray, n_dyads: np.ndarray, seed: int) -> np.ndarray:
    """Null hub proportions for permutations in `indices`, one row each"""
    out = np.empty((len(indices), len(n_dyads)))
    for row, index in enumerate(indices):
        rng = derive_rng(seed, index)
        picks = flat_ranks[offsets + rng.integers(0, sizes)]
        counts = np.bincount(picks, minlength=len(n_dyads) + 1)[1:]
        out[row] = counts / np.maximum(n_dyads, 1)
    return out


def permutation_null_band(dataset: EgoDataset, n_perm: int = N_PERMUTATIONS, seed: int = 0,
                          coverage: float = NULL_COVERAGE, min_available: int = MIN_AVAILABLE,
                          workers: int = 1, progress: bool = False) -> NullBand:
    """
    Hub proportion envelope when every available rank is equally likely to hold the hub

    In each permutation every eligible ego's hub rank is drawn uniformly from that
    ego's own available ranks, so unavailable alters can never be chosen.
    Permutation i draws from derive_rng(seed, i).

    Args:
        dataset: Ego dataset
        n_perm: Number of permutations
        seed: Master seed
        coverage: Central mass of the band (0.95 = 2.5th to 97.5th percentile)
        min_available: Same eligibility filter as hub_proportion_by_rank
        workers: Process pool size
        progress: Show a progress bar

    Returns:
        NullBand over ranks 1..max available rank
    """
    if n_perm < 1:
        raise ConfigError(f"n_perm must be >= 1, got {n_perm}")
    if not 0 < coverage < 1:
        raise ConfigError(f"coverage must be in (0, 1), got {coverage}")

    egos = eligible_egos(dataset, min_available)
    n_dyads = _dyads_by_rank(egos)
    available = [np.asarray(ego.available_ranks, dtype=np.int64) for ego in egos]
    sizes = np.array([len(a) for a in available], dtype=np.int64)
    offsets = np.concatenate(([0], np.cumsum(sizes)[:-1]))

    task = partial(_null_proportions, flat_ranks=np.concatenate(available), offsets=offsets,
                   sizes=sizes, n_dyads=n_dyads, seed=seed)
    blocks = parallel_map(task, chunk_ranges(n_perm, _PERMUTATIONS_PER_TASK),
                          workers=workers, progress=progress, desc="Permutations")
    proportions = np.vstack(blocks)

    tail = (1.0 - coverage) / 2.0
    lo, hi = np.quantile(proportions, [tail, 1.0 - tail], axis=0)
    mean = proportions.mean(axis=0)
    # the envelope always contains the null mean
    lo, hi = np.minimum(lo, mean), np.maximum(hi, mean)

    missing = n_dyads == 0
    lo[missing] = hi[missing] = mean[missing] = np.nan

    logger.info("Null band from %d permutations over %d egos", n_perm, len(egos))
    return NullBand(ranks=np.arange(1, len(n_dyads) + 1), lo=lo, hi=hi, mean=mean,
                    n_perm=n_perm, coverage=coverage)


def band_coverage(curve: HubProportionCurve, band: NullBand) -> float:
    """Fraction of populated ranks whose observed proportion lies inside the band"""
    mask = curve.n_dyads > 0
    observed = curve.proportion[mask]
    inside = (observed >= band.lo[mask]) & (observed <= band.hi[mask])
    return float(np.mean(inside))


# =============================================================================
# TREND TEST
# =============================================================================

def hub_trend_test(curve: HubProportionCurve, n_perm: int = SPEARMAN_PERMUTATIONS,
                   seed: int = 0) -> TestResult:
    """Spearman's rho between rank and hub proportion over ranks that have dyads"""
    mask = curve.n_dyads > 0
    return spearman(curve.ranks[mask], curve.proportion[mask], n_perm=n_perm, seed=seed)


def hub_table(curve: HubProportionCurve, band: NullBand) -> pd.DataFrame:
    """Observed curve and null band side by side, one row per rank"""
    return pd.DataFrame({
        "rank": curve.ranks,
        "n_dyads": curve.n_dyads,
        "n_hub": curve.n_hub,
        "proportion": curve.proportion,
        "null_mean": band.mean,
        "null_lo": band.lo,
        "null_hi": band.hi,
    })
