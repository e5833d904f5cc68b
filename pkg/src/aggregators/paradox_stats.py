"""
Friendship Paradox Statistics
Prevalence, rank-1 comparison, per-rank degree summaries, decile-binned
contact-volume curves and Zipf fitting of contact volume against alter rank
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from scipy import stats

from src.config import CONTACT_BINS, MAX_RANK, N_DECILES, ZIPF_MIN_DYADS
from src.aggregators.significance import TestResult, wilcoxon_signed_rank
from src.egodata.records import EgoDataset, dataset_frame
from src.exceptions import (
    ConfigError,
    EmptyResultError,
    InsufficientDataError,
    ZeroDifferencesError,
)

logger = logging.getLogger(__name__)

AGGREGATORS = {"mean": np.mean, "median": np.median}


# =============================================================================
# RESULT TYPES
# =============================================================================

@dataclass(frozen=True)
class RankSummary:
    """Alter outdegree statistics at one rank; NaN statistics when n_dyads == 0"""
    rank: int
    n_dyads: int
    mean_k: float
    median_k: float
    q25: float
    q75: float


@dataclass(frozen=True)
class DecilePoint:
    mean_contact_volume: float
    mean_alter_k: float
    n: int


@dataclass(frozen=True)
class DecileCurve:
    decile: int
    points: Tuple[DecilePoint, ...]


@dataclass(frozen=True)
class ZipfFit:
    """volume ~ 10**log_prefactor * rank**(-exponent)"""
    exponent: float
    log_prefactor: float
    r_squared: float
    ranks_used: int


@dataclass(frozen=True)
class Rank1Comparison:
    n: int
    fraction_lower: float
    ego_mean: float
    alter1_mean: float
    ego_median: float
    alter1_median: float
    wilcoxon: Optional[TestResult]
    wilcoxon_note: str = ""


# =============================================================================
# PARADOX PREVALENCE
# =============================================================================

def paradox_prevalence(dataset: EgoDataset, aggregator: str = "mean") -> float:
    """
    Fraction of egos whose outdegree is strictly below the mean (or median)
    outdegree of their available alters

    Egos without an available alter are left out of the denominator.
    """
    if aggregator not in AGGREGATORS:
        raise ConfigError(f"aggregator must be one of {sorted(AGGREGATORS)}, got {aggregator!r}")
    aggregate = AGGREGATORS[aggregator]

    eligible = 0
    paradox = 0
    for ego in dataset.egos:
        degrees = [a.outdegree for a in ego.alters if a.available]
        if not degrees:
            continue
        eligible += 1
        if ego.outdegree < aggregate(degrees):
            paradox += 1

    if eligible == 0:
        raise EmptyResultError("no ego has an alter with available outdegree")
    return paradox / eligible


def rank1_comparison(dataset: EgoDataset) -> Rank1Comparison:
    """
    Compare each ego with its rank-1 (most contacted) alter

    Only egos whose rank-1 alter has an available outdegree take part. The
    Wilcoxon signed-rank test runs on the paired (ego k, rank-1 alter k); when
    every pair is tied the test is skipped and the reason recorded.
    """
    pairs = []
    for ego in dataset.egos:
        first = ego.alter_at(1)
        if first is not None and first.available:
            pairs.append((ego.outdegree, first.outdegree))

    if len(pairs) < 2:
        raise InsufficientDataError(f"need at least 2 egos with an available rank-1 alter, got {len(pairs)}")

    data = np.asarray(pairs, dtype=float)
    ego_k, alter_k = data[:, 0], data[:, 1]

    wilcoxon = None
    note = ""
    try:
        wilcoxon = wilcoxon_signed_rank(pairs)
    except (ZeroDifferencesError, InsufficientDataError) as e:
        note = str(e)
        logger.warning("Wilcoxon test skipped: %s", note)

    return Rank1Comparison(
        n=len(pairs),
        fraction_lower=float(np.mean(ego_k < alter_k)),
        ego_mean=float(ego_k.mean()),
        alter1_mean=float(alter_k.mean()),
        ego_median=float(np.median(ego_k)),
        alter1_median=float(np.median(alter_k)),
        wilcoxon=wilcoxon,
        wilcoxon_note=note,
    )


def paradox_by_rank(dataset: EgoDataset, max_rank: int = MAX_RANK) -> List[Tuple[int, int, float]]:
    """
    For each rank r, the fraction of egos with lower outdegree than their rank-r alter

    Returns:
        (rank, n_egos, fraction_lower) rows; fraction is NaN when n_egos == 0
    """
    if max_rank < 1:
        raise ConfigError(f"max_rank must be >= 1, got {max_rank}")
    rows = []
    for rank in range(1, max_rank + 1):
        lower = []
        for ego in dataset.egos:
            alter = ego.alter_at(rank)
            if alter is not None and alter.available:
                lower.append(ego.outdegree < alter.outdegree)
        rows.append((rank, len(lower), float(np.mean(lower)) if lower else float("nan")))
    return rows


def mean_degree_summary(dataset: EgoDataset) -> Dict[str, float]:
    """Headline means and medians of ego and available alter outdegrees"""
    ego_k = np.array([ego.outdegree for ego in dataset.egos], dtype=float)
    alter_k = np.array([a.outdegree for ego in dataset.egos for a in ego.alters if a.available], dtype=float)
    if len(ego_k) == 0 or len(alter_k) == 0:
        raise EmptyResultError("dataset has no egos or no available alters")
    return {
        "ego_mean": float(ego_k.mean()),
        "ego_median": float(np.median(ego_k)),
        "alter_mean": float(alter_k.mean()),
        "alter_median": float(np.median(alter_k)),
    }


# =============================================================================
# RANK-DEGREE SUMMARIES
# =============================================================================

def rank_degree_summary(dataset: EgoDataset, max_rank: int = MAX_RANK) -> List[RankSummary]:
    """
    Alter outdegree statistics at each rank 1..max_rank over available dyads

    Quartiles use linear interpolation, so the median of an even count is the
    midpoint of the two central values.
    """
    if max_rank < 1:
        raise ConfigError(f"max_rank must be >= 1, got {max_rank}")

    frame = dataset_frame(dataset).dropna(subset=["alter_outdegree"])
    grouped = {rank: group["alter_outdegree"].to_numpy() for rank, group in frame.groupby("rank")}

    summaries = []
    for rank in range(1, max_rank + 1):
        k = grouped.get(rank, np.empty(0))
        if len(k) == 0:
            summaries.append(RankSummary(rank, 0, np.nan, np.nan, np.nan, np.nan))
            continue
        q25, median, q75 = np.percentile(k, [25, 50, 75])
        summaries.append(RankSummary(rank, len(k), float(k.mean()), float(median), float(q25), float(q75)))
    return summaries


def degree_histogram(dataset: EgoDataset, who: str = "ego") -> pd.DataFrame:
    """
    Empirical outdegree distribution as a degree,probability table

    who='ego' counts each ego once; who='alter' counts every available dyad.
    """
    if who == "ego":
        values = [ego.outdegree for ego in dataset.egos]
    elif who == "alter":
        values = [a.outdegree for ego in dataset.egos for a in ego.alters if a.available]
    else:
        raise ConfigError(f"who must be 'ego' or 'alter', got {who!r}")
    if not values:
        raise EmptyResultError(f"no {who} outdegrees to histogram")

    counts = pd.Series(values, dtype="int64").value_counts().sort_index()
    return pd.DataFrame({"degree": counts.index.astype("int64"), "probability": counts.to_numpy() / counts.sum()})


# =============================================================================
# DECILE-BINNED CONTACT VOLUME
# =============================================================================

def assign_deciles(outdegrees: Sequence[float], n_deciles: int = N_DECILES) -> np.ndarray:
    """
    Decile (1..n_deciles) of each value by quantile boundaries

    A value equal to a boundary falls in the lower decile.
    """
    values = np.asarray(outdegrees, dtype=float)
    edges = np.quantile(values, np.arange(1, n_deciles) / n_deciles)
    return np.searchsorted(edges, values, side="left") + 1


def decile_contact_curves(dataset: EgoDataset, log10_degree: bool = False,
                          n_bins: int = CONTACT_BINS) -> List[DecileCurve]:
    """
    Mean alter outdegree against contact volume, within deciles of ego outdegree

    Egos (with at least one alter) are split into deciles of their outdegree.
    Within a decile the available dyads are sorted by contact volume and cut
    into n_bins equal-population bins. With log10_degree, alter outdegrees are
    log10-transformed before averaging (zero degrees count as log10(1) = 0).

    Returns:
        One DecileCurve per decile, empty when a decile has no available dyads
    """
    if n_bins < 2:
        raise ConfigError(f"n_bins must be >= 2, got {n_bins}")
    egos = [ego for ego in dataset.egos if ego.alters]
    if len(egos) < N_DECILES:
        raise InsufficientDataError(f"need at least {N_DECILES} egos with alters, got {len(egos)}")

    deciles = assign_deciles([ego.outdegree for ego in egos])
    curves = []
    for decile in range(1, N_DECILES + 1):
        dyads = [
            (alter.contact_volume, alter.outdegree)
            for ego, d in zip(egos, deciles) if d == decile
            for alter in ego.alters if alter.available
        ]
        if not dyads:
            curves.append(DecileCurve(decile, ()))
            continue

        data = np.asarray(dyads, dtype=float)
        data = data[np.argsort(data[:, 0], kind="stable")]
        if log10_degree:
            data[:, 1] = np.log10(np.maximum(data[:, 1], 1.0))

        points = tuple(
            DecilePoint(float(chunk[:, 0].mean()), float(chunk[:, 1].mean()), len(chunk))
            for chunk in np.array_split(data, n_bins)
            if len(chunk)
        )
        curves.append(DecileCurve(decile, points))
    return curves


# =============================================================================
# ZIPF SCALING
# =============================================================================

def fit_zipf(ranks: Sequence[int], volumes: Sequence[float],
             min_dyads: int = ZIPF_MIN_DYADS) -> ZipfFit:
    """
    Least-squares fit of log10(mean volume at rank) on log10(rank)

    Volumes are averaged per rank first; ranks with fewer than min_dyads dyads
    are left out. The exponent is the negated slope.
    """
    frame = pd.DataFrame({"rank": np.asarray(ranks, dtype=float), "volume": np.asarray(volumes, dtype=float)})
    per_rank = frame.groupby("rank")["volume"].agg(["mean", "size"])
    per_rank = per_rank[(per_rank["size"] >= min_dyads) & (per_rank["mean"] > 0)]

    if len(per_rank) < 2:
        raise InsufficientDataError(
            f"need at least 2 ranks with >= {min_dyads} dyads, got {len(per_rank)}"
        )

    fit = stats.linregress(np.log10(per_rank.index.to_numpy()), np.log10(per_rank["mean"].to_numpy()))
    return ZipfFit(
        exponent=float(-fit.slope),
        log_prefactor=float(fit.intercept),
        r_squared=float(min(1.0, fit.rvalue ** 2)),
        ranks_used=len(per_rank),
    )


def zipf_fit(dataset: EgoDataset, min_dyads: int = ZIPF_MIN_DYADS) -> ZipfFit:
    """Fit contact volume = C * rank^(-exponent) over every dyad of the dataset"""
    frame = dataset_frame(dataset)
    return fit_zipf(frame["rank"].to_numpy(), frame["contact_volume"].to_numpy(), min_dyads)


# =============================================================================
# TABLES
# =============================================================================

def rank_summary_frame(summaries: Sequence[RankSummary]) -> pd.DataFrame:
    return pd.DataFrame(
        [(s.rank, s.n_dyads, s.mean_k, s.median_k, s.q25, s.q75) for s in summaries],
        columns=["rank", "n_dyads", "mean_k", "median_k", "q25", "q75"],
    )


def decile_frame(curves: Sequence[DecileCurve]) -> pd.DataFrame:
    rows = [
        (curve.decile, i, p.mean_contact_volume, p.mean_alter_k, p.n)
        for curve in curves
        for i, p in enumerate(curve.points, start=1)
    ]
    return pd.DataFrame(rows, columns=["decile", "bin", "mean_volume", "mean_k", "n"])


def zipf_frame(fit: ZipfFit) -> pd.DataFrame:
    return pd.DataFrame(
        [(fit.exponent, fit.log_prefactor, fit.r_squared, fit.ranks_used)],
        columns=["exponent", "log_prefactor", "r_squared", "ranks_used"],
    )


# =============================================================================
# AGGREGATOR
# =============================================================================

class ParadoxAggregator:
    """
    Runs every paradox statistic over one dataset and collects the headline
    numbers into a flat insights dict
    """

    def __init__(self, dataset: EgoDataset, max_rank: int = MAX_RANK):
        """
        Initialize with a dataset

        Args:
            dataset: Parsed or synthetic EgoDataset
            max_rank: Highest alter rank summarised
        """
        self.dataset = dataset
        self.max_rank = max_rank
        self.insights: Dict[str, Any] = {}

    def aggregate_prevalence(self) -> Dict[str, float]:
        """Paradox prevalence under both aggregators"""
        prevalence = {
            f"prevalence_{name}": paradox_prevalence(self.dataset, name)
            for name in AGGREGATORS
        }
        self.insights.update(prevalence)
        return prevalence

    def aggregate_rank1(self) -> Rank1Comparison:
        """Ego against rank-1 alter, with the Wilcoxon test"""
        comparison = rank1_comparison(self.dataset)
        self.insights.update({
            "rank1_n": comparison.n,
            "rank1_fraction_lower": comparison.fraction_lower,
            "rank1_ego_mean": comparison.ego_mean,
            "rank1_alter_mean": comparison.alter1_mean,
            "rank1_ego_median": comparison.ego_median,
            "rank1_alter_median": comparison.alter1_median,
        })
        if comparison.wilcoxon is not None:
            self.insights.update({
                "wilcoxon_statistic": comparison.wilcoxon.statistic,
                "wilcoxon_p_value": comparison.wilcoxon.p_value,
                "wilcoxon_n": comparison.wilcoxon.n,
                "wilcoxon_method": comparison.wilcoxon.method.value,
            })
        else:
            self.insights["wilcoxon_note"] = comparison.wilcoxon_note
        return comparison

    def aggregate_degrees(self) -> Dict[str, float]:
        """Headline ego and alter outdegree means/medians"""
        summary = mean_degree_summary(self.dataset)
        self.insights.update(summary)
        return summary

    def aggregate_by_rank(self) -> List[Tuple[int, int, float]]:
        """Share of egos below their rank-r alter, for every rank"""
        rows = paradox_by_rank(self.dataset, self.max_rank)
        for rank, n, fraction in rows:
            if n:
                self.insights[f"fraction_lower_rank{rank}"] = fraction
        return rows

    def generate_insights(self) -> Dict[str, Any]:
        """Run every aggregation and return the collected insights"""
        self.aggregate_prevalence()
        self.aggregate_rank1()
        self.aggregate_degrees()
        self.aggregate_by_rank()
        return self.insights

    def insights_frame(self) -> pd.DataFrame:
        """insights as a two-column metric,value table"""
        return pd.DataFrame(list(self.insights.items()), columns=["metric", "value"])
