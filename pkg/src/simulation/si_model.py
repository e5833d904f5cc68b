"""
Susceptible-Infected spreading with contact-volume-dependent transmission

Two regimes per infection attempt:
  uniform - probability beta on every edge
  rank    - ego i passes to its rank-r neighbor with probability C_i / r,
            C_i = n_i * beta / H(n_i), so the expected number of secondary
            infections from a fully susceptible neighborhood is n_i * beta in both
Neighbors are ranked once by ascending degree (rank 1 = least connected).
"""

import logging
import math
from dataclasses import dataclass, replace
from enum import Enum
from functools import partial
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from src.config import BETA, CI_Z, CLIP_PROBABILITIES, REPLICATES, STEPS
from src.exceptions import ConfigError
from src.generators.graphs import Graph
from src.utils.helpers import chunk_ranges, derive_rng, parallel_map

logger = logging.getLogger(__name__)


class Regime(str, Enum):
    UNIFORM = "uniform"
    RANK = "rank"


# =============================================================================
# CONFIGURATION AND RESULTS
# =============================================================================

@dataclass(frozen=True)
class OutbreakConfig:
    """
    seed_node None picks a uniformly random node in every replicate.
    Replicate r draws from derive_rng(master_seed, r).
    """
    beta: float = BETA
    p_mix: float = 0.0
    steps: int = STEPS
    replicates: int = REPLICATES
    seed_node: Optional[int] = None
    master_seed: int = 0
    clip: bool = CLIP_PROBABILITIES

    def validate(self) -> None:
        if not 0 <= self.beta <= 1:
            raise ConfigError(f"beta must be in [0, 1], got {self.beta}")
        if not 0 <= self.p_mix <= 1:
            raise ConfigError(f"p_mix must be in [0, 1], got {self.p_mix}")
        if self.steps < 1:
            raise ConfigError(f"steps must be >= 1, got {self.steps}")
        if self.replicates < 1:
            raise ConfigError(f"replicates must be >= 1, got {self.replicates}")


@dataclass(frozen=True)
class EpidemicCurve:
    """
    Index t = 0..steps. total[0] = 1 (the seed), new[0] = 1, and
    new[t] = total[t] - total[t - 1] afterwards. clipped[t] counts rank-regime
    attempts in step t whose probability C_i / r exceeded 1 and was clipped.
    """
    total: np.ndarray
    new: np.ndarray
    clipped: np.ndarray
    seed_node: int


@dataclass(frozen=True)
class EnsembleResult:
    p_mix: float
    replicates: int
    mean_total: np.ndarray
    total_ci_lo: np.ndarray
    total_ci_hi: np.ndarray
    mean_new: np.ndarray
    new_ci_lo: np.ndarray
    new_ci_hi: np.ndarray
    clipped_attempts: np.ndarray

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            "p_mix": self.p_mix,
            "step": np.arange(len(self.mean_total)),
            "mean_total": self.mean_total,
            "total_ci_lo": self.total_ci_lo,
            "total_ci_hi": self.total_ci_hi,
            "mean_new": self.mean_new,
            "new_ci_lo": self.new_ci_lo,
            "new_ci_hi": self.new_ci_hi,
            "clipped_attempts": self.clipped_attempts,
        })


# =============================================================================
# RANKS AND TRANSMISSION PROBABILITIES
# =============================================================================

def harmonic(n: int) -> float:
    """H(n) = sum_{k=1..n} 1/k"""
    return float(np.sum(1.0 / np.arange(1, n + 1)))


def neighbor_ranks(graph: Graph) -> np.ndarray:
    """
    Rank of every neighbor entry, aligned with graph.indices

    Within each node's neighbor list, rank 1 is the lowest-degree neighbor;
    equal degrees are ordered by node index. The ranking is static.
    """
    degree = graph.degree
    owner = np.repeat(np.arange(graph.n_nodes), degree)
    order = np.lexsort((graph.indices, degree[graph.indices], owner))
    ranks = np.empty(len(order), dtype=np.int64)
    ranks[order] = np.arange(len(order)) - graph.indptr[owner[order]] + 1
    return ranks


def rank_beta(n_i: int, r: int, beta: float, clip: bool = CLIP_PROBABILITIES) -> float:
    """
    Transmission probability to the rank-r alter of an ego with n_i alters

    C_i / r with C_i = n_i * beta / H(n_i); capped at 1 when clip is set.
    """
    if not 1 <= r <= n_i:
        raise ConfigError(f"rank {r} outside 1..{n_i}")
    p = n_i * beta / harmonic(n_i) / r
    return min(1.0, p) if clip else p


def edge_rank_probabilities(graph: Graph, ranks: np.ndarray, beta: float) -> np.ndarray:
    """Unclipped C_i / r for every neighbor entry, aligned with graph.indices"""
    degree = graph.degree
    if len(ranks) == 0:
        return np.zeros(0)
    harmonics = np.concatenate(([1.0], np.cumsum(1.0 / np.arange(1, degree.max() + 1))))
    owner = np.repeat(np.arange(graph.n_nodes), degree)
    c = degree * beta / harmonics[degree]
    return c[owner] / ranks


# =============================================================================
# SINGLE OUTBREAK
# =============================================================================

def _edge_positions(graph: Graph, sources: np.ndarray) -> np.ndarray:
    """Positions in graph.indices of every neighbor entry of `sources`"""
    starts = graph.indptr[sources]
    lengths = graph.indptr[sources + 1] - starts
    offsets = np.cumsum(lengths) - lengths
    return np.arange(lengths.sum()) - np.repeat(offsets, lengths) + np.repeat(starts, lengths)


def run_outbreak(graph: Graph, config: OutbreakConfig, replicate_index: int = 0,
                 rank_probabilities: Optional[np.ndarray] = None) -> EpidemicCurve:
    """
    One synchronous SI outbreak

    At each step every infected node tries once to infect each susceptible
    neighbor. Per attempt the regime is rank with probability p_mix, uniform
    otherwise. Nodes infected in step t start spreading in step t + 1.

    Args:
        graph: Contact graph
        config: OutbreakConfig
        replicate_index: Selects the random stream derive_rng(master_seed, index)
        rank_probabilities: Precomputed edge_rank_probabilities (optional)

    Returns:
        EpidemicCurve over steps 0..config.steps
    """
    config.validate()
    if graph.n_nodes == 0:
        raise ConfigError("graph has no nodes")
    if rank_probabilities is None:
        rank_probabilities = edge_rank_probabilities(graph, neighbor_ranks(graph), config.beta)
    over_one = rank_probabilities > 1.0
    rank_p = np.minimum(rank_probabilities, 1.0) if config.clip else rank_probabilities

    rng = derive_rng(config.master_seed, replicate_index)
    if config.seed_node is None:
        seed_node = int(rng.integers(graph.n_nodes))
    else:
        seed_node = config.seed_node
        if not 0 <= seed_node < graph.n_nodes:
            raise ConfigError(f"seed node {seed_node} not in 0..{graph.n_nodes - 1}")

    infected = np.zeros(graph.n_nodes, dtype=bool)
    infected[seed_node] = True
    total = np.zeros(config.steps + 1, dtype=np.int64)
    new = np.zeros(config.steps + 1, dtype=np.int64)
    clipped = np.zeros(config.steps + 1, dtype=np.int64)
    total[0] = new[0] = 1

    for t in range(1, config.steps + 1):
        positions = _edge_positions(graph, np.flatnonzero(infected))
        targets = graph.indices[positions]
        susceptible = ~infected[targets]
        positions, targets = positions[susceptible], targets[susceptible]

        use_rank = rng.random(len(positions)) < config.p_mix
        p = np.where(use_rank, rank_p[positions], config.beta)
        hits = rng.random(len(positions)) < p

        if config.clip:
            clipped[t] = int(np.sum(use_rank & over_one[positions]))
        newly = np.unique(targets[hits])
        infected[newly] = True
        new[t] = len(newly)
        total[t] = total[t - 1] + len(newly)

    return EpidemicCurve(total=total, new=new, clipped=clipped, seed_node=seed_node)


# =============================================================================
# ENSEMBLES
# =============================================================================

def _run_replicates(indices: range, graph: Graph, config: OutbreakConfig,
                    rank_probabilities: np.ndarray):
    return [run_outbreak(graph, config, i, rank_probabilities) for i in indices]


def run_ensemble(graph: Graph, config: OutbreakConfig, workers: int = 1,
                 progress: bool = False) -> EnsembleResult:
    """
    Independent replicate outbreaks with 95% normal confidence intervals

    Per step the interval is mean +- CI_Z * sd / sqrt(replicates), with the
    sample standard deviation; a single replicate gives a zero-width interval.
    Replicates may run in a process pool without changing the result.
    """
    config.validate()
    rank_probabilities = edge_rank_probabilities(graph, neighbor_ranks(graph), config.beta)

    chunk = config.replicates if workers <= 1 else math.ceil(config.replicates / workers)
    if progress and workers <= 1:
        chunk = 1
    task = partial(_run_replicates, graph=graph, config=config, rank_probabilities=rank_probabilities)
    blocks = parallel_map(task, chunk_ranges(config.replicates, chunk), workers=workers,
                          progress=progress, desc=f"Replicates p={config.p_mix}")
    curves = [curve for block in blocks for curve in block]

    totals = np.vstack([c.total for c in curves]).astype(float)
    news = np.vstack([c.new for c in curves]).astype(float)
    clipped = np.sum([c.clipped for c in curves], axis=0)

    def interval(values: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        mean = values.mean(axis=0)
        if len(values) < 2:
            return mean, mean.copy(), mean.copy()
        half = CI_Z * values.std(axis=0, ddof=1) / np.sqrt(len(values))
        return mean, mean - half, mean + half

    mean_total, total_lo, total_hi = interval(totals)
    mean_new, new_lo, new_hi = interval(news)

    if clipped.sum():
        logger.warning("p=%s: %d rank-regime attempts clipped to probability 1", config.p_mix, int(clipped.sum()))
    logger.info("p=%s: mean final size %.1f over %d replicates", config.p_mix, mean_total[-1], config.replicates)

    return EnsembleResult(
        p_mix=config.p_mix,
        replicates=config.replicates,
        mean_total=mean_total,
        total_ci_lo=total_lo,
        total_ci_hi=total_hi,
        mean_new=mean_new,
        new_ci_lo=new_lo,
        new_ci_hi=new_hi,
        clipped_attempts=clipped.astype(np.int64),
    )


def sweep_p_mix(graph: Graph, config: OutbreakConfig, p_values: Sequence[float],
                workers: int = 1, progress: bool = False) -> pd.DataFrame:
    """One ensemble per p value, stacked as epidemic.csv rows"""
    frames = []
    for p in p_values:
        result = run_ensemble(graph, replace(config, p_mix=p), workers=workers, progress=progress)
        frames.append(result.to_frame())
    return pd.concat(frames, ignore_index=True)


# =============================================================================
# SECONDARY INFECTIONS
# =============================================================================

def _node_probabilities(graph: Graph, node: int, regime: Regime, beta: float, clip: bool) -> np.ndarray:
    if not 0 <= node < graph.n_nodes:
        raise ConfigError(f"node {node} not in 0..{graph.n_nodes - 1}")
    regime = Regime(regime)
    start, stop = graph.indptr[node], graph.indptr[node + 1]
    if regime is Regime.UNIFORM:
        return np.full(stop - start, float(beta))
    ranks = neighbor_ranks(graph)[start:stop]
    degree = stop - start
    p = degree * beta / harmonic(degree) / ranks if degree else np.zeros(0)
    return np.minimum(p, 1.0) if clip else p


def expected_secondary(graph: Graph, node: int, regime: Regime, beta: float = BETA,
                       susceptible: Optional[Iterable[int]] = None, clip: bool = False) -> float:
    """
    Expected infections caused by `node` in one step

    Ranks always come from the full neighborhood; only susceptible neighbors
    (all of them when susceptible is None) contribute.
    """
    p = _node_probabilities(graph, node, regime, beta, clip)
    if susceptible is not None:
        mask = np.isin(graph.neighbors(node), np.fromiter(susceptible, dtype=np.int64))
        p = p[mask]
    return float(p.sum())


def simulate_secondary(graph: Graph, node: int, regime: Regime, beta: float = BETA,
                       trials: int = 10_000, seed: int = 0, clip: bool = False) -> np.ndarray:
    """Monte Carlo single-step infection counts from `node` into a fully susceptible neighborhood"""
    p = _node_probabilities(graph, node, regime, beta, clip)
    rng = np.random.default_rng(seed)
    return np.sum(rng.random((trials, len(p))) < p, axis=1)
