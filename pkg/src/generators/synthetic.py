"""
Synthetic egocentric datasets
Zipf contact volumes, a tunable rank-degree coupling and random
unavailability, standing in for proprietary communication records
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from src.config import (
    DEGREE_MODE,
    DEGREE_SIGMA,
    MIN_DEGREE,
    SYNTH_ALTERS,
    SYNTH_BASE_VOLUME,
    SYNTH_COUPLING,
    SYNTH_EGOS,
    SYNTH_UNAVAILABLE,
    SYNTH_ZIPF_EXPONENT,
)
from src.egodata.records import AlterRecord, EgoDataset, EgoRecord, with_report
from src.exceptions import ConfigError
from src.generators.degrees import DegreeSpec, draw_degrees, lognormal_from_mode

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SynthParams:
    """
    Parameters of synth_ego_dataset

    Each ego gets between min_alters_per_ego and alters_per_ego alters
    (min_alters_per_ego defaults to alters_per_ego, a fixed count).
    """
    n_egos: int = SYNTH_EGOS
    alters_per_ego: int = SYNTH_ALTERS
    zipf_exponent: float = SYNTH_ZIPF_EXPONENT
    base_volume: float = SYNTH_BASE_VOLUME
    coupling: float = SYNTH_COUPLING
    degree_spec: DegreeSpec = field(default_factory=lambda: lognormal_from_mode(DEGREE_MODE, DEGREE_SIGMA))
    min_degree: int = MIN_DEGREE
    fraction_unavailable: float = SYNTH_UNAVAILABLE
    min_alters_per_ego: Optional[int] = None

    @property
    def alter_range(self):
        low = self.alters_per_ego if self.min_alters_per_ego is None else self.min_alters_per_ego
        return low, self.alters_per_ego

    def validate(self) -> None:
        if self.n_egos < 1:
            raise ConfigError(f"n_egos must be >= 1, got {self.n_egos}")
        if self.alters_per_ego < 1:
            raise ConfigError(f"alters_per_ego must be >= 1, got {self.alters_per_ego}")
        low, high = self.alter_range
        if not 1 <= low <= high:
            raise ConfigError(f"min_alters_per_ego must be in [1, {high}], got {low}")
        if not self.zipf_exponent > 0:
            raise ConfigError(f"zipf_exponent must be > 0, got {self.zipf_exponent}")
        if not self.base_volume > 0:
            raise ConfigError(f"base_volume must be > 0, got {self.base_volume}")
        if not 0 <= self.coupling <= 1:
            raise ConfigError(f"coupling must be in [0, 1], got {self.coupling}")
        if not 0 <= self.fraction_unavailable < 1:
            raise ConfigError(f"fraction_unavailable must be in [0, 1), got {self.fraction_unavailable}")


def zipf_volumes(n_ranks: int, base_volume: float, exponent: float) -> np.ndarray:
    """round(base_volume * r^-exponent) for r = 1..n_ranks, floored at 1"""
    ranks = np.arange(1, n_ranks + 1, dtype=float)
    return np.maximum(np.rint(base_volume * ranks ** -exponent), 1).astype(np.int64)


def synth_ego_dataset(params: SynthParams, seed: int = None) -> EgoDataset:
    """
    Generate an ego dataset with controllable rank-degree structure

    Per ego: alter outdegrees are drawn from params.degree_spec; with probability
    `coupling` they are sorted ascending over ranks (rank 1 = lowest degree),
    otherwise left in draw order. Each alter is then masked as unavailable with
    probability `fraction_unavailable`.

    Args:
        params: SynthParams
        seed: Random seed

    Returns:
        Validated EgoDataset
    """
    params.validate()
    rng = np.random.default_rng(seed)
    low, high = params.alter_range
    volumes = zipf_volumes(high, params.base_volume, params.zipf_exponent)

    ego_width = len(str(params.n_egos))
    rank_width = len(str(high))
    ego_degrees = draw_degrees(params.degree_spec, params.n_egos, params.min_degree, rng)

    egos = []
    for index in range(params.n_egos):
        ego_id = f"e{index + 1:0{ego_width}d}"
        n_alters = int(rng.integers(low, high + 1))
        degrees = draw_degrees(params.degree_spec, n_alters, params.min_degree, rng)
        if rng.random() < params.coupling:
            degrees = np.sort(degrees)
        unavailable = rng.random(n_alters) < params.fraction_unavailable

        alters = tuple(
            AlterRecord(
                alter_id=f"{ego_id}-a{rank:0{rank_width}d}",
                rank=rank,
                contact_volume=int(volumes[rank - 1]),
                outdegree=None if unavailable[rank - 1] else int(degrees[rank - 1]),
            )
            for rank in range(1, n_alters + 1)
        )
        egos.append(EgoRecord(ego_id=ego_id, outdegree=int(ego_degrees[index]), alters=alters))

    dataset = with_report(EgoDataset(egos=tuple(egos)))
    logger.info("Synthesized %d egos with %d dyads", len(dataset), dataset.n_dyads)
    return dataset
