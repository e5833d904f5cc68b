"""
Degree sequence sampling
Discretized lognormal or explicit histogram, with a minimum-degree floor
"""

import logging
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from src.exceptions import ConfigError

logger = logging.getLogger(__name__)

_MAX_RESAMPLE_ROUNDS = 1000


@dataclass(frozen=True)
class LognormalSpec:
    """Degrees ~ round(LogNormal(mu, sigma))"""
    mu: float
    sigma: float

    @property
    def mode(self) -> float:
        return float(np.exp(self.mu - self.sigma ** 2))


@dataclass(frozen=True)
class HistogramSpec:
    """Degrees drawn from an explicit degree -> probability table"""
    degrees: Sequence[int]
    probabilities: Sequence[float]


DegreeSpec = Union[LognormalSpec, HistogramSpec]


@dataclass(frozen=True)
class DegreeSequence:
    degrees: np.ndarray

    def __len__(self) -> int:
        return len(self.degrees)

    @property
    def total(self) -> int:
        return int(self.degrees.sum())


def lognormal_from_mode(mode: float, sigma: float) -> LognormalSpec:
    """Lognormal spec whose density peaks at `mode`"""
    if mode <= 0:
        raise ConfigError(f"mode must be > 0, got {mode}")
    if sigma <= 0:
        raise ConfigError(f"sigma must be > 0, got {sigma}")
    return LognormalSpec(mu=float(np.log(mode) + sigma ** 2), sigma=sigma)


def _check_spec(spec: DegreeSpec, min_degree: int) -> None:
    if min_degree < 0:
        raise ConfigError(f"min_degree must be >= 0, got {min_degree}")
    if isinstance(spec, LognormalSpec):
        if not spec.sigma > 0:
            raise ConfigError(f"lognormal sigma must be > 0, got {spec.sigma}")
    elif isinstance(spec, HistogramSpec):
        degrees = np.asarray(spec.degrees)
        probs = np.asarray(spec.probabilities, dtype=float)
        if len(degrees) == 0 or degrees.shape != probs.shape:
            raise ConfigError("histogram needs matching, non-empty degree and probability columns")
        if np.any(degrees < 0) or np.any(probs < 0) or probs.sum() <= 0:
            raise ConfigError("histogram degrees and probabilities must be non-negative with positive mass")
        if probs[degrees >= min_degree].sum() <= 0:
            raise ConfigError(f"histogram has no mass at or above min_degree={min_degree}")
    else:
        raise ConfigError(f"unknown degree spec {spec!r}")


def _draw(spec: DegreeSpec, size: int, rng: np.random.Generator) -> np.ndarray:
    if isinstance(spec, LognormalSpec):
        return np.rint(rng.lognormal(spec.mu, spec.sigma, size)).astype(np.int64)
    probs = np.asarray(spec.probabilities, dtype=float)
    return rng.choice(np.asarray(spec.degrees, dtype=np.int64), size=size, p=probs / probs.sum())


def draw_degrees(spec: DegreeSpec, size: int, min_degree: int,
                 rng: np.random.Generator) -> np.ndarray:
    """
    Draw `size` degrees, resampling any below min_degree

    No parity adjustment; see sample_degree_sequence for graph-ready sequences.
    """
    _check_spec(spec, min_degree)
    degrees = _draw(spec, size, rng)
    for _ in range(_MAX_RESAMPLE_ROUNDS):
        low = degrees < min_degree
        if not low.any():
            return degrees
        degrees[low] = _draw(spec, int(low.sum()), rng)
    raise ConfigError(f"could not draw degrees >= {min_degree} from {spec!r}")


def sample_degree_sequence(spec: DegreeSpec, n: int, min_degree: int = 0,
                           seed: int = None) -> DegreeSequence:
    """
    Sample a degree sequence for the configuration model

    Args:
        spec: LognormalSpec or HistogramSpec
        n: Number of nodes (>= 2)
        min_degree: Floor; lower draws are resampled
        seed: Random seed

    Returns:
        DegreeSequence with an even sum (node 0 is incremented when needed)
    """
    if n < 2:
        raise ConfigError(f"n must be >= 2, got {n}")
    degrees = draw_degrees(spec, n, min_degree, np.random.default_rng(seed))
    if degrees.sum() % 2:
        degrees[0] += 1

    logger.info("Sampled %d degrees, mean %.1f, max %d", n, degrees.mean(), degrees.max())
    return DegreeSequence(degrees=degrees)
