"""
Egocentric network records
Egos, their rank-ordered alters, validation and rank bookkeeping
"""

import logging
from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from src.exceptions import ConfigError

logger = logging.getLogger(__name__)


# =============================================================================
# DOMAIN TYPES
# =============================================================================

@dataclass(frozen=True)
class AlterRecord:
    """One alter of an ego. outdegree is None when the alter's degree is unavailable."""
    alter_id: str
    rank: int
    contact_volume: int
    outdegree: Optional[int] = None

    @property
    def available(self) -> bool:
        return self.outdegree is not None


@dataclass(frozen=True)
class EgoRecord:
    """An ego with its outdegree and alters sorted by ascending rank (1 = most contacted)"""
    ego_id: str
    outdegree: int
    alters: Tuple[AlterRecord, ...] = ()

    @property
    def available_alters(self) -> Tuple[AlterRecord, ...]:
        return tuple(a for a in self.alters if a.available)

    @property
    def available_ranks(self) -> Tuple[int, ...]:
        return tuple(a.rank for a in self.alters if a.available)

    def alter_at(self, rank: int) -> Optional[AlterRecord]:
        for alter in self.alters:
            if alter.rank == rank:
                return alter
        return None


@dataclass(frozen=True)
class ValidationReport:
    n_egos: int
    n_dyads: int
    n_dyads_with_degree: int
    violations: Tuple[Tuple[str, str], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class EgoDataset:
    egos: Tuple[EgoRecord, ...] = ()
    report: Optional[ValidationReport] = field(default=None, compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.egos)

    def __iter__(self):
        return iter(self.egos)

    @property
    def n_dyads(self) -> int:
        return sum(len(ego.alters) for ego in self.egos)

    @property
    def max_rank(self) -> int:
        return max((a.rank for ego in self.egos for a in ego.alters), default=0)


# =============================================================================
# RANKING
# =============================================================================

def rank_alters(pairs: Iterable[Tuple],
                outdegrees: Optional[Mapping[str, Optional[int]]] = None) -> List[AlterRecord]:
    """
    Rank alters by descending contact volume

    Ties in volume are broken by ascending alter_id so that ranking is
    reproducible across runs and platforms.

    Args:
        pairs: (alter_id, contact_volume) pairs, or (alter_id, contact_volume,
            outdegree) triples that carry their own outdegree
        outdegrees: Optional alter_id -> outdegree map for plain pairs (None = unavailable)

    Returns:
        AlterRecords with ranks 1..n
    """
    outdegrees = outdegrees or {}
    # stable, so repeated alter_ids keep their input order
    ordered = sorted(pairs, key=lambda pair: (-pair[1], pair[0]))
    return [
        AlterRecord(alter_id=item[0], rank=rank, contact_volume=item[1],
                    outdegree=item[2] if len(item) > 2 else outdegrees.get(item[0]))
        for rank, item in enumerate(ordered, start=1)
    ]


# =============================================================================
# VALIDATION
# =============================================================================

def ego_violations(ego: EgoRecord) -> List[str]:
    """List every invariant an ego breaks, in a stable order"""
    problems = []
    if ego.outdegree < 0:
        problems.append(f"negative ego outdegree {ego.outdegree}")

    seen_alters = Counter(a.alter_id for a in ego.alters)
    for alter_id, count in sorted(seen_alters.items()):
        if count > 1:
            problems.append(f"alter {alter_id} listed {count} times")

    for alter in ego.alters:
        if alter.rank < 1:
            problems.append(f"alter {alter.alter_id} has rank {alter.rank} < 1")
        if alter.contact_volume < 1:
            problems.append(f"alter {alter.alter_id} has contact volume {alter.contact_volume} < 1")
        if alter.outdegree is not None and alter.outdegree < 0:
            problems.append(f"alter {alter.alter_id} has negative outdegree {alter.outdegree}")

    for prev, cur in zip(ego.alters, ego.alters[1:]):
        if cur.rank == prev.rank:
            problems.append(f"duplicate rank {cur.rank}")
        elif cur.rank < prev.rank:
            problems.append(f"ranks not ascending at rank {cur.rank}")
        if cur.contact_volume > prev.contact_volume:
            problems.append(
                f"contact volume increases from rank {prev.rank} ({prev.contact_volume}) "
                f"to rank {cur.rank} ({cur.contact_volume})"
            )
    return problems


def validate_dataset(dataset: EgoDataset,
                     extra: Sequence[Tuple[str, str]] = ()) -> ValidationReport:
    """
    Check every ego against the dataset invariants

    Args:
        dataset: Dataset to check
        extra: Violations found upstream (e.g. by the parser) to carry along

    Returns:
        ValidationReport; violations is empty iff every invariant holds
    """
    violations: List[Tuple[str, str]] = list(extra)

    id_counts = Counter(ego.ego_id for ego in dataset.egos)
    for ego_id, count in sorted(id_counts.items()):
        if count > 1:
            violations.append((ego_id, f"ego id appears {count} times"))

    for ego in dataset.egos:
        violations.extend((ego.ego_id, problem) for problem in ego_violations(ego))

    report = ValidationReport(
        n_egos=len(dataset.egos),
        n_dyads=dataset.n_dyads,
        n_dyads_with_degree=sum(len(ego.available_alters) for ego in dataset.egos),
        violations=tuple(violations),
    )
    if violations:
        logger.warning("Dataset has %d violations", len(violations))
    return report


def with_report(dataset: EgoDataset, extra: Sequence[Tuple[str, str]] = ()) -> EgoDataset:
    """Return the dataset with a freshly computed ValidationReport attached"""
    return replace(dataset, report=validate_dataset(dataset, extra))


# =============================================================================
# RANK BOOKKEEPING
# =============================================================================

def dyads_per_rank(dataset: EgoDataset, only_available: bool = False) -> List[Tuple[int, int]]:
    """
    Number of ego-alter dyads at each alter rank

    Ranks with no dyads are reported as zero up to the maximum rank present.
    """
    counts: Counter = Counter()
    for ego in dataset.egos:
        for alter in ego.alters:
            if only_available and not alter.available:
                continue
            counts[alter.rank] += 1

    max_rank = max(counts, default=0)
    return [(rank, counts.get(rank, 0)) for rank in range(1, max_rank + 1)]


def filter_egos(dataset: EgoDataset,
                min_outdegree: Optional[int] = None,
                max_outdegree: Optional[int] = None,
                max_rank: Optional[int] = None) -> EgoDataset:
    """
    Apply collection filters: an ego outdegree window and top-N alter truncation

    Ranks are kept verbatim, so truncation never renumbers the remaining alters.
    """
    if max_rank is not None and max_rank < 1:
        raise ConfigError(f"max_rank must be >= 1, got {max_rank}")

    kept = []
    for ego in dataset.egos:
        if min_outdegree is not None and ego.outdegree < min_outdegree:
            continue
        if max_outdegree is not None and ego.outdegree > max_outdegree:
            continue
        if max_rank is not None:
            ego = replace(ego, alters=tuple(a for a in ego.alters if a.rank <= max_rank))
        kept.append(ego)

    logger.info("Kept %d of %d egos after filtering", len(kept), len(dataset.egos))
    return with_report(EgoDataset(egos=tuple(kept)))


def dataset_frame(dataset: EgoDataset) -> pd.DataFrame:
    """
    Flatten a dataset to one row per dyad

    alter_outdegree is float with NaN for unavailable alters.
    """
    rows: Dict[str, list] = {
        "ego_id": [], "ego_outdegree": [], "alter_id": [], "rank": [],
        "contact_volume": [], "alter_outdegree": [],
    }
    for ego in dataset.egos:
        for alter in ego.alters:
            rows["ego_id"].append(ego.ego_id)
            rows["ego_outdegree"].append(ego.outdegree)
            rows["alter_id"].append(alter.alter_id)
            rows["rank"].append(alter.rank)
            rows["contact_volume"].append(alter.contact_volume)
            rows["alter_outdegree"].append(np.nan if alter.outdegree is None else float(alter.outdegree))

    return pd.DataFrame({
        "ego_id": pd.Series(rows["ego_id"], dtype=object),
        "ego_outdegree": pd.Series(rows["ego_outdegree"], dtype="int64"),
        "alter_id": pd.Series(rows["alter_id"], dtype=object),
        "rank": pd.Series(rows["rank"], dtype="int64"),
        "contact_volume": pd.Series(rows["contact_volume"], dtype="int64"),
        "alter_outdegree": pd.Series(rows["alter_outdegree"], dtype="float64"),
    })
