"""
Egodata module - egocentric network records, ranking and dyad CSV I/O
"""

from .records import (
    AlterRecord,
    EgoRecord,
    EgoDataset,
    ValidationReport,
    rank_alters,
    validate_dataset,
    with_report,
    dyads_per_rank,
    filter_egos,
    dataset_frame,
)
from .dyad_csv import parse_dyad_csv, write_dyad_csv, dyad_frame

__all__ = [
    'AlterRecord', 'EgoRecord', 'EgoDataset', 'ValidationReport',
    'rank_alters', 'validate_dataset', 'with_report', 'dyads_per_rank',
    'filter_egos', 'dataset_frame',
    'parse_dyad_csv', 'write_dyad_csv', 'dyad_frame',
]
