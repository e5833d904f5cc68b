"""
Aggregators module - friendship paradox statistics, hub alters and significance tests
"""

from .significance import TestMethod, TestResult, wilcoxon_signed_rank, spearman
from .paradox_stats import (
    RankSummary,
    DecileCurve,
    DecilePoint,
    ZipfFit,
    Rank1Comparison,
    ParadoxAggregator,
    paradox_prevalence,
    rank1_comparison,
    paradox_by_rank,
    mean_degree_summary,
    rank_degree_summary,
    degree_histogram,
    assign_deciles,
    decile_contact_curves,
    fit_zipf,
    zipf_fit,
    rank_summary_frame,
    decile_frame,
    zipf_frame,
)
from .hub_analysis import (
    HubProportionCurve,
    NullBand,
    hub_rank,
    eligible_egos,
    hub_proportion_by_rank,
    permutation_null_band,
    band_coverage,
    hub_trend_test,
    hub_table,
)

__all__ = [
    'TestMethod', 'TestResult', 'wilcoxon_signed_rank', 'spearman',
    'RankSummary', 'DecileCurve', 'DecilePoint', 'ZipfFit', 'Rank1Comparison',
    'ParadoxAggregator', 'paradox_prevalence', 'rank1_comparison', 'paradox_by_rank',
    'mean_degree_summary', 'rank_degree_summary', 'degree_histogram', 'assign_deciles',
    'decile_contact_curves', 'fit_zipf', 'zipf_fit',
    'rank_summary_frame', 'decile_frame', 'zipf_frame',
    'HubProportionCurve', 'NullBand', 'hub_rank', 'eligible_egos', 'hub_proportion_by_rank',
    'permutation_null_band', 'band_coverage', 'hub_trend_test', 'hub_table',
]
