"""
Generators module - degree sequences, configuration-model graphs and synthetic ego data
"""

from .degrees import (
    LognormalSpec,
    HistogramSpec,
    DegreeSequence,
    lognormal_from_mode,
    draw_degrees,
    sample_degree_sequence,
)
from .graphs import Graph, GraphSummary, configuration_graph, summarize_graph
from .synthetic import SynthParams, zipf_volumes, synth_ego_dataset

__all__ = [
    'LognormalSpec', 'HistogramSpec', 'DegreeSequence', 'lognormal_from_mode',
    'draw_degrees', 'sample_degree_sequence',
    'Graph', 'GraphSummary', 'configuration_graph', 'summarize_graph',
    'SynthParams', 'zipf_volumes', 'synth_ego_dataset',
]
