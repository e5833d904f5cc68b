"""
Simulation module - SI spreading under uniform and rank-dependent transmission
"""

from .si_model import (
    Regime,
    OutbreakConfig,
    EpidemicCurve,
    EnsembleResult,
    harmonic,
    neighbor_ranks,
    rank_beta,
    edge_rank_probabilities,
    run_outbreak,
    run_ensemble,
    sweep_p_mix,
    expected_secondary,
    simulate_secondary,
)

__all__ = [
    'Regime', 'OutbreakConfig', 'EpidemicCurve', 'EnsembleResult',
    'harmonic', 'neighbor_ranks', 'rank_beta', 'edge_rank_probabilities',
    'run_outbreak', 'run_ensemble', 'sweep_p_mix', 'expected_secondary', 'simulate_secondary',
]
