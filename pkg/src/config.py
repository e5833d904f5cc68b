"""
Configuration settings for the Egonet Paradox toolkit
Friendship-paradox statistics and contact-volume spreading simulations
"""

import os

# =============================================================================
# RUNTIME (environment overrides, .env is loaded by main.py)
# =============================================================================
DEFAULT_WORKERS = int(os.getenv("EGONET_WORKERS", "1"))
LOG_LEVEL = os.getenv("EGONET_LOG_LEVEL", "WARNING")

DATA_DIR = "data"
OUTPUT_DIR = "output"

# =============================================================================
# DYAD CSV FORMAT
# =============================================================================
DYAD_COLUMNS = ["ego_id", "ego_outdegree", "alter_id", "contact_volume", "alter_outdegree"]
RANK_COLUMN = "rank"

# =============================================================================
# PARADOX STATISTICS
# =============================================================================
N_DECILES = 10
CONTACT_BINS = 10
MAX_RANK = 15            # top-15 alters, as in the Twitter collection
ZIPF_MIN_DYADS = 1
SPEARMAN_PERMUTATIONS = 10_000
WILCOXON_EXACT_MAX_N = 20

# =============================================================================
# HUB ALTER / PERMUTATION NULL
# =============================================================================
MIN_AVAILABLE = 5
N_PERMUTATIONS = 1000
NULL_COVERAGE = 0.95

# =============================================================================
# SYNTHETIC EGO DATA
# =============================================================================
SYNTH_EGOS = 5000
SYNTH_ALTERS = 15
SYNTH_ZIPF_EXPONENT = 1.2
SYNTH_BASE_VOLUME = 1000.0
SYNTH_COUPLING = 0.8
SYNTH_UNAVAILABLE = 0.0

# Degree distributions of both datasets peak near k_out ~ 100
DEGREE_MODE = 100.0
DEGREE_SIGMA = 0.5
MIN_DEGREE = 1

# =============================================================================
# CONFIGURATION-MODEL PRESETS
# =============================================================================
# Mean degree 2 * 8,774,126 / 88,137 ~ 199 with mode 100 gives sigma^2 = ln(1.99) / 1.5
GRAPH_PRESETS = {
    "paper-scale": {
        "nodes": 88_137,
        "target_edges": 8_774_126,
        "degree_mode": 100.0,
        "degree_sigma": 0.678,
        "min_degree": 1,
    },
    # beta * <k^2> / <k> ~ 1.5 at beta = 0.01, so uniform-regime outbreaks grow
    "desk-scale": {
        "nodes": 10_000,
        "target_edges": None,
        "degree_mode": 30.0,
        "degree_sigma": 0.8,
        "min_degree": 2,
    },
}

# =============================================================================
# SI SIMULATION
# =============================================================================
BETA = 0.01
STEPS = 20
REPLICATES = 100
P_MIX_VALUES = (0.0, 0.75, 1.0)
CI_Z = 1.96
CLIP_PROBABILITIES = True

# =============================================================================
# OUTPUT FILES
# =============================================================================
RANK_SUMMARY_OUTPUT = "rank_summary.csv"
DECILE_OUTPUT = "decile_curves.csv"
ZIPF_OUTPUT = "zipf.csv"
HUB_OUTPUT = "hub_prop.csv"
EPIDEMIC_OUTPUT = "epidemic.csv"
PARADOX_OUTPUT = "paradox.csv"
DEGREE_HISTOGRAM_OUTPUT = "degree_histogram.csv"
VALIDATION_OUTPUT = "validation.csv"
SUMMARY_OUTPUT = "summary.csv"
MANIFEST_SUFFIX = ".manifest"
DIR_MANIFEST = "manifest.txt"
