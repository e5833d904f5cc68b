"""
Data loading utilities for the Egonet Paradox toolkit
Dyad CSVs, degree histograms, edge lists, output tables and run manifests
"""

import logging
import os
from typing import Dict, Optional

import numpy as np
import pandas as pd

from src.egodata import EgoDataset, parse_dyad_csv, write_dyad_csv
from src.exceptions import ParseError
from src.generators import Graph, HistogramSpec

logger = logging.getLogger(__name__)


# =============================================================================
# DYAD CSV
# =============================================================================

def load_dyad_csv(filepath: str) -> EgoDataset:
    """
    Load a dyad CSV file

    Args:
        filepath: Path to the dyad CSV

    Returns:
        EgoDataset with its ValidationReport attached
    """
    with open(filepath, "rb") as f:
        dataset = parse_dyad_csv(f)
    logger.info("Loaded %d egos from %s", len(dataset), filepath)
    return dataset


def save_dyad_csv(dataset: EgoDataset, filepath: str) -> None:
    ensure_parent(filepath)
    write_dyad_csv(dataset, filepath)


# =============================================================================
# DEGREE HISTOGRAMS
# =============================================================================

def load_degree_histogram(filepath: str) -> HistogramSpec:
    """
    Load a degree,probability CSV as a HistogramSpec

    Probabilities need not be normalized.
    """
    try:
        df = pd.read_csv(filepath)
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise ParseError(f"{filepath}: {e}") from e

    missing = [col for col in ("degree", "probability") if col not in df.columns]
    if missing:
        raise ParseError(f"{filepath}: missing columns {missing}", 1)
    try:
        degrees = df["degree"].astype("int64").to_numpy()
        probabilities = df["probability"].astype(float).to_numpy()
    except (ValueError, TypeError) as e:
        raise ParseError(f"{filepath}: non-numeric histogram entry ({e})") from e
    return HistogramSpec(degrees=tuple(degrees.tolist()), probabilities=tuple(probabilities.tolist()))


# =============================================================================
# EDGE LISTS
# =============================================================================

def write_edge_list(graph: Graph, filepath: str) -> None:
    """
    Write a graph as a sorted `u v` edge list

    The `# nodes N` header keeps isolated nodes.
    """
    ensure_parent(filepath)
    np.savetxt(filepath, np.column_stack((graph.edge_u, graph.edge_v)), fmt="%d",
               header=f"nodes {graph.n_nodes}", comments="# ")


def read_edge_list(filepath: str) -> Graph:
    """Read an edge list; without a `# nodes N` header the node count is max index + 1"""
    n_nodes = None
    with open(filepath, "r", encoding="utf-8") as f:
        first = f.readline()
    if first.startswith("#"):
        parts = first.lstrip("#").split()
        if len(parts) == 2 and parts[0] == "nodes":
            try:
                n_nodes = int(parts[1])
            except ValueError:
                raise ParseError(f"{filepath}: bad node count {parts[1]!r}", 1) from None

    try:
        edges = np.loadtxt(filepath, dtype=np.int64, comments="#", ndmin=2)
    except ValueError as e:
        raise ParseError(f"{filepath}: {e}") from e
    if edges.size == 0:
        edges = np.empty((0, 2), dtype=np.int64)
    if edges.shape[1] != 2:
        raise ParseError(f"{filepath}: expected 2 columns per edge, found {edges.shape[1]}")

    if n_nodes is None:
        n_nodes = int(edges.max()) + 1 if len(edges) else 0
    graph = Graph(n_nodes=n_nodes, edge_u=edges[:, 0], edge_v=edges[:, 1])
    logger.info("Read graph with %d nodes and %d edges from %s", graph.n_nodes, graph.n_edges, filepath)
    return graph


# =============================================================================
# OUTPUT TABLES
# =============================================================================

def ensure_parent(filepath: str) -> None:
    parent = os.path.dirname(os.path.abspath(filepath))
    os.makedirs(parent, exist_ok=True)


def write_table(df: pd.DataFrame, filepath: str) -> None:
    """Write an output CSV (no index, LF line endings)"""
    ensure_parent(filepath)
    df.to_csv(filepath, index=False, lineterminator="\n")


def load_table(filepath: str) -> Optional[pd.DataFrame]:
    """Load an output CSV, or None when it does not exist"""
    if not os.path.exists(filepath):
        return None
    return pd.read_csv(filepath)


# =============================================================================
# RUN MANIFESTS
# =============================================================================

def write_manifest(entries: Dict[str, str], filepath: str) -> None:
    """Write a flat key=value manifest, keys in insertion order"""
    ensure_parent(filepath)
    with open(filepath, "w", encoding="utf-8", newline="\n") as f:
        for key, value in entries.items():
            f.write(f"{key}={value}\n")


def read_manifest(filepath: str) -> Dict[str, str]:
    entries: Dict[str, str] = {}
    with open(filepath, "r", encoding="utf-8") as f:
        for number, line in enumerate(f, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            if "=" not in line:
                raise ParseError(f"{filepath}: expected key=value", number)
            key, value = line.split("=", 1)
            entries[key] = value
    return entries
