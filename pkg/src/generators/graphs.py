"""
Configuration-model graphs
Uniform random stub matching over a fixed degree sequence, stored as
compressed adjacency arrays
"""

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from src.exceptions import ConfigError

if TYPE_CHECKING:
    import networkx as nx

logger = logging.getLogger(__name__)


@dataclass
class Graph:
    """
    Undirected graph over nodes 0..n_nodes-1

    edge_u/edge_v hold each edge once with u <= v, sorted lexicographically.
    A self-loop adds 2 to its node's degree and appears twice in its neighbors.
    """
    n_nodes: int
    edge_u: np.ndarray
    edge_v: np.ndarray
    indptr: np.ndarray = field(init=False, repr=False)
    indices: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        u = np.asarray(self.edge_u, dtype=np.int64)
        v = np.asarray(self.edge_v, dtype=np.int64)
        if len(u) and (min(u.min(), v.min()) < 0 or max(u.max(), v.max()) >= self.n_nodes):
            raise ConfigError(f"edge endpoint outside 0..{self.n_nodes - 1}")
        lo, hi = np.minimum(u, v), np.maximum(u, v)
        order = np.lexsort((hi, lo))
        self.edge_u, self.edge_v = lo[order], hi[order]

        src = np.concatenate((self.edge_u, self.edge_v))
        dst = np.concatenate((self.edge_v, self.edge_u))
        order = np.lexsort((dst, src))
        self.indices = dst[order]
        self.indptr = np.concatenate(([0], np.cumsum(np.bincount(src, minlength=self.n_nodes))))

    @property
    def n_edges(self) -> int:
        return len(self.edge_u)

    @property
    def degree(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, node: int) -> np.ndarray:
        return self.indices[self.indptr[node]:self.indptr[node + 1]]

    def to_networkx(self) -> "nx.Graph":
        """networkx view; a MultiGraph when loops or parallel edges are present"""
        import networkx as nx

        pairs = self.edge_u * self.n_nodes + self.edge_v
        simple = not np.any(self.edge_u == self.edge_v) and len(np.unique(pairs)) == len(pairs)
        graph = nx.Graph() if simple else nx.MultiGraph()
        graph.add_nodes_from(range(self.n_nodes))
        graph.add_edges_from(zip(self.edge_u.tolist(), self.edge_v.tolist()))
        return graph


@dataclass(frozen=True)
class GraphSummary:
    n_nodes: int
    n_edges: int
    requested_edges: int
    self_loops: int
    removed_edges: int
    n_components: int
    max_degree: int
    mean_degree: float


def configuration_graph(degrees: Sequence[int], seed: int = None, simplify: bool = True) -> Graph:
    """
    Random graph with the given degree sequence by uniform stub matching

    Args:
        degrees: Requested degree per node; the sum must be even
        seed: Random seed
        simplify: Drop self-loops and collapse parallel edges, so realized
            degrees may fall below the requested ones

    Returns:
        Graph over len(degrees) nodes
    """
    degrees = np.asarray(degrees, dtype=np.int64)
    if np.any(degrees < 0):
        raise ConfigError("degrees must be non-negative")
    if degrees.sum() % 2:
        raise ConfigError(f"degree sum {int(degrees.sum())} is odd")

    rng = np.random.default_rng(seed)
    stubs = rng.permutation(np.repeat(np.arange(len(degrees), dtype=np.int64), degrees))
    u, v = stubs[0::2], stubs[1::2]

    if simplify:
        keep = u != v
        lo, hi = np.minimum(u[keep], v[keep]), np.maximum(u[keep], v[keep])
        pairs = np.unique(lo * len(degrees) + hi)
        u, v = pairs // len(degrees), pairs % len(degrees)
        dropped = len(stubs) // 2 - len(pairs)
        if dropped:
            logger.info("Simplification removed %d of %d stub pairs", dropped, len(stubs) // 2)

    return Graph(n_nodes=len(degrees), edge_u=u, edge_v=v)


def summarize_graph(graph: Graph, requested: Sequence[int]) -> GraphSummary:
    """Realized size against the requested degree sequence"""
    requested_edges = int(np.sum(requested)) // 2
    adjacency = coo_matrix(
        (np.ones(graph.n_edges), (graph.edge_u, graph.edge_v)),
        shape=(graph.n_nodes, graph.n_nodes),
    )
    n_components, _ = connected_components(adjacency, directed=False)
    degree = graph.degree
    return GraphSummary(
        n_nodes=graph.n_nodes,
        n_edges=graph.n_edges,
        requested_edges=requested_edges,
        self_loops=int(np.sum(graph.edge_u == graph.edge_v)),
        removed_edges=requested_edges - graph.n_edges,
        n_components=int(n_components),
        max_degree=int(degree.max()) if len(degree) else 0,
        mean_degree=float(degree.mean()) if len(degree) else 0.0,
    )
