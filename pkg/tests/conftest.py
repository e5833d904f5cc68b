import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.egodata import AlterRecord, EgoDataset, EgoRecord, with_report
from src.generators import Graph


def star_dataset(n):
    """Center ego (k=n) linked to n leaves (k=1); every ego sees the others' degrees"""
    center = EgoRecord(
        ego_id="center",
        outdegree=n,
        alters=tuple(AlterRecord(f"leaf{i}", i, 10, 1) for i in range(1, n + 1)),
    )
    leaves = [
        EgoRecord(ego_id=f"leaf{i}", outdegree=1, alters=(AlterRecord("center", 1, 10, n),))
        for i in range(1, n + 1)
    ]
    return with_report(EgoDataset(egos=(center, *leaves)))


def make_ego(ego_id, outdegree, degrees, volumes=None):
    """EgoRecord with alters at ranks 1..len(degrees); None marks an unavailable alter"""
    volumes = volumes or [100 - r for r in range(len(degrees))]
    return EgoRecord(
        ego_id=ego_id,
        outdegree=outdegree,
        alters=tuple(
            AlterRecord(f"{ego_id}-a{rank}", rank, volume, k)
            for rank, (k, volume) in enumerate(zip(degrees, volumes), start=1)
        ),
    )


def make_dataset(*egos):
    return with_report(EgoDataset(egos=tuple(egos)))


def path_graph(n):
    return Graph(n_nodes=n, edge_u=np.arange(n - 1), edge_v=np.arange(1, n))


@pytest.fixture
def star():
    return star_dataset


@pytest.fixture
def ego():
    return make_ego


@pytest.fixture
def dataset():
    return make_dataset


@pytest.fixture
def triangle_with_tail():
    """0-1-2 triangle plus the tail 2-3"""
    return Graph(n_nodes=4, edge_u=np.array([0, 0, 1, 2]), edge_v=np.array([1, 2, 2, 3]))


@pytest.fixture
def path():
    return path_graph
