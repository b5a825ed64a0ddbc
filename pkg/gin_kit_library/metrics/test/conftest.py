####################################################################
# ### conftest.py                                                ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
import numpy as np
import pytest

from gin_kit_library.dynsim.dataset import TrajectoryDataset, windowize
from gin_kit_library.dynsim.dynamics import Dynamics, simulate
from gin_kit_library.netcore.edge_list import load_named_graph
from gin_kit_library.netcore.generators import generate_er
from gin_kit_library.netcore.graph import Graph

####################################################################
# Unit Test Fixture Names                                        ###
####################################################################
KARATE_GRAPH_FIXTURE = "karate_graph_fixture"
SMALL_ER_GRAPH_FIXTURE = "small_er_graph_fixture"
SMALL_CMN_DATASET_FIXTURE = "small_cmn_dataset_fixture"


def series_dataset(series: np.ndarray) -> TrajectoryDataset:
    """
    Wraps a (samples, n) array of continuous states as single-step disjoint windows.
    """
    samples, n = series.shape
    windows = series.reshape(samples, 1, n, 1)
    provenance = np.stack([np.arange(samples), np.zeros(samples, dtype=np.int64)], axis=1)
    return TrajectoryDataset(windows, Dynamics("cmn"), samples, 1, "disjoint", provenance)


def opinion_dataset(opinions: np.ndarray) -> TrajectoryDataset:
    """
    Wraps a (samples, n) array of 0/1 opinions as single-step one-hot windows.
    """
    samples, n = opinions.shape
    one_hot = np.zeros((samples, 1, n, 2))
    one_hot[..., 1] = opinions.reshape(samples, 1, n)
    one_hot[..., 0] = 1.0 - one_hot[..., 1]
    provenance = np.stack([np.arange(samples), np.zeros(samples, dtype=np.int64)], axis=1)
    return TrajectoryDataset(one_hot, Dynamics("voter"), samples, 1, "sliding", provenance)


####################################################################
# Unit Test Fixtures                                             ###
####################################################################
@pytest.fixture(name=KARATE_GRAPH_FIXTURE, scope="module")
def karate_graph_fixture() -> Graph:
    """
    This fixture loads the bundled Karate club network.

    :return: The Karate graph.
    """
    return load_named_graph("karate")


@pytest.fixture(name=SMALL_ER_GRAPH_FIXTURE, scope="module")
def small_er_graph_fixture() -> Graph:
    """
    This fixture creates a 10-node random graph.

    :return: The graph.
    """
    return generate_er(10, 0.4, seed=17)


@pytest.fixture(name=SMALL_CMN_DATASET_FIXTURE, scope="module")
def small_cmn_dataset_fixture(small_er_graph_fixture: Graph) -> TrajectoryDataset:
    """
    This fixture simulates a short coupled-map dataset on the 10-node random graph.

    :return: The windowed dataset.
    """
    dynamics = Dynamics("cmn")
    return windowize(simulate(small_er_graph_fixture, dynamics, s=4, T=10, seed=5), 2, dynamics)
