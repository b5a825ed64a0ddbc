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
import pytest

from gin_kit_library.dynsim.dataset import TrajectoryDataset, windowize
from gin_kit_library.dynsim.dynamics import Dynamics, simulate
from gin_kit_library.netcore.generators import generate_er
from gin_kit_library.netcore.graph import Graph

####################################################################
# Unit Test Fixture Names                                        ###
####################################################################
TINY_GRAPH_FIXTURE = "tiny_graph_fixture"
TINY_CMN_DATASET_FIXTURE = "tiny_cmn_dataset_fixture"
TINY_VOTER_DATASET_FIXTURE = "tiny_voter_dataset_fixture"


####################################################################
# Unit Test Fixtures                                             ###
####################################################################
@pytest.fixture(name=TINY_GRAPH_FIXTURE, scope="module")
def tiny_graph_fixture() -> Graph:
    """
    This fixture creates a 6-node random graph.

    :return: The graph.
    """
    return generate_er(6, 0.5, seed=3)


@pytest.fixture(name=TINY_CMN_DATASET_FIXTURE, scope="module")
def tiny_cmn_dataset_fixture(tiny_graph_fixture: Graph) -> TrajectoryDataset:
    """
    This fixture simulates 40 coupled-map windows on the tiny graph.

    :return: The windowed dataset.
    """
    dynamics = Dynamics("cmn")
    return windowize(simulate(tiny_graph_fixture, dynamics, s=4, T=20, seed=9), 2, dynamics)


@pytest.fixture(name=TINY_VOTER_DATASET_FIXTURE, scope="module")
def tiny_voter_dataset_fixture(tiny_graph_fixture: Graph) -> TrajectoryDataset:
    """
    This fixture simulates 30 Voter windows on the tiny graph.

    :return: The windowed dataset.
    """
    dynamics = Dynamics("voter")
    return windowize(simulate(tiny_graph_fixture, dynamics, s=3, T=10, seed=9), 2, dynamics)
