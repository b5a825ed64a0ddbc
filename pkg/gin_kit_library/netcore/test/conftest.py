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

from gin_kit_library.netcore.edge_list import load_named_graph
from gin_kit_library.netcore.graph import Graph

####################################################################
# Unit Test Fixture Names                                        ###
####################################################################
KARATE_GRAPH_FIXTURE = "karate_graph_fixture"
TRIANGLE_GRAPH_FIXTURE = "triangle_graph_fixture"
STAR_GRAPH_FIXTURE = "star_graph_fixture"


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


@pytest.fixture(name=TRIANGLE_GRAPH_FIXTURE, scope="module")
def triangle_graph_fixture() -> Graph:
    """
    This fixture creates a graph of three mutually linked nodes.

    :return: The triangle graph.
    """
    return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture(name=STAR_GRAPH_FIXTURE, scope="module")
def star_graph_fixture() -> Graph:
    """
    This fixture creates a star with center 0 and four leaves.

    :return: The star graph.
    """
    return Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
