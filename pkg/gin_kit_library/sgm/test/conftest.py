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

from gin_kit_library.netcore.edge_list import load_named_graph
from gin_kit_library.netcore.graph import NodePartition

####################################################################
# Unit Test Fixture Names                                        ###
####################################################################
KARATE_CANONICAL_FIXTURE = "karate_canonical_fixture"

# hub, second hub and a mid-degree member; their neighborhoods differ
KARATE_HIDDEN_ = [0, 2, 33]


####################################################################
# Unit Test Fixtures                                             ###
####################################################################
@pytest.fixture(name=KARATE_CANONICAL_FIXTURE, scope="module")
def karate_canonical_fixture() -> np.ndarray:
    """
    This fixture returns the Karate adjacency in canonical order with three hidden nodes last.

    :return: The 34 x 34 canonical adjacency.
    """
    graph = load_named_graph("karate")
    partition = NodePartition(graph.n, KARATE_HIDDEN_)
    return partition.to_canonical(graph.adjacency.astype(np.float64))
