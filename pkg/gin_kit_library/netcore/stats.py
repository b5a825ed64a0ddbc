####################################################################
# ### stats.py                                                   ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
from typing import Dict, Text

import networkx as nx
import numpy as np

from gin_kit_library.netcore.graph import Graph


class StatKeys(object):
    """
    Keys of the structural statistics dictionary.
    """
    NODES = "nodes"
    EDGES = "edges"
    AVERAGE_DEGREE = "average_degree"
    DENSITY = "density"
    AVERAGE_CLUSTERING = "average_clustering"
    AVERAGE_SHORTEST_PATH = "average_shortest_path"
    ASSORTATIVITY = "assortativity"


def structural_stats(g: Graph) -> Dict[Text, float]:
    """
    Computes the structural statistics reported for a network. The average shortest path is taken over the largest
    connected component. Assortativity is NaN when the degree sequence is constant.

    :param g: The graph.
    :return: A dictionary keyed by the StatKeys constants. Values are unrounded.
    """
    graph = g.to_networkx()
    stats: Dict[Text, float] = {
        StatKeys.NODES: float(g.n),
        StatKeys.EDGES: float(g.edge_count),
        StatKeys.AVERAGE_DEGREE: 2.0 * g.edge_count / g.n,
        StatKeys.DENSITY: float(nx.density(graph)) if g.n > 1 else 0.0,
        StatKeys.AVERAGE_CLUSTERING: float(nx.average_clustering(graph)),
    }

    largest = max(nx.connected_components(graph), key=len)
    if len(largest) > 1:
        stats[StatKeys.AVERAGE_SHORTEST_PATH] = float(nx.average_shortest_path_length(graph.subgraph(largest)))
    else:
        stats[StatKeys.AVERAGE_SHORTEST_PATH] = 0.0

    degrees = g.degrees()
    if g.edge_count == 0 or np.all(degrees == degrees[0]):
        stats[StatKeys.ASSORTATIVITY] = float("nan")
    else:
        with np.errstate(divide="ignore", invalid="ignore"):
            stats[StatKeys.ASSORTATIVITY] = float(nx.degree_assortativity_coefficient(graph))

    return stats
