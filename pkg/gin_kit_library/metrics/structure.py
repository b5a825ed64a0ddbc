####################################################################
# ### structure.py                                               ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
import csv

from typing import Dict, List, Text, Union

import numpy as np

from gin_kit_library.errors import ShapeError
from gin_kit_library.netcore.graph import Graph
from gin_kit_library.netcore.stats import structural_stats

GraphLike = Union[Graph, np.ndarray]

STRUCTURE_TABLE_HEADER_ = ["statistic", "truth", "inferred", "delta"]


def _as_graph(g: GraphLike) -> Graph:
    return g if isinstance(g, Graph) else Graph(np.asarray(g))


####################################################################
# Class: StructureComparison                                     ###
####################################################################
class StructureComparison(object):
    """
    Structural statistics of a true and an inferred network side by side, with absolute differences.
    """

    def __init__(self, truth: Dict[Text, float], inferred: Dict[Text, float]) -> None:
        self.truth: Dict[Text, float] = truth
        self.inferred: Dict[Text, float] = inferred

    @property
    def statistics(self) -> List[Text]:
        return list(self.truth.keys())

    def delta(self, statistic: Text) -> float:
        return abs(self.truth[statistic] - self.inferred[statistic])

    def deltas(self) -> Dict[Text, float]:
        return {statistic: self.delta(statistic) for statistic in self.statistics}

    def rows(self) -> List[List]:
        return [[statistic, self.truth[statistic], self.inferred[statistic], self.delta(statistic)]
                for statistic in self.statistics]

    def write_csv(self, path: Text) -> Text:
        with open(path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(STRUCTURE_TABLE_HEADER_)
            for statistic, truth, inferred, delta in self.rows():
                writer.writerow([statistic, repr(truth), repr(inferred), repr(delta)])
        return path


def compare_structure(truth: GraphLike, inferred: GraphLike) -> StructureComparison:
    """
    Compares average degree, mean graph distance, density, clustering, edge count and assortativity of two
    networks over the same nodes.

    :param truth: The ground-truth network.
    :param inferred: The binary inferred network.
    :raises ShapeError: If the node counts differ.
    """
    truth, inferred = _as_graph(truth), _as_graph(inferred)
    if truth.n != inferred.n:
        raise ShapeError(f"Cannot compare a {truth.n}-node network with a {inferred.n}-node network")
    return StructureComparison(structural_stats(truth), structural_stats(inferred))
