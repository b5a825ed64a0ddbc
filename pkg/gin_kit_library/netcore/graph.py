####################################################################
# ### graph.py                                                   ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
import json

from typing import Dict, Iterable, List, Optional, Sequence, Text, Tuple

import networkx as nx
import numpy as np

from gin_kit_library.errors import ParameterError, ShapeError


####################################################################
# Class: Graph                                                   ###
####################################################################
class Graph(object):
    """
    An undirected, unweighted graph without self-loops stored as a dense binary adjacency matrix. Node ids are the
    contiguous integers 0..n-1.
    """

    def __init__(self, adjacency: np.ndarray) -> None:
        """
        Constructor for Graph objects.

        :param adjacency: An n x n symmetric binary matrix with a zero diagonal.
        :raises ShapeError: If the matrix is not square.
        :raises ParameterError: If the matrix is not binary, not symmetric, or has self-loops.
        """
        matrix = np.asarray(adjacency)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ShapeError(f"Adjacency must be square, got shape {matrix.shape}")
        if matrix.shape[0] < 1:
            raise ParameterError("A graph needs at least one node")
        if not np.all((matrix == 0) | (matrix == 1)):
            raise ParameterError("Adjacency entries must be 0 or 1")
        if not np.array_equal(matrix, matrix.T):
            raise ParameterError("Adjacency must be symmetric")
        if np.any(np.diag(matrix) != 0):
            raise ParameterError("Adjacency must have a zero diagonal (no self-loops)")

        self._adjacency: np.ndarray = matrix.astype(np.int8)
        self._adjacency.setflags(write=False)

    @property
    def n(self) -> int:
        """
        The node count.
        """
        return self._adjacency.shape[0]

    @property
    def adjacency(self) -> np.ndarray:
        """
        A read-only view of the adjacency matrix.
        """
        return self._adjacency

    @property
    def edge_count(self) -> int:
        """
        The number of undirected edges.
        """
        return int(np.triu(self._adjacency, k=1).sum())

    def degrees(self) -> np.ndarray:
        return self._adjacency.sum(axis=1).astype(np.int64)

    def edges(self) -> List[Tuple[int, int]]:
        """
        Returns each undirected edge once as an (i, j) tuple with i < j, in row-major order.
        """
        rows, cols = np.nonzero(np.triu(self._adjacency, k=1))
        return [(int(i), int(j)) for i, j in zip(rows, cols)]

    def subgraph(self, nodes: Sequence[int]) -> "Graph":
        """
        Returns the induced subgraph on the given nodes, relabelled 0..len(nodes)-1 in the given order.
        """
        index = np.asarray(nodes, dtype=np.int64)
        return Graph(self._adjacency[np.ix_(index, index)])

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    @staticmethod
    def from_edges(n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """
        Builds a graph from an edge iterable. Duplicate and reversed pairs are merged.

        :param n: The node count.
        :param edges: Iterable of (i, j) pairs with 0 <= i, j < n and i != j.
        """
        matrix = np.zeros((n, n), dtype=np.int8)
        for i, j in edges:
            if i == j:
                raise ParameterError(f"Self-loop on node {i} is not allowed")
            matrix[i, j] = 1
            matrix[j, i] = 1
        return Graph(matrix)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and np.array_equal(self._adjacency, other._adjacency)

    def __repr__(self) -> Text:
        return f"Graph(n={self.n}, edges={self.edge_count})"


####################################################################
# Class: NodePartition                                           ###
####################################################################
class NodePartition(object):
    """
    Split of the node set into observed nodes (seeds, whose time series are known) and hidden nodes (whose states and
    links must be inferred). Both lists are kept in increasing order.

    Models and the graph matcher work in the canonical order: observed nodes first, then hidden nodes, so the known
    block of every adjacency matrix is the leading N_o x N_o block.
    """

    class Keys(object):
        """
        Keys of the JSON partition file.
        """
        N = "n"
        HIDDEN = "hidden"

    def __init__(self, n: int, hidden: Iterable[int]) -> None:
        """
        Constructor for NodePartition objects.

        :param n: The node count.
        :param hidden: The hidden node ids, in any order, without duplicates.
        :raises ParameterError: If an id is out of range or repeated, or if every node would be hidden.
        """
        hidden_list = sorted(int(node) for node in hidden)
        if len(set(hidden_list)) != len(hidden_list):
            raise ParameterError("Hidden node ids must be unique")
        if hidden_list and (hidden_list[0] < 0 or hidden_list[-1] >= n):
            raise ParameterError(f"Hidden node ids must lie in [0, {n - 1}]")
        if len(hidden_list) >= n:
            raise ParameterError("At least one node must stay observed")

        hidden_set = set(hidden_list)
        self._n: int = int(n)
        self._hidden: List[int] = hidden_list
        self._observed: List[int] = [node for node in range(n) if node not in hidden_set]

    @property
    def n(self) -> int:
        return self._n

    @property
    def observed(self) -> List[int]:
        return list(self._observed)

    @property
    def hidden(self) -> List[int]:
        return list(self._hidden)

    @property
    def n_observed(self) -> int:
        return len(self._observed)

    @property
    def n_hidden(self) -> int:
        return len(self._hidden)

    def canonical_order(self) -> np.ndarray:
        """
        Returns the node ids in canonical order (observed nodes, then hidden nodes). Position k of the canonical order
        holds original node id canonical_order()[k].
        """
        return np.asarray(self._observed + self._hidden, dtype=np.int64)

    def to_canonical(self, matrix: np.ndarray) -> np.ndarray:
        """
        Reorders the rows and columns of an n x n matrix from original node ids into canonical order.
        """
        self._check_square(matrix)
        order = self.canonical_order()
        return np.asarray(matrix)[np.ix_(order, order)]

    def from_canonical(self, matrix: np.ndarray) -> np.ndarray:
        """
        Reorders the rows and columns of an n x n matrix from canonical order back to original node ids.
        """
        self._check_square(matrix)
        inverse = np.argsort(self.canonical_order())
        return np.asarray(matrix)[np.ix_(inverse, inverse)]

    def _check_square(self, matrix: np.ndarray) -> None:
        shape = np.shape(matrix)
        if shape != (self._n, self._n):
            raise ShapeError(f"Expected a matrix of shape {(self._n, self._n)}, got {shape}")

    def as_dict(self) -> Dict:
        return {self.Keys.N: self._n, self.Keys.HIDDEN: list(self._hidden)}

    @staticmethod
    def from_dict(data: Dict) -> "NodePartition":
        try:
            return NodePartition(int(data[NodePartition.Keys.N]), data[NodePartition.Keys.HIDDEN])
        except (KeyError, TypeError) as e:
            raise ParameterError(f"Malformed partition definition: {e}")

    def __eq__(self, other) -> bool:
        return isinstance(other, NodePartition) and self._n == other._n and self._hidden == other._hidden

    def __repr__(self) -> Text:
        return f"NodePartition(n={self._n}, hidden={self._hidden})"


def partition_nodes(g: Graph, n_hidden: int, seed: Optional[int] = None) -> NodePartition:
    """
    Selects a uniformly random hidden subset of the requested size.

    :param g: The graph whose nodes are partitioned.
    :param n_hidden: The number of hidden nodes, 0 <= n_hidden < n.
    :param seed: Seed for the random generator.
    :raises ParameterError: If n_hidden is negative or not smaller than the node count.
    :return: The partition, deterministic given the seed.
    """
    if n_hidden < 0 or n_hidden >= g.n:
        raise ParameterError(f"n_hidden must lie in [0, {g.n - 1}], got {n_hidden}")

    rng = np.random.default_rng(seed)
    hidden = rng.choice(g.n, size=n_hidden, replace=False) if n_hidden > 0 else []
    return NodePartition(g.n, hidden)


def unobserved_mask(p: NodePartition) -> np.ndarray:
    """
    Returns the n x n boolean mask of adjacency entries with at least one hidden endpoint (the inverted-L region).
    Exactly n^2 - N_o^2 entries are True.
    """
    hidden = np.zeros(p.n, dtype=bool)
    hidden[p.hidden] = True
    return hidden[:, None] | hidden[None, :]


def load_partition(path: Text) -> NodePartition:
    """
    Reads a partition file of the form {"n": int, "hidden": [int, ...]}.
    """
    with open(path, "r", encoding="utf-8") as f:
        return NodePartition.from_dict(json.load(f))


def write_partition(p: NodePartition, path: Text) -> Text:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(p.as_dict(), f, indent=2)
    return path
