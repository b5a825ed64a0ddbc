####################################################################
# ### generators.py                                              ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
from typing import Optional

import numpy as np

from gin_kit_library.errors import ParameterError
from gin_kit_library.netcore.graph import Graph

# Watts-Strogatz defaults
DEFAULT_WS_K_ = 4
DEFAULT_WS_P_REWIRE_ = 0.3

# Barabasi-Albert defaults
DEFAULT_BA_M0_ = 20
DEFAULT_BA_K_ = 2


def _check_probability(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise ParameterError(f"{name} must lie in [0, 1], got {value}")


def generate_er(n: int, p: float, seed: Optional[int] = None) -> Graph:
    """
    Generates an Erdos-Renyi graph: every unordered pair is linked independently with probability p.

    :param n: The node count, at least 2.
    :param p: The link probability.
    :param seed: Seed for the random generator.
    :raises ParameterError: If p lies outside [0, 1] or n < 2.
    """
    if n < 2:
        raise ParameterError(f"n must be at least 2, got {n}")
    _check_probability("p", p)

    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, k=1)
    return Graph((upper | upper.T).astype(np.int8))


def generate_ws(n: int, k: int = DEFAULT_WS_K_, p_rewire: float = DEFAULT_WS_P_REWIRE_,
                seed: Optional[int] = None) -> Graph:
    """
    Generates a Watts-Strogatz small-world graph. Each node is first linked to its k nearest ring neighbors; then,
    lap by lap, the far endpoint of every clockwise edge is rewired with probability p_rewire to a uniformly chosen
    node, rejecting self-loops and duplicate edges. Rewiring preserves the edge count.

    :param n: The node count.
    :param k: The even number of ring neighbors, smaller than n.
    :param p_rewire: The rewiring probability.
    :param seed: Seed for the random generator.
    :raises ParameterError: If k is odd, not positive or not smaller than n, or if p_rewire lies outside [0, 1].
    """
    if k <= 0 or k % 2 != 0:
        raise ParameterError(f"k must be a positive even integer, got {k}")
    if k >= n:
        raise ParameterError(f"k must be smaller than n ({n}), got {k}")
    _check_probability("p_rewire", p_rewire)

    rng = np.random.default_rng(seed)
    adjacency = np.zeros((n, n), dtype=np.int8)
    for offset in range(1, k // 2 + 1):
        for u in range(n):
            v = (u + offset) % n
            adjacency[u, v] = adjacency[v, u] = 1

    for offset in range(1, k // 2 + 1):
        for u in range(n):
            v = (u + offset) % n
            if rng.random() >= p_rewire:
                continue
            # a node already linked to everyone cannot be rewired
            if adjacency[u].sum() >= n - 1:
                continue
            w = int(rng.integers(n))
            while w == u or adjacency[u, w] == 1:
                w = int(rng.integers(n))
            adjacency[u, v] = adjacency[v, u] = 0
            adjacency[u, w] = adjacency[w, u] = 1

    return Graph(adjacency)


def generate_ba(n: int, m0: int = DEFAULT_BA_M0_, k: int = DEFAULT_BA_K_, seed: Optional[int] = None) -> Graph:
    """
    Generates a Barabasi-Albert preferential-attachment graph grown from a ring over the first m0 nodes. Every later
    node links to k distinct existing nodes chosen with probability proportional to their degree.

    :param n: The final node count, at least m0.
    :param m0: The number of seed nodes, at least k.
    :param k: The links added per new node, at least 1.
    :param seed: Seed for the random generator.
    :raises ParameterError: If m0 >= k >= 1 or n >= m0 does not hold.
    """
    if k < 1:
        raise ParameterError(f"k must be at least 1, got {k}")
    if m0 < k:
        raise ParameterError(f"m0 ({m0}) must be at least k ({k})")
    if n < m0:
        raise ParameterError(f"n ({n}) must be at least m0 ({m0})")

    rng = np.random.default_rng(seed)
    adjacency = np.zeros((n, n), dtype=np.int8)
    if m0 >= 2:
        for u in range(m0):
            v = (u + 1) % m0
            if u != v:
                adjacency[u, v] = adjacency[v, u] = 1

    for new in range(m0, n):
        degrees = adjacency[:new, :new].sum(axis=1).astype(np.float64)
        total = degrees.sum()
        weights = degrees / total if total > 0 else None
        if weights is not None and np.count_nonzero(weights) < k:
            # too few nodes with nonzero degree for k distinct draws
            weights = (degrees + 1.0) / (total + new)
        targets = rng.choice(new, size=k, replace=False, p=weights)
        adjacency[new, targets] = 1
        adjacency[targets, new] = 1

    return Graph(adjacency)
