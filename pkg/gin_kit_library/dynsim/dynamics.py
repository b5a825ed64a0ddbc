####################################################################
# ### dynamics.py                                                ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
from typing import Optional, Text, Union

import numpy as np

from gin_kit_library.errors import ParameterError, StateError
from gin_kit_library.netcore.graph import Graph

SeedLike = Union[None, int, np.random.Generator]


####################################################################
# Class: DynamicsValues                                          ###
####################################################################
class DynamicsValues(object):
    """
    Names of the supported node dynamics and of the two state kinds.
    """
    VOTER = "voter"
    CMN = "cmn"

    BINARY = "binary"
    CONTINUOUS = "continuous"

    # window modes
    SLIDING = "sliding"
    DISJOINT = "disjoint"


def _rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def check_voter_state(x: np.ndarray) -> None:
    """
    Validates a Voter state matrix: shape (n, 2) with one-hot rows.

    :raises StateError: If a row is not one-hot.
    """
    if x.ndim != 2 or x.shape[1] != 2:
        raise StateError(f"Voter states must have shape (n, 2), got {x.shape}")
    if not np.all((x == 0) | (x == 1)) or not np.all(x.sum(axis=1) == 1):
        raise StateError("Voter state rows must be one-hot")


def check_cmn_state(x: np.ndarray) -> None:
    """
    Validates a CMN state matrix: shape (n, 1) with entries in [0, 1].

    :raises StateError: If an entry lies outside [0, 1].
    """
    if x.ndim != 2 or x.shape[1] != 1:
        raise StateError(f"CMN states must have shape (n, 1), got {x.shape}")
    if not np.all(np.isfinite(x)) or np.any(x < 0.0) or np.any(x > 1.0):
        raise StateError("CMN states must lie in [0, 1]")


def voter_step(g: Graph, x: np.ndarray, seed: SeedLike = None) -> np.ndarray:
    """
    Advances a Voter model by one synchronous step. Column 1 of the one-hot state means opinion 1. Every node with
    neighbors adopts opinion 1 with probability equal to the fraction of its neighbors holding opinion 1, otherwise
    opinion 0; isolated nodes keep their opinion.

    :param g: The graph.
    :param x: The (n, 2) one-hot state matrix.
    :param seed: An integer seed or a numpy Generator.
    :raises StateError: If a row of x is not one-hot.
    :return: The next (n, 2) state matrix.
    """
    x = np.asarray(x)
    check_voter_state(x)
    if x.shape[0] != g.n:
        raise StateError(f"State has {x.shape[0]} rows for a graph of {g.n} nodes")

    rng = _rng(seed)
    adjacency = g.adjacency.astype(np.float64)
    degrees = adjacency.sum(axis=1)
    ones = adjacency @ x[:, 1].astype(np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        fraction = np.where(degrees > 0, ones / np.maximum(degrees, 1.0), 0.0)

    draws = rng.random(g.n)
    opinion = np.where(degrees > 0, draws < fraction, x[:, 1] == 1).astype(np.int64)

    nxt = np.zeros_like(x, dtype=np.float64)
    nxt[np.arange(g.n), opinion] = 1.0
    return nxt


def logistic(x: np.ndarray, r: float) -> np.ndarray:
    return r * x * (1.0 - x)


def cmn_step(g: Graph, x: np.ndarray, coupling: float = 0.2, r: float = 3.5) -> np.ndarray:
    """
    Advances a coupled map network by one step:
    x_i' = (1 - coupling) * f(x_i) + coupling * mean_{j in N(i)} f(x_j), with f(x) = r * x * (1 - x).
    Isolated nodes follow f(x_i) alone.

    :param g: The graph.
    :param x: The (n, 1) state matrix with entries in [0, 1].
    :param coupling: The coupling weight, in [0, 1].
    :param r: The logistic parameter, in (0, 4].
    :raises ParameterError: If coupling or r is out of range.
    :raises StateError: If an entry of x lies outside [0, 1].
    :return: The next (n, 1) state matrix.
    """
    check_cmn_parameters(coupling, r)
    x = np.asarray(x, dtype=np.float64)
    check_cmn_state(x)
    if x.shape[0] != g.n:
        raise StateError(f"State has {x.shape[0]} rows for a graph of {g.n} nodes")

    adjacency = g.adjacency.astype(np.float64)
    degrees = adjacency.sum(axis=1, keepdims=True)
    local = logistic(x, r)
    neighbor_mean = (adjacency @ local) / np.maximum(degrees, 1.0)
    coupled = (1.0 - coupling) * local + coupling * neighbor_mean
    nxt = np.where(degrees > 0, coupled, local)
    # rounding can push a value a hair outside [0, 1]
    return np.clip(nxt, 0.0, 1.0)


def check_cmn_parameters(coupling: float, r: float) -> None:
    if not 0.0 <= coupling <= 1.0:
        raise ParameterError(f"CMN coupling must lie in [0, 1], got {coupling}")
    if not 0.0 < r <= 4.0:
        raise ParameterError(f"CMN logistic parameter r must lie in (0, 4], got {r}")


####################################################################
# Class: Dynamics                                                ###
####################################################################
class Dynamics(object):
    """
    A node dynamics together with its parameters. The Voter model produces binary one-hot states (d = 2) and is
    windowed with sliding windows; the coupled map network produces continuous states (d = 1) and is windowed with
    disjoint windows.
    """

    DEFAULT_COUPLING = 0.2
    DEFAULT_R = 3.5

    def __init__(self, name: Text, coupling: float = DEFAULT_COUPLING, r: float = DEFAULT_R) -> None:
        name = str(name).lower()
        if name not in (DynamicsValues.VOTER, DynamicsValues.CMN):
            raise ParameterError(f"Unknown dynamics '{name}'; expected '{DynamicsValues.VOTER}' or "
                                 f"'{DynamicsValues.CMN}'")
        if name == DynamicsValues.CMN:
            check_cmn_parameters(coupling, r)

        self.name: Text = name
        self.coupling: float = float(coupling)
        self.r: float = float(r)

    @property
    def kind(self) -> Text:
        return DynamicsValues.BINARY if self.name == DynamicsValues.VOTER else DynamicsValues.CONTINUOUS

    @property
    def d(self) -> int:
        return 2 if self.name == DynamicsValues.VOTER else 1

    @property
    def window_mode(self) -> Text:
        return DynamicsValues.SLIDING if self.name == DynamicsValues.VOTER else DynamicsValues.DISJOINT

    def initial_state(self, n: int, rng: np.random.Generator) -> np.ndarray:
        """
        Draws an initial state: i.i.d. uniform opinions for Voter, i.i.d. uniform values on [0, 1] for CMN.
        """
        if self.name == DynamicsValues.VOTER:
            x = np.zeros((n, 2), dtype=np.float64)
            x[np.arange(n), rng.integers(0, 2, size=n)] = 1.0
            return x
        return rng.random((n, 1))

    def step(self, g: Graph, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        if self.name == DynamicsValues.VOTER:
            return voter_step(g, x, rng)
        return cmn_step(g, x, coupling=self.coupling, r=self.r)

    def check_state(self, x: np.ndarray) -> None:
        if self.name == DynamicsValues.VOTER:
            check_voter_state(x)
        else:
            check_cmn_state(x)

    def as_dict(self):
        return {"name": self.name, "coupling": self.coupling, "r": self.r}

    def __eq__(self, other) -> bool:
        return isinstance(other, Dynamics) and self.as_dict() == other.as_dict()

    def __repr__(self) -> Text:
        if self.name == DynamicsValues.VOTER:
            return "Dynamics(voter)"
        return f"Dynamics(cmn, coupling={self.coupling}, r={self.r})"


def simulate(g: Graph, dynamics: Dynamics, s: int, T: int, seed: Optional[int] = None) -> np.ndarray:
    """
    Simulates s independent trajectories of T steps each. Every trajectory draws from its own generator spawned from
    the seed, so trajectories are reproducible individually.

    :param g: The graph.
    :param dynamics: The dynamics to run.
    :param s: The number of initial conditions, at least 1.
    :param T: The number of steps per trajectory, at least 1.
    :param seed: Seed for the random generators.
    :raises ParameterError: If s or T is smaller than 1.
    :return: An array of shape (s, T + 1, n, d); index 0 along the second axis is the initial state.
    """
    if s < 1:
        raise ParameterError(f"s must be at least 1, got {s}")
    if T < 1:
        raise ParameterError(f"T must be at least 1, got {T}")

    children = np.random.SeedSequence(seed).spawn(s)
    trajectories = np.empty((s, T + 1, g.n, dynamics.d), dtype=np.float64)
    for sample, child in enumerate(children):
        rng = np.random.default_rng(child)
        x = dynamics.initial_state(g.n, rng)
        trajectories[sample, 0] = x
        for step in range(1, T + 1):
            x = dynamics.step(g, x, rng)
            trajectories[sample, step] = x
    return trajectories
