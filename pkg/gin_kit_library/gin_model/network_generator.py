####################################################################
# ### network_generator.py                                       ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
from typing import Optional, Text, Tuple, Union

import numpy as np

from gin_kit_library.diffengine import ops
from gin_kit_library.diffengine.variable import Parameter, Variable
from gin_kit_library.errors import ParameterError, ShapeError

SeedLike = Union[None, int, np.random.Generator]


####################################################################
# Class: EdgeScores                                              ###
####################################################################
class EdgeScores(object):
    """
    Learnable logits for the adjacency entries that have to be inferred, in canonical node order (observed nodes
    first). Without a known block every upper-triangular pair is inferred (reconstruction). With a known
    N_o x N_o block only pairs touching a hidden node are inferred and the known entries are injected as constants.
    """

    DEFAULT_INIT_STD = 0.1
    DEFAULT_TAU = 1.0

    def __init__(self, n: int, known_block: Optional[np.ndarray] = None, tau: float = DEFAULT_TAU,
                 rng: Optional[np.random.Generator] = None, init_std: float = DEFAULT_INIT_STD) -> None:
        """
        Constructor for EdgeScores objects.

        :param n: The node count.
        :param known_block: The known N_o x N_o adjacency of the observed nodes, or None.
        :param tau: The sampling temperature, positive.
        :param rng: Generator for the logit initialisation; logits start at N(0, init_std).
        :param init_std: Standard deviation of the initial logits.
        """
        check_tau(tau)
        self.n: int = int(n)
        self.tau: float = float(tau)
        self.base: np.ndarray = np.zeros((n, n), dtype=np.float64)
        self.n_known: int = 0
        self.known_block: Optional[np.ndarray] = None

        if known_block is not None:
            known = np.asarray(known_block, dtype=np.float64)
            if known.ndim != 2 or known.shape[0] != known.shape[1] or known.shape[0] > n:
                raise ShapeError(f"Known block of shape {known.shape} does not fit a graph of {n} nodes")
            if not np.array_equal(known, known.T):
                raise ParameterError("Known block must be symmetric")
            self.n_known = known.shape[0]
            self.known_block = known
            self.base[:self.n_known, :self.n_known] = known
            np.fill_diagonal(self.base, 0.0)

        rows, cols = np.triu_indices(n, k=1)
        inferred = cols >= self.n_known if self.known_block is not None else np.ones_like(rows, dtype=bool)
        self.rows: np.ndarray = rows[inferred]
        self.cols: np.ndarray = cols[inferred]

        rng = rng if rng is not None else np.random.default_rng()
        self.theta: Parameter = Parameter(rng.normal(0.0, init_std, size=self.rows.shape), name="beta.theta")

    @property
    def size(self) -> int:
        return int(self.rows.size)

    def connection_probability(self) -> np.ndarray:
        """
        Returns sigmoid(theta) for every inferred pair.
        """
        return ops.sigmoid(self.theta.value).value

    def edge_probabilities(self) -> np.ndarray:
        """
        Returns the n x n canonical-order matrix of connection probabilities with known entries injected.
        """
        return ops.symmetric_scatter(self.base, self.connection_probability(), self.rows, self.cols).value

    def inferred_mask(self) -> np.ndarray:
        mask = np.zeros((self.n, self.n), dtype=bool)
        mask[self.rows, self.cols] = True
        mask[self.cols, self.rows] = True
        return mask

    def __repr__(self) -> Text:
        return f"EdgeScores(n={self.n}, inferred={self.size}, known={self.n_known}, tau={self.tau})"


def check_tau(tau: float) -> None:
    if not tau > 0:
        raise ParameterError(f"Temperature tau must be positive, got {tau}")


def logistic_noise(rng: np.random.Generator, size: Tuple[int, ...]) -> np.ndarray:
    """
    Draws g - g' for independent standard Gumbel g, g', which is standard logistic noise.
    """
    u = rng.uniform(np.finfo(np.float64).tiny, 1.0, size=size)
    return np.log(u) - np.log1p(-u)


def adjacency_from_noise(scores: EdgeScores, noise: np.ndarray, hard: bool = False,
                         tau: Optional[float] = None) -> Variable:
    """
    Builds relaxed adjacency samples from pre-drawn logistic noise: every inferred entry becomes
    sigmoid((theta + noise) / tau), known entries are copied in as constants and each matrix is mirrored from its
    upper triangle. With hard=True the forward value is rounded to {0, 1} while gradients still follow the soft
    sample.

    :param scores: The edge scores.
    :param noise: Logistic noise of shape theta.shape, or (samples,) + theta.shape for one matrix per sample.
    :param hard: Round the sample in the forward pass.
    :param tau: Temperature override; defaults to scores.tau.
    :raises ParameterError: If tau is not positive.
    :raises ShapeError: If the noise does not end in the shape of theta.
    :return: The n x n (or samples x n x n) symmetric samples with a zero diagonal.
    """
    tau = scores.tau if tau is None else float(tau)
    check_tau(tau)
    noise = np.asarray(noise, dtype=np.float64)
    if noise.shape[-1:] != scores.theta.shape or noise.ndim > 2:
        raise ShapeError(f"Noise of shape {noise.shape} does not fit {scores.size} edge scores")

    soft = ops.sigmoid((scores.theta + noise) / tau)
    values = ops.straight_through_round(soft) if hard else soft
    return ops.symmetric_scatter(scores.base, values, scores.rows, scores.cols)


def sample_adjacency(scores: EdgeScores, seed: SeedLike = None, hard: bool = False,
                     tau: Optional[float] = None, samples: Optional[int] = None) -> Variable:
    """
    Samples soft adjacency matrices with the two-category Gumbel-softmax relaxation, see adjacency_from_noise().

    :param scores: The edge scores.
    :param seed: An integer seed or a numpy Generator.
    :param hard: Round the sample in the forward pass.
    :param tau: Temperature override; defaults to scores.tau.
    :param samples: Draw this many independent matrices, shape (samples, n, n); None draws a single n x n matrix.
    :raises ParameterError: If tau is not positive or samples is below 1.
    :return: The symmetric samples with a zero diagonal.
    """
    if samples is not None and samples < 1:
        raise ParameterError(f"Sample count must be at least 1, got {samples}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    size = scores.theta.shape if samples is None else (int(samples),) + scores.theta.shape
    return adjacency_from_noise(scores, logistic_noise(rng, size), hard=hard, tau=tau)


def threshold_adjacency(probabilities: np.ndarray, threshold: float = 0.5) -> np.ndarray:
    """
    Turns a probability matrix into a binary adjacency (entries >= threshold become links) with a zero diagonal.
    """
    binary = (np.asarray(probabilities) >= threshold).astype(np.int8)
    np.fill_diagonal(binary, 0)
    return binary

