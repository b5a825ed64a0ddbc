####################################################################
# ### dynamics_learner.py                                        ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
from typing import List, Optional, Text, Union

import numpy as np

from gin_kit_library.diffengine import ops
from gin_kit_library.diffengine.nn import Mlp
from gin_kit_library.diffengine.variable import Parameter, Variable, as_variable
from gin_kit_library.dynsim.dynamics import DynamicsValues
from gin_kit_library.errors import ShapeError

AdjacencyLike = Union[np.ndarray, Variable]


####################################################################
# Class: DynamicsLearner                                         ###
####################################################################
class DynamicsLearner(object):
    """
    Node-shared graph network that predicts the next state of every node from the current states and a (soft)
    adjacency matrix:

      1. e_ij = MLP_edge(concat(x_i, x_j)) for every ordered pair
      2. h_i = sum_j A_ji * e_ji, the adjacency gates every message
      3. u_i = MLP_node(h_i)
      4. o_i = MLP_out(concat(u_i, x_i)), row-softmaxed for binary states

    The same weights serve every node and pair, so relabelling the nodes relabels the prediction.
    """

    DEFAULT_HIDDEN_WIDTH_CONTINUOUS = 32
    DEFAULT_HIDDEN_WIDTH_BINARY = 64

    def __init__(self, d: int, kind: Text, hidden_width: Optional[int] = None,
                 rng: Optional[np.random.Generator] = None) -> None:
        """
        Constructor for DynamicsLearner objects.

        :param d: The state width.
        :param kind: "binary" or "continuous".
        :param hidden_width: The width of hidden layers; defaults to 64 for binary and 32 for continuous states.
        :param rng: Generator for weight initialisation.
        """
        if hidden_width is None:
            hidden_width = (self.DEFAULT_HIDDEN_WIDTH_BINARY if kind == DynamicsValues.BINARY
                            else self.DEFAULT_HIDDEN_WIDTH_CONTINUOUS)
        rng = rng if rng is not None else np.random.default_rng()

        self.d: int = int(d)
        self.kind: Text = kind
        self.hidden_width: int = int(hidden_width)
        h = self.hidden_width
        self.edge_mlp: Mlp = Mlp([2 * d, h, h, h, h], rng, name="alpha.edge", activate_last=True)
        self.node_mlp: Mlp = Mlp([h, h, h], rng, name="alpha.node", activate_last=True)
        self.out_mlp: Mlp = Mlp([h + d, h, d], rng, name="alpha.out")

    def parameters(self) -> List[Parameter]:
        return self.edge_mlp.parameters() + self.node_mlp.parameters() + self.out_mlp.parameters()


def predict_step(dl: DynamicsLearner, adjacency: AdjacencyLike, x: Union[np.ndarray, Variable]) -> Variable:
    """
    Predicts the next state of every node.

    :param dl: The dynamics learner.
    :param adjacency: The n x n (soft) adjacency matrix shared by every window, or one matrix per window, (B, n, n).
    :param x: The current states, (n, d) or batched (B, n, d).
    :raises ShapeError: If the adjacency and the states disagree on n or the state width is wrong.
    :return: The predicted states, same shape as x.
    """
    adjacency = as_variable(adjacency)
    x = as_variable(x)
    batched = x.ndim == 3
    if not batched:
        x = ops.reshape(x, (1,) + x.shape)
    if x.ndim != 3 or x.shape[2] != dl.d:
        raise ShapeError(f"States must have shape (n, {dl.d}) or (B, n, {dl.d}), got {x.shape}")
    b, n, d = x.shape
    if adjacency.shape not in ((n, n), (b, n, n)):
        raise ShapeError(f"Adjacency shape {adjacency.shape} does not match states shape {x.shape}")

    # first edge layer on concat(x_i, x_j), split into the x_i and x_j halves of the weight
    weight, bias = dl.edge_mlp.layer(0)
    source = ops.matmul(x, ops.getitem(weight, slice(0, d)))
    target = ops.matmul(x, ops.getitem(weight, slice(d, 2 * d)))
    width = dl.hidden_width
    pair = ops.reshape(source, (b, n, 1, width)) + ops.reshape(target, (b, 1, n, width)) + bias
    edges = dl.edge_mlp.forward_from(1, ops.relu(pair))

    gated = ops.reshape(adjacency, (1 if adjacency.ndim == 2 else b, n, n, 1)) * edges
    messages = ops.sum(gated, axis=1)
    updated = dl.node_mlp(messages)
    out = dl.out_mlp(ops.concat([updated, x], axis=-1))
    if dl.kind == DynamicsValues.BINARY:
        out = ops.softmax(out, axis=-1)

    if not batched:
        out = ops.reshape(out, (n, d))
    return out
