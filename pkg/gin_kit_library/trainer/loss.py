####################################################################
# ### loss.py                                                    ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
from typing import Text

import numpy as np

from gin_kit_library.diffengine import ops
from gin_kit_library.diffengine.variable import ArrayLike, Variable, as_variable
from gin_kit_library.dynsim.dynamics import DynamicsValues
from gin_kit_library.errors import ShapeError

# keeps log() finite for predictions that reach exactly zero
CE_EPSILON_ = 1e-12


def state_loss(pred: ArrayLike, target: ArrayLike, kind: Text) -> Variable:
    """
    Compares predicted and true observed states: cross-entropy averaged over nodes and windows for binary states,
    mean absolute error for continuous states.

    :raises ShapeError: If the shapes differ.
    """
    pred, target = as_variable(pred), as_variable(target)
    if pred.shape != target.shape:
        raise ShapeError(f"Prediction shape {pred.shape} does not match target shape {target.shape}")

    if kind == DynamicsValues.BINARY:
        per_node = -ops.sum(target * ops.log(pred + CE_EPSILON_), axis=-1)
        return ops.mean(per_node)
    return ops.mean(ops.absolute(pred - target))


def structure_penalty(adjacency: ArrayLike, weight: float) -> Variable:
    """
    Returns weight * sum(A) / n^2, the normalised entrywise L1 norm of a (soft) adjacency matrix. For a stack of
    samples, shape (S, n, n), the norm is averaged over the samples.
    """
    adjacency = as_variable(adjacency)
    n = adjacency.shape[-1]
    samples = int(np.prod(adjacency.shape[:-2]))
    return ops.sum(adjacency) * (weight / float(n * n * samples))


def loss(pred: ArrayLike, target: ArrayLike, adjacency: ArrayLike, weight: float, kind: Text) -> Variable:
    """
    The training objective: state loss on observed nodes plus the weighted structure penalty.
    """
    return state_loss(pred, target, kind) + structure_penalty(adjacency, weight)


def evaluation_mae(pred: np.ndarray, target: np.ndarray) -> float:
    """
    Mean absolute error with predictions clipped to [0, 1], as reported for continuous states.
    """
    return float(np.mean(np.abs(np.clip(pred, 0.0, 1.0) - target)))
