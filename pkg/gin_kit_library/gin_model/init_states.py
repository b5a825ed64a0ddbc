####################################################################
# ### init_states.py                                             ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
from typing import Optional, Sequence, Text

import numpy as np

from gin_kit_library.diffengine import ops
from gin_kit_library.diffengine.variable import Parameter, Variable, as_variable
from gin_kit_library.errors import ParameterError


####################################################################
# Class: InitActivationValues                                    ###
####################################################################
class InitActivationValues(object):
    SIGMOID = "sigmoid"
    SOFTMAX = "softmax"
    IDENTITY = "identity"


####################################################################
# Class: HiddenInitStates                                        ###
####################################################################
class HiddenInitStates(object):
    """
    Learnable initial states of hidden nodes, one (N_u, d) slice per training window. The raw values are passed
    through an activation: sigmoid keeps continuous states in (0, 1), a row softmax gives a differentiable stand-in
    for one-hot binary states.
    """

    DEFAULT_INIT_STD = 0.1

    def __init__(self, windows: int, n_hidden: int, d: int, activation: Text,
                 rng: Optional[np.random.Generator] = None, init_std: float = DEFAULT_INIT_STD) -> None:
        if activation not in (InitActivationValues.SIGMOID, InitActivationValues.SOFTMAX,
                              InitActivationValues.IDENTITY):
            raise ParameterError(f"Unknown activation '{activation}'")
        if windows < 1 or n_hidden < 1:
            raise ParameterError(f"Hidden initial states need at least one window and one hidden node, got "
                                 f"windows={windows}, n_hidden={n_hidden}")

        rng = rng if rng is not None else np.random.default_rng()
        self.activation: Text = activation
        self.gamma: Parameter = Parameter(rng.normal(0.0, init_std, size=(windows, n_hidden, d)), name="gamma")

    @property
    def windows(self) -> int:
        return self.gamma.shape[0]

    @property
    def n_hidden(self) -> int:
        return self.gamma.shape[1]

    @property
    def d(self) -> int:
        return self.gamma.shape[2]

    def activate(self, raw) -> Variable:
        if self.activation == InitActivationValues.SIGMOID:
            return ops.sigmoid(raw)
        if self.activation == InitActivationValues.SOFTMAX:
            return ops.softmax(raw, axis=-1)
        return as_variable(raw)

    def states(self) -> np.ndarray:
        """
        Returns the activated states of every window as a (windows, N_u, d) array.
        """
        return self.activate(self.gamma.value).value

    def neutral(self, count: int) -> np.ndarray:
        """
        Returns count slices of the activated zero state, used for windows that have no learned slice.
        """
        return self.activate(np.zeros((count, self.n_hidden, self.d))).value


def generate_hidden_init(h: HiddenInitStates, index: int) -> Variable:
    """
    Returns the activated (N_u, d) initial state of one window. Only that window's slice of gamma receives gradient.

    :raises ParameterError: If the index is out of range.
    """
    if not 0 <= index < h.windows:
        raise ParameterError(f"Window index {index} out of range [0, {h.windows})")
    return h.activate(ops.getitem(h.gamma, index))


def generate_hidden_init_batch(h: HiddenInitStates, indices: Sequence[int]) -> Variable:
    """
    Returns the activated (B, N_u, d) initial states of several windows.
    """
    indices = np.asarray(indices, dtype=np.int64)
    if indices.size and (indices.min() < 0 or indices.max() >= h.windows):
        raise ParameterError(f"Window indices must lie in [0, {h.windows})")
    return h.activate(ops.take(h.gamma, indices, axis=0))
