####################################################################
# ### optim.py                                                   ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
from typing import Dict, List, Sequence, Text

import numpy as np

from gin_kit_library.diffengine.variable import Parameter
from gin_kit_library.errors import ContractError, ParameterError


####################################################################
# Class: AdamState                                               ###
####################################################################
class AdamState(object):
    """
    Moment estimates and step counter of one Adam parameter group.
    """

    DEFAULT_BETA1 = 0.9
    DEFAULT_BETA2 = 0.999
    DEFAULT_EPSILON = 1e-8

    def __init__(self, lr: float, beta1: float = DEFAULT_BETA1, beta2: float = DEFAULT_BETA2,
                 epsilon: float = DEFAULT_EPSILON) -> None:
        if lr <= 0:
            raise ParameterError(f"Learning rate must be positive, got {lr}")
        self.lr: float = float(lr)
        self.beta1: float = float(beta1)
        self.beta2: float = float(beta2)
        self.epsilon: float = float(epsilon)
        self.step: int = 0
        self.m: Dict[int, np.ndarray] = {}
        self.v: Dict[int, np.ndarray] = {}


def adam_step(params: Sequence[Parameter], state: AdamState) -> None:
    """
    Applies one bias-corrected Adam update to every parameter and clears their gradients.

    :param params: The parameters of one group; every one must hold a gradient.
    :param state: The group's Adam state.
    :raises ContractError: If a parameter has no gradient or a gradient of the wrong shape.
    """
    for param in params:
        if param.grad is None:
            raise ContractError(f"Parameter {param.name or param.shape} has no gradient")
        if param.grad.shape != param.shape:
            raise ContractError(f"Gradient shape {param.grad.shape} does not match parameter shape {param.shape}")

    state.step += 1
    correction1 = 1.0 - state.beta1 ** state.step
    correction2 = 1.0 - state.beta2 ** state.step

    for index, param in enumerate(params):
        g = param.grad
        m = state.m.setdefault(index, np.zeros_like(param.value))
        v = state.v.setdefault(index, np.zeros_like(param.value))
        m *= state.beta1
        m += (1.0 - state.beta1) * g
        v *= state.beta2
        v += (1.0 - state.beta2) * (g * g)
        param.value -= (state.lr / correction1) * m / (np.sqrt(v / correction2) + state.epsilon)
        param.grad = None


####################################################################
# Class: Adam                                                    ###
####################################################################
class Adam(object):
    """
    Adam over named parameter groups, each with its own learning rate and moment state.
    """

    def __init__(self) -> None:
        self._groups: Dict[Text, List[Parameter]] = {}
        self._states: Dict[Text, AdamState] = {}

    def add_group(self, name: Text, params: Sequence[Parameter], lr: float) -> None:
        if name in self._groups:
            raise ParameterError(f"Parameter group '{name}' already exists")
        self._groups[name] = list(params)
        self._states[name] = AdamState(lr)

    def state(self, name: Text) -> AdamState:
        return self._states[name]

    def set_lr(self, name: Text, lr: float) -> None:
        self._states[name].lr = float(lr)

    def step(self) -> None:
        for name, params in self._groups.items():
            if params:
                adam_step(params, self._states[name])

    def zero_grad(self) -> None:
        for params in self._groups.values():
            for param in params:
                param.zero_grad()
