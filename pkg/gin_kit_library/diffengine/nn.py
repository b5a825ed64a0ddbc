####################################################################
# ### nn.py                                                      ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
from typing import List, Sequence, Text, Tuple

import numpy as np

from gin_kit_library.diffengine import ops
from gin_kit_library.diffengine.variable import ArrayLike, Parameter, Variable
from gin_kit_library.errors import ShapeError

Layer = Tuple[Parameter, Parameter]


def mlp_forward(layers: Sequence[Layer], x: ArrayLike, activate_last: bool = False) -> Variable:
    """
    Applies affine layers with ReLU between them. The last layer is left linear unless activate_last is set.

    :param layers: (weight, bias) pairs; weight has shape (in, out), bias (out,).
    :param x: The input, with the feature dimension last.
    :raises ShapeError: If consecutive layer sizes do not chain or the input width is wrong.
    """
    out = x
    for position, (weight, bias) in enumerate(layers):
        width = out.shape[-1] if hasattr(out, "shape") else np.shape(out)[-1]
        if weight.shape[0] != width:
            raise ShapeError(f"Layer {position} expects width {weight.shape[0]} but receives {width}")
        out = ops.matmul(out, weight) + bias
        if position < len(layers) - 1 or activate_last:
            out = ops.relu(out)
    return out


####################################################################
# Class: Mlp                                                     ###
####################################################################
class Mlp(object):
    """
    A multi-layer perceptron with He-initialised weights and zero biases.
    """

    def __init__(self, sizes: Sequence[int], rng: np.random.Generator, name: Text = "mlp",
                 activate_last: bool = False) -> None:
        """
        :param sizes: Layer widths including input and output, e.g. [4, 32, 32, 32, 32] for four weight layers.
        :param rng: Generator used for initialisation.
        :param name: Prefix for parameter names.
        :param activate_last: Apply ReLU after the last layer too.
        """
        if len(sizes) < 2:
            raise ShapeError(f"An MLP needs at least an input and an output width, got {list(sizes)}")
        self.sizes: List[int] = [int(size) for size in sizes]
        self.name: Text = name
        self.activate_last: bool = activate_last
        self.layers: List[Layer] = []
        for index, (fan_in, fan_out) in enumerate(zip(self.sizes[:-1], self.sizes[1:])):
            weight = Parameter(rng.normal(0.0, np.sqrt(2.0 / fan_in), size=(fan_in, fan_out)),
                               name=f"{name}.w{index}")
            bias = Parameter(np.zeros(fan_out), name=f"{name}.b{index}")
            self.layers.append((weight, bias))

    def __call__(self, x: ArrayLike) -> Variable:
        return mlp_forward(self.layers, x, activate_last=self.activate_last)

    def parameters(self) -> List[Parameter]:
        return [param for layer in self.layers for param in layer]

    def layer(self, index: int) -> Layer:
        return self.layers[index]

    def forward_from(self, start: int, x: ArrayLike) -> Variable:
        """
        Runs the layers from index start onward on an input that already passed the earlier layers and their ReLU.
        """
        return mlp_forward(self.layers[start:], x, activate_last=self.activate_last)
