####################################################################
# ### gradcheck.py                                               ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
from typing import Callable, Sequence

import numpy as np

from gin_kit_library.diffengine.variable import Parameter, Variable, backward


def numerical_gradient(fn: Callable[..., Variable], values: Sequence[np.ndarray], index: int,
                       h: float = 1e-5) -> np.ndarray:
    """
    Central finite-difference gradient of a scalar function with respect to one of its inputs.
    """
    # C-ordered copies: broadcast views and Fortran-ordered reshapes do not write through
    base = [np.array(value, dtype=np.float64, order="C", copy=True) for value in values]
    target = base[index]
    grad = np.zeros_like(target)
    for position in np.ndindex(*target.shape):
        original = target[position]
        target[position] = original + h
        upper = float(fn(*[Variable(value) for value in base]).value)
        target[position] = original - h
        lower = float(fn(*[Variable(value) for value in base]).value)
        target[position] = original
        grad[position] = (upper - lower) / (2.0 * h)
    return grad


def max_gradient_error(fn: Callable[..., Variable], values: Sequence[np.ndarray], h: float = 1e-5,
                       atol: float = 1e-6) -> float:
    """
    Compares analytic and finite-difference gradients of a scalar function for every input.

    :return: The largest relative error |analytic - numeric| / max(|analytic|, |numeric|) over entries whose
             absolute error exceeds atol; 0.0 if every entry is within atol.
    """
    params = [Parameter(np.array(value, dtype=np.float64)) for value in values]
    backward(fn(*params))

    worst = 0.0
    for index, param in enumerate(params):
        analytic = param.grad if param.grad is not None else np.zeros_like(param.value)
        numeric = numerical_gradient(fn, values, index, h)
        difference = np.abs(analytic - numeric)
        scale = np.maximum(np.maximum(np.abs(analytic), np.abs(numeric)), np.finfo(np.float64).tiny)
        relative = np.where(difference > atol, difference / scale, 0.0)
        if relative.size:
            worst = max(worst, float(relative.max()))
    return worst
