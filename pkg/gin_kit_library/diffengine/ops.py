####################################################################
# ### ops.py                                                     ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from gin_kit_library.diffengine.variable import ArrayLike, Variable, as_variable
from gin_kit_library.errors import ShapeError

Axis = Optional[Union[int, Tuple[int, ...]]]


def unbroadcast(grad: np.ndarray, shape: Tuple[int, ...]) -> np.ndarray:
    """
    Sums a broadcast gradient back down to the shape of the input it flows into.
    """
    while grad.ndim > len(shape):
        grad = grad.sum(axis=0)
    for axis, size in enumerate(shape):
        if size == 1 and grad.shape[axis] != 1:
            grad = grad.sum(axis=axis, keepdims=True)
    return grad


def _broadcast_shape(a: Variable, b: Variable, op: str) -> Tuple[int, ...]:
    try:
        return np.broadcast_shapes(a.shape, b.shape)
    except ValueError:
        raise ShapeError(f"{op}: shapes {a.shape} and {b.shape} cannot be broadcast together")


####################################################################
# Elementwise arithmetic                                         ###
####################################################################
def add(a: ArrayLike, b: ArrayLike) -> Variable:
    a, b = as_variable(a), as_variable(b)
    _broadcast_shape(a, b, "add")
    return Variable(a.value + b.value, parents=(
        (a, lambda g: unbroadcast(g, a.shape)),
        (b, lambda g: unbroadcast(g, b.shape)),
    ))


def subtract(a: ArrayLike, b: ArrayLike) -> Variable:
    a, b = as_variable(a), as_variable(b)
    _broadcast_shape(a, b, "subtract")
    return Variable(a.value - b.value, parents=(
        (a, lambda g: unbroadcast(g, a.shape)),
        (b, lambda g: unbroadcast(-g, b.shape)),
    ))


def multiply(a: ArrayLike, b: ArrayLike) -> Variable:
    a, b = as_variable(a), as_variable(b)
    _broadcast_shape(a, b, "multiply")
    return Variable(a.value * b.value, parents=(
        (a, lambda g: unbroadcast(g * b.value, a.shape)),
        (b, lambda g: unbroadcast(g * a.value, b.shape)),
    ))


def divide(a: ArrayLike, b: ArrayLike) -> Variable:
    a, b = as_variable(a), as_variable(b)
    _broadcast_shape(a, b, "divide")
    return Variable(a.value / b.value, parents=(
        (a, lambda g: unbroadcast(g / b.value, a.shape)),
        (b, lambda g: unbroadcast(-g * a.value / (b.value ** 2), b.shape)),
    ))


def neg(a: ArrayLike) -> Variable:
    a = as_variable(a)
    return Variable(-a.value, parents=((a, lambda g: -g),))


def matmul(a: ArrayLike, b: ArrayLike) -> Variable:
    """
    Matrix product with numpy batching semantics; both operands need at least two dimensions.
    """
    a, b = as_variable(a), as_variable(b)
    if a.ndim < 2 or b.ndim < 2:
        raise ShapeError(f"matmul: operands need at least 2 dimensions, got {a.shape} and {b.shape}")
    if a.shape[-1] != b.shape[-2]:
        raise ShapeError(f"matmul: shapes {a.shape} and {b.shape} are not aligned")
    try:
        value = a.value @ b.value
    except ValueError:
        raise ShapeError(f"matmul: batch dimensions of {a.shape} and {b.shape} do not broadcast")

    def grad_a(g: np.ndarray) -> np.ndarray:
        return unbroadcast(g @ np.swapaxes(b.value, -1, -2), a.shape)

    def grad_b(g: np.ndarray) -> np.ndarray:
        if b.ndim == 2:
            # fold all batch dimensions into one product
            k, m = b.shape
            return a.value.reshape(-1, k).T @ g.reshape(-1, m)
        return unbroadcast(np.swapaxes(a.value, -1, -2) @ g, b.shape)

    return Variable(value, parents=((a, grad_a), (b, grad_b)))


####################################################################
# Nonlinearities                                                 ###
####################################################################
def relu(a: ArrayLike) -> Variable:
    a = as_variable(a)
    mask = a.value > 0
    return Variable(np.where(mask, a.value, 0.0), parents=((a, lambda g: g * mask),))


def sigmoid(a: ArrayLike) -> Variable:
    a = as_variable(a)
    # split by sign so neither branch overflows
    x = a.value
    positive = x >= 0
    exp_neg = np.exp(-np.abs(x))
    value = np.where(positive, 1.0 / (1.0 + exp_neg), exp_neg / (1.0 + exp_neg))
    return Variable(value, parents=((a, lambda g: g * value * (1.0 - value)),))


def softmax(a: ArrayLike, axis: int = -1) -> Variable:
    a = as_variable(a)
    shifted = a.value - a.value.max(axis=axis, keepdims=True)
    exp = np.exp(shifted)
    value = exp / exp.sum(axis=axis, keepdims=True)

    def grad(g: np.ndarray) -> np.ndarray:
        return value * (g - (g * value).sum(axis=axis, keepdims=True))

    return Variable(value, parents=((a, grad),))


def log(a: ArrayLike) -> Variable:
    a = as_variable(a)
    return Variable(np.log(a.value), parents=((a, lambda g: g / a.value),))


def exp(a: ArrayLike) -> Variable:
    a = as_variable(a)
    value = np.exp(a.value)
    return Variable(value, parents=((a, lambda g: g * value),))


def absolute(a: ArrayLike) -> Variable:
    a = as_variable(a)
    return Variable(np.abs(a.value), parents=((a, lambda g: g * np.sign(a.value)),))


####################################################################
# Reductions                                                     ###
####################################################################
def _expand(g: np.ndarray, shape: Tuple[int, ...], axis: Axis, keepdims: bool) -> np.ndarray:
    if axis is not None and not keepdims:
        axes = (axis,) if isinstance(axis, int) else axis
        axes = tuple(ax % len(shape) for ax in axes)
        g = np.expand_dims(g, axes)
    return np.broadcast_to(g, shape)


def sum(a: ArrayLike, axis: Axis = None, keepdims: bool = False) -> Variable:
    a = as_variable(a)
    value = a.value.sum(axis=axis, keepdims=keepdims)
    return Variable(value, parents=((a, lambda g: _expand(g, a.shape, axis, keepdims).copy()),))


def mean(a: ArrayLike, axis: Axis = None, keepdims: bool = False) -> Variable:
    a = as_variable(a)
    value = a.value.mean(axis=axis, keepdims=keepdims)
    count = a.value.size / max(value.size, 1)
    return Variable(value, parents=((a, lambda g: _expand(g, a.shape, axis, keepdims) / count),))


####################################################################
# Shape manipulation                                             ###
####################################################################
def reshape(a: ArrayLike, shape: Sequence[int]) -> Variable:
    a = as_variable(a)
    try:
        value = a.value.reshape(shape)
    except ValueError:
        raise ShapeError(f"reshape: cannot reshape {a.shape} into {tuple(shape)}")
    return Variable(value, parents=((a, lambda g: g.reshape(a.shape)),))


def transpose(a: ArrayLike, axes: Optional[Sequence[int]] = None) -> Variable:
    a = as_variable(a)
    value = np.transpose(a.value, axes)
    inverse = None if axes is None else np.argsort(axes)
    return Variable(value, parents=((a, lambda g: np.transpose(g, inverse)),))


def broadcast_to(a: ArrayLike, shape: Sequence[int]) -> Variable:
    a = as_variable(a)
    try:
        value = np.broadcast_to(a.value, tuple(shape))
    except ValueError:
        raise ShapeError(f"broadcast_to: cannot broadcast {a.shape} to {tuple(shape)}")
    return Variable(value, parents=((a, lambda g: unbroadcast(g, a.shape)),))


def concat(parts: Sequence[ArrayLike], axis: int = -1) -> Variable:
    """
    Concatenates variables along an existing axis.
    """
    parts = [as_variable(p) for p in parts]
    try:
        value = np.concatenate([p.value for p in parts], axis=axis)
    except ValueError:
        raise ShapeError(f"concat: shapes {[p.shape for p in parts]} do not match off axis {axis}")

    bounds = np.cumsum([0] + [p.shape[axis] for p in parts])
    parents = []
    for part, start, stop in zip(parts, bounds[:-1], bounds[1:]):
        def grad(g: np.ndarray, start=start, stop=stop) -> np.ndarray:
            index = [slice(None)] * g.ndim
            index[axis] = slice(start, stop)
            return g[tuple(index)]
        parents.append((part, grad))
    return Variable(value, parents=parents)


def getitem(a: ArrayLike, key) -> Variable:
    """
    Basic or advanced indexing. Repeated indices accumulate their gradients.
    """
    a = as_variable(a)
    value = a.value[key]

    def grad(g: np.ndarray) -> np.ndarray:
        full = np.zeros_like(a.value)
        np.add.at(full, key, g)
        return full

    return Variable(value, parents=((a, grad),))


def take(a: ArrayLike, indices: Sequence[int], axis: int = 0) -> Variable:
    """
    Gathers entries along one axis.
    """
    a = as_variable(a)
    indices = np.asarray(indices, dtype=np.int64)
    value = np.take(a.value, indices, axis=axis)

    def grad(g: np.ndarray) -> np.ndarray:
        full = np.zeros_like(a.value)
        moved = np.moveaxis(full, axis, 0)
        np.add.at(moved, indices, np.moveaxis(g, axis, 0))
        return full

    return Variable(value, parents=((a, grad),))


def symmetric_scatter(base: np.ndarray, values: ArrayLike, rows: np.ndarray, cols: np.ndarray) -> Variable:
    """
    Writes values into a copy of a constant square matrix at (rows, cols) and mirrors them to (cols, rows).
    Entries of the base that are not overwritten carry no gradient. Values with leading batch axes, shape
    (..., pairs), give one matrix per batch entry, shape (..., n, n).

    :param base: The constant n x n matrix.
    :param values: A variable with one entry per (row, col) pair in its last axis.
    :param rows: Row indices; every pair must lie strictly above the diagonal and appear once.
    :param cols: Column indices.
    """
    values = as_variable(values)
    rows = np.asarray(rows, dtype=np.int64)
    cols = np.asarray(cols, dtype=np.int64)
    if values.ndim < 1 or values.shape[-1:] != rows.shape or rows.shape != cols.shape:
        raise ShapeError(f"symmetric_scatter: values {values.shape}, rows {rows.shape} and cols {cols.shape} differ")

    base = np.asarray(base, dtype=np.float64)
    value = np.array(np.broadcast_to(base, values.shape[:-1] + base.shape), dtype=np.float64, copy=True)
    value[..., rows, cols] = values.value
    value[..., cols, rows] = values.value
    return Variable(value, parents=((values, lambda g: g[..., rows, cols] + g[..., cols, rows]),))


def straight_through_round(a: ArrayLike) -> Variable:
    """
    Rounds values in [0, 1] to {0, 1} in the forward pass, 0.5 going to 1, and passes gradients through unchanged.
    """
    a = as_variable(a)
    return Variable((a.value >= 0.5).astype(np.float64), parents=((a, lambda g: g),))


def detach(a: ArrayLike) -> Variable:
    return Variable(as_variable(a).value.copy())
