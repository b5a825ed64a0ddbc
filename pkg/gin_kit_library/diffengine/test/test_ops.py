####################################################################
# ### test_ops.py                                                ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
import numpy as np
import pytest

from hypothesis import given, settings
from hypothesis import strategies as st

from gin_kit_library.diffengine import ops
from gin_kit_library.diffengine.gradcheck import max_gradient_error, numerical_gradient
from gin_kit_library.diffengine.variable import Parameter, Variable, backward
from gin_kit_library.errors import ContractError, ShapeError

RTOL_ = 1e-4

seeds = st.integers(min_value=0, max_value=10 ** 6)
dims = st.integers(min_value=1, max_value=4)


def _away_from_zero(rng: np.random.Generator, shape) -> np.ndarray:
    return np.sign(rng.normal(size=shape) + 1e-3) * (0.1 + np.abs(rng.normal(size=shape)))


def _weighted(out: Variable, weights: np.ndarray) -> Variable:
    return ops.sum(out * weights)


def test_relu_values() -> None:
    """
    Tests relu on a negative and a positive entry.
    """
    assert ops.relu(Variable([-1.0, 2.0])).value.tolist() == [0.0, 2.0]


def test_softmax_symmetric() -> None:
    """
    Tests that equal logits give equal probabilities.
    """
    assert ops.softmax(Variable([0.0, 0.0])).value.tolist() == [0.5, 0.5]


def test_sigmoid_zero() -> None:
    """
    Tests sigmoid at zero.
    """
    assert float(ops.sigmoid(Variable(0.0)).value) == 0.5


def test_sigmoid_extremes_are_finite() -> None:
    """
    Tests that large logits do not overflow.
    """
    value = ops.sigmoid(Variable([-1000.0, 1000.0])).value

    assert np.all(np.isfinite(value))
    assert value.tolist() == [0.0, 1.0]


def test_backward_linear() -> None:
    """
    Tests the gradient of sum(w * x).
    """
    w = Parameter([1.0, 2.0])
    backward(ops.sum(w * np.array([3.0, 4.0])))

    assert w.grad.tolist() == [3.0, 4.0]


def test_backward_sigmoid_at_zero() -> None:
    """
    Tests the sigmoid derivative at zero.
    """
    w = Parameter(0.0)
    backward(ops.sigmoid(w))

    assert float(w.grad) == pytest.approx(0.25)


def test_backward_non_scalar() -> None:
    """
    Tests that a non-scalar root without a seed gradient is a contract error.
    """
    w = Parameter([1.0, 2.0])

    with pytest.raises(ContractError):
        backward(w * 2.0)


def test_backward_seed_gradient() -> None:
    """
    Tests back-propagation from a non-scalar root with an explicit seed gradient.
    """
    w = Parameter([1.0, 2.0])
    backward(w * 3.0, grad=np.array([1.0, -1.0]))

    assert w.grad.tolist() == [3.0, -3.0]


def test_backward_accumulates_reuse() -> None:
    """
    Tests that a variable used twice receives the sum of both path gradients, as two separate leaves would.
    """
    x, y = np.array([1.0, -2.0]), np.array([0.5, 4.0])
    w = Parameter([0.3, 0.7])
    backward(ops.sum(w * x) + ops.sum(ops.sigmoid(w) * y))

    w1, w2 = Parameter([0.3, 0.7]), Parameter([0.3, 0.7])
    backward(ops.sum(w1 * x) + ops.sum(ops.sigmoid(w2) * y))

    assert np.allclose(w.grad, w1.grad + w2.grad)


def test_backward_accumulates_across_passes() -> None:
    """
    Tests that gradients of separate backward passes add up until cleared.
    """
    w = Parameter([1.0])
    backward(ops.sum(w * 2.0))
    backward(ops.sum(w * 5.0))

    assert w.grad.tolist() == [7.0]
    w.zero_grad()
    assert w.grad is None


def test_constants_get_no_gradient() -> None:
    """
    Tests that plain variables are not tracked.
    """
    c = Variable([1.0, 2.0])
    w = Parameter([1.0, 1.0])
    backward(ops.sum(c * w))

    assert c.grad is None
    assert not c.requires_grad


def test_shape_errors() -> None:
    """
    Tests that incompatible shapes raise shape errors naming both shapes.
    """
    with pytest.raises(ShapeError) as e:
        ops.add(Variable(np.zeros((2, 3))), Variable(np.zeros((4, 3))))
    assert "(2, 3)" in str(e.value) and "(4, 3)" in str(e.value)

    with pytest.raises(ShapeError):
        ops.matmul(Variable(np.zeros((2, 3))), Variable(np.zeros((2, 3))))
    with pytest.raises(ShapeError):
        ops.concat([Variable(np.zeros((2, 3))), Variable(np.zeros((3, 2)))], axis=0)


def test_symmetric_scatter_values() -> None:
    """
    Tests that scattered values are mirrored and base entries kept.
    """
    base = np.zeros((3, 3))
    base[0, 1] = base[1, 0] = 1.0
    out = ops.symmetric_scatter(base, Variable([0.25, 0.75]), np.array([0, 1]), np.array([2, 2]))

    assert out.value.tolist() == [[0.0, 1.0, 0.25], [1.0, 0.0, 0.75], [0.25, 0.75, 0.0]]


def test_straight_through_round() -> None:
    """
    Tests that rounding is applied forward and skipped backward.
    """
    w = Parameter([0.2, 0.8])
    out = ops.straight_through_round(w)
    backward(ops.sum(out * np.array([2.0, 3.0])))

    assert out.value.tolist() == [0.0, 1.0]
    assert w.grad.tolist() == [2.0, 3.0]


def test_straight_through_round_half_is_a_link() -> None:
    """
    Tests that a soft value of exactly 0.5 rounds to 1, matching the 0.5 export threshold.
    """
    out = ops.straight_through_round(Variable([0.0, 0.4999, 0.5, 1.0]))

    assert out.value.tolist() == [0.0, 0.0, 1.0, 1.0]


def test_symmetric_scatter_batched() -> None:
    """
    Tests that leading axes of the values give one mirrored matrix per entry, each on a fresh copy of the base.
    """
    base = np.zeros((3, 3))
    base[0, 1] = base[1, 0] = 1.0
    values = Parameter([[0.25, 0.75], [0.5, 1.0]])
    out = ops.symmetric_scatter(base, values, np.array([0, 1]), np.array([2, 2]))
    backward(ops.sum(out * np.arange(18.0).reshape(2, 3, 3)))

    assert out.shape == (2, 3, 3)
    assert out.value[0].tolist() == [[0.0, 1.0, 0.25], [1.0, 0.0, 0.75], [0.25, 0.75, 0.0]]
    assert out.value[1].tolist() == [[0.0, 1.0, 0.5], [1.0, 0.0, 1.0], [0.5, 1.0, 0.0]]
    assert base[0, 2] == 0.0
    # (0, 2) + (2, 0) and (1, 2) + (2, 1) of each weight slice
    assert values.grad.tolist() == [[8.0, 12.0], [26.0, 30.0]]


def test_detach_blocks_gradient() -> None:
    """
    Tests that a detached value is a fresh constant.
    """
    w = Parameter([1.0])
    out = ops.detach(w * 2.0)

    assert not out.requires_grad
    assert out.value.tolist() == [2.0]


@settings(max_examples=50, deadline=None)
@given(seed=seeds, rows=dims, cols=dims)
def test_gradcheck_elementwise(seed: int, rows: int, cols: int) -> None:
    """
    Tests elementwise arithmetic and nonlinearities against finite differences.
    """
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(rows, cols))
    b = 1.0 + np.abs(rng.normal(size=(1, cols)))
    w = rng.normal(size=(rows, cols))

    assert max_gradient_error(lambda x, y: _weighted(ops.add(x, y), w), [a, b]) < RTOL_
    assert max_gradient_error(lambda x, y: _weighted(ops.subtract(x, y), w), [a, b]) < RTOL_
    assert max_gradient_error(lambda x, y: _weighted(ops.multiply(x, y), w), [a, b]) < RTOL_
    assert max_gradient_error(lambda x, y: _weighted(ops.divide(x, y), w), [a, b]) < RTOL_
    assert max_gradient_error(lambda x: _weighted(ops.neg(x), w), [a]) < RTOL_
    assert max_gradient_error(lambda x: _weighted(ops.sigmoid(x), w), [a]) < RTOL_
    assert max_gradient_error(lambda x: _weighted(ops.exp(x), w), [a]) < RTOL_
    assert max_gradient_error(lambda x: _weighted(ops.log(x), w), [np.broadcast_to(b, (rows, cols))]) < RTOL_
    away = _away_from_zero(rng, (rows, cols))
    assert max_gradient_error(lambda x: _weighted(ops.relu(x), w), [away]) < RTOL_
    assert max_gradient_error(lambda x: _weighted(ops.absolute(x), w), [away]) < RTOL_


@settings(max_examples=50, deadline=None)
@given(seed=seeds, rows=dims, inner=dims, cols=dims, batch=st.integers(min_value=1, max_value=3))
def test_gradcheck_matmul(seed: int, rows: int, inner: int, cols: int, batch: int) -> None:
    """
    Tests plain and batched matrix products against finite differences.
    """
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(rows, inner))
    batched = rng.normal(size=(batch, rows, inner))
    b = rng.normal(size=(inner, cols))
    w = rng.normal(size=(rows, cols))
    wb = rng.normal(size=(batch, rows, cols))

    assert max_gradient_error(lambda x, y: _weighted(ops.matmul(x, y), w), [a, b]) < RTOL_
    assert max_gradient_error(lambda x, y: _weighted(ops.matmul(x, y), wb), [batched, b]) < RTOL_


@settings(max_examples=50, deadline=None)
@given(seed=seeds, rows=dims, cols=dims, axis=st.sampled_from([0, 1, -1]))
def test_gradcheck_reductions(seed: int, rows: int, cols: int, axis: int) -> None:
    """
    Tests sums, means and softmax against finite differences.
    """
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(rows, cols))
    w_axis = rng.normal(size=np.sum(a, axis=axis).shape)
    w = rng.normal(size=(rows, cols))

    assert max_gradient_error(lambda x: _weighted(ops.sum(x, axis=axis), w_axis), [a]) < RTOL_
    assert max_gradient_error(lambda x: _weighted(ops.mean(x, axis=axis), w_axis), [a]) < RTOL_
    assert max_gradient_error(lambda x: _weighted(ops.sum(x, axis=axis, keepdims=True), 1.0), [a]) < RTOL_
    assert max_gradient_error(lambda x: _weighted(ops.softmax(x, axis=axis), w), [a]) < RTOL_
    assert max_gradient_error(lambda x: ops.mean(x), [a]) < RTOL_


@settings(max_examples=50, deadline=None)
@given(seed=seeds, rows=st.integers(min_value=2, max_value=4), cols=dims)
def test_gradcheck_shape_ops(seed: int, rows: int, cols: int) -> None:
    """
    Tests reshape, transpose, broadcasting, concatenation and indexing against finite differences.
    """
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(rows, cols))
    b = rng.normal(size=(rows, 2))
    w_concat = rng.normal(size=(rows, cols + 2))
    w_t = rng.normal(size=(cols, rows))
    w_b = rng.normal(size=(3, rows, cols))
    w_take = rng.normal(size=(3, cols))
    w_row = rng.normal(size=(cols,))

    assert max_gradient_error(lambda x: _weighted(ops.reshape(x, (cols, rows)), w_t), [a]) < RTOL_
    assert max_gradient_error(lambda x: _weighted(ops.transpose(x), w_t), [a]) < RTOL_
    assert max_gradient_error(lambda x: _weighted(ops.broadcast_to(x, (3, rows, cols)), w_b), [a]) < RTOL_
    assert max_gradient_error(lambda x, y: _weighted(ops.concat([x, y], axis=1), w_concat), [a, b]) < RTOL_
    assert max_gradient_error(lambda x: _weighted(ops.take(x, [0, 1, 0], axis=0), w_take), [a]) < RTOL_
    assert max_gradient_error(lambda x: _weighted(x[1], w_row), [a]) < RTOL_


@settings(max_examples=50, deadline=None)
@given(seed=seeds, n=st.integers(min_value=2, max_value=5))
def test_gradcheck_symmetric_scatter(seed: int, n: int) -> None:
    """
    Tests the symmetric scatter gradient against finite differences.
    """
    rng = np.random.default_rng(seed)
    rows, cols = np.triu_indices(n, k=1)
    values = rng.normal(size=rows.shape)
    base = rng.integers(0, 2, size=(n, n)).astype(np.float64)
    w = rng.normal(size=(n, n))

    assert max_gradient_error(lambda v: _weighted(ops.symmetric_scatter(base, v, rows, cols), w), [values]) < RTOL_


def test_numerical_gradient_on_broadcast_input() -> None:
    """
    Tests that finite differences perturb every entry of read-only broadcast and Fortran-ordered inputs.
    """
    w = np.arange(6.0).reshape(2, 3)
    broadcast = np.broadcast_to(np.array([[1.0, 2.0, 3.0]]), (2, 3))
    fortran = np.asfortranarray(np.ones((2, 3)))

    assert np.allclose(numerical_gradient(lambda x: _weighted(x, w), [broadcast], 0), w)
    assert np.allclose(numerical_gradient(lambda x: _weighted(x, w), [fortran], 0), w)
    assert max_gradient_error(lambda x: _weighted(ops.log(x), w), [broadcast]) < RTOL_


@settings(max_examples=30, deadline=None)
@given(seed=seeds, n=st.integers(min_value=2, max_value=4), batch=st.integers(min_value=1, max_value=3))
def test_gradcheck_symmetric_scatter_batched(seed: int, n: int, batch: int) -> None:
    """
    Tests the batched symmetric scatter gradient against finite differences.
    """
    rng = np.random.default_rng(seed)
    rows, cols = np.triu_indices(n, k=1)
    values = rng.normal(size=(batch,) + rows.shape)
    base = rng.integers(0, 2, size=(n, n)).astype(np.float64)
    w = rng.normal(size=(batch, n, n))

    assert max_gradient_error(lambda v: _weighted(ops.symmetric_scatter(base, v, rows, cols), w), [values]) < RTOL_
