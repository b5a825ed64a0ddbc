####################################################################
# ### test_init_states.py                                        ###
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

from gin_kit_library.diffengine import ops
from gin_kit_library.diffengine.variable import backward
from gin_kit_library.errors import ParameterError
from gin_kit_library.gin_model.init_states import HiddenInitStates, InitActivationValues, generate_hidden_init, \
    generate_hidden_init_batch


def test_zero_gamma_sigmoid() -> None:
    """
    Tests that zero raw states map to 0.5 under sigmoid.
    """
    h = HiddenInitStates(4, 3, 1, InitActivationValues.SIGMOID, rng=np.random.default_rng(0))
    h.gamma.value[:] = 0.0

    assert np.array_equal(generate_hidden_init(h, 2).value, np.full((3, 1), 0.5))


def test_softmax_saturates_to_one_hot() -> None:
    """
    Tests that a strongly separated row becomes nearly one-hot.
    """
    h = HiddenInitStates(1, 1, 2, InitActivationValues.SOFTMAX, rng=np.random.default_rng(0))
    h.gamma.value[0, 0] = [10.0, -10.0]
    state = generate_hidden_init(h, 0).value

    assert state[0, 0] == pytest.approx(1.0, abs=1e-8)
    assert state[0].sum() == pytest.approx(1.0)


def test_gradient_only_for_addressed_window() -> None:
    """
    Tests that a loss on one window's state only moves that window's slice.
    """
    h = HiddenInitStates(5, 2, 1, InitActivationValues.SIGMOID, rng=np.random.default_rng(0))
    backward(ops.sum(generate_hidden_init(h, 3)))

    assert np.all(h.gamma.grad[3] != 0)
    assert not np.delete(h.gamma.grad, 3, axis=0).any()


def test_batch_matches_single() -> None:
    """
    Tests that the batched accessor stacks single slices.
    """
    h = HiddenInitStates(6, 2, 2, InitActivationValues.SOFTMAX, rng=np.random.default_rng(1))
    batch = generate_hidden_init_batch(h, [4, 0]).value

    assert np.allclose(batch[0], generate_hidden_init(h, 4).value)
    assert np.allclose(batch[1], generate_hidden_init(h, 0).value)


def test_index_out_of_range() -> None:
    """
    Tests that an out-of-range window index is rejected.
    """
    h = HiddenInitStates(2, 1, 1, InitActivationValues.SIGMOID, rng=np.random.default_rng(0))

    with pytest.raises(ParameterError):
        generate_hidden_init(h, 2)
    with pytest.raises(ParameterError):
        generate_hidden_init_batch(h, [0, 5])


def test_neutral_state() -> None:
    """
    Tests the neutral states used for windows without a learned slice.
    """
    h = HiddenInitStates(2, 3, 2, InitActivationValues.SOFTMAX, rng=np.random.default_rng(0))

    assert np.array_equal(h.neutral(4), np.full((4, 3, 2), 0.5))
