####################################################################
# ### test_dataset.py                                            ###
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

from gin_kit_library.dynsim.dataset import mask_hidden, split, split_sizes, window_count, windowize
from gin_kit_library.dynsim.dynamics import Dynamics, DynamicsValues, simulate
from gin_kit_library.errors import ParameterError
from gin_kit_library.netcore.generators import generate_er
from gin_kit_library.netcore.graph import NodePartition


def _trajectories(s: int, T: int, n: int = 3, d: int = 1) -> np.ndarray:
    # each state encodes its own step so windows can be checked by value
    steps = np.arange(T + 1, dtype=np.float64)[None, :, None, None]
    return np.broadcast_to(steps, (s, T + 1, n, d)).copy() / (T + 1)


def test_windowize_disjoint_cmn_count() -> None:
    """
    Tests the disjoint window count s * T / t.
    """
    dataset = windowize(_trajectories(50, 100), 2, Dynamics("cmn"), DynamicsValues.DISJOINT)

    assert len(dataset) == 2500
    assert dataset.windows.shape == (2500, 2, 3, 1)


def test_windowize_sliding_voter_count() -> None:
    """
    Tests the sliding window count s * (T - t + 1).
    """
    dataset = windowize(_trajectories(100, 51, d=2), 2, Dynamics("voter"), DynamicsValues.SLIDING)

    assert len(dataset) == 5000


def test_windowize_sliding_boundary() -> None:
    """
    Tests that a single transition still yields one window.
    """
    assert len(windowize(_trajectories(1, 1, d=2), 2, Dynamics("voter"))) == 1


def test_windowize_too_long() -> None:
    """
    Tests that a window longer than the trajectory is rejected.
    """
    with pytest.raises(ParameterError):
        windowize(_trajectories(1, 2), 4, Dynamics("cmn"))


def test_windowize_contents_and_provenance() -> None:
    """
    Tests that windows hold consecutive states and record where they were cut.
    """
    T = 6
    trajectories = _trajectories(2, T)
    disjoint = windowize(trajectories, 2, Dynamics("cmn"), DynamicsValues.DISJOINT)
    sliding = windowize(trajectories, 2, Dynamics("cmn"), DynamicsValues.SLIDING)

    assert disjoint.provenance.tolist() == [[0, 0], [0, 2], [0, 4], [1, 0], [1, 2], [1, 4]]
    assert sliding.provenance[:, 1].tolist() == [0, 1, 2, 3, 4, 0, 1, 2, 3, 4]
    for dataset in (disjoint, sliding):
        for window, (_, start) in zip(dataset.windows, dataset.provenance):
            assert window[0, 0, 0] * (T + 1) == pytest.approx(start)
            assert window[1, 0, 0] * (T + 1) == pytest.approx(start + 1)


@settings(max_examples=100, deadline=None)
@given(s=st.integers(min_value=1, max_value=6), T=st.integers(min_value=2, max_value=40),
       t=st.integers(min_value=1, max_value=3))
def test_windowize_count_formulas(s: int, T: int, t: int) -> None:
    """
    Tests both window count formulas over random trajectory sizes.
    """
    trajectories = _trajectories(s, T, n=1)
    if t > T + 1:
        return

    assert len(windowize(trajectories, t, Dynamics("cmn"), DynamicsValues.SLIDING)) == s * max(1, T - t + 1)
    assert len(windowize(trajectories, t, Dynamics("cmn"), DynamicsValues.DISJOINT)) == s * max(1, T // t)
    assert window_count(T, t, DynamicsValues.SLIDING) == max(1, T - t + 1)


@pytest.mark.parametrize("total, ratios, expected", [
    (7000, (5, 1, 1), (5000, 1000, 1000)),
    (12000, (10, 1, 1), (10000, 1000, 1000)),
    (10, (5, 1, 1), (8, 1, 1)),
])
def test_split_sizes(total: int, ratios, expected) -> None:
    """
    Tests split sizes for the standard ratios.
    """
    assert split_sizes(total, ratios) == expected


def test_split_rejects_zero_ratio() -> None:
    """
    Tests that a zero ratio is rejected.
    """
    with pytest.raises(ParameterError):
        split_sizes(100, (1, 0, 0))


def test_split_is_disjoint_partition() -> None:
    """
    Tests that the three splits partition the windows.
    """
    g = generate_er(8, 0.4, seed=0)
    dataset = windowize(simulate(g, Dynamics("cmn"), s=7, T=20, seed=1), 2, Dynamics("cmn"))
    train, test, validation = split(dataset, (5, 1, 1), seed=5)

    assert (len(train), len(test), len(validation)) == (50, 10, 10)
    keys = [tuple(row) for part in (train, test, validation) for row in part.provenance]
    assert len(set(keys)) == len(dataset)


def test_split_deterministic() -> None:
    """
    Tests that the shuffle is reproducible.
    """
    dataset = windowize(_trajectories(4, 20), 2, Dynamics("cmn"))
    first = split(dataset, seed=8)
    second = split(dataset, seed=8)

    for a, b in zip(first, second):
        assert np.array_equal(a.provenance, b.provenance)


def test_mask_hidden_no_hidden() -> None:
    """
    Tests that masking nothing leaves the windows unchanged.
    """
    dataset = windowize(_trajectories(2, 10, n=5), 2, Dynamics("cmn"))
    view = mask_hidden(dataset, NodePartition(5, []))

    assert np.array_equal(view.windows, dataset.windows)
    assert view.evaluation_hidden_states().shape == (len(dataset), 2, 0, 1)


def test_mask_hidden_rows() -> None:
    """
    Tests that only observed rows are visible and hidden rows stay retrievable for evaluation.
    """
    g = generate_er(100, 0.04, seed=0)
    dataset = windowize(simulate(g, Dynamics("cmn"), s=2, T=10, seed=1), 2, Dynamics("cmn"))
    p = NodePartition(100, range(5, 100, 10))
    view = mask_hidden(dataset, p)

    assert view.windows.shape == (len(dataset), 2, 90, 1)
    assert np.array_equal(view.windows, dataset.windows[:, :, p.observed])
    assert np.array_equal(view.evaluation_hidden_states(), dataset.windows[:, :, p.hidden])
    assert np.array_equal(view.evaluation_full_windows()[:, :, :90], view.windows)
