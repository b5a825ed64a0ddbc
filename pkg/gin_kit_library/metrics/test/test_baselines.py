####################################################################
# ### test_baselines.py                                          ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
import os

import numpy as np
import pytest

from gin_kit_library.dynsim.dataset import TrajectoryDataset, mask_hidden, windowize
from gin_kit_library.dynsim.dynamics import Dynamics
from gin_kit_library.errors import ParameterError, ShapeError, ZeroVarianceError
from gin_kit_library.metrics.baselines import BaselineValues, baseline_auc, baseline_scores, mi_baseline, \
    mutual_information, pcorr_baseline, pooled_states, score_baseline, trajectory_series, write_baseline_csv
from gin_kit_library.metrics.test import conftest
from gin_kit_library.metrics.test.conftest import opinion_dataset, series_dataset
from gin_kit_library.netcore.graph import Graph, NodePartition


def test_mutual_information_of_identical_sequences() -> None:
    """
    Tests that a uniform sequence shares log(levels) nats with itself and nothing with a constant.
    """
    symbols = np.tile(np.arange(4), 25)

    assert mutual_information(symbols, symbols, 4) == pytest.approx(np.log(4))
    assert mutual_information(symbols, np.zeros_like(symbols), 4) == pytest.approx(0.0)


def test_mi_independent_series_near_zero() -> None:
    """
    Tests that independent uniform series carry almost no information.
    """
    rng = np.random.default_rng(0)

    scores = mi_baseline(series_dataset(rng.random((20_000, 4))))

    assert scores.max() < 0.02


def test_mi_copied_series_is_maximal() -> None:
    """
    Tests that a copied node pair has the largest mutual information.
    """
    rng = np.random.default_rng(1)
    series = rng.random((5_000, 5))
    series[:, 3] = series[:, 1]

    scores = mi_baseline(series_dataset(series))
    i, j = np.unravel_index(np.argmax(scores), scores.shape)

    assert {int(i), int(j)} == {1, 3}


def test_mi_symmetric_nonnegative_binary() -> None:
    """
    Tests symmetry, nonnegativity and the zero diagonal on binary states.
    """
    rng = np.random.default_rng(2)
    opinions = rng.integers(0, 2, size=(400, 6))
    opinions[:, 5] = 1 - opinions[:, 0]

    scores = mi_baseline(opinion_dataset(opinions))

    assert np.array_equal(scores, scores.T)
    assert np.all(scores >= 0)
    assert np.all(np.diag(scores) == 0)
    assert scores[0, 5] == pytest.approx(np.log(2), abs=0.01)


def test_mi_constant_series_scores_zero() -> None:
    """
    Tests that a constant node shares no information.
    """
    rng = np.random.default_rng(3)
    series = rng.random((500, 3))
    series[:, 2] = 0.25

    scores = mi_baseline(series_dataset(series))

    assert scores[2, 0] == 0.0
    assert scores[2, 1] == 0.0


def test_pcorr_detects_linear_dependence() -> None:
    """
    Tests that a linearly coupled pair has the largest partial correlation and the matrix is symmetric.
    """
    rng = np.random.default_rng(4)
    series = rng.random((3_000, 5))
    series[:, 2] = 0.6 * series[:, 4] + 0.1 * rng.random(3_000)

    scores = pcorr_baseline(series_dataset(series))
    i, j = np.unravel_index(np.argmax(scores), scores.shape)

    assert {int(i), int(j)} == {2, 4}
    assert np.allclose(scores, scores.T)
    assert np.all(np.diag(scores) == 0)


def test_pcorr_constant_series() -> None:
    """
    Tests that a constant node series cannot be partially correlated.
    """
    series = np.random.default_rng(5).random((100, 3))
    series[:, 1] = 0.5

    with pytest.raises(ZeroVarianceError):
        pcorr_baseline(series_dataset(series))


def test_pcorr_rejects_binary() -> None:
    """
    Tests that binary states are refused.
    """
    with pytest.raises(ParameterError):
        pcorr_baseline(opinion_dataset(np.random.default_rng(6).integers(0, 2, size=(50, 3))))


def test_baselines_need_two_nodes() -> None:
    """
    Tests that a single node cannot be scored.
    """
    with pytest.raises(ParameterError):
        mi_baseline(series_dataset(np.random.default_rng(7).random((50, 1))))


@pytest.mark.usefixtures(conftest.SMALL_CMN_DATASET_FIXTURE)
def test_baselines_on_observed_view(small_cmn_dataset_fixture: TrajectoryDataset) -> None:
    """
    Tests that baselines accept a masked view and score only observed nodes.
    """
    view = mask_hidden(small_cmn_dataset_fixture, NodePartition(10, [0, 9]))

    for name in BaselineValues.ALL:
        assert baseline_scores(name, view).shape == (8, 8)
    with pytest.raises(ParameterError):
        baseline_scores("transfer-entropy", view)


@pytest.mark.usefixtures(conftest.SMALL_ER_GRAPH_FIXTURE)
def test_baseline_auc_of_truth(small_er_graph_fixture: Graph) -> None:
    """
    Tests that scoring the truth itself gives AUC 1 and that shapes must agree.
    """
    truth = small_er_graph_fixture.adjacency.astype(float)

    assert baseline_auc(truth, truth) == 1.0
    with pytest.raises(ShapeError):
        baseline_auc(truth[:5, :5], truth)


def test_write_baseline_csv(tmp_path) -> None:
    """
    Tests the baseline table layout.
    """
    path = write_baseline_csv({"mi": 0.5, "pcorr": 0.75}, os.path.join(str(tmp_path), "baseline_auc.csv"))

    with open(path, "r", encoding="utf-8") as f:
        assert f.read().splitlines() == ["baseline,auc", "mi,0.5", "pcorr,0.75"]


def test_trajectory_series_counts_each_step_once() -> None:
    """
    Tests that overlapping sliding windows give back every trajectory step exactly once, even with a window missing.
    """
    trajectories = np.random.default_rng(9).random((2, 6, 3, 1))
    dataset = windowize(trajectories, 2, Dynamics("cmn"), mode="sliding")

    series = trajectory_series(dataset)
    partial = trajectory_series(dataset.subset([0, 2, 3, 4, 5, 6, 7]))

    assert len(dataset) == 8
    assert [s.shape for s in series] == [(5, 3, 1), (5, 3, 1)]
    assert np.array_equal(series[0], trajectories[0, :5])
    assert np.array_equal(series[1], trajectories[1, :5])
    assert np.array_equal(partial[0], trajectories[0, :5])
    assert pooled_states(dataset).shape == (10, 3, 1)


def test_score_baseline_mi_takes_median_over_trajectories() -> None:
    """
    Tests that mutual information is scored per trajectory and partial correlation on the pooled series.
    """
    trajectories = np.random.default_rng(10).random((3, 201, 3, 1))
    trajectories[:2, :, 1] = trajectories[:2, :, 0]
    trajectories[2, :, 2] = trajectories[2, :, 0]
    dataset = windowize(trajectories, 2, Dynamics("cmn"), mode="disjoint")
    truth = np.zeros((3, 3))
    truth[0, 1] = truth[1, 0] = 1.0

    per_trajectory = [baseline_auc(mi_baseline(dataset.subset(np.flatnonzero(dataset.provenance[:, 0] == k))),
                                   truth) for k in range(3)]

    assert per_trajectory[:2] == [1.0, 1.0]
    assert per_trajectory[2] < 1.0
    assert score_baseline(BaselineValues.MI, dataset, truth) == 1.0
    assert score_baseline(BaselineValues.PCORR, dataset, truth) == baseline_auc(pcorr_baseline(dataset), truth)
    with pytest.raises(ParameterError):
        score_baseline("transfer-entropy", dataset, truth)
