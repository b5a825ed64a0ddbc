####################################################################
# ### baselines.py                                               ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
import csv

from typing import Dict, List, Text, Union

import numpy as np

from gin_kit_library.dynsim.dataset import ObservedView, TrajectoryDataset
from gin_kit_library.dynsim.dynamics import DynamicsValues
from gin_kit_library.errors import ParameterError, ShapeError, ZeroVarianceError
from gin_kit_library.metrics.scores import safe_auc

DEFAULT_MI_BINS_ = 16
DEFAULT_PCORR_RIDGE_ = 1e-4

BaselineInput = Union[TrajectoryDataset, ObservedView]


####################################################################
# Class: BaselineValues                                          ###
####################################################################
class BaselineValues(object):
    MI = "mi"
    PCORR = "pcorr"

    ALL = (MI, PCORR)
    # scored on each trajectory's own series; the rest pool every trajectory
    PER_TRAJECTORY = (MI,)


def _as_dataset(dataset: BaselineInput) -> TrajectoryDataset:
    return dataset.observed_dataset() if isinstance(dataset, ObservedView) else dataset


def trajectory_series(dataset: BaselineInput) -> List[np.ndarray]:
    """
    Rebuilds the node time series of every trajectory the windows were cut from. A step covered by several
    overlapping windows appears once; steps no window covers are left out.

    :param dataset: The windows, with their (sample, start) provenance.
    :return: One (steps, n, d) array per trajectory, in sample order, steps ascending.
    """
    dataset = _as_dataset(dataset)
    windows, provenance = dataset.windows, dataset.provenance
    t = windows.shape[1]
    samples = np.repeat(provenance[:, 0], t)
    steps = (provenance[:, 1:2] + np.arange(t)).ravel()
    states = windows.reshape(-1, windows.shape[2], windows.shape[3])

    keys = np.stack([samples, steps], axis=1)
    # np.unique sorts by sample, then step
    unique, first = np.unique(keys, axis=0, return_index=True)
    states = states[first]
    bounds = np.flatnonzero(np.diff(unique[:, 0])) + 1
    return np.split(states, bounds)


def pooled_states(dataset: BaselineInput) -> np.ndarray:
    """
    Stacks every distinct state of every trajectory into one (samples, n, d) array.
    """
    return np.concatenate(trajectory_series(dataset), axis=0)


def _trajectory_datasets(dataset: BaselineInput) -> List[TrajectoryDataset]:
    dataset = _as_dataset(dataset)
    samples = dataset.provenance[:, 0]
    return [dataset.subset(np.flatnonzero(samples == sample)) for sample in np.unique(samples)]


def _symbols(dataset: BaselineInput, bins: int) -> np.ndarray:
    states = pooled_states(dataset)
    if dataset.dynamics.kind == DynamicsValues.BINARY:
        return np.argmax(states, axis=-1)
    return np.clip(np.floor(states[..., 0] * bins), 0, bins - 1).astype(np.int64)


def mutual_information(a: np.ndarray, b: np.ndarray, levels: int) -> float:
    """
    Plug-in mutual information in nats of two aligned symbol sequences over {0, ..., levels - 1}.
    """
    joint = np.bincount(a * levels + b, minlength=levels * levels).reshape(levels, levels).astype(np.float64)
    joint /= joint.sum()
    pa, pb = joint.sum(axis=1), joint.sum(axis=0)
    nonzero = joint > 0
    return float(np.sum(joint[nonzero] * np.log(joint[nonzero] / np.outer(pa, pb)[nonzero])))


def mi_baseline(dataset: BaselineInput, bins: int = DEFAULT_MI_BINS_) -> np.ndarray:
    """
    Scores every node pair by the mutual information of their simultaneous states. Binary states are compared
    directly; continuous states are first cut into equal-width bins on [0, 1].

    :param dataset: The windows whose nodes are scored.
    :param bins: The number of bins for continuous states.
    :raises ParameterError: If fewer than two nodes are present or bins < 2.
    :return: The symmetric, nonnegative n x n score matrix with a zero diagonal.
    """
    if bins < 2:
        raise ParameterError(f"Mutual information needs at least 2 bins, got {bins}")
    symbols = _symbols(dataset, bins)
    n = symbols.shape[1]
    if n < 2:
        raise ParameterError(f"Baselines need at least two nodes, got {n}")
    levels = 2 if dataset.dynamics.kind == DynamicsValues.BINARY else bins

    scores = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            # plug-in estimates can dip below zero by rounding
            scores[i, j] = scores[j, i] = max(0.0, mutual_information(symbols[:, i], symbols[:, j], levels))
    return scores


def pcorr_baseline(dataset: BaselineInput, ridge: float = DEFAULT_PCORR_RIDGE_) -> np.ndarray:
    """
    Scores every node pair by the magnitude of their partial correlation, read off the inverse of the ridge-
    regularised covariance of the pooled continuous states.

    :raises ParameterError: If the states are binary or fewer than two nodes are present.
    :raises ZeroVarianceError: If a node's series is constant.
    :return: The symmetric n x n score matrix with a zero diagonal.
    """
    if dataset.dynamics.kind != DynamicsValues.CONTINUOUS:
        raise ParameterError("Partial correlation needs continuous states")
    series = pooled_states(dataset)[..., 0]
    n = series.shape[1]
    if n < 2:
        raise ParameterError(f"Baselines need at least two nodes, got {n}")
    constant = np.flatnonzero(np.ptp(series, axis=0) == 0)
    if constant.size:
        raise ZeroVarianceError(f"Node series {constant.tolist()} are constant")

    covariance = np.cov(series, rowvar=False) + ridge * np.eye(n)
    precision = np.linalg.inv(covariance)
    scale = np.sqrt(np.diag(precision))
    scores = np.abs(-precision / np.outer(scale, scale))
    scores = 0.5 * (scores + scores.T)
    np.fill_diagonal(scores, 0.0)
    return scores


def baseline_scores(name: Text, dataset: BaselineInput, bins: int = DEFAULT_MI_BINS_,
                    ridge: float = DEFAULT_PCORR_RIDGE_) -> np.ndarray:
    if name == BaselineValues.MI:
        return mi_baseline(dataset, bins)
    if name == BaselineValues.PCORR:
        return pcorr_baseline(dataset, ridge)
    raise ParameterError(f"Unknown baseline '{name}'; expected one of {', '.join(BaselineValues.ALL)}")


def baseline_auc(scores: np.ndarray, truth: np.ndarray) -> float:
    """
    AUC of a baseline score matrix over the upper triangle of all its node pairs.

    :raises ShapeError: If the matrices differ in shape.
    """
    scores, truth = np.asarray(scores), np.asarray(truth)
    if scores.shape != truth.shape:
        raise ShapeError(f"Score shape {scores.shape} does not match truth shape {truth.shape}")
    rows, cols = np.triu_indices(truth.shape[0], k=1)
    return safe_auc(scores[rows, cols], (truth[rows, cols] > 0.5).astype(int))


def score_baseline(name: Text, dataset: BaselineInput, truth: np.ndarray, bins: int = DEFAULT_MI_BINS_,
                   ridge: float = DEFAULT_PCORR_RIDGE_) -> float:
    """
    Reconstruction AUC of one baseline. Mutual information is computed on the series of each trajectory separately
    and the median AUC over trajectories is reported; partial correlation scores the pooled series once.

    :param name: One of the BaselineValues.
    :param dataset: The windows whose nodes are scored.
    :param truth: The adjacency among those nodes.
    :raises ParameterError: If the baseline is unknown or cannot score the dataset.
    :return: The AUC, or NaN if the truth holds a single class.
    """
    if name not in BaselineValues.PER_TRAJECTORY:
        return baseline_auc(baseline_scores(name, dataset, bins, ridge), truth)

    aucs = [baseline_auc(baseline_scores(name, trajectory, bins, ridge), truth)
            for trajectory in _trajectory_datasets(dataset)]
    aucs = [value for value in aucs if not np.isnan(value)]
    return float(np.median(aucs)) if aucs else float("nan")


def write_baseline_csv(results: Dict[Text, float], path: Text) -> Text:
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["baseline", "auc"])
        for name, value in results.items():
            writer.writerow([name, repr(value)])
    return path
