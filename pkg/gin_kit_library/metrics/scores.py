####################################################################
# ### scores.py                                                  ###
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

from typing import Dict, Optional, Sequence, Text, Union

import numpy as np
from scipy.stats import rankdata

from gin_kit_library.dynsim.dynamics import Dynamics, DynamicsValues
from gin_kit_library.errors import ContractError, ParameterError, ShapeError, UndefinedAUCError
from gin_kit_library.sgm.matching import MatchResult, apply_match

DEFAULT_THRESHOLD_ = 0.5


####################################################################
# Class: ContrastValues                                          ###
####################################################################
class ContrastValues(object):
    """
    Labels of the contrast matrix. Entries outside the scored region are KNOWN.
    """
    TRUE_POSITIVE = "TP"
    TRUE_NEGATIVE = "TN"
    FALSE_POSITIVE = "FP"
    FALSE_NEGATIVE = "FN"
    KNOWN = "KNOWN"


def auc(scores: Sequence[float], labels: Sequence[int]) -> float:
    """
    Rank-based area under the ROC curve: the probability that a random positive outscores a random negative, with
    ties counting one half.

    :param scores: The real-valued scores.
    :param labels: The 0/1 labels.
    :raises ShapeError: If scores and labels differ in length.
    :raises ParameterError: If a label is not 0 or 1.
    :raises UndefinedAUCError: If only one class is present.
    :return: The AUC in [0, 1].
    """
    scores = np.asarray(scores, dtype=np.float64).ravel()
    labels = np.asarray(labels).ravel()
    if scores.shape != labels.shape:
        raise ShapeError(f"Got {scores.size} scores for {labels.size} labels")
    if not np.all((labels == 0) | (labels == 1)):
        raise ParameterError("Labels must be 0 or 1")

    positive = labels == 1
    n_positive = int(positive.sum())
    n_negative = labels.size - n_positive
    if n_positive == 0 or n_negative == 0:
        raise UndefinedAUCError(f"AUC needs both classes, got {n_positive} positives and {n_negative} negatives")

    ranks = rankdata(scores)
    u = ranks[positive].sum() - n_positive * (n_positive + 1) / 2.0
    return float(u / (n_positive * n_negative))


def safe_auc(scores: Sequence[float], labels: Sequence[int]) -> float:
    """
    Same as auc() but NaN when only one class is present.
    """
    try:
        return auc(scores, labels)
    except UndefinedAUCError:
        return float("nan")


def _rate(numerator: int, denominator: int) -> float:
    return numerator / denominator if denominator > 0 else float("nan")


####################################################################
# Class: CompletionScore                                         ###
####################################################################
class CompletionScore(object):
    """
    Scores over the masked entries of an adjacency matrix, with each unordered pair counted once.
    """

    def __init__(self, auc_value: float, counts: Dict[Text, int], contrast: np.ndarray, threshold: float,
                 match: Optional[MatchResult] = None) -> None:
        self.auc: float = auc_value
        self.counts: Dict[Text, int] = counts
        self.contrast: np.ndarray = contrast
        self.threshold: float = threshold
        self.match: Optional[MatchResult] = match

    @property
    def masked_count(self) -> int:
        return sum(self.counts.values())

    @property
    def accuracy(self) -> float:
        return _rate(self.counts[ContrastValues.TRUE_POSITIVE] + self.counts[ContrastValues.TRUE_NEGATIVE],
                     self.masked_count)

    @property
    def tpr(self) -> float:
        tp, fn = self.counts[ContrastValues.TRUE_POSITIVE], self.counts[ContrastValues.FALSE_NEGATIVE]
        return _rate(tp, tp + fn)

    @property
    def fpr(self) -> float:
        fp, tn = self.counts[ContrastValues.FALSE_POSITIVE], self.counts[ContrastValues.TRUE_NEGATIVE]
        return _rate(fp, fp + tn)

    def write_contrast_csv(self, path: Text) -> Text:
        with open(path, "w", encoding="utf-8", newline="") as f:
            csv.writer(f, lineterminator="\n").writerows(self.contrast.tolist())
        return path


def score_completion(truth: np.ndarray, probabilities: np.ndarray, mask: np.ndarray,
                     match: Optional[MatchResult] = None, threshold: float = DEFAULT_THRESHOLD_) -> CompletionScore:
    """
    Scores inferred connection probabilities against the truth on the masked region.

    :param truth: The n x n ground-truth adjacency, canonical order.
    :param probabilities: The n x n inferred probabilities, canonical order.
    :param mask: The n x n boolean region to score; only its upper triangle is used.
    :param match: When given, the hidden block of the probabilities is reordered by it first.
    :param threshold: Probabilities at or above it count as predicted links.
    :raises ShapeError: If the matrices differ in shape.
    :raises ContractError: If the mask selects no pair.
    :return: AUC (NaN when the region holds a single class), confusion counts and the contrast matrix.
    """
    truth = np.asarray(truth, dtype=np.float64)
    probabilities = np.asarray(probabilities, dtype=np.float64)
    mask = np.asarray(mask, dtype=bool)
    if truth.shape != probabilities.shape or truth.shape != mask.shape:
        raise ShapeError(f"Truth {truth.shape}, probabilities {probabilities.shape} and mask {mask.shape} differ")
    if match is not None:
        probabilities = apply_match(probabilities, match, truth.shape[0] - match.n_hidden)

    upper = np.triu(mask, k=1)
    if not upper.any():
        raise ContractError("The scoring mask selects no adjacency pair")

    labels = truth[upper] > 0.5
    predicted = probabilities[upper] >= threshold
    outcome = np.where(labels, np.where(predicted, ContrastValues.TRUE_POSITIVE, ContrastValues.FALSE_NEGATIVE),
                       np.where(predicted, ContrastValues.FALSE_POSITIVE, ContrastValues.TRUE_NEGATIVE))

    contrast = np.full(truth.shape, ContrastValues.KNOWN, dtype=object)
    rows, cols = np.nonzero(upper)
    contrast[rows, cols] = outcome
    contrast[cols, rows] = outcome

    counts = {label: int(np.sum(outcome == label)) for label in (ContrastValues.TRUE_POSITIVE,
                                                                ContrastValues.TRUE_NEGATIVE,
                                                                ContrastValues.FALSE_POSITIVE,
                                                                ContrastValues.FALSE_NEGATIVE)}
    return CompletionScore(safe_auc(probabilities[upper], labels.astype(int)), counts, contrast, threshold, match)


def score_states(pred: np.ndarray, truth: np.ndarray, dynamics: Union[Dynamics, Text]) -> float:
    """
    Scores predicted states: the fraction of matching opinions for binary states, the mean squared error for
    continuous states.

    :param dynamics: A Dynamics object or its kind.
    :raises ShapeError: If the shapes differ.
    """
    pred, truth = np.asarray(pred, dtype=np.float64), np.asarray(truth, dtype=np.float64)
    if pred.shape != truth.shape:
        raise ShapeError(f"Prediction shape {pred.shape} does not match truth shape {truth.shape}")
    kind = dynamics.kind if isinstance(dynamics, Dynamics) else dynamics
    if kind == DynamicsValues.BINARY:
        return float(np.mean(np.argmax(pred, axis=-1) == np.argmax(truth, axis=-1)))
    return float(np.mean((pred - truth) ** 2))
