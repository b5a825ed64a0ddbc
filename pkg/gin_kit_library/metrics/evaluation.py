####################################################################
# ### evaluation.py                                              ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
import json
import math

from typing import Any, Dict, List, Optional, Text

import numpy as np

from gin_kit_library.diffengine import ops
from gin_kit_library.dynsim.dataset import ObservedView
from gin_kit_library.dynsim.dynamics import DynamicsValues
from gin_kit_library.gin_model.network_generator import threshold_adjacency
from gin_kit_library.gin_model.parameters import GinParameters
from gin_kit_library.jinja2.gin_jinja2 import Jinja2TemplateRenderer
from gin_kit_library.logging import GinKitLogger, null_logger
from gin_kit_library.metrics.scores import DEFAULT_THRESHOLD_, CompletionScore, safe_auc, score_completion, \
    score_states
from gin_kit_library.metrics.structure import StructureComparison, compare_structure
from gin_kit_library.netcore.graph import Graph, NodePartition, unobserved_mask
from gin_kit_library.sgm.matching import MatchProblem, MatchResult, apply_match, apply_match_rows, match
from gin_kit_library.trainer.config import TrainConfig
from gin_kit_library.trainer.gin_trainer import chunk_size_for

EVAL_REPORT_TEMPLATE_ = "eval_report.html.j2"


####################################################################
# Class: EvalReport                                              ###
####################################################################
class EvalReport(object):
    """
    Scores of one trained model. The unobs_* scores cover the pairs with at least one hidden endpoint, or every
    pair when nothing is hidden. NaN marks a score that is undefined for the run.
    """

    class Keys(object):
        TASK = "task"
        WITH_MATCHING = "with_matching"
        THRESHOLD = "threshold"
        MASKED_COUNT = "masked_count"
        UNOBS_AUC = "unobs_auc"
        UNOBS_ACC = "unobs_acc"
        UNOBS_TPR = "unobs_tpr"
        UNOBS_FPR = "unobs_fpr"
        WHOLE_AUC = "whole_auc"
        RECONSTRUCTION_AUC = "reconstruction_auc"
        OBS_STATE_SCORE = "obs_state_score"
        OBS_STATE_METRIC = "obs_state_metric"
        HIDDEN_INIT_SCORE = "hidden_init_score"
        PERMUTATION = "permutation"
        MATCH_OBJECTIVE = "match_objective"
        COUNTS = "counts"
        STRUCTURE = "structure"

    FLOAT_FIELDS = (Keys.THRESHOLD, Keys.UNOBS_AUC, Keys.UNOBS_ACC, Keys.UNOBS_TPR, Keys.UNOBS_FPR, Keys.WHOLE_AUC,
                    Keys.RECONSTRUCTION_AUC, Keys.OBS_STATE_SCORE, Keys.HIDDEN_INIT_SCORE, Keys.MATCH_OBJECTIVE)

    def __init__(self, **fields: Any) -> None:
        keys = EvalReport.Keys
        self.task: Text = fields.get(keys.TASK, "")
        self.with_matching: bool = bool(fields.get(keys.WITH_MATCHING, False))
        self.masked_count: int = int(fields.get(keys.MASKED_COUNT, 0))
        self.obs_state_metric: Text = fields.get(keys.OBS_STATE_METRIC, "")
        self.permutation: List[int] = list(fields.get(keys.PERMUTATION, []))
        self.counts: Dict[Text, int] = dict(fields.get(keys.COUNTS, {}))
        self.structure: Dict[Text, Dict[Text, float]] = dict(fields.get(keys.STRUCTURE, {}))
        for name in EvalReport.FLOAT_FIELDS:
            value = fields.get(name)
            setattr(self, name, float("nan") if value is None else float(value))

        # kept for artifact export, not serialised
        self.completion: Optional[CompletionScore] = None
        self.comparison: Optional[StructureComparison] = None

    def as_dict(self) -> Dict[Text, Any]:
        keys = EvalReport.Keys
        data: Dict[Text, Any] = {
            keys.TASK: self.task,
            keys.WITH_MATCHING: self.with_matching,
            keys.MASKED_COUNT: self.masked_count,
            keys.OBS_STATE_METRIC: self.obs_state_metric,
            keys.PERMUTATION: list(self.permutation),
            keys.COUNTS: dict(self.counts),
            keys.STRUCTURE: {name: {k: _json_float(v) for k, v in row.items()}
                             for name, row in self.structure.items()},
        }
        for name in EvalReport.FLOAT_FIELDS:
            data[name] = _json_float(getattr(self, name))
        return data

    @staticmethod
    def from_dict(data: Dict[Text, Any]) -> "EvalReport":
        report = EvalReport(**data)
        report.structure = {name: {k: float("nan") if v is None else v for k, v in row.items()}
                            for name, row in report.structure.items()}
        return report

    def write_json(self, path: Text) -> Text:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.as_dict(), f, indent=2)
        return path

    @staticmethod
    def load_json(path: Text) -> "EvalReport":
        with open(path, "r", encoding="utf-8") as f:
            return EvalReport.from_dict(json.load(f))

    def write_html(self, path: Text, renderer: Optional[Jinja2TemplateRenderer] = None) -> Text:
        renderer = renderer if renderer is not None else Jinja2TemplateRenderer()
        return renderer.as_html(EVAL_REPORT_TEMPLATE_, path, report=self.as_dict())

    def headline(self) -> Text:
        return (f"unobs AUC {self.unobs_auc:.4f}  ACC {self.unobs_acc:.4f}  TPR {self.unobs_tpr:.4f}  "
                f"FPR {self.unobs_fpr:.4f}  obs {self.obs_state_metric} {self.obs_state_score:.4g}")


def _json_float(value: float) -> Optional[float]:
    return None if value is None or math.isnan(value) else float(value)


def _upper_auc(truth: np.ndarray, probabilities: np.ndarray) -> float:
    if truth.shape[0] < 2:
        return float("nan")
    rows, cols = np.triu_indices(truth.shape[0], k=1)
    return safe_auc(probabilities[rows, cols], (truth[rows, cols] > 0.5).astype(int))


def evaluate_structure(truth: np.ndarray, probabilities: np.ndarray, partition: NodePartition,
                       with_matching: bool = True, threshold: float = DEFAULT_THRESHOLD_,
                       match_settings: Optional[Dict[Text, Any]] = None,
                       logger: Optional[GinKitLogger] = None) -> EvalReport:
    """
    Aligns the hidden block of inferred probabilities with the truth and scores the result.

    :param truth: The ground-truth adjacency in canonical order.
    :param probabilities: The inferred probabilities in canonical order.
    :param partition: The node partition.
    :param with_matching: Run seeded graph matching first; without it the hidden order is taken as is.
    :param threshold: Decision threshold for ACC, TPR and FPR.
    :param match_settings: Keyword arguments for match() (max_iters, tol, restarts, seed).
    :param logger: Receives the match summary.
    :return: The structural part of the report.
    """
    logger = logger if logger is not None else null_logger()
    truth = np.asarray(truth, dtype=np.float64)
    n_observed = partition.n_observed

    result: Optional[MatchResult] = None
    matched = probabilities
    if with_matching and partition.n_hidden > 0:
        result = match(MatchProblem(truth, probabilities, n_observed), logger=logger, **(match_settings or {}))
        matched = apply_match(probabilities, result, n_observed)
        logger.log_fields("match", objective=result.objective, iterations=result.iterations,
                          converged=result.converged)

    if partition.n_hidden > 0:
        region = partition.to_canonical(unobserved_mask(partition))
    else:
        region = ~np.eye(partition.n, dtype=bool)
    completion = score_completion(truth, matched, region, threshold=threshold)
    comparison = compare_structure(truth.astype(np.int8), threshold_adjacency(matched, threshold))

    report = EvalReport(
        with_matching=result is not None,
        threshold=threshold,
        masked_count=completion.masked_count,
        unobs_auc=completion.auc,
        unobs_acc=completion.accuracy,
        unobs_tpr=completion.tpr,
        unobs_fpr=completion.fpr,
        whole_auc=_upper_auc(truth, matched),
        reconstruction_auc=_upper_auc(truth[:n_observed, :n_observed], matched[:n_observed, :n_observed]),
        permutation=result.permutation.tolist() if result is not None else list(range(partition.n_hidden)),
        match_objective=result.objective if result is not None else None,
        counts=completion.counts,
        structure={name: {"truth": t, "inferred": i, "delta": d} for name, t, i, d in comparison.rows()},
    )
    report.completion = completion
    report.comparison = comparison
    return report


def observed_state_score(params: GinParameters, view: ObservedView,
                         memory_budget: int = TrainConfig.DEFAULT_MEMORY_BUDGET) -> float:
    """
    Predicts step 1 of every window from its observed step 0, with hidden nodes in the neutral state and the
    expected adjacency, and scores the observed rows.
    """
    adjacency = params.edge_probabilities()
    chunk = chunk_size_for(params.n, params.learner.hidden_width, memory_budget)
    windows = view.windows
    predictions = []
    for start in range(0, len(view), chunk):
        pred = params.predict(adjacency, windows[start:start + chunk, 0])
        predictions.append(ops.getitem(pred, (slice(None), slice(0, params.n_observed))).value)
    return score_states(np.concatenate(predictions, axis=0), windows[:, 1], params.dynamics)


def hidden_init_score(params: GinParameters, view: ObservedView, result: Optional[MatchResult] = None) -> float:
    """
    Scores the learned hidden initial states against the true step-0 states of hidden nodes in the training
    windows, after reordering hidden nodes by the match.
    """
    if params.n_hidden == 0:
        return float("nan")
    learned = params.hidden_initial_states()
    truth = view.evaluation_hidden_states()[:, 0]
    if learned.shape != truth.shape:
        return float("nan")
    if result is not None:
        learned = apply_match_rows(learned, result, axis=1)
    return score_states(learned, truth, params.dynamics)


def evaluate_parameters(params: GinParameters, truth: Graph, test_view: Optional[ObservedView] = None,
                        train_view: Optional[ObservedView] = None, with_matching: bool = True,
                        threshold: float = DEFAULT_THRESHOLD_, probabilities: Optional[np.ndarray] = None,
                        match_settings: Optional[Dict[Text, Any]] = None,
                        logger: Optional[GinKitLogger] = None) -> EvalReport:
    """
    The full match-then-score chain for a trained model.

    :param params: The trained parameters.
    :param truth: The ground-truth network, original node ids.
    :param test_view: Held-out windows for the observed-state score.
    :param train_view: The training windows, for the hidden initial-state score.
    :param with_matching: Align hidden nodes before scoring.
    :param threshold: Decision threshold.
    :param probabilities: Canonical probabilities to score instead of the model's own, such as a blind
                          completion's combined matrix.
    :param match_settings: Keyword arguments for match().
    :param logger: Receives the evaluation summary.
    """
    logger = logger if logger is not None else null_logger()
    partition = params.partition
    canonical_truth = partition.to_canonical(truth.adjacency.astype(np.float64))
    inferred = params.edge_probabilities() if probabilities is None else np.asarray(probabilities)

    report = evaluate_structure(canonical_truth, inferred, partition, with_matching, threshold, match_settings,
                                logger)
    report.task = params.task
    report.obs_state_metric = "accuracy" if params.dynamics.kind == DynamicsValues.BINARY else "mse"
    if test_view is not None and len(test_view) > 0:
        report.obs_state_score = observed_state_score(params, test_view)
    if train_view is not None:
        result = None
        if report.with_matching:
            result = MatchResult(report.permutation, report.match_objective, 0, True)
        report.hidden_init_score = hidden_init_score(params, train_view, result)

    logger.log_fields("evaluation", task=report.task, unobs_auc=report.unobs_auc, unobs_acc=report.unobs_acc,
                      whole_auc=report.whole_auc, obs_state_score=report.obs_state_score,
                      hidden_init_score=report.hidden_init_score)
    return report
