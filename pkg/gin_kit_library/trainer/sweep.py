####################################################################
# ### sweep.py                                                   ###
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
import os
import time

from multiprocessing import Pool
from typing import Any, Dict, List, Optional, Sequence, Text

import numpy as np

from gin_kit_library.dynsim.dataset import TrajectoryDataset, mask_hidden
from gin_kit_library.errors import ConfigurationError, ParameterError
from gin_kit_library.logging import GinKitLogger, null_logger
from gin_kit_library.metrics.evaluation import evaluate_parameters
from gin_kit_library.netcore.graph import Graph, partition_nodes
from gin_kit_library.trainer.config import TaskValues, TrainConfig
from gin_kit_library.trainer.gin_trainer import train

THREADS_ENV_VAR_ = "GIN_THREADS"
SWEEP_HEADER_ = ["fraction", "n_hidden", "unobs_auc", "unobs_acc", "whole_auc", "obs_state_score", "seconds"]


####################################################################
# Class: SweepRow                                                ###
####################################################################
class SweepRow(object):
    """
    Scores of one completion run at a given hidden fraction.
    """

    def __init__(self, fraction: float, n_hidden: int, unobs_auc: float, unobs_acc: float, whole_auc: float,
                 obs_state_score: float, seconds: float) -> None:
        self.fraction: float = fraction
        self.n_hidden: int = n_hidden
        self.unobs_auc: float = unobs_auc
        self.unobs_acc: float = unobs_acc
        self.whole_auc: float = whole_auc
        self.obs_state_score: float = obs_state_score
        self.seconds: float = seconds

    def values(self) -> List:
        return [self.fraction, self.n_hidden, self.unobs_auc, self.unobs_acc, self.whole_auc, self.obs_state_score,
                self.seconds]


def worker_count(jobs: int) -> int:
    """
    Returns how many worker processes to use for a number of jobs, capped by GIN_THREADS when it is set.

    :raises ConfigurationError: If GIN_THREADS is not a positive integer.
    """
    cap = os.cpu_count() or 1
    value = os.environ.get(THREADS_ENV_VAR_)
    if value:
        try:
            cap = int(value)
        except ValueError:
            raise ConfigurationError(f"{THREADS_ENV_VAR_} must be an integer, got '{value}'")
        if cap < 1:
            raise ConfigurationError(f"{THREADS_ENV_VAR_} must be at least 1, got {cap}")
    return max(1, min(cap, jobs))


def hidden_count(n: int, fraction: float) -> int:
    """
    Turns a hidden fraction into a node count, keeping at least one hidden and one observed node.

    :raises ParameterError: If the fraction is not strictly between 0 and 1.
    """
    if not 0.0 < fraction < 1.0:
        raise ParameterError(f"Hidden fractions must lie strictly between 0 and 1, got {fraction}")
    return int(min(n - 1, max(1, round(fraction * n))))


def _run_fraction(config: Dict[Text, Any], graph: Graph, train_set: TrajectoryDataset,
                  test_set: Optional[TrajectoryDataset], fraction: float, seed: Optional[int],
                  match_settings: Optional[Dict[Text, Any]]) -> SweepRow:
    started = time.perf_counter()
    train_config = TrainConfig.from_dict(config)
    partition = partition_nodes(graph, hidden_count(graph.n, fraction), seed)
    known_block = partition.to_canonical(graph.adjacency.astype(np.float64))[:partition.n_observed,
                                                                              :partition.n_observed]

    train_view = mask_hidden(train_set, partition)
    test_view = mask_hidden(test_set, partition) if test_set is not None else None
    params, _ = train(train_config, train_view, partition, known_block)
    report = evaluate_parameters(params, graph, test_view=test_view, match_settings=match_settings)
    return SweepRow(fraction, partition.n_hidden, report.unobs_auc, report.unobs_acc, report.whole_auc,
                    report.obs_state_score, time.perf_counter() - started)


def missing_fraction_sweep(config: TrainConfig, graph: Graph, train_set: TrajectoryDataset,
                           fractions: Sequence[float], test_set: Optional[TrajectoryDataset] = None,
                           seed: Optional[int] = None, match_settings: Optional[Dict[Text, Any]] = None,
                           logger: Optional[GinKitLogger] = None) -> List[SweepRow]:
    """
    Trains and evaluates one partial-structure completion per hidden fraction. Every run uses the same base seed, so
    the runs differ only in how many nodes are hidden. Runs fan out over worker processes.

    :param config: Training settings; the task is forced to complete-partial.
    :param graph: The ground-truth network.
    :param train_set: Training windows over all nodes.
    :param fractions: Hidden fractions, each strictly between 0 and 1.
    :param test_set: Held-out windows for the observed-state score.
    :param seed: Base seed for the partitions.
    :param match_settings: Keyword arguments for the matcher.
    :param logger: Receives one record per finished fraction.
    :raises ParameterError: If a fraction is out of range or none is given.
    :return: One row per fraction, in the given order.
    """
    logger = logger if logger is not None else null_logger()
    if not fractions:
        raise ParameterError("A sweep needs at least one fraction")
    for fraction in fractions:
        hidden_count(graph.n, fraction)

    settings = config.replace(task=TaskValues.COMPLETE_PARTIAL).as_dict()
    jobs = [(settings, graph, train_set, test_set, float(fraction), seed, match_settings) for fraction in fractions]
    processes = worker_count(len(jobs))
    logger.log_fields("sweep_start", fractions=len(jobs), processes=processes)

    rows: List[SweepRow] = list()
    if processes == 1:
        for job in jobs:
            rows.append(_run_fraction(*job))
            _log_row(logger, rows[-1])
        return rows

    with Pool(processes=processes) as pool:
        pending = [pool.apply_async(_run_fraction, args=job) for job in jobs]
        for process in pending:
            rows.append(process.get())
            _log_row(logger, rows[-1])
    return rows


def _log_row(logger: GinKitLogger, row: SweepRow) -> None:
    logger.log_fields("sweep_fraction", fraction=row.fraction, n_hidden=row.n_hidden, unobs_auc=row.unobs_auc,
                      seconds=row.seconds)


def auc_slope(rows: Sequence[SweepRow]) -> float:
    """
    Least-squares slope of unobserved AUC against hidden fraction; NaN with fewer than two finite points.
    """
    points = [(row.fraction, row.unobs_auc) for row in rows if np.isfinite(row.unobs_auc)]
    if len({fraction for fraction, _ in points}) < 2:
        return float("nan")
    x, y = np.array(points).T
    return float(np.polyfit(x, y, 1)[0])


def write_sweep_csv(rows: Sequence[SweepRow], path: Text) -> Text:
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(SWEEP_HEADER_)
        for row in rows:
            writer.writerow([repr(value) if isinstance(value, float) else value for value in row.values()])
    return path
