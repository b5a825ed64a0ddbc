####################################################################
# ### gin_trainer.py                                             ###
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
import math
import time

from typing import Iterator, List, Optional, Sequence, Text, Tuple

import numpy as np

from gin_kit_library.diffengine import ops
from gin_kit_library.diffengine.optim import Adam
from gin_kit_library.diffengine.variable import Variable, backward
from gin_kit_library.dynsim.dataset import ObservedView, mask_hidden
from gin_kit_library.errors import ConfigurationError, NumericalError
from gin_kit_library.gin_model.network_generator import adjacency_from_noise, logistic_noise, threshold_adjacency
from gin_kit_library.gin_model.parameters import GinParameters, ParameterGroups
from gin_kit_library.logging import GinKitLogger, null_logger
from gin_kit_library.lrp_indicator import ProgressIndicator
from gin_kit_library.netcore.graph import NodePartition
from gin_kit_library.trainer.config import TaskValues, TrainConfig
from gin_kit_library.trainer.loss import state_loss, structure_penalty

TRAIN_LOG_HEADER_ = ["epoch", "train_loss", "val_loss", "seconds"]


####################################################################
# Class: TrainRecord                                             ###
####################################################################
class TrainRecord(object):
    """
    One epoch of a training run. val_loss is NaN for epochs without validation.
    """

    def __init__(self, epoch: int, train_loss: float, val_loss: float, seconds: float, tau: float) -> None:
        self.epoch: int = epoch
        self.train_loss: float = train_loss
        self.val_loss: float = val_loss
        self.seconds: float = seconds
        self.tau: float = tau


####################################################################
# Class: TrainLog                                                ###
####################################################################
class TrainLog(object):
    """
    Per-epoch losses of a training run, with strictly increasing epochs.
    """

    def __init__(self) -> None:
        self.records: List[TrainRecord] = []

    def append(self, record: TrainRecord) -> None:
        if self.records and record.epoch <= self.records[-1].epoch:
            raise ConfigurationError(f"Epoch {record.epoch} does not follow epoch {self.records[-1].epoch}")
        self.records.append(record)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[TrainRecord]:
        return iter(self.records)

    def train_losses(self) -> np.ndarray:
        return np.array([record.train_loss for record in self.records])

    def val_losses(self) -> np.ndarray:
        return np.array([record.val_loss for record in self.records])

    def last_val_loss(self) -> float:
        """
        Returns the most recent finite validation loss, or NaN.
        """
        for record in reversed(self.records):
            if not math.isnan(record.val_loss):
                return record.val_loss
        return float("nan")

    def write_csv(self, path: Text) -> Text:
        with open(path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(TRAIN_LOG_HEADER_)
            for record in self.records:
                writer.writerow([record.epoch, repr(record.train_loss), repr(record.val_loss),
                                 f"{record.seconds:.6f}"])
        return path

    @staticmethod
    def read_csv(path: Text) -> "TrainLog":
        log = TrainLog()
        with open(path, "r", encoding="utf-8", newline="") as f:
            for row in csv.DictReader(f):
                log.append(TrainRecord(int(row["epoch"]), float(row["train_loss"]), float(row["val_loss"]),
                                       float(row["seconds"]), float("nan")))
        return log


####################################################################
# Class: BlindResult                                             ###
####################################################################
class BlindResult(object):
    """
    Outcome of blind completion: the stage-one reconstruction over observed nodes and the stage-two completion that
    took the thresholded reconstruction as its known block.
    """

    def __init__(self, params: GinParameters, log: TrainLog, reconstruction: Optional[GinParameters] = None,
                 reconstruction_log: Optional[TrainLog] = None) -> None:
        self.params: GinParameters = params
        self.log: TrainLog = log
        self.reconstruction: Optional[GinParameters] = reconstruction
        self.reconstruction_log: Optional[TrainLog] = reconstruction_log

    def combined_probabilities(self) -> np.ndarray:
        """
        Returns canonical-order probabilities: stage-one probabilities on the observed block and stage-two
        probabilities on every pair touching a hidden node.
        """
        combined = self.params.edge_probabilities().copy()
        if self.reconstruction is not None:
            n_observed = self.params.n_observed
            combined[:n_observed, :n_observed] = self.reconstruction.edge_probabilities()
        return combined


def chunk_size_for(n: int, hidden_width: int, memory_budget: int) -> int:
    """
    Returns how many windows fit in one forward pass without the pair tensors exceeding the memory budget.
    """
    return max(1, memory_budget // max(1, n * n * hidden_width))


def _chunks(indices: np.ndarray, size: int) -> Iterator[np.ndarray]:
    for start in range(0, len(indices), size):
        yield indices[start:start + size]


def check_task(config: TrainConfig, partition: NodePartition, known_block: Optional[np.ndarray], t: int) -> None:
    """
    Checks that the task, the partition and the structural input agree.

    :raises ConfigurationError: On any inconsistency.
    """
    if t != 2:
        raise ConfigurationError(f"Training uses one-step windows (t=2), got t={t}")
    if config.task == TaskValues.RECONSTRUCT:
        if partition.n_hidden != 0:
            raise ConfigurationError(f"Task '{config.task}' needs a partition without hidden nodes, got "
                                     f"{partition.n_hidden} hidden")
        if known_block is not None:
            raise ConfigurationError(f"Task '{config.task}' takes no known structure")
    elif config.task == TaskValues.COMPLETE_PARTIAL:
        if partition.n_hidden == 0:
            raise ConfigurationError(f"Task '{config.task}' needs at least one hidden node")
        if known_block is None:
            raise ConfigurationError(f"Task '{config.task}' needs the known adjacency of the observed nodes")
        if np.shape(known_block) != (partition.n_observed, partition.n_observed):
            raise ConfigurationError(f"Known block has shape {np.shape(known_block)}, expected "
                                     f"{(partition.n_observed, partition.n_observed)}")
    else:
        raise ConfigurationError(f"Task '{config.task}' runs through complete_blind()")


def _validation_loss(params: GinParameters, view: ObservedView, chunk: int) -> float:
    adjacency = params.edge_probabilities()
    windows = view.windows
    n_observed = params.n_observed
    total = 0.0
    for indices in _chunks(np.arange(len(view)), chunk):
        pred = params.predict(adjacency, windows[indices, 0])
        observed_pred = ops.getitem(pred, (slice(None), slice(0, n_observed)))
        total += float(state_loss(observed_pred, windows[indices, 1], params.dynamics.kind).value) * len(indices)
    return total / max(1, len(view))


def minibatch_objective(params: GinParameters, noise: np.ndarray, inputs: np.ndarray, targets: np.ndarray,
                        indices: Optional[Sequence[int]] = None, tau: Optional[float] = None, hard: bool = False,
                        weight: float = 0.0, scale: float = 1.0) -> Variable:
    """
    Builds the training objective of a group of windows, each predicted under its own adjacency sample: the state
    loss on observed nodes plus the structure penalty averaged over the samples, times scale.

    :param params: The model.
    :param noise: Logistic noise, one row of edge-score noise per window, shape (B, inferred pairs).
    :param inputs: Observed states at step 0, shape (B, N_o, d).
    :param targets: Observed states at step 1, shape (B, N_o, d).
    :param indices: Training-window indices of the rows, selecting the hidden initial states.
    :param tau: Sampling temperature; defaults to the edge scores' temperature.
    :param hard: Use straight-through hard samples.
    :param weight: Structure penalty weight lambda.
    :param scale: Factor applied to the whole objective, the group's share of the minibatch.
    :return: The scalar objective.
    """
    soft = adjacency_from_noise(params.edge_scores, noise, hard=hard, tau=tau)
    pred = params.predict(soft, inputs, indices)
    observed_pred = ops.getitem(pred, (slice(None), slice(0, params.n_observed)))
    objective = state_loss(observed_pred, targets, params.dynamics.kind) + structure_penalty(soft, weight)
    return objective * scale


def train(config: TrainConfig, view: ObservedView, partition: NodePartition,
          known_block: Optional[np.ndarray] = None, validation: Optional[ObservedView] = None,
          logger: Optional[GinKitLogger] = None,
          progress: Optional[ProgressIndicator] = None) -> Tuple[GinParameters, TrainLog]:
    """
    Trains edge scores, hidden initial states and the dynamics learner jointly.

    Every epoch draws a minibatch of training windows and one independent adjacency sample per window, predicts
    step 1 of every window from the observed states at step 0 and the learned hidden states under its sample, and
    takes one Adam step per parameter group. The minibatch is evaluated in chunks that respect the memory budget;
    chunk gradients add up to the minibatch gradient, so the edge-score gradient averages over every sample.

    :param config: The training settings; task must be reconstruct or complete-partial.
    :param view: The observed training windows.
    :param partition: The node partition the view was masked with.
    :param known_block: The known adjacency among observed nodes, in canonical order (complete-partial only).
    :param validation: Observed validation windows; hidden nodes take the neutral initial state.
    :param logger: Receives one record per epoch.
    :param progress: Receives a status update per epoch.
    :raises ConfigurationError: If the task, partition and known structure disagree.
    :raises NumericalError: If the loss stops being finite.
    :return: The trained parameters and the training log.
    """
    check_task(config, partition, known_block, view.t)
    logger = logger if logger is not None else null_logger()

    params = GinParameters.create(partition, view.dynamics, windows=len(view), known_block=known_block,
                                  hidden_width=config.hidden_width, tau=config.tau, task=config.task,
                                  seed=config.seed)
    rng = np.random.default_rng(np.random.SeedSequence(config.seed).spawn(1)[0])

    optimizer = Adam()
    rates = {ParameterGroups.ALPHA: config.lr_alpha, ParameterGroups.BETA: config.lr_beta,
             ParameterGroups.GAMMA: config.lr_gamma}
    for name, group in params.parameter_groups().items():
        optimizer.add_group(name, group, rates[name])

    n = params.n
    weight = config.effective_structure_weight
    chunk = chunk_size_for(n, params.learner.hidden_width, config.memory_budget)
    batch_size = min(config.batch_size, len(view))
    inputs, targets = view.windows[:, 0], view.windows[:, 1]
    logger.log_fields("train_start", task=config.task, n=n, n_hidden=params.n_hidden, windows=len(view),
                      batch=batch_size, chunk=chunk, epochs=config.epochs, structure_weight=weight)

    log = TrainLog()
    best_val = float("inf")
    stale = 0
    for epoch in range(1, config.epochs + 1):
        started = time.perf_counter()
        tau = config.tau_at(epoch)
        batch = np.sort(rng.choice(len(view), size=batch_size, replace=False))
        noise = logistic_noise(rng, (batch_size, params.edge_scores.size))

        train_loss = 0.0
        for start in range(0, batch_size, chunk):
            indices = batch[start:start + chunk]
            chunk_loss = minibatch_objective(params, noise[start:start + chunk], inputs[indices], targets[indices],
                                             indices, tau=tau, hard=config.hard, weight=weight,
                                             scale=len(indices) / batch_size)
            backward(chunk_loss)
            train_loss += float(chunk_loss.value)

        if not math.isfinite(train_loss):
            raise NumericalError(f"Training loss became {train_loss} at epoch {epoch}")
        optimizer.step()

        val_loss = float("nan")
        if validation is not None and len(validation) > 0 and (
                epoch % config.validation_every == 0 or epoch == config.epochs):
            val_loss = _validation_loss(params, validation, chunk)

        seconds = time.perf_counter() - started
        log.append(TrainRecord(epoch, train_loss, val_loss, seconds, tau))
        logger.log_fields("epoch", epoch=epoch, train_loss=train_loss, val_loss=val_loss, seconds=seconds, tau=tau)
        if progress is not None:
            progress.update(f"epoch {epoch}/{config.epochs} loss {train_loss:.4g}")

        if config.patience is not None and not math.isnan(val_loss):
            if val_loss < best_val:
                best_val, stale = val_loss, 0
            else:
                stale += 1
                if stale >= config.patience:
                    logger.log_fields("early_stop", epoch=epoch, best_val_loss=best_val)
                    break

    return params, log


def complete_blind(config: TrainConfig, view: ObservedView, partition: NodePartition,
                   validation: Optional[ObservedView] = None, logger: Optional[GinKitLogger] = None,
                   progress: Optional[ProgressIndicator] = None) -> BlindResult:
    """
    Completes a network without structural input: first reconstructs the links among observed nodes from their
    time series, then thresholds that reconstruction at 0.5 and uses it as the known block of a partial completion.
    Without hidden nodes this is a plain reconstruction.

    :return: The stage-two parameters and log plus the stage-one reconstruction.
    """
    logger = logger if logger is not None else null_logger()
    if partition.n_hidden == 0:
        params, log = train(config.replace(task=TaskValues.RECONSTRUCT), view, partition, None, validation,
                            logger, progress)
        return BlindResult(params, log)

    observed_partition = NodePartition(partition.n_observed, [])
    stage_one_view = mask_hidden(view.observed_dataset(), observed_partition)
    stage_one_validation = None
    if validation is not None:
        stage_one_validation = mask_hidden(validation.observed_dataset(), observed_partition)

    logger.log_fields("blind_stage", stage=1, nodes=partition.n_observed)
    stage_one_config = config.replace(task=TaskValues.RECONSTRUCT)
    reconstruction, reconstruction_log = train(stage_one_config, stage_one_view, observed_partition, None,
                                               stage_one_validation, logger, progress)

    known_block = threshold_adjacency(reconstruction.edge_probabilities()).astype(np.float64)
    logger.log_fields("blind_stage", stage=2, known_links=int(known_block.sum() // 2))
    stage_two_config = config.replace(task=TaskValues.COMPLETE_PARTIAL)
    params, log = train(stage_two_config, view, partition, known_block, validation, logger, progress)
    params.task = TaskValues.COMPLETE_BLIND
    return BlindResult(params, log, reconstruction, reconstruction_log)


def run_task(config: TrainConfig, view: ObservedView, partition: NodePartition,
             known_block: Optional[np.ndarray] = None, validation: Optional[ObservedView] = None,
             logger: Optional[GinKitLogger] = None, progress: Optional[ProgressIndicator] = None) -> BlindResult:
    """
    Dispatches a configured task to train() or complete_blind() and wraps the outcome uniformly.
    """
    if config.task == TaskValues.COMPLETE_BLIND:
        return complete_blind(config, view, partition, validation, logger, progress)
    params, log = train(config, view, partition, known_block, validation, logger, progress)
    return BlindResult(params, log)


def median_loss(log: TrainLog, epochs: Sequence[int]) -> float:
    """
    Returns the median training loss over the given 1-based epochs present in the log.
    """
    wanted = set(epochs)
    values = [record.train_loss for record in log if record.epoch in wanted]
    return float(np.median(values)) if values else float("nan")
