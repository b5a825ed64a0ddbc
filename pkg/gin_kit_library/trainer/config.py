####################################################################
# ### config.py                                                  ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
import copy

from typing import Any, Dict, Optional, Text

from gin_kit_library.errors import ConfigurationError


####################################################################
# Class: TaskValues                                              ###
####################################################################
class TaskValues(object):
    """
    The supported inference tasks.
    """
    RECONSTRUCT = "reconstruct"
    COMPLETE_PARTIAL = "complete-partial"
    COMPLETE_BLIND = "complete-blind"

    ALL = (RECONSTRUCT, COMPLETE_PARTIAL, COMPLETE_BLIND)


####################################################################
# Class: TrainConfig                                             ###
####################################################################
class TrainConfig(object):
    """
    Hyperparameters of one training run. The structural weight lambda defaults to 0.0001 for reconstruction and 0
    for the completion tasks.
    """

    DEFAULT_LR_ALPHA = 0.004
    DEFAULT_LR_GAMMA = 0.1
    DEFAULT_LR_BETA = 0.001
    DEFAULT_BATCH_SIZE = 1024
    DEFAULT_EPOCHS = 500
    DEFAULT_TAU = 1.0
    DEFAULT_RECONSTRUCT_LAMBDA = 0.0001
    # upper bound on windows * n^2 * hidden width held by one forward pass
    DEFAULT_MEMORY_BUDGET = 4_000_000
    DEFAULT_VALIDATION_EVERY = 1

    def __init__(self, task: Text = TaskValues.COMPLETE_PARTIAL, lr_alpha: float = DEFAULT_LR_ALPHA,
                 lr_gamma: float = DEFAULT_LR_GAMMA, lr_beta: float = DEFAULT_LR_BETA,
                 batch_size: int = DEFAULT_BATCH_SIZE, epochs: int = DEFAULT_EPOCHS,
                 structure_weight: Optional[float] = None, seed: Optional[int] = None, tau: float = DEFAULT_TAU,
                 tau_final: Optional[float] = None, patience: Optional[int] = None,
                 hidden_width: Optional[int] = None, hard: bool = False,
                 memory_budget: int = DEFAULT_MEMORY_BUDGET,
                 validation_every: int = DEFAULT_VALIDATION_EVERY) -> None:
        """
        Constructor for TrainConfig objects.

        :param task: One of the TaskValues.
        :param lr_alpha: Learning rate of the dynamics learner.
        :param lr_gamma: Learning rate of the hidden initial states.
        :param lr_beta: Learning rate of the edge scores.
        :param batch_size: Windows sampled per epoch.
        :param epochs: Number of epochs; one optimizer step per epoch.
        :param structure_weight: Weight lambda of the adjacency sparsity term; None picks the task default.
        :param seed: Seed for initialisation, minibatch and adjacency sampling.
        :param tau: Initial sampling temperature.
        :param tau_final: Temperature reached by linear annealing at the last epoch; None keeps tau constant.
        :param patience: Stop after this many validations without improvement; None disables early stopping.
        :param hidden_width: Hidden width of the dynamics learner; None picks 64 for binary and 32 for continuous.
        :param hard: Use straight-through hard samples during training.
        :param memory_budget: Bound on windows * n^2 * hidden width per forward chunk.
        :param validation_every: Validate every this many epochs.
        :raises ConfigurationError: If a value is out of range.
        """
        self.task: Text = task
        self.lr_alpha: float = float(lr_alpha)
        self.lr_gamma: float = float(lr_gamma)
        self.lr_beta: float = float(lr_beta)
        self.batch_size: int = int(batch_size)
        self.epochs: int = int(epochs)
        self.structure_weight: Optional[float] = None if structure_weight is None else float(structure_weight)
        self.seed: Optional[int] = None if seed is None else int(seed)
        self.tau: float = float(tau)
        self.tau_final: Optional[float] = None if tau_final is None else float(tau_final)
        self.patience: Optional[int] = None if patience is None else int(patience)
        self.hidden_width: Optional[int] = None if hidden_width is None else int(hidden_width)
        self.hard: bool = bool(hard)
        self.memory_budget: int = int(memory_budget)
        self.validation_every: int = int(validation_every)
        self.validate()

    def validate(self) -> None:
        if self.task not in TaskValues.ALL:
            raise ConfigurationError(f"Unknown task '{self.task}'; expected one of {', '.join(TaskValues.ALL)}")
        for name in ("lr_alpha", "lr_gamma", "lr_beta"):
            if getattr(self, name) <= 0:
                raise ConfigurationError(f"{name} must be positive, got {getattr(self, name)}")
        if self.structure_weight is not None and self.structure_weight < 0:
            raise ConfigurationError(f"structure_weight must be non-negative, got {self.structure_weight}")
        if self.batch_size < 1 or self.epochs < 1:
            raise ConfigurationError("batch_size and epochs must be at least 1")
        if self.tau <= 0 or (self.tau_final is not None and self.tau_final <= 0):
            raise ConfigurationError("Temperatures must be positive")
        if self.patience is not None and self.patience < 1:
            raise ConfigurationError(f"patience must be at least 1, got {self.patience}")
        if self.hidden_width is not None and self.hidden_width < 1:
            raise ConfigurationError(f"hidden_width must be at least 1, got {self.hidden_width}")
        if self.memory_budget < 1 or self.validation_every < 1:
            raise ConfigurationError("memory_budget and validation_every must be at least 1")

    @property
    def effective_structure_weight(self) -> float:
        if self.structure_weight is not None:
            return self.structure_weight
        return self.DEFAULT_RECONSTRUCT_LAMBDA if self.task == TaskValues.RECONSTRUCT else 0.0

    def tau_at(self, epoch: int) -> float:
        """
        Returns the temperature of a 1-based epoch under linear annealing.
        """
        if self.tau_final is None or self.epochs == 1:
            return self.tau
        progress = (epoch - 1) / (self.epochs - 1)
        return self.tau + (self.tau_final - self.tau) * progress

    def replace(self, **changes: Any) -> "TrainConfig":
        """
        Returns a copy with some fields changed.
        """
        data = self.as_dict()
        data.update(changes)
        return TrainConfig.from_dict(data)

    def as_dict(self) -> Dict[Text, Any]:
        return copy.deepcopy({
            "task": self.task,
            "lr_alpha": self.lr_alpha,
            "lr_gamma": self.lr_gamma,
            "lr_beta": self.lr_beta,
            "batch_size": self.batch_size,
            "epochs": self.epochs,
            "structure_weight": self.structure_weight,
            "seed": self.seed,
            "tau": self.tau,
            "tau_final": self.tau_final,
            "patience": self.patience,
            "hidden_width": self.hidden_width,
            "hard": self.hard,
            "memory_budget": self.memory_budget,
            "validation_every": self.validation_every,
        })

    @staticmethod
    def from_dict(data: Dict[Text, Any]) -> "TrainConfig":
        known = TrainConfig().as_dict()
        unknown = sorted(set(data) - set(known))
        if unknown:
            raise ConfigurationError(f"Unknown training settings: {', '.join(unknown)}")
        return TrainConfig(**data)

    def __eq__(self, other) -> bool:
        return isinstance(other, TrainConfig) and self.as_dict() == other.as_dict()

    def __repr__(self) -> Text:
        return f"TrainConfig({self.as_dict()})"
