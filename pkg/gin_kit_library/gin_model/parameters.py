####################################################################
# ### parameters.py                                              ###
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
import os

from typing import Dict, List, Optional, Sequence, Text

import numpy as np

from gin_kit_library.diffengine import ops
from gin_kit_library.diffengine.checkpoint import load_checkpoint, save_checkpoint
from gin_kit_library.diffengine.variable import Parameter, Variable
from gin_kit_library.dynsim.dynamics import Dynamics, DynamicsValues
from gin_kit_library.errors import ShapeError, StageError
from gin_kit_library.gin_model.dynamics_learner import DynamicsLearner, predict_step
from gin_kit_library.gin_model.init_states import HiddenInitStates, InitActivationValues, \
    generate_hidden_init_batch
from gin_kit_library.gin_model.network_generator import EdgeScores
from gin_kit_library.netcore.graph import NodePartition

CHECKPOINT_FILE_ = "checkpoint.npz"
MODEL_MANIFEST_FILE_ = "model_manifest.json"

_KNOWN_BLOCK_KEY_ = "known_block"


class ParameterGroups(object):
    """
    Names of the three trainable parameter groups.
    """
    ALPHA = "alpha"
    BETA = "beta"
    GAMMA = "gamma"


class ModelManifestKeys(object):
    N = "n"
    N_HIDDEN = "n_hidden"
    HIDDEN = "hidden"
    D = "d"
    HIDDEN_WIDTH = "hidden_width"
    TAU = "tau"
    DYNAMICS = "dynamics"
    TASK = "task"
    WINDOWS = "windows"
    SEED = "seed"


####################################################################
# Class: GinParameters                                           ###
####################################################################
class GinParameters(object):
    """
    Everything a trained model consists of: the dynamics learner (alpha), the edge scores (beta) and the hidden
    initial states (gamma), together with the node partition and dynamics they were trained for. All matrices are
    in canonical node order.
    """

    def __init__(self, partition: NodePartition, dynamics: Dynamics, learner: DynamicsLearner,
                 edge_scores: EdgeScores, init_states: Optional[HiddenInitStates], task: Text = "",
                 seed: Optional[int] = None) -> None:
        if edge_scores.n != partition.n:
            raise ShapeError(f"Edge scores cover {edge_scores.n} nodes but the partition has {partition.n}")
        if (init_states is None) != (partition.n_hidden == 0):
            raise ShapeError("Hidden initial states must exist exactly when the partition has hidden nodes")

        self.partition: NodePartition = partition
        self.dynamics: Dynamics = dynamics
        self.learner: DynamicsLearner = learner
        self.edge_scores: EdgeScores = edge_scores
        self.init_states: Optional[HiddenInitStates] = init_states
        self.task: Text = task
        self.seed: Optional[int] = seed

    @staticmethod
    def create(partition: NodePartition, dynamics: Dynamics, windows: int, known_block: Optional[np.ndarray] = None,
               hidden_width: Optional[int] = None, tau: float = EdgeScores.DEFAULT_TAU, task: Text = "",
               seed: Optional[int] = None) -> "GinParameters":
        """
        Initialises a fresh model.

        :param partition: The node partition.
        :param dynamics: The dynamics the model learns.
        :param windows: The number of training windows, one gamma slice each.
        :param known_block: The known adjacency among observed nodes, or None to infer every pair.
        :param hidden_width: Hidden layer width of the dynamics learner.
        :param tau: Sampling temperature.
        :param task: Task label stored in the manifest.
        :param seed: Seed for all initialisation.
        """
        rng = np.random.default_rng(seed)
        learner = DynamicsLearner(dynamics.d, dynamics.kind, hidden_width=hidden_width, rng=rng)
        scores = EdgeScores(partition.n, known_block=known_block, tau=tau, rng=rng)
        init_states = None
        if partition.n_hidden > 0:
            activation = (InitActivationValues.SOFTMAX if dynamics.kind == DynamicsValues.BINARY
                          else InitActivationValues.SIGMOID)
            init_states = HiddenInitStates(windows, partition.n_hidden, dynamics.d, activation, rng=rng)
        return GinParameters(partition, dynamics, learner, scores, init_states, task=task, seed=seed)

    @property
    def n(self) -> int:
        return self.partition.n

    @property
    def n_observed(self) -> int:
        return self.partition.n_observed

    @property
    def n_hidden(self) -> int:
        return self.partition.n_hidden

    @property
    def tau(self) -> float:
        return self.edge_scores.tau

    def parameter_groups(self) -> Dict[Text, List[Parameter]]:
        groups = {
            ParameterGroups.ALPHA: self.learner.parameters(),
            ParameterGroups.BETA: [self.edge_scores.theta],
        }
        if self.init_states is not None:
            groups[ParameterGroups.GAMMA] = [self.init_states.gamma]
        return groups

    def edge_probabilities(self) -> np.ndarray:
        """
        Returns the n x n connection probabilities in canonical order, known entries injected.
        """
        return self.edge_scores.edge_probabilities()

    def edge_probabilities_original(self) -> np.ndarray:
        """
        Returns the connection probabilities indexed by original node ids.
        """
        return self.partition.from_canonical(self.edge_probabilities())

    def hidden_initial_states(self) -> np.ndarray:
        """
        Returns the activated hidden initial states of every training window, shape (windows, N_u, d).
        """
        if self.init_states is None:
            return np.zeros((0, 0, self.dynamics.d))
        return self.init_states.states()

    def initial_states(self, observed: np.ndarray, indices: Optional[Sequence[int]] = None) -> Variable:
        """
        Builds full initial states in canonical order: observed rows first, then hidden rows.

        :param observed: The (B, N_o, d) observed states.
        :param indices: Training-window indices whose gamma slices fill the hidden rows. When None, hidden rows take
                        the neutral activated zero state.
        :return: The (B, n, d) states.
        """
        observed = np.asarray(observed, dtype=np.float64)
        if self.init_states is None:
            return Variable(observed)
        if indices is None:
            hidden = Variable(self.init_states.neutral(observed.shape[0]))
        else:
            hidden = generate_hidden_init_batch(self.init_states, indices)
        return ops.concat([Variable(observed), hidden], axis=1)

    def predict(self, adjacency, observed: np.ndarray, indices: Optional[Sequence[int]] = None) -> Variable:
        """
        Predicts the next states of every node for a batch of windows, shape (B, n, d).
        """
        return predict_step(self.learner, adjacency, self.initial_states(observed, indices))

    def manifest(self) -> Dict:
        keys = ModelManifestKeys
        return {
            keys.N: self.n,
            keys.N_HIDDEN: self.n_hidden,
            keys.HIDDEN: self.partition.hidden,
            keys.D: self.dynamics.d,
            keys.HIDDEN_WIDTH: self.learner.hidden_width,
            keys.TAU: self.tau,
            keys.DYNAMICS: self.dynamics.as_dict(),
            keys.TASK: self.task,
            keys.WINDOWS: self.init_states.windows if self.init_states is not None else 0,
            keys.SEED: self.seed,
        }

    def arrays(self) -> Dict[Text, np.ndarray]:
        arrays = {param.name: param.value for params in self.parameter_groups().values() for param in params}
        if self.edge_scores.known_block is not None:
            arrays[_KNOWN_BLOCK_KEY_] = self.edge_scores.known_block
        return arrays

    def save(self, directory: Text, step: int = 0) -> Text:
        """
        Writes checkpoint.npz, checkpoint_manifest.json and model_manifest.json into a directory.

        :return: The checkpoint path.
        """
        path = os.path.join(directory, CHECKPOINT_FILE_)
        save_checkpoint(path, self.arrays(), seed=self.seed, step=step)
        with open(os.path.join(directory, MODEL_MANIFEST_FILE_), "w", encoding="utf-8") as f:
            json.dump(self.manifest(), f, indent=2)
        return path

    @staticmethod
    def load(directory: Text) -> "GinParameters":
        """
        Restores a model written by save().

        :raises StageError: If an artifact is missing.
        :raises ShapeError: If stored arrays do not fit the manifest.
        """
        manifest_path = os.path.join(directory, MODEL_MANIFEST_FILE_)
        if not os.path.isfile(manifest_path):
            raise StageError(manifest_path, stage="model")
        with open(manifest_path, "r", encoding="utf-8") as f:
            manifest = json.load(f)
        arrays, _ = load_checkpoint(os.path.join(directory, CHECKPOINT_FILE_))

        keys = ModelManifestKeys
        partition = NodePartition(manifest[keys.N], manifest[keys.HIDDEN])
        dynamics_spec = manifest[keys.DYNAMICS]
        dynamics = Dynamics(dynamics_spec["name"], coupling=dynamics_spec["coupling"], r=dynamics_spec["r"])
        params = GinParameters.create(partition, dynamics, windows=max(1, manifest[keys.WINDOWS]),
                                      known_block=arrays.get(_KNOWN_BLOCK_KEY_),
                                      hidden_width=manifest[keys.HIDDEN_WIDTH], tau=manifest[keys.TAU],
                                      task=manifest[keys.TASK], seed=manifest[keys.SEED])

        for group in params.parameter_groups().values():
            for param in group:
                if param.name not in arrays:
                    raise ShapeError(f"Checkpoint lacks parameter '{param.name}'")
                if arrays[param.name].shape != param.shape:
                    raise ShapeError(f"Parameter '{param.name}' has shape {arrays[param.name].shape}, "
                                     f"model expects {param.shape}")
                param.value = arrays[param.name].copy()
        return params
