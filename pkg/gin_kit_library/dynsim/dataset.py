####################################################################
# ### dataset.py                                                 ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
from typing import Optional, Sequence, Text, Tuple

import numpy as np

from gin_kit_library.dynsim.dynamics import Dynamics, DynamicsValues
from gin_kit_library.errors import ParameterError, ShapeError
from gin_kit_library.netcore.graph import NodePartition

DEFAULT_SPLIT_RATIOS_ = (5, 1, 1)


####################################################################
# Class: TrajectoryDataset                                       ###
####################################################################
class TrajectoryDataset(object):
    """
    An immutable collection of length-t windows cut from simulated trajectories. The windows are stored in one array
    of shape (S, t, n, d). Each window remembers the trajectory it came from and its start step.
    """

    def __init__(self, windows: np.ndarray, dynamics: Dynamics, s: int, T: int, mode: Text,
                 provenance: np.ndarray) -> None:
        """
        Constructor for TrajectoryDataset objects.

        :param windows: The (S, t, n, d) window array.
        :param dynamics: The dynamics that generated the trajectories.
        :param s: The number of trajectories the windows were cut from.
        :param T: The number of steps per trajectory.
        :param mode: The window mode, "sliding" or "disjoint".
        :param provenance: An (S, 2) integer array of (sample, start) pairs.
        """
        windows = np.asarray(windows, dtype=np.float64)
        if windows.ndim != 4:
            raise ShapeError(f"Windows must have shape (S, t, n, d), got {windows.shape}")
        if windows.shape[3] != dynamics.d:
            raise ShapeError(f"Windows have d={windows.shape[3]} but {dynamics.name} states have d={dynamics.d}")
        provenance = np.asarray(provenance, dtype=np.int64)
        if provenance.shape != (windows.shape[0], 2):
            raise ShapeError(f"Provenance must have shape ({windows.shape[0]}, 2), got {provenance.shape}")

        self._windows: np.ndarray = windows
        self._windows.setflags(write=False)
        self._provenance: np.ndarray = provenance
        self._provenance.setflags(write=False)
        self.dynamics: Dynamics = dynamics
        self.s: int = int(s)
        self.T: int = int(T)
        self.mode: Text = mode

    @property
    def windows(self) -> np.ndarray:
        return self._windows

    @property
    def provenance(self) -> np.ndarray:
        return self._provenance

    @property
    def t(self) -> int:
        return self._windows.shape[1]

    @property
    def n(self) -> int:
        return self._windows.shape[2]

    @property
    def d(self) -> int:
        return self._windows.shape[3]

    @property
    def kind(self) -> Text:
        return self.dynamics.kind

    def __len__(self) -> int:
        return self._windows.shape[0]

    def subset(self, indices: Sequence[int]) -> "TrajectoryDataset":
        index = np.asarray(indices, dtype=np.int64)
        return TrajectoryDataset(self._windows[index], self.dynamics, self.s, self.T, self.mode,
                                 self._provenance[index])


def window_count(T: int, t: int, mode: Text) -> int:
    """
    Returns the number of windows one trajectory of T steps yields: T - t + 1 for sliding windows, T // t for
    disjoint windows, and at least one whenever the T + 1 states hold a single window.
    """
    if t < 1 or t > T + 1:
        raise ParameterError(f"Window length t={t} must lie in [1, {T + 1}]")
    if mode == DynamicsValues.SLIDING:
        return max(1, T - t + 1)
    if mode == DynamicsValues.DISJOINT:
        return max(1, T // t)
    raise ParameterError(f"Unknown window mode '{mode}'")


def windowize(trajectories: np.ndarray, t: int, dynamics: Dynamics, mode: Optional[Text] = None) -> TrajectoryDataset:
    """
    Cuts trajectories into windows of t consecutive states. Sliding windows start at every step 0..T-t; disjoint
    windows start at 0, t, 2t, ...

    :param trajectories: An (s, T + 1, n, d) array as returned by simulate().
    :param t: The window length.
    :param dynamics: The dynamics that produced the trajectories.
    :param mode: "sliding" or "disjoint"; defaults to the window mode of the dynamics.
    :raises ParameterError: If t exceeds the trajectory length or the mode is unknown.
    :return: The dataset, windows ordered by trajectory then start step.
    """
    trajectories = np.asarray(trajectories, dtype=np.float64)
    if trajectories.ndim != 4:
        raise ShapeError(f"Trajectories must have shape (s, T + 1, n, d), got {trajectories.shape}")
    mode = mode or dynamics.window_mode
    s, length = trajectories.shape[0], trajectories.shape[1]
    T = length - 1
    count = window_count(T, t, mode)
    stride = 1 if mode == DynamicsValues.SLIDING else t
    starts = np.arange(count) * stride

    windows = np.stack([trajectories[:, start:start + t] for start in starts], axis=1)
    windows = windows.reshape((s * count, t) + trajectories.shape[2:])
    provenance = np.stack([np.repeat(np.arange(s), count), np.tile(starts, s)], axis=1)
    return TrajectoryDataset(windows, dynamics, s, T, mode, provenance)


def split_sizes(total: int, ratios: Sequence[float]) -> Tuple[int, int, int]:
    """
    Splits a window count by (train, test, validation) ratios. Test and validation sizes are rounded down and the
    remainder goes to training.

    :raises ParameterError: If a ratio is not positive or a split would be empty.
    """
    if len(ratios) != 3:
        raise ParameterError(f"Split ratios need three entries (train, test, validation), got {list(ratios)}")
    if any(ratio <= 0 for ratio in ratios):
        raise ParameterError(f"Split ratios must be positive, got {list(ratios)}")

    scale = float(sum(ratios))
    n_test = int(np.floor(total * ratios[1] / scale))
    n_val = int(np.floor(total * ratios[2] / scale))
    n_train = total - n_test - n_val
    if min(n_train, n_test, n_val) < 1:
        raise ParameterError(f"{total} windows cannot be split by {list(ratios)} without an empty part")
    return n_train, n_test, n_val


def split(dataset: TrajectoryDataset, ratios: Sequence[float] = DEFAULT_SPLIT_RATIOS_,
          seed: Optional[int] = None) -> Tuple[TrajectoryDataset, TrajectoryDataset, TrajectoryDataset]:
    """
    Shuffles window indices and partitions them into training, test and validation datasets.

    :param dataset: The dataset to split.
    :param ratios: The (train, test, validation) ratios, all positive.
    :param seed: Seed for the shuffle.
    :return: The (train, test, validation) datasets.
    """
    n_train, n_test, _ = split_sizes(len(dataset), ratios)
    order = np.random.default_rng(seed).permutation(len(dataset))
    train = np.sort(order[:n_train])
    test = np.sort(order[n_train:n_train + n_test])
    validation = np.sort(order[n_train + n_test:])
    return dataset.subset(train), dataset.subset(test), dataset.subset(validation)


####################################################################
# Class: ObservedView                                            ###
####################################################################
class ObservedView(object):
    """
    The part of a dataset a learner may see: the state rows of observed nodes only, in canonical order. The rows of
    hidden nodes are kept aside and are only reachable through evaluation_hidden_states().
    """

    def __init__(self, dataset: TrajectoryDataset, partition: NodePartition) -> None:
        if partition.n != dataset.n:
            raise ShapeError(f"Partition covers {partition.n} nodes but the dataset has {dataset.n}")
        self._dataset: TrajectoryDataset = dataset
        self.partition: NodePartition = partition
        self._windows: np.ndarray = dataset.windows[:, :, partition.observed, :]
        self._windows.setflags(write=False)

    @property
    def windows(self) -> np.ndarray:
        """
        The (S, t, N_o, d) observed window array.
        """
        return self._windows

    @property
    def dynamics(self) -> Dynamics:
        return self._dataset.dynamics

    @property
    def t(self) -> int:
        return self._dataset.t

    @property
    def d(self) -> int:
        return self._dataset.d

    @property
    def n_observed(self) -> int:
        return self.partition.n_observed

    def __len__(self) -> int:
        return len(self._dataset)

    def observed_dataset(self) -> TrajectoryDataset:
        """
        Returns the observed rows as a dataset of their own, in which every node is observed.
        """
        source = self._dataset
        return TrajectoryDataset(self._windows, source.dynamics, source.s, source.T, source.mode, source.provenance)

    def evaluation_hidden_states(self) -> np.ndarray:
        """
        Returns the (S, t, N_u, d) ground-truth states of hidden nodes. For scoring only.
        """
        return self._dataset.windows[:, :, self.partition.hidden, :]

    def evaluation_full_windows(self) -> np.ndarray:
        """
        Returns the (S, t, n, d) ground-truth windows in canonical order. For scoring only.
        """
        return self._dataset.windows[:, :, self.partition.canonical_order(), :]


def mask_hidden(dataset: TrajectoryDataset, partition: NodePartition) -> ObservedView:
    return ObservedView(dataset, partition)
