####################################################################
# ### trajectory_io.py                                           ###
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

from typing import Dict, List, Optional, Text

import numpy as np

from gin_kit_library.dynsim.dynamics import Dynamics, DynamicsValues
from gin_kit_library.errors import EdgeListParseError, ParameterError, ShapeError

_HEADER_ = "sample,t,node,dim,value"


def write_trajectories(trajectories: np.ndarray, path: Text, dynamics: Dynamics) -> Text:
    """
    Writes trajectories as long-format CSV with the header "sample,t,node,dim,value". Voter values are written as
    0/1 integers, CMN values with 9 significant digits.

    :param trajectories: An (s, T + 1, n, d) array.
    :param path: The output path.
    :param dynamics: The dynamics that produced the trajectories.
    :return: The output path.
    """
    trajectories = np.asarray(trajectories)
    if trajectories.ndim != 4:
        raise ShapeError(f"Trajectories must have shape (s, T + 1, n, d), got {trajectories.shape}")

    index = np.indices(trajectories.shape).reshape(4, -1).T
    values = trajectories.reshape(-1, 1)
    if dynamics.kind == DynamicsValues.BINARY:
        table = np.hstack([index, values.astype(np.int64)])
        np.savetxt(path, table, fmt="%d", delimiter=",", header=_HEADER_, comments="")
    else:
        table = np.hstack([index.astype(np.float64), values])
        np.savetxt(path, table, fmt=["%d", "%d", "%d", "%d", "%.9g"], delimiter=",", header=_HEADER_, comments="")
    return path


def load_trajectories(path: Text) -> np.ndarray:
    """
    Reads a trajectory CSV written by write_trajectories().

    :raises EdgeListParseError: If the header is wrong or a row cannot be parsed.
    :raises ShapeError: If the (sample, t, node, dim) grid is incomplete.
    :return: The (s, T + 1, n, d) array.
    """
    with open(path, "r", encoding="utf-8") as f:
        header = f.readline().strip()
    if header != _HEADER_:
        raise EdgeListParseError(f"Expected header '{_HEADER_}', got '{header}'", line_number=1)

    try:
        table = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    except ValueError as e:
        raise EdgeListParseError(f"Malformed trajectory file {path}: {e}")
    if table.shape[1] != 5:
        raise EdgeListParseError(f"Expected 5 columns, got {table.shape[1]}")

    index = table[:, :4].astype(np.int64)
    if np.any(index < 0):
        raise ShapeError("Trajectory indices must be non-negative")
    shape = tuple(int(v) for v in index.max(axis=0) + 1)
    if table.shape[0] != int(np.prod(shape)):
        raise ShapeError(f"Trajectory file holds {table.shape[0]} values for a grid of shape {shape}")

    trajectories = np.full(shape, np.nan)
    trajectories[tuple(index.T)] = table[:, 4]
    if np.isnan(trajectories).any():
        raise ShapeError("Trajectory file repeats some entries and misses others")
    return trajectories


####################################################################
# Class: DatasetManifest                                         ###
####################################################################
class DatasetManifest(object):
    """
    Describes how a dataset was produced, so it can be regenerated or checked against a stored trajectory file.
    """

    class Keys(object):
        DYNAMICS = "dynamics"
        N = "n"
        D = "d"
        S = "s"
        T = "T"
        WINDOW = "t"
        MODE = "mode"
        SEED = "seed"
        SPLIT_RATIOS = "split_ratios"
        COUPLING = "coupling"
        R = "r"

    def __init__(self, dynamics: Dynamics, n: int, s: int, T: int, t: int, mode: Text, seed: Optional[int],
                 split_ratios: List[float]) -> None:
        self.dynamics: Dynamics = dynamics
        self.n: int = int(n)
        self.s: int = int(s)
        self.T: int = int(T)
        self.t: int = int(t)
        self.mode: Text = mode
        self.seed: Optional[int] = seed
        self.split_ratios: List[float] = list(split_ratios)

    @property
    def d(self) -> int:
        return self.dynamics.d

    def as_dict(self) -> Dict:
        keys = DatasetManifest.Keys
        data = {
            keys.DYNAMICS: self.dynamics.name,
            keys.N: self.n,
            keys.D: self.d,
            keys.S: self.s,
            keys.T: self.T,
            keys.WINDOW: self.t,
            keys.MODE: self.mode,
            keys.SEED: self.seed,
            keys.SPLIT_RATIOS: self.split_ratios,
        }
        if self.dynamics.name == DynamicsValues.CMN:
            data[keys.COUPLING] = self.dynamics.coupling
            data[keys.R] = self.dynamics.r
        return data

    @staticmethod
    def from_dict(data: Dict) -> "DatasetManifest":
        keys = DatasetManifest.Keys
        try:
            dynamics = Dynamics(data[keys.DYNAMICS],
                                coupling=data.get(keys.COUPLING, Dynamics.DEFAULT_COUPLING),
                                r=data.get(keys.R, Dynamics.DEFAULT_R))
            manifest = DatasetManifest(dynamics, data[keys.N], data[keys.S], data[keys.T], data[keys.WINDOW],
                                       data[keys.MODE], data.get(keys.SEED), data[keys.SPLIT_RATIOS])
        except (KeyError, TypeError) as e:
            raise ParameterError(f"Malformed dataset manifest: {e}")
        if data.get(keys.D, manifest.d) != manifest.d:
            raise ParameterError(f"Manifest declares d={data[keys.D]} for {dynamics.name} dynamics")
        return manifest

    def write(self, path: Text) -> Text:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.as_dict(), f, indent=2)
        return path

    @staticmethod
    def load(path: Text) -> "DatasetManifest":
        with open(path, "r", encoding="utf-8") as f:
            return DatasetManifest.from_dict(json.load(f))

    def __eq__(self, other) -> bool:
        return isinstance(other, DatasetManifest) and self.as_dict() == other.as_dict()
