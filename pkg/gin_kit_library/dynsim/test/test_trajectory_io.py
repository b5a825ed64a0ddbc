####################################################################
# ### test_trajectory_io.py                                      ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
import numpy as np
import pytest

from gin_kit_library.dynsim.dynamics import Dynamics, simulate
from gin_kit_library.dynsim.trajectory_io import DatasetManifest, load_trajectories, write_trajectories
from gin_kit_library.errors import EdgeListParseError, ParameterError, ShapeError
from gin_kit_library.netcore.generators import generate_er


def test_voter_trajectory_file(tmp_path) -> None:
    """
    Tests the Voter trajectory file layout and reload.
    """
    g = generate_er(4, 0.5, seed=0)
    trajectories = simulate(g, Dynamics("voter"), s=2, T=3, seed=0)
    path = write_trajectories(trajectories, str(tmp_path / "trajectories.csv"), Dynamics("voter"))

    lines = open(path, encoding="utf-8").read().splitlines()
    assert lines[0] == "sample,t,node,dim,value"
    assert len(lines) == 1 + 2 * 4 * 4 * 2
    assert lines[1].split(",")[4] in ("0", "1")
    assert np.array_equal(load_trajectories(path), trajectories)


def test_cmn_trajectory_precision(tmp_path) -> None:
    """
    Tests that CMN values survive with 9 significant digits.
    """
    g = generate_er(5, 0.5, seed=0)
    trajectories = simulate(g, Dynamics("cmn"), s=2, T=4, seed=1)
    path = write_trajectories(trajectories, str(tmp_path / "trajectories.csv"), Dynamics("cmn"))

    assert np.allclose(load_trajectories(path), trajectories, rtol=1e-8, atol=1e-9)


def test_load_trajectories_bad_header(tmp_path) -> None:
    """
    Tests that a file without the expected header is rejected.
    """
    path = tmp_path / "bad.csv"
    path.write_text("a,b,c,d,e\n0,0,0,0,1\n", encoding="utf-8")

    with pytest.raises(EdgeListParseError):
        load_trajectories(str(path))


def test_load_trajectories_incomplete(tmp_path) -> None:
    """
    Tests that a missing grid entry is rejected.
    """
    path = tmp_path / "gap.csv"
    path.write_text("sample,t,node,dim,value\n0,0,0,0,0.5\n0,1,1,0,0.5\n", encoding="utf-8")

    with pytest.raises(ShapeError):
        load_trajectories(str(path))


def test_dataset_manifest_round_trip(tmp_path) -> None:
    """
    Tests the dataset manifest JSON layout.
    """
    manifest = DatasetManifest(Dynamics("cmn", coupling=0.3), n=10, s=50, T=100, t=2, mode="disjoint", seed=4,
                               split_ratios=[5, 1, 1])
    path = manifest.write(str(tmp_path / "dataset_manifest.json"))
    loaded = DatasetManifest.load(path)

    assert loaded == manifest
    assert loaded.as_dict()["d"] == 1
    assert set(manifest.as_dict()) >= {"dynamics", "n", "d", "s", "T", "t", "mode", "seed", "split_ratios"}


def test_dataset_manifest_wrong_width() -> None:
    """
    Tests that a state width inconsistent with the dynamics is rejected.
    """
    data = DatasetManifest(Dynamics("voter"), 4, 1, 5, 2, "sliding", 0, [5, 1, 1]).as_dict()
    data["d"] = 1

    with pytest.raises(ParameterError):
        DatasetManifest.from_dict(data)
