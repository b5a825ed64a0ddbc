####################################################################
# ### test_config.py                                             ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
import pytest

from gin_kit_library.errors import ConfigurationError
from gin_kit_library.trainer.config import TaskValues, TrainConfig


def test_defaults() -> None:
    """
    Tests the default learning rates, batch size and epochs.
    """
    config = TrainConfig()

    assert (config.lr_alpha, config.lr_gamma, config.lr_beta) == (0.004, 0.1, 0.001)
    assert config.batch_size == 1024
    assert config.epochs == 500
    assert config.task == TaskValues.COMPLETE_PARTIAL


def test_structure_weight_follows_task() -> None:
    """
    Tests that only reconstruction carries a structure weight by default and explicit values win.
    """
    assert TrainConfig(task=TaskValues.RECONSTRUCT).effective_structure_weight == 0.0001
    assert TrainConfig(task=TaskValues.COMPLETE_PARTIAL).effective_structure_weight == 0.0
    assert TrainConfig(task=TaskValues.COMPLETE_BLIND).effective_structure_weight == 0.0
    assert TrainConfig(task=TaskValues.RECONSTRUCT, structure_weight=0.0).effective_structure_weight == 0.0


@pytest.mark.parametrize("changes", [
    {"lr_alpha": 0.0},
    {"lr_beta": -1.0},
    {"structure_weight": -0.1},
    {"batch_size": 0},
    {"epochs": 0},
    {"tau": 0.0},
    {"tau_final": -1.0},
    {"patience": 0},
    {"hidden_width": 0},
    {"task": "denoise"},
])
def test_invalid_values(changes) -> None:
    """
    Tests that out-of-range settings are configuration errors.
    """
    with pytest.raises(ConfigurationError):
        TrainConfig(**changes)


def test_tau_schedule() -> None:
    """
    Tests constant and linearly annealed temperatures.
    """
    constant = TrainConfig(epochs=11, tau=0.7)
    annealed = TrainConfig(epochs=11, tau=1.0, tau_final=0.5)

    assert constant.tau_at(6) == 0.7
    assert annealed.tau_at(1) == 1.0
    assert annealed.tau_at(6) == pytest.approx(0.75)
    assert annealed.tau_at(11) == pytest.approx(0.5)


def test_dict_round_trip_and_replace() -> None:
    """
    Tests that configurations survive a dictionary round trip and replace() leaves the original alone.
    """
    config = TrainConfig(task=TaskValues.RECONSTRUCT, epochs=7, seed=4, patience=2)
    changed = config.replace(epochs=9)

    assert TrainConfig.from_dict(config.as_dict()) == config
    assert changed.epochs == 9
    assert config.epochs == 7


def test_from_dict_unknown_key() -> None:
    """
    Tests that misspelled settings are reported.
    """
    with pytest.raises(ConfigurationError, match="learning_rate"):
        TrainConfig.from_dict({"learning_rate": 0.1})
