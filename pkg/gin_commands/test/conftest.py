####################################################################
# ### conftest.py                                                ###
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

from typing import List, Optional, Text, Tuple

from gin_kit_library.logging import null_logger
from gin_kit_library.metrics.evaluation import EvalReport

from gin_commands.experiment import ExperimentConfig, evaluate_model, generate, train_model

# overrides shrinking the built-in defaults to an 8-node experiment that trains in seconds
TINY_OVERRIDES_ = [
    "graph.n=8",
    "graph.p=0.4",
    "data.s=3",
    "data.T=20",
    "partition.n_hidden=2",
    "train.epochs=3",
    "train.batch_size=8",
    "train.hidden_width=8",
    "evaluation.restarts=1",
]

# seeds of the repeated acceptance runs
ACCEPTANCE_SEEDS_ = (1, 2, 3)

####################################################################
# Unit Test Fixture Names                                        ###
####################################################################
TINY_RUN_FIXTURE = "tiny_run_fixture"
WS10_CMN_RUNS_FIXTURE = "ws10_cmn_runs_fixture"
ER100_CMN_RUNS_FIXTURE = "er100_cmn_runs_fixture"
ER100_VOTER_RUNS_FIXTURE = "er100_voter_runs_fixture"
KARATE_VOTER_RUNS_FIXTURE = "karate_voter_runs_fixture"


def tiny_config(output_dir: Text, overrides: Optional[List[Text]] = None, **flags) -> ExperimentConfig:
    """
    Resolves the tiny experiment into an output directory, with extra overrides applied last.
    """
    return ExperimentConfig.resolve(output_dir=str(output_dir), overrides=TINY_OVERRIDES_ + list(overrides or []),
                                    **flags)


def tiny_argv(output_dir: Text, *extra: Text) -> List[Text]:
    """
    Builds command-line arguments for the tiny experiment.
    """
    argv = ["--out", str(output_dir)]
    for override in TINY_OVERRIDES_:
        argv += ["--set", override]
    return argv + list(extra)


####################################################################
# Unit Test Fixtures                                             ###
####################################################################
@pytest.fixture(name=TINY_RUN_FIXTURE, scope="module")
def tiny_run_fixture(tmp_path_factory) -> ExperimentConfig:
    """
    This fixture generates, trains and evaluates the tiny experiment once in a temporary directory.

    :return: The configuration of the run; its output directory holds every artifact.
    """
    config = tiny_config(tmp_path_factory.mktemp("tiny_run"))
    logger = null_logger()
    generate(config, logger)
    train_model(config, logger)
    evaluate_model(config, logger)
    return config


def preset_runs(tmp_path_factory, preset: Text) -> List[Tuple[ExperimentConfig, EvalReport]]:
    """
    Generates, trains and evaluates a preset once per acceptance seed.

    :return: The (configuration, report) pair of every run.
    """
    runs = []
    logger = null_logger()
    for seed in ACCEPTANCE_SEEDS_:
        output_dir = tmp_path_factory.mktemp(f"{preset}_{seed}")
        config = ExperimentConfig.resolve(preset=preset, seed=seed, output_dir=str(output_dir))
        generate(config, logger)
        train_model(config, logger)
        runs.append((config, evaluate_model(config, logger)))
    return runs


@pytest.fixture(name=WS10_CMN_RUNS_FIXTURE, scope="module")
def ws10_cmn_runs_fixture(tmp_path_factory) -> List[Tuple[ExperimentConfig, EvalReport]]:
    """
    This fixture reconstructs the 10-node small world under coupled-map dynamics three times.
    """
    return preset_runs(tmp_path_factory, "ws10-cmn-reconstruct")


@pytest.fixture(name=ER100_CMN_RUNS_FIXTURE, scope="module")
def er100_cmn_runs_fixture(tmp_path_factory) -> List[Tuple[ExperimentConfig, EvalReport]]:
    """
    This fixture completes the 100-node random network under coupled-map dynamics three times.
    """
    return preset_runs(tmp_path_factory, "er100-cmn-partial")


@pytest.fixture(name=ER100_VOTER_RUNS_FIXTURE, scope="module")
def er100_voter_runs_fixture(tmp_path_factory) -> List[Tuple[ExperimentConfig, EvalReport]]:
    """
    This fixture completes the 100-node random network under Voter dynamics three times.
    """
    return preset_runs(tmp_path_factory, "er100-voter-partial")


@pytest.fixture(name=KARATE_VOTER_RUNS_FIXTURE, scope="module")
def karate_voter_runs_fixture(tmp_path_factory) -> List[Tuple[ExperimentConfig, EvalReport]]:
    """
    This fixture completes the karate club without observed structure three times.
    """
    return preset_runs(tmp_path_factory, "karate-voter-blind")
