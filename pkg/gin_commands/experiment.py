####################################################################
# ### experiment.py                                              ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
import configparser
import copy
import csv
import datetime
import json
import logging
import os

from typing import Any, Dict, List, Optional, Sequence, Text, Tuple

import numpy as np
import yaml

from gin_kit_library.dynsim.dataset import DEFAULT_SPLIT_RATIOS_, ObservedView, TrajectoryDataset, mask_hidden, \
    split, window_count, windowize
from gin_kit_library.dynsim.dynamics import Dynamics, DynamicsValues, simulate
from gin_kit_library.dynsim.trajectory_io import DatasetManifest, load_trajectories, write_trajectories
from gin_kit_library.errors import ArtifactWriteError, ConfigurationError, GinKitError, StageError
from gin_kit_library.gin_model.parameters import GinParameters
from gin_kit_library.logging import GinKitLogger
from gin_kit_library.lrp_indicator import ProgressIndicator
from gin_kit_library.metrics.baselines import DEFAULT_MI_BINS_, DEFAULT_PCORR_RIDGE_, BaselineValues, score_baseline, \
    write_baseline_csv
from gin_kit_library.metrics.evaluation import EvalReport, evaluate_parameters
from gin_kit_library.metrics.scores import DEFAULT_THRESHOLD_
from gin_kit_library.netcore.edge_list import build_graph, load_adjacency_file, load_edge_list, load_matrix, \
    write_edge_list, write_matrix
from gin_kit_library.netcore.graph import Graph, NodePartition, load_partition, partition_nodes, write_partition
from gin_kit_library.sgm.matching import MatchProblem, MatchResult, match
from gin_kit_library.trainer.config import TaskValues, TrainConfig
from gin_kit_library.trainer.gin_trainer import BlindResult, run_task
from gin_kit_library.trainer.sweep import SweepRow, auc_slope, hidden_count, missing_fraction_sweep, write_sweep_csv

# locations of the built-in settings #
_COMMANDS_DIR_ = os.path.dirname(os.path.abspath(__file__))
SETTINGS_FILE_ = os.path.join(_COMMANDS_DIR_, "gin_settings.ini")
PRESETS_DIR_ = os.path.join(_COMMANDS_DIR_, "presets")

# artifact file names #
CONFIG_FILE_ = "experiment_config.json"
GRAPH_FILE_ = "graph.csv"
PARTITION_FILE_ = "partition.json"
TRAJECTORIES_FILE_ = "trajectories.csv"
DATASET_MANIFEST_FILE_ = "dataset_manifest.json"
TRAIN_LOG_FILE_ = "train_log.csv"
RECONSTRUCTION_LOG_FILE_ = "train_log_reconstruction.csv"
EDGE_PROBABILITIES_FILE_ = "edge_probabilities.csv"
EVAL_REPORT_JSON_FILE_ = "eval_report.json"
EVAL_REPORT_HTML_FILE_ = "eval_report.html"
CONTRAST_MATRIX_FILE_ = "contrast_matrix.csv"
STRUCTURE_TABLE_FILE_ = "structure_table.csv"
BASELINE_FILE_ = "baseline_auc.csv"
MATCH_FILE_ = "match.json"
SWEEP_FILE_ = "sweep.csv"
SUMMARY_FILE_ = "summary.csv"

_LOG_TIMESTAMP_TMPL_ = "%Y-%m-%dT%H_%M_%S"
SUMMARY_HEADER_ = ["metric", "mean", "std", "runs", "values"]
SUMMARY_METRICS_ = (EvalReport.Keys.UNOBS_AUC, EvalReport.Keys.UNOBS_ACC, EvalReport.Keys.UNOBS_TPR,
                    EvalReport.Keys.UNOBS_FPR, EvalReport.Keys.WHOLE_AUC, EvalReport.Keys.RECONSTRUCTION_AUC,
                    EvalReport.Keys.OBS_STATE_SCORE, EvalReport.Keys.HIDDEN_INIT_SCORE)


####################################################################
# Class: StageSeeds                                              ###
####################################################################
class StageSeeds(object):
    """
    Stream indices of the seeds derived from the experiment seed, one per random stage.
    """
    GRAPH = 0
    SIMULATE = 1
    PARTITION = 2
    SPLIT = 3
    TRAIN = 4
    MATCH = 5


def derive_seed(seed: int, stage: int) -> int:
    """
    Derives an independent stage seed from the experiment seed.
    """
    return int(np.random.SeedSequence([int(seed), int(stage)]).generate_state(1)[0])


def parse_scalar(text: Text) -> Any:
    """
    Types a settings value: YAML scalars and lists, "none" for unset, and exponent floats such as 1e-6 that YAML
    would otherwise keep as strings.
    """
    if text is None or text.strip().lower() == "none":
        return None
    value = yaml.safe_load(text)
    if isinstance(value, str):
        try:
            return float(value)
        except ValueError:
            return value
    return value


####################################################################
# Class: ExperimentConfig                                        ###
####################################################################
class ExperimentConfig(object):
    """
    A fully resolved experiment: graph, dynamics, data volumes, partition, training and evaluation settings, plus the
    global seed and the output directory. Every stage reads its inputs from here and from the artifacts of earlier
    stages in the output directory.
    """

    class Keys(object):
        SEED = "seed"
        OUTPUT_DIR = "output_dir"
        EXPERIMENT = "experiment"

        GRAPH = "graph"
        DYNAMICS = "dynamics"
        DATA = "data"
        PARTITION = "partition"
        TRAIN = "train"
        EVALUATION = "evaluation"

        SECTIONS = (GRAPH, DYNAMICS, DATA, PARTITION, TRAIN, EVALUATION)

    # keys accepted per section; the graph section depends on its kind and is checked when the graph is built
    SECTION_KEYS = {
        Keys.DYNAMICS: ("name", "coupling", "r"),
        Keys.DATA: ("s", "T", "t", "mode", "split_ratios"),
        Keys.PARTITION: ("hidden", "fraction", "n_hidden"),
        Keys.TRAIN: tuple(TrainConfig().as_dict()),
        Keys.EVALUATION: ("threshold", "with_matching", "max_iters", "tol", "restarts", "mi_bins", "pcorr_ridge",
                          "fractions", "repeats"),
    }

    def __init__(self, sections: Dict[Text, Dict[Text, Any]], seed: int, output_dir: Text) -> None:
        """
        Constructor for ExperimentConfig objects.

        :param sections: The configuration sections keyed by section name.
        :param seed: The global experiment seed, a non-negative integer.
        :param output_dir: The directory receiving every artifact.
        :raises ConfigurationError: If a section or field is unknown or invalid; the message names the field.
        """
        self.sections: Dict[Text, Dict[Text, Any]] = {name: dict(sections.get(name) or {})
                                                      for name in ExperimentConfig.Keys.SECTIONS}
        unknown = sorted(set(sections) - set(ExperimentConfig.Keys.SECTIONS))
        if unknown:
            raise ConfigurationError(f"Unknown configuration sections: {', '.join(unknown)}")
        self.seed: int = seed
        self.output_dir: Text = output_dir
        self.validate()

    def validate(self) -> None:
        keys = ExperimentConfig.Keys
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or self.seed < 0:
            raise ConfigurationError(f"seed must be a non-negative integer, got {self.seed!r}")
        if not self.output_dir or not isinstance(self.output_dir, str):
            raise ConfigurationError(f"output_dir must be a path, got {self.output_dir!r}")

        for section, allowed in ExperimentConfig.SECTION_KEYS.items():
            unknown = sorted(set(self.sections[section]) - set(allowed))
            if unknown:
                raise ConfigurationError(f"Unknown field(s) in section '{section}': {', '.join(unknown)}")
        if not self.sections[keys.GRAPH].get("kind"):
            raise ConfigurationError("graph.kind must be set")

        # building the typed views validates their fields
        dynamics = self.dynamics
        train_config = self.train_config
        self._validate_data(dynamics)
        self._validate_partition(train_config.task)
        self._validate_evaluation()

    def _validate_data(self, dynamics: Dynamics) -> None:
        data = self.sections[ExperimentConfig.Keys.DATA]
        for name in ("s", "T", "t"):
            value = data.get(name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ConfigurationError(f"data.{name} must be a positive integer, got {value!r}")
        mode = data.get("mode") or dynamics.window_mode
        if mode not in (DynamicsValues.SLIDING, DynamicsValues.DISJOINT):
            raise ConfigurationError(f"data.mode must be 'sliding' or 'disjoint', got {mode!r}")
        if data["t"] > data["T"] + 1:
            raise ConfigurationError(f"data.t={data['t']} does not fit trajectories of T={data['T']} steps")
        ratios = data.get("split_ratios", list(DEFAULT_SPLIT_RATIOS_))
        if not isinstance(ratios, list) or len(ratios) != 3 or any(not _positive_number(r) for r in ratios):
            raise ConfigurationError(f"data.split_ratios must be three positive numbers, got {ratios!r}")

    def _validate_partition(self, task: Text) -> None:
        partition = self.sections[ExperimentConfig.Keys.PARTITION]
        hidden, fraction, n_hidden = partition.get("hidden"), partition.get("fraction"), partition.get("n_hidden")
        if hidden is not None and (not isinstance(hidden, list) or
                                   any(isinstance(node, bool) or not isinstance(node, int) for node in hidden)):
            raise ConfigurationError(f"partition.hidden must be a list of node ids, got {hidden!r}")
        if fraction is not None and not (_positive_number(fraction) and fraction < 1):
            raise ConfigurationError(f"partition.fraction must lie strictly between 0 and 1, got {fraction!r}")
        if n_hidden is not None and (isinstance(n_hidden, bool) or not isinstance(n_hidden, int) or n_hidden < 0):
            raise ConfigurationError(f"partition.n_hidden must be a non-negative integer, got {n_hidden!r}")

        declares_hidden = bool(hidden) or fraction is not None or bool(n_hidden)
        if task == TaskValues.RECONSTRUCT and declares_hidden:
            raise ConfigurationError("Task 'reconstruct' observes every node; set partition.n_hidden=0 and leave "
                                     "partition.hidden and partition.fraction unset")
        if task == TaskValues.COMPLETE_PARTIAL and not declares_hidden:
            raise ConfigurationError("Task 'complete-partial' needs hidden nodes; set partition.n_hidden, "
                                     "partition.fraction or partition.hidden")

    def _validate_evaluation(self) -> None:
        evaluation = self.sections[ExperimentConfig.Keys.EVALUATION]
        threshold = evaluation.get("threshold", DEFAULT_THRESHOLD_)
        if not isinstance(threshold, (int, float)) or not 0.0 <= threshold <= 1.0:
            raise ConfigurationError(f"evaluation.threshold must lie in [0, 1], got {threshold!r}")
        for name in ("max_iters", "restarts", "mi_bins", "repeats"):
            value = evaluation.get(name)
            if value is not None and (isinstance(value, bool) or not isinstance(value, int) or value < 1):
                raise ConfigurationError(f"evaluation.{name} must be a positive integer, got {value!r}")
        for name in ("tol", "pcorr_ridge"):
            value = evaluation.get(name)
            if value is not None and not _positive_number(value):
                raise ConfigurationError(f"evaluation.{name} must be a positive number, got {value!r}")
        fractions = evaluation.get("fractions")
        if fractions is not None and (not isinstance(fractions, list) or
                                      any(not (_positive_number(f) and f < 1) for f in fractions)):
            raise ConfigurationError(f"evaluation.fractions must be numbers strictly between 0 and 1, got "
                                     f"{fractions!r}")

    # typed views #
    @property
    def graph_spec(self) -> Dict[Text, Any]:
        return dict(self.sections[ExperimentConfig.Keys.GRAPH])

    @property
    def dynamics(self) -> Dynamics:
        section = self.sections[ExperimentConfig.Keys.DYNAMICS]
        try:
            return Dynamics(section.get("name", DynamicsValues.CMN),
                            coupling=section.get("coupling", Dynamics.DEFAULT_COUPLING),
                            r=section.get("r", Dynamics.DEFAULT_R))
        except GinKitError as e:
            raise ConfigurationError(f"Invalid dynamics section: {e}")

    @property
    def data(self) -> Dict[Text, Any]:
        return dict(self.sections[ExperimentConfig.Keys.DATA])

    @property
    def train_config(self) -> TrainConfig:
        """
        The training settings; an unset training seed is derived from the experiment seed.
        """
        settings = {key: value for key, value in self.sections[ExperimentConfig.Keys.TRAIN].items()}
        if settings.get("seed") is None:
            settings["seed"] = derive_seed(self.seed, StageSeeds.TRAIN)
        try:
            return TrainConfig.from_dict(settings)
        except (TypeError, ValueError) as e:
            raise ConfigurationError(f"Invalid train section: {e}")

    @property
    def task(self) -> Text:
        return self.train_config.task

    def _evaluation(self, name: Text, default: Any) -> Any:
        value = self.sections[ExperimentConfig.Keys.EVALUATION].get(name)
        return default if value is None else value

    @property
    def threshold(self) -> float:
        return float(self._evaluation("threshold", DEFAULT_THRESHOLD_))

    @property
    def with_matching(self) -> bool:
        return bool(self._evaluation("with_matching", True))

    @property
    def match_settings(self) -> Dict[Text, Any]:
        return {
            "max_iters": int(self._evaluation("max_iters", 100)),
            "tol": float(self._evaluation("tol", 1e-6)),
            "restarts": int(self._evaluation("restarts", 3)),
            "seed": derive_seed(self.seed, StageSeeds.MATCH),
        }

    @property
    def mi_bins(self) -> int:
        return int(self._evaluation("mi_bins", DEFAULT_MI_BINS_))

    @property
    def pcorr_ridge(self) -> float:
        return float(self._evaluation("pcorr_ridge", DEFAULT_PCORR_RIDGE_))

    @property
    def fractions(self) -> List[float]:
        return [float(f) for f in self._evaluation("fractions", [])]

    @property
    def repeats(self) -> int:
        return int(self._evaluation("repeats", 1))

    def partition_for(self, g: Graph) -> NodePartition:
        """
        Draws the node partition of a graph: explicit hidden ids, else a hidden fraction, else a hidden count.
        """
        section = self.sections[ExperimentConfig.Keys.PARTITION]
        if section.get("hidden"):
            return NodePartition(g.n, section["hidden"])
        seed = derive_seed(self.seed, StageSeeds.PARTITION)
        if section.get("fraction") is not None:
            return partition_nodes(g, hidden_count(g.n, float(section["fraction"])), seed=seed)
        return partition_nodes(g, int(section.get("n_hidden") or 0), seed=seed)

    def for_repeat(self, repeat: int) -> "ExperimentConfig":
        """
        Returns the configuration of one repetition: consecutive seeds, one sub-directory per run. A single
        repetition keeps this configuration unchanged.
        """
        if self.repeats == 1:
            return self
        data = self.to_dict()
        data[ExperimentConfig.Keys.SEED] = self.seed + repeat
        data[ExperimentConfig.Keys.OUTPUT_DIR] = os.path.join(self.output_dir, f"run_{repeat}")
        data[ExperimentConfig.Keys.EVALUATION]["repeats"] = 1
        return ExperimentConfig.from_dict(data)

    def path(self, filename: Text) -> Text:
        return os.path.join(self.output_dir, filename)

    # serialisation #
    def to_dict(self) -> Dict[Text, Any]:
        data: Dict[Text, Any] = {
            ExperimentConfig.Keys.SEED: self.seed,
            ExperimentConfig.Keys.OUTPUT_DIR: self.output_dir,
        }
        data.update(copy.deepcopy(self.sections))
        return data

    @staticmethod
    def from_dict(data: Dict[Text, Any]) -> "ExperimentConfig":
        data = copy.deepcopy(data)
        keys = ExperimentConfig.Keys
        try:
            seed = data.pop(keys.SEED)
            output_dir = data.pop(keys.OUTPUT_DIR)
        except KeyError as e:
            raise ConfigurationError(f"Experiment configuration is missing {e}")
        return ExperimentConfig(data, seed, output_dir)

    def write(self) -> Text:
        """
        Writes the configuration verbatim to experiment_config.json in the output directory.
        """
        ensure_output_dir(self.output_dir)
        path = self.path(CONFIG_FILE_)
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.to_dict(), f, indent=2, sort_keys=True)
        return path

    @staticmethod
    def load(path: Text) -> "ExperimentConfig":
        if not os.path.isfile(path):
            raise StageError(path, stage="config")
        with open(path, "r", encoding="utf-8") as f:
            return ExperimentConfig.from_dict(json.load(f))

    def __eq__(self, other) -> bool:
        return isinstance(other, ExperimentConfig) and self.to_dict() == other.to_dict()

    def __repr__(self) -> Text:
        return f"ExperimentConfig(seed={self.seed}, output_dir={self.output_dir!r}, task={self.task!r})"

    @staticmethod
    def resolve(preset: Optional[Text] = None, config_path: Optional[Text] = None, seed: Optional[int] = None,
                output_dir: Optional[Text] = None, task: Optional[Text] = None,
                fractions: Optional[Sequence[float]] = None, overrides: Optional[Sequence[Text]] = None,
                settings_path: Text = SETTINGS_FILE_) -> "ExperimentConfig":
        """
        Merges the configuration layers, lowest precedence first: the settings file, a preset, a configuration
        file, then command-line values.

        :param preset: The name of a bundled preset.
        :param config_path: A YAML or JSON configuration file.
        :param seed: The --seed value.
        :param output_dir: The --out value.
        :param task: The --task value.
        :param fractions: The --fractions values.
        :param overrides: The --set values, each "section.key=value".
        :param settings_path: The settings file with the built-in defaults.
        :raises ConfigurationError: If a layer is unreadable or the merged configuration is invalid.
        :return: The resolved configuration.
        """
        merged = read_settings(settings_path)
        layers: List[Dict[Text, Any]] = []
        if preset:
            layers.append(load_preset(preset))
        if config_path:
            layers.append(load_config_file(config_path))

        flags: Dict[Text, Any] = {}
        if seed is not None:
            flags[ExperimentConfig.Keys.SEED] = int(seed)
        if output_dir is not None:
            flags[ExperimentConfig.Keys.OUTPUT_DIR] = output_dir
        if task is not None:
            flags[ExperimentConfig.Keys.TRAIN] = {"task": task}
        if fractions is not None:
            flags[ExperimentConfig.Keys.EVALUATION] = {"fractions": [float(f) for f in fractions]}
        layers.append(flags)
        layers.extend(parse_override(override) for override in overrides or [])

        for layer in layers:
            merged = merge_layers(merged, layer)
        return ExperimentConfig.from_dict(_observe_all_for_reconstruction(merged, layers))


def _observe_all_for_reconstruction(merged: Dict[Text, Any], layers: Sequence[Dict[Text, Any]]) -> Dict[Text, Any]:
    """
    Clears the settings-file hidden-node default when the resolved task is reconstruct and no layer above the
    settings file declares a partition. Hidden nodes declared explicitly are left for validation to reject.
    """
    keys = ExperimentConfig.Keys
    if (merged.get(keys.TRAIN) or {}).get("task") != TaskValues.RECONSTRUCT:
        return merged
    partition_keys = ("hidden", "fraction", "n_hidden")
    if any(key in (layer.get(keys.PARTITION) or {}) for layer in layers for key in partition_keys):
        return merged
    cleared = copy.deepcopy(merged)
    cleared[keys.PARTITION] = {"n_hidden": 0}
    return cleared


def _positive_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool) and value > 0


def read_settings(path: Text = SETTINGS_FILE_) -> Dict[Text, Any]:
    """
    Reads the settings file into a configuration dictionary. The [experiment] section holds the top-level seed
    and output directory; every other section maps to a configuration section.

    :raises ConfigurationError: If the file is missing or malformed.
    """
    if not os.path.isfile(path):
        raise ConfigurationError(f"Settings file not found: {path}")
    parser = configparser.ConfigParser()
    # keep key case, data.T and data.t are different settings
    parser.optionxform = str
    try:
        parser.read(path, encoding="utf-8")
    except (configparser.Error, UnicodeDecodeError) as e:
        raise ConfigurationError(f"Unable to read settings file {path}: {e}")

    settings: Dict[Text, Any] = {}
    for section in parser.sections():
        values = {key: parse_scalar(value) for key, value in parser.items(section)}
        if section == ExperimentConfig.Keys.EXPERIMENT:
            settings.update(values)
        else:
            settings[section] = values
    return settings


def available_presets() -> List[Text]:
    if not os.path.isdir(PRESETS_DIR_):
        return []
    return sorted(os.path.splitext(name)[0] for name in os.listdir(PRESETS_DIR_) if name.endswith(".yaml"))


def load_preset(name: Text) -> Dict[Text, Any]:
    """
    Loads a bundled preset by name.

    :raises ConfigurationError: If no preset has that name.
    """
    path = os.path.join(PRESETS_DIR_, f"{name}.yaml")
    if not os.path.isfile(path):
        raise ConfigurationError(f"Unknown preset '{name}'; available presets: {', '.join(available_presets())}")
    return load_config_file(path)


def load_config_file(path: Text) -> Dict[Text, Any]:
    """
    Loads a YAML or JSON configuration file.

    :raises ConfigurationError: If the file is missing, unparsable or not a mapping.
    """
    if not os.path.isfile(path):
        raise ConfigurationError(f"Configuration file not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ConfigurationError(f"Unable to parse configuration file {path}: {e}")
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigurationError(f"Configuration file {path} must hold a mapping of sections")
    return data


def parse_override(text: Text) -> Dict[Text, Any]:
    """
    Parses one --set value, "section.key=value" or "seed=value" / "output_dir=value".

    :raises ConfigurationError: If the value is not of that form.
    """
    name, separator, value = text.partition("=")
    name = name.strip()
    if not separator or not name:
        raise ConfigurationError(f"Override '{text}' must have the form section.key=value")
    if name in (ExperimentConfig.Keys.SEED, ExperimentConfig.Keys.OUTPUT_DIR):
        return {name: parse_scalar(value)}
    section, dot, key = name.partition(".")
    if not dot or not key:
        raise ConfigurationError(f"Override '{text}' must have the form section.key=value")
    return {section: {key: parse_scalar(value)}}


def merge_layers(base: Dict[Text, Any], layer: Dict[Text, Any]) -> Dict[Text, Any]:
    """
    Overlays one configuration layer on another. Sections merge key by key, except that a graph section of a
    different kind replaces the lower one entirely.
    """
    merged = copy.deepcopy(base)
    for name, value in layer.items():
        if isinstance(value, dict):
            current = merged.get(name)
            if not isinstance(current, dict):
                current = {}
            if name == ExperimentConfig.Keys.GRAPH and value.get("kind") not in (None, current.get("kind")):
                current = {}
            current.update(copy.deepcopy(value))
            merged[name] = current
        else:
            merged[name] = copy.deepcopy(value)
    return merged


def ensure_output_dir(path: Text) -> Text:
    """
    Creates the output directory if needed.

    :raises ArtifactWriteError: If the directory cannot be created or written.
    """
    try:
        os.makedirs(path, exist_ok=True)
    except OSError as e:
        raise ArtifactWriteError(f"Unable to create output directory {path}: {e}")
    if not os.access(path, os.W_OK):
        raise ArtifactWriteError(f"Output directory {path} is not writable")
    return path


def command_logger(command: Text, output_dir: Text, debug: bool = False) -> GinKitLogger:
    """
    Creates the log of one command run, gin_kit_<command>_<timestamp>.log in the output directory.
    """
    ensure_output_dir(output_dir)
    timestamp = datetime.datetime.now().strftime(_LOG_TIMESTAMP_TMPL_)
    log_file = os.path.join(output_dir, f"gin_kit_{command.replace('-', '_')}_{timestamp}.log")
    return GinKitLogger(log_file, logging.DEBUG if debug else logging.INFO, logger_name=f"gin_kit_{command}",
                        echo_warnings=True)


def require(path: Text, stage: Text) -> Text:
    """
    Checks that an artifact of an earlier stage exists.

    :raises StageError: Naming the missing file.
    """
    if not os.path.isfile(path):
        raise StageError(path, stage=stage)
    return path


####################################################################
# Class: GeneratedData                                           ###
####################################################################
class GeneratedData(object):
    """
    The artifacts of the generate stage, loaded: ground-truth graph, node partition and the windowed dataset.
    """

    def __init__(self, graph: Graph, partition: NodePartition, dataset: TrajectoryDataset,
                 manifest: DatasetManifest) -> None:
        self.graph: Graph = graph
        self.partition: NodePartition = partition
        self.dataset: TrajectoryDataset = dataset
        self.manifest: DatasetManifest = manifest

    def splits(self) -> Tuple[TrajectoryDataset, TrajectoryDataset, TrajectoryDataset]:
        """
        The (train, test, validation) split, seeded from the manifest so every stage sees the same windows.
        """
        seed = derive_seed(self.manifest.seed, StageSeeds.SPLIT) if self.manifest.seed is not None else None
        return split(self.dataset, self.manifest.split_ratios, seed=seed)

    def views(self) -> Tuple[ObservedView, ObservedView, ObservedView]:
        return tuple(mask_hidden(part, self.partition) for part in self.splits())

    def canonical_truth(self) -> np.ndarray:
        return self.partition.to_canonical(self.graph.adjacency.astype(np.float64))


def generate(config: ExperimentConfig, logger: GinKitLogger) -> GeneratedData:
    """
    Builds the graph, draws the partition, simulates the trajectories and writes graph.csv, partition.json,
    trajectories.csv, dataset_manifest.json and experiment_config.json.
    """
    ensure_output_dir(config.output_dir)
    graph = build_graph(config.graph_spec, seed=derive_seed(config.seed, StageSeeds.GRAPH))
    partition = config.partition_for(graph)

    dynamics = config.dynamics
    data = config.data
    mode = data.get("mode") or dynamics.window_mode
    logger.log_fields("generate_start", n=graph.n, edges=graph.edge_count, hidden=partition.n_hidden,
                      dynamics=dynamics.name, s=data["s"], T=data["T"],
                      windows=data["s"] * window_count(data["T"], data["t"], mode))
    trajectories = simulate(graph, dynamics, data["s"], data["T"], seed=derive_seed(config.seed, StageSeeds.SIMULATE))
    dataset = windowize(trajectories, data["t"], dynamics, mode)
    manifest = DatasetManifest(dynamics, graph.n, data["s"], data["T"], data["t"], mode, config.seed,
                               data.get("split_ratios", list(DEFAULT_SPLIT_RATIOS_)))

    write_edge_list(graph, config.path(GRAPH_FILE_))
    write_partition(partition, config.path(PARTITION_FILE_))
    write_trajectories(trajectories, config.path(TRAJECTORIES_FILE_), dynamics)
    manifest.write(config.path(DATASET_MANIFEST_FILE_))
    config.write()
    logger.log_fields("generate", windows=len(dataset), output_dir=config.output_dir)
    return GeneratedData(graph, partition, dataset, manifest)


def load_generated(output_dir: Text) -> GeneratedData:
    """
    Loads the artifacts written by generate().

    :raises StageError: If an artifact is missing.
    """
    stage = "generate"
    manifest = DatasetManifest.load(require(os.path.join(output_dir, DATASET_MANIFEST_FILE_), stage))
    graph = load_edge_list(require(os.path.join(output_dir, GRAPH_FILE_), stage), n=manifest.n)
    partition = load_partition(require(os.path.join(output_dir, PARTITION_FILE_), stage))
    trajectories = load_trajectories(require(os.path.join(output_dir, TRAJECTORIES_FILE_), stage))
    dataset = windowize(trajectories, manifest.t, manifest.dynamics, manifest.mode)
    return GeneratedData(graph, partition, dataset, manifest)


def train_model(config: ExperimentConfig, logger: GinKitLogger,
                progress: Optional[ProgressIndicator] = None) -> BlindResult:
    """
    Trains the configured task on the generated data and writes the checkpoint, the model manifest, train_log.csv
    and edge_probabilities.csv (original node order).
    """
    data = load_generated(config.output_dir)
    train_view, _, validation_view = data.views()
    train_config = config.train_config

    known_block = None
    if train_config.task == TaskValues.COMPLETE_PARTIAL:
        n_observed = data.partition.n_observed
        known_block = data.canonical_truth()[:n_observed, :n_observed]

    logger.log_fields("train_start", task=train_config.task, windows=len(train_view), epochs=train_config.epochs,
                      seed=train_config.seed)
    result = run_task(train_config, train_view, data.partition, known_block,
                      validation_view if len(validation_view) > 0 else None, logger, progress)

    result.params.save(config.output_dir, step=len(result.log))
    result.log.write_csv(config.path(TRAIN_LOG_FILE_))
    if result.reconstruction_log is not None:
        result.reconstruction_log.write_csv(config.path(RECONSTRUCTION_LOG_FILE_))
    write_matrix(data.partition.from_canonical(result.combined_probabilities()), config.path(EDGE_PROBABILITIES_FILE_))
    config.write()
    return result


def evaluate_model(config: ExperimentConfig, logger: GinKitLogger,
                   with_matching: Optional[bool] = None) -> EvalReport:
    """
    Matches and scores a trained model and writes eval_report.json, eval_report.html, contrast_matrix.csv and
    structure_table.csv.

    :param with_matching: Overrides the configured matching switch; False skips seeded graph matching.
    """
    data = load_generated(config.output_dir)
    params = GinParameters.load(config.output_dir)
    probabilities = data.partition.to_canonical(load_matrix(require(config.path(EDGE_PROBABILITIES_FILE_), "train")))
    train_view, test_view, _ = data.views()

    report = evaluate_parameters(params, data.graph, test_view=test_view, train_view=train_view,
                                 with_matching=config.with_matching if with_matching is None else with_matching,
                                 threshold=config.threshold, probabilities=probabilities,
                                 match_settings=config.match_settings, logger=logger)
    report.write_json(config.path(EVAL_REPORT_JSON_FILE_))
    report.write_html(config.path(EVAL_REPORT_HTML_FILE_))
    report.completion.write_contrast_csv(config.path(CONTRAST_MATRIX_FILE_))
    report.comparison.write_csv(config.path(STRUCTURE_TABLE_FILE_))
    return report


def baseline_table(config: ExperimentConfig, logger: GinKitLogger) -> Dict[Text, float]:
    """
    Scores the observed nodes of the training windows with every correlation baseline and writes baseline_auc.csv.
    Mutual information reports the median AUC over training trajectories; partial correlation is skipped for binary
    states.
    """
    data = load_generated(config.output_dir)
    train_view, _, _ = data.views()
    observed = train_view.observed_dataset()
    n_observed = data.partition.n_observed
    truth = data.canonical_truth()[:n_observed, :n_observed]

    results: Dict[Text, float] = {}
    for name in BaselineValues.ALL:
        if name == BaselineValues.PCORR and observed.kind == DynamicsValues.BINARY:
            logger.log_fields("baseline_skipped", baseline=name, reason="binary states")
            continue
        results[name] = score_baseline(name, observed, truth, bins=config.mi_bins, ridge=config.pcorr_ridge)
        logger.log_fields("baseline", baseline=name, auc=results[name])
    write_baseline_csv(results, config.path(BASELINE_FILE_))
    return results


def match_files(truth_path: Text, inferred_path: Text, partition_path: Text, config: ExperimentConfig,
                logger: GinKitLogger) -> MatchResult:
    """
    Aligns the hidden nodes of an inferred adjacency with a ground truth and writes match.json. Both adjacencies may
    be edge lists or matrix files in original node order.
    """
    stage = "match"
    partition = load_partition(require(partition_path, stage))
    truth = load_adjacency_file(require(truth_path, stage), n=partition.n)
    inferred = load_adjacency_file(require(inferred_path, stage), n=partition.n)

    problem = MatchProblem(partition.to_canonical(truth), partition.to_canonical(inferred), partition.n_observed)
    result = match(problem, logger=logger, **config.match_settings)
    logger.log_fields("match", objective=result.objective, iterations=result.iterations, converged=result.converged)

    record = result.as_dict()
    hidden = partition.hidden
    # truth node -> inferred node it was aligned with
    record["pairs"] = [[hidden[k], hidden[int(source)]] for k, source in enumerate(result.permutation)]
    ensure_output_dir(config.output_dir)
    with open(config.path(MATCH_FILE_), "w", encoding="utf-8") as f:
        json.dump(record, f, indent=2)
    return result


def sweep_fractions(config: ExperimentConfig, logger: GinKitLogger) -> List[SweepRow]:
    """
    Runs the missing-fraction sweep on the generated data and writes sweep.csv.
    """
    data = load_generated(config.output_dir)
    train_set, test_set, _ = data.splits()
    rows = missing_fraction_sweep(config.train_config, data.graph, train_set, config.fractions, test_set=test_set,
                                  seed=derive_seed(config.seed, StageSeeds.PARTITION),
                                  match_settings=config.match_settings, logger=logger)
    write_sweep_csv(rows, config.path(SWEEP_FILE_))
    logger.log_fields("sweep", fractions=len(rows), auc_slope=auc_slope(rows))
    return rows


def summarize(reports: Sequence[EvalReport]) -> List[List]:
    """
    Mean and standard deviation of every summary metric over repeated runs; undefined scores are left out.
    """
    rows: List[List] = []
    for metric in SUMMARY_METRICS_:
        values = np.array([getattr(report, metric) for report in reports], dtype=np.float64)
        finite = values[np.isfinite(values)]
        mean = float(np.mean(finite)) if finite.size else float("nan")
        std = float(np.std(finite)) if finite.size else float("nan")
        rows.append([metric, mean, std, int(finite.size), ";".join(repr(float(v)) for v in values)])
    return rows


def write_summary_csv(reports: Sequence[EvalReport], path: Text) -> Text:
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(SUMMARY_HEADER_)
        for metric, mean, std, runs, values in summarize(reports):
            writer.writerow([metric, repr(mean), repr(std), runs, values])
    return path


def run_all(config: ExperimentConfig, logger: GinKitLogger, with_matching: Optional[bool] = None,
            progress: Optional[ProgressIndicator] = None) -> List[EvalReport]:
    """
    Runs generate, train and evaluate (and the baselines for reconstruction) once per repetition, then writes
    summary.csv into the top-level output directory.
    """
    config.write()
    reports: List[EvalReport] = []
    for repeat in range(config.repeats):
        run_config = config.for_repeat(repeat)
        logger.log_fields("run_start", repeat=repeat, seed=run_config.seed, output_dir=run_config.output_dir)
        generate(run_config, logger)
        train_model(run_config, logger, progress)
        reports.append(evaluate_model(run_config, logger, with_matching))
        if run_config.task == TaskValues.RECONSTRUCT:
            baseline_table(run_config, logger)
        logger.log_fields("run", repeat=repeat, headline=reports[-1].headline())
    write_summary_csv(reports, config.path(SUMMARY_FILE_))
    return reports
