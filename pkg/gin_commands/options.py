####################################################################
# ### options.py                                                 ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
import sys

from argparse import ArgumentParser, Namespace
from typing import List, NoReturn, Text

from gin_kit_library.errors import GinKitError
from gin_kit_library.trainer.config import TaskValues

from gin_commands.experiment import ExperimentConfig, available_presets

# command line return codes #
SUCCESS_RC_ = 0
BAD_OPT_RC_ = 1


def add_experiment_options(arg_parser: ArgumentParser) -> None:
    """
    Adds the configuration options shared by every command.
    """
    # config
    arg_parser.add_argument(
        "-c", "--config", type=Text, default=None, dest="config",
        help="YAML or JSON experiment configuration file.")
    # preset
    arg_parser.add_argument(
        "--preset", type=Text, default=None, dest="preset", choices=available_presets() or None,
        help="Bundled experiment preset applied beneath the configuration file.")
    # seed
    arg_parser.add_argument(
        "-s", "--seed", type=int, default=None, dest="seed",
        help="Global experiment seed; every random stage derives its own seed from it.")
    # out
    arg_parser.add_argument(
        "-o", "--out", type=Text, default=None, dest="output_dir",
        help="Directory holding the artifacts of every stage.")
    # set
    arg_parser.add_argument(
        "--set", type=Text, default=[], action="append", dest="overrides", metavar="SECTION.KEY=VALUE",
        help="Overrides one configuration value. May be repeated.")
    # debug
    arg_parser.add_argument(
        "-d", "--debug", action="store_true", dest="debug",
        help="Write DEBUG records to the log file.")


def add_task_option(arg_parser: ArgumentParser) -> None:
    arg_parser.add_argument(
        "--task", type=Text, default=None, dest="task", choices=TaskValues.ALL,
        help="Inference task to run.")


def add_no_match_option(arg_parser: ArgumentParser) -> None:
    arg_parser.add_argument(
        "--no-match", action="store_false", dest="with_matching", default=None,
        help="Score hidden nodes in their learned order, without seeded graph matching.")


def add_fractions_option(arg_parser: ArgumentParser) -> None:
    arg_parser.add_argument(
        "--fractions", type=float, nargs="+", default=None, dest="fractions",
        help="Hidden-node fractions for the missing-fraction sweep, each strictly between 0 and 1.")


def resolve_options(args: Namespace) -> ExperimentConfig:
    """
    Resolves the experiment configuration from parsed command-line options.
    """
    return ExperimentConfig.resolve(preset=args.preset, config_path=args.config, seed=args.seed,
                                    output_dir=args.output_dir, task=getattr(args, "task", None),
                                    fractions=getattr(args, "fractions", None), overrides=args.overrides)


def exit_with_error(e: GinKitError) -> NoReturn:
    """
    Prints the error to stderr and exits with the error's return code.
    """
    print()
    print(f"ERROR: {e}", file=sys.stderr)
    print()
    sys.exit(e.exit_code)


def print_artifacts(output_dir: Text, names: List[Text]) -> None:
    print()
    print(f"Artifacts written to: {output_dir}")
    for name in names:
        print(f"    {name}")
    print()


####################################################################
# Class: CommandArgumentParser                                   ###
####################################################################
class CommandArgumentParser(ArgumentParser):
    """
    ArgumentParser that reports usage errors with the bad option return code.
    """

    def error(self, message: Text) -> NoReturn:
        self.print_usage(sys.stderr)
        print(f"ERROR: {message}", file=sys.stderr)
        sys.exit(BAD_OPT_RC_)
