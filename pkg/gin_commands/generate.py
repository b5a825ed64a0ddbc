####################################################################
# ### generate.py                                                ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
import os
import sys

from typing import List, Text

from gin_kit_library.command import Command
from gin_kit_library.errors import GinKitError
from gin_kit_library.lrp_indicator import ProgressIndicator

from gin_commands.experiment import CONFIG_FILE_, DATASET_MANIFEST_FILE_, GRAPH_FILE_, PARTITION_FILE_, \
    TRAJECTORIES_FILE_, command_logger, generate
from gin_commands.options import CommandArgumentParser, SUCCESS_RC_, add_experiment_options, add_task_option, \
    exit_with_error, print_artifacts, resolve_options


####################################################################
# Class: GenerateCommand                                         ###
####################################################################
class GenerateCommand(Command):
    """
    Command implementation for the generate command, registered with the launcher script.
    """

    @staticmethod
    def run(argv: List):
        main(argv)

    @staticmethod
    def command_name() -> Text:
        return os.path.splitext(os.path.basename(__file__))[0].replace("_", "-")

    @staticmethod
    def command_desc() -> Text:
        return "Build a network, hide nodes and simulate the trajectory dataset."


####################################################################
# main()                                                         ###
####################################################################
def main(argv: List):
    """
    Implementation of the main script execution for the generate command.

    :param argv: The parameters passed to the script at execution.
    """
    arg_parser = CommandArgumentParser(prog=f"gin-kit.py {GenerateCommand.command_name()}",
                                       description=GenerateCommand.command_desc())
    add_experiment_options(arg_parser)
    add_task_option(arg_parser)
    args = arg_parser.parse_args(argv)

    try:
        config = resolve_options(args)
        logger = command_logger(GenerateCommand.command_name(), config.output_dir, args.debug)
        print()
        with ProgressIndicator(enter_message="Generating dataset"):
            data = generate(config, logger)
        logger.close()
    except GinKitError as e:
        exit_with_error(e)

    print()
    print(f"{data.graph.n} nodes, {data.graph.edge_count} edges, {data.partition.n_hidden} hidden, "
          f"{len(data.dataset)} windows")
    print_artifacts(config.output_dir, [CONFIG_FILE_, GRAPH_FILE_, PARTITION_FILE_, TRAJECTORIES_FILE_,
                                        DATASET_MANIFEST_FILE_])
    sys.exit(SUCCESS_RC_)


####################################################################
# __main__                                                       ###
####################################################################
if __name__ == "__main__":
    main(sys.argv[1:])
