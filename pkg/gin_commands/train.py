####################################################################
# ### train.py                                                   ###
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
from gin_kit_library.diffengine.checkpoint import manifest_path_for
from gin_kit_library.errors import GinKitError
from gin_kit_library.gin_model.parameters import CHECKPOINT_FILE_, MODEL_MANIFEST_FILE_
from gin_kit_library.lrp_indicator import ProgressIndicator

from gin_commands.experiment import EDGE_PROBABILITIES_FILE_, RECONSTRUCTION_LOG_FILE_, TRAIN_LOG_FILE_, \
    command_logger, train_model
from gin_commands.options import CommandArgumentParser, SUCCESS_RC_, add_experiment_options, add_task_option, \
    exit_with_error, print_artifacts, resolve_options


####################################################################
# Class: TrainCommand                                            ###
####################################################################
class TrainCommand(Command):
    """
    Command implementation for the train command, registered with the launcher script.
    """

    @staticmethod
    def run(argv: List):
        main(argv)

    @staticmethod
    def command_name() -> Text:
        return os.path.splitext(os.path.basename(__file__))[0].replace("_", "-")

    @staticmethod
    def command_desc() -> Text:
        return "Train the network generator, initial states and dynamics learner on a generated dataset."


####################################################################
# main()                                                         ###
####################################################################
def main(argv: List):
    """
    Implementation of the main script execution for the train command.

    :param argv: The parameters passed to the script at execution.
    """
    arg_parser = CommandArgumentParser(prog=f"gin-kit.py {TrainCommand.command_name()}",
                                       description=TrainCommand.command_desc())
    add_experiment_options(arg_parser)
    add_task_option(arg_parser)
    args = arg_parser.parse_args(argv)

    try:
        config = resolve_options(args)
        logger = command_logger(TrainCommand.command_name(), config.output_dir, args.debug)
        print()
        with ProgressIndicator(enter_message=f"Training ({config.task})") as progress:
            result = train_model(config, logger, progress)
        logger.close()
    except GinKitError as e:
        exit_with_error(e)

    artifacts = [CHECKPOINT_FILE_, manifest_path_for(CHECKPOINT_FILE_), MODEL_MANIFEST_FILE_, TRAIN_LOG_FILE_,
                 EDGE_PROBABILITIES_FILE_]
    if result.reconstruction_log is not None:
        artifacts.append(RECONSTRUCTION_LOG_FILE_)
    print()
    print(f"{len(result.log)} epochs, final training loss {result.log.train_losses()[-1]:.6g}")
    print_artifacts(config.output_dir, artifacts)
    sys.exit(SUCCESS_RC_)


####################################################################
# __main__                                                       ###
####################################################################
if __name__ == "__main__":
    main(sys.argv[1:])
