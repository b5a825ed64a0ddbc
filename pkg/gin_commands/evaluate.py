####################################################################
# ### evaluate.py                                                ###
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

from gin_commands.experiment import CONTRAST_MATRIX_FILE_, EVAL_REPORT_HTML_FILE_, EVAL_REPORT_JSON_FILE_, \
    STRUCTURE_TABLE_FILE_, command_logger, evaluate_model
from gin_commands.options import CommandArgumentParser, SUCCESS_RC_, add_experiment_options, add_no_match_option, \
    exit_with_error, print_artifacts, resolve_options


####################################################################
# Class: EvaluateCommand                                         ###
####################################################################
class EvaluateCommand(Command):
    """
    Command implementation for the evaluate command, registered with the launcher script.
    """

    @staticmethod
    def run(argv: List):
        main(argv)

    @staticmethod
    def command_name() -> Text:
        return os.path.splitext(os.path.basename(__file__))[0].replace("_", "-")

    @staticmethod
    def command_desc() -> Text:
        return "Match hidden nodes and score a trained model against the ground truth."


####################################################################
# main()                                                         ###
####################################################################
def main(argv: List):
    """
    Implementation of the main script execution for the evaluate command.

    :param argv: The parameters passed to the script at execution.
    """
    arg_parser = CommandArgumentParser(prog=f"gin-kit.py {EvaluateCommand.command_name()}",
                                       description=EvaluateCommand.command_desc())
    add_experiment_options(arg_parser)
    add_no_match_option(arg_parser)
    args = arg_parser.parse_args(argv)

    try:
        config = resolve_options(args)
        logger = command_logger(EvaluateCommand.command_name(), config.output_dir, args.debug)
        print()
        with ProgressIndicator(enter_message="Evaluating model"):
            report = evaluate_model(config, logger, with_matching=args.with_matching)
        logger.close()
    except GinKitError as e:
        exit_with_error(e)

    print()
    print(report.headline())
    print_artifacts(config.output_dir, [EVAL_REPORT_JSON_FILE_, EVAL_REPORT_HTML_FILE_, CONTRAST_MATRIX_FILE_,
                                        STRUCTURE_TABLE_FILE_])
    sys.exit(SUCCESS_RC_)


####################################################################
# __main__                                                       ###
####################################################################
if __name__ == "__main__":
    main(sys.argv[1:])
