####################################################################
# ### run_all.py                                                 ###
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

from gin_commands.experiment import SUMMARY_FILE_, command_logger, run_all
from gin_commands.options import CommandArgumentParser, SUCCESS_RC_, add_experiment_options, add_no_match_option, \
    add_task_option, exit_with_error, print_artifacts, resolve_options


####################################################################
# Class: RunAllCommand                                           ###
####################################################################
class RunAllCommand(Command):
    """
    Command implementation for the run-all command, registered with the launcher script.
    """

    @staticmethod
    def run(argv: List):
        main(argv)

    @staticmethod
    def command_name() -> Text:
        return os.path.splitext(os.path.basename(__file__))[0].replace("_", "-")

    @staticmethod
    def command_desc() -> Text:
        return "Generate, train and evaluate in one pipeline, optionally repeated over consecutive seeds."


####################################################################
# main()                                                         ###
####################################################################
def main(argv: List):
    """
    Implementation of the main script execution for the run-all command.

    :param argv: The parameters passed to the script at execution.
    """
    arg_parser = CommandArgumentParser(prog=f"gin-kit.py {RunAllCommand.command_name()}",
                                       description=RunAllCommand.command_desc())
    add_experiment_options(arg_parser)
    add_task_option(arg_parser)
    add_no_match_option(arg_parser)
    # repeats
    arg_parser.add_argument(
        "-r", "--repeats", type=int, default=None, dest="repeats",
        help="Number of runs over consecutive seeds; each run gets its own sub-directory.")
    args = arg_parser.parse_args(argv)
    if args.repeats is not None:
        args.overrides.append(f"evaluation.repeats={args.repeats}")

    try:
        config = resolve_options(args)
        logger = command_logger(RunAllCommand.command_name(), config.output_dir, args.debug)
        print()
        with ProgressIndicator(enter_message=f"Running {config.task} x{config.repeats}") as progress:
            reports = run_all(config, logger, with_matching=args.with_matching, progress=progress)
        logger.close()
    except GinKitError as e:
        exit_with_error(e)

    print()
    for repeat, report in enumerate(reports):
        print(f"    run {repeat}: {report.headline()}")
    print_artifacts(config.output_dir, [SUMMARY_FILE_])
    sys.exit(SUCCESS_RC_)


####################################################################
# __main__                                                       ###
####################################################################
if __name__ == "__main__":
    main(sys.argv[1:])
