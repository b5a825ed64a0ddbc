####################################################################
# ### match.py                                                   ###
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
from gin_kit_library.sgm.matching import describe

from gin_commands.experiment import GRAPH_FILE_, MATCH_FILE_, PARTITION_FILE_, command_logger, match_files
from gin_commands.options import CommandArgumentParser, SUCCESS_RC_, add_experiment_options, exit_with_error, \
    print_artifacts, resolve_options


####################################################################
# Class: MatchCommand                                            ###
####################################################################
class MatchCommand(Command):
    """
    Command implementation for the match command, registered with the launcher script.
    """

    @staticmethod
    def run(argv: List):
        main(argv)

    @staticmethod
    def command_name() -> Text:
        return os.path.splitext(os.path.basename(__file__))[0].replace("_", "-")

    @staticmethod
    def command_desc() -> Text:
        return "Align the hidden nodes of an inferred network with a ground truth by seeded graph matching."


####################################################################
# main()                                                         ###
####################################################################
def main(argv: List):
    """
    Implementation of the main script execution for the match command.

    :param argv: The parameters passed to the script at execution.
    """
    arg_parser = CommandArgumentParser(prog=f"gin-kit.py {MatchCommand.command_name()}",
                                       description=MatchCommand.command_desc())
    add_experiment_options(arg_parser)
    # truth
    arg_parser.add_argument(
        "--truth", type=Text, default=None, dest="truth",
        help=f"Ground-truth edge list or matrix. Defaults to \"{GRAPH_FILE_}\" in the output directory.")
    # inferred
    arg_parser.add_argument(
        "--inferred", type=Text, required=True, dest="inferred",
        help="Inferred edge list or probability matrix, original node order.")
    # partition
    arg_parser.add_argument(
        "--partition", type=Text, default=None, dest="partition",
        help=f"Node partition. Defaults to \"{PARTITION_FILE_}\" in the output directory.")
    args = arg_parser.parse_args(argv)

    try:
        config = resolve_options(args)
        truth = args.truth or config.path(GRAPH_FILE_)
        partition = args.partition or config.path(PARTITION_FILE_)
        logger = command_logger(MatchCommand.command_name(), config.output_dir, args.debug)
        result = match_files(truth, args.inferred, partition, config, logger)
        logger.close()
    except GinKitError as e:
        exit_with_error(e)

    print()
    print(describe(result))
    print_artifacts(config.output_dir, [MATCH_FILE_])
    sys.exit(SUCCESS_RC_)


####################################################################
# __main__                                                       ###
####################################################################
if __name__ == "__main__":
    main(sys.argv[1:])
