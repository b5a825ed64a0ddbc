####################################################################
# ### sweep.py                                                   ###
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
from gin_kit_library.trainer.sweep import auc_slope

from gin_commands.experiment import SWEEP_FILE_, command_logger, sweep_fractions
from gin_commands.options import CommandArgumentParser, SUCCESS_RC_, add_experiment_options, add_fractions_option, \
    exit_with_error, print_artifacts, resolve_options


####################################################################
# Class: SweepCommand                                            ###
####################################################################
class SweepCommand(Command):
    """
    Command implementation for the sweep command, registered with the launcher script.
    """

    @staticmethod
    def run(argv: List):
        main(argv)

    @staticmethod
    def command_name() -> Text:
        return os.path.splitext(os.path.basename(__file__))[0].replace("_", "-")

    @staticmethod
    def command_desc() -> Text:
        return "Repeat partial-structure completion over a range of hidden-node fractions."


####################################################################
# main()                                                         ###
####################################################################
def main(argv: List):
    """
    Implementation of the main script execution for the sweep command. Worker processes are capped by the
    GIN_THREADS environment variable.

    :param argv: The parameters passed to the script at execution.
    """
    arg_parser = CommandArgumentParser(prog=f"gin-kit.py {SweepCommand.command_name()}",
                                       description=SweepCommand.command_desc())
    add_experiment_options(arg_parser)
    add_fractions_option(arg_parser)
    args = arg_parser.parse_args(argv)

    try:
        config = resolve_options(args)
        logger = command_logger(SweepCommand.command_name(), config.output_dir, args.debug)
        print()
        with ProgressIndicator(enter_message=f"Sweeping {len(config.fractions)} hidden fractions"):
            rows = sweep_fractions(config, logger)
        logger.close()
    except GinKitError as e:
        exit_with_error(e)

    print()
    for row in rows:
        print(f"    fraction {row.fraction:.2f}  hidden {row.n_hidden:>4}  unobs AUC {row.unobs_auc:.4f}")
    print(f"    AUC slope per unit fraction: {auc_slope(rows):.4f}")
    print_artifacts(config.output_dir, [SWEEP_FILE_])
    sys.exit(SUCCESS_RC_)


####################################################################
# __main__                                                       ###
####################################################################
if __name__ == "__main__":
    main(sys.argv[1:])
