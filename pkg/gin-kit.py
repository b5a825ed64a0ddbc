####################################################################
# ### gin-kit.py                                                 ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
import importlib
import inspect
import os
import pkgutil
import sys

from typing import List, Optional, Type

from gin_kit_library.command import Command

# package holding one module per command #
_COMMANDS_PACKAGE_ = "gin_commands"

# command line options #
_HELP_OPTS_ = ("-h", "--help")

# return codes #
_SUCCESS_RC_ = 0
_BAD_OPT_RC_ = 1


def find_command(command_name: str) -> Optional[Type[Command]]:
    """
    Looks up the Command implemented by the gin_commands module of the given name. Dashes in command names map to
    underscores in module names; only classes defined by the module itself count, so helper modules such as
    experiment resolve to no command.

    :param command_name: The command name as typed on the command line.
    :return: The Command class, or None if no module implements the command.
    """
    module_name = f"{_COMMANDS_PACKAGE_}.{command_name.replace('-', '_')}"
    try:
        module = importlib.import_module(module_name)
    except ModuleNotFoundError as e:
        if e.name != module_name:
            raise
        return None

    for _, member in inspect.getmembers(module, inspect.isclass):
        if member.__module__ == module.__name__ and issubclass(member, Command) and not inspect.isabstract(member):
            return member
    return None


################
#     Main     #
################
def main(argv: List):
    """
    The main executable method for the gin-kit launcher script.

    :param argv: The list of arguments passed at invocation.
    """
    if not argv:
        _fail("A command must be provided.")

    command_name = argv[0]
    if command_name in _HELP_OPTS_:
        usage(_SUCCESS_RC_)

    command = find_command(command_name)
    if command is None:
        _fail(f"Command [{command_name}] not found.")

    command.run(argv[1:])


def _fail(message: str):
    print()
    print(f"ERROR: {message}")
    usage(_BAD_OPT_RC_)


#################
#     Usage     #
#################
def usage(exit_code: int):
    """
    Prints the usage statement for the gin-kit launcher script, listing every command module, and exits with the
    provided exit_code.

    :param exit_code: The code to return upon exit.
    """
    package = importlib.import_module(_COMMANDS_PACKAGE_)
    for module in pkgutil.iter_modules(package.__path__):
        if not module.ispkg:
            importlib.import_module(f"{_COMMANDS_PACKAGE_}.{module.name}")

    print()
    print(f"Usage: {os.path.basename(__file__)} <command> [options]")
    print()
    print("Commands:")
    for name, description in Command.registered():
        print(f"    {name:<30} {description}")
    print(f"    {', '.join(_HELP_OPTS_):<30} Display usage for gin-kit.")
    print()

    sys.exit(exit_code)


##################
#    __main__    #
##################
if __name__ == "__main__":
    main(sys.argv[1:])
