####################################################################
# ### command.py                                                 ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
import inspect

from abc import ABC, abstractmethod
from typing import List, Text, Tuple


class Command(ABC):
    """
    Abstract Base Class for implementing a gin-kit subcommand (generate, train, evaluate, ...) that the launcher
    script can discover and dispatch to.
    """

    @staticmethod
    @abstractmethod
    def run(argv: List) -> None:
        """
        Abstract method used to invoke the subcommand from the launcher script.

        :param argv: The arguments passed to the subcommand at execution.
        """
        pass

    @staticmethod
    @abstractmethod
    def command_name() -> Text:
        """
        Abstract method used by the launcher script to get the subcommand's command-line name.

        :return: The displayable command name.
        """
        pass

    @staticmethod
    @abstractmethod
    def command_desc() -> Text:
        """
        Abstract method used by the launcher script to get the subcommand's one-line description.

        :return: The displayable command description.
        """
        pass

    @classmethod
    def registered(cls) -> List[Tuple[Text, Text]]:
        """
        Returns the name and description of every concrete Command implementation that has been imported, sorted by
        command name for display in the launcher usage.

        :return: A list of (command name, command description) tuples.
        """
        commands: List[Tuple[Text, Text]] = list()
        for subclass in cls.__subclasses__():
            if not inspect.isabstract(subclass):
                commands.append((subclass.command_name(), subclass.command_desc()))

        return sorted(commands)
