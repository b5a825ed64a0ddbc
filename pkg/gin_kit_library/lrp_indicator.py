####################################################################
# ### lrp_indicator.py                                           ###
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

from typing import Optional, Text, TextIO


class ProgressIndicator:
    """
    Context manager used to show the progress of a long-running stage (dataset generation, training, sweeps). The
    :code:`enter_message` is displayed on entry. While the stage runs, callers push status text through
    :code:`update()`; on a terminal the status replaces the previous one on the same line, otherwise updates are
    silent so redirected output stays clean. Upon exit, the line is padded with the given :code:`character` up to
    :code:`line_length` and the :code:`exit_message` is displayed.
    """

    def __init__(self, enter_message: Text, character: Text = ".", line_length: int = 50,
                 stream: Optional[TextIO] = None):
        """
        Constructs a new :code:`ProgressIndicator` instance.

        :param enter_message: The message to display when entering the context manager.
        :param character: The padding character used between the message and the exit message.
        :param line_length: The total length of the padded message.
        :param stream: The stream to write to. Defaults to stdout.
        """
        self._enter_message: Text = enter_message
        self._indicator_char: Text = character
        self._line_length: int = line_length
        self._stream: TextIO = stream if stream is not None else sys.stdout
        self._interactive: bool = self._stream.isatty()
        self._last_status_length: int = 0
        self.update_count: int = 0
        # exit message can be set before context exits
        self.exit_message: Text = "DONE"

    def __enter__(self):
        """
        Displays the :code:`enter_message`.

        :return: This ProgressIndicator instance.
        """
        if self._interactive:
            # hide the cursor
            self._stream.write("\033[?25l")
            self._stream.write(self._enter_message)
        else:
            self._stream.write(self._enter_message.ljust(self._line_length, self._indicator_char))

        self._stream.flush()
        return self

    def update(self, status: Text) -> None:
        """
        Replaces the status shown after the enter message.

        :param status: Short status text, e.g. "epoch 12/500 loss 0.0123".
        """
        self.update_count += 1
        if not self._interactive:
            return

        line = f"{self._enter_message} [{status}]"
        padding = " " * max(0, self._last_status_length - len(line))
        self._stream.write(f"\r{line}{padding}")
        self._stream.flush()
        self._last_status_length = len(line)

    def __exit__(self, exc_type, exc_val, exc_tb):
        """
        Closes the indicator and displays the configured :code:`exit_message`, or "FAILED" if the stage raised.

        :param exc_type: The exception type if an error was raised while executing the code block.
        :param exc_val: The exception value if an error was raised while executing the code block.
        :param exc_tb: The traceback if an error was raised while executing the code block.
        """
        if exc_type is not None:
            self.exit_message = "FAILED"

        if self._interactive:
            blank = " " * self._last_status_length
            self._stream.write(f"\r{blank}\r{self._enter_message.ljust(self._line_length, self._indicator_char)}")

        self._stream.write(f"{self.exit_message}\n")

        if self._interactive:
            # show the cursor again
            self._stream.write("\033[?25h")
        self._stream.flush()
