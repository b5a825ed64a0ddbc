####################################################################
# ### logging.py                                                 ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
import datetime
import logging
import sys

from typing import Any, Optional, Text

_LOGGER_TIMESTAMP_TMPL_ = "%Y-%m-%dT%H_%M_%S"
_LOG_FORMAT_ = "%(asctime)s - %(filename)s[line:%(lineno)d] - %(levelname)s: %(message)s"


class GinKitLogger(object):
    """
    The GinKitLogger class wraps a uniquely named :code:`logging.Logger` for one gin-kit command run. Records go to a
    log file in the run's output directory and, optionally, warnings and errors are echoed to stderr.

    Example Usage:
        gin_logger = GinKitLogger(log_path)
        logger = gin_logger.get_logger()
        gin_logger.log_fields("epoch", epoch=3, train_loss=0.012)
    """

    def __init__(self, log_file: Optional[Text] = None, logging_level: int = logging.INFO,
                 logger_name: Text = "gin_kit", echo_warnings: bool = False):
        """
        Constructor for the GinKitLogger class.

        :param log_file: The log file name with full path, or None to attach no file handler (records are dropped unless
                         echo_warnings is set).
        :param logging_level: One of the predefined levels - DEBUG, INFO, WARN, ERROR, CRITICAL.
        :param logger_name: Prefix of the logger name; a timestamp is appended so concurrent runs never share handlers.
        :param echo_warnings: If True, WARNING and above are also written to stderr.
        """
        logger_timestamp = datetime.datetime.now().strftime(_LOGGER_TIMESTAMP_TMPL_)
        self.name = logger_name
        self.logger_name = f"{logger_name}{logger_timestamp}.{id(self)}"
        self.logger = logging.getLogger(self.logger_name)
        self.logger.propagate = False
        self.log_file = log_file
        self.logging_level = logging_level
        self.logger.setLevel(self.logging_level)

        formatter = logging.Formatter(_LOG_FORMAT_)

        if log_file:
            self.f_handler = logging.FileHandler(self.log_file, encoding="utf-8")
            self.f_handler.setLevel(self.logging_level)
            self.f_handler.setFormatter(formatter)
            self.logger.addHandler(self.f_handler)

        if echo_warnings:
            console = logging.StreamHandler(sys.stderr)
            console.setLevel(logging.WARNING)
            console.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
            self.logger.addHandler(console)

        if not self.logger.handlers:
            self.logger.addHandler(logging.NullHandler())

    def get_logger(self) -> logging.Logger:
        """
        Return the wrapped Logger.
        """
        return self.logger

    def get_logger_name(self) -> Text:
        """
        Return the unique logger name.
        """
        return self.logger_name

    def get_log_file(self) -> Optional[Text]:
        """
        Return the log file name.
        """
        return self.log_file

    def get_log_level(self) -> int:
        """
        Return the logging level.
        """
        return self.logging_level

    def log_fields(self, event: Text, level: int = logging.INFO, **fields: Any) -> None:
        """
        Writes one record of the form :code:`event key=value key=value` so numeric traces (losses, objectives) can be
        filtered out of the log with grep.

        :param event: Short event name, e.g. "epoch" or "sgm".
        :param level: Logging level for the record.
        :param fields: Values to render; floats are written with 6 significant digits.
        """
        rendered = [event]
        for key, value in fields.items():
            if isinstance(value, float):
                rendered.append(f"{key}={value:.6g}")
            else:
                rendered.append(f"{key}={value}")

        self.logger.log(level, " ".join(rendered))

    def close(self) -> None:
        """
        Closes and detaches every handler so the log file can be moved or removed.
        """
        for handler in list(self.logger.handlers):
            handler.close()
            self.logger.removeHandler(handler)


_null_logger: Optional[GinKitLogger] = None


def null_logger() -> GinKitLogger:
    """
    Returns the shared GinKitLogger without handlers, used when library code is called without a configured logger.
    """
    global _null_logger
    if _null_logger is None:
        _null_logger = GinKitLogger(log_file=None, logger_name="gin_kit_null")

    return _null_logger
