####################################################################
# ### errors.py                                                  ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
from typing import Optional, Text

# exit-code classes shared by every command #
CONFIG_ERROR_RC_ = 2
IO_ERROR_RC_ = 3
NUMERIC_ERROR_RC_ = 4


class GinKitError(RuntimeError):
    """
    Base class for all errors raised by the gin-kit library. The :code:`exit_code` class attribute tells the launcher
    which return code to use when the error stops a command.
    """
    exit_code: int = CONFIG_ERROR_RC_

    def __init__(self, message):
        super().__init__(message)


class ParameterError(GinKitError):
    """
    Exception raised when an operation is called with a parameter outside its documented range.
    """

    def __init__(self, message):
        super().__init__(message)


class StateError(GinKitError):
    """
    Exception raised when a node-state matrix violates the invariants of its dynamics (one-hot rows for Voter, values
    in [0, 1] for CMN).
    """
    exit_code = NUMERIC_ERROR_RC_

    def __init__(self, message):
        super().__init__(message)


class ShapeError(GinKitError):
    """
    Exception raised when array operands have incompatible shapes. Both shapes are named in the message.
    """
    exit_code = NUMERIC_ERROR_RC_

    def __init__(self, message):
        super().__init__(message)


class ContractError(GinKitError):
    """
    Exception raised when a caller breaks a usage contract (for example a backward pass from a non-scalar value).
    """
    exit_code = NUMERIC_ERROR_RC_

    def __init__(self, message):
        super().__init__(message)


class EdgeListParseError(GinKitError):
    """
    Exception raised when an edge-list or matrix file contains a malformed line.
    """
    exit_code = IO_ERROR_RC_

    def __init__(self, message, line_number: Optional[int] = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class NodeRangeError(GinKitError):
    """
    Exception raised when a node id lies outside the declared node range.
    """
    exit_code = IO_ERROR_RC_

    def __init__(self, message):
        super().__init__(message)


class ConfigurationError(GinKitError):
    """
    Exception raised when an experiment or training configuration is inconsistent.
    """

    def __init__(self, message):
        super().__init__(message)


class StageError(GinKitError):
    """
    Exception raised when a pipeline stage cannot find an artifact produced by an earlier stage.
    """
    exit_code = IO_ERROR_RC_

    def __init__(self, missing_file: Text, stage: Text = ""):
        stage_prefix = f"[{stage}] " if stage else ""
        super().__init__(f"{stage_prefix}Required artifact not found: {missing_file}")
        self.missing_file = missing_file


class UndefinedAUCError(GinKitError):
    """
    Exception raised when an AUC is requested for labels that contain a single class.
    """
    exit_code = NUMERIC_ERROR_RC_

    def __init__(self, message):
        super().__init__(message)


class ZeroVarianceError(GinKitError):
    """
    Exception raised when a correlation-based score meets a constant time series.
    """
    exit_code = NUMERIC_ERROR_RC_

    def __init__(self, message):
        super().__init__(message)


class NumericalError(GinKitError):
    """
    Exception raised when training produces a non-finite loss.
    """
    exit_code = NUMERIC_ERROR_RC_

    def __init__(self, message):
        super().__init__(message)


class ArtifactWriteError(GinKitError):
    """
    Exception raised when an output directory or artifact cannot be written.
    """
    exit_code = IO_ERROR_RC_

    def __init__(self, message):
        super().__init__(message)
