####################################################################
# ### test_errors.py                                             ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
import pytest

from gin_kit_library import errors
from gin_kit_library.errors import (ArtifactWriteError, ConfigurationError, EdgeListParseError, GinKitError,
                                    NumericalError, StageError)


@pytest.mark.parametrize("error_class, exit_code", [
    (errors.ParameterError, errors.CONFIG_ERROR_RC_),
    (errors.ConfigurationError, errors.CONFIG_ERROR_RC_),
    (errors.EdgeListParseError, errors.IO_ERROR_RC_),
    (errors.NodeRangeError, errors.IO_ERROR_RC_),
    (errors.ArtifactWriteError, errors.IO_ERROR_RC_),
    (errors.StateError, errors.NUMERIC_ERROR_RC_),
    (errors.ShapeError, errors.NUMERIC_ERROR_RC_),
    (errors.ContractError, errors.NUMERIC_ERROR_RC_),
    (errors.UndefinedAUCError, errors.NUMERIC_ERROR_RC_),
    (errors.ZeroVarianceError, errors.NUMERIC_ERROR_RC_),
    (errors.NumericalError, errors.NUMERIC_ERROR_RC_),
])
def test_exit_codes(error_class, exit_code) -> None:
    """
    Tests that each error class maps to its exit-code class and derives from GinKitError.
    """
    error = error_class("message")

    assert isinstance(error, GinKitError)
    assert error.exit_code == exit_code
    assert str(error) == "message"


def test_stage_error_message() -> None:
    """
    Tests that StageError names the stage and the missing artifact.
    """
    error = StageError("out/dataset.npz", stage="train")

    assert error.exit_code == errors.IO_ERROR_RC_
    assert error.missing_file == "out/dataset.npz"
    assert str(error) == "[train] Required artifact not found: out/dataset.npz"
    assert str(StageError("graph.csv")) == "Required artifact not found: graph.csv"


def test_edge_list_parse_error_line_number() -> None:
    """
    Tests that the line number, when given, prefixes the message.
    """
    error = EdgeListParseError("expected 2 fields", line_number=7)

    assert error.line_number == 7
    assert str(error) == "line 7: expected 2 fields"
    assert EdgeListParseError("bad").line_number is None


def test_catch_as_base_class() -> None:
    """
    Tests that the launcher can catch every library error through the base class.
    """
    for error in (ConfigurationError("a"), NumericalError("b"), ArtifactWriteError("c")):
        with pytest.raises(GinKitError):
            raise error
