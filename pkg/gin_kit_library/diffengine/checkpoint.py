####################################################################
# ### checkpoint.py                                              ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
import json
import os

from typing import Dict, Mapping, Optional, Text, Tuple, Union

import numpy as np

from gin_kit_library.diffengine.variable import Variable
from gin_kit_library.errors import ShapeError, StageError


class ManifestKeys(object):
    SHAPES = "shapes"
    SEED = "seed"
    STEP = "step"


def manifest_path_for(path: Text) -> Text:
    """
    Returns the manifest path paired with a checkpoint path: "checkpoint.npz" -> "checkpoint_manifest.json".
    """
    root, _ = os.path.splitext(path)
    return f"{root}_manifest.json"


def save_checkpoint(path: Text, arrays: Mapping[Text, Union[np.ndarray, Variable]], seed: Optional[int],
                    step: int) -> Tuple[Text, Text]:
    """
    Writes named arrays to an .npz blob and a JSON manifest {shapes, seed, step} next to it.

    :return: The (blob path, manifest path) pair.
    """
    values = {name: (array.value if isinstance(array, Variable) else np.asarray(array, dtype=np.float64))
              for name, array in arrays.items()}
    np.savez(path, **values)
    manifest = {
        ManifestKeys.SHAPES: {name: list(value.shape) for name, value in values.items()},
        ManifestKeys.SEED: seed,
        ManifestKeys.STEP: int(step),
    }
    manifest_path = manifest_path_for(path)
    with open(manifest_path, "w", encoding="utf-8") as f:
        json.dump(manifest, f, indent=2)
    return path, manifest_path


def load_checkpoint(path: Text) -> Tuple[Dict[Text, np.ndarray], Dict]:
    """
    Reads a checkpoint written by save_checkpoint() and checks every array against the manifest.

    :raises StageError: If the blob or the manifest is missing.
    :raises ShapeError: If the stored arrays disagree with the manifest.
    :return: The named arrays and the manifest.
    """
    manifest_path = manifest_path_for(path)
    for required in (path, manifest_path):
        if not os.path.isfile(required):
            raise StageError(required, stage="checkpoint")

    with open(manifest_path, "r", encoding="utf-8") as f:
        manifest = json.load(f)
    with np.load(path) as blob:
        arrays = {name: blob[name].copy() for name in blob.files}

    shapes = manifest.get(ManifestKeys.SHAPES, {})
    if set(shapes) != set(arrays):
        raise ShapeError(f"Checkpoint arrays {sorted(arrays)} do not match manifest entries {sorted(shapes)}")
    for name, shape in shapes.items():
        if tuple(shape) != arrays[name].shape:
            raise ShapeError(f"Checkpoint array '{name}' has shape {arrays[name].shape}, manifest says {shape}")
    return arrays, manifest
