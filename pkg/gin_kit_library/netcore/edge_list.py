####################################################################
# ### edge_list.py                                               ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
import csv
import os

from typing import Dict, List, Optional, Text, Tuple

import numpy as np

from gin_kit_library.errors import ConfigurationError, EdgeListParseError, NodeRangeError
from gin_kit_library.netcore.generators import generate_ba, generate_er, generate_ws
from gin_kit_library.netcore.graph import Graph

_HEADER_ = ["src", "dst"]

# environment variable naming an extra directory searched for named edge lists
DATA_DIR_ENV_VAR_ = "GIN_DATA_DIR"
_BUNDLED_DATA_DIR_ = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")


def load_edge_list(path: Text, n: Optional[int] = None) -> Graph:
    """
    Reads an undirected edge list. The file is UTF-8 CSV with the header "src,dst" and one edge per row. Duplicate
    and reversed rows are merged.

    :param path: The path of the edge-list file.
    :param n: The declared node count. When omitted the node count is the largest id plus one and every id in
              between must appear in at least one edge.
    :raises EdgeListParseError: If the header or a row is malformed; the message names the line number.
    :raises NodeRangeError: If an id is negative or not smaller than the declared n, or if ids leave gaps.
    :return: The graph.
    """
    edges: List[Tuple[int, int]] = []
    with open(path, "r", encoding="utf-8", newline="") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header is None or [column.strip() for column in header] != _HEADER_:
            raise EdgeListParseError(f"Expected header 'src,dst', got {header}", line_number=1)

        for row in reader:
            line_number = reader.line_num
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != 2:
                raise EdgeListParseError(f"Expected 2 columns, got {len(row)}", line_number=line_number)
            try:
                src, dst = int(row[0]), int(row[1])
            except ValueError:
                raise EdgeListParseError(f"Node ids must be integers, got {row}", line_number=line_number)
            if src < 0 or dst < 0:
                raise NodeRangeError(f"line {line_number}: node ids must be non-negative, got {row}")
            if n is not None and (src >= n or dst >= n):
                raise NodeRangeError(f"line {line_number}: node id exceeds declared node count {n}")
            if src == dst:
                raise EdgeListParseError(f"Self-loop on node {src} is not allowed", line_number=line_number)
            edges.append((src, dst))

    if n is None:
        used = {node for edge in edges for node in edge}
        if not used:
            raise EdgeListParseError("Edge list holds no edges and no node count was declared")
        n = max(used) + 1
        if len(used) != n:
            missing = sorted(set(range(n)) - used)
            raise NodeRangeError(f"Node ids must be contiguous from 0; missing ids {missing[:10]}")

    return Graph.from_edges(n, edges)


def write_edge_list(g: Graph, path: Text) -> Text:
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(_HEADER_)
        writer.writerows(g.edges())
    return path


def named_graph_path(name: Text) -> Optional[Text]:
    """
    Locates the edge list of a named empirical network. The directory named by GIN_DATA_DIR is searched before the
    bundled data directory.

    :return: The path of "<name>.csv", or None if no such file exists.
    """
    directories = [os.environ.get(DATA_DIR_ENV_VAR_), _BUNDLED_DATA_DIR_]
    for directory in directories:
        if directory:
            candidate = os.path.join(directory, f"{name.lower()}.csv")
            if os.path.isfile(candidate):
                return candidate
    return None


def load_named_graph(name: Text) -> Graph:
    """
    Loads a named empirical network, such as "karate".

    :raises ConfigurationError: If no edge list for the name can be found.
    """
    path = named_graph_path(name)
    if path is None:
        raise ConfigurationError(f"No edge list found for network '{name}'; place {name.lower()}.csv in "
                                 f"${DATA_DIR_ENV_VAR_} or pass it as a file graph")
    return load_edge_list(path)


def build_graph(spec: Dict, seed: Optional[int] = None) -> Graph:
    """
    Builds a graph from a configuration "graph" section.

    Supported kinds: "er" (n, p), "ws" (n, k, p_rewire), "ba" (n, m0, k), "file" (path, optional n) and
    "named" (name). A kind that is not one of these is treated as a network name.

    :param spec: The graph section.
    :param seed: Seed for the synthetic generators.
    :raises ConfigurationError: If a required key is missing.
    """
    kind = str(spec.get("kind", "")).lower()
    try:
        if kind == "er":
            return generate_er(int(spec["n"]), float(spec["p"]), seed=seed)
        if kind == "ws":
            return generate_ws(int(spec["n"]), int(spec.get("k", 4)), float(spec.get("p_rewire", 0.3)), seed=seed)
        if kind == "ba":
            return generate_ba(int(spec["n"]), int(spec.get("m0", 20)), int(spec.get("k", 2)), seed=seed)
        if kind == "file":
            n = spec.get("n")
            return load_edge_list(str(spec["path"]), n=int(n) if n is not None else None)
        if kind == "named":
            return load_named_graph(str(spec["name"]))
    except KeyError as e:
        raise ConfigurationError(f"Graph section of kind '{kind}' is missing key {e}")

    if not kind:
        raise ConfigurationError("Graph section needs a 'kind'")
    return load_named_graph(kind)


def write_matrix(matrix: np.ndarray, path: Text) -> Text:
    """
    Writes a square matrix as headerless CSV, one row per line, values in shortest round-trip form.
    """
    matrix = np.asarray(matrix, dtype=np.float64)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        for row in matrix:
            writer.writerow([repr(float(value)) for value in row])
    return path


def load_matrix(path: Text) -> np.ndarray:
    """
    Reads a square matrix written by write_matrix().

    :raises EdgeListParseError: If a cell is not a number or the rows do not form a square matrix.
    """
    rows: List[List[float]] = []
    with open(path, "r", encoding="utf-8", newline="") as f:
        reader = csv.reader(f)
        for row in reader:
            if not row:
                continue
            try:
                rows.append([float(cell) for cell in row])
            except ValueError:
                raise EdgeListParseError(f"Matrix cells must be numbers, got {row[:4]}", line_number=reader.line_num)

    if not rows or any(len(row) != len(rows) for row in rows):
        raise EdgeListParseError(f"Expected a square matrix in {path}")
    return np.array(rows, dtype=np.float64)


def load_adjacency_file(path: Text, n: Optional[int] = None) -> np.ndarray:
    """
    Reads an adjacency from either an edge list (header "src,dst") or a matrix CSV.
    """
    with open(path, "r", encoding="utf-8") as f:
        first = f.readline()
    if [column.strip() for column in first.split(",")] == _HEADER_:
        return load_edge_list(path, n=n).adjacency.astype(np.float64)
    return load_matrix(path)
