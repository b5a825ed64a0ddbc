####################################################################
# ### matching.py                                                ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
import itertools
import logging

from typing import List, Optional, Sequence, Text, Union

import numpy as np
from scipy.optimize import linear_sum_assignment

from gin_kit_library.errors import ParameterError, ShapeError
from gin_kit_library.logging import GinKitLogger, null_logger

# exhaustive search is only offered for tiny hidden blocks
BRUTE_FORCE_LIMIT_ = 8


####################################################################
# Class: MatchProblem                                            ###
####################################################################
class MatchProblem(object):
    """
    A seeded matching instance. Both matrices are in canonical node order, so the first n_seeds rows and columns are
    the seeds (observed nodes) and the trailing block holds the nodes to be aligned.
    """

    def __init__(self, truth: np.ndarray, inferred: np.ndarray, n_seeds: int) -> None:
        """
        Constructor for MatchProblem objects.

        :param truth: The n x n ground-truth adjacency.
        :param inferred: The n x n inferred adjacency, binary or probabilities.
        :param n_seeds: The number of leading seed nodes.
        :raises ShapeError: If the matrices are not square or differ in size.
        :raises ParameterError: If a matrix is asymmetric, leaves [0, 1], or n_seeds is out of range.
        """
        truth = np.asarray(truth, dtype=np.float64)
        inferred = np.asarray(inferred, dtype=np.float64)
        for name, matrix in (("truth", truth), ("inferred", inferred)):
            if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
                raise ShapeError(f"The {name} matrix must be square, got shape {matrix.shape}")
            if not np.allclose(matrix, matrix.T):
                raise ParameterError(f"The {name} matrix must be symmetric")
            if matrix.size and (matrix.min() < 0.0 or matrix.max() > 1.0):
                raise ParameterError(f"The {name} matrix has entries outside [0, 1]")
        if truth.shape != inferred.shape:
            raise ShapeError(f"Truth shape {truth.shape} does not match inferred shape {inferred.shape}")
        if not 0 <= n_seeds <= truth.shape[0]:
            raise ParameterError(f"Seed count {n_seeds} is outside [0, {truth.shape[0]}]")

        self.truth: np.ndarray = truth
        self.inferred: np.ndarray = inferred
        self.n_seeds: int = int(n_seeds)

    @property
    def n(self) -> int:
        return self.truth.shape[0]

    @property
    def n_hidden(self) -> int:
        return self.n - self.n_seeds

    def blocks(self, matrix: np.ndarray):
        s = self.n_seeds
        return matrix[:s, :s], matrix[:s, s:], matrix[s:, :s], matrix[s:, s:]


####################################################################
# Class: MatchResult                                             ###
####################################################################
class MatchResult(object):
    """
    The alignment found for the hidden block. permutation[i] is the inferred hidden index that truth hidden index i
    is paired with.
    """

    def __init__(self, permutation: Sequence[int], objective: float, iterations: int, converged: bool,
                 trace: Optional[List[float]] = None, restart: int = 0) -> None:
        permutation = np.asarray(permutation, dtype=np.int64)
        if not np.array_equal(np.sort(permutation), np.arange(permutation.size)):
            raise ParameterError(f"Not a permutation: {permutation.tolist()}")
        self.permutation: np.ndarray = permutation
        self.objective: float = float(objective)
        self.iterations: int = int(iterations)
        self.converged: bool = bool(converged)
        self.trace: List[float] = list(trace) if trace is not None else []
        self.restart: int = int(restart)

    @property
    def n_hidden(self) -> int:
        return int(self.permutation.size)

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.permutation, np.arange(self.permutation.size)))

    def inverse(self) -> "MatchResult":
        return MatchResult(np.argsort(self.permutation), self.objective, self.iterations, self.converged,
                           self.trace, self.restart)

    def as_dict(self) -> dict:
        return {
            "permutation": self.permutation.tolist(),
            "objective": self.objective,
            "iterations": self.iterations,
            "converged": self.converged,
        }

    @staticmethod
    def identity(n_hidden: int, objective: float = 0.0) -> "MatchResult":
        return MatchResult(np.arange(n_hidden), objective, 0, True)


def permutation_matrix(permutation: Sequence[int]) -> np.ndarray:
    permutation = np.asarray(permutation, dtype=np.int64)
    matrix = np.zeros((permutation.size, permutation.size))
    matrix[np.arange(permutation.size), permutation] = 1.0
    return matrix


def full_index(n_seeds: int, permutation: Sequence[int]) -> np.ndarray:
    """
    Returns the node index that keeps seeds in place and reorders the hidden block by a permutation.
    """
    return np.concatenate([np.arange(n_seeds), n_seeds + np.asarray(permutation, dtype=np.int64)])


def objective(problem: MatchProblem, p: Union[np.ndarray, Sequence[int]]) -> float:
    """
    Evaluates the trace objective Tr(A^T (I + P) B (I + P)^T), with + the direct sum, for truth A and inferred B.

    :param problem: The matching instance.
    :param p: A permutation vector of length N_u, or an N_u x N_u (doubly stochastic) matrix.
    :raises ShapeError: If p does not fit the hidden block.
    """
    p = np.asarray(p)
    n_hidden = problem.n_hidden
    if p.ndim == 1:
        if p.size != n_hidden:
            raise ShapeError(f"Permutation of length {p.size} does not fit {n_hidden} hidden nodes")
        idx = full_index(problem.n_seeds, p)
        return float(np.sum(problem.truth * problem.inferred[np.ix_(idx, idx)]))
    if p.shape != (n_hidden, n_hidden):
        raise ShapeError(f"Matrix of shape {p.shape} does not fit {n_hidden} hidden nodes")

    a11, a12, a21, a22 = problem.blocks(problem.truth)
    b11, b12, b21, b22 = problem.blocks(problem.inferred)
    return float(np.sum(a11 * b11) + np.sum(a12 * (b12 @ p.T)) + np.sum(a21 * (p @ b21))
                 + np.sum(a22 * (p @ b22 @ p.T)))


def apply_match(inferred: np.ndarray, result: MatchResult, n_seeds: int) -> np.ndarray:
    """
    Reorders the hidden rows and columns of an inferred matrix so that they line up with the truth. The seed block
    is left untouched.
    """
    inferred = np.asarray(inferred)
    if inferred.shape[0] != n_seeds + result.n_hidden:
        raise ShapeError(f"Matrix with {inferred.shape[0]} nodes does not fit {n_seeds} seeds and "
                         f"{result.n_hidden} hidden nodes")
    idx = full_index(n_seeds, result.permutation)
    return inferred[np.ix_(idx, idx)]


def apply_match_rows(states: np.ndarray, result: MatchResult, axis: int = 0) -> np.ndarray:
    """
    Reorders hidden-node rows (for example recovered initial states) along one axis.
    """
    return np.take(np.asarray(states), result.permutation, axis=axis)


class _Relaxation(object):
    """
    The relaxed objective as a quadratic in P with a constant, a linear and a quadratic part.
    """

    def __init__(self, problem: MatchProblem) -> None:
        a11, a12, a21, a22 = problem.blocks(problem.truth)
        b11, b12, b21, b22 = problem.blocks(problem.inferred)
        self.constant = float(np.sum(a11 * b11))
        self.linear = a12.T @ b12 + a21 @ b21.T
        self.a22 = a22
        self.b22 = b22

    def value(self, p: np.ndarray) -> float:
        return self.constant + float(np.sum(self.linear * p)) + float(np.sum(self.a22 * (p @ self.b22 @ p.T)))

    def gradient(self, p: np.ndarray) -> np.ndarray:
        return self.linear + self.a22 @ p @ self.b22.T + self.a22.T @ p @ self.b22

    def curvature(self, direction: np.ndarray) -> float:
        return float(np.sum(self.a22 * (direction @ self.b22 @ direction.T)))


def _line_search(slope: float, curvature: float) -> float:
    """
    Maximises slope * a + curvature * a^2 over a in [0, 1].
    """
    if curvature < 0:
        return float(np.clip(-slope / (2.0 * curvature), 0.0, 1.0))
    return 1.0 if slope + curvature > 0 else 0.0


def _frank_wolfe(relaxation: _Relaxation, start: np.ndarray, max_iters: int, tol: float):
    p = start
    current = relaxation.value(p)
    trace = [current]
    converged = False
    iterations = 0
    for iterations in range(1, max_iters + 1):
        gradient = relaxation.gradient(p)
        rows, cols = linear_sum_assignment(gradient, maximize=True)
        vertex = np.zeros_like(p)
        vertex[rows, cols] = 1.0
        direction = vertex - p

        slope = float(np.sum(gradient * direction))
        step = _line_search(slope, relaxation.curvature(direction))
        if step <= 0.0:
            converged = True
            break
        p = p + step * direction
        updated = relaxation.value(p)
        trace.append(updated)
        gain = updated - current
        current = updated
        if gain <= tol * max(abs(current), np.finfo(np.float64).tiny):
            converged = True
            break
    return p, iterations, converged, trace


def match(problem: MatchProblem, max_iters: int = 100, tol: float = 1e-6, restarts: int = 3,
          seed: Optional[int] = None, logger: Optional[GinKitLogger] = None) -> MatchResult:
    """
    Aligns the hidden block of the inferred matrix with the truth by Frank-Wolfe ascent over doubly stochastic
    matrices. The first start is the flat matrix with every entry 1/N_u; later starts mix it half and half with a
    random permutation. Every relaxed optimum is rounded to a permutation by a linear assignment and the start with
    the best rounded objective wins.

    :param problem: The matching instance.
    :param max_iters: Iteration cap per start.
    :param tol: Stop once an iteration gains less than tol relative to the objective.
    :param restarts: Number of starts, at least 1.
    :param seed: Seed for the random starts.
    :param logger: Receives per-start iteration counts at DEBUG level.
    :raises ParameterError: If restarts or max_iters is below 1.
    :return: The best permutation found.
    """
    if restarts < 1 or max_iters < 1:
        raise ParameterError("match() needs at least one start and one iteration")
    logger = logger if logger is not None else null_logger()
    n_hidden = problem.n_hidden
    if n_hidden == 0:
        return MatchResult.identity(0, objective(problem, np.arange(0)))

    relaxation = _Relaxation(problem)
    rng = np.random.default_rng(seed)
    barycenter = np.full((n_hidden, n_hidden), 1.0 / n_hidden)

    best: Optional[MatchResult] = None
    for restart in range(restarts):
        start = barycenter
        if restart > 0:
            start = 0.5 * barycenter + 0.5 * permutation_matrix(rng.permutation(n_hidden))
        relaxed, iterations, converged, trace = _frank_wolfe(relaxation, start, max_iters, tol)
        _, permutation = linear_sum_assignment(relaxed, maximize=True)
        candidate = MatchResult(permutation, objective(problem, permutation), iterations, converged, trace,
                                restart)
        logger.log_fields("sgm_start", level=logging.DEBUG, restart=restart, iterations=iterations,
                          converged=converged, relaxed=trace[-1], objective=candidate.objective)
        if best is None or candidate.objective > best.objective:
            best = candidate
    return best


def brute_force_match(problem: MatchProblem) -> MatchResult:
    """
    Finds the optimal permutation by enumeration. The first optimum in lexicographic order is returned.

    :raises ParameterError: If the hidden block is larger than eight nodes.
    """
    if problem.n_hidden > BRUTE_FORCE_LIMIT_:
        raise ParameterError(f"Brute-force matching supports at most {BRUTE_FORCE_LIMIT_} hidden nodes, got "
                             f"{problem.n_hidden}")
    best_permutation, best_value, count = None, -np.inf, 0
    for permutation in itertools.permutations(range(problem.n_hidden)):
        value = objective(problem, permutation)
        count += 1
        if value > best_value:
            best_permutation, best_value = permutation, value
    return MatchResult(best_permutation, best_value, count, True)


def describe(result: MatchResult) -> Text:
    state = "converged" if result.converged else "iteration cap reached"
    return (f"permutation {result.permutation.tolist()} objective {result.objective:.6g} after "
            f"{result.iterations} iterations ({state})")
