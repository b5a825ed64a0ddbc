####################################################################
# ### test_network_generator.py                                  ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
import numpy as np
import pytest

from gin_kit_library.diffengine import ops
from gin_kit_library.diffengine.variable import backward
from gin_kit_library.errors import ParameterError, ShapeError
from gin_kit_library.gin_model.network_generator import EdgeScores, adjacency_from_noise, logistic_noise, \
    sample_adjacency, threshold_adjacency


def _uniform_scores(n: int, theta: float, tau: float = 1.0) -> EdgeScores:
    scores = EdgeScores(n, tau=tau, rng=np.random.default_rng(0))
    scores.theta.value[:] = theta
    return scores


def test_reconstruction_infers_every_pair() -> None:
    """
    Tests that without a known block every upper-triangular pair is inferred.
    """
    scores = EdgeScores(6, rng=np.random.default_rng(0))

    assert scores.size == 15
    assert np.all(scores.rows < scores.cols)


def test_completion_infers_inverted_l() -> None:
    """
    Tests that a known block limits inference to pairs touching a hidden node.
    """
    known = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]])
    scores = EdgeScores(5, known_block=known, rng=np.random.default_rng(0))

    assert scores.size == 10 - 3
    assert np.all(scores.cols >= 3)
    assert not scores.inferred_mask()[:3, :3].any()


def test_initial_logits_spread() -> None:
    """
    Tests that logits start near N(0, 0.1).
    """
    scores = EdgeScores(200, rng=np.random.default_rng(1))

    assert abs(scores.theta.value.mean()) < 0.01
    assert scores.theta.value.std() == pytest.approx(0.1, abs=0.01)


def test_sample_symmetric_zero_diagonal() -> None:
    """
    Tests that samples are symmetric with a zero diagonal.
    """
    scores = EdgeScores(12, rng=np.random.default_rng(2))
    sample = sample_adjacency(scores, seed=3).value

    assert np.array_equal(sample, sample.T)
    assert not np.diag(sample).any()
    assert np.all((sample > 0) & (sample < 1) | np.eye(12, dtype=bool))


def test_sample_saturates() -> None:
    """
    Tests that very large logits give links regardless of the noise.
    """
    sample = sample_adjacency(_uniform_scores(8, 1e6), seed=4).value

    assert np.allclose(sample, 1.0 - np.eye(8))


def test_sample_known_block_injected() -> None:
    """
    Tests that known entries appear unchanged and pass no gradient.
    """
    rng = np.random.default_rng(5)
    upper = np.triu(rng.integers(0, 2, size=(6, 6)), k=1)
    known = upper + upper.T
    scores = EdgeScores(9, known_block=known, rng=rng)
    sample = sample_adjacency(scores, seed=6)
    backward(ops.sum(sample * rng.normal(size=(9, 9))))

    assert np.array_equal(sample.value[:6, :6], known)
    assert scores.theta.grad.shape == scores.theta.shape
    assert np.any(scores.theta.grad != 0)


def test_sample_mean_low_temperature() -> None:
    """
    Tests that soft samples at a low temperature average to sigmoid(theta).
    """
    theta = 0.7
    scores = _uniform_scores(450, theta)
    sample = sample_adjacency(scores, seed=7, tau=1e-3).value
    values = sample[scores.rows, scores.cols]

    assert values.size > 10 ** 5
    assert values.mean() == pytest.approx(1.0 / (1.0 + np.exp(-theta)), abs=0.01)
    assert np.mean((values < 0.01) | (values > 0.99)) > 0.99


@pytest.mark.parametrize("theta", [-2.0, 0.0, 2.0])
def test_hard_sample_frequency(theta: float) -> None:
    """
    Tests that hard samples link with frequency sigmoid(theta).
    """
    scores = _uniform_scores(142, theta, tau=0.5)
    sample = sample_adjacency(scores, seed=8, hard=True).value
    values = sample[scores.rows, scores.cols]

    assert set(np.unique(values)) <= {0.0, 1.0}
    assert values.mean() == pytest.approx(1.0 / (1.0 + np.exp(-theta)), abs=0.02)


def test_hard_sample_passes_gradient() -> None:
    """
    Tests that hard samples still pass gradients to the logits.
    """
    scores = EdgeScores(5, rng=np.random.default_rng(9))
    backward(ops.sum(sample_adjacency(scores, seed=10, hard=True)))

    assert np.all(scores.theta.grad > 0)


def test_batched_samples_match_their_noise() -> None:
    """
    Tests that each of several samples is the single sample built from its own slice of the noise.
    """
    scores = EdgeScores(7, rng=np.random.default_rng(12))
    noise = logistic_noise(np.random.default_rng(13), (4, scores.size))
    batched = adjacency_from_noise(scores, noise, tau=0.5).value

    assert batched.shape == (4, 7, 7)
    for index in range(4):
        assert np.array_equal(batched[index], adjacency_from_noise(scores, noise[index], tau=0.5).value)
    assert not np.array_equal(batched[0], batched[1])
    assert np.array_equal(batched, np.swapaxes(batched, 1, 2))


def test_batched_samples_pass_summed_gradient() -> None:
    """
    Tests that the logits receive the sum of the per-sample gradients.
    """
    scores = EdgeScores(5, rng=np.random.default_rng(14))
    backward(ops.sum(sample_adjacency(scores, seed=15, samples=3)))
    batched = scores.theta.grad.copy()

    scores.theta.grad = None
    noise = logistic_noise(np.random.default_rng(15), (3, scores.size))
    for index in range(3):
        backward(ops.sum(adjacency_from_noise(scores, noise[index])))

    assert np.allclose(batched, scores.theta.grad)


def test_bad_noise_and_sample_count() -> None:
    """
    Tests that mis-shaped noise and a non-positive sample count are rejected.
    """
    scores = EdgeScores(4, rng=np.random.default_rng(0))

    with pytest.raises(ShapeError):
        adjacency_from_noise(scores, np.zeros(scores.size + 1))
    with pytest.raises(ShapeError):
        adjacency_from_noise(scores, np.zeros((2, 2, scores.size)))
    with pytest.raises(ParameterError):
        sample_adjacency(scores, seed=1, samples=0)


@pytest.mark.parametrize("tau", [0.0, -1.0])
def test_bad_temperature(tau: float) -> None:
    """
    Tests that a non-positive temperature is rejected.
    """
    scores = EdgeScores(4, rng=np.random.default_rng(0))

    with pytest.raises(ParameterError):
        sample_adjacency(scores, tau=tau)


def test_known_block_too_large() -> None:
    """
    Tests that a known block larger than the graph is rejected.
    """
    with pytest.raises(ShapeError):
        EdgeScores(2, known_block=np.zeros((3, 3)))


def test_logistic_noise_is_centered() -> None:
    """
    Tests the noise mean and variance (pi^2 / 3 for the standard logistic).
    """
    noise = logistic_noise(np.random.default_rng(11), (200_000,))

    assert abs(noise.mean()) < 0.02
    assert noise.var() == pytest.approx(np.pi ** 2 / 3, rel=0.02)


def test_threshold_adjacency() -> None:
    """
    Tests thresholding at 0.5 with the diagonal cleared.
    """
    probabilities = np.array([[0.9, 0.5], [0.5, 0.2]])

    assert threshold_adjacency(probabilities).tolist() == [[0, 1], [1, 0]]
