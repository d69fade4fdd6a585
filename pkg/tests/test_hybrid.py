import numpy as np
import pytest

from vqsim.algorithms.hybrid import (
    N_FEATURES,
    N_QPARAMS,
    N_WIRES,
    hybrid_train,
    init_params,
    loss_and_grad,
    make_separable_dataset,
    quantum_head,
)
from vqsim.exceptions import ValidationError

N_PARAMS = N_WIRES * N_FEATURES + N_WIRES + N_QPARAMS


def test_parameter_count():
    assert init_params(0).shape == (N_PARAMS,)
    assert N_PARAMS == 44


def test_head_output_is_bounded_expectation():
    rng = np.random.default_rng(2)
    for _ in range(5):
        q = quantum_head(rng.uniform(-2, 2, N_WIRES), rng.uniform(0, 6, N_QPARAMS))
        assert -1.0 - 1e-12 <= q <= 1.0 + 1e-12


def test_loss_at_chance_is_log_two():
    # zero weights and quantum angles that leave <Z_0> = 0 give p = 1/2,
    # hence BCE = ln 2 regardless of the labels
    flat = np.zeros(N_PARAMS)
    flat[N_WIRES * N_FEATURES + N_WIRES] = np.pi / 2  # RY(pi/2) on wire 0
    X, y = make_separable_dataset(6, seed=0)
    loss, _ = loss_and_grad(flat, X, y)
    assert loss == pytest.approx(np.log(2.0), abs=1e-9)


def test_gradient_matches_finite_differences():
    X, y = make_separable_dataset(4, seed=3)
    flat = init_params(3)
    _, grad = loss_and_grad(flat, X, y)
    h = 1e-5
    rng = np.random.default_rng(0)
    for k in rng.choice(N_PARAMS, size=10, replace=False):
        fp, fm = flat.copy(), flat.copy()
        fp[k] += h
        fm[k] -= h
        fd = (loss_and_grad(fp, X, y)[0] - loss_and_grad(fm, X, y)[0]) / (2 * h)
        assert grad[k] == pytest.approx(fd, abs=1e-6)


def test_training_reduces_loss():
    X, y = make_separable_dataset(20, seed=1)
    trace = hybrid_train(X, y, epochs=10, seed=1)
    assert trace.iterations[-1]["cost"] < trace.iterations[0]["cost"]


def test_zero_epochs_reports_initial_loss_only():
    X, y = make_separable_dataset(5, seed=2)
    trace = hybrid_train(X, y, epochs=0, seed=2)
    assert len(trace.iterations) == 1
    expected, _ = loss_and_grad(init_params(2), X, y)
    assert trace.final_value == pytest.approx(expected)


def test_dataset_validation():
    with pytest.raises(ValidationError):
        hybrid_train(np.zeros((0, N_FEATURES)), np.zeros(0))
    with pytest.raises(ValidationError):
        hybrid_train(np.zeros((3, 5)), np.zeros(3))


def test_seed_determinism():
    X, y = make_separable_dataset(8, seed=4)
    t1 = hybrid_train(X, y, epochs=2, seed=4)
    t2 = hybrid_train(X, y, epochs=2, seed=4)
    assert t1.to_json() == t2.to_json()
