import math

import numpy as np
import pytest

from vqsim.exceptions import DegenerateInputError, ShapeError, ValidationError
from vqsim.gates import Gate, PauliProduct, PauliZObs, matrix_of
from vqsim.state import (
    apply_gate,
    expectation,
    init_zero,
    probabilities,
    sample,
    set_amplitudes,
)

H = matrix_of(Gate("H", (0,), ()))
CNOT = matrix_of(Gate("CNOT", (0, 1), ()))


def ry(theta):
    return matrix_of(Gate("RY", (0,), (theta,)))


def bell_state():
    psi = init_zero(2)
    psi = apply_gate(psi, H, (0,))
    return apply_gate(psi, CNOT, (0, 1))


class TestInitZero:
    def test_one_qubit(self):
        assert np.array_equal(init_zero(1).amplitudes, [1, 0])

    def test_two_qubits(self):
        assert np.array_equal(init_zero(2).amplitudes, [1, 0, 0, 0])

    def test_three_qubits(self):
        psi = init_zero(3)
        assert psi.amplitudes.shape == (8,)
        assert np.linalg.norm(psi.amplitudes) == 1.0

    @pytest.mark.parametrize("n", [0, -1, 25])
    def test_out_of_range(self, n):
        with pytest.raises(ShapeError):
            init_zero(n)


class TestApplyGate:
    def test_hadamard_on_wire0(self):
        psi = apply_gate(init_zero(2), H, (0,))
        s = 1 / math.sqrt(2)
        np.testing.assert_allclose(psi.amplitudes, [s, 0, s, 0], atol=1e-15)

    def test_bell_state(self):
        s = 1 / math.sqrt(2)
        np.testing.assert_allclose(bell_state().amplitudes, [s, 0, 0, s], atol=1e-15)

    def test_identity_unchanged(self):
        psi = bell_state()
        out = apply_gate(psi, np.eye(2), (1,))
        assert np.array_equal(out.amplitudes, psi.amplitudes)

    def test_value_semantics(self):
        psi = init_zero(1)
        before = psi.amplitudes.copy()
        apply_gate(psi, H, (0,))
        assert np.array_equal(psi.amplitudes, before)

    def test_non_unitary_rejected(self):
        with pytest.raises(ValidationError):
            apply_gate(init_zero(1), np.array([[1, 1], [0, 1]]), (0,))

    def test_shape_mismatch(self):
        with pytest.raises(ShapeError):
            apply_gate(init_zero(2), np.eye(4), (0,))

    def test_unitarity_round_trip(self):
        rng = np.random.default_rng(5)
        psi = init_zero(3)
        for _ in range(10):
            g = Gate("RX", (int(rng.integers(3)),), (rng.uniform(0, 2 * np.pi),))
            psi = apply_gate(psi, matrix_of(g), g.wires)
        u = matrix_of(Gate("RY", (0,), (1.3,)))
        back = apply_gate(apply_gate(psi, u, (1,)), u.conj().T, (1,))
        np.testing.assert_allclose(back.amplitudes, psi.amplitudes, atol=1e-10)


class TestProbabilities:
    def test_bell_full_register(self):
        np.testing.assert_allclose(
            probabilities(bell_state(), (0, 1)), [0.5, 0, 0, 0.5], atol=1e-15
        )

    def test_bell_marginal(self):
        np.testing.assert_allclose(
            probabilities(bell_state(), (0,)), [0.5, 0.5], atol=1e-15
        )

    def test_zero_state(self):
        p = probabilities(init_zero(3), (0, 2))
        assert p[0] == 1.0 and p[1:].sum() == 0.0

    def test_wire_order(self):
        psi = apply_gate(init_zero(2), ry(0.8), (1,))
        p01 = probabilities(psi, (0, 1))
        p10 = probabilities(psi, (1, 0))
        # swapping the wire order permutes the middle outcomes
        np.testing.assert_allclose(p10, [p01[0], p01[2], p01[1], p01[3]])

    def test_marginal_consistency_bruteforce(self):
        # axis sums of the full distribution, computed by bit extraction
        rng = np.random.default_rng(11)
        for n in (2, 3, 4):
            psi = init_zero(n)
            for _ in range(6):
                g = Gate("RY", (int(rng.integers(n)),), (rng.uniform(0, 6),))
                psi = apply_gate(psi, matrix_of(g), g.wires)
            full = np.abs(psi.amplitudes) ** 2
            wires = tuple(sorted(rng.choice(n, size=2, replace=False)))
            expected = np.zeros(4)
            for idx, p in enumerate(full):
                bits = [(idx >> (n - 1 - w)) & 1 for w in wires]
                expected[bits[0] * 2 + bits[1]] += p
            np.testing.assert_allclose(probabilities(psi, wires), expected, atol=1e-12)


class TestExpectation:
    def test_ry_pauli_z(self):
        assert expectation(init_zero(1), PauliZObs(0)) == pytest.approx(1.0)
        psi = apply_gate(init_zero(1), ry(0.5), (0,))
        assert expectation(psi, PauliZObs(0)) == pytest.approx(math.cos(0.5), abs=1e-12)

    def test_bell_zz(self):
        obs = PauliProduct((("Z", 0), ("Z", 1)))
        assert expectation(bell_state(), obs) == pytest.approx(1.0, abs=1e-12)

    def test_non_hermitian_rejected(self):
        from vqsim.gates import HermitianObs

        with pytest.raises(ValidationError):
            HermitianObs(np.array([[0, 1], [0, 0]]), (0,))


class TestSample:
    def test_deterministic_state(self):
        assert sample(init_zero(2), (0, 1), 100, seed=3) == {"00": 100}

    def test_bell_binomial_bound(self):
        counts = sample(bell_state(), (0, 1), 10000, seed=42)
        assert counts.get("01", 0) == 0 and counts.get("10", 0) == 0
        sigma = math.sqrt(10000 * 0.25)
        assert abs(counts["00"] - 5000) < 5 * sigma
        assert abs(counts["11"] - 5000) < 5 * sigma

    def test_same_seed_identical(self):
        psi = bell_state()
        assert sample(psi, (0, 1), 1000, seed=9) == sample(psi, (0, 1), 1000, seed=9)

    def test_frequencies_converge(self):
        psi = apply_gate(init_zero(1), ry(1.1), (0,))
        p = probabilities(psi, (0,))
        counts = sample(psi, (0,), 100000, seed=0)
        for i, pi in enumerate(p):
            freq = counts.get(str(i), 0) / 100000
            assert abs(freq - pi) <= 5 * math.sqrt(pi * (1 - pi) / 100000)


class TestSetAmplitudes:
    def test_basis_state(self):
        psi = set_amplitudes(2, [1, 0, 0, 0])
        assert np.array_equal(psi.amplitudes, [1, 0, 0, 0])

    def test_uniform(self):
        psi = set_amplitudes(2, np.full(4, 0.5))
        np.testing.assert_allclose(np.abs(psi.amplitudes) ** 2, [0.25] * 4)

    def test_three_four_five(self):
        psi = set_amplitudes(1, [0.6, 0.8])
        np.testing.assert_allclose(np.abs(psi.amplitudes) ** 2, [0.36, 0.64])

    def test_wrong_length(self):
        with pytest.raises(ShapeError):
            set_amplitudes(2, [1, 0])

    def test_zero_vector_normalize(self):
        with pytest.raises(DegenerateInputError):
            set_amplitudes(1, [0, 0], normalize=True)

    def test_unnormalized_rejected(self):
        with pytest.raises(ValidationError):
            set_amplitudes(1, [1, 1])


def test_norm_conservation_random_circuits():
    rng = np.random.default_rng(77)
    for _ in range(50):
        n = int(rng.integers(1, 5))
        psi = init_zero(n)
        n_gates = int(rng.integers(1, 15))
        for _ in range(n_gates):
            if n >= 2 and rng.random() < 0.3:
                w = rng.choice(n, size=2, replace=False)
                g = Gate("IsingZZ", (int(w[0]), int(w[1])), (rng.uniform(0, 6),))
            else:
                g = Gate("RX", (int(rng.integers(n)),), (rng.uniform(0, 6),))
            psi = apply_gate(psi, matrix_of(g), g.wires)
        drift = abs(np.linalg.norm(psi.amplitudes) - 1.0)
        assert drift <= 1e-12 * (1 + n_gates)
