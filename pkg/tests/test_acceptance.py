"""End-to-end acceptance gate.

Each test covers one release criterion and prints a single PASS/FAIL
line (visible with ``pytest -s`` or on failure).  Tolerances are fixed
here and are not to be loosened to make a red criterion pass.
"""

import time

import numpy as np

from vqsim.algorithms.hybrid import (
    N_FEATURES,
    N_WIRES,
    _unflatten,
    hybrid_train,
    init_params,
    loss_and_grad,
    make_separable_dataset,
    quantum_head,
)
from vqsim.algorithms.kernel import quantum_kernel_matrix
from vqsim.algorithms.portfolio import (
    PortfolioProblem,
    portfolio_optimize,
    portfolio_tape,
    qubo_matrix,
    weights_from_expectations,
)
from vqsim.algorithms.qaoa import (
    PAPER_GRAPH_EDGES,
    MaxCutProblem,
    maxcut_bruteforce,
    qaoa_best_of,
)
from vqsim.algorithms.vqe import VqeProblem, vqe_best_of, vqe_run
from vqsim.cli import main as cli_main
from vqsim.eigensolve import jacobi_eigenvalues
from vqsim.gates import Gate, PauliZObs, Ref
from vqsim.gradients import adjoint_grad, finite_diff_grad, parameter_shift_grad
from vqsim.optimizers import GDConfig, gd_step
from vqsim.random_circuits import random_tape
from vqsim.seeding import rng_from
from vqsim.tape import (
    CircuitTape,
    Device,
    Expval,
    Probs,
    bind_params,
    execute,
    simulate,
)


def _report(number: int, name: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[{status}] criterion {number}: {name}{suffix}")
    assert ok, f"criterion {number} ({name}) failed{suffix}"


def test_criterion_01_bell_fidelity():
    gates = (Gate("H", (0,), ()), Gate("CNOT", (0, 1), ()))
    tape = CircuitTape(2, gates, Probs((0, 1)))
    t0 = time.perf_counter()
    probs = execute(tape, Device(), ())
    elapsed = time.perf_counter() - t0
    err = float(np.max(np.abs(probs - np.array([0.5, 0.0, 0.0, 0.5]))))
    _report(1, "Bell state probabilities", err <= 1e-12 and elapsed < 0.010,
            f"max error {err:.1e}, {elapsed * 1e3:.2f} ms")


def test_criterion_02_gradient_three_way_agreement():
    rng = rng_from(2024)
    device = Device()
    worst_ps_ad = worst_fd = 0.0
    t0 = time.perf_counter()
    for _ in range(50):
        tape, params = random_tape(rng, max_qubits=4, max_gates=12, max_params=8)
        ps = parameter_shift_grad(tape, params, device)
        ad = adjoint_grad(tape, params)
        fd = finite_diff_grad(tape, params, device, h=1e-6)
        if ps.size:
            worst_ps_ad = max(worst_ps_ad, float(np.max(np.abs(ps - ad))))
            worst_fd = max(worst_fd, float(np.max(np.abs(ps - fd))),
                           float(np.max(np.abs(ad - fd))))
    elapsed = time.perf_counter() - t0
    ok = worst_ps_ad <= 1e-9 and worst_fd <= 1e-6 and elapsed < 5.0
    _report(2, "gradient three-way agreement over 50 random tapes", ok,
            f"shift-vs-adjoint {worst_ps_ad:.1e}, vs-FD {worst_fd:.1e}, "
            f"{elapsed:.2f} s")


def test_criterion_03_analytic_derivative():
    tape = CircuitTape(1, (Gate("RY", (0,), (Ref(0),)),), Expval(PauliZObs(0)))
    device = Device()
    worst = 0.0
    for theta in np.linspace(0.0, 2.0 * np.pi, 100, endpoint=False):
        expected = -np.sin(theta)
        ps = parameter_shift_grad(tape, [theta], device)[0]
        ad = adjoint_grad(tape, [theta])[0]
        worst = max(worst, abs(ps - expected), abs(ad - expected))
    _report(3, "d<Z>/dtheta = -sin(theta) on 100 grid points", worst <= 1e-10,
            f"max error {worst:.1e}")


def test_criterion_04_squared_error_descent():
    gates = (
        Gate("RY", (0,), (Ref(0),)),
        Gate("RY", (1,), (Ref(1),)),
        Gate("CNOT", (0, 1), ()),
        Gate("RY", (0,), (Ref(2),)),
    )
    tape = CircuitTape(2, gates, Expval(PauliZObs(0)))
    config = GDConfig(stepsize=0.4)
    params = np.array([0.1, 0.2, 0.3])
    cost = None
    for _ in range(100):
        f = execute(tape, Device(), params)
        grad = 2.0 * (f - 1.0) * adjoint_grad(tape, params)
        params = gd_step(config, params, grad)
        cost = (execute(tape, Device(), params) - 1.0) ** 2
    _report(4, "squared-error cost below 1e-4 in 100 GD steps", cost < 1e-4,
            f"final cost {cost:.2e}")


def test_criterion_05_vqe_ground_state():
    problem = VqeProblem()
    t0 = time.perf_counter()
    best = vqe_best_of(problem, restarts=5, iterations=300, seed=0)
    elapsed = time.perf_counter() - t0
    bound_ok = all(
        rec["cost"] >= -1.23 - 1e-9
        for seed in range(5)
        for rec in vqe_run(problem, iterations=50, seed=seed).iterations
    )
    ok = abs(best.final_value + 1.23) < 1e-3 and bound_ok and elapsed < 5.0
    _report(5, "VQE best-of-5 energy near -1.23 with variational bound", ok,
            f"energy {best.final_value:.6f}, {elapsed:.2f} s")


def test_criterion_06_qaoa_maxcut():
    problem = MaxCutProblem(4, PAPER_GRAPH_EDGES, p=2)
    optimum = maxcut_bruteforce(problem)
    t0 = time.perf_counter()
    best = qaoa_best_of(problem, restarts=5, iterations=100, seed=0)
    elapsed = time.perf_counter() - t0
    ok = (best.final_value >= 3.0 and best.final_value > 2.5
          and best.final_value <= optimum + 1e-9 and elapsed < 10.0)
    _report(6, "QAOA cut expectation in [3.0, optimum]", ok,
            f"cut {best.final_value:.4f}, optimum {optimum}, {elapsed:.2f} s")


def test_criterion_07_kernel_properties():
    X = rng_from(7).uniform(0.0, 2.0 * np.pi, (30, 2))
    K = quantum_kernel_matrix(X, X)
    sym = float(np.max(np.abs(K - K.T)))
    min_eig = float(jacobi_eigenvalues(K)[0])
    diag_ok = bool(np.all(np.diag(K) >= 0.25 - 1e-12)
                   and np.all(np.diag(K) <= 1.0 + 1e-12))
    ok = sym <= 1e-12 and min_eig >= -1e-10 and diag_ok
    _report(7, "kernel Gram matrix symmetric, PSD, sane diagonal", ok,
            f"asymmetry {sym:.1e}, min eigenvalue {min_eig:.1e}")


def test_criterion_08_portfolio_constraints():
    problem = PortfolioProblem()
    q = qubo_matrix(problem)
    q_ok = bool(np.max(np.abs(
        q - (problem.risk_aversion * np.eye(4) - problem.returns))) == 0.0)
    trace = portfolio_optimize(problem, iterations=200, seed=0)
    tape = portfolio_tape(problem)
    device = Device()
    simplex_ok = True
    for rec in trace.iterations:
        w = weights_from_expectations(execute(tape, device, rec["params"]))
        if abs(w.sum() - 1.0) > 1e-12 or np.any(w < -1e-12):
            simplex_ok = False
            break
    w_eq = np.full(4, 0.25)
    r = np.diag(problem.returns)
    cost_eq = -(w_eq @ r - problem.risk_aversion * w_eq @ q @ w_eq)
    ok = q_ok and simplex_ok and trace.final_value <= cost_eq
    _report(8, "portfolio simplex + QUBO formula + beats equal weights", ok,
            f"final {trace.final_value:.6f} vs equal-weights {cost_eq:.6f}")


def test_criterion_09_hybrid_training():
    X, y = make_separable_dataset(100, seed=0)
    trace = hybrid_train(X, y, epochs=10, seed=0)
    decreased = trace.iterations[-1]["cost"] < trace.iterations[0]["cost"]

    def loss_only(flat):
        w, b, q_params = _unflatten(np.asarray(flat, dtype=np.float64))
        total = 0.0
        for x, label in zip(X, y):
            p = 1.0 / (1.0 + np.exp(-quantum_head(w @ x + b, q_params)))
            total += -(label * np.log(p + 1e-12)
                       + (1.0 - label) * np.log(1.0 - p + 1e-12))
        return total / len(X)

    flat = init_params(0)
    _, grad = loss_and_grad(flat, X, y)
    h = 1e-5
    n_classical = N_WIRES * N_FEATURES + N_WIRES
    probe = [0, 17, n_classical - 1,  # affine weights and bias
             n_classical, n_classical + 3, n_classical + 7]  # quantum angles
    worst = 0.0
    for k in probe:
        fp, fm = flat.copy(), flat.copy()
        fp[k] += h
        fm[k] -= h
        fd = (loss_only(fp) - loss_only(fm)) / (2.0 * h)
        worst = max(worst, abs(grad[k] - fd))
    ok = decreased and worst < 1e-4
    _report(9, "hybrid loss decreases and gradients match loss FD", ok,
            f"loss {trace.iterations[0]['cost']:.4f} -> "
            f"{trace.iterations[-1]['cost']:.4f}, max grad error {worst:.1e}")


def test_criterion_10_cli_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["vqe", "--iterations", "30", "--restarts", "2", "--seed", "1"]
    assert cli_main(args + ["--output", str(a)]) == 0
    assert cli_main(args + ["--output", str(b)]) == 0
    capsys.readouterr()
    identical = a.read_bytes() == b.read_bytes()
    _report(10, "repeated CLI invocations are byte-identical", identical)


def test_criterion_11_norm_conservation():
    rng = rng_from(11)
    worst_margin = np.inf
    ok = True
    for _ in range(200):
        tape, params = random_tape(rng, max_qubits=6, max_gates=20, max_params=8)
        state = simulate(tape.n_qubits, bind_params(tape, params))
        drift = abs(np.linalg.norm(state.amplitudes) - 1.0)
        budget = 1e-12 * (1 + len(tape.gates))
        worst_margin = min(worst_margin, budget - drift)
        if drift > budget:
            ok = False
    _report(11, "statevector norm conserved over 200 random circuits", ok,
            f"tightest margin {worst_margin:.1e}")
