from .hybrid import hybrid_train, make_separable_dataset
from .kernel import quantum_kernel_matrix
from .portfolio import PortfolioProblem, portfolio_optimize, qubo_matrix
from .qaoa import MaxCutProblem, maxcut_bruteforce, qaoa_best_of, qaoa_maxcut
from .trace import Trace
from .vqe import VqeProblem, vqe_best_of, vqe_run

__all__ = [
    "Trace",
    "VqeProblem",
    "vqe_run",
    "vqe_best_of",
    "MaxCutProblem",
    "qaoa_maxcut",
    "qaoa_best_of",
    "maxcut_bruteforce",
    "quantum_kernel_matrix",
    "PortfolioProblem",
    "portfolio_optimize",
    "qubo_matrix",
    "hybrid_train",
    "make_separable_dataset",
]
