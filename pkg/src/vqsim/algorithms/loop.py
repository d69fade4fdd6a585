"""Shared descent loop used by the experiment drivers."""

from __future__ import annotations

import numpy as np

from ..optimizers import make_stepper


def run_descent(cost_grad, x0, config, iterations: int):
    """Minimize via repeated optimizer steps.

    ``cost_grad(x) -> (cost, grad)``.  Returns (records, final_x,
    final_cost) where records[i] holds the cost at step i (step 0 is the
    initial point).
    """
    step = make_stepper(config)
    x = np.asarray(x0, dtype=np.float64).copy()
    cost, grad = cost_grad(x)
    records = [{"step": 0, "cost": float(cost), "params": [float(v) for v in x]}]
    for i in range(1, iterations + 1):
        x = step(x, grad)
        cost, grad = cost_grad(x)
        records.append({"step": i, "cost": float(cost), "params": [float(v) for v in x]})
    return records, x, float(cost)
