"""Per-run optimization trace with JSON serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Trace:
    experiment: str
    seed: int
    config: dict
    iterations: list  # [{"step": int, "cost": float, "params": [float]}]
    final_params: list
    final_value: float
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {
            "experiment": self.experiment,
            "seed": self.seed,
            "config": self.config,
            "iterations": self.iterations,
            "final": {"params": self.final_params, "value": self.final_value},
        }
        if self.extra:
            d["final"].update(self.extra)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "Trace":
        final = dict(d["final"])
        params = final.pop("params")
        value = final.pop("value")
        return cls(
            experiment=d["experiment"],
            seed=d["seed"],
            config=d["config"],
            iterations=d["iterations"],
            final_params=params,
            final_value=value,
            extra=final,
        )

    @classmethod
    def from_json(cls, text: str) -> "Trace":
        return cls.from_dict(json.loads(text))
