"""Textual circuit format, one gate per line.

Grammar (blank lines and ``#`` comments are skipped)::

    QUBITS n                      # optional; inferred from wires if absent
    GATE wire[,wire] [literal | $index]
    MEASURE expval P(i)[*P(j)...]   # P in {X, Y, Z}; repeat for a list
    MEASURE probs i,j,...

Printing is canonical: parse -> print -> parse -> print is byte-stable.
"""

from __future__ import annotations

import re

from .exceptions import ValidationError
from .gates import GATE_KINDS, Gate, PauliProduct, PauliZObs, Ref
from .tape import CircuitTape, Expval, ExpvalList, Probs

_FACTOR_RE = re.compile(r"^([XYZ])\((\d+)\)$")


def _parse_param(token: str):
    if token.startswith("$"):
        return Ref(int(token[1:]))
    return float(token)


def _parse_observable(text: str):
    factors = []
    for part in text.split("*"):
        m = _FACTOR_RE.match(part.strip())
        if m is None:
            raise ValidationError(f"bad observable factor {part!r}")
        factors.append((m.group(1), int(m.group(2))))
    if len(factors) == 1 and factors[0][0] == "Z":
        return PauliZObs(factors[0][1])
    return PauliProduct(tuple(factors))


def parse_circuit(text: str) -> CircuitTape:
    n_qubits = None
    gates = []
    observables = []
    probs_wires = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "QUBITS":
            n_qubits = int(tokens[1])
        elif head == "MEASURE":
            if len(tokens) < 3:
                raise ValidationError(f"bad measurement line {line!r}")
            if tokens[1] == "expval":
                observables.append(_parse_observable(tokens[2]))
            elif tokens[1] == "probs":
                probs_wires = tuple(int(w) for w in tokens[2].split(","))
            else:
                raise ValidationError(f"unknown measurement {tokens[1]!r}")
        elif head in GATE_KINDS:
            wires = tuple(int(w) for w in tokens[1].split(","))
            params = tuple(_parse_param(t) for t in tokens[2:])
            gates.append(Gate(head, wires, params))
        else:
            raise ValidationError(f"unknown circuit line {line!r}")
    if observables and probs_wires is not None:
        raise ValidationError("cannot mix expval and probs measurements")
    if probs_wires is not None:
        measurement = Probs(probs_wires)
    elif len(observables) == 1:
        measurement = Expval(observables[0])
    elif observables:
        measurement = ExpvalList(tuple(observables))
    else:
        raise ValidationError("circuit has no MEASURE line")
    if n_qubits is None:
        used = [w for g in gates for w in g.wires]
        used += [w for w in (probs_wires or ())]
        for obs in observables:
            if isinstance(obs, PauliZObs):
                used.append(obs.wire)
            else:
                used += [w for _, w in obs.factors]
        n_qubits = max(used) + 1
    return CircuitTape(n_qubits, tuple(gates), measurement)


def _format_param(p) -> str:
    if isinstance(p, Ref):
        return f"${p.index}"
    return repr(float(p))


def _format_observable(obs) -> str:
    if isinstance(obs, PauliZObs):
        return f"Z({obs.wire})"
    return "*".join(f"{p}({w})" for p, w in obs.factors)


def format_circuit(tape: CircuitTape) -> str:
    lines = [f"QUBITS {tape.n_qubits}"]
    for g in tape.gates:
        parts = [g.kind, ",".join(str(w) for w in g.wires)]
        parts += [_format_param(p) for p in g.params]
        lines.append(" ".join(parts))
    m = tape.measurement
    if isinstance(m, Probs):
        lines.append("MEASURE probs " + ",".join(str(w) for w in m.wires))
    elif isinstance(m, Expval):
        lines.append("MEASURE expval " + _format_observable(m.obs))
    else:
        for obs in m.observables:
            lines.append("MEASURE expval " + _format_observable(obs))
    return "\n".join(lines) + "\n"
