"""Gate schedule compilation for the randomized simulation schemes.

A schedule is a sequence of repeats; each repeat applies Pauli rotations
``exp(-i * angle * P)`` in its listed order (first gate acts first).  The
sparsified scheme draws, per repeat, a direction (term order forward or
reversed) and an independent keep decision per term; kept terms are
rescaled by ``1 / p_j``, so every repeat is unbiased for the full step
generator regardless of what was dropped.

Randomness contract: one root seed; repeat ``k`` draws from the substream
keyed by ``(seed, k)``, consuming one direction draw and then one uniform
per term, in term order.  Compiling twice with the same arguments yields
byte-identical files.

File format ``gate-schedule-v1`` is line-delimited JSON: a header line,
then one line per repeat.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .bounds import ProbabilityAssignment
from .hamiltonian import HamiltonianSpec, magnitudes

__all__ = [
    "GateOp",
    "GateSchedule",
    "SCHEDULE_FORMAT_TAG",
    "TrotterStep",
    "compile_qdrift",
    "compile_sparsto",
    "compile_trotter1",
    "load_schedule",
    "parse_schedule",
    "save_schedule",
    "serialize_schedule",
    "step_duration_schedule",
]

SCHEDULE_FORMAT_TAG = "gate-schedule-v1"

_DIRECTIONS = ("forward", "reverse")


@dataclass(frozen=True)
class GateOp:
    """One Pauli rotation ``exp(-i * angle * P_pauli)``."""

    pauli: str
    angle: float


@dataclass(frozen=True)
class TrotterStep:
    """One repeat: its index, duration, sweep direction and gate list."""

    repeat_index: int
    duration: float
    direction: str
    gates: tuple[GateOp, ...]

    def __post_init__(self) -> None:
        if self.direction not in _DIRECTIONS:
            raise ValueError(f"direction must be one of {_DIRECTIONS}")
        if self.duration < 0:
            raise ValueError("duration must be nonnegative")


@dataclass(frozen=True)
class GateSchedule:
    """A compiled circuit: repeats in chronological order plus metadata.

    ``expected_gates`` echoes the requested budget ``G``; the realized gate
    count of a sparsified schedule fluctuates around it.  ``seed`` is None
    for deterministic methods.
    """

    n_qubits: int
    method: str
    seed: int | None
    t: float
    expected_gates: float
    repeats: tuple[TrotterStep, ...]

    @property
    def total_duration(self) -> float:
        return float(sum(step.duration for step in self.repeats))

    @property
    def gate_count(self) -> int:
        return sum(len(step.gates) for step in self.repeats)


def step_duration_schedule(t: float, gates: float, mu: float) -> list[float]:
    """Split time ``t`` into repeats of length ``mu * t / G`` plus a remainder.

    Produces ``floor(G / mu)`` equal entries and, when ``t`` is not an
    exact multiple of the step length, one shorter final entry; the entries
    sum to ``t`` and zero-length finals are omitted.

    Raises:
        ValueError: If ``t <= 0``, ``mu <= 0`` or ``G < mu`` (the step
            length may not exceed the total time).
    """
    t = float(t)
    gates = float(gates)
    mu = float(mu)
    if not math.isfinite(t) or t <= 0:
        raise ValueError(f"t must be positive and finite, got {t}")
    if not math.isfinite(mu) or mu <= 0:
        raise ValueError(f"mu must be positive and finite, got {mu}")
    if not math.isfinite(gates) or gates < mu:
        raise ValueError(f"gate budget {gates} must be at least mu = {mu}")
    full = int(gates // mu)
    step = mu * t / gates
    durations = [step] * full
    remainder = t - full * step
    if remainder > 0.0:
        durations.append(remainder)
    return durations


def _substream(seed: int, repeat_index: int) -> np.random.Generator:
    return np.random.default_rng([seed, repeat_index])


def compile_sparsto(
    spec: HamiltonianSpec,
    assignment: ProbabilityAssignment,
    t: float,
    gates: float,
    seed: int,
) -> GateSchedule:
    """Compile the sparsified randomized scheme into a gate schedule.

    Per repeat: draw a direction, then keep term ``j`` independently with
    probability ``p_j`` (terms with ``p_j = 1`` are always kept, though
    their uniform is still consumed to keep the stream layout fixed).
    Kept terms get angle ``duration * c_j / p_j``; the gate list runs over
    kept terms in ascending term order, reversed for reverse repeats.
    """
    if len(assignment) != len(spec):
        raise ValueError("assignment length does not match spec")
    durations = step_duration_schedule(t, gates, assignment.mu)
    coeffs = np.array([term.coeff for term in spec.terms], dtype=float)
    labels = [term.pauli for term in spec.terms]
    p = assignment.p
    repeats = []
    for k, duration in enumerate(durations):
        rng = _substream(seed, k)
        direction = _DIRECTIONS[int(rng.integers(0, 2))]
        keep = rng.random(len(spec)) < p
        indices = np.nonzero(keep)[0]
        if direction == "reverse":
            indices = indices[::-1]
        gates_k = tuple(
            GateOp(pauli=labels[j], angle=duration * coeffs[j] / p[j])
            for j in indices
        )
        repeats.append(
            TrotterStep(
                repeat_index=k, duration=duration, direction=direction, gates=gates_k
            )
        )
    return GateSchedule(
        n_qubits=spec.n_qubits,
        method="sparsto",
        seed=seed,
        t=float(t),
        expected_gates=float(gates),
        repeats=tuple(repeats),
    )


def compile_qdrift(
    spec: HamiltonianSpec, t: float, gates: int, seed: int
) -> GateSchedule:
    """Compile a qDRIFT schedule: ``G`` draws from the magnitude distribution.

    Every drawn gate rotates by ``sign(c_j) * lambda * t / G``.  The whole
    sequence forms a single forward repeat of duration ``t``.

    Raises:
        ValueError: If ``gates`` is not a positive integer.
    """
    if not float(gates).is_integer() or gates < 1:
        raise ValueError(f"qDRIFT gate count must be a positive integer, got {gates}")
    count = int(gates)
    h = magnitudes(spec)
    lam = float(np.sum(h))
    coeffs = np.array([term.coeff for term in spec.terms], dtype=float)
    labels = [term.pauli for term in spec.terms]
    rng = _substream(seed, 0)
    draws = rng.choice(len(spec), size=count, p=h / lam)
    angle = lam * float(t) / count
    gates_out = tuple(
        GateOp(pauli=labels[j], angle=math.copysign(angle, coeffs[j])) for j in draws
    )
    step = TrotterStep(repeat_index=0, duration=float(t), direction="forward", gates=gates_out)
    return GateSchedule(
        n_qubits=spec.n_qubits,
        method="qdrift",
        seed=seed,
        t=float(t),
        expected_gates=float(count),
        repeats=(step,),
    )


def compile_trotter1(spec: HamiltonianSpec, t: float, repeats: int) -> GateSchedule:
    """Compile deterministic first-order Trotter with ``repeats`` forward steps.

    Every step applies all terms in order with angle ``(t / r) * c_j``; the
    gate count is exactly ``r * L`` and no randomness is involved.
    """
    if not float(repeats).is_integer() or repeats < 1:
        raise ValueError(f"repeat count must be a positive integer, got {repeats}")
    r = int(repeats)
    duration = float(t) / r
    gates_one = tuple(
        GateOp(pauli=term.pauli, angle=duration * term.coeff) for term in spec.terms
    )
    steps = tuple(
        TrotterStep(
            repeat_index=k, duration=duration, direction="forward", gates=gates_one
        )
        for k in range(r)
    )
    return GateSchedule(
        n_qubits=spec.n_qubits,
        method="trotter1",
        seed=None,
        t=float(t),
        expected_gates=float(r * len(spec)),
        repeats=steps,
    )


def serialize_schedule(schedule: GateSchedule) -> str:
    """Render as ``gate-schedule-v1``: header line plus one line per repeat."""
    lines = [
        json.dumps(
            {
                "format": SCHEDULE_FORMAT_TAG,
                "n_qubits": schedule.n_qubits,
                "method": schedule.method,
                "seed": schedule.seed,
                "t": schedule.t,
                "expected_gates": schedule.expected_gates,
            },
            separators=(",", ":"),
        )
    ]
    for step in schedule.repeats:
        lines.append(
            json.dumps(
                {
                    "repeat": step.repeat_index,
                    "duration": step.duration,
                    "direction": step.direction,
                    "gates": [
                        {"pauli": g.pauli, "angle": g.angle} for g in step.gates
                    ],
                },
                separators=(",", ":"),
            )
        )
    return "\n".join(lines) + "\n"


def parse_schedule(document: str) -> GateSchedule:
    """Parse ``gate-schedule-v1`` text back into a schedule."""
    lines = [line for line in document.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty schedule document")
    header = json.loads(lines[0])
    if header.get("format") != SCHEDULE_FORMAT_TAG:
        raise ValueError(
            f"format tag must be {SCHEDULE_FORMAT_TAG!r}, got {header.get('format')!r}"
        )
    repeats = []
    for line in lines[1:]:
        data = json.loads(line)
        repeats.append(
            TrotterStep(
                repeat_index=int(data["repeat"]),
                duration=float(data["duration"]),
                direction=data["direction"],
                gates=tuple(
                    GateOp(pauli=g["pauli"], angle=float(g["angle"]))
                    for g in data["gates"]
                ),
            )
        )
    return GateSchedule(
        n_qubits=int(header["n_qubits"]),
        method=header["method"],
        seed=header["seed"],
        t=float(header["t"]),
        expected_gates=float(header["expected_gates"]),
        repeats=tuple(repeats),
    )


def load_schedule(path: str) -> GateSchedule:
    """Read and parse a ``gate-schedule-v1`` file."""
    with open(path, "r", encoding="utf-8") as handle:
        return parse_schedule(handle.read())


def save_schedule(schedule: GateSchedule, path: str) -> None:
    """Write the schedule with LF line endings."""
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(serialize_schedule(schedule))
