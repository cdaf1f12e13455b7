"""Dense superoperator simulation of schedules and their error metrics.

Conventions: density matrices are vectorized column-major, so a channel
``rho -> U rho U^dag`` acts as the matrix ``kron(conj(U), U)`` and channels
compose by matrix product in chronological order.  The Choi state of a
channel on dimension ``d`` is ``(Phi otimes id)`` applied to the maximally
entangled state; trace distance between Choi states lower-bounds the
diamond-norm distance and is the error metric reported here.

Everything in this module is a dense reference implementation for small
systems, guarded at 6 qubits for channels and 12 for plain Pauli matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import ProbabilityAssignment, sparsto_bound
from .hamiltonian import HamiltonianSpec
from .schedule import GateSchedule, step_duration_schedule

__all__ = [
    "ChannelErrorReport",
    "choi_state",
    "choi_trace_distance",
    "empirical_error",
    "expected_step_derivative",
    "expected_step_exact",
    "expected_step_mc",
    "gate_unitary",
    "hamiltonian_matrix",
    "ideal_channel",
    "liouvillian",
    "pauli_to_matrix",
    "schedule_channel",
    "term_liouvillian",
    "unitary_superop",
]

_MATRIX_QUBIT_LIMIT = 12
_CHANNEL_QUBIT_LIMIT = 6
_ENUMERATION_TERM_LIMIT = 12

_SINGLE = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def pauli_to_matrix(label: str) -> np.ndarray:
    """Dense matrix of a Pauli string; leftmost character is qubit 0."""
    if len(label) > _MATRIX_QUBIT_LIMIT:
        raise ValueError(
            f"dense Pauli matrices capped at {_MATRIX_QUBIT_LIMIT} qubits, "
            f"got {len(label)}"
        )
    out = np.array([[1.0 + 0j]])
    for ch in label:
        out = np.kron(out, _SINGLE[ch])
    return out


def hamiltonian_matrix(spec: HamiltonianSpec) -> np.ndarray:
    """Dense ``sum_j c_j P_j``."""
    dim = 2**spec.n_qubits
    out = np.zeros((dim, dim), dtype=complex)
    for term in spec.terms:
        out += term.coeff * pauli_to_matrix(term.pauli)
    return out


def _check_channel_size(n_qubits: int) -> None:
    if n_qubits > _CHANNEL_QUBIT_LIMIT:
        raise ValueError(
            f"dense channels capped at {_CHANNEL_QUBIT_LIMIT} qubits, got {n_qubits}"
        )


def unitary_superop(u: np.ndarray) -> np.ndarray:
    """Superoperator of ``rho -> u rho u^dag`` (column-major vectorization)."""
    return np.kron(u.conj(), u)


def gate_unitary(pauli: str, angle: float) -> np.ndarray:
    """Unitary ``exp(-i * angle * P) = cos(angle) I - i sin(angle) P``."""
    p = pauli_to_matrix(pauli)
    dim = p.shape[0]
    return math.cos(angle) * np.eye(dim, dtype=complex) - 1j * math.sin(angle) * p


def ideal_channel(spec: HamiltonianSpec, t: float) -> np.ndarray:
    """Superoperator of exact evolution ``rho -> e^{-iHt} rho e^{iHt}``."""
    _check_channel_size(spec.n_qubits)
    h = hamiltonian_matrix(spec)
    evals, evecs = np.linalg.eigh(h)
    u = (evecs * np.exp(-1j * evals * t)) @ evecs.conj().T
    return unitary_superop(u)


def liouvillian(spec: HamiltonianSpec) -> np.ndarray:
    """Superoperator of the generator ``rho -> -i [H, rho]``."""
    _check_channel_size(spec.n_qubits)
    h = hamiltonian_matrix(spec)
    eye = np.eye(h.shape[0], dtype=complex)
    return -1j * (np.kron(eye, h) - np.kron(h.T, eye))


def term_liouvillian(spec: HamiltonianSpec, index: int) -> np.ndarray:
    """Generator of term ``index`` alone: ``rho -> -i c_j [P_j, rho]``."""
    _check_channel_size(spec.n_qubits)
    term = spec.terms[index]
    p = pauli_to_matrix(term.pauli)
    eye = np.eye(p.shape[0], dtype=complex)
    return -1j * term.coeff * (np.kron(eye, p) - np.kron(p.T, eye))


def schedule_channel(schedule: GateSchedule) -> np.ndarray:
    """Superoperator of a whole schedule (first repeat acts first).

    Each repeat is a unitary conjugation, so the repeat unitaries are
    composed first and converted to a superoperator once; this equals the
    product of per-gate superoperators in chronological order.
    """
    _check_channel_size(schedule.n_qubits)
    dim = 2**schedule.n_qubits
    u_total = np.eye(dim, dtype=complex)
    for step in schedule.repeats:
        for gate in step.gates:
            u_total = gate_unitary(gate.pauli, gate.angle) @ u_total
    return unitary_superop(u_total)


def _composite_unitary(
    labels: list[str], angles: np.ndarray, order: np.ndarray, dim: int
) -> np.ndarray:
    u = np.eye(dim, dtype=complex)
    for j in order:
        u = gate_unitary(labels[j], float(angles[j])) @ u
    return u


def expected_step_exact(
    spec: HamiltonianSpec, assignment: ProbabilityAssignment, s: float
) -> np.ndarray:
    """Exact expectation of one sparsified step of duration ``s``.

    Enumerates every keep pattern (only over terms with ``p_j < 1``) with
    its product weight; each pattern contributes the average of its forward
    and reversed gate sweep.  ``s`` may be any real number, which makes the
    expectation differentiable at 0 for derivative checks.

    Raises:
        ValueError: Beyond 12 terms or 6 qubits (exponential enumeration).
    """
    _check_channel_size(spec.n_qubits)
    n = len(spec)
    if n > _ENUMERATION_TERM_LIMIT:
        raise ValueError(
            f"exact enumeration capped at {_ENUMERATION_TERM_LIMIT} terms, got {n}"
        )
    if len(assignment) != n:
        raise ValueError("assignment length does not match spec")
    dim = 2**spec.n_qubits
    p = assignment.p
    labels = [term.pauli for term in spec.terms]
    coeffs = np.array([term.coeff for term in spec.terms], dtype=float)
    angles = s * coeffs / p
    free = np.nonzero(p < 1.0)[0]
    always = p >= 1.0
    out = np.zeros((dim * dim, dim * dim), dtype=complex)
    for mask in range(1 << free.size):
        keep = always.copy()
        weight = 1.0
        for bit, j in enumerate(free):
            if mask >> bit & 1:
                keep[j] = True
                weight *= p[j]
            else:
                weight *= 1.0 - p[j]
        included = np.nonzero(keep)[0]
        u_fwd = _composite_unitary(labels, angles, included, dim)
        u_rev = _composite_unitary(labels, angles, included[::-1], dim)
        out += (0.5 * weight) * (unitary_superop(u_fwd) + unitary_superop(u_rev))
    return out


def expected_step_mc(
    spec: HamiltonianSpec,
    assignment: ProbabilityAssignment,
    s: float,
    samples: int,
    seed: int,
) -> tuple[np.ndarray, float]:
    """Monte Carlo estimate of the expected step, with a dispersion figure.

    Sample ``i`` draws keep decisions from the substream ``(seed, i)`` and
    contributes the forward/reverse average of its sweep, matching the
    estimand of :func:`expected_step_exact`.  Returns the sample mean and
    the largest entrywise standard error.

    Raises:
        ValueError: For fewer than 2 samples.
    """
    _check_channel_size(spec.n_qubits)
    if samples < 2:
        raise ValueError(f"need at least 2 samples, got {samples}")
    if len(assignment) != len(spec):
        raise ValueError("assignment length does not match spec")
    dim = 2**spec.n_qubits
    p = assignment.p
    labels = [term.pauli for term in spec.terms]
    coeffs = np.array([term.coeff for term in spec.terms], dtype=float)
    angles = s * coeffs / p
    # Entrywise Welford accumulation: numerically stable, and a constant
    # stream of draws (deterministic assignment) yields exactly zero spread.
    mean = np.zeros((dim * dim, dim * dim), dtype=complex)
    m2 = np.zeros((dim * dim, dim * dim), dtype=float)
    for i in range(samples):
        rng = np.random.default_rng([seed, i])
        included = np.nonzero(rng.random(len(spec)) < p)[0]
        u_fwd = _composite_unitary(labels, angles, included, dim)
        u_rev = _composite_unitary(labels, angles, included[::-1], dim)
        draw = 0.5 * (unitary_superop(u_fwd) + unitary_superop(u_rev))
        delta = draw - mean
        mean += delta / (i + 1)
        m2 += (delta.conj() * (draw - mean)).real
    var = np.maximum(m2, 0.0) / (samples - 1)
    max_se = float(np.sqrt(np.max(var) / samples))
    return mean, max_se


def expected_step_derivative(
    spec: HamiltonianSpec,
    assignment: ProbabilityAssignment,
    order: int,
    step: float = 1e-2,
    refine: bool = True,
) -> np.ndarray:
    """Taylor coefficient of the expected step at duration 0, by central
    differences.

    ``order`` 1 returns the coefficient of ``s`` (the generator of the
    expected dynamics); ``order`` 2 returns the coefficient of ``s**2``,
    i.e. half the second derivative.  With ``refine`` the stencil is
    evaluated at ``step``, ``step/2`` and ``step/4`` and
    Richardson-extrapolated twice (both centered stencils have even-power
    error series).
    """
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")

    def stencil(h: float) -> np.ndarray:
        plus = expected_step_exact(spec, assignment, h)
        minus = expected_step_exact(spec, assignment, -h)
        if order == 1:
            return (plus - minus) / (2.0 * h)
        dim = plus.shape[0]
        return (plus - 2.0 * np.eye(dim, dtype=complex) + minus) / (2.0 * h * h)

    if not refine:
        return stencil(step)
    d1 = stencil(step)
    d2 = stencil(step / 2)
    d3 = stencil(step / 4)
    r1 = (4.0 * d2 - d1) / 3.0
    r2 = (4.0 * d3 - d2) / 3.0
    return (16.0 * r2 - r1) / 15.0


def choi_state(superop: np.ndarray) -> np.ndarray:
    """Choi state of a channel given as a superoperator (trace 1 for CPTP)."""
    dim_sq = superop.shape[0]
    d = math.isqrt(dim_sq)
    if d * d != dim_sq or superop.shape != (dim_sq, dim_sq):
        raise ValueError(f"superoperator must be d^2 x d^2, got {superop.shape}")
    # J[m*d+i, n*d+j] = M[m + d*n, i + d*j] / d
    m4 = superop.reshape(d, d, d, d)
    return m4.transpose(1, 3, 0, 2).reshape(dim_sq, dim_sq) / d


def choi_trace_distance(superop_a: np.ndarray, superop_b: np.ndarray) -> float:
    """Trace norm of the Choi-state difference of two channels.

    A lower bound on the diamond-norm distance; ranges up to 2 for
    trace-preserving channels.
    """
    delta = choi_state(superop_a) - choi_state(superop_b)
    return float(np.sum(np.linalg.svd(delta, compute_uv=False)))


@dataclass(frozen=True)
class ChannelErrorReport:
    """Measured channel error next to the matching bound total.

    ``samples == 0`` marks exact enumeration; for Monte Carlo runs
    ``standard_error`` carries the largest per-step entrywise standard
    error of the estimated step superoperators.
    """

    metric: str
    value: float
    bound_total: float
    t: float
    gates: float
    mu: float
    samples: int
    standard_error: float

    def to_dict(self) -> dict:
        return {
            "metric": self.metric,
            "value": self.value,
            "bound_total": self.bound_total,
            "t": self.t,
            "gates": self.gates,
            "mu": self.mu,
            "samples": self.samples,
            "standard_error": self.standard_error,
        }


def empirical_error(
    spec: HamiltonianSpec,
    assignment: ProbabilityAssignment,
    t: float,
    gates: float,
    mode: str = "exact",
    samples: int = 0,
    seed: int = 0,
) -> ChannelErrorReport:
    """Compare the compiled scheme's expected channel to ideal evolution.

    Builds the expected step superoperator (exactly, or by Monte Carlo over
    keep patterns), composes it along the duration schedule, and reports
    the Choi trace distance to ``exp(-iHt)`` conjugation together with the
    complete bound total at the same arguments.
    """
    if mode not in ("exact", "mc"):
        raise ValueError(f"mode must be 'exact' or 'mc', got {mode!r}")
    mu = assignment.mu
    durations = step_duration_schedule(t, gates, mu)
    full = int(float(gates) // mu)
    se = 0.0
    if mode == "exact":
        e_full = expected_step_exact(spec, assignment, durations[0])
    else:
        e_full, se = expected_step_mc(spec, assignment, durations[0], samples, seed)
    channel = np.linalg.matrix_power(e_full, full)
    if len(durations) > full:
        if mode == "exact":
            e_rem = expected_step_exact(spec, assignment, durations[full])
        else:
            e_rem, se_rem = expected_step_mc(
                spec, assignment, durations[full], samples, seed + 1
            )
            se = max(se, se_rem)
        channel = e_rem @ channel
    value = choi_trace_distance(channel, ideal_channel(spec, t))
    bound = sparsto_bound(spec, assignment, t, gates)
    return ChannelErrorReport(
        metric="choi_trace_distance",
        value=value,
        bound_total=bound.total,
        t=float(t),
        gates=float(gates),
        mu=mu,
        samples=0 if mode == "exact" else samples,
        standard_error=se,
    )
