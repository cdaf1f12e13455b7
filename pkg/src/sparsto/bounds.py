"""Diamond-norm error bounds for sparsified randomized product formulas.

The compiled channel keeps term ``j`` of each randomized first-order Trotter
step with probability ``p_j``, rescaling kept terms by ``1/p_j``.  With
``h_j = |c_j|``, ``lambda = sum h_j``, ``mu = sum p_j``, gate budget ``G``
and evolution time ``t``, the complete bound on the diamond-norm error is
the four-component sum

    eps1  = (2 t^2 mu / G) * S(u)
    eps2  = (4 t^3 mu^2 / (3 G^2)) * (S(v) + S(w, h))
            + (16 t^3 mu^2 / (9 G^2)) * S(h, h, h)
    eps31 = 2 t^4 mu^3 lambda^4 / (3 G^3)
    eps32 = (2 t^4 mu^3 / (3 G^3)) * (p_1 * ... * p_L) * S(q)^4

over the derived per-term vectors

    u_j = (1/p_j - 1) h_j^2      v_j = (1/p_j^2 - 1) h_j^3
    w_j = (3/p_j - 1) h_j^2      q_j = h_j / p_j

where ``S`` denotes the distinct-index sums of :mod:`sparsto.moments`.
A cheaper variant replaces the distinct-index sums in ``eps2`` by 1-norm
overcounts, and reference curves for qDRIFT, deterministic first-order
Trotter and the all-ones (unsparsified) scheme are provided alongside.
"""

from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from .hamiltonian import HamiltonianSpec, magnitudes, sort_terms_desc
from .moments import s1, s2, s3_aaa, s3_abb
from .pauli import nested_commutator_norm

__all__ = [
    "ANSATZ_TAGS",
    "BoundBreakdown",
    "DerivedVectors",
    "PROB_FORMAT_TAG",
    "ProbabilityAssignment",
    "ProbabilityFile",
    "align_probabilities",
    "all_ones_assignment",
    "derived_vectors",
    "parse_probabilities",
    "qdrift_bound",
    "r1otrott_bound",
    "serialize_probabilities",
    "sparsto_bound",
    "sparsto_commutator_bound",
    "sparsto_norm_bound",
    "trotter1_bound",
]

PROB_FORMAT_TAG = "probabilities-v1"

ANSATZ_TAGS = ("linear", "uniform", "all-one", "custom")

_COMMUTATOR_TERM_LIMIT = 64

# exp() underflows to a subnormal below this; the bound treats that as 0.
_LOG_TINY = math.log(sys.float_info.min)
_LOG_HUGE = math.log(sys.float_info.max)


@dataclass(frozen=True, eq=False)
class ProbabilityAssignment:
    """Per-term keep probabilities, aligned to a spec's term order.

    The first ``active_count`` entries must equal exactly 1; by convention
    they correspond to the largest-magnitude terms, so assignments are
    built against specs sorted in descending magnitude order.

    Attributes:
        p: Keep probabilities, each in ``(0, 1]``.
        active_count: Length of the always-kept prefix.
        ansatz_tag: One of ``linear``, ``uniform``, ``all-one``, ``custom``.
        target_mu: Probability budget the constructor aimed for, when known.
            Falls back to ``sum(p)`` wherever a budget is needed.
    """

    p: np.ndarray
    active_count: int
    ansatz_tag: str
    target_mu: float | None = None

    def __post_init__(self) -> None:
        arr = np.array(self.p, dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("p must be a nonempty one-dimensional vector")
        if not np.all(np.isfinite(arr)):
            raise ValueError("p must contain only finite entries")
        if np.any(arr <= 0.0) or np.any(arr > 1.0):
            raise ValueError("every probability must lie in (0, 1]")
        if not isinstance(self.active_count, int) or isinstance(self.active_count, bool):
            raise ValueError("active_count must be an integer")
        if not 0 <= self.active_count <= arr.size:
            raise ValueError(
                f"active_count must be in [0, {arr.size}], got {self.active_count}"
            )
        if np.any(arr[: self.active_count] != 1.0):
            raise ValueError("the first active_count probabilities must equal 1")
        if self.ansatz_tag not in ANSATZ_TAGS:
            raise ValueError(f"ansatz_tag must be one of {ANSATZ_TAGS}")
        if self.target_mu is not None:
            budget = float(self.target_mu)
            if not math.isfinite(budget) or budget <= 0:
                raise ValueError("target_mu must be positive and finite")
            object.__setattr__(self, "target_mu", budget)
        arr.setflags(write=False)
        object.__setattr__(self, "p", arr)

    @property
    def mu(self) -> float:
        """Realized probability budget ``sum_j p_j``."""
        return float(np.sum(self.p))

    def __len__(self) -> int:
        return int(self.p.size)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProbabilityAssignment):
            return NotImplemented
        return (
            np.array_equal(self.p, other.p)
            and self.active_count == other.active_count
            and self.ansatz_tag == other.ansatz_tag
            and self.target_mu == other.target_mu
        )


def all_ones_assignment(spec: HamiltonianSpec) -> ProbabilityAssignment:
    """The degenerate assignment keeping every term (no sparsification)."""
    n = len(spec)
    return ProbabilityAssignment(
        p=np.ones(n), active_count=n, ansatz_tag="all-one", target_mu=float(n)
    )


@dataclass(frozen=True)
class DerivedVectors:
    """The four per-term vectors entering the bound components."""

    u: np.ndarray
    v: np.ndarray
    w: np.ndarray
    q: np.ndarray


def derived_vectors(h: np.ndarray, p: np.ndarray) -> DerivedVectors:
    """Compute ``u, v, w, q`` from magnitudes ``h`` and probabilities ``p``.

    All four are nonnegative; ``w >= 2 h^2`` and ``q >= h`` entrywise.
    """
    h = np.asarray(h, dtype=float)
    p = np.asarray(p, dtype=float)
    if h.shape != p.shape:
        raise ValueError(f"shape mismatch: {h.shape} vs {p.shape}")
    inv = 1.0 / p
    h2 = h * h
    return DerivedVectors(
        u=(inv - 1.0) * h2,
        v=(inv * inv - 1.0) * h2 * h,
        w=(3.0 * inv - 1.0) * h2,
        q=h * inv,
    )


@dataclass(frozen=True)
class BoundBreakdown:
    """One evaluated error bound, split into its components.

    ``total == eps1 + eps2 + eps31 + eps32`` for the sparsified-scheme
    bounds; reference curves that are single closed forms report their
    value in ``total`` with all components zero.  ``mu`` is None for
    methods that have no probability assignment.
    """

    method: str
    eps1: float
    eps2: float
    eps31: float
    eps32: float
    total: float
    t: float
    gates: float
    n_terms: int
    lam: float
    mu: float | None

    def __post_init__(self) -> None:
        for name in ("eps1", "eps2", "eps31", "eps32", "total"):
            value = getattr(self, name)
            if value < 0 or math.isnan(value):
                raise ValueError(f"{name} must be nonnegative, got {value}")

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "eps1": self.eps1,
            "eps2": self.eps2,
            "eps31": self.eps31,
            "eps32": self.eps32,
            "total": self.total,
            "inputs": {
                "t": self.t,
                "gates": self.gates,
                "n_terms": self.n_terms,
                "lambda": self.lam,
                "mu": self.mu,
            },
        }


def _check_time_gates(t: float, gates: float) -> tuple[float, float]:
    t = float(t)
    gates = float(gates)
    if not math.isfinite(t) or t <= 0:
        raise ValueError(f"t must be positive and finite, got {t}")
    if not math.isfinite(gates) or gates <= 0:
        raise ValueError(f"gates must be positive and finite, got {gates}")
    return t, gates


def _check_assignment(spec: HamiltonianSpec, assignment: ProbabilityAssignment) -> None:
    if len(assignment) != len(spec):
        raise ValueError(
            f"assignment length {len(assignment)} does not match term count {len(spec)}"
        )


def _nonneg(x: float) -> float:
    # The distinct-index sums of nonnegative vectors are nonnegative in
    # exact arithmetic; floor tiny negative rounding residue at zero.
    return x if x > 0.0 else 0.0


def _tail_components(
    t: float, gates: float, mu: float, lam: float, p: np.ndarray, q: np.ndarray
) -> tuple[float, float]:
    """The two fourth-order tail components eps31 and eps32."""
    coef = 2.0 * t**4 * mu**3 / (3.0 * gates**3)
    eps31 = coef * lam**4
    exponent = float(np.sum(np.log(p))) + 4.0 * math.log(s1(q))
    if exponent < _LOG_TINY:
        factor = 0.0
    elif exponent > _LOG_HUGE:
        factor = math.inf
    else:
        factor = math.exp(exponent)
    return eps31, coef * factor


def sparsto_bound(
    spec: HamiltonianSpec,
    assignment: ProbabilityAssignment,
    t: float,
    gates: float,
) -> BoundBreakdown:
    """Complete four-component bound for the sparsified randomized scheme.

    Args:
        spec: Hamiltonian; needs at least 3 terms (the second-order
            component sums over distinct index triples).
        assignment: Keep probabilities aligned with ``spec.terms``.
        t: Evolution time, positive.
        gates: Expected gate budget ``G``, positive (not necessarily an
            integer; fractional repeat counts are evaluated as-is).

    Returns:
        The component breakdown; ``total`` is the sum of the four parts.
    """
    t, gates = _check_time_gates(t, gates)
    _check_assignment(spec, assignment)
    if len(spec) < 3:
        raise ValueError(f"bound requires at least 3 terms, got {len(spec)}")
    h = magnitudes(spec)
    p = assignment.p
    lam = float(np.sum(h))
    mu = assignment.mu
    vecs = derived_vectors(h, p)

    eps1 = (2.0 * t * t * mu / gates) * _nonneg(s1(vecs.u))
    eps2 = (4.0 * t**3 * mu * mu / (3.0 * gates * gates)) * (
        _nonneg(s1(vecs.v)) + _nonneg(s2(vecs.w, h))
    ) + (16.0 * t**3 * mu * mu / (9.0 * gates * gates)) * _nonneg(s3_aaa(h))
    eps31, eps32 = _tail_components(t, gates, mu, lam, p, vecs.q)
    return BoundBreakdown(
        method="sparsto",
        eps1=eps1,
        eps2=eps2,
        eps31=eps31,
        eps32=eps32,
        total=eps1 + eps2 + eps31 + eps32,
        t=t,
        gates=gates,
        n_terms=len(spec),
        lam=lam,
        mu=mu,
    )


def sparsto_norm_bound(
    spec: HamiltonianSpec,
    assignment: ProbabilityAssignment,
    t: float,
    gates: float,
    _method: str = "sparsto_norm",
) -> BoundBreakdown:
    """Looser variant of :func:`sparsto_bound` using 1-norm overcounts.

    The second-order component is replaced by

        eps2 = (4 t^3 mu^2 / (3 G^2)) * (||v||_1 + lambda ||w||_1 + 4 lambda^3 / 3)

    which never falls below the distinct-index form; the other three
    components are identical.  Useful when the exact moment sums are not
    wanted, and as a dominance check on the complete bound.
    """
    t, gates = _check_time_gates(t, gates)
    _check_assignment(spec, assignment)
    if len(spec) < 3:
        raise ValueError(f"bound requires at least 3 terms, got {len(spec)}")
    h = magnitudes(spec)
    p = assignment.p
    lam = float(np.sum(h))
    mu = assignment.mu
    vecs = derived_vectors(h, p)

    eps1 = (2.0 * t * t * mu / gates) * _nonneg(s1(vecs.u))
    eps2 = (4.0 * t**3 * mu * mu / (3.0 * gates * gates)) * (
        s1(vecs.v) + lam * s1(vecs.w) + 4.0 * lam**3 / 3.0
    )
    eps31, eps32 = _tail_components(t, gates, mu, lam, p, vecs.q)
    return BoundBreakdown(
        method=_method,
        eps1=eps1,
        eps2=eps2,
        eps31=eps31,
        eps32=eps32,
        total=eps1 + eps2 + eps31 + eps32,
        t=t,
        gates=gates,
        n_terms=len(spec),
        lam=lam,
        mu=mu,
    )


def r1otrott_bound(spec: HamiltonianSpec, t: float, gates: float) -> BoundBreakdown:
    """Bound for the unsparsified randomized first-order Trotter scheme.

    Equals the 1-norm bound at the all-ones assignment: the leading term
    is ``(8 t^3 L^2 / (3 G^2)) (lambda sum h^2 + 2 lambda^3 / 3)`` and the
    reported total carries the same fourth-order tails as the complete
    bound at ``p = 1``.
    """
    return sparsto_norm_bound(
        spec, all_ones_assignment(spec), t, gates, _method="r1otrott"
    )


def qdrift_bound(spec: HamiltonianSpec, t: float, gates: float) -> BoundBreakdown:
    """qDRIFT reference bound ``4 lambda^2 t^2 / G``."""
    t, gates = _check_time_gates(t, gates)
    lam = float(np.sum(magnitudes(spec)))
    total = 4.0 * lam * lam * t * t / gates
    return BoundBreakdown(
        method="qdrift",
        eps1=0.0,
        eps2=0.0,
        eps31=0.0,
        eps32=0.0,
        total=total,
        t=t,
        gates=gates,
        n_terms=len(spec),
        lam=lam,
        mu=None,
    )


def trotter1_bound(spec: HamiltonianSpec, t: float, gates: float) -> BoundBreakdown:
    """Deterministic first-order Trotter reference bound ``L lambda^2 t^2 / (2G)``.

    ``gates`` is taken at face value; callers that need an integer repeat
    count should evaluate at ``G = r * L``.
    """
    t, gates = _check_time_gates(t, gates)
    lam = float(np.sum(magnitudes(spec)))
    total = len(spec) * lam * lam * t * t / (2.0 * gates)
    return BoundBreakdown(
        method="trotter1",
        eps1=0.0,
        eps2=0.0,
        eps31=0.0,
        eps32=0.0,
        total=total,
        t=t,
        gates=gates,
        n_terms=len(spec),
        lam=lam,
        mu=None,
    )


def sparsto_commutator_bound(
    spec: HamiltonianSpec,
    assignment: ProbabilityAssignment,
    t: float,
    gates: float,
) -> BoundBreakdown:
    """Complete bound with the commutator-aware second-order refinement.

    The ``(16 t^3 mu^2 / (9 G^2)) S(h,h,h)`` piece of ``eps2`` is replaced
    by the structure-aware sum

        8 t^3 mu^2 / (9 G^2) * sum_{j<k<l} (||[P_l, [P_j, P_k]]||
                                            + ||[[P_k, P_l], P_j]||) h_j h_k h_l

    whose nested Pauli commutator norms are 0 or 4, so commuting term
    triples drop out entirely.  Never exceeds the unrefined ``eps2``.
    Cubic in the term count; refuses more than 64 terms.
    """
    t, gates = _check_time_gates(t, gates)
    _check_assignment(spec, assignment)
    n = len(spec)
    if n < 3:
        raise ValueError(f"bound requires at least 3 terms, got {n}")
    if n > _COMMUTATOR_TERM_LIMIT:
        raise ValueError(
            f"commutator refinement capped at {_COMMUTATOR_TERM_LIMIT} terms, got {n}"
        )
    h = magnitudes(spec)
    p = assignment.p
    labels = [term.pauli for term in spec.terms]
    lam = float(np.sum(h))
    mu = assignment.mu
    vecs = derived_vectors(h, p)

    triple = 0.0
    for j in range(n):
        for k in range(j + 1, n):
            for l in range(k + 1, n):
                norms = nested_commutator_norm(
                    labels[l], labels[j], labels[k]
                ) + nested_commutator_norm(labels[j], labels[k], labels[l])
                if norms:
                    triple += norms * h[j] * h[k] * h[l]

    eps1 = (2.0 * t * t * mu / gates) * _nonneg(s1(vecs.u))
    eps2 = (4.0 * t**3 * mu * mu / (3.0 * gates * gates)) * (
        _nonneg(s1(vecs.v)) + _nonneg(s2(vecs.w, h))
    ) + (8.0 * t**3 * mu * mu / (9.0 * gates * gates)) * triple
    eps31, eps32 = _tail_components(t, gates, mu, lam, p, vecs.q)
    return BoundBreakdown(
        method="sparsto_commutator",
        eps1=eps1,
        eps2=eps2,
        eps31=eps31,
        eps32=eps32,
        total=eps1 + eps2 + eps31 + eps32,
        t=t,
        gates=gates,
        n_terms=n,
        lam=lam,
        mu=mu,
    )


@dataclass(frozen=True)
class ProbabilityFile:
    """Parsed ``probabilities-v1`` document, before alignment to a spec.

    ``hamiltonian_order`` says how the ``p`` vector is aligned: ``"file"``
    means positionally with the Hamiltonian document's term order,
    ``"sorted_desc"`` with the descending-magnitude order.
    """

    hamiltonian_order: str
    active_count: int
    p: tuple[float, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if self.hamiltonian_order not in ("file", "sorted_desc"):
            raise ValueError(
                "hamiltonian_order must be 'file' or 'sorted_desc', "
                f"got {self.hamiltonian_order!r}"
            )
        if not isinstance(self.active_count, int) or isinstance(self.active_count, bool):
            raise ValueError("active_count must be an integer")
        if not 0 <= self.active_count <= len(self.p):
            raise ValueError("active_count out of range")


def parse_probabilities(document: str | bytes) -> ProbabilityFile:
    """Parse a ``probabilities-v1`` JSON document."""
    if isinstance(document, bytes):
        document = document.decode("utf-8")
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError("document root must be a JSON object")
    if data.get("format") != PROB_FORMAT_TAG:
        raise ValueError(
            f"format tag must be {PROB_FORMAT_TAG!r}, got {data.get('format')!r}"
        )
    raw_p = data.get("p")
    if not isinstance(raw_p, list) or len(raw_p) == 0:
        raise ValueError("p must be a nonempty list")
    p = []
    for index, value in enumerate(raw_p):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ValueError(f"p[{index}] must be a number, got {value!r}")
        value = float(value)
        if not 0.0 < value <= 1.0:
            raise ValueError(f"p[{index}] must lie in (0, 1], got {value}")
        p.append(value)
    active_count = data.get("active_count", 0)
    return ProbabilityFile(
        hamiltonian_order=data.get("hamiltonian_order", "file"),
        active_count=active_count,
        p=tuple(p),
    )


def serialize_probabilities(assignment: ProbabilityAssignment) -> str:
    """Serialize an assignment as ``probabilities-v1`` in sorted_desc order."""
    doc = {
        "format": PROB_FORMAT_TAG,
        "hamiltonian_order": "sorted_desc",
        "active_count": assignment.active_count,
        "p": [float(x) for x in assignment.p],
    }
    return json.dumps(doc, indent=1)


def align_probabilities(
    spec: HamiltonianSpec, prob_file: ProbabilityFile
) -> tuple[HamiltonianSpec, ProbabilityAssignment]:
    """Align a parsed probability file with a spec.

    Returns the descending-magnitude-sorted spec together with the
    assignment permuted into that order (tag ``custom``).

    Raises:
        ValueError: On a length mismatch, or when the permuted vector does
            not carry exactly 1 on its first ``active_count`` entries.
    """
    if len(prob_file.p) != len(spec):
        raise ValueError(
            f"probability vector length {len(prob_file.p)} does not match "
            f"term count {len(spec)}"
        )
    spec_sorted = sort_terms_desc(spec)
    p = np.array(prob_file.p, dtype=float)
    if prob_file.hamiltonian_order == "file":
        order = sorted(range(len(spec)), key=lambda j: -abs(spec.terms[j].coeff))
        p = p[np.array(order)]
    assignment = ProbabilityAssignment(
        p=p, active_count=prob_file.active_count, ansatz_tag="custom"
    )
    return spec_sorted, assignment
