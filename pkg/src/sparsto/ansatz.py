"""Probability ansatz construction and grid search over sparsification budgets.

Two one-parameter families over a spec sorted by descending magnitude:

* linear: the ``active_count`` largest terms are always kept; the rest get
  ``p_j = c h_j`` with ``c`` fixed by the budget ``mu = sum p_j``.  This is
  the stationary point of the leading bound component under a total budget
  constraint, valid while every scaled probability stays below 1.
* uniform: the prefix is kept and every remaining term gets the same
  probability ``mu_prime``.

``grid_optimize`` scans a fixed grid of active fractions and residual
budgets, evaluates the complete bound at every feasible point, and reports
the minimizer.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .bounds import BoundBreakdown, ProbabilityAssignment, sparsto_bound
from .hamiltonian import HamiltonianSpec, is_sorted_desc, magnitudes

__all__ = [
    "AnsatzConfig",
    "DEFAULT_ACTIVE_FRACTIONS",
    "DEFAULT_MU_PRIMES",
    "GridRecord",
    "InfeasibleAnsatzError",
    "KKTReport",
    "OptimizationReport",
    "grid_csv",
    "grid_optimize",
    "kkt_verify",
    "linear_ansatz_probs",
    "report_json",
    "uniform_ansatz_probs",
]

DEFAULT_ACTIVE_FRACTIONS: tuple[float, ...] = tuple(i / 10 for i in range(11))

DEFAULT_MU_PRIMES: tuple[float, ...] = (1e-5, 1e-4, 1e-3) + tuple(
    i / 10 for i in range(1, 11)
)


class InfeasibleAnsatzError(ValueError):
    """Linear ansatz regularity failure: some inactive probability reached 1.

    Attributes:
        index: Position (in sorted term order) of the first violating term.
        value: The offending candidate probability.
    """

    def __init__(self, index: int, value: float):
        super().__init__(
            f"linear ansatz infeasible: candidate p[{index}] = {value} is not < 1"
        )
        self.index = index
        self.value = value


def _require_sorted(spec: HamiltonianSpec) -> np.ndarray:
    if not is_sorted_desc(spec):
        raise ValueError("spec terms must be sorted by descending magnitude")
    return magnitudes(spec)


def linear_ansatz_probs(
    spec: HamiltonianSpec, active_count: int, mu: float
) -> ProbabilityAssignment:
    """Magnitude-proportional probabilities under a total budget.

    Keeps the ``active_count`` largest terms with probability 1 and assigns
    ``p_j = c h_j`` to the rest, with ``c = (mu - active_count) / sum_rest h``.

    Args:
        spec: Spec sorted in descending magnitude order.
        active_count: Size of the always-kept prefix, ``0 <= A <= L``.
        mu: Target budget ``sum p_j``; must satisfy ``A < mu <= L``
            (``mu == L`` only together with ``A == L``).

    Returns:
        The assignment (tag ``linear``, or ``all-one`` when ``A == L``),
        carrying ``mu`` as its target budget.

    Raises:
        InfeasibleAnsatzError: When some inactive candidate reaches 1.
        ValueError: On an unsorted spec or out-of-range arguments.
    """
    h = _require_sorted(spec)
    n = len(spec)
    if not 0 <= active_count <= n:
        raise ValueError(f"active_count must be in [0, {n}], got {active_count}")
    mu = float(mu)
    if active_count == n:
        if mu != float(n):
            raise ValueError(f"with all terms active the budget must be {n}, got {mu}")
        return ProbabilityAssignment(
            p=np.ones(n), active_count=n, ansatz_tag="all-one", target_mu=mu
        )
    if not active_count < mu <= n:
        raise ValueError(
            f"budget must satisfy {active_count} < mu <= {n}, got {mu}"
        )
    rest = h[active_count:]
    # Accumulate the inactive mass smallest-first: the accurate order for
    # descending-sorted magnitudes, and budgets quoted as round totals then
    # yield exact proportionality constants (0.6/0.6 -> c = 1 bit-exact).
    rest_mass = 0.0
    for value in rest[::-1]:
        rest_mass += float(value)
    scale = (mu - active_count) / rest_mass
    candidate = scale * rest
    bad = np.nonzero(candidate >= 1.0)[0]
    if bad.size:
        first = int(bad[0])
        raise InfeasibleAnsatzError(active_count + first, float(candidate[first]))
    p = np.concatenate([np.ones(active_count), candidate])
    return ProbabilityAssignment(
        p=p, active_count=active_count, ansatz_tag="linear", target_mu=mu
    )


def uniform_ansatz_probs(
    spec: HamiltonianSpec, active_count: int, mu_prime: float
) -> ProbabilityAssignment:
    """Flat probabilities ``mu_prime`` outside the always-kept prefix.

    Always feasible for ``0 < mu_prime <= 1``; at ``mu_prime == 1`` the
    assignment degenerates to all-ones regardless of ``active_count``.
    """
    _require_sorted(spec)
    n = len(spec)
    if not 0 <= active_count <= n:
        raise ValueError(f"active_count must be in [0, {n}], got {active_count}")
    mu_prime = float(mu_prime)
    if not 0.0 < mu_prime <= 1.0:
        raise ValueError(f"mu_prime must lie in (0, 1], got {mu_prime}")
    p = np.concatenate(
        [np.ones(active_count), np.full(n - active_count, mu_prime)]
    )
    target = active_count + mu_prime * (n - active_count)
    tag = "all-one" if active_count == n or mu_prime == 1.0 else "uniform"
    return ProbabilityAssignment(
        p=p, active_count=active_count, ansatz_tag=tag, target_mu=target
    )


@dataclass(frozen=True)
class KKTReport:
    """Outcome of the first-order optimality check on an assignment.

    ``passed`` is the conjunction of the four checks; ``worst`` maps each
    check to its largest observed violation (0 when vacuous).
    """

    passed: bool
    checks: dict
    worst: dict

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checks": self.checks, "worst": self.worst}


def kkt_verify(
    spec: HamiltonianSpec, assignment: ProbabilityAssignment, tol: float = 1e-10
) -> KKTReport:
    """Check first-order optimality of an assignment for the linear family.

    Verifies, on the inactive suffix: (a) proportionality ``p_j = c h_j``
    with a common constant, (b) the budget identity ``sum p_j = mu_bar``
    against the assignment's target budget, (c) interior bounds
    ``0 < p_j < 1``, and (d) stationarity of the budget-constrained leading
    component: with the multiplier ``sqrt(u) = sum_rest h / mu_bar`` (unit
    time and repeat length), ``sqrt(u) p_j - h_j`` vanishes for every
    inactive ``j``.  All comparisons are relative with tolerance ``tol``.

    Never raises on a failing assignment; failures are reported in the
    returned record.
    """
    h = _require_sorted(spec)
    if len(assignment) != len(spec):
        raise ValueError("assignment length does not match spec")
    a = assignment.active_count
    rest_h = h[a:]
    rest_p = np.asarray(assignment.p[a:], dtype=float)
    checks = {"proportional": True, "budget": True, "interior": True, "stationary": True}
    worst = {"proportional": 0.0, "budget": 0.0, "interior": 0.0, "stationary": 0.0}
    if rest_h.size == 0:
        return KKTReport(passed=True, checks=checks, worst=worst)

    budget = assignment.target_mu if assignment.target_mu is not None else assignment.mu
    mu_bar = budget - a
    sum_rest = float(np.sum(rest_p))
    worst["budget"] = abs(sum_rest - mu_bar) / max(1.0, abs(mu_bar))
    checks["budget"] = worst["budget"] <= tol

    ratios = rest_p / rest_h
    mean_ratio = sum_rest / float(np.sum(rest_h))
    if mean_ratio <= 0:
        checks["proportional"] = False
        worst["proportional"] = float("inf")
    else:
        worst["proportional"] = float(np.max(np.abs(ratios / mean_ratio - 1.0)))
        checks["proportional"] = worst["proportional"] <= tol

    max_p = float(np.max(rest_p))
    min_p = float(np.min(rest_p))
    checks["interior"] = min_p > 0.0 and max_p < 1.0
    worst["interior"] = max(0.0, max_p - 1.0, -min_p)

    if mu_bar > 0:
        root_u = float(np.sum(rest_h)) / mu_bar
        worst["stationary"] = float(np.max(np.abs(root_u * ratios - 1.0)))
        checks["stationary"] = worst["stationary"] <= tol
    else:
        checks["stationary"] = False
        worst["stationary"] = float("inf")

    return KKTReport(passed=all(checks.values()), checks=checks, worst=worst)


@dataclass(frozen=True)
class AnsatzConfig:
    """One grid point: family kind, prefix size, residual probability level."""

    kind: str
    active_count: int
    mu_prime: float


@dataclass(frozen=True)
class GridRecord:
    """Evaluation outcome at one grid point (bound is None when infeasible)."""

    config: AnsatzConfig
    active_fraction: float
    feasible: bool
    bound: BoundBreakdown | None


@dataclass(frozen=True)
class OptimizationReport:
    """Grid-search result: the winning point plus the full grid trace."""

    kind: str
    t: float
    gates: float
    n_terms: int
    best: GridRecord
    best_assignment: ProbabilityAssignment
    grid: tuple[GridRecord, ...]


def _build_assignment(
    spec: HamiltonianSpec, kind: str, active_count: int, mu_prime: float
) -> ProbabilityAssignment:
    n = len(spec)
    if active_count == n:
        return linear_ansatz_probs(spec, n, float(n))
    if kind == "linear":
        mu = active_count + mu_prime * (n - active_count)
        return linear_ansatz_probs(spec, active_count, mu)
    return uniform_ansatz_probs(spec, active_count, mu_prime)


def grid_optimize(
    spec: HamiltonianSpec,
    t: float,
    gates: float,
    kind: str = "linear",
    active_fractions: tuple[float, ...] = DEFAULT_ACTIVE_FRACTIONS,
    mu_primes: tuple[float, ...] = DEFAULT_MU_PRIMES,
    workers: int = 1,
) -> OptimizationReport:
    """Scan the ansatz grid and return the feasible bound minimizer.

    Prefix sizes are ``round(f * L)`` over ``active_fractions``,
    deduplicated; every size pairs with each ``mu_prime`` except the full
    prefix, which collapses to the single all-ones point.  Infeasible
    linear points are recorded and skipped.  Grid points are independent
    pure evaluations, so they may be computed concurrently (``workers``);
    results are merged in grid order, and ties on the bound total prefer
    the larger prefix, then the larger ``mu_prime``.

    Raises:
        ValueError: For an unknown kind, an unsorted spec, or when no grid
            point is feasible.
    """
    if kind not in ("linear", "uniform"):
        raise ValueError(f"kind must be 'linear' or 'uniform', got {kind!r}")
    _require_sorted(spec)
    n = len(spec)
    counts = list(dict.fromkeys(round(f * n) for f in active_fractions))
    configs: list[AnsatzConfig] = []
    for count in counts:
        if count == n:
            configs.append(AnsatzConfig(kind=kind, active_count=n, mu_prime=1.0))
        else:
            configs.extend(
                AnsatzConfig(kind=kind, active_count=count, mu_prime=mp)
                for mp in mu_primes
            )

    def evaluate(config: AnsatzConfig) -> GridRecord:
        fraction = config.active_count / n
        try:
            assignment = _build_assignment(
                spec, config.kind, config.active_count, config.mu_prime
            )
        except InfeasibleAnsatzError:
            return GridRecord(
                config=config, active_fraction=fraction, feasible=False, bound=None
            )
        bound = sparsto_bound(spec, assignment, t, gates)
        return GridRecord(
            config=config, active_fraction=fraction, feasible=True, bound=bound
        )

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(evaluate, configs))
    else:
        records = [evaluate(config) for config in configs]

    best: GridRecord | None = None
    for record in records:
        if not record.feasible:
            continue
        if best is None or record.bound.total < best.bound.total:
            best = record
        elif record.bound.total == best.bound.total:
            key = (record.config.active_count, record.config.mu_prime)
            if key > (best.config.active_count, best.config.mu_prime):
                best = record
    if best is None:
        raise ValueError("no feasible grid point")
    best_assignment = _build_assignment(
        spec, best.config.kind, best.config.active_count, best.config.mu_prime
    )
    return OptimizationReport(
        kind=kind,
        t=float(t),
        gates=float(gates),
        n_terms=n,
        best=best,
        best_assignment=best_assignment,
        grid=tuple(records),
    )


def report_json(report: OptimizationReport) -> str:
    """Serialize an optimization report (without the full p vector) to JSON."""
    doc = {
        "kind": report.kind,
        "t": report.t,
        "gates": report.gates,
        "n_terms": report.n_terms,
        "best": {
            "active_count": report.best.config.active_count,
            "active_fraction": report.best.active_fraction,
            "mu_prime": report.best.config.mu_prime,
            "mu": report.best_assignment.mu,
            "bound": report.best.bound.to_dict(),
        },
        "grid": [
            {
                "active_fraction": record.active_fraction,
                "mu_prime": record.config.mu_prime,
                "feasible": record.feasible,
                "total": record.bound.total if record.feasible else None,
            }
            for record in report.grid
        ],
    }
    return json.dumps(doc, indent=1)


def grid_csv(report: OptimizationReport) -> str:
    """Render the grid trace as CSV (infeasible points leave blanks)."""
    lines = ["active_fraction,mu_prime,feasible,eps1,eps2,eps31,eps32,total"]
    for record in report.grid:
        if record.feasible:
            b = record.bound
            tail = f"{b.eps1!r},{b.eps2!r},{b.eps31!r},{b.eps32!r},{b.total!r}"
        else:
            tail = ",,,,"
        lines.append(
            f"{record.active_fraction!r},{record.config.mu_prime!r},"
            f"{str(record.feasible).lower()},{tail}"
        )
    return "\n".join(lines) + "\n"
