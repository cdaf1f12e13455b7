"""Gate-budget sweeps comparing compilation methods, as CSV rows and figures.

Each row evaluates, at one gate budget ``G``: the grid-optimized sparsified
bound under both probability families, the unsparsified randomized scheme,
and the qDRIFT and deterministic first-order Trotter references.  Rows
serialize to CSV with shortest round-trip decimals and can be rendered to a
log-log comparison figure.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .ansatz import grid_optimize
from .bounds import all_ones_assignment, qdrift_bound, sparsto_bound, trotter1_bound
from .hamiltonian import HamiltonianSpec, sort_terms_desc

__all__ = [
    "SWEEP_HEADER",
    "SweepRow",
    "gate_grid",
    "render_sweep_figure",
    "run_sweep",
    "sweep_csv",
]

SWEEP_HEADER = (
    "G,eps_sparsto_linear,eps_sparsto_uniform,eps_r1otrott,eps_qdrift,"
    "eps_trotter1,best_active_fraction,best_mu_prime"
)


@dataclass(frozen=True)
class SweepRow:
    """Method comparison at one gate budget.

    ``best_active_fraction`` and ``best_mu_prime`` locate the winning grid
    point of the linear family.  ``eps_r1otrott`` is the complete bound at
    the all-ones assignment, so it is the exact large-budget limit of
    ``eps_sparsto_linear`` (the grid contains the all-ones point).
    """

    g: float
    eps_sparsto_linear: float
    eps_sparsto_uniform: float
    eps_r1otrott: float
    eps_qdrift: float
    eps_trotter1: float
    best_active_fraction: float
    best_mu_prime: float

    def __post_init__(self) -> None:
        if not self.g > 0:
            raise ValueError(f"gate budget must be positive, got {self.g}")
        for name in (
            "eps_sparsto_linear",
            "eps_sparsto_uniform",
            "eps_r1otrott",
            "eps_qdrift",
            "eps_trotter1",
        ):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")


def gate_grid(g_min: float, g_max: float, points: int, log: bool = True) -> list[float]:
    """Strictly increasing gate budgets between ``g_min`` and ``g_max``.

    Geometric spacing with ``log``, arithmetic otherwise; a single point
    collapses to ``[g_min]``.
    """
    g_min = float(g_min)
    g_max = float(g_max)
    if not 0 < g_min <= g_max:
        raise ValueError(f"need 0 < g_min <= g_max, got {g_min}, {g_max}")
    if points < 1:
        raise ValueError(f"points must be at least 1, got {points}")
    if points == 1:
        return [g_min]
    if g_min == g_max:
        raise ValueError("g_min == g_max only makes sense with a single point")
    if log:
        values = np.geomspace(g_min, g_max, points)
    else:
        values = np.linspace(g_min, g_max, points)
    out = [float(v) for v in values]
    if any(b <= a for a, b in zip(out, out[1:])):
        raise ValueError("grid is too dense to be strictly increasing in floats")
    return out


def sweep_row(spec: HamiltonianSpec, t: float, g: float) -> SweepRow:
    """Evaluate one comparison row; ``spec`` must be sorted by magnitude."""
    linear = grid_optimize(spec, t, g, kind="linear")
    uniform = grid_optimize(spec, t, g, kind="uniform")
    n = len(spec)
    repeats = max(1, int(g // n))
    return SweepRow(
        g=float(g),
        eps_sparsto_linear=linear.best.bound.total,
        eps_sparsto_uniform=uniform.best.bound.total,
        eps_r1otrott=sparsto_bound(spec, all_ones_assignment(spec), t, g).total,
        eps_qdrift=qdrift_bound(spec, t, g).total,
        eps_trotter1=trotter1_bound(spec, t, float(repeats * n)).total,
        best_active_fraction=linear.best.active_fraction,
        best_mu_prime=linear.best.config.mu_prime,
    )


def run_sweep(
    spec: HamiltonianSpec, t: float, g_values: list[float], workers: int = 1
) -> list[SweepRow]:
    """Evaluate every budget in ``g_values`` (sorting the spec first).

    Rows are independent and may be computed concurrently; the returned
    list always follows the order of ``g_values``.
    """
    spec = sort_terms_desc(spec)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda g: sweep_row(spec, t, g), g_values))
    return [sweep_row(spec, t, g) for g in g_values]


def sweep_csv(rows: list[SweepRow]) -> str:
    """Render rows as CSV (LF, '.' decimals, shortest round-trip floats)."""
    rows = list(rows)
    if not rows:
        raise ValueError("no sweep rows to render")
    lines = [SWEEP_HEADER]
    for row in rows:
        lines.append(
            f"{row.g!r},{row.eps_sparsto_linear!r},{row.eps_sparsto_uniform!r},"
            f"{row.eps_r1otrott!r},{row.eps_qdrift!r},{row.eps_trotter1!r},"
            f"{row.best_active_fraction!r},{row.best_mu_prime!r}"
        )
    return "\n".join(lines) + "\n"


def render_sweep_figure(rows: list[SweepRow], path: str) -> None:
    """Render a two-panel comparison figure (bounds; winning grid point).

    Uses the non-interactive backend and writes ``path`` directly; the
    format follows the file extension.
    """
    if not rows:
        raise ValueError("nothing to plot: no sweep rows")
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    g = [row.g for row in rows]
    curves = (
        ("eps_sparsto_linear", "sparsto (linear)", "tab:blue", "-"),
        ("eps_sparsto_uniform", "sparsto (uniform)", "tab:cyan", "--"),
        ("eps_r1otrott", "r1otrott", "tab:orange", "-"),
        ("eps_qdrift", "qdrift", "tab:green", "-"),
        ("eps_trotter1", "trotter1", "tab:red", "-"),
    )
    fig, (ax_bounds, ax_best) = plt.subplots(
        2, 1, figsize=(7.0, 8.0), sharex=True, height_ratios=[2.2, 1.0]
    )
    for name, label, color, style in curves:
        ax_bounds.loglog(
            g, [getattr(row, name) for row in rows], style, color=color, label=label
        )
    ax_bounds.set_ylabel("error bound")
    ax_bounds.grid(True, which="both", alpha=0.3)
    ax_bounds.legend(fontsize=9)

    ax_best.semilogx(
        g, [row.best_active_fraction for row in rows], "o-", color="tab:blue",
        label="best active fraction",
    )
    ax_best.semilogx(
        g, [row.best_mu_prime for row in rows], "s--", color="tab:gray",
        label="best mu'",
    )
    ax_best.set_xlabel("gate budget G")
    ax_best.set_ylabel("winning grid point")
    ax_best.set_ylim(-0.05, 1.05)
    ax_best.grid(True, which="both", alpha=0.3)
    ax_best.legend(fontsize=9)

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
