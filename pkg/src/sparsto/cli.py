"""Command-line front end: bounds, optimization, sweeps, compilation, simulation.

Exit codes: 0 on success, 1 on usage errors (bad flags, missing arguments,
inconsistent flag combinations), 2 on domain errors (infeasible ansatz,
size guards, malformed input files).  All outputs are deterministic given
flags and seed; files are UTF-8 with LF line endings.

Every subcommand operates on the descending-magnitude term ordering, which
is also the order probability files are aligned to before use.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from .ansatz import (
    DEFAULT_ACTIVE_FRACTIONS,
    DEFAULT_MU_PRIMES,
    grid_csv,
    grid_optimize,
    report_json,
)
from .bounds import (
    ProbabilityAssignment,
    align_probabilities,
    all_ones_assignment,
    parse_probabilities,
    qdrift_bound,
    r1otrott_bound,
    serialize_probabilities,
    sparsto_bound,
    trotter1_bound,
)
from .hamiltonian import (
    HamiltonianSpec,
    load_hamiltonian,
    serialize_hamiltonian,
    sort_terms_desc,
    synth_power_law,
)
from .report import gate_grid, render_sweep_figure, run_sweep, sweep_csv
from .schedule import (
    compile_qdrift,
    compile_sparsto,
    compile_trotter1,
    serialize_schedule,
)
from .simulator import empirical_error

__all__ = ["main"]

_PROG = "sparsto"

_METHODS = ("sparsto", "qdrift", "trotter1", "r1otrott")


class _UsageError(Exception):
    """Flag combination error detected after argparse (exit code 1)."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the contract reserves 2 for
    # domain errors and uses 1 for usage.
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _float_list(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(piece) for piece in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _write_text(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)


def _load_raw(path: str) -> HamiltonianSpec:
    return load_hamiltonian(path)


def _resolve_assignment(
    raw_spec: HamiltonianSpec, probabilities: str | None
) -> tuple[HamiltonianSpec, ProbabilityAssignment]:
    """Sorted spec plus the assignment from a probability file (or all-ones)."""
    if probabilities is None:
        spec = sort_terms_desc(raw_spec)
        return spec, all_ones_assignment(spec)
    with open(probabilities, "r", encoding="utf-8") as handle:
        prob_file = parse_probabilities(handle.read())
    return align_probabilities(raw_spec, prob_file)


def _forbid(args: argparse.Namespace, method: str, *flags: str) -> None:
    for flag in flags:
        if getattr(args, flag.lstrip("-").replace("-", "_")) is not None:
            raise _UsageError(f"{flag} does not apply to --method {method}")


def _cmd_bounds(args: argparse.Namespace) -> int:
    raw = _load_raw(args.hamiltonian)
    if args.method == "sparsto":
        spec, assignment = _resolve_assignment(raw, args.probabilities)
        breakdown = sparsto_bound(spec, assignment, args.time, args.gates)
    else:
        _forbid(args, args.method, "--probabilities")
        spec = sort_terms_desc(raw)
        if args.method == "qdrift":
            breakdown = qdrift_bound(spec, args.time, args.gates)
        elif args.method == "trotter1":
            breakdown = trotter1_bound(spec, args.time, args.gates)
        else:
            breakdown = r1otrott_bound(spec, args.time, args.gates)
    _write_text(json.dumps(breakdown.to_dict(), indent=1) + "\n", args.output)
    return 0


def _cmd_optimize(args: argparse.Namespace) -> int:
    spec = sort_terms_desc(_load_raw(args.hamiltonian))
    report = grid_optimize(
        spec,
        args.time,
        args.gates,
        kind=args.ansatz,
        active_fractions=args.active_fractions,
        mu_primes=args.mu_primes,
    )
    _write_text(report_json(report) + "\n", args.output)
    if args.grid_csv is not None:
        _write_text(grid_csv(report), args.grid_csv)
    if args.probabilities_out is not None:
        _write_text(
            serialize_probabilities(report.best_assignment) + "\n",
            args.probabilities_out,
        )
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    if args.plot and args.output is None:
        raise _UsageError("--plot requires --output (the figure sits next to it)")
    spec = _load_raw(args.hamiltonian)
    grid = gate_grid(args.gates_min, args.gates_max, args.points, log=args.log)
    rows = run_sweep(spec, args.time, grid)
    _write_text(sweep_csv(rows), args.output)
    if args.plot:
        render_sweep_figure(rows, str(Path(args.output).with_suffix(".png")))
    return 0


def _cmd_compile(args: argparse.Namespace) -> int:
    raw = _load_raw(args.hamiltonian)
    seed = 0 if args.seed is None else args.seed
    if args.method == "sparsto":
        if args.probabilities is None:
            raise _UsageError("--method sparsto requires --probabilities")
        spec, assignment = _resolve_assignment(raw, args.probabilities)
        schedule = compile_sparsto(spec, assignment, args.time, args.gates, seed)
    elif args.method == "r1otrott":
        _forbid(args, "r1otrott", "--probabilities")
        spec = sort_terms_desc(raw)
        schedule = compile_sparsto(
            spec, all_ones_assignment(spec), args.time, args.gates, seed
        )
        schedule = dataclasses.replace(schedule, method="r1otrott")
    elif args.method == "qdrift":
        _forbid(args, "qdrift", "--probabilities")
        spec = sort_terms_desc(raw)
        schedule = compile_qdrift(spec, args.time, args.gates, seed)
    else:
        _forbid(args, "trotter1", "--probabilities", "--seed")
        spec = sort_terms_desc(raw)
        repeats = max(1, int(args.gates // len(spec)))
        schedule = compile_trotter1(spec, args.time, repeats)
    _write_text(serialize_schedule(schedule), args.output)
    return 0


def _cmd_simulate(args: argparse.Namespace) -> int:
    if args.exact_enumeration == (args.samples is not None):
        raise _UsageError("choose exactly one of --exact-enumeration or --samples N")
    raw = _load_raw(args.hamiltonian)
    spec, assignment = _resolve_assignment(raw, args.probabilities)
    report = empirical_error(
        spec,
        assignment,
        args.time,
        args.gates,
        mode="exact" if args.exact_enumeration else "mc",
        samples=args.samples or 0,
        seed=0 if args.seed is None else args.seed,
    )
    _write_text(json.dumps(report.to_dict(), indent=1) + "\n", args.output)
    return 0


def _cmd_synth(args: argparse.Namespace) -> int:
    seed = 0 if args.seed is None else args.seed
    spec = synth_power_law(args.terms, args.exponent, args.qubits, seed)
    _write_text(serialize_hamiltonian(spec) + "\n", args.output)
    return 0


def _add_common(parser: argparse.ArgumentParser, *, time_gates: bool = True) -> None:
    parser.add_argument("--hamiltonian", required=True, metavar="FILE",
                        help="hamiltonian-terms-v1 input file")
    if time_gates:
        parser.add_argument("--time", required=True, type=float, metavar="T",
                            help="evolution time t > 0")
    parser.add_argument("--output", metavar="FILE",
                        help="write here instead of standard output")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=_PROG, description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("bounds", help="evaluate one error bound as JSON",
                       description="Evaluate an error bound at a gate budget. "
                       "trotter1 evaluates its closed form at the budget as "
                       "given; sweeps round it to whole repeats instead.")
    _add_common(p)
    p.add_argument("--gates", required=True, type=float, metavar="G")
    p.add_argument("--method", choices=_METHODS, default="sparsto")
    p.add_argument("--probabilities", metavar="FILE",
                   help="probabilities-v1 file (sparsto only; default all-ones)")
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("optimize", help="grid-search keep probabilities",
                       description="Scan an ansatz grid for the bound-minimizing "
                       "keep probabilities at one gate budget.")
    _add_common(p)
    p.add_argument("--gates", required=True, type=float, metavar="G")
    p.add_argument("--ansatz", choices=("linear", "uniform"), default="linear")
    p.add_argument("--active-fractions", type=_float_list,
                   default=DEFAULT_ACTIVE_FRACTIONS, metavar="F1,F2,...",
                   help="always-kept prefix fractions (default 0,0.1,...,1)")
    p.add_argument("--mu-primes", type=_float_list, default=DEFAULT_MU_PRIMES,
                   metavar="M1,M2,...",
                   help="residual probability levels "
                   "(default 1e-5,1e-4,1e-3,0.1,...,1)")
    p.add_argument("--grid-csv", metavar="FILE",
                   help="also write the full grid trace as CSV")
    p.add_argument("--probabilities-out", metavar="FILE",
                   help="also write the winning probabilities-v1 file")
    p.set_defaults(handler=_cmd_optimize)

    p = sub.add_parser("sweep", help="compare methods across gate budgets (CSV)",
                       description="One CSV row per budget: optimized bounds for "
                       "both ansatz families next to unsparsified, qDRIFT and "
                       "first-order Trotter references.")
    _add_common(p)
    p.add_argument("--gates-min", required=True, type=float, metavar="G")
    p.add_argument("--gates-max", required=True, type=float, metavar="G")
    p.add_argument("--points", required=True, type=int, metavar="N")
    p.add_argument("--log", action="store_true",
                   help="space budgets geometrically instead of linearly")
    p.add_argument("--plot", action="store_true",
                   help="also render a .png figure next to --output")
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("compile", help="emit a gate-schedule-v1 circuit",
                       description="Compile a schedule. sparsto draws one keep "
                       "decision per term per repeat from the seeded stream; "
                       "r1otrott is the all-ones special case.")
    _add_common(p)
    p.add_argument("--gates", required=True, type=float, metavar="G")
    p.add_argument("--method", choices=_METHODS, default="sparsto")
    p.add_argument("--probabilities", metavar="FILE")
    p.add_argument("--seed", type=int, metavar="N")
    p.set_defaults(handler=_cmd_compile)

    p = sub.add_parser("simulate", help="measure channel error against the bound",
                       description="Build the expected step superoperator "
                       "(exact enumeration or Monte Carlo), compose it over the "
                       "schedule, and report the Choi trace distance to ideal "
                       "evolution as JSON.")
    _add_common(p)
    p.add_argument("--gates", required=True, type=float, metavar="G")
    p.add_argument("--probabilities", metavar="FILE",
                   help="probabilities-v1 file (default all-ones)")
    p.add_argument("--exact-enumeration", action="store_true",
                   help="enumerate keep patterns exactly (small systems)")
    p.add_argument("--samples", type=int, metavar="N",
                   help="Monte Carlo sample count (at least 2)")
    p.add_argument("--seed", type=int, metavar="N")
    p.set_defaults(handler=_cmd_simulate)

    p = sub.add_parser("synth", help="generate a power-law test Hamiltonian",
                       description="Write a synthetic hamiltonian-terms-v1 file "
                       "with magnitudes j**-exponent, random signs and distinct "
                       "random Pauli labels.")
    p.add_argument("--terms", required=True, type=int, metavar="L")
    p.add_argument("--exponent", required=True, type=float, metavar="K")
    p.add_argument("--qubits", required=True, type=int, metavar="N")
    p.add_argument("--seed", type=int, metavar="N")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(handler=_cmd_synth)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"{_PROG}: error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"{_PROG}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
