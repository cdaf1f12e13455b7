"""Compilation toolkit for stochastically sparsified randomized product formulas.

The package models a Hamiltonian as a weighted Pauli term list, attaches
per-term keep probabilities, and provides: rigorous diamond-norm error
bounds for the sparsified scheme and its references, probability-ansatz
optimization, gate-schedule compilation, and dense channel simulation for
validating bounds on small systems.  The ``sparsto`` command line exposes
the same functionality on files.
"""

from .ansatz import (
    AnsatzConfig,
    GridRecord,
    InfeasibleAnsatzError,
    KKTReport,
    OptimizationReport,
    grid_optimize,
    kkt_verify,
    linear_ansatz_probs,
    uniform_ansatz_probs,
)
from .bounds import (
    BoundBreakdown,
    ProbabilityAssignment,
    ProbabilityFile,
    align_probabilities,
    all_ones_assignment,
    derived_vectors,
    parse_probabilities,
    qdrift_bound,
    r1otrott_bound,
    serialize_probabilities,
    sparsto_bound,
    sparsto_commutator_bound,
    sparsto_norm_bound,
    trotter1_bound,
)
from .hamiltonian import (
    HamTerm,
    HamiltonianSpec,
    lambda_norm,
    load_hamiltonian,
    magnitudes,
    parse_hamiltonian,
    save_hamiltonian,
    serialize_hamiltonian,
    sort_terms_desc,
    synth_power_law,
)
from .moments import s1, s2, s3_aaa, s3_abb, s3_brute
from .report import (
    SWEEP_HEADER,
    SweepRow,
    gate_grid,
    render_sweep_figure,
    run_sweep,
    sweep_csv,
)
from .schedule import (
    GateOp,
    GateSchedule,
    TrotterStep,
    compile_qdrift,
    compile_sparsto,
    compile_trotter1,
    load_schedule,
    parse_schedule,
    save_schedule,
    serialize_schedule,
    step_duration_schedule,
)
from .simulator import (
    ChannelErrorReport,
    choi_trace_distance,
    empirical_error,
    expected_step_exact,
    expected_step_mc,
    ideal_channel,
    schedule_channel,
)

__version__ = "0.1.0"

__all__ = [
    "AnsatzConfig",
    "BoundBreakdown",
    "ChannelErrorReport",
    "GateOp",
    "GateSchedule",
    "GridRecord",
    "HamTerm",
    "HamiltonianSpec",
    "InfeasibleAnsatzError",
    "KKTReport",
    "OptimizationReport",
    "ProbabilityAssignment",
    "ProbabilityFile",
    "SWEEP_HEADER",
    "SweepRow",
    "TrotterStep",
    "align_probabilities",
    "all_ones_assignment",
    "choi_trace_distance",
    "compile_qdrift",
    "compile_sparsto",
    "compile_trotter1",
    "derived_vectors",
    "empirical_error",
    "expected_step_exact",
    "expected_step_mc",
    "gate_grid",
    "grid_optimize",
    "ideal_channel",
    "kkt_verify",
    "lambda_norm",
    "linear_ansatz_probs",
    "load_hamiltonian",
    "load_schedule",
    "magnitudes",
    "parse_hamiltonian",
    "parse_schedule",
    "qdrift_bound",
    "r1otrott_bound",
    "run_sweep",
    "render_sweep_figure",
    "s1",
    "s2",
    "s3_aaa",
    "s3_abb",
    "s3_brute",
    "save_hamiltonian",
    "save_schedule",
    "schedule_channel",
    "serialize_hamiltonian",
    "serialize_probabilities",
    "serialize_schedule",
    "sort_terms_desc",
    "sparsto_bound",
    "sparsto_commutator_bound",
    "sparsto_norm_bound",
    "step_duration_schedule",
    "sweep_csv",
    "synth_power_law",
    "trotter1_bound",
    "uniform_ansatz_probs",
]
