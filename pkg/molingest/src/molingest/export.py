"""End-to-end export: molecule name to hamiltonian-terms-v1 document."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .integrals import build_ao_integrals
from .mapping import MAPPINGS, qubit_hamiltonian
from .molecules import get_molecule
from .pauli_algebra import PauliSum
from .scf import solve_mean_field

FORMAT_TAG = "hamiltonian-terms-v1"
SUPPORTED_BASES = ("sto-3g",)
COEFF_CUTOFF = 1e-12
_IMAG_TOLERANCE = 1e-9


@dataclass(frozen=True)
class ExportResult:
    """Exported term list plus the scalars dropped from it."""

    n_qubits: int
    terms: tuple[tuple[float, str], ...]
    constant: float
    nuclear_repulsion: float
    hf_energy: float
    provenance: str


def _real_coefficient(label: str, value: complex) -> float:
    if abs(value.imag) > _IMAG_TOLERANCE * max(1.0, abs(value)):
        raise RuntimeError(
            f"non-Hermitian coefficient {value} on {label}; mapping bug"
        )
    return float(value.real)


def export_molecule(molecule: str, basis: str, mapping: str) -> ExportResult:
    """Compute, encode, and package one molecule's qubit Hamiltonian."""
    if basis not in SUPPORTED_BASES:
        raise ValueError(f"unsupported basis {basis!r}; supported: {SUPPORTED_BASES}")
    if mapping not in MAPPINGS:
        raise ValueError(f"unsupported mapping {mapping!r}; supported: {MAPPINGS}")
    system = get_molecule(molecule)
    nuclei = system.nuclei()
    s, h_core, eri = build_ao_integrals(system.basis_functions(), nuclei)
    mean_field = solve_mean_field(s, h_core, eri, nuclei, system.n_electrons)
    encoded: PauliSum = qubit_hamiltonian(
        mean_field.mo_one_body, mean_field.mo_eri, system.n_electrons, mapping
    )

    n_qubits = encoded.n_qubits
    identity = "I" * n_qubits
    constant = 0.0
    rows: list[tuple[float, str]] = []
    for label, value in encoded.terms.items():
        coeff = _real_coefficient(label, value)
        if label == identity:
            constant += coeff
            continue
        if abs(coeff) <= COEFF_CUTOFF:
            continue
        rows.append((coeff, label))
    rows.sort(key=lambda row: (-abs(row[0]), row[1]))

    provenance = (
        f"molecule={system.name} basis={basis} mapping={mapping} "
        f"package=molingest-0.1.0 numpy={np.__version__} "
        f"constant_term={constant!r} "
        f"nuclear_repulsion={mean_field.nuclear_repulsion!r} "
        f"scf_total_energy={mean_field.total_energy!r} "
        f"coeff_cutoff={COEFF_CUTOFF!r}"
    )
    return ExportResult(
        n_qubits=n_qubits,
        terms=tuple(rows),
        constant=constant,
        nuclear_repulsion=mean_field.nuclear_repulsion,
        hf_energy=mean_field.total_energy,
        provenance=provenance,
    )


def render_document(result: ExportResult) -> str:
    """The hamiltonian-terms-v1 JSON text for an export result."""
    doc = {
        "format": FORMAT_TAG,
        "n_qubits": result.n_qubits,
        "provenance": result.provenance,
        "terms": [
            {"coeff": coeff, "pauli": label} for coeff, label in result.terms
        ],
    }
    return json.dumps(doc, indent=1)


def write_document(result: ExportResult, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(render_document(result) + "\n")
