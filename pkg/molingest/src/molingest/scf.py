"""Restricted Hartree-Fock and molecular-orbital integral transforms."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SCFResult:
    """Converged mean-field data in the molecular-orbital basis.

    ``mo_one_body``/``mo_eri`` are spatial-orbital integrals (ERI in
    chemist ordering); ``electronic_energy`` excludes nuclear repulsion.
    """

    electronic_energy: float
    nuclear_repulsion: float
    mo_coefficients: np.ndarray
    mo_one_body: np.ndarray
    mo_eri: np.ndarray
    n_electrons: int

    @property
    def total_energy(self) -> float:
        return self.electronic_energy + self.nuclear_repulsion


def nuclear_repulsion_energy(nuclei: list[tuple[np.ndarray, float]]) -> float:
    total = 0.0
    for i in range(len(nuclei)):
        for j in range(i):
            distance = float(np.linalg.norm(nuclei[i][0] - nuclei[j][0]))
            total += nuclei[i][1] * nuclei[j][1] / distance
    return total


def run_rhf(
    s: np.ndarray,
    h_core: np.ndarray,
    eri: np.ndarray,
    n_electrons: int,
    max_iterations: int = 200,
    tol: float = 1e-12,
) -> tuple[float, np.ndarray]:
    """Converge closed-shell RHF; returns electronic energy and MO matrix."""
    if n_electrons % 2:
        raise ValueError("restricted HF needs an even electron count")
    n_occ = n_electrons // 2
    vals, vecs = np.linalg.eigh(s)
    if np.min(vals) <= 1e-10:
        raise ValueError("overlap matrix is numerically singular")
    x = vecs @ np.diag(vals**-0.5) @ vecs.T
    density = np.zeros_like(s)
    energy = 0.0
    coeffs = np.zeros_like(s)
    for _ in range(max_iterations):
        coulomb = np.einsum("pqrs,rs->pq", eri, density)
        exchange = np.einsum("prqs,rs->pq", eri, density)
        fock = h_core + coulomb - 0.5 * exchange
        _, c_ortho = np.linalg.eigh(x.T @ fock @ x)
        coeffs = x @ c_ortho
        occupied = coeffs[:, :n_occ]
        new_density = 2.0 * occupied @ occupied.T
        new_energy = 0.5 * float(np.sum(new_density * (h_core + fock)))
        if abs(new_energy - energy) < tol and np.max(np.abs(new_density - density)) < 1e-10:
            return new_energy, coeffs
        density = new_density
        energy = new_energy
    raise RuntimeError(f"SCF did not converge in {max_iterations} iterations")


def transform_to_mo(
    h_core: np.ndarray, eri: np.ndarray, coeffs: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """One- and two-electron integrals in the MO basis (chemist ordering)."""
    one_body = coeffs.T @ h_core @ coeffs
    two_body = np.einsum(
        "pi,qj,pqrs,rk,sl->ijkl", coeffs, coeffs, eri, coeffs, coeffs,
        optimize=True,
    )
    return one_body, two_body


def solve_mean_field(
    s: np.ndarray,
    h_core: np.ndarray,
    eri: np.ndarray,
    nuclei: list[tuple[np.ndarray, float]],
    n_electrons: int,
) -> SCFResult:
    electronic, coeffs = run_rhf(s, h_core, eri, n_electrons)
    mo_one, mo_two = transform_to_mo(h_core, eri, coeffs)
    return SCFResult(
        electronic_energy=electronic,
        nuclear_repulsion=nuclear_repulsion_energy(nuclei),
        mo_coefficients=coeffs,
        mo_one_body=mo_one,
        mo_eri=mo_two,
        n_electrons=n_electrons,
    )
