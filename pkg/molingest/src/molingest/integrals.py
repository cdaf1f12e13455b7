"""Closed-form one- and two-electron integrals over s-type Gaussians.

Standard textbook formulas for primitive s-Gaussian overlap, kinetic,
nuclear-attraction, and electron-repulsion integrals, contracted over the
basis-function coefficient lists.  The Boys function reduces to an error
function for s-type integrals.
"""

from __future__ import annotations

import math

import numpy as np

from .basis import ContractedGaussian


def boys_f0(t: float) -> float:
    """Zeroth Boys function F0(t) = (1/2) sqrt(pi/t) erf(sqrt(t))."""
    if t < 1e-12:
        # Series limit: F0(t) = 1 - t/3 + O(t^2); below 1e-12 the linear
        # term is already at rounding level.
        return 1.0 - t / 3.0
    root = math.sqrt(t)
    return 0.5 * math.sqrt(math.pi / t) * math.erf(root)


def _pair_terms(a: ContractedGaussian, b: ContractedGaussian):
    ab2 = float(np.sum((a.center_array - b.center_array) ** 2))
    for ca, alpha in zip(a.coefficients, a.exponents):
        for cb, beta in zip(b.coefficients, b.exponents):
            gamma = alpha + beta
            prefactor = ca * cb * math.exp(-alpha * beta / gamma * ab2)
            center = (alpha * a.center_array + beta * b.center_array) / gamma
            yield prefactor, alpha, beta, gamma, center


def overlap(a: ContractedGaussian, b: ContractedGaussian) -> float:
    total = 0.0
    for pref, _, _, gamma, _ in _pair_terms(a, b):
        total += pref * (math.pi / gamma) ** 1.5
    return total


def kinetic(a: ContractedGaussian, b: ContractedGaussian) -> float:
    ab2 = float(np.sum((a.center_array - b.center_array) ** 2))
    total = 0.0
    for pref, alpha, beta, gamma, _ in _pair_terms(a, b):
        reduced = alpha * beta / gamma
        total += (
            pref
            * reduced
            * (3.0 - 2.0 * reduced * ab2)
            * (math.pi / gamma) ** 1.5
        )
    return total


def nuclear_attraction(
    a: ContractedGaussian,
    b: ContractedGaussian,
    nucleus: np.ndarray,
    charge: float,
) -> float:
    total = 0.0
    for pref, _, _, gamma, center in _pair_terms(a, b):
        pc2 = float(np.sum((center - nucleus) ** 2))
        total += pref * (-charge) * (2.0 * math.pi / gamma) * boys_f0(gamma * pc2)
    return total


def electron_repulsion(
    a: ContractedGaussian,
    b: ContractedGaussian,
    c: ContractedGaussian,
    d: ContractedGaussian,
) -> float:
    """Chemist-notation integral (ab|cd) over contracted s-functions."""
    total = 0.0
    for pref_ab, _, _, gamma_ab, center_ab in _pair_terms(a, b):
        for pref_cd, _, _, gamma_cd, center_cd in _pair_terms(c, d):
            pq2 = float(np.sum((center_ab - center_cd) ** 2))
            reduced = gamma_ab * gamma_cd / (gamma_ab + gamma_cd)
            total += (
                pref_ab
                * pref_cd
                * 2.0
                * math.pi**2.5
                / (gamma_ab * gamma_cd * math.sqrt(gamma_ab + gamma_cd))
                * boys_f0(reduced * pq2)
            )
    return total


def build_ao_integrals(
    functions: list[ContractedGaussian],
    nuclei: list[tuple[np.ndarray, float]],
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Overlap, core Hamiltonian, and chemist-ordered ERI tensor in AO basis."""
    n = len(functions)
    s = np.zeros((n, n))
    h_core = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            s_ij = overlap(functions[i], functions[j])
            h_ij = kinetic(functions[i], functions[j])
            for position, charge in nuclei:
                h_ij += nuclear_attraction(
                    functions[i], functions[j], position, charge
                )
            s[i, j] = s[j, i] = s_ij
            h_core[i, j] = h_core[j, i] = h_ij
    eri = np.zeros((n, n, n, n))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    eri[i, j, k, l] = electron_repulsion(
                        functions[i], functions[j], functions[k], functions[l]
                    )
    return s, h_core, eri
