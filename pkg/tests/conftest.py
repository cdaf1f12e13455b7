"""Shared builders for test Hamiltonians and probability assignments."""

from __future__ import annotations

import numpy as np
import pytest

from sparsto import HamTerm, HamiltonianSpec, ProbabilityAssignment

_PAULI = "IXYZ"


def label_for(code: int, n_qubits: int) -> str:
    """Deterministic non-identity label for ``code`` in ``1..4**n - 1``."""
    chars = []
    for q in range(n_qubits):
        chars.append(_PAULI[(code >> (2 * (n_qubits - 1 - q))) & 3])
    return "".join(chars)


def make_spec(coeffs, labels=None, n_qubits=None) -> HamiltonianSpec:
    """Spec from raw coefficients, with distinct auto-generated labels."""
    coeffs = list(coeffs)
    if labels is None:
        if n_qubits is None:
            n_qubits = 1
            while 4**n_qubits - 1 < len(coeffs):
                n_qubits += 1
        labels = [label_for(code, n_qubits) for code in range(1, len(coeffs) + 1)]
    elif n_qubits is None:
        n_qubits = len(labels[0])
    terms = tuple(
        HamTerm(coeff=float(c), pauli=lab) for c, lab in zip(coeffs, labels)
    )
    return HamiltonianSpec(n_qubits=n_qubits, terms=terms, provenance="test")


def random_spec(
    rng: np.random.Generator, n_qubits: int, n_terms: int, sorted_desc: bool = True
) -> HamiltonianSpec:
    """Random spec with distinct labels and magnitudes in (0.05, 1]."""
    codes = rng.choice(4**n_qubits - 1, size=n_terms, replace=False) + 1
    mags = rng.uniform(0.05, 1.0, size=n_terms)
    if sorted_desc:
        mags = np.sort(mags)[::-1]
    signs = rng.integers(0, 2, size=n_terms) * 2 - 1
    return make_spec(
        signs * mags, labels=[label_for(int(c), n_qubits) for c in codes]
    )


def custom_assignment(p, active_count: int = 0) -> ProbabilityAssignment:
    return ProbabilityAssignment(
        p=np.asarray(p, dtype=float), active_count=active_count, ansatz_tag="custom"
    )


@pytest.fixture
def unit_triple() -> HamiltonianSpec:
    """Three unit-magnitude terms: the hand-checked worked example."""
    return make_spec([1.0, 1.0, 1.0], labels=["XI", "ZI", "IX"], n_qubits=2)
