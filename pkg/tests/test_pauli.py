"""Symbolic Pauli-string algebra checked against dense matrices."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from sparsto.pauli import commutator, commutes, multiply, nested_commutator_norm
from sparsto.simulator import pauli_to_matrix


def _labels(n_qubits):
    return ["".join(chars) for chars in itertools.product("IXYZ", repeat=n_qubits)]


def _spectral_norm(m):
    return float(np.linalg.norm(m, ord=2))


class TestMultiply:
    @pytest.mark.parametrize("n", [1, 2])
    def test_exhaustive_against_dense(self, n):
        for a in _labels(n):
            for b in _labels(n):
                phase, label = multiply(a, b)
                dense = pauli_to_matrix(a) @ pauli_to_matrix(b)
                assert np.allclose(dense, phase * pauli_to_matrix(label), atol=1e-15)

    def test_phase_values_are_fourth_roots(self):
        for a in _labels(2):
            for b in _labels(2):
                phase, _ = multiply(a, b)
                assert phase in (1, 1j, -1, -1j)

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            multiply("X", "XY")


class TestCommutation:
    @pytest.mark.parametrize("n", [1, 2])
    def test_commutes_matches_dense(self, n):
        for a in _labels(n):
            for b in _labels(n):
                dense = (
                    pauli_to_matrix(a) @ pauli_to_matrix(b)
                    - pauli_to_matrix(b) @ pauli_to_matrix(a)
                )
                assert commutes(a, b) == np.allclose(dense, 0, atol=1e-15)

    @pytest.mark.parametrize("n", [1, 2])
    def test_commutator_matches_dense(self, n):
        for a in _labels(n):
            for b in _labels(n):
                result = commutator(a, b)
                dense = (
                    pauli_to_matrix(a) @ pauli_to_matrix(b)
                    - pauli_to_matrix(b) @ pauli_to_matrix(a)
                )
                if result is None:
                    assert np.allclose(dense, 0, atol=1e-15)
                else:
                    phase, label = result
                    assert np.allclose(dense, phase * pauli_to_matrix(label), atol=1e-14)


class TestNestedCommutatorNorm:
    def test_random_triples_match_dense(self):
        rng = np.random.default_rng(5)
        for n in (2, 3):
            labels = _labels(n)
            for _ in range(60):
                a, b, c = (labels[int(i)] for i in rng.integers(0, len(labels), 3))
                inner = (
                    pauli_to_matrix(a) @ pauli_to_matrix(b)
                    - pauli_to_matrix(b) @ pauli_to_matrix(a)
                )
                outer_m = pauli_to_matrix(c)
                dense = outer_m @ inner - inner @ outer_m
                assert nested_commutator_norm(c, a, b) == pytest.approx(
                    _spectral_norm(dense), abs=1e-12
                )

    def test_values_are_zero_or_four(self):
        labels = _labels(2)
        seen = set()
        for a in labels[1:8]:
            for b in labels[1:8]:
                for c in labels[1:8]:
                    seen.add(nested_commutator_norm(c, a, b))
        assert seen == {0.0, 4.0}

    def test_mutually_commuting_strings_vanish(self):
        for a, b, c in itertools.permutations(["ZI", "IZ", "ZZ"]):
            assert nested_commutator_norm(c, a, b) == 0.0
