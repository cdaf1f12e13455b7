"""Error-bound components: frozen worked values, dominance, file handling."""

from __future__ import annotations

import math

import numpy as np
import pytest

from sparsto import (
    BoundBreakdown,
    ProbabilityAssignment,
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
from sparsto.bounds import ProbabilityFile

from conftest import custom_assignment, make_spec, random_spec, unit_triple  # noqa: F401


class TestWorkedValues:
    """Hand-evaluated components for h=(1,1,1), t=1, G=100."""

    def test_complete_bound_at_all_ones(self, unit_triple):
        b = sparsto_bound(unit_triple, all_ones_assignment(unit_triple), 1.0, 100.0)
        assert b.eps1 == 0.0
        assert b.eps2 == pytest.approx(0.024, abs=1e-12)
        assert b.eps31 == pytest.approx(1.458e-3, abs=1e-12)
        assert b.eps32 == pytest.approx(1.458e-3, abs=1e-12)
        assert b.total == pytest.approx(0.026916, abs=1e-9)
        assert b.total == b.eps1 + b.eps2 + b.eps31 + b.eps32

    def test_norm_bound_eps2(self, unit_triple):
        b = sparsto_norm_bound(unit_triple, all_ones_assignment(unit_triple), 1.0, 100.0)
        assert b.eps2 == pytest.approx(0.0648, abs=1e-9)
        assert b.eps2 >= 0.024

    def test_eps1_at_half_probabilities(self, unit_triple):
        half = custom_assignment([0.5, 0.5, 0.5])
        b = sparsto_bound(unit_triple, half, 1.0, 100.0)
        assert b.eps1 == pytest.approx(0.09, abs=1e-12)

    def test_r1otrott_leading_term(self, unit_triple):
        b = r1otrott_bound(unit_triple, 1.0, 100.0)
        assert b.eps2 == pytest.approx(0.0648, abs=1e-9)
        assert b.method == "r1otrott"

    def test_qdrift_values(self, unit_triple):
        assert qdrift_bound(unit_triple, 1.0, 100.0).total == pytest.approx(0.36)
        one = make_spec([1.0])
        assert qdrift_bound(one, 1.0, 4.0).total == pytest.approx(1.0)

    def test_trotter1_values(self, unit_triple):
        assert trotter1_bound(unit_triple, 1.0, 100.0).total == pytest.approx(0.135)
        one = make_spec([0.7])
        expected = 0.7**2 / (2 * 50.0)
        assert trotter1_bound(one, 1.0, 50.0).total == pytest.approx(expected)


class TestScalingLaws:
    def test_qdrift_quadratic_in_time(self, unit_triple):
        b1 = qdrift_bound(unit_triple, 1.0, 100.0).total
        b2 = qdrift_bound(unit_triple, 2.0, 100.0).total
        assert b2 == pytest.approx(4 * b1)

    def test_trotter1_inverse_in_repeats(self, unit_triple):
        b1 = trotter1_bound(unit_triple, 1.0, 3 * 7.0).total
        b2 = trotter1_bound(unit_triple, 1.0, 3 * 14.0).total
        assert b2 == pytest.approx(b1 / 2)

    def test_r1otrott_leading_inverse_square_in_gates(self, unit_triple):
        b1 = r1otrott_bound(unit_triple, 1.0, 100.0)
        b2 = r1otrott_bound(unit_triple, 1.0, 1000.0)
        assert b2.eps2 == pytest.approx(b1.eps2 / 100)


class TestStructure:
    def test_all_ones_zeroes_first_component_exactly(self):
        rng = np.random.default_rng(0)
        spec = random_spec(rng, 3, 8)
        vecs = derived_vectors(np.abs([t.coeff for t in spec.terms]), np.ones(8))
        assert np.all(vecs.u == 0.0)
        assert np.all(vecs.v == 0.0)
        b = sparsto_bound(spec, all_ones_assignment(spec), 0.7, 50.0)
        assert b.eps1 == 0.0

    def test_w_is_twice_h_squared_at_p_one(self):
        h = np.array([0.3, 0.7, 0.1])
        vecs = derived_vectors(h, np.ones(3))
        assert np.array_equal(vecs.w, 2 * h * h)
        assert np.array_equal(vecs.q, h)

    def test_r1otrott_identical_to_norm_bound_at_all_ones(self, unit_triple):
        a = r1otrott_bound(unit_triple, 1.3, 211.0)
        b = sparsto_norm_bound(unit_triple, all_ones_assignment(unit_triple), 1.3, 211.0)
        assert (a.eps1, a.eps2, a.eps31, a.eps32, a.total) == (
            b.eps1,
            b.eps2,
            b.eps31,
            b.eps32,
            b.total,
        )

    def test_dominance_on_random_draws(self):
        rng = np.random.default_rng(21)
        for _ in range(100):
            n = int(rng.integers(3, 51))
            spec = random_spec(rng, 4, n)
            p = rng.uniform(0.05, 1.0, size=len(spec))
            assignment = custom_assignment(p)
            t = float(rng.uniform(0.1, 5.0))
            gates = float(rng.uniform(len(spec), 1e4))
            tight = sparsto_bound(spec, assignment, t, gates)
            loose = sparsto_norm_bound(spec, assignment, t, gates)
            assert tight.eps1 == loose.eps1
            assert tight.total <= loose.total * (1 + 1e-12)

    def test_tail_underflow_is_clamped_to_zero(self):
        spec = make_spec(np.arange(1, 301, dtype=float) ** -2.0)
        p = np.full(300, 1e-3)
        b = sparsto_bound(spec, custom_assignment(p), 1.0, 1e6)
        assert b.eps32 == 0.0
        assert b.eps31 > 0.0
        assert math.isfinite(b.total)

    def test_mu_reflects_assignment(self, unit_triple):
        b = sparsto_bound(unit_triple, custom_assignment([0.5, 0.5, 0.5]), 1.0, 100.0)
        assert b.mu == pytest.approx(1.5)
        assert qdrift_bound(unit_triple, 1.0, 100.0).mu is None


class TestCommutatorRefinement:
    def test_commuting_terms_drop_the_triple_sum(self):
        spec = make_spec([1.0, 0.5, 0.25], labels=["ZI", "IZ", "ZZ"], n_qubits=2)
        ones = all_ones_assignment(spec)
        refined = sparsto_commutator_bound(spec, ones, 1.0, 100.0)
        plain = sparsto_bound(spec, ones, 1.0, 100.0)
        # With every triple commuting only the S(v) + S(w, h) part survives.
        gap = plain.eps2 - refined.eps2
        expected_gap = (16.0 / (9 * 100.0**2)) * plain.mu**2 * 6 * (1 * 0.5 * 0.25)
        assert gap == pytest.approx(expected_gap, rel=1e-12)
        assert refined.total <= plain.total

    def test_never_exceeds_unrefined(self, unit_triple):
        rng = np.random.default_rng(3)
        for _ in range(50):
            spec = random_spec(rng, 3, int(rng.integers(3, 12)))
            p = rng.uniform(0.1, 1.0, size=len(spec))
            t = float(rng.uniform(0.2, 2.0))
            g = float(rng.uniform(len(spec), 500))
            assignment = custom_assignment(p)
            refined = sparsto_commutator_bound(spec, assignment, t, g)
            plain = sparsto_bound(spec, assignment, t, g)
            assert refined.eps2 <= plain.eps2 * (1 + 1e-12)
            assert refined.eps1 == plain.eps1
            assert refined.eps31 == plain.eps31

    def test_term_count_guard(self):
        spec = make_spec(np.linspace(1.0, 0.5, 65))
        with pytest.raises(ValueError, match="capped"):
            sparsto_commutator_bound(spec, all_ones_assignment(spec), 1.0, 100.0)


class TestValidation:
    def test_time_and_gate_domains(self, unit_triple):
        ones = all_ones_assignment(unit_triple)
        for bad_t, bad_g in [(0.0, 100.0), (-1.0, 100.0), (1.0, 0.0), (1.0, -5.0)]:
            with pytest.raises(ValueError):
                sparsto_bound(unit_triple, ones, bad_t, bad_g)
        with pytest.raises(ValueError):
            qdrift_bound(unit_triple, float("nan"), 100.0)

    def test_minimum_term_count(self):
        spec = make_spec([1.0, 0.5])
        with pytest.raises(ValueError, match="3 terms"):
            sparsto_bound(spec, all_ones_assignment(spec), 1.0, 100.0)

    def test_assignment_length_mismatch(self, unit_triple):
        with pytest.raises(ValueError, match="match"):
            sparsto_bound(unit_triple, custom_assignment([0.5, 0.5]), 1.0, 100.0)

    def test_assignment_field_validation(self):
        with pytest.raises(ValueError):
            ProbabilityAssignment(p=np.array([0.0, 0.5]), active_count=0, ansatz_tag="custom")
        with pytest.raises(ValueError):
            ProbabilityAssignment(p=np.array([1.5]), active_count=0, ansatz_tag="custom")
        with pytest.raises(ValueError):
            ProbabilityAssignment(p=np.array([0.5, 1.0]), active_count=1, ansatz_tag="custom")
        with pytest.raises(ValueError):
            ProbabilityAssignment(p=np.array([1.0]), active_count=0, ansatz_tag="bogus")
        with pytest.raises(ValueError):
            ProbabilityAssignment(
                p=np.array([1.0]), active_count=1, ansatz_tag="custom", target_mu=-2.0
            )

    def test_breakdown_rejects_negative_components(self):
        with pytest.raises(ValueError):
            BoundBreakdown(
                method="sparsto",
                eps1=-1e-9,
                eps2=0.0,
                eps31=0.0,
                eps32=0.0,
                total=0.0,
                t=1.0,
                gates=1.0,
                n_terms=3,
                lam=1.0,
                mu=None,
            )

    def test_to_dict_layout(self, unit_triple):
        d = qdrift_bound(unit_triple, 1.0, 100.0).to_dict()
        assert d["method"] == "qdrift"
        assert set(d["inputs"]) == {"t", "gates", "n_terms", "lambda", "mu"}


class TestProbabilityFiles:
    def test_round_trip_sorted_order(self, unit_triple):
        assignment = custom_assignment([1.0, 0.25, 0.125], active_count=1)
        text = serialize_probabilities(assignment)
        parsed = parse_probabilities(text)
        assert parsed.hamiltonian_order == "sorted_desc"
        assert parsed.active_count == 1
        assert parsed.p == (1.0, 0.25, 0.125)

    def test_align_from_file_order(self):
        spec = make_spec([0.1, 0.5, 0.3])
        prob = ProbabilityFile(hamiltonian_order="file", active_count=1, p=(0.1, 1.0, 0.3))
        spec_sorted, assignment = align_probabilities(spec, prob)
        assert [t.coeff for t in spec_sorted.terms] == [0.5, 0.3, 0.1]
        assert list(assignment.p) == [1.0, 0.3, 0.1]
        assert assignment.ansatz_tag == "custom"

    def test_align_from_sorted_order_is_positional(self):
        spec = make_spec([0.1, 0.5, 0.3])
        prob = ProbabilityFile(
            hamiltonian_order="sorted_desc", active_count=1, p=(1.0, 0.6, 0.2)
        )
        _, assignment = align_probabilities(spec, prob)
        assert list(assignment.p) == [1.0, 0.6, 0.2]

    def test_align_rejects_misplaced_prefix(self):
        spec = make_spec([0.1, 0.5, 0.3])
        prob = ProbabilityFile(hamiltonian_order="file", active_count=1, p=(1.0, 0.5, 0.3))
        with pytest.raises(ValueError):
            align_probabilities(spec, prob)

    def test_align_rejects_length_mismatch(self, unit_triple):
        prob = ProbabilityFile(hamiltonian_order="file", active_count=0, p=(0.5, 0.5))
        with pytest.raises(ValueError, match="length"):
            align_probabilities(unit_triple, prob)

    def test_parse_validation(self):
        with pytest.raises(ValueError):
            parse_probabilities('{"format": "probabilities-v1", "p": []}')
        with pytest.raises(ValueError):
            parse_probabilities('{"format": "probabilities-v1", "p": [0.0]}')
        with pytest.raises(ValueError):
            parse_probabilities('{"format": "nope", "p": [0.5]}')
        with pytest.raises(ValueError):
            parse_probabilities("[1, 2]")
        with pytest.raises(ValueError):
            parse_probabilities(
                '{"format": "probabilities-v1", "hamiltonian_order": "weird", "p": [0.5]}'
            )
