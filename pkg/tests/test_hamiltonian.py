"""Term-list model, format round-trips, sorting and synthetic generation."""

from __future__ import annotations

import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sparsto import (
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
from sparsto.hamiltonian import FORMAT_TAG, IdentityTermWarning, is_sorted_desc

from conftest import label_for, make_spec


def _document(terms, n_qubits=2, fmt=FORMAT_TAG):
    return json.dumps(
        {
            "format": fmt,
            "n_qubits": n_qubits,
            "provenance": "test document",
            "terms": [{"coeff": c, "pauli": p} for c, p in terms],
        }
    )


class TestParsing:
    def test_basic_fields(self):
        spec = parse_hamiltonian(_document([(0.5, "XZ"), (-0.25, "YI")]))
        assert len(spec) == 2
        assert spec.n_qubits == 2
        assert lambda_norm(spec) == 0.75

    def test_identity_terms_dropped_with_warning(self):
        doc = _document([(0.1, "II"), (0.3, "XX")])
        with pytest.warns(IdentityTermWarning) as caught:
            spec = parse_hamiltonian(doc)
        assert len(caught) == 1
        assert len(spec) == 1
        assert spec.terms[0].pauli == "XX"

    def test_only_identity_terms_is_an_error(self):
        with pytest.warns(IdentityTermWarning):
            with pytest.raises(ValueError, match="identity"):
                parse_hamiltonian(_document([(0.1, "II")]))

    def test_duplicate_labels_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            parse_hamiltonian(_document([(0.5, "XZ"), (0.25, "XZ")]))

    @pytest.mark.parametrize("coeff", [0.0, float("inf"), float("nan"), True])
    def test_bad_coefficients_rejected(self, coeff):
        with pytest.raises(ValueError):
            parse_hamiltonian(_document([(coeff, "XZ")]))

    @pytest.mark.parametrize("label", ["xz", "XA", "X", "XZZ", ""])
    def test_bad_labels_rejected(self, label):
        with pytest.raises(ValueError):
            parse_hamiltonian(_document([(0.5, label)]))

    def test_bad_envelope_rejected(self):
        with pytest.raises(ValueError, match="format"):
            parse_hamiltonian(_document([(0.5, "XZ")], fmt="other-v9"))
        with pytest.raises(ValueError):
            parse_hamiltonian("[]")
        with pytest.raises(ValueError):
            parse_hamiltonian("not json at all {")
        with pytest.raises(ValueError):
            parse_hamiltonian(_document([], n_qubits=2))
        with pytest.raises(ValueError):
            parse_hamiltonian(_document([(0.5, "XZ")], n_qubits=0))

    def test_bytes_accepted(self):
        spec = parse_hamiltonian(_document([(0.5, "XZ")]).encode())
        assert len(spec) == 1


class TestModel:
    def test_lambda_examples(self):
        assert lambda_norm(make_spec([1, 1, 1])) == 3.0
        assert lambda_norm(make_spec([0.5, -0.25])) == 0.75

    def test_magnitudes_are_absolute_values(self):
        spec = make_spec([-0.5, 0.25])
        assert np.array_equal(magnitudes(spec), [0.5, 0.25])

    def test_term_validation(self):
        with pytest.raises(ValueError):
            HamTerm(coeff=0.0, pauli="X")
        with pytest.raises(ValueError):
            HamTerm(coeff=1.0, pauli="xz")
        with pytest.raises(ValueError):
            HamiltonianSpec(n_qubits=1, terms=(), provenance="none")

    def test_label_length_must_match_qubit_count(self):
        with pytest.raises(ValueError):
            HamiltonianSpec(
                n_qubits=2, terms=(HamTerm(coeff=1.0, pauli="X"),), provenance="p"
            )


class TestSorting:
    def test_sort_by_descending_magnitude(self):
        spec = sort_terms_desc(make_spec([0.1, 0.5, 0.3]))
        assert [t.coeff for t in spec.terms] == [0.5, 0.3, 0.1]

    def test_sort_is_stable_on_ties(self):
        spec = make_spec([0.2, 0.2], labels=["XI", "ZI"], n_qubits=2)
        assert [t.pauli for t in sort_terms_desc(spec).terms] == ["XI", "ZI"]

    def test_sort_uses_magnitude_not_sign(self):
        spec = sort_terms_desc(make_spec([0.1, -0.5, 0.3]))
        assert [t.coeff for t in spec.terms] == [-0.5, 0.3, 0.1]

    def test_sort_permutes_large_random_spec(self):
        rng = np.random.default_rng(42)
        coeffs = rng.uniform(-1, 1, size=1000)
        coeffs[coeffs == 0] = 0.5
        spec = make_spec(coeffs)
        out = sort_terms_desc(spec)
        assert sorted(t.pauli for t in out.terms) == sorted(
            t.pauli for t in spec.terms
        )
        mags = magnitudes(out)
        assert np.all(mags[:-1] >= mags[1:])
        assert is_sorted_desc(out)
        assert not is_sorted_desc(spec)


class TestSerialization:
    def test_round_trip_preserves_exact_floats(self):
        spec = make_spec([0.1 + 0.2, -1 / 3, 1e-300])
        again = parse_hamiltonian(serialize_hamiltonian(spec))
        assert again == spec

    def test_save_load_round_trip(self, tmp_path):
        spec = make_spec([0.5, -0.25])
        path = tmp_path / "h.json"
        save_hamiltonian(spec, str(path))
        raw = path.read_bytes()
        assert b"\r" not in raw
        assert raw.endswith(b"\n")
        assert load_hamiltonian(str(path)) == spec

    def test_serialized_key_layout(self):
        doc = json.loads(serialize_hamiltonian(make_spec([0.5])))
        assert list(doc) == ["format", "n_qubits", "provenance", "terms"]
        assert doc["format"] == FORMAT_TAG

    @settings(max_examples=50, deadline=None)
    @given(
        st.lists(
            st.floats(
                min_value=1e-6, max_value=1e6, allow_nan=False, allow_infinity=False
            ),
            min_size=1,
            max_size=15,
        ),
        st.booleans(),
    )
    def test_round_trip_property(self, mags, negate):
        coeffs = [-m if negate else m for m in mags]
        spec = make_spec(coeffs)
        assert parse_hamiltonian(serialize_hamiltonian(spec)) == spec


class TestSynth:
    def test_power_law_magnitudes(self):
        spec = synth_power_law(3, 1.0, 2, seed=0)
        assert np.allclose(magnitudes(spec), [1.0, 0.5, 1 / 3], rtol=0, atol=0)

    def test_determinism(self):
        assert synth_power_law(20, 2.0, 3, seed=9) == synth_power_law(20, 2.0, 3, seed=9)
        assert synth_power_law(20, 2.0, 3, seed=9) != synth_power_law(20, 2.0, 3, seed=8)

    def test_large_power_law_lambda(self):
        spec = synth_power_law(1000, 2.0, 10, seed=1)
        expected = float(np.sum(np.arange(1, 1001, dtype=float) ** -2.0))
        assert math.isclose(lambda_norm(spec), expected, rel_tol=1e-12)
        assert abs(lambda_norm(spec) - 1.64393) < 1e-5

    def test_labels_distinct_and_non_identity(self):
        spec = synth_power_law(60, 0.5, 3, seed=4)
        labels = [t.pauli for t in spec.terms]
        assert len(set(labels)) == 60
        assert all(set(lab) <= set("IXYZ") and set(lab) != {"I"} for lab in labels)

    def test_already_sorted_and_parseable(self):
        spec = synth_power_law(50, 1.5, 4, seed=2)
        assert is_sorted_desc(spec)
        assert parse_hamiltonian(serialize_hamiltonian(spec)) == spec

    def test_argument_validation(self):
        with pytest.raises(ValueError):
            synth_power_law(4, 1.0, 1, seed=0)
        with pytest.raises(ValueError):
            synth_power_law(0, 1.0, 2, seed=0)
        with pytest.raises(ValueError):
            synth_power_law(3, -0.5, 2, seed=0)

    def test_label_helper_agrees_with_generator(self):
        spec = synth_power_law(15, 0.0, 2, seed=11)
        assert all(len(t.pauli) == 2 for t in spec.terms)
        assert label_for(1, 2) == "IX" and label_for(4, 2) == "XI"
