"""Hamiltonian term lists: the common input type for bounds, schedules and channels.

A Hamiltonian is a weighted sum of Pauli strings ``H = sum_j c_j P_j`` with
nonzero real coefficients.  This module defines the in-memory representation,
the ``hamiltonian-terms-v1`` JSON interchange format, and a deterministic
synthesizer for power-law coefficient spectra.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass

import numpy as np

__all__ = [
    "FORMAT_TAG",
    "HamTerm",
    "HamiltonianSpec",
    "IdentityTermWarning",
    "is_sorted_desc",
    "lambda_norm",
    "load_hamiltonian",
    "magnitudes",
    "parse_hamiltonian",
    "save_hamiltonian",
    "serialize_hamiltonian",
    "sort_terms_desc",
    "synth_power_law",
]

FORMAT_TAG = "hamiltonian-terms-v1"

_PAULI_CHARS = "IXYZ"


class IdentityTermWarning(UserWarning):
    """Raised once per all-identity term dropped while parsing."""


def _validate_label(label: str, n_qubits: int) -> None:
    if not isinstance(label, str):
        raise ValueError(f"pauli label must be a string, got {type(label).__name__}")
    if len(label) != n_qubits:
        raise ValueError(
            f"pauli label {label!r} has length {len(label)}, expected {n_qubits}"
        )
    for ch in label:
        if ch not in _PAULI_CHARS:
            raise ValueError(
                f"pauli label {label!r} contains {ch!r}; allowed characters are I, X, Y, Z"
            )


def _validate_coeff(coeff: float) -> float:
    if isinstance(coeff, bool) or not isinstance(coeff, (int, float)):
        raise ValueError(f"coefficient must be a real number, got {coeff!r}")
    value = float(coeff)
    if not math.isfinite(value):
        raise ValueError(f"coefficient must be finite, got {value!r}")
    if value == 0.0:
        raise ValueError("coefficient must be nonzero")
    return value


@dataclass(frozen=True)
class HamTerm:
    """One weighted Pauli string.

    Attributes:
        coeff: Nonzero finite real weight (sign carried here, not in the label).
        pauli: Uppercase string over ``IXYZ``; leftmost character is qubit 0.
    """

    coeff: float
    pauli: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", _validate_coeff(self.coeff))
        if not isinstance(self.pauli, str) or len(self.pauli) == 0:
            raise ValueError("pauli label must be a nonempty string")
        _validate_label(self.pauli, len(self.pauli))


@dataclass(frozen=True)
class HamiltonianSpec:
    """A Hamiltonian as an ordered list of terms on a fixed qubit count.

    Term order is significant: probability assignments and gate schedules
    are aligned positionally with ``terms``.  Labels must be distinct and
    never all-identity (an identity term is a global phase, not dynamics).

    Attributes:
        n_qubits: Number of qubits, at least 1.
        terms: Nonempty tuple of terms; every label has length ``n_qubits``.
        provenance: Free-text record of where the terms came from.
    """

    n_qubits: int
    terms: tuple[HamTerm, ...]
    provenance: str = ""

    def __post_init__(self) -> None:
        if not isinstance(self.n_qubits, int) or isinstance(self.n_qubits, bool):
            raise ValueError("n_qubits must be an integer")
        if self.n_qubits < 1:
            raise ValueError(f"n_qubits must be at least 1, got {self.n_qubits}")
        terms = tuple(self.terms)
        object.__setattr__(self, "terms", terms)
        if len(terms) == 0:
            raise ValueError("term list must be nonempty")
        identity = "I" * self.n_qubits
        seen: set[str] = set()
        for term in terms:
            if not isinstance(term, HamTerm):
                raise ValueError("terms must be HamTerm instances")
            _validate_label(term.pauli, self.n_qubits)
            if term.pauli == identity:
                raise ValueError("all-identity term is not allowed in a spec")
            if term.pauli in seen:
                raise ValueError(f"duplicate pauli label {term.pauli!r}")
            seen.add(term.pauli)
        if not isinstance(self.provenance, str):
            raise ValueError("provenance must be a string")

    def __len__(self) -> int:
        return len(self.terms)


def magnitudes(spec: HamiltonianSpec) -> np.ndarray:
    """Return ``|c_j|`` for every term, in term order."""
    return np.abs(np.array([t.coeff for t in spec.terms], dtype=float))


def lambda_norm(spec: HamiltonianSpec) -> float:
    """Return the 1-norm of the coefficient vector, ``sum_j |c_j| > 0``."""
    return float(np.sum(magnitudes(spec)))


def sort_terms_desc(spec: HamiltonianSpec) -> HamiltonianSpec:
    """Return a copy with terms stably sorted by decreasing ``|coeff|``.

    Ties keep their original relative order, so the result is deterministic.
    """
    order = sorted(range(len(spec.terms)), key=lambda j: -abs(spec.terms[j].coeff))
    return HamiltonianSpec(
        n_qubits=spec.n_qubits,
        terms=tuple(spec.terms[j] for j in order),
        provenance=spec.provenance,
    )


def is_sorted_desc(spec: HamiltonianSpec) -> bool:
    """True when term magnitudes are non-increasing in term order."""
    h = magnitudes(spec)
    return bool(np.all(h[:-1] >= h[1:]))


def parse_hamiltonian(document: str | bytes) -> HamiltonianSpec:
    """Parse a ``hamiltonian-terms-v1`` JSON document.

    All-identity terms contribute only a global phase to the dynamics, so
    they are dropped with one ``IdentityTermWarning`` each; remaining terms
    keep their file order.

    Args:
        document: JSON text or UTF-8 bytes.

    Returns:
        The parsed spec.

    Raises:
        ValueError: On malformed JSON, a wrong or missing format tag, a bad
            qubit count, invalid labels or coefficients, or when no
            non-identity terms remain.
    """
    if isinstance(document, bytes):
        document = document.decode("utf-8")
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError("document root must be a JSON object")
    if data.get("format") != FORMAT_TAG:
        raise ValueError(f"format tag must be {FORMAT_TAG!r}, got {data.get('format')!r}")
    n_qubits = data.get("n_qubits")
    if not isinstance(n_qubits, int) or isinstance(n_qubits, bool) or n_qubits < 1:
        raise ValueError(f"n_qubits must be a positive integer, got {n_qubits!r}")
    raw_terms = data.get("terms")
    if not isinstance(raw_terms, list) or len(raw_terms) == 0:
        raise ValueError("terms must be a nonempty list")
    provenance = data.get("provenance", "")
    if not isinstance(provenance, str):
        raise ValueError("provenance must be a string")

    identity = "I" * n_qubits
    terms: list[HamTerm] = []
    for index, entry in enumerate(raw_terms):
        if not isinstance(entry, dict) or "coeff" not in entry or "pauli" not in entry:
            raise ValueError(f"term {index} must be an object with 'coeff' and 'pauli'")
        label = entry["pauli"]
        _validate_label(label, n_qubits)
        if label == identity:
            warnings.warn(
                f"dropping all-identity term at index {index} (global phase only)",
                IdentityTermWarning,
                stacklevel=2,
            )
            continue
        terms.append(HamTerm(coeff=_validate_coeff(entry["coeff"]), pauli=label))
    if not terms:
        raise ValueError("no non-identity terms in document")
    return HamiltonianSpec(n_qubits=n_qubits, terms=tuple(terms), provenance=provenance)


def serialize_hamiltonian(spec: HamiltonianSpec) -> str:
    """Serialize to ``hamiltonian-terms-v1`` JSON text (round-trips exactly).

    Coefficients are written with shortest round-trip decimals, so parsing
    the output reproduces the input spec bit for bit.
    """
    doc = {
        "format": FORMAT_TAG,
        "n_qubits": spec.n_qubits,
        "provenance": spec.provenance,
        "terms": [{"coeff": t.coeff, "pauli": t.pauli} for t in spec.terms],
    }
    return json.dumps(doc, indent=1)


def load_hamiltonian(path: str) -> HamiltonianSpec:
    """Read and parse a ``hamiltonian-terms-v1`` file."""
    with open(path, "rb") as handle:
        return parse_hamiltonian(handle.read())


def save_hamiltonian(spec: HamiltonianSpec, path: str) -> None:
    """Write the spec as ``hamiltonian-terms-v1`` with a trailing newline."""
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(serialize_hamiltonian(spec))
        handle.write("\n")


def _code_to_label(code: int, n_qubits: int) -> str:
    # Two bits per qubit, leftmost character is the most significant pair.
    return "".join(
        _PAULI_CHARS[(code >> (2 * (n_qubits - 1 - q))) & 3] for q in range(n_qubits)
    )


def synth_power_law(
    n_terms: int, exponent: float, n_qubits: int, seed: int
) -> HamiltonianSpec:
    """Synthesize a spec with coefficient magnitudes ``j**-exponent``.

    Term ``j`` (1-based) gets magnitude ``j**-exponent`` and a random sign;
    labels are distinct non-identity Pauli strings drawn deterministically
    from ``seed``.  Magnitudes are non-increasing, so the result is already
    in descending order.

    Args:
        n_terms: Number of terms ``L``; must satisfy ``1 <= L <= 4**n - 1``.
        exponent: Decay exponent, nonnegative (0 gives a flat spectrum).
        n_qubits: Qubit count.
        seed: Root seed for label and sign draws.

    Returns:
        A spec with ``L`` terms and provenance recording the parameters.

    Raises:
        ValueError: If ``L`` exceeds the number of distinct non-identity
            labels, or any argument is out of range.
    """
    if n_qubits < 1:
        raise ValueError("n_qubits must be at least 1")
    space = 4**n_qubits - 1
    if not 1 <= n_terms <= space:
        raise ValueError(
            f"n_terms must be between 1 and {space} for {n_qubits} qubits, got {n_terms}"
        )
    if exponent < 0:
        raise ValueError("exponent must be nonnegative")
    rng = np.random.default_rng(seed)
    if space <= 1 << 22:
        codes = rng.choice(space, size=n_terms, replace=False) + 1
    else:
        seen: set[int] = set()
        codes_list: list[int] = []
        while len(codes_list) < n_terms:
            draw = int(rng.integers(1, space + 1))
            if draw not in seen:
                seen.add(draw)
                codes_list.append(draw)
        codes = np.array(codes_list)
    signs = rng.integers(0, 2, size=n_terms) * 2 - 1
    terms = tuple(
        HamTerm(
            coeff=float(signs[j]) * float(j + 1) ** -exponent,
            pauli=_code_to_label(int(codes[j]), n_qubits),
        )
        for j in range(n_terms)
    )
    provenance = (
        f"synthetic power law: n_terms={n_terms}, exponent={exponent}, "
        f"n_qubits={n_qubits}, seed={seed}"
    )
    return HamiltonianSpec(n_qubits=n_qubits, terms=terms, provenance=provenance)
