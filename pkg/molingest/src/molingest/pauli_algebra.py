"""Sparse symbolic algebra over Pauli strings with complex weights."""

from __future__ import annotations

# Single-qubit products: (left, right) -> (phase, result).
_PRODUCT = {
    ("I", "I"): (1, "I"), ("I", "X"): (1, "X"), ("I", "Y"): (1, "Y"), ("I", "Z"): (1, "Z"),
    ("X", "I"): (1, "X"), ("X", "X"): (1, "I"), ("X", "Y"): (1j, "Z"), ("X", "Z"): (-1j, "Y"),
    ("Y", "I"): (1, "Y"), ("Y", "X"): (-1j, "Z"), ("Y", "Y"): (1, "I"), ("Y", "Z"): (1j, "X"),
    ("Z", "I"): (1, "Z"), ("Z", "X"): (1j, "Y"), ("Z", "Y"): (-1j, "X"), ("Z", "Z"): (1, "I"),
}


def multiply_labels(left: str, right: str) -> tuple[complex, str]:
    """Product of two Pauli strings: overall phase and resulting string."""
    phase: complex = 1
    chars = []
    for a, b in zip(left, right):
        p, c = _PRODUCT[(a, b)]
        phase *= p
        chars.append(c)
    return phase, "".join(chars)


class PauliSum:
    """A complex-weighted combination of Pauli strings on ``n`` qubits."""

    __slots__ = ("n_qubits", "terms")

    def __init__(self, n_qubits: int, terms: dict[str, complex] | None = None):
        self.n_qubits = n_qubits
        self.terms: dict[str, complex] = dict(terms or {})

    @classmethod
    def from_ops(
        cls, n_qubits: int, ops: dict[int, str], weight: complex = 1.0
    ) -> "PauliSum":
        """A single string placing ``ops[qubit] = letter`` over identity."""
        label = list("I" * n_qubits)
        for qubit, letter in ops.items():
            label[qubit] = letter
        return cls(n_qubits, {"".join(label): complex(weight)})

    @classmethod
    def identity(cls, n_qubits: int, weight: complex = 1.0) -> "PauliSum":
        return cls(n_qubits, {"I" * n_qubits: complex(weight)})

    def __add__(self, other: "PauliSum") -> "PauliSum":
        out = dict(self.terms)
        for label, weight in other.terms.items():
            out[label] = out.get(label, 0.0) + weight
        return PauliSum(self.n_qubits, out)

    def __mul__(self, other):
        if isinstance(other, PauliSum):
            out: dict[str, complex] = {}
            for label_a, wa in self.terms.items():
                for label_b, wb in other.terms.items():
                    phase, label = multiply_labels(label_a, label_b)
                    out[label] = out.get(label, 0.0) + phase * wa * wb
            return PauliSum(self.n_qubits, out)
        return PauliSum(
            self.n_qubits, {k: v * complex(other) for k, v in self.terms.items()}
        )

    __rmul__ = __mul__

    def pruned(self, cutoff: float = 0.0) -> "PauliSum":
        return PauliSum(
            self.n_qubits,
            {k: v for k, v in self.terms.items() if abs(v) > cutoff},
        )
