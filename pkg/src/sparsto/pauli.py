"""Symbolic algebra on Pauli strings: products, commutators, commutator norms.

Pauli strings multiply position by position, with the accumulated phase
tracked as a power of ``i``.  Two strings either commute or anticommute:
they anticommute exactly when the number of positions where both are
non-identity and different is odd.  For anticommuting strings
``[A, B] = 2AB``, so commutators of Pauli strings are again (scaled) Pauli
strings and nested commutator operator norms take only the values 0 and 4.
"""

from __future__ import annotations

__all__ = [
    "commutator",
    "commutes",
    "multiply",
    "nested_commutator_norm",
]

# (a, b) -> (k, p) meaning a * b = i**k * p, per qubit.
_MUL: dict[tuple[str, str], tuple[int, str]] = {
    ("I", "I"): (0, "I"), ("I", "X"): (0, "X"), ("I", "Y"): (0, "Y"), ("I", "Z"): (0, "Z"),
    ("X", "I"): (0, "X"), ("X", "X"): (0, "I"), ("X", "Y"): (1, "Z"), ("X", "Z"): (3, "Y"),
    ("Y", "I"): (0, "Y"), ("Y", "X"): (3, "Z"), ("Y", "Y"): (0, "I"), ("Y", "Z"): (1, "X"),
    ("Z", "I"): (0, "Z"), ("Z", "X"): (1, "Y"), ("Z", "Y"): (3, "X"), ("Z", "Z"): (0, "I"),
}

_PHASES = (1 + 0j, 1j, -1 + 0j, -1j)


def multiply(a: str, b: str) -> tuple[complex, str]:
    """Return ``(phase, label)`` with ``A @ B = phase * P_label``."""
    if len(a) != len(b):
        raise ValueError(f"label length mismatch: {len(a)} vs {len(b)}")
    k = 0
    out = []
    for ca, cb in zip(a, b):
        kk, p = _MUL[(ca, cb)]
        k += kk
        out.append(p)
    return _PHASES[k % 4], "".join(out)


def commutes(a: str, b: str) -> bool:
    """True when the two Pauli strings commute.

    Anticommutation holds exactly when an odd number of positions carry
    differing non-identity characters.
    """
    if len(a) != len(b):
        raise ValueError(f"label length mismatch: {len(a)} vs {len(b)}")
    odd = False
    for ca, cb in zip(a, b):
        if ca != "I" and cb != "I" and ca != cb:
            odd = not odd
    return not odd


def commutator(a: str, b: str) -> tuple[complex, str] | None:
    """Return ``[A, B]`` as ``(coeff, label)``, or None when it vanishes.

    For anticommuting strings ``[A, B] = AB - BA = 2AB``.
    """
    if commutes(a, b):
        return None
    phase, label = multiply(a, b)
    return 2.0 * phase, label


def nested_commutator_norm(outer: str, a: str, b: str) -> float:
    """Operator norm of ``[P_outer, [P_a, P_b]]``; always 0 or 4.

    Pauli strings are unitary, so a nonvanishing double commutator is
    ``4 * phase * P`` for some string ``P`` and has operator norm 4.
    """
    inner = commutator(a, b)
    if inner is None:
        return 0.0
    _, label = inner
    if commutes(outer, label):
        return 0.0
    return 4.0
