"""Sums over distinct index tuples, the building blocks of the error bounds.

For vectors ``a, b, c`` of equal length define

    S(a)       = sum_u a_u
    S(a, b)    = sum_{u != v} a_u b_v
    S(a, b, b) = sum over pairwise-distinct (u, v, w) of a_u b_v b_w
    S(a, a, a) = sum over pairwise-distinct (u, v, w) of a_u a_v a_w

The closed forms used here follow from inclusion-exclusion over coinciding
indices.  With ``A_k = sum a_u**k``, ``B_k = sum b_u**k`` and
``C_k = sum a_u b_u**k``:

    S(a, b)    = A_1 B_1 - C_1
    S(a, b, b) = A_1 (B_1**2 - B_2) - 2 C_1 B_1 + 2 C_2
    S(a, a, a) = A_1**3 - 3 A_2 A_1 + 2 A_3

``s3_brute`` evaluates the triple sum by direct enumeration instead and is
kept as an independent check on the closed forms.  All accumulations use
numpy's pairwise summation in double precision.
"""

from __future__ import annotations

import numpy as np

__all__ = ["s1", "s2", "s3_aaa", "s3_abb", "s3_brute"]

_BRUTE_LIMIT = 2000


def _as_vector(x, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must contain only finite entries")
    return arr


def _paired(a, b) -> tuple[np.ndarray, np.ndarray]:
    va = _as_vector(a, "a")
    vb = _as_vector(b, "b")
    if va.size != vb.size:
        raise ValueError(f"length mismatch: {va.size} vs {vb.size}")
    return va, vb


def s1(a) -> float:
    """Sum of the entries of ``a``."""
    return float(np.sum(_as_vector(a, "a")))


def s2(a, b) -> float:
    """Sum of ``a_u b_v`` over ordered pairs with ``u != v``."""
    va, vb = _paired(a, b)
    return float(np.sum(va) * np.sum(vb) - np.sum(va * vb))


def s3_abb(a, b) -> float:
    """Sum of ``a_u b_v b_w`` over ordered triples with pairwise-distinct indices."""
    va, vb = _paired(a, b)
    a1 = np.sum(va)
    b1 = np.sum(vb)
    b2 = np.sum(vb * vb)
    c1 = np.sum(va * vb)
    c2 = np.sum(va * vb * vb)
    return float(a1 * (b1 * b1 - b2) - 2.0 * c1 * b1 + 2.0 * c2)


def s3_aaa(a) -> float:
    """Sum of ``a_u a_v a_w`` over ordered triples with pairwise-distinct indices."""
    va = _as_vector(a, "a")
    a1 = np.sum(va)
    a2 = np.sum(va * va)
    a3 = np.sum(va * va * va)
    return float(a1**3 - 3.0 * a2 * a1 + 2.0 * a3)


def s3_brute(a, b, c) -> float:
    """Enumerate ``sum a_u b_v c_w`` over pairwise-distinct index triples.

    This is the reference oracle for the closed forms above: it walks every
    ordered triple directly (the innermost sum is vectorized over the third
    index with the two excluded positions zeroed out), making no use of the
    inclusion-exclusion identities.  Deliberately cubic; refuses vectors
    longer than 2000 entries.
    """
    va, vb = _paired(a, b)
    vc = _as_vector(c, "c")
    if vc.size != va.size:
        raise ValueError(f"length mismatch: {va.size} vs {vc.size}")
    n = va.size
    if n > _BRUTE_LIMIT:
        raise ValueError(f"brute-force enumeration capped at n={_BRUTE_LIMIT}, got {n}")
    total = 0.0
    for j in range(n):
        rest = vc.copy()
        rest[j] = 0.0
        for k in range(n):
            if k == j:
                continue
            saved = rest[k]
            rest[k] = 0.0
            total += va[j] * vb[k] * float(np.sum(rest))
            rest[k] = saved
    return total
