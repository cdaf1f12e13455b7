"""Fermion-to-qubit encodings built from index-set geometry.

Both supported encodings express the ladder operators as

    a_j  = 1/2 * X_{U(j)} X_j Z_{P(j)}  +  i/2 * X_{U(j)} Y_j Z_{R(j)}
    a_j^dag = same strings with the imaginary part negated,

where U, P, R are the update, parity, and remainder index sets.  For the
sequential (Jordan-Wigner) encoding U is empty and P = R = {0..j-1}; for
the binary-tree (Bravyi-Kitaev) encoding the sets come from a Fenwick
tree over the orbital indices.
"""

from __future__ import annotations

from .pauli_algebra import PauliSum

MAPPINGS = ("jordan-wigner", "bravyi-kitaev")


def _fenwick_update_set(j: int, n: int) -> frozenset[int]:
    """Indices whose stored partial sums include orbital ``j`` (ancestors)."""
    out = set()
    i = j + 1
    i += i & (-i)
    while i <= n:
        out.add(i - 1)
        i += i & (-i)
    return frozenset(out)


def _fenwick_parity_set(j: int) -> frozenset[int]:
    """Indices whose stored sums XOR to the parity of orbitals 0..j-1."""
    out = set()
    i = j
    while i > 0:
        out.add(i - 1)
        i -= i & (-i)
    return frozenset(out)


def _fenwick_flip_set(j: int) -> frozenset[int]:
    """Children of node ``j``: stored sums that complete its own bit."""
    out = set()
    i = j + 1
    low = i & (-i)
    c = i - 1
    while c > i - low:
        out.add(c - 1)
        c -= c & (-c)
    return frozenset(out)


def _index_sets(j: int, n: int, scheme: str):
    if scheme == "jordan-wigner":
        below = frozenset(range(j))
        return frozenset(), below, below
    if scheme == "bravyi-kitaev":
        update = _fenwick_update_set(j, n)
        parity = _fenwick_parity_set(j)
        remainder = parity - _fenwick_flip_set(j)
        return update, parity, remainder
    raise ValueError(f"mapping must be one of {MAPPINGS}, got {scheme!r}")


def lowering_operator(j: int, n_qubits: int, scheme: str) -> PauliSum:
    """The annihilation operator a_j as a two-string Pauli combination."""
    update, parity, remainder = _index_sets(j, n_qubits, scheme)
    real_ops = {k: "X" for k in update}
    real_ops[j] = "X"
    real_ops.update({k: "Z" for k in parity})
    imag_ops = {k: "X" for k in update}
    imag_ops[j] = "Y"
    imag_ops.update({k: "Z" for k in remainder})
    return PauliSum.from_ops(n_qubits, real_ops, 0.5) + PauliSum.from_ops(
        n_qubits, imag_ops, 0.5j
    )


def raising_operator(j: int, n_qubits: int, scheme: str) -> PauliSum:
    """The creation operator a_j^dag."""
    update, parity, remainder = _index_sets(j, n_qubits, scheme)
    real_ops = {k: "X" for k in update}
    real_ops[j] = "X"
    real_ops.update({k: "Z" for k in parity})
    imag_ops = {k: "X" for k in update}
    imag_ops[j] = "Y"
    imag_ops.update({k: "Z" for k in remainder})
    return PauliSum.from_ops(n_qubits, real_ops, 0.5) + PauliSum.from_ops(
        n_qubits, imag_ops, -0.5j
    )


def qubit_hamiltonian(
    one_body, eri_chemist, n_electrons: int, scheme: str
) -> PauliSum:
    """Encode the spin-orbital second-quantized Hamiltonian.

    ``one_body``/``eri_chemist`` are spatial MO integrals; spin orbitals
    interleave as (orbital 0, up), (orbital 0, down), (orbital 1, up), ...
    The two-body part uses 1/2 sum <pq|rs> a_p^dag a_q^dag a_s a_r with
    physicist integrals <pq|rs> = (pr|qs) delta(s_p,s_r) delta(s_q,s_s).
    """
    del n_electrons  # electron count does not enter the operator itself
    n_spatial = one_body.shape[0]
    n = 2 * n_spatial
    raising = [raising_operator(j, n, scheme) for j in range(n)]
    lowering = [lowering_operator(j, n, scheme) for j in range(n)]

    total = PauliSum(n)
    for p in range(n):
        for q in range(n):
            if p % 2 != q % 2:
                continue
            weight = one_body[p // 2, q // 2]
            if abs(weight) < 1e-14:
                continue
            total = total + weight * (raising[p] * lowering[q])
    for p in range(n):
        for q in range(n):
            for r in range(n):
                for s_idx in range(n):
                    if p % 2 != r % 2 or q % 2 != s_idx % 2:
                        continue
                    weight = 0.5 * eri_chemist[
                        p // 2, r // 2, q // 2, s_idx // 2
                    ]
                    if abs(weight) < 1e-14:
                        continue
                    total = total + weight * (
                        raising[p] * raising[q] * lowering[s_idx] * lowering[r]
                    )
    return total.pruned(0.0)
