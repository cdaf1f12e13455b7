"""Minimal-basis (STO-3G) s-type Gaussian data for light elements.

Each 1s shell is a fixed contraction of three primitive Gaussians; the
exponents are element-specific, the contraction coefficients are shared.
Only s-type shells are provided, which covers H/He chemistry exactly and
keeps every integral in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Contraction coefficients for the 1s STO-3G fit (same for every element).
_STO3G_1S_COEFFS = (0.1543289673, 0.5353281423, 0.4446345422)

# 1s exponents per element symbol.
_STO3G_1S_EXPONENTS = {
    "H": (3.425250914, 0.6239137298, 0.1688554040),
    "He": (6.362421394, 1.158922999, 0.3136497915),
}

NUCLEAR_CHARGE = {"H": 1, "He": 2}


@dataclass(frozen=True)
class ContractedGaussian:
    """A normalized contracted s-type Gaussian centered on one atom."""

    center: tuple[float, float, float]
    exponents: tuple[float, ...]
    coefficients: tuple[float, ...]

    @property
    def center_array(self) -> np.ndarray:
        return np.array(self.center, dtype=float)


def _primitive_norm(alpha: float) -> float:
    return (2.0 * alpha / math.pi) ** 0.75


def make_1s_function(symbol: str, center: tuple[float, float, float]) -> ContractedGaussian:
    """The STO-3G 1s function for ``symbol`` at ``center`` (bohr)."""
    if symbol not in _STO3G_1S_EXPONENTS:
        raise ValueError(f"no STO-3G s-shell data for element {symbol!r}")
    exponents = _STO3G_1S_EXPONENTS[symbol]
    raw = [
        c * _primitive_norm(a) for c, a in zip(_STO3G_1S_COEFFS, exponents)
    ]
    # Renormalize the contracted function so <phi|phi> is exactly 1.
    self_overlap = 0.0
    for ci, ai in zip(raw, exponents):
        for cj, aj in zip(raw, exponents):
            self_overlap += ci * cj * (math.pi / (ai + aj)) ** 1.5
    scale = 1.0 / math.sqrt(self_overlap)
    return ContractedGaussian(
        center=tuple(float(x) for x in center),
        exponents=tuple(float(a) for a in exponents),
        coefficients=tuple(scale * c for c in raw),
    )
