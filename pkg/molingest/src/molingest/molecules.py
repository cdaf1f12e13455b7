"""Built-in molecule definitions (coordinates in bohr)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import NUCLEAR_CHARGE, ContractedGaussian, make_1s_function


@dataclass(frozen=True)
class Molecule:
    """Nuclei plus electron count for a supported closed-shell system."""

    name: str
    atoms: tuple[tuple[str, tuple[float, float, float]], ...]
    charge: int

    @property
    def n_electrons(self) -> int:
        return sum(NUCLEAR_CHARGE[sym] for sym, _ in self.atoms) - self.charge

    def nuclei(self) -> list[tuple[np.ndarray, float]]:
        return [
            (np.array(xyz, dtype=float), float(NUCLEAR_CHARGE[sym]))
            for sym, xyz in self.atoms
        ]

    def basis_functions(self) -> list[ContractedGaussian]:
        return [make_1s_function(sym, xyz) for sym, xyz in self.atoms]


_EQUILIBRIUM_H2 = 1.4
_EQUILIBRIUM_HEHP = 1.4632
_H4_SPACING = 1.8

SUPPORTED_MOLECULES: dict[str, Molecule] = {
    "H2": Molecule(
        name="H2",
        atoms=(("H", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, _EQUILIBRIUM_H2))),
        charge=0,
    ),
    "HeH+": Molecule(
        name="HeH+",
        atoms=(("He", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, _EQUILIBRIUM_HEHP))),
        charge=1,
    ),
    "H4": Molecule(
        name="H4",
        atoms=tuple(
            ("H", (0.0, 0.0, _H4_SPACING * k)) for k in range(4)
        ),
        charge=0,
    ),
}


def get_molecule(name: str) -> Molecule:
    if name not in SUPPORTED_MOLECULES:
        supported = ", ".join(sorted(SUPPORTED_MOLECULES))
        raise ValueError(f"unsupported molecule {name!r}; supported: {supported}")
    return SUPPORTED_MOLECULES[name]
