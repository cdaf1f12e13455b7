"""molingest: small-molecule electronic Hamiltonians as qubit term lists.

The pipeline is self-contained: contracted s-type Gaussian basis functions,
closed-form one- and two-electron integrals, restricted Hartree-Fock, and a
fermion-to-qubit encoding (Jordan-Wigner or Bravyi-Kitaev).  The result is
written in the ``hamiltonian-terms-v1`` JSON interchange format.
"""

from .basis import ContractedGaussian, make_1s_function
from .export import (
    COEFF_CUTOFF,
    FORMAT_TAG,
    SUPPORTED_BASES,
    ExportResult,
    export_molecule,
    render_document,
    write_document,
)
from .integrals import build_ao_integrals
from .mapping import MAPPINGS, lowering_operator, qubit_hamiltonian, raising_operator
from .molecules import SUPPORTED_MOLECULES, Molecule, get_molecule
from .pauli_algebra import PauliSum, multiply_labels
from .scf import SCFResult, run_rhf, solve_mean_field, transform_to_mo

__version__ = "0.1.0"

__all__ = [
    "COEFF_CUTOFF",
    "ContractedGaussian",
    "ExportResult",
    "FORMAT_TAG",
    "MAPPINGS",
    "Molecule",
    "PauliSum",
    "SCFResult",
    "SUPPORTED_BASES",
    "SUPPORTED_MOLECULES",
    "__version__",
    "build_ao_integrals",
    "export_molecule",
    "get_molecule",
    "lowering_operator",
    "make_1s_function",
    "multiply_labels",
    "qubit_hamiltonian",
    "raising_operator",
    "render_document",
    "run_rhf",
    "solve_mean_field",
    "transform_to_mo",
    "write_document",
]
