"""Command-line entry point: export a molecular qubit Hamiltonian to a file."""

from __future__ import annotations

import argparse
import sys

from .export import SUPPORTED_BASES, export_molecule, write_document
from .mapping import MAPPINGS
from .molecules import SUPPORTED_MOLECULES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="export-molecule",
        description=(
            "Compute a small molecule's electronic Hamiltonian in a minimal "
            "Gaussian basis, encode it on qubits, and write the term list as "
            "a hamiltonian-terms-v1 JSON file."
        ),
    )
    parser.add_argument(
        "--molecule",
        required=True,
        choices=sorted(SUPPORTED_MOLECULES),
        help="molecule to export",
    )
    parser.add_argument(
        "--basis",
        default="sto-3g",
        choices=SUPPORTED_BASES,
        help="Gaussian basis set (default: sto-3g)",
    )
    parser.add_argument(
        "--mapping",
        default="jordan-wigner",
        choices=MAPPINGS,
        help="fermion-to-qubit encoding (default: jordan-wigner)",
    )
    parser.add_argument(
        "--output",
        required=True,
        help="path of the hamiltonian-terms-v1 file to write",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = export_molecule(args.molecule, args.basis, args.mapping)
        write_document(result, args.output)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(
        f"wrote {args.output}: {len(result.terms)} terms on "
        f"{result.n_qubits} qubits "
        f"(constant={result.constant:.10f}, "
        f"E_nuc={result.nuclear_repulsion:.10f}, "
        f"E_HF={result.hf_energy:.10f})"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
