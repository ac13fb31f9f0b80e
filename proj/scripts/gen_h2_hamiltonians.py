#!/usr/bin/env python3
# Copyright 2026 The eqgan Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/hamiltonians/h2_*.json (STO-3G, Jordan-Wigner, 4 qubits).

Requires pyscf, openfermion and openfermionpyscf. The C++ code never calls
this; the JSON files are checked in.
"""
import json
import pathlib

from openfermion import MolecularData, get_fermion_operator, jordan_wigner
from openfermionpyscf import run_pyscf

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "hamiltonians"


def pauli_word(term, n):
    word = ["I"] * n
    for qubit, op in term:
        word[qubit] = op
    return "".join(word)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for tenths in range(3, 21):
        bond = tenths / 10
        mol = MolecularData([("H", (0, 0, 0)), ("H", (0, 0, bond))], "sto-3g", 1, 0)
        mol = run_pyscf(mol, run_scf=True, run_fci=True)
        qubit_op = jordan_wigner(get_fermion_operator(mol.get_molecular_hamiltonian()))
        qubit_op.compress()
        n = mol.n_qubits
        terms = []
        for term, coeff in sorted(qubit_op.terms.items()):
            terms.append({"coeff": float(coeff.real), "pauli": pauli_word(term, n)})
        doc = {
            "name": f"H2 STO-3G JW r={bond:.1f}",
            "num_qubits": n,
            "bond_length_angstrom": bond,
            "fci_energy_hartree": float(mol.fci_energy),
            "terms": terms,
        }
        (OUT / f"h2_{bond:.1f}.json").write_text(json.dumps(doc, indent=1) + "\n")


if __name__ == "__main__":
    main()
