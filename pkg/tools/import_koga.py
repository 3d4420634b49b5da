#!/usr/bin/env python
"""Convert Koga-style ``.slater`` tables into the ``.sto`` basis format.

The raw tables (Koga, Kanayama, Watanabe, Thakkar, Int. J. Quantum Chem. 71,
491 (1999); He to Xe) are distributed, for example, inside the ``qc-atomdb``
wheel under ``atomdb/data/slater_atom.tar.xz`` (``neutral/*.slater``).

Usage::

    python tools/import_koga.py NEUTRAL_DIR OUT.sto OUT.manifest
"""
import argparse
import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from atomcomplexity.elements import SYMBOLS  # noqa: E402
from atomcomplexity.rhf import block_checksum  # noqa: E402

NAMES = (
    "HYDROGEN HELIUM LITHIUM BERYLLIUM BORON CARBON NITROGEN OXYGEN FLUORINE NEON "
    "SODIUM MAGNESIUM ALUMINUM SILICON PHOSPHORUS SULFUR CHLORINE ARGON POTASSIUM "
    "CALCIUM SCANDIUM TITANIUM VANADIUM CHROMIUM MANGANESE IRON COBALT NICKEL COPPER "
    "ZINC GALLIUM GERMANIUM ARSENIC SELENIUM BROMINE KRYPTON RUBIDIUM STRONTIUM "
    "YTTRIUM ZIRCONIUM NIOBIUM MOLYBDENUM TECHNETIUM RUTHENIUM RHODIUM PALLADIUM "
    "SILVER CADMIUM INDIUM TIN ANTIMONY TELLURIUM IODINE XENON"
).split()
L_OF = {"S": 0, "P": 1, "D": 2, "F": 3}
SHELLS = {"K": ["1S"], "L": ["2S", "2P"], "M": ["3S", "3P", "3D"]}
CAPACITY = {"S": 2, "P": 6, "D": 10, "F": 14}
PRIM = re.compile(r"^\d[SPDF]$")


def occupations(header):
    occ = {f"{n}{l}": int(c) for n, l, c in re.findall(r"(\d)([SPDF])\((\d+)\)", header)}
    for shell, _ in re.findall(r"\b([KLM])\((\d+)\)", header):
        for label in SHELLS[shell]:
            occ[label] = CAPACITY[label[1]]
    return occ


def read_slater(path):
    lines = Path(path).read_text().splitlines()
    header = lines[0]
    occ = occupations(header)
    orbitals = {}
    i = 0
    while i < len(lines):
        parts = lines[i].split()
        if len(parts) > 1 and parts[0] in L_OF and all(PRIM.match(p) for p in parts[1:]):
            labels = parts[1:]
            i += 1
            while "BASIS" not in lines[i]:
                i += 1
            i += 1
            if "CUSP" in lines[i]:
                i += 1
            rows = []
            while i < len(lines):
                q = lines[i].split()
                if len(q) < 2 or not PRIM.match(q[0]):
                    break
                rows.append((q[0], q[1], q[2:2 + len(labels)]))
                i += 1
            for j, label in enumerate(labels):
                orbitals[label] = [(prim, zeta, coefs[j]) for prim, zeta, coefs in rows]
            continue
        i += 1
    return header, occ, orbitals


def render(z, header, occ, orbitals):
    out = [f"atom Z={z} symbol={SYMBOLS[z]}"]
    for label, terms in orbitals.items():
        n_occ = occ.get(label, 0)
        if n_occ == 0:
            continue
        out.append(f"orbital label={label} l={L_OF[label[1]]} occ={n_occ}")
        for prim, zeta, coef in terms:
            out.append(f"term c={coef} n={prim[0]} zeta={zeta}")
    out.append("end")
    return out


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("neutral_dir", type=Path)
    parser.add_argument("out", type=Path)
    parser.add_argument("manifest", type=Path)
    args = parser.parse_args(argv)

    blocks = {}
    for path in sorted(args.neutral_dir.glob("*.slater")):
        header, occ, orbitals = read_slater(path)
        name = header.split()[0]
        if name not in NAMES:
            continue
        z = NAMES.index(name) + 1
        if z < 2:
            continue
        blocks[z] = (header.strip(), render(z, header, occ, orbitals))

    text = [
        "# Roothaan-Hartree-Fock STO expansions of neutral ground-state atoms, Z = 2..54.",
        "# Source: T. Koga, K. Kanayama, S. Watanabe, A. J. Thakkar,",
        "#   Int. J. Quantum Chem. 71, 491 (1999). Coefficients refer to normalized STOs.",
        "# Hydrogen is not listed; it is generated analytically.",
    ]
    manifest = []
    for z in sorted(blocks):
        header, lines = blocks[z]
        text.append(f"# {header}")
        text.extend(lines)
        n_orb = sum(1 for ln in lines if ln.startswith("orbital"))
        manifest.append(f"{z} {SYMBOLS[z]} {n_orb} {block_checksum(lines)}")
    args.out.write_text("\n".join(text) + "\n", encoding="utf-8")
    args.manifest.write_text("\n".join(manifest) + "\n", encoding="utf-8")
    print(f"wrote {len(blocks)} atoms")


if __name__ == "__main__":
    main()
