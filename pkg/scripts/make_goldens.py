#!/usr/bin/env python3
"""Serialize the hand-derived expected records for the bundled fixtures.

The values below were worked out from the fixture files by hand, field
by field; nothing here imports the parser.  Rerunning the script is
only ever needed when a fixture file itself is deliberately changed.
"""

import json
from pathlib import Path

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "golden"

EXPECTED = {
    "h2o_opt": {
        "id": 0,
        "title": "water optimization",
        "file_path": "h2o_opt.log",
        "elements": ["H", "O"],
        "atom_sites": [
            ["O", 0.0, 0.0, 0.119262],
            ["H", 0.0, 0.758602, -0.477037],
            ["H", 0.0, -0.758602, -0.477037],
        ],
        "methods": ["b3lyp"],
        "basis_sets": ["6-31g(d)"],
        "job_types": ["opt"],
        "charge": 0,
        "multiplicity": 1,
        "energy": -76.4089533,
        "degrees_of_freedom": 3,
        "flags": ["distance_matrix", "mulliken_charges", "optimized_parameters"],
        "missing": [],
    },
    "anomalous": {
        "id": 0,
        "title": "gas phase correlation energy",
        "file_path": "anomalous.log",
        "elements": [],
        "atom_sites": [],
        "methods": ["mp2"],
        "basis_sets": ["6-311+g(2d,p)"],
        "job_types": ["sp"],
        "charge": 0,
        "multiplicity": 1,
        "energy": -187.6342611,
        "degrees_of_freedom": None,
        "flags": [],
        "missing": ["degrees_of_freedom", "input_orientation"],
    },
    "freq_thermo": {
        "id": 0,
        "title": "formaldehyde opt+freq",
        "file_path": "freq_thermo.log",
        "elements": ["C", "H", "O"],
        "atom_sites": [
            ["C", 0.0, 0.0, 0.5268],
            ["O", 0.0, 0.0, -0.6784],
            ["H", 0.0, 0.9368, 1.1139],
            ["H", 0.0, -0.9368, 1.1139],
        ],
        "methods": ["b3lyp"],
        "basis_sets": ["6-31g(d)"],
        "job_types": ["freq", "opt"],
        "charge": 0,
        "multiplicity": 1,
        "energy": -114.5002387,
        "degrees_of_freedom": 6,
        "flags": [
            "frequencies",
            "optimized_parameters",
            "thermal_energy",
            "thermochemistry",
        ],
        "missing": [],
    },
    "uhf_radical": {
        "id": 0,
        "title": "hydroxyl radical single point",
        "file_path": "uhf_radical.log",
        "elements": ["H", "O"],
        "atom_sites": [
            ["O", 0.0, 0.0, 0.0],
            ["H", 0.0, 0.0, 0.9696],
        ],
        "methods": ["uhf"],
        "basis_sets": ["cc-pvdz"],
        "job_types": ["sp"],
        "charge": 0,
        "multiplicity": 2,
        "energy": -75.3982147,
        "degrees_of_freedom": None,
        "flags": ["input_orientation", "mulliken_charges"],
        "missing": ["degrees_of_freedom"],
    },
    "oniom_layered": {
        "id": 0,
        "title": "enzyme active site two-layer model",
        "file_path": "oniom_layered.log",
        "elements": ["C", "Fe", "H", "N"],
        "atom_sites": [
            ["Fe", 0.0132, -0.4225, 1.8703],
            ["N", 1.3221, 0.6134, -0.1967],
            ["C", -1.5046, 0.9248, -0.3729],
            ["H", -2.1019, -0.8376, 0.4431],
        ],
        "methods": ["amber", "b3lyp"],
        "basis_sets": ["6-31g"],
        "job_types": ["oniom"],
        "charge": -2,
        "multiplicity": 1,
        "energy": -1840.2217503,
        "degrees_of_freedom": 12,
        "flags": [],
        "missing": [],
    },
    "scrf_pcm": {
        "id": 0,
        "title": "solvated ammonium cation",
        "file_path": "scrf_pcm.log",
        "elements": ["H", "N"],
        "atom_sites": [
            ["N", 0.0, 0.0, 0.0],
            ["H", 0.5937, 0.5937, 0.5937],
            ["H", -0.5937, -0.5937, 0.5937],
            ["H", -0.5937, 0.5937, -0.5937],
            ["H", 0.5937, -0.5937, -0.5937],
        ],
        "methods": ["m062x"],
        "basis_sets": ["6-31g(d)"],
        "job_types": ["scrf(pcm)"],
        "charge": 1,
        "multiplicity": 1,
        "energy": -57.1031945,
        "degrees_of_freedom": 9,
        "flags": ["pcm"],
        "missing": [],
    },
    "route_wrapped": {
        "id": 0,
        "title": "transition state refinement",
        "file_path": "route_wrapped.log",
        "elements": ["Br", "C", "H"],
        "atom_sites": [
            ["C", 0.0, 0.0, 0.1125],
            ["Br", 0.0, 0.0, 2.0613],
            ["H", 0.0, 1.0309, -0.2438],
            ["H", 0.8928, -0.5154, -0.2438],
            ["H", -0.8928, -0.5154, -0.2438],
        ],
        "methods": ["cbs-qb3"],
        "basis_sets": [],
        "job_types": ["freq", "opt(ts,noeigentest)"],
        "charge": 0,
        "multiplicity": 1,
        "energy": -2613.119488,
        "degrees_of_freedom": 9,
        "flags": [],
        "missing": [],
    },
    "nmr_shield": {
        "id": 0,
        "title": "shielding reference calculation",
        "file_path": "nmr_shield.log",
        "elements": ["C", "H"],
        "atom_sites": [
            ["C", 0.0, 0.0, 0.0],
            ["H", 0.6294, 0.6294, 0.6294],
            ["H", -0.6294, -0.6294, 0.6294],
            ["H", -0.6294, 0.6294, -0.6294],
            ["H", 0.6294, -0.6294, -0.6294],
        ],
        "methods": ["hf"],
        "basis_sets": ["gen"],
        "job_types": ["nmr"],
        "charge": 0,
        "multiplicity": 1,
        "energy": -40.21431,
        "degrees_of_freedom": 9,
        "flags": ["shielding_tensors"],
        "missing": [],
    },
    "irc_path": {
        "id": 0,
        "title": "reaction path following",
        "file_path": "irc_path.log",
        "elements": ["F", "H"],
        "atom_sites": [
            ["F", 0.0, 0.0, 0.0],
            ["H", 0.0, 0.0, 0.917],
        ],
        "methods": ["b3lyp"],
        "basis_sets": ["6-31g(d)"],
        "job_types": ["irc"],
        "charge": 0,
        "multiplicity": 1,
        "energy": -100.4287346,
        "degrees_of_freedom": None,
        "flags": ["reaction_path", "variational_results"],
        "missing": ["degrees_of_freedom"],
    },
    "no_charge": {
        "id": 0,
        "title": "no_charge",
        "file_path": "no_charge.log",
        "elements": ["C"],
        "atom_sites": [
            ["C", 0.0, 0.0, 0.0],
        ],
        "methods": ["pm6"],
        "basis_sets": [],
        "job_types": ["sp"],
        "charge": None,
        "multiplicity": None,
        "energy": -11.0895327,
        "degrees_of_freedom": None,
        "flags": ["input_orientation"],
        "missing": ["charge", "degrees_of_freedom", "multiplicity"],
    },
    "heavy_elements": {
        "id": 0,
        "title": "actinide cluster gradient",
        "file_path": "heavy_elements.log",
        "elements": ["Au", "Fe", "U"],
        "atom_sites": [
            ["Fe", 0.0, 0.0, 1.25],
            ["Au", 1.4438, 0.0, -0.625],
            ["U", -1.4438, 0.0, -0.625],
        ],
        "methods": ["hf"],
        "basis_sets": ["lanl2dz"],
        "job_types": ["force"],
        "charge": 3,
        "multiplicity": 1,
        "energy": -25043.8812745,
        "degrees_of_freedom": 3,
        "flags": [],
        "missing": [],
    },
}

# hand-derived XML ingestion record of h2o_opt once it gets id 1
H2O_XML = """\
<doc>
  <field name="id">1</field>
  <field name="title">water optimization</field>
  <field name="file_path">h2o_opt.log</field>
  <field name="element">H</field>
  <field name="element">O</field>
  <field name="method">b3lyp</field>
  <field name="basis_set">6-31g(d)</field>
  <field name="job_type">opt</field>
  <field name="charge">0</field>
  <field name="multiplicity">1</field>
  <field name="energy">-76.4089533</field>
  <field name="degrees_of_freedom">3</field>
  <field name="flag">distance_matrix</field>
  <field name="flag">mulliken_charges</field>
  <field name="flag">optimized_parameters</field>
</doc>
"""


def main() -> None:
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    for name, record in EXPECTED.items():
        out = GOLDEN_DIR / f"{name}.json"
        out.write_text(
            json.dumps(record, sort_keys=True, indent=2) + "\n", encoding="utf-8"
        )
        print(f"wrote {out}")
    xml_out = GOLDEN_DIR / "h2o_opt.xml"
    xml_out.write_text(H2O_XML, encoding="utf-8")
    print(f"wrote {xml_out}")


if __name__ == "__main__":
    main()
