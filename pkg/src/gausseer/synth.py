"""Synthetic log generator that knows its own ground truth.

Each case is a plausible GaussianLog-lite document paired with the
exact GaussianRecord the parser must produce for it, so round-trip
tests can compare full records and corpus-scale tests can build
arbitrarily large deterministic fixtures from a seeded Random.
"""

import random
from dataclasses import dataclass
from pathlib import Path

from .elements import SYMBOLS
from .gparse import GaussianRecord

_BARE_METHODS = (
    "am1", "pm3", "pm6", "mndo", "hf", "rhf", "rohf", "uhf",
    "mp2", "mp4(sdq)", "b3lyp", "blyp", "m062x", "cam-b3lyp",
    "g2", "g3mp2", "cis", "cis(d)", "qcisd(t)", "sac-ci",
    "ccsd", "ccsd(t)", "casscf", "bd", "ovgf", "gvb",
    "cbs-qb3", "cbs-apno", "amber", "uff",
)
# slashed methods may fall outside the taxonomy vocabulary
_SLASH_METHODS = _BARE_METHODS + ("b97d3", "wb97m-v", "pbe0", "tpss", "scs-mp2")
_BASES = (
    "6-31g(d)", "6-311+g(2d,p)", "sto-3g", "cc-pvdz", "cc-pvtz",
    "gen", "lanl2dz", "3-21g*", "6-31g", "aug-cc-pvqz", "def2svp",
)
_JOB_KEYWORDS = (
    "sp", "opt", "freq", "irc", "ircmax", "force", "oniom",
    "admp", "bomd", "scan", "pbc", "scrf", "nmr",
)
_JOB_OPTIONS = ("ts", "calcfc", "maxcyc=50", "tight", "noraman", "readfc")
# ignored by the route grammar: no "/", no vocabulary collisions
_NOISE = (
    "geom=connectivity", "guess=read", "scf=tight", "nosymm",
    "pop=full", "density=current", "gfinput", "maxdisk=8gb",
)
_TITLES = (
    "water optimization", "benzene single point", "TS search run",
    "formaldehyde frequencies", "cluster model step 12",
    "solvated proton transfer", "radical scan", "nmr reference job",
)
_ENERGY_LABELS = ("E(RHF)", "E(UHF)", "E(RB3LYP)", "E(RMP2)", "E(UB3LYP)")
_Z_POOL = tuple(range(1, 37)) + (47, 53, 79)

# flag plants other than input_orientation, which only ever comes from
# an actual Input orientation block
_FLAG_LINES = (
    ("distance_matrix", " Distance matrix (angstroms):"),
    ("mulliken_charges", " Mulliken atomic charges:"),
    ("optimized_parameters", "    -- Stationary point found."),
    ("frequencies", " Frequencies --   1615.1748              3650.8122"),
    ("thermochemistry", " - Thermochemistry -"),
    ("thermal_energy", " Sum of electronic and thermal Energies=           -76.383278"),
    ("shielding_tensors", " Magnetic shielding tensor (ppm):"),
    ("reaction_path", " IRC-IRC-IRC-IRC-IRC-IRC-IRC-IRC"),
    ("pcm", " Polarizable Continuum Model (PCM)"),
    ("variational_results", " Variational Results: ErrMax= 1.2D-08"),
)

_RULE = " " + "-" * 69


@dataclass(frozen=True)
class SynthCase:
    text: str
    record: GaussianRecord


def _orientation_block(kind: str, sites) -> list[str]:
    header = "Standard orientation:" if kind == "standard" else "Input orientation:"
    lines = [
        " " * 25 + header,
        _RULE,
        " Center     Atomic      Atomic             Coordinates (Angstroms)",
        " Number     Number       Type             X           Y           Z",
        _RULE,
    ]
    for n, (z, x, y, zc) in enumerate(sites, start=1):
        lines.append(f"{n:>7}{z:>11}{0:>12}    {x:>12.6f}{y:>12.6f}{zc:>12.6f}")
    lines.append(_RULE)
    return lines


def synth_case(rng: random.Random, path: str = "synthetic.log") -> SynthCase:
    """One random document and the record parsing it must yield."""
    methods: set[str] = set()
    basis_sets: set[str] = set()
    job_types: set[str] = set()

    tokens: list[str] = []
    if rng.random() < 0.75:
        m = rng.choice(_SLASH_METHODS)
        b = rng.choice(_BASES)
        slashed = f"{m}/{b}"
        methods.add(m)
        basis_sets.add(b)
        if rng.random() < 0.1:
            extra = rng.choice(_SLASH_METHODS)
            slashed += f"/{extra}"
            methods.add(extra)
        tokens.append(slashed)
    for _ in range(rng.randint(0, 2)):
        m = rng.choice(_BARE_METHODS)
        methods.add(m)
        tokens.append(m)
    for _ in range(rng.randint(0, 3)):
        kw = rng.choice(_JOB_KEYWORDS)
        if rng.random() < 0.25:
            opts = rng.sample(_JOB_OPTIONS, rng.randint(1, 2))
            kw = f"{kw}({','.join(opts)})"
        job_types.add(kw)
        tokens.append(kw)
    for _ in range(rng.randint(0, 2)):
        tokens.append(rng.choice(_NOISE))
    rng.shuffle(tokens)
    if not job_types:
        job_types.add("sp")

    prefix = rng.choice(("#", "#p", "#n", "#t", "# "))
    route_words = [prefix.strip()] if prefix != "# " else ["#"]
    route_words += tokens
    route_text = " ".join(route_words)
    if len(tokens) > 2 and rng.random() < 0.3:
        cut = rng.randint(1, len(tokens) - 1)
        route_lines = [
            " " + " ".join(route_words[: cut + 1]),
            " " + " ".join(route_words[cut + 1 :]),
        ]
    else:
        route_lines = [" " + route_text]

    lines: list[str] = [" Entering Gaussian System, Link 0", ""]
    lines += route_lines
    lines.append("")

    charge = multiplicity = None
    title = Path(path).stem
    if rng.random() < 0.85:
        charge = rng.randint(-2, 2)
        multiplicity = rng.randint(1, 4)
        if rng.random() < 0.7:
            title = rng.choice(_TITLES)
            lines.append(f" {title}")
            lines.append("")
        lines.append(f" Charge = {charge:2d} Multiplicity = {multiplicity}")
        lines.append("")

    flags: set[str] = set()
    blocks: list[tuple[str, list]] = []
    if rng.random() < 0.9:
        for _ in range(rng.randint(1, 2)):
            kind = rng.choice(("standard", "input"))
            sites = [
                (
                    rng.choice(_Z_POOL),
                    rng.uniform(-5, 5),
                    rng.uniform(-5, 5),
                    rng.uniform(-5, 5),
                )
                for _ in range(rng.randint(1, 8))
            ]
            blocks.append((kind, sites))
    for kind, sites in blocks:
        lines += _orientation_block(kind, sites)
        lines.append("")
        if kind == "input":
            flags.add("input_orientation")

    # the parser prefers the last standard block over any input block
    winners = [s for k, s in blocks if k == "standard"] or [s for _, s in blocks]
    expected_sites = tuple(
        (SYMBOLS[z], round(x, 6), round(y, 6), round(zc, 6))
        for z, x, y, zc in (winners[-1] if winners else [])
    )

    energy = None
    for _ in range(rng.randint(0, 3)):
        label = rng.choice(_ENERGY_LABELS)
        if rng.random() < 0.15:
            mantissa = rng.uniform(-0.99, -0.1)
            exp = rng.randint(1, 3)
            energy = float(f"{mantissa:.7f}E+{exp:02d}")
            lines.append(
                f" SCF Done:  {label} = {mantissa:.7f}D+{exp:02d}"
                f"     A.U. after   {rng.randint(5, 30)} cycles"
            )
        else:
            energy = round(rng.uniform(-500.0, -1.0), 7)
            lines.append(
                f" SCF Done:  {label} = {energy:14.7f}     A.U. after"
                f"   {rng.randint(5, 30)} cycles"
            )
        lines.append("")

    dof = None
    if rng.random() < 0.6:
        dof = rng.randint(1, 30)
        lines.append(f" Deg. of freedom{dof:6d}")
        lines.append("")

    for name, flag_line in _FLAG_LINES:
        if rng.random() < 0.25:
            flags.add(name)
            lines.append(flag_line)
            lines.append("")

    lines.append(" Normal termination of Gaussian 09.")
    text = "\n".join(lines) + "\n"

    missing = set()
    if charge is None:
        missing.add("charge")
    if multiplicity is None:
        missing.add("multiplicity")
    if energy is None:
        missing.add("energy")
    if dof is None:
        missing.add("degrees_of_freedom")
    if not expected_sites and "input_orientation" not in flags:
        missing.add("input_orientation")

    record = GaussianRecord(
        id=0,
        title=title,
        file_path=path,
        elements=frozenset(s for s, _, _, _ in expected_sites),
        atom_sites=expected_sites,
        methods=frozenset(methods),
        basis_sets=frozenset(basis_sets),
        job_types=frozenset(job_types),
        charge=charge,
        multiplicity=multiplicity,
        energy=energy,
        degrees_of_freedom=dof,
        flags=frozenset(flags),
        missing=frozenset(missing),
    )
    return SynthCase(text=text, record=record)


def synth_corpus(seed: int, size: int):
    """Deterministic list of cases for corpus-scale tests."""
    rng = random.Random(seed)
    return [synth_case(rng, path=f"synthetic_{i:04d}.log") for i in range(size)]
