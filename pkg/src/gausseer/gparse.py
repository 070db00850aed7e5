"""Parse Gaussian-style output files into metadata records.

The grammar is a deterministic subset of real Gaussian 03/09 console
output ("GaussianLog-lite"): a "#" route section, an optional title card,
a "Charge = X Multiplicity = Y" line, orientation blocks, "SCF Done:"
energy lines, a "Deg. of freedom" line, and one trigger line per
presence flag.  Anything else is ignored; attributes that cannot be
located are reported in ``missing`` instead of failing the parse.
"""

import json
import re
from dataclasses import dataclass
from pathlib import Path

from .elements import symbol_for_atomic_number
from .errors import EmptyInput, MalformedRoute, NoRouteSection
from .taxonomy import Taxonomy, default_taxonomy

# Presence flags and the case-sensitive substring that raises each.
FLAG_TRIGGERS: tuple[tuple[str, str], ...] = (
    ("Distance matrix (angstroms):", "distance_matrix"),
    ("Input orientation:", "input_orientation"),
    ("Mulliken atomic charges:", "mulliken_charges"),
    ("-- Stationary point found.", "optimized_parameters"),
    ("Frequencies --", "frequencies"),
    ("- Thermochemistry -", "thermochemistry"),
    ("Sum of electronic and thermal Energies=", "thermal_energy"),
    ("Magnetic shielding tensor (ppm):", "shielding_tensors"),
    ("IRC-IRC-IRC", "reaction_path"),
    ("Polarizable Continuum Model (PCM)", "pcm"),
    ("Variational Results", "variational_results"),
)

FLAG_NAMES = frozenset(name for _, name in FLAG_TRIGGERS)

_CHARGE_MULT = re.compile(r"Charge\s*=\s*(-?\d+)\s+Multiplicity\s*=\s*(\d+)")
# last SCF Done wins; tolerate Fortran D exponents
_SCF_DONE = re.compile(r"SCF Done:.*?=\s*(-?\d+\.\d+(?:[DdEe][+-]?\d+)?)")
_DEG_FREEDOM = re.compile(r"Deg\. of freedom\s+(\d+)")


@dataclass(frozen=True)
class GaussianRecord:
    """Extracted metadata of one Gaussian output file."""

    id: int
    title: str
    file_path: str
    elements: frozenset[str]
    atom_sites: tuple[tuple[str, float, float, float], ...]
    methods: frozenset[str]
    basis_sets: frozenset[str]
    job_types: frozenset[str]
    charge: int | None
    multiplicity: int | None
    energy: float | None
    degrees_of_freedom: int | None
    flags: frozenset[str]
    missing: frozenset[str]


def record_to_dict(record: GaussianRecord) -> dict:
    """JSON-ready dict with deterministic (sorted) multivalue order."""
    return {
        "id": record.id,
        "title": record.title,
        "file_path": record.file_path,
        "elements": sorted(record.elements),
        "atom_sites": [[s, x, y, z] for s, x, y, z in record.atom_sites],
        "methods": sorted(record.methods),
        "basis_sets": sorted(record.basis_sets),
        "job_types": sorted(record.job_types),
        "charge": record.charge,
        "multiplicity": record.multiplicity,
        "energy": record.energy,
        "degrees_of_freedom": record.degrees_of_freedom,
        "flags": sorted(record.flags),
        "missing": sorted(record.missing),
    }


def record_from_dict(d: dict) -> GaussianRecord:
    return GaussianRecord(
        id=d["id"],
        title=d["title"],
        file_path=d["file_path"],
        elements=frozenset(d["elements"]),
        atom_sites=tuple(
            (s, float(x), float(y), float(z)) for s, x, y, z in d["atom_sites"]
        ),
        methods=frozenset(d["methods"]),
        basis_sets=frozenset(d["basis_sets"]),
        job_types=frozenset(d["job_types"]),
        charge=d["charge"],
        multiplicity=d["multiplicity"],
        energy=d["energy"],
        degrees_of_freedom=d["degrees_of_freedom"],
        flags=frozenset(d["flags"]),
        missing=frozenset(d["missing"]),
    )


def canonical_json(record: GaussianRecord) -> str:
    return json.dumps(record_to_dict(record), sort_keys=True, indent=2) + "\n"


def _is_dashed(line: str) -> bool:
    s = line.strip()
    return len(s) >= 4 and set(s) == {"-"}


def _route_section(lines: list[str]) -> tuple[str, int]:
    """Concatenated route text and the index of its last line.

    The route starts at the first line beginning with "#" and continues
    until a blank line, a dashed separator, or the charge/multiplicity
    line (real logs wrap long routes).
    """
    start = None
    for i, line in enumerate(lines):
        if line.lstrip().startswith("#"):
            start = i
            break
    if start is None:
        raise NoRouteSection("no route line beginning with '#'")
    chunk = [lines[start].strip()]
    end = start
    for j in range(start + 1, len(lines)):
        line = lines[j]
        if not line.strip() or _is_dashed(line) or _CHARGE_MULT.search(line):
            break
        chunk.append(line.strip())
        end = j
    return " ".join(chunk), end


def parse_route(route: str, taxonomy: Taxonomy | None = None):
    """Split a route section into (methods, basis_sets, job_types).

    Tokens containing "/" split into method/basis, with any further "/"
    segments (ONIOM-style routes) appended to methods.  Bare tokens are
    classified against the taxonomy vocabularies; job keywords keep
    their parenthesised options as part of the token.  Unrecognized
    tokens are ignored.  An empty job set defaults to {"sp"}.
    """
    tax = taxonomy if taxonomy is not None else default_taxonomy()
    stripped = route.lstrip()
    if not stripped.startswith("#"):
        raise MalformedRoute("route section must start with '#'")
    body = stripped[1:].lower()
    # optional print-level letter right after "#", as in "#p" or "#t"
    if body[:1] in ("n", "p", "t") and (len(body) == 1 or body[1].isspace()):
        body = body[1:]
    job_vocab = tax.vocabulary("job_type")
    method_vocab = tax.vocabulary("method")
    methods: set[str] = set()
    basis_sets: set[str] = set()
    job_types: set[str] = set()
    for token in body.split():
        if "/" in token:
            parts = token.split("/")
            if parts[0]:
                methods.add(parts[0])
            if len(parts) > 1 and parts[1]:
                basis_sets.add(parts[1])
            for extra in parts[2:]:
                if extra:
                    methods.add(extra)
        elif token.split("(", 1)[0] in job_vocab:
            job_types.add(token)
        elif token in method_vocab:
            methods.add(token)
    if not job_types:
        job_types.add("sp")
    return frozenset(methods), frozenset(basis_sets), frozenset(job_types)


def extract_elements(text: str) -> tuple[tuple[str, float, float, float], ...]:
    """Atom sites from the last orientation block, in file order.

    Prefers the last "Standard orientation:" block, falling back to the
    last "Input orientation:" block.  Rows are (center number, atomic
    number, atomic type, x, y, z) between the second and third dashed
    separator after the header.  Absence yields an empty tuple.
    """
    lines = text.splitlines()
    header = None
    for marker in ("Standard orientation:", "Input orientation:"):
        for i, line in enumerate(lines):
            if marker in line:
                header = i
        if header is not None:
            break
    if header is None:
        return ()
    sites: list[tuple[str, float, float, float]] = []
    dashes = 0
    for line in lines[header + 1 :]:
        if _is_dashed(line):
            dashes += 1
            if dashes == 3:
                break
            continue
        if dashes < 2:
            continue
        parts = line.split()
        if len(parts) != 6:
            break
        try:
            int(parts[0]), int(parts[2])
            z = int(parts[1])
            x, y, zc = float(parts[3]), float(parts[4]), float(parts[5])
        except ValueError:
            break
        sym = symbol_for_atomic_number(z)
        if sym is None:
            continue
        sites.append((sym, x, y, zc))
    return tuple(sites)


def record_title(lines: list[str], route_end: int, path: str) -> str:
    """Title card if present, else the file's base name without extension.

    The title card is the first non-empty, non-separator line strictly
    between the route section and the charge/multiplicity line.
    """
    charge_at = None
    for i in range(route_end + 1, len(lines)):
        if _CHARGE_MULT.search(lines[i]):
            charge_at = i
            break
    if charge_at is not None:
        for i in range(route_end + 1, charge_at):
            candidate = lines[i].strip()
            if candidate and not _is_dashed(lines[i]):
                return candidate
    return Path(path).stem


def parse_document(
    text: str, path: str, taxonomy: Taxonomy | None = None
) -> GaussianRecord:
    """Parse one file's contents into a GaussianRecord with id 0.

    Locatable attributes are populated; the rest are named in
    ``missing``.  Raises EmptyInput for blank text and NoRouteSection
    when no "#" route line exists.
    """
    if not text.strip():
        raise EmptyInput("empty document")
    lines = text.splitlines()
    route, route_end = _route_section(lines)
    methods, basis_sets, job_types = parse_route(route, taxonomy)
    title = record_title(lines, route_end, path)

    atom_sites = extract_elements(text)
    elements = frozenset(site[0] for site in atom_sites)
    flags = frozenset(name for trigger, name in FLAG_TRIGGERS if trigger in text)

    missing: set[str] = set()
    charge = multiplicity = None
    m = _CHARGE_MULT.search(text)
    if m:
        charge = int(m.group(1))
        multiplicity = int(m.group(2))
        if multiplicity < 1:
            multiplicity = None
    if charge is None:
        missing.add("charge")
    if multiplicity is None:
        missing.add("multiplicity")

    energy = None
    scf_values = _SCF_DONE.findall(text)
    if scf_values:
        energy = float(scf_values[-1].replace("D", "E").replace("d", "e"))
    else:
        missing.add("energy")

    dof = None
    dof_match = _DEG_FREEDOM.search(text)
    if dof_match:
        dof = int(dof_match.group(1))
    else:
        missing.add("degrees_of_freedom")

    if not atom_sites and "input_orientation" not in flags:
        missing.add("input_orientation")

    return GaussianRecord(
        id=0,
        title=title,
        file_path=path,
        elements=elements,
        atom_sites=atom_sites,
        methods=methods,
        basis_sets=basis_sets,
        job_types=job_types,
        charge=charge,
        multiplicity=multiplicity,
        energy=energy,
        degrees_of_freedom=dof,
        flags=flags,
        missing=frozenset(missing),
    )
