"""The 118 IUPAC element symbols, keyed by atomic number and by name."""

from .errors import UnknownElement

# Index 0 unused so that SYMBOLS[z] is the symbol for atomic number z.
SYMBOLS: tuple[str, ...] = (
    "",
    "H", "He",
    "Li", "Be", "B", "C", "N", "O", "F", "Ne",
    "Na", "Mg", "Al", "Si", "P", "S", "Cl", "Ar",
    "K", "Ca", "Sc", "Ti", "V", "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn",
    "Ga", "Ge", "As", "Se", "Br", "Kr",
    "Rb", "Sr", "Y", "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd",
    "In", "Sn", "Sb", "Te", "I", "Xe",
    "Cs", "Ba", "La", "Ce", "Pr", "Nd", "Pm", "Sm", "Eu", "Gd", "Tb", "Dy",
    "Ho", "Er", "Tm", "Yb", "Lu", "Hf", "Ta", "W", "Re", "Os", "Ir", "Pt",
    "Au", "Hg", "Tl", "Pb", "Bi", "Po", "At", "Rn",
    "Fr", "Ra", "Ac", "Th", "Pa", "U", "Np", "Pu", "Am", "Cm", "Bk", "Cf",
    "Es", "Fm", "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh", "Hs", "Mt", "Ds",
    "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og",
)

MAX_ATOMIC_NUMBER = len(SYMBOLS) - 1

_BY_LOWER = {s.lower(): s for s in SYMBOLS[1:]}


def symbol_for_atomic_number(z: int) -> str | None:
    """Symbol for atomic number ``z``, or None outside 1..118."""
    if 1 <= z <= MAX_ATOMIC_NUMBER:
        return SYMBOLS[z]
    return None


def canonical_symbol(raw: str) -> str:
    """Map user input ("o", "FE", " Fe ") to the canonical symbol.

    Raises UnknownElement for anything that is not one of the 118 symbols.
    """
    sym = _BY_LOWER.get(raw.strip().lower())
    if sym is None:
        raise UnknownElement(raw.strip())
    return sym


def is_canonical(symbol: str) -> bool:
    return _BY_LOWER.get(symbol.lower()) == symbol
