/**
 * Periodic table data for the element picker.
 *
 * Standard 18-column layout; lanthanides (57-71) and actinides
 * (89-103) sit in two detached rows below the main grid, so the
 * picker renders on a 9-row CSS grid.
 */

export const SYMBOLS: readonly string[] = [
  "H", "He", "Li", "Be", "B", "C", "N", "O", "F", "Ne",
  "Na", "Mg", "Al", "Si", "P", "S", "Cl", "Ar", "K", "Ca",
  "Sc", "Ti", "V", "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn",
  "Ga", "Ge", "As", "Se", "Br", "Kr", "Rb", "Sr", "Y", "Zr",
  "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd", "In", "Sn",
  "Sb", "Te", "I", "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd",
  "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb",
  "Lu", "Hf", "Ta", "W", "Re", "Os", "Ir", "Pt", "Au", "Hg",
  "Tl", "Pb", "Bi", "Po", "At", "Rn", "Fr", "Ra", "Ac", "Th",
  "Pa", "U", "Np", "Pu", "Am", "Cm", "Bk", "Cf", "Es", "Fm",
  "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh", "Hs", "Mt", "Ds",
  "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og",
];

export interface ElementCell {
  z: number;
  symbol: string;
  row: number; // 1..7 main grid, 8 lanthanides, 9 actinides
  col: number; // 1..18
}

function position(z: number): [number, number] {
  if (z === 1) return [1, 1];
  if (z === 2) return [1, 18];
  if (z <= 10) return [2, z <= 4 ? z - 2 : z + 8];
  if (z <= 18) return [3, z <= 12 ? z - 10 : z];
  if (z <= 36) return [4, z - 18];
  if (z <= 54) return [5, z - 36];
  if (z <= 56) return [6, z - 54];
  if (z <= 71) return [8, z - 57 + 3]; // detached lanthanide row
  if (z <= 86) return [6, z - 68];
  if (z <= 88) return [7, z - 86];
  if (z <= 103) return [9, z - 89 + 3]; // detached actinide row
  return [7, z - 100];
}

export const ELEMENT_CELLS: readonly ElementCell[] = SYMBOLS.map((symbol, i) => {
  const z = i + 1;
  const [row, col] = position(z);
  return { z, symbol, row, col };
});

const BY_LOWER = new Map(SYMBOLS.map((s) => [s.toLowerCase(), s]));

/** "fe" -> "Fe"; unknown text -> null. */
export function canonicalSymbol(raw: string): string | null {
  return BY_LOWER.get(raw.trim().toLowerCase()) ?? null;
}
