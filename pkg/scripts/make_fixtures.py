#!/usr/bin/env python3
"""Regenerate the checked-in ingest corpus under tests/fixtures/corpus.

22 generator cases from a fixed seed, three hand-written oxygen/hydrogen
systems (so exact-mode element queries have guaranteed hits), and one
file with no route section that every ingest run must skip.
"""

import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from gausseer.synth import synth_case  # noqa: E402

CORPUS_DIR = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "corpus"
SEED = 424242

WATER_A = """\
 Entering Gaussian System, Link 0

 # b3lyp/6-31g(d) opt

 water molecule geometry optimization

 Charge =  0 Multiplicity = 1

                         Standard orientation:
 ---------------------------------------------------------------------
 Center     Atomic      Atomic             Coordinates (Angstroms)
 Number     Number       Type             X           Y           Z
 ---------------------------------------------------------------------
      1          8           0        0.000000    0.000000    0.119262
      2          1           0        0.000000    0.758602   -0.477037
      3          1           0        0.000000   -0.758602   -0.477037
 ---------------------------------------------------------------------
 Deg. of freedom     3

 SCF Done:  E(RB3LYP) =  -76.4089533     A.U. after   11 cycles

    -- Stationary point found.

 Normal termination of Gaussian 09.
"""

WATER_B = """\
 Entering Gaussian System, Link 0

 # mp2/cc-pvdz freq

 hydrogen peroxide frequencies

 Charge =  0 Multiplicity = 1

                         Standard orientation:
 ---------------------------------------------------------------------
 Center     Atomic      Atomic             Coordinates (Angstroms)
 Number     Number       Type             X           Y           Z
 ---------------------------------------------------------------------
      1          8           0        0.000000    0.734000   -0.052800
      2          8           0        0.000000   -0.734000   -0.052800
      3          1           0        0.839600    0.880000    0.422300
      4          1           0       -0.839600   -0.880000    0.422300
 ---------------------------------------------------------------------

 SCF Done:  E(RHF) =  -151.3651226     A.U. after   13 cycles

 Frequencies --    371.2210              1010.8055              1314.3281

 Normal termination of Gaussian 09.
"""

HYDROXYL = """\
 Entering Gaussian System, Link 0

 #p uhf/6-31g sp

 hydroxyl radical

 Charge =  0 Multiplicity = 2

                          Input orientation:
 ---------------------------------------------------------------------
 Center     Atomic      Atomic             Coordinates (Angstroms)
 Number     Number       Type             X           Y           Z
 ---------------------------------------------------------------------
      1          8           0        0.000000    0.000000    0.000000
      2          1           0        0.000000    0.000000    0.969600
 ---------------------------------------------------------------------

 SCF Done:  E(UHF) =  -75.3818463     A.U. after   12 cycles

 Normal termination of Gaussian 09.
"""

BROKEN = """\
 Entering Gaussian System, Link 0
 Initial command was lost; this fragment has no route section at all.
 Leftover table data:
      1          8           0        0.000000    0.000000    0.119262
"""


def main() -> None:
    CORPUS_DIR.mkdir(parents=True, exist_ok=True)
    for stale in CORPUS_DIR.glob("*.log"):
        stale.unlink()
    rng = random.Random(SEED)
    for i in range(22):
        name = f"gen_{i:02d}.log"
        case = synth_case(rng, path=name)
        (CORPUS_DIR / name).write_text(case.text, encoding="utf-8")
    (CORPUS_DIR / "water_a.log").write_text(WATER_A, encoding="utf-8")
    (CORPUS_DIR / "water_b.log").write_text(WATER_B, encoding="utf-8")
    (CORPUS_DIR / "hydroxyl.log").write_text(HYDROXYL, encoding="utf-8")
    (CORPUS_DIR / "broken.log").write_text(BROKEN, encoding="utf-8")
    print(f"wrote {len(list(CORPUS_DIR.glob('*.log')))} files to {CORPUS_DIR}")


if __name__ == "__main__":
    main()
