#!/usr/bin/env python3
"""Render the sample figures to SVG.

Usage: python scripts/make_figures.py [outdir]

Writes the worked hook configurations and a Motzkin path to the given
directory (default ./figures).
"""

import pathlib
import sys

from hookcomb.motzkin import MotzkinPath
from hookcomb.perm import Permutation
from hookcomb.render import render_path, render_vhc
from hookcomb.vhc import validate

FIGURES = {
    "vhc_3215647.svg": lambda: render_vhc(
        validate(Permutation.from_text("3215647"), {4, 5, 7})
    ),
    "vhc_324156.svg": lambda: render_vhc(
        validate(Permutation.from_text("324156"), {3, 6})
    ),
    "path_UDEUEUDD.svg": lambda: render_path(MotzkinPath("UDEUEUDD")),
}


def main() -> int:
    outdir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
    outdir.mkdir(parents=True, exist_ok=True)
    for name, build in FIGURES.items():
        target = outdir / name
        target.write_text(build())
        print(f"wrote {target}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
