#!/usr/bin/env python3
"""Regenerates src/core/faddeeva_reference.inc with mpmath at 60 digits.

w(z) = exp(-z^2) erfc(-i z).
"""
import pathlib

import mpmath as mp

mp.mp.dps = 60

POINTS = [
    (0.0, 0.0), (0.1, 0.0), (0.0, 1.0), (1.0, 1.0), (0.3, 0.2),
    (2.5, 0.5), (-1.5, 0.7), (5.0, 0.01), (0.0, 10.0), (11.0, 3.0),
    (-20.0, 1.0), (30.0, 30.0), (1e-3, 1e-3), (3.0, -0.5), (-2.0, -1.0),
    (0.5, -0.25), (7.0, 7.0), (100.0, 0.5), (-0.8, 4.0), (15.0, 0.0),
]


def main():
    rows = []
    for x, y in POINTS:
        z = mp.mpc(x, y)
        w = mp.exp(-z * z) * mp.erfc(-1j * z)
        rows.append("    {%s, %s, %s, %s}," % (
            repr(x), repr(y), mp.nstr(w.real, 20, min_fixed=-1, max_fixed=-1) if w.real else "0.0",
            mp.nstr(w.imag, 20, min_fixed=-1, max_fixed=-1) if w.imag else "0.0"))
    out = pathlib.Path(__file__).resolve().parents[2] / "src" / "core" / "faddeeva_reference.inc"
    out.write_text(
        "// Generated by tests/reference/gen_faddeeva_table.py; do not edit.\n"
        "// {Re z, Im z, Re w(z), Im w(z)}\n" + "\n".join(rows) + "\n")


if __name__ == "__main__":
    main()
