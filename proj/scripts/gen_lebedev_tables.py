#!/usr/bin/env python3
"""Regenerates include/emgest/lebedev_data.hpp from scipy's Lebedev rules.

The embedded grids are the classical Lebedev-Laikov rules with octahedral
symmetry, taken from scipy.integrate.lebedev_rule (scipy >= 1.15).  Each rule
integrates all spherical harmonics up to its algebraic degree; weights are
normalized so they sum to 4*pi.  See docs/quadrature.md for the verification
procedure.
"""

import numpy as np
from scipy.integrate import lebedev_rule

# (algebraic degree, point count)
RULES = [(3, 6), (7, 26), (17, 110), (41, 590)]

HEADER = """\
#pragma once

// Lebedev quadrature node/weight tables for the unit sphere.
// Generated by scripts/gen_lebedev_tables.py (scipy.integrate.lebedev_rule);
// do not edit by hand.  Weights sum to 4*pi.  Each rule is exact for all
// spherical harmonics up to its algebraic degree.

namespace emgest::detail {

struct LebedevNode {
    double x, y, z, w;
};
"""

FOOTER = """\
}  // namespace emgest::detail
"""


def emit(out):
    out.write(HEADER)
    for degree, npts in RULES:
        x, w = lebedev_rule(degree)
        assert x.shape == (3, npts) and w.shape == (npts,)
        out.write(f"\ninline constexpr LebedevNode kLebedev{npts}[{npts}] = {{\n")
        for i in range(npts):
            out.write(
                "    {%.17g, %.17g, %.17g, %.17g},\n"
                % (x[0, i], x[1, i], x[2, i], w[i])
            )
        out.write("};\n")
    out.write("\n")
    out.write(FOOTER)


if __name__ == "__main__":
    import sys

    path = sys.argv[1] if len(sys.argv) > 1 else "include/emgest/lebedev_data.hpp"
    with open(path, "w") as f:
        emit(f)
    print(f"wrote {path}")
