"""Slope calculus on the 4-punctured sphere and the unknotting-tunnel invariant rho.

Modules
-------
slope       exact slopes p/q, distance, intersection counts, Q/2Z reduction
pillowcase  straight-line realization of arc pairs and exact crossing counts
arcsys      arc systems, waves and the augmented slope they define
lattice     lattice certificate computing rho = 1 for torus knots
twistgen    unimodular actions on slopes and shortest-word search
svg         SVG drawings of pillowcase pairs and lattice certificates
cli         the ``tunnelrho`` command
"""

from .errors import *  # noqa: F401,F403
from .slope import (  # noqa: F401
    INFINITY,
    ONE,
    ZERO,
    Parity,
    Slope,
    SlopeMod2,
    add_full_twists,
    delta,
    min_intersections,
    parity,
    parse_slope,
    reduce_mod2,
)

__version__ = "0.1.0"
