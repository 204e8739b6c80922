# %% [markdown]
# # Why torus knots have rho = 1
#
# For the (n, m) torus knot the companion pair (p, q) with mq - np = 1 spans
# an empty lattice parallelogram.  A unit square at a side corner cuts a
# triangle from it; the two sides through the corner form a wave crossing the
# major diagonal twice, which pins the augmented slope to 1/1.

# %%
import json
import tempfile
from pathlib import Path

from tunnelrho.lattice import TorusKnotInput, certify, rho_torus, trace

knot = TorusKnotInput(2, 3)
cert = certify(knot)
P = cert.parallelogram
print("companion:", cert.companion)
print("corners:", P.corners)
print("area:", P.area(), " interior points:", P.interior_lattice_points())

# %%
for w in cert.waves:
    print(f"corner {w.corner}: square at {w.square}")
    print("   triangle", [tuple(map(str, v)) for v in w.triangle])
    print("   base on", w.base_side, "->", w.base_meridian.value)
    print("   diagonal crossings", [tuple(map(str, v)) for v in w.diagonal_crossings])
print("rho:", rho_torus(knot))

# %% [markdown]
# The same chain as JSON, with every coordinate an exact fraction string.

# %%
print(json.dumps(trace(certify(TorusKnotInput(3, 5)))["certificates"][0]))

# %% [markdown]
# A drawing of the certificate.

# %%
from tunnelrho.svg import lattice_svg

out = Path(tempfile.gettempdir()) / "torus_2_3.svg"
out.write_text(lattice_svg(cert), encoding="utf-8")
print("wrote", out)
