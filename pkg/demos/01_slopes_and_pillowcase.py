# %% [markdown]
# # Slopes on the pillowcase
#
# A complete pair of arcs on the 4-punctured sphere is labelled by a slope
# p/q.  Two pairs can be made disjoint exactly when their distance is at most
# one; otherwise they meet in 2*delta - 2 points.  Here we check that count
# against straight-line realizations on the flat pillowcase.

# %%
from tunnelrho import delta, min_intersections, parse_slope
from tunnelrho.cli import oracle_check
from tunnelrho.pillowcase import count_crossings, crossing_points, realize_pair, reference_crossings

a, b = parse_slope("3/5"), parse_slope("1/3")
print("delta:", delta(a, b))
print("formula:", min_intersections(a, b))
print("pillowcase:", count_crossings(realize_pair(a), realize_pair(b)))

# %% [markdown]
# The crossing points are exact rationals in the unit square, one
# representative per orbit of the -id involution.

# %%
for pt in crossing_points(realize_pair(a), realize_pair(b)):
    print(f"  ({pt.x}, {pt.y})")

# %% [markdown]
# The slope-1/3 pair meets the separating reference circle once and the
# tunnel meridian three times per arc, and joins a minus puncture to a plus
# puncture on each arc because the numerator is odd.

# %%
pair = realize_pair(parse_slope("1/3"))
print(reference_crossings(pair))
print([(str(x), str(y)) for x, y in pair.endpoints()])

# %% [markdown]
# A sweep over a small grid: no disagreement between formula and geometry.

# %%
report = oracle_check(6, 6)
print(f"{report['pairs']} pairs, {len(report['mismatches'])} mismatches, {report['elapsed_ms']} ms")
