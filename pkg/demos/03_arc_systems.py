# %% [markdown]
# # Arc systems and their augmented slope
#
# A splitting sphere leaves a weighted system of arcs on the 4-punctured
# sphere.  Its waves sit on one meridian and determine a slope; reduced mod 2
# that slope is rho.

# %%
from tunnelrho import parse_slope
from tunnelrho.arcsys import (
    Base,
    derive_augmented_slope,
    rho_of_system,
    system_to_json,
    twist_system,
    validate,
    waves_from_pair,
)

system = waves_from_pair(parse_slope("7/3"), Base.MINUS)
for cls, mult in system:
    print(mult, "x", cls)
print("valid:", validate(system).valid)
print("augmented slope:", derive_augmented_slope(system))
print("rho:", rho_of_system(system))

# %% [markdown]
# Full twists about the tunnel meridian move the augmented slope by 2 and
# leave rho alone.

# %%
for k in (-2, -1, 1, 2):
    twisted = twist_system(system, k)
    print(k, derive_augmented_slope(twisted).slope, rho_of_system(twisted))

# %% [markdown]
# Systems serialize to JSON, which the `waves` subcommand reads back.

# %%
print(system_to_json(system))

# %% [markdown]
# Waves on both meridians at once cannot come from one splitting sphere.

# %%
from tunnelrho.arcsys import ArcSystem

mixed = ArcSystem(list(system) + list(waves_from_pair(parse_slope("7/3"), Base.PLUS, with_arcs=False)))
print(validate(mixed).violations)
