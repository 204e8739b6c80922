# %% [markdown]
# # Searching for other values of rho
#
# Starting from the torus-knot value 1/1, words in a configurable set of
# unimodular generators move the slope around.  T is the full twist and never
# changes rho; U and H are modelling choices.

# %%
from tunnelrho import Slope, parse_slope, reduce_mod2
from tunnelrho.twistgen import DEFAULT_GENERATORS, orbit, realize, word_trace

for r in range(5):
    print(r, len(orbit(Slope(1, 1), DEFAULT_GENERATORS, r)))

# %% [markdown]
# Shortest words reaching a few targets, each re-applied as a check.

# %%
for text in ("1/3", "1/2", "3/5", "5/7", "-3/7"):
    word = realize(parse_slope(text))
    path = word_trace(word, Slope(1, 1))
    print(f"{text:>5}: {str(word):<14} {' -> '.join(map(str, path))}  [{reduce_mod2(path[-1])}]")

# %% [markdown]
# Swapping in a different generator set needs no code changes.

# %%
from tunnelrho.twistgen import GeneratorSet

custom = GeneratorSet({"V": (1, 0, 4, 1)})
print(custom.names, realize(parse_slope("1/5"), custom))
