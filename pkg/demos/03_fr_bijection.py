# %% [markdown]
# From a Motzkin path to an excessive multisegment through its rank tuple,
# and back again by splitting and desuspending.

# %%
from motzkin_multisegments import (
    column_profiles,
    factorize,
    find_linked_triples,
    fr,
    fr_inverse,
    fr_rank_tuple,
    parse_path,
    phi,
)
from motzkin_multisegments.cli import render_multisegment

g = parse_path("heights:0,0,1,0,1,2,1,2,1,0")

# %%
# Upper-triangular rank matrix from the max formula on heights.
r = fr_rank_tuple(g)
print(r.matrix)

# %%
m = fr(g)
print(m)
print(render_multisegment(m))
print("phi agrees:", phi(g) == m)
print("linked triples:", find_linked_triples(m))

# %%
# Column 6 is full but its crossings do not form a chain, so no split there.
for p in column_profiles(m):
    print(p)
print(factorize(m).split_columns)

# %%
print(fr_inverse(m))
