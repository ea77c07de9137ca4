# %% [markdown]
# Motzkin paths: counting, enumeration order, and unique factorization.

# %%
from motzkin_multisegments import (
    concat_paths,
    enumerate_paths,
    factorize_path,
    motzkin_number,
    parse_path,
    suspend_path,
)
from motzkin_multisegments.cli import render_path

# %%
# Counts from the recurrence, next to a brute enumeration.
for n in range(11):
    print(n, motzkin_number(n), len(enumerate_paths(n)))

# %%
# Enumeration is lexicographic on the height sequence.
for g in enumerate_paths(4):
    print(g, g.steps)

# %%
# Every path splits at its interior zeros into primitive pieces.
g = parse_path("heights:0,0,1,0,1,2,1,2,1,0")
print(render_path(g))
for factor in factorize_path(g):
    print(" ", factor)

# %%
# The long primitives are exactly the suspensions.
inner = concat_paths(parse_path("0,1,0"), parse_path("0,1,0"))
print(suspend_path(inner))
print(render_path(suspend_path(inner)))
