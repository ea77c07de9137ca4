# %% [markdown]
# Multisegments under concatenation and suspension.

# %%
from motzkin_multisegments import (
    column_profiles,
    concat,
    factorize,
    is_in_M,
    parse_multisegment,
    suspend,
    weight,
)
from motzkin_multisegments.cli import render_multisegment

M = parse_multisegment("n=3: 1-1,1-2,1-3*2,2-3,3-3")
N = parse_multisegment("n=4: 1-1*2,1-3,1-4*2,2-3,2-4,4-4*2")

# %%
print(M, weight(M))
print(render_multisegment(M))
print(N, weight(N))
print(render_multisegment(N))

# %%
# The product is not commutative; each side gets a new special full column.
for a, b in [(M, N), (N, M)]:
    c = concat(a, b)
    print(c)
    print(render_multisegment(c))
    print("special full:", [p.column for p in column_profiles(c) if p.special_full])

# %%
# Suspension wraps N inside a primitive element two points longer.
s = suspend(N)
print(s)
print(render_multisegment(s))

# %%
# Outside M, factorization into primitives is not unique.
A = parse_multisegment("n=2: 1-1*3,2-2*3")
B = parse_multisegment("n=4: 1-1*5,2-3*3,2-4*2,4-4*3")
B2 = parse_multisegment("n=4: 1-1*3,1-3*2,2-3*3,4-4*5")
print(concat(A, B) == concat(B2, A), is_in_M(A))

# %%
# Inside M it is: split at special full columns. N itself is not in M.
print(is_in_M(M), is_in_M(N))
f = factorize(concat(M, suspend(M)))
print(f.split_columns, [str(x) for x in f.factors])
