# %% [markdown]
# Cross-checking the bijection against brute force over all weight-valid
# multisegments built from rows.

# %%
import time

from motzkin_multisegments import brute_force_M, brute_force_universe, verify_isomorphism
from motzkin_multisegments import brute_force_excessive, motzkin_number

# %%
print("n    |R_n|  |M_n|  excessive  motzkin")
for n in range(6):
    print(
        f"{n:<4} {len(brute_force_universe(n)):>6} {len(brute_force_M(n)):>6}"
        f" {len(brute_force_excessive(n)):>10} {motzkin_number(n):>8}"
    )

# %%
start = time.perf_counter()
for n in range(11):
    report = verify_isomorphism(n)
    print(report.summary(), sorted(k for k, ok in report.checks.items() if ok))
print(f"{time.perf_counter() - start:.1f}s")
