"""
Witness profiles for requested choice sets
==========================================

Each builder produces a profile the matching rule maps to the requested set.
Builders are checked by evaluation, never trusted.
"""

from scc_range import codec_emit
from scc_range import constructions as C
from scc_range import rules as R

S = {1, 3, 4}

# %%
# Top cycle, odd number of voters: three voters carry a majority cycle on S,
# the rest come in cancelling pairs.
u = C.construct_top_cycle(6, 5, S)
print(codec_emit(u))
print("top cycle:", sorted(R.top_cycle(u)))

# %%
# Borda with an even electorate, Pareto, and plurality.
for name, build, rule in [
    ("borda", C.construct_borda, R.borda),
    ("pareto", C.construct_pareto, R.pareto),
    ("plurality", C.construct_plurality, R.plurality),
]:
    n = 4 if name != "plurality" else 7
    print(f"{name:>9} n={n}:", sorted(rule(build(6, n, S))))

# %%
# Plurality cannot produce every set.  The feasibility test is exact.
for n in range(2, 9):
    row = "".join("x" if C.plurality_feasible(5, n, k) else "." for k in range(1, 6))
    print(f"m=5 n={n}: sizes 1..5 {row}")

try:
    C.construct_plurality(3, 5, {0, 1, 2})
except C.Infeasible as exc:
    print("infeasible:", exc)
