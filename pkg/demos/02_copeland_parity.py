"""
Which Copeland choice-set sizes occur?
======================================

With an odd number of voters there are no majority ties, the Copeland scores
add up to m(m-1)/2, and that arithmetic rules out one size for every m.
Exhaustive enumeration confirms exactly which sizes survive.
"""

import time

from scc_range import constructions as C
from scc_range import oracle as O
from scc_range import rules as R

# %%
# Enumerate one profile per anonymity class (multisets of orderings).
for m in (3, 4, 5):
    t = time.perf_counter()
    sizes = O.achievable_sizes("copeland", m, 3)
    print(f"m={m} n=3: sizes {sorted(sizes)}  "
          f"({O.profile_count(m, 3, 'anonymous')} profiles, {time.perf_counter() - t:.2f}s)")

# %%
# With two voters ties are everywhere and every size is achievable.
for m in (3, 4):
    print(f"m={m} n=2: sizes {sorted(O.achievable_sizes('copeland', m, 2))}")

# %%
# The insertion construction reaches every remaining size directly.  For odd
# m it produces a profile where all alternatives share score (m-1)/2.
for m in (3, 5, 7, 9):
    u = C.copeland_part1(m)
    print(f"m={m}: scores {R.copeland_scores(u).tolist()}")

u = C.construct_copeland(6, 5, 4)
print("m=6 n=5 k=4 ->", sorted(R.copeland(u)), R.copeland_scores(u).tolist())
