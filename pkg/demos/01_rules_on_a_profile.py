"""
Evaluating the eight correspondences on one profile
===================================================

Profiles are tuples of orderings, top rank first.  Every rule returns the
full set of tied winners.
"""

from scc_range import Profile, codec_emit, majority_matrix
from scc_range import rules as R

# %%
# The classic three-voter cycle: 0 beats 1, 1 beats 2, 2 beats 0.
u = Profile(((0, 1, 2), (1, 2, 0), (2, 0, 1)))
print(codec_emit(u))
print("margins:\n", majority_matrix(u).margin)

for rule in ("tops", "pareto", "maximin", "borda", "plurality", "top_cycle", "copeland"):
    print(f"{rule:>10}: {sorted(R.evaluate(rule, u))}")

# %%
# Approval needs one approval count per voter.  With everyone approving only
# their top choice it coincides with plurality.
print("approval b=(1,1,1):", sorted(R.approval(u, (1, 1, 1))))
print("approval b=(2,1,1):", sorted(R.approval(u, (2, 1, 1))), R.approval_scores(u, (2, 1, 1)))

# %%
# Break the cycle by adding two voters who agree on 0 > 2 > 1.
v = Profile(u.orderings + ((0, 2, 1),) * 2)
print("copeland scores:", R.copeland_scores(v), "-> top cycle", sorted(R.top_cycle(v)))
