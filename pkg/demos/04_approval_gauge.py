"""
Approval voting with small ballots
==================================

Any set can win under approval voting.  The interesting question is how few
approvals per voter (the gauge) are needed.
"""

from scc_range import codec_emit
from scc_range import constructions as C
from scc_range import oracle as O
from scc_range import rules as R

# %%
# Ten voters, four winners: every member gets three approvals, and only two
# voters need to approve a second alternative.
u, b = C.construct_approval(6, 10, range(4))
print(codec_emit(u))
print("ballots:", b, "gauge:", C.gauge(b))
print("scores:", R.approval_scores(u, b).tolist())

# %%
# Gauge of the construction against the exhaustive minimum on tiny instances.
for m, n in [(3, 2), (4, 2), (4, 3)]:
    for k in range(1, m + 1):
        _, b = C.construct_approval(m, n, range(k))
        print(f"m={m} n={n} k={k}: construction {C.gauge(b)}, minimum {O.min_gauge(m, n, set(range(k)))}")
