"""
Checking every range result mechanically
========================================

``verify_claims`` runs each builder over every admissible target and compares
every exhaustively computed range with the predicted one.
"""

from scc_range import oracle as O

report = O.verify_claims(m_max=5, n_max=6)
failing = [r for r in report.results if not r.passed]
print(report.to_text().splitlines()[-1])
for r in failing:
    print(r.line())

# %%
# A single report can be serialized; witnesses are stored in the profile
# text format, keyed by the bitmask of the chosen set.
print(O.range_report("top_cycle", 3, 3).to_json())
