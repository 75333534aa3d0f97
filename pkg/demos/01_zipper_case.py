"""A zipper pull tab found at a scene matches the victim's jacket.

One tab in the population belongs to the jacket; five million other tabs
also match it. Guessing 500 million non-matching tabs lets us fill in the
whole table and read off every quantity exactly.
"""

from forensic_lr import EvidenceTable, analyze, render_report

table = EvidenceTable.from_rows((1, 5_000_000), (0, 500_000_000))
result = analyze(table)

print(render_report(result, "text").decode())

# The likelihood ratio looks impressive, yet the posterior odds stay tiny.
print("LR:", result.likelihood_ratio)
print("posterior odds:", result.posterior_odds)
print("P(Hd|E):", result.p_hd_given_e, "=", float(result.p_hd_given_e))
