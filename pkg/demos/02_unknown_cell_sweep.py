"""Nobody knows how many tabs fail to match, so sweep over guesses.

The likelihood ratio swings from 1 to 200,001, but the posterior odds never
move: they depend only on the matching row.
"""

from forensic_lr import EvidenceTable, invariance_check, render_report, sweep

base = EvidenceTable.from_rows((1, 5_000_000), (0, None))
result = sweep(base, guesses=(0, 10**6, 10**8, 10**10, 10**12))

print(render_report(result, "text").decode())

check = invariance_check(result)
print("invariant:", check.holds)

# A CSV copy for a spreadsheet.
print(render_report(result, "csv").decode())
