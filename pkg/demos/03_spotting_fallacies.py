"""Two classic mistakes in reading a likelihood ratio, caught mechanically."""

from fractions import Fraction

from forensic_lr import (
    Claim,
    EvidenceTable,
    Quantity,
    check_claim,
    corrected_statement,
)

table = EvidenceTable(1, 5_000_000, 0, 500_000_000)

claims = [
    # Quoting the LR as if it were the posterior odds.
    Claim(Quantity.POSTERIOR_ODDS, 101, reported_lr=101, asserter="prosecution"),
    # Quoting P(E|Hd) as though it were P(Hd|E).
    Claim(Quantity.P_HD_GIVEN_E, Fraction(1, 101), derived_from=Quantity.P_E_GIVEN_HD,
          asserter="prosecution"),
    # A correct statement passes untouched.
    Claim(Quantity.LIKELIHOOD_RATIO, 101, asserter="expert"),
]

for claim in claims:
    finding = check_claim(claim, table)
    print(f"{claim.quantity.value} = {claim.value}: {finding.pattern.value}")
    if finding.is_fallacy:
        print("   ", corrected_statement(finding))
