"""Translate likelihood ratios into words, using the default or a custom scale."""

from forensic_lr import VerbalBand, VerbalScale, verbal_equivalent

for lr in (3, 50, 500, 5_000, 2_000_000, "1/400"):
    print(f"{lr:>10}: {verbal_equivalent(lr).text}")

# A coarser house scale, with its own hypothesis wording.
house = VerbalScale(
    bands=(
        VerbalBand(1, 100, "limited"),
        VerbalBand(100, 10_000, "moderate"),
        VerbalBand(10_000, None, "strong"),
    ),
    support_hp="the prosecution proposition",
    support_hd="the defence proposition",
)
print(verbal_equivalent(5_000, house).text)
