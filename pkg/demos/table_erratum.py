"""
Locating a bad row in the case-8 table
======================================

Brute force, the character-sum formula and the closed-form table are
three independent routes to the same distribution.  For case 8 the
printed table disagrees; evaluating row by row shows which one.
"""

from simplicial_codes.construction import Code, DefiningSetSpec
from simplicial_codes.spectra import (
    brute_force_distribution,
    charsum_distribution,
    compare_distributions,
    table_distribution,
    table_rows,
)

# m=3, L={2,3}, M={1}, N={3}, all three complemented
spec = DefiningSetSpec.for_case(8, 3, [2, 3], [1], [3])
code = Code(spec)

brute = brute_force_distribution(code)
print("brute   ", brute.as_dict())
print("charsum ", charsum_distribution(code).as_dict())
print("printed ", table_distribution(spec).as_dict())
print("fixed   ", table_distribution(spec, errata=True).as_dict())

for d in compare_distributions(brute, table_distribution(spec), spec, "table-vs-brute"):
    print("\ndiscrepancy:", d.detail)

print("\nrow  printed (weight, freq)      corrected")
for (i, w, f), (_, w2, f2) in zip(table_rows(spec), table_rows(spec, errata=True)):
    flag = "  <-" if (w, f) != (w2, f2) else ""
    print(f"{i + 1:>3}  {str((int(w), int(f))):<26}{(int(w2), int(f2))}{flag}")
