"""
Minimal codes beyond Ashikhmin-Barg
===================================

The sufficient condition w_min/w_max > 1/2 is cheap but not necessary.
Sweep small case-2 codes and compare it against the exact covering test.
"""

import itertools

from simplicial_codes.analysis import (
    BinaryCode,
    ashikhmin_barg,
    exact_minimality,
    pairwise_minimality,
    table9_condition,
)
from simplicial_codes.construction import Code, DefiningSetSpec
from simplicial_codes.spectra import CODEWORD, charsum_distribution

m = 4
subsets = [s for r in range(1, m) for s in itertools.combinations(range(1, m + 1), r)]

print(" |L|  AB    exact  printed-row  corrected-row")
seen = set()
for L in subsets:
    spec = DefiningSetSpec.for_case(2, m, L, [1, 2], [2, 3])
    code = Code(spec)
    dist = charsum_distribution(code, CODEWORD)
    key = len(L)
    if key in seen:
        continue
    seen.add(key)
    ab = ashikhmin_barg(dist)
    exact = exact_minimality(code).minimal
    t9 = table9_condition(spec).satisfied
    t9e = table9_condition(spec, errata=True).satisfied
    print(f"{key:>4}  {ab!s:<6}{exact!s:<7}{t9!s:<13}{t9e}")

# the rank test and the literal covering scan agree on a small code
small = Code(DefiningSetSpec.for_case(1, 3, [1], [1, 2], [2]))
binary = BinaryCode.from_code(small)
print("\nrank test:", exact_minimality(small).minimal,
      " pairwise scan:", pairwise_minimality(small).minimal,
      " dimension:", binary.dimension)
