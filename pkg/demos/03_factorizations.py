#!/usr/bin/env python3
"""Minimal transposition factorizations of full cycles and their areas.

Every full cycle on {0..n} factors into n transpositions in exactly
(n+1)^(n-1) ways; reading off the smaller and larger entries of the
factors gives a parking function and a major sequence, and their areas
refine the count into the same polynomial that counts tree inversions.

Run:  python3 demos/03_factorizations.py
"""

from parkfact import (
    FullCycle,
    area_lower,
    area_upper,
    enumerate_factorizations,
    factorization_enumerator,
    inversion_enumerator,
    lower,
    parse_factorization,
    restricted_enumerators,
    total_difference,
    upper,
)
from parkfact.polynomials import qt_factorial_product

print("the three factorizations of (0 1 2), with lower/upper sequences:")
for f in enumerate_factorizations(FullCycle.canonical(2)):
    print(f"  {f}   lower={lower(f)}  upper={upper(f)}  "
          f"areas=({area_lower(f)}, {area_upper(f)})")
print()

for n in range(5):
    f_poly = factorization_enumerator(FullCycle.canonical(n))
    assert f_poly == inversion_enumerator(n)
print("F_n(q,t) = I_n(q,t) verified for n <= 4")
print()

f9 = parse_factorization("(1 2)(3 5)(1 3)(7 8)(0 6)(7 9)(0 7)(1 6)(4 5)", 9)
print(f"a length-9 example: {f9}")
print(f"  lower sequence  = {lower(f9)}")
print(f"  upper sequence  = {upper(f9)}")
print(f"  lower/upper area = {area_lower(f9)}, {area_upper(f9)}")
print(f"  total difference = {total_difference(f9)}")
print()

print("restricted families inside F_4:")
r = restricted_enumerators(4)
print(f"  simple (contain (0 4)):    {r.simple}")
print(f"  increasing lower sequence: {r.increasing}")
print(f"  decreasing lower sequence: {r.decreasing}")
print(f"  maximum total difference:  {r.max_diff}")
print(f"  permutation lower seq.:    {r.perm_lower}")
assert r.max_diff == qt_factorial_product(4)
print("  (the max-difference family carries the permutation-inversion "
      "distribution)")
