#!/usr/bin/env python3
"""Labelled trees, their inversion statistics, and the enumerator family.

The bivariate inversion enumerator counts trees by (inversions,
coinversions); computed once by brute force over all (n+1)^(n-1) trees
and once by the convolution recursion, the two must agree term for term.

Run:  python3 demos/02_trees_and_enumerators.py
"""

from parkfact import (
    enumerate_trees,
    depth_enumerator,
    format_tree,
    inversion_enumerator,
    tree_count,
    tree_recursion_I,
    tree_stats,
)

print("all trees on {0,1,2,3} rooted at 0, with (inv, coinv, depth):")
for tree in enumerate_trees(3):
    print(f"  {format_tree(tree):<18} {tree_stats(tree)}")
print(f"total: {tree_count(3)} trees")
print()

series = tree_recursion_I(6)
for n in range(5):
    brute = inversion_enumerator(n)
    assert brute == series[n], "recursion and brute force disagree!"
    print(f"I_{n}(q,t) = {brute}")
print()

print("the diagonal t = q counts trees by total depth:")
for n in range(5):
    poly = depth_enumerator(n)
    assert poly == inversion_enumerator(n).diagonal()
    print(f"D_{n}(q) = {poly}")
print()

print("dividing out the forced t^n factor leaves a q,t-symmetric polynomial:")
reduced = inversion_enumerator(4).divide_t(4)
print(f"t^-4 I_4 = {reduced}")
print(f"symmetric under q <-> t: {reduced == reduced.swap_qt()}")
