#!/usr/bin/env python3
"""Arch diagrams: the planar picture of a factorization.

Drawing each factor as a labelled arc over the visit word of sigma turns
membership in F_sigma into geometry: the drawing must be a noncrossing
tree whose arc labels increase counter-clockwise around every vertex.

Run:  python3 demos/04_arch_diagrams.py
"""

from parkfact import (
    FullCycle,
    arch_to_factorization,
    caps,
    decompose_simple,
    is_valid_arch,
    parse_factorization,
    parse_full_cycle,
    recompose,
    rotator,
    sigma_diagram,
)
from parkfact.render import render_arch_ascii

sigma = parse_full_cycle("0 2 4 5 1 3")
f = parse_factorization("(1 4)(1 5)(3 4)(0 2)(0 4)", 5)
diagram = sigma_diagram(f, sigma)

print(f"f = {f},  drawn over sigma = {sigma}:")
print()
print(render_arch_ascii(diagram, sigma))
print(f"valid diagram: {is_valid_arch(diagram)}")
print(f"rotator around vertex 4 (position 2): {rotator(diagram, 2)}")
print(f"recovered factorization: {arch_to_factorization(diagram, sigma)}")
print()

# a crossing kills validity even with the same arcs otherwise
bad = parse_factorization("(0 4)(2 1)(3 4)(0 2)(1 5)", 5)
print(f"product of {bad} is also a full cycle: "
      f"{bad.product().num_cycles() == 1}")
print(f"but its diagram over sigma is valid: "
      f"{is_valid_arch(sigma_diagram(bad, sigma))}")
print()

f9 = parse_factorization("(1 2)(3 5)(1 3)(7 8)(0 6)(7 9)(0 7)(1 6)(4 5)", 9)
d9 = sigma_diagram(f9, FullCycle.canonical(9))
print("a longer diagram and its caps (arcs nested under nothing):")
print(render_arch_ascii(d9))
print(f"caps: {caps(d9)}")
parts = decompose_simple(d9)
print("splitting under the caps gives simple diagrams with label sets:")
for part, index_set in parts:
    print(f"  {len(part.arcs)} arcs over labels {index_set}")
assert recompose(parts) == d9
print("recompose(decompose(A)) = A holds")
