#!/usr/bin/env python3
"""Circles over finite fields: points, squared distances, rationality.

Walks through the 8-point circle of radius 1 over F_7: how its points
are found by a secant parametrization, how many there are for any field,
and which pairs sit at a "rational" squared distance (a square of the
prime subfield).
"""

from circlering import (
    AT_INFINITY,
    PrimeField,
    circle,
    circle_cardinality,
    enumerate_circle,
    is_rational_distance,
    point_from_parameter,
    squared_distance,
)

F7 = PrimeField(7)
c = circle(F7, (0, 0), 1)

print("The circle x^2 + y^2 = 1 over F_7")
print("=" * 50)
pts = enumerate_circle(c)
print(f"{len(pts)} points:", ", ".join(str(p) for p in pts))
print()

print("Each point comes from a parameter t (the slope of a secant")
print("through (0,-1)); t^2 = -1 never happens over F_7, and one extra")
print("point (0, 1) closes the sweep:")
for t in range(7):
    print(f"  t = {t} -> {point_from_parameter(c, F7(t))}")
print(f"  t = oo -> {point_from_parameter(c, AT_INFINITY)}")
print()

print("Counting formula: |F| points in characteristic 2, |F|-1 when -1")
print("is a square, |F|+1 otherwise.")
for p in (3, 5, 7, 13, 17):
    field = PrimeField(p)
    print(f"  F_{p}: {circle_cardinality(field)} points ({p} = {p % 4} mod 4)")
print()

print("Squared distances between circle points, and which are squares")
print("in F_7 (squares: 0, 1, 2, 4):")
a = pts[0]
for b in pts[1:4]:
    d = squared_distance(a, b)
    tag = "rational" if is_rational_distance(c, a, b) else "NOT rational"
    print(f"  D^2({a}, {b}) = {d}  [{tag}]")
