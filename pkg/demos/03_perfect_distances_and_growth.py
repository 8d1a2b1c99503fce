#!/usr/bin/env python3
"""Perfect distances and the growth of maximal circular point sets.

A rational squared distance is *perfect* when it appears as a side of a
triangle on the circle with all three sides rational.  Perfect distances
propagate: placing them repeatedly from a seed point grows the largest
rational point set through that seed.  Over the quadratic extension F_49
this shows e-maximal sets that are not c-maximal, and the closed-form
cardinality table is checked cell by cell.
"""

from circlering import (
    QuadraticExtension,
    PrimeField,
    check_acp,
    circle,
    cmaximal_cardinality,
    enumerate_emaximal_sets,
    grow_maximal_set,
    perfect_distances,
    point,
    sweeps,
)

F7 = PrimeField(7)
c7 = circle(F7, (0, 0), 1)
print("Perfect distances on the unit circle over F_7")
print("=" * 50)
for q, (p1, p2, p3) in perfect_distances(c7).items():
    print(f"  q = {q}: witness triangle {p1}, {p2}, {p3}")
print("  q = 1 satisfies neither: acp =", check_acp(c7, F7(1)))
print()

f5 = PrimeField(5)
c5 = circle(f5, (0, 0), 1)
print("Over F_5 the distance 4 passes the algebraic test yet no triangle")
print(f"exists: acp = {check_acp(c5, f5(4))}, perfect set = {perfect_distances(c5)}")
print()

F49 = QuadraticExtension(7, (1, 0))
c49 = circle(F49, (0, 0), 1)
seed = point(F49, (4, 1), (2, 5))  # the point (a+4, 5a+2)
print(f"F_49 = F_7[a], a^2 = -1; growing from the seed {seed}:")
grown = grow_maximal_set(c49, seed)
print(f"  c-maximal set of {len(grown)}: {', '.join(str(p) for p in grown)}")
print("  all e-maximal sets through the seed (clique search):")
for s in enumerate_emaximal_sets(c49, seed):
    print(f"    size {len(s)} [{s.status.value}]: {', '.join(str(p) for p in s)}")
print()

print("Closed-form cardinalities vs. grown sets (the full table):")
for rec in sweeps.verify_cmax_table():
    print(f"  {rec['field']:18s} r={rec['radius']:4s} expected {rec['expected']:>3s}"
          f" grown {rec['grown']} match {rec['match']}")
print()

f9 = QuadraticExtension(3, (1, 0))
ans = cmaximal_cardinality(f9, f9((1, 1)))
print(f"F_9 with r = 1+a (r^2 outside F_3): kind={ans.kind}, witness={ans.witness}")
