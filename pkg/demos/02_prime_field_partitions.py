#!/usr/bin/env python3
"""Every prime-field circle splits into exactly two rationality classes.

Points whose parameter t has t^2 + 1 a nonzero square form one class
(together with the top point); the rest form the other.  Inside a class
all squared distances are rational, across classes none are, and both
classes have size (p-1)/2 or (p+1)/2 depending on p mod 4.

Over Q the same game produces infinitely many classes, one per coset of
the square subgroup in Q*: the class of a sampled point is named by the
squarefree part of t^2 + 1.
"""

from fractions import Fraction

from circlering import (
    AT_INFINITY,
    PrimeField,
    Rationals,
    circle,
    partition_prime_field_circle,
    partition_rational_circle_points,
    sweeps,
)

for p, center, r in ((7, (0, 0), 1), (13, (7, 11), 6)):
    field = PrimeField(p)
    c = circle(field, center, r)
    one, two = partition_prime_field_circle(c)
    print(f"C({center}, {r}) over F_{p}: classes of size {len(one)} and {len(two)}")
    for cls in (one, two):
        dists = sorted(d.value for d in cls.distance_values())
        print(f"  {{{', '.join(str(pt) for pt in cls)}}}  distances {dists}")
    print()

print("Sweeping the theorem over all odd primes up to 100 and all radii:")
for rec in sweeps.verify_prime_field_theorem(100):
    print(f"  p={rec['p']:3d}: {rec['radii']} radii, class size {rec['class_size']}"
          f" (expected {rec['expected']}), graph checked: {rec['graph_checked']},"
          f" match: {rec['match']}")
print()

print("Over Q, sampled parameters fall into cosets of Q*/squares,")
print("keyed by the squarefree part of t^2 + 1:")
cq = circle(Rationals(), (0, 0), 1)
sample = [Fraction(0), Fraction(3, 4), Fraction(4, 3), Fraction(1),
          Fraction(2), Fraction(7), AT_INFINITY]
for key, cls in partition_rational_circle_points(cq, sample).items():
    print(f"  coset {key}: {', '.join(str(pt) for pt in cls)}")
