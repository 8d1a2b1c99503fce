#!/usr/bin/env python3
"""Diffie-Hellman-style key agreement on the circle rotation group.

Both parties exponentiate a public base point with private exponents;
the eavesdropper sees only the base and the two exchanged points.  Runs
once over a prime field (with a brute-force discrete-log attempt) and
once over Q with exact fractions.  Pedagogical only: the group embeds in
F_{p^2}^*, so this is NOT a secure cryptosystem.
"""

from fractions import Fraction

from circlering import (
    PrimeField,
    ProtocolParams,
    Rationals,
    circle,
    decode,
    encode,
    point_from_parameter,
    rotation_element,
    RotationElement,
    simulate_exchange,
)

p = 1000003
field = PrimeField(p)
c = circle(field, (0, 0), 1)
base = RotationElement(c, point_from_parameter(c, field(2)))
params = ProtocolParams(base)
print(f"Key exchange over F_{p}, base point {base} of order {params.order}")
print("=" * 60)
t = simulate_exchange(params, seed_a=2024, seed_b=8, dlog_cap=50_000)
print(f"  A sends {t.sent_a}")
print(f"  B sends {t.sent_b}")
print(f"  shared secrets agree: {t.equal} -> {t.shared_a}")
print(f"  brute-force recovery of A's exponent took "
      f"{t.dlog_iterations if t.dlog_iterations else '> 50000'} multiplications")
print()

wire = encode(t.sent_a)
print(f"A's message on the wire ({len(wire)} bytes): {wire.hex()}")
print(f"decodes back to {decode(wire)}")
print()

q = Rationals()
cq = circle(q, (0, 0), 2)
base_q = rotation_element(cq, Fraction(8, 5), Fraction(6, 5))
params_q = ProtocolParams(base_q, exponent_cap=32)
tq = simulate_exchange(params_q, seed_a=5, seed_b=6)
print(f"Over Q with base {base_q} (acyclic, exponents < 32):")
print(f"  A sends {tq.sent_a}")
print(f"  shared secrets agree exactly: {tq.equal}")
print(f"  shared x-coordinate has {len(str(tq.shared_a.point.x))} digits")
