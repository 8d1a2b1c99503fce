"""Diffie-Hellman-style key agreement on the circle rotation group.

Two parties agree on a public base point Q of C((0,0), r), pick private
exponents n and m, exchange Q^n and Q^m, and both arrive at Q^(nm).
An in-process simulation produces the eavesdropper's transcript
(Q, Q^n, Q^m plus both derived secrets for checking) and, on request, a
brute-force discrete-log iteration count as a toy security indicator.

This is a pedagogical protocol simulator, NOT a secure cryptosystem:
the rotation group over F_p embeds into the multiplicative group of
F_{p^2}, so subexponential discrete-log attacks apply, and the hardness
of this discrete-log variant is an unproven conjecture.  Nothing here
is constant-time.

The wire format is a canonical, versioned, length-prefixed binary
layout (magic "CRC1"); decode(encode(x)) reproduces x bit-exactly.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CircleMismatch,
    DegenerateBasePoint,
    MalformedMessage,
    VersionMismatch,
    WrongFieldKind,
)
from .fields import FieldElement, PrimeField, QuadraticExtension, Rationals
from .plane import Circle, PlanePoint
from .rotation import (
    RotationElement,
    classify_cyclicity,
    element_order,
    rot_mul,
    rot_pow,
)


class ProtocolParams:
    """Public parameters: the circle, a validated base point, exponent cap.

    Over F_p the base point's order is computed and must exceed 4; over
    Q the base must be acyclic (both coordinates nonzero), which rules
    out the four cyclic axis points.  `exponent_cap` bounds the private
    exponents drawn over Q, where coordinate digit counts grow linearly
    with the exponent.
    """

    def __init__(self, base: RotationElement, exponent_cap: int = 2**64):
        field = base.field
        if not isinstance(field, (PrimeField, Rationals)):
            raise WrongFieldKind("key exchange runs over prime fields or Q")
        if field.is_finite():
            order = element_order(base)
            if order <= 4:
                raise DegenerateBasePoint(f"base point order {order} <= 4")
            self.order = order
        else:
            report = classify_cyclicity(base, bound=0)
            if report.verdict != "acyclic":
                raise DegenerateBasePoint(
                    f"cyclic base point of order {report.order} over Q"
                )
            self.order = None
        self.base = base
        self.exponent_cap = exponent_cap

    @property
    def circle(self) -> Circle:
        return self.base.circle

    @property
    def field(self):
        return self.base.field


@dataclass
class PartyState:
    """One participant: role label, private exponent, and what they see."""

    role: str
    exponent: int
    sent: RotationElement
    shared: RotationElement | None = None


def keygen(params: ProtocolParams, rng_seed: int, role: str = "A") -> PartyState:
    """Draw a private exponent from a seeded RNG and compute the share.

    Deterministic per seed.  Over F_p the exponent is uniform on
    [2, order(Q) - 1]; over Q it is uniform on [2, exponent_cap).
    """
    rng = random.Random(rng_seed)
    upper = params.order if params.order is not None else params.exponent_cap
    exponent = rng.randrange(2, upper)
    return PartyState(role=role, exponent=exponent, sent=rot_pow(params.base, exponent))


def derive_shared(me: PartyState, peer_sent: RotationElement) -> RotationElement:
    """Raise the peer's share to the private exponent; record and return it."""
    if peer_sent.circle != me.sent.circle:
        raise CircleMismatch("peer share lives on a different circle")
    me.shared = rot_pow(peer_sent, me.exponent)
    return me.shared


def brute_force_dlog(base: RotationElement, target: RotationElement, cap: int) -> int | None:
    """Iterations of repeated multiplication needed to hit `target` (<= cap)."""
    acc = base
    for k in range(1, cap + 1):
        if acc == target:
            return k
        acc = rot_mul(acc, base)
    return None


@dataclass
class Transcript:
    """Everything that crossed the (simulated) wire, plus the check bit."""

    base: RotationElement
    sent_a: RotationElement
    sent_b: RotationElement
    shared_a: RotationElement
    shared_b: RotationElement
    equal: bool
    dlog_iterations: int | None = None

    def to_json_dict(self) -> dict:
        d = {
            "field": self.base.field.to_text(),
            "radius": str(self.base.circle.radius),
            "base": _point_json(self.base),
            "sent_a": _point_json(self.sent_a),
            "sent_b": _point_json(self.sent_b),
            "shared_a": _point_json(self.shared_a),
            "shared_b": _point_json(self.shared_b),
            "equal": self.equal,
        }
        if self.dlog_iterations is not None:
            d["dlog_iterations"] = self.dlog_iterations
        return d


def _point_json(e: RotationElement) -> dict:
    return {"x": str(e.point.x), "y": str(e.point.y)}


def simulate_exchange(
    params: ProtocolParams,
    seed_a: int,
    seed_b: int,
    dlog_cap: int = 0,
) -> Transcript:
    """Run both parties against each other and return the transcript.

    The parties interact only through the exchanged group elements, so
    the run replays deterministically from the two seeds.  With
    dlog_cap > 0 (finite fields only) the eavesdropper's brute-force
    recovery of A's exponent is attempted for that many iterations.
    """
    a = keygen(params, seed_a, "A")
    b = keygen(params, seed_b, "B")
    shared_a = derive_shared(a, b.sent)
    shared_b = derive_shared(b, a.sent)
    dlog = None
    if dlog_cap > 0 and params.field.is_finite():
        dlog = brute_force_dlog(params.base, a.sent, dlog_cap)
    return Transcript(
        base=params.base,
        sent_a=a.sent,
        sent_b=b.sent,
        shared_a=shared_a,
        shared_b=shared_b,
        equal=shared_a == shared_b,
        dlog_iterations=dlog,
    )


# --- wire format -----------------------------------------------------------

MAGIC = b"CRC1"
WIRE_VERSION = 1

_TAG_ELEMENT = 1
_TAG_ROTATION = 2
_TAG_TRANSCRIPT = 3

_KIND_PRIME = 0
_KIND_QUADRATIC = 1
_KIND_RATIONALS = 2


def _pack_uint(n: int) -> bytes:
    body = n.to_bytes((n.bit_length() + 7) // 8, "big") if n else b""
    return len(body).to_bytes(4, "big") + body


def _pack_value(field, value) -> bytes:
    if isinstance(field, PrimeField):
        return _pack_uint(value)
    if isinstance(field, QuadraticExtension):
        return _pack_uint(value[0]) + _pack_uint(value[1])
    sign = b"\x01" if value < 0 else b"\x00"
    return sign + _pack_uint(abs(value.numerator)) + _pack_uint(value.denominator)


def _pack_descriptor(field) -> bytes:
    if isinstance(field, PrimeField):
        return bytes([_KIND_PRIME]) + _pack_uint(field.p)
    if isinstance(field, QuadraticExtension):
        return bytes([_KIND_QUADRATIC]) + _pack_uint(field.p) + _pack_uint(field.f0) + _pack_uint(field.f1)
    return bytes([_KIND_RATIONALS])


def encode(obj) -> bytes:
    """Serialize a FieldElement, RotationElement, or Transcript."""
    out = bytearray(MAGIC)
    out.append(WIRE_VERSION)
    if isinstance(obj, FieldElement):
        out.append(_TAG_ELEMENT)
        out += _pack_descriptor(obj.field)
        out += _pack_value(obj.field, obj.value)
    elif isinstance(obj, RotationElement):
        out.append(_TAG_ROTATION)
        field = obj.field
        out += _pack_descriptor(field)
        out += _pack_value(field, obj.circle.radius.value)
        out += _pack_value(field, obj.point.x.value)
        out += _pack_value(field, obj.point.y.value)
    elif isinstance(obj, Transcript):
        out.append(_TAG_TRANSCRIPT)
        field = obj.base.field
        out += _pack_descriptor(field)
        out += _pack_value(field, obj.base.circle.radius.value)
        for e in (obj.base, obj.sent_a, obj.sent_b, obj.shared_a, obj.shared_b):
            out += _pack_value(field, e.point.x.value)
            out += _pack_value(field, e.point.y.value)
        out.append(1 if obj.equal else 0)
    else:
        raise TypeError(f"cannot encode {type(obj).__name__}")
    return bytes(out)


class _Reader:
    def __init__(self, buf: bytes):
        self.buf = buf
        self.pos = 0

    def take(self, n: int) -> bytes:
        if self.pos + n > len(self.buf):
            raise MalformedMessage("truncated buffer")
        chunk = self.buf[self.pos : self.pos + n]
        self.pos += n
        return chunk

    def byte(self) -> int:
        return self.take(1)[0]

    def uint(self) -> int:
        n = int.from_bytes(self.take(4), "big")
        return int.from_bytes(self.take(n), "big")

    def done(self) -> None:
        if self.pos != len(self.buf):
            raise MalformedMessage(f"{len(self.buf) - self.pos} trailing bytes")


def _read_descriptor(r: _Reader):
    kind = r.byte()
    if kind == _KIND_PRIME:
        return PrimeField(r.uint())
    if kind == _KIND_QUADRATIC:
        p = r.uint()
        f0 = r.uint()
        f1 = r.uint()
        return QuadraticExtension(p, (f0, f1))
    if kind == _KIND_RATIONALS:
        return Rationals()
    raise MalformedMessage(f"unknown field kind tag {kind}")


def _read_value(r: _Reader, field):
    if isinstance(field, PrimeField):
        return field(r.uint())
    if isinstance(field, QuadraticExtension):
        c0 = r.uint()
        return field((c0, r.uint()))
    sign = r.byte()
    if sign not in (0, 1):
        raise MalformedMessage(f"bad sign byte {sign}")
    num = r.uint()
    den = r.uint()
    if den == 0:
        raise MalformedMessage("zero denominator")
    return field(Fraction(-num if sign else num, den))


def decode(buf: bytes):
    """Inverse of encode; raises MalformedMessage / VersionMismatch."""
    r = _Reader(buf)
    if r.take(4) != MAGIC:
        raise MalformedMessage("bad magic")
    version = r.byte()
    if version != WIRE_VERSION:
        raise VersionMismatch(f"wire version {version}, expected {WIRE_VERSION}")
    tag = r.byte()
    field = None
    if tag == _TAG_ELEMENT:
        field = _read_descriptor(r)
        value = _read_value(r, field)
        r.done()
        return value
    if tag == _TAG_ROTATION:
        field = _read_descriptor(r)
        radius = _read_value(r, field)
        x = _read_value(r, field)
        y = _read_value(r, field)
        r.done()
        circle = Circle(PlanePoint(field.zero, field.zero), radius)
        return RotationElement(circle, PlanePoint(x, y))
    if tag == _TAG_TRANSCRIPT:
        field = _read_descriptor(r)
        radius = _read_value(r, field)
        circle = Circle(PlanePoint(field.zero, field.zero), radius)
        pts = []
        for _ in range(5):
            x = _read_value(r, field)
            y = _read_value(r, field)
            pts.append(RotationElement(circle, PlanePoint(x, y)))
        equal = r.byte()
        r.done()
        return Transcript(*pts, equal=bool(equal))
    raise MalformedMessage(f"unknown message tag {tag}")
