"""The rotation group on a circle centered at the origin.

Points of C((0,0), r) form an abelian group under

    (a1, a2) * (b1, b2) = ((a1 b1 - a2 b2)/r, (a1 b2 + a2 b1)/r)

with identity (r, 0) and inverse (a1, -a2).  This module implements the
product, fast powers, square roots (tied to perfect distances over
prime fields), element orders, and the cyclic/acyclic classification of
rational points via Gaussian integers.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import CircleMismatch, NotCoprime, WrongFieldKind
from .fields import PrimeField, Rationals, primes_up_to
from .maximal import is_perfect_distance
from .plane import Circle, PlanePoint, circle_cardinality, enumerate_circle, squared_distance


class RotationElement:
    """A point on an origin-centered circle, viewed as a group element."""

    __slots__ = ("circle", "point")

    def __init__(self, circle: Circle, point: PlanePoint):
        if circle.center.x or circle.center.y:
            raise ValueError("rotation group lives on circles centered at the origin")
        circle.require(point)
        object.__setattr__(self, "circle", circle)
        object.__setattr__(self, "point", point)

    def __setattr__(self, name, value):
        raise AttributeError("RotationElement is immutable")

    @property
    def field(self):
        return self.circle.field

    def __mul__(self, other):
        return rot_mul(self, other)

    def __pow__(self, n):
        return rot_pow(self, n)

    def inverse(self) -> "RotationElement":
        return RotationElement(self.circle, PlanePoint(self.point.x, -self.point.y))

    def is_identity(self) -> bool:
        return self.point.x == self.circle.radius and self.point.y.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, RotationElement)
            and self.circle == other.circle
            and self.point == other.point
        )

    def __hash__(self):
        return hash((self.circle, self.point))

    def __str__(self):
        return str(self.point)

    def __repr__(self):
        return f"RotationElement({self.point} on {self.circle})"


def rotation_element(circle: Circle, x, y) -> RotationElement:
    """Convenience constructor from raw coordinates."""
    field = circle.field
    return RotationElement(circle, PlanePoint(field(x), field(y)))


def identity_element(circle: Circle) -> RotationElement:
    return RotationElement(circle, PlanePoint(circle.radius, circle.field.zero))


def rot_mul(a: RotationElement, b: RotationElement) -> RotationElement:
    """The rotation product of two elements of the same circle group."""
    if a.circle != b.circle:
        raise CircleMismatch(f"elements of {a.circle} and {b.circle}")
    r_inv = a.circle.radius.inverse()
    a1, a2 = a.point.x, a.point.y
    b1, b2 = b.point.x, b.point.y
    return RotationElement(
        a.circle,
        PlanePoint((a1 * b1 - a2 * b2) * r_inv, (a1 * b2 + a2 * b1) * r_inv),
    )


def rot_pow(a: RotationElement, n: int) -> RotationElement:
    """n-th power by square-and-multiply; a^0 is the identity (r, 0)."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("exponent must be a nonnegative integer")
    result = identity_element(a.circle)
    base = a
    while n:
        if n & 1:
            result = rot_mul(result, base)
        n >>= 1
        if n:
            base = rot_mul(base, base)
    return result


def induced_squared_distance(a: RotationElement):
    """Squared distance from the element to the identity (r, 0)."""
    return squared_distance(a.point, identity_element(a.circle).point)


def _exhaustive_sqrt(a: RotationElement):
    roots = []
    for p in enumerate_circle(a.circle):
        b = RotationElement(a.circle, p)
        if rot_mul(b, b) == a:
            roots.append(b)
    if not roots:
        return None
    return min(roots, key=lambda e: e.point.sort_key())


def rot_sqrt(a: RotationElement, unchecked: bool = False) -> RotationElement | None:
    """A square root of `a` in the rotation group, or None.

    Over a prime field of characteristic not in {2, 3, 5} (and over Q) a
    root exists exactly when the induced squared distance is perfect;
    it is then b2 = sqrt((2r^2 - 2 a1 r)/4), b1 = r a2 / (2 b2), with b2
    the canonical field root so the output is deterministic (the other
    root is the mirror (-b1, -b2)).  The identity, whose induced
    distance 0 is not perfect, is special-cased to return itself.

    For the excluded small fields and for quadratic extensions the
    equivalence is not claimed; pass unchecked=True to get a plain
    exhaustive search there instead of WrongFieldKind.
    """
    field = a.field
    supported = isinstance(field, (PrimeField, Rationals)) and field.characteristic not in (2, 3, 5)
    if not supported:
        if not unchecked:
            raise WrongFieldKind(
                "square-root criterion holds for prime fields of characteristic not in {2,3,5}; "
                "pass unchecked=True for an exhaustive search"
            )
        if not field.is_finite():
            raise WrongFieldKind("cannot search an infinite group exhaustively")
        return _exhaustive_sqrt(a)
    if a.is_identity():
        return a  # roots are (r, 0) and (-r, 0); return the identity
    r = a.circle.radius
    induced = induced_squared_distance(a)
    if not is_perfect_distance(a.circle, induced):
        return None
    four = field.from_int(4)
    b2 = (induced / four).sqrt()
    b1 = r * a.point.y / (field.from_int(2) * b2)
    b = RotationElement(a.circle, PlanePoint(b1, b2))
    root_check = rot_mul(b, b)
    if root_check != a:
        raise AssertionError(f"square-root construction failed for {a}")
    return b


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in primes_up_to(math.isqrt(n) + 1):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        if n == 1:
            break
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def group_order(circle: Circle) -> int:
    """Order of the rotation group = number of circle points (finite fields)."""
    return circle_cardinality(circle.field)


def element_order(a: RotationElement) -> int:
    """Multiplicative order of an element of a finite rotation group."""
    if not a.field.is_finite():
        raise WrongFieldKind("element orders over Q come from classify_cyclicity")
    order = group_order(a.circle)
    for p in _factorize(order):
        while order % p == 0 and rot_pow(a, order // p).is_identity():
            order //= p
    return order


def gaussian_norm_square_check(x: int, y: int) -> bool:
    """Whether the Gaussian norm x^2 + y^2 is a perfect square > 1.

    Requires gcd(x, y) = 1; coprime pairs passing this check have
    (x + iy)^n never a natural number, which is what drives the
    acyclicity of rational rotation elements.
    """
    if math.gcd(x, y) != 1:
        raise NotCoprime(f"gcd({x}, {y}) != 1")
    n = x * x + y * y
    return n > 1 and math.isqrt(n) ** 2 == n


def _coprime_integer_form(a: RotationElement) -> tuple[int, int]:
    """Clear denominators of a rational point to a coprime integer pair."""
    x, y = Fraction(a.point.x.value), Fraction(a.point.y.value)
    k1 = math.gcd(abs(x.numerator), abs(y.numerator))
    k2 = math.lcm(x.denominator, y.denominator)
    ix = (x.numerator // k1) * (k2 // x.denominator)
    iy = (y.numerator // k1) * (k2 // y.denominator)
    g = math.gcd(ix, iy)
    return ix // g, iy // g


def identity_power_sweep(a: RotationElement, bound: int) -> int | None:
    """Smallest n in [1, bound] with a^n = identity, or None.

    Pure falsification harness: over Q it iterates the integer Gaussian
    form (u + iv) <- (u + iv)(x + iy) and compares against D^n, so no
    fraction reduction happens along the way.
    """
    if a.field.is_finite():
        acc = a
        for n in range(1, bound + 1):
            if acc.is_identity():
                return n
            acc = rot_mul(acc, a)
        return None
    r = a.circle.radius
    w1 = Fraction(a.point.x.value) / Fraction(r.value)
    w2 = Fraction(a.point.y.value) / Fraction(r.value)
    d = math.lcm(w1.denominator, w2.denominator)
    x, y = w1.numerator * (d // w1.denominator), w2.numerator * (d // w2.denominator)
    u, v = 1, 0
    dn = 1
    for n in range(1, bound + 1):
        u, v = u * x - v * y, u * y + v * x
        dn *= d
        if v == 0 and u == dn:
            return n
    return None


@dataclass(frozen=True)
class CyclicityReport:
    """Verdict on the subgroup generated by one element."""

    element: RotationElement
    verdict: str  # "cyclic", "acyclic", or "undecided"
    order: int | None = None
    checked_bound: int = 0


def classify_cyclicity(
    a: RotationElement, bound: int = 10_000, use_theorem: bool = True
) -> CyclicityReport:
    """Decide whether `a` generates a finite or infinite subgroup.

    Finite fields: the exact order is computed, verdict Cyclic(order).
    Over Q the four axis points (r,0), (-r,0), (0,+-r) are cyclic with
    orders 1, 2, 4, 4; every other point is acyclic because its coprime
    integer form has a square Gaussian norm > 1.  The theorem decides;
    `bound` only sizes a redundant iteration sweep confirming that no
    power up to it hits the identity.  With use_theorem=False the sweep
    is all there is, and a fruitless one reports "undecided".
    """
    if a.field.is_finite():
        return CyclicityReport(a, "cyclic", order=element_order(a))
    if not use_theorem:
        hit = identity_power_sweep(a, bound)
        if hit is not None:
            return CyclicityReport(a, "cyclic", order=hit, checked_bound=bound)
        return CyclicityReport(a, "undecided", checked_bound=bound)
    r = a.circle.radius
    x, y = a.point.x, a.point.y
    if y.is_zero():
        return CyclicityReport(a, "cyclic", order=1 if x == r else 2)
    if x.is_zero():
        return CyclicityReport(a, "cyclic", order=4)
    ix, iy = _coprime_integer_form(a)
    if not gaussian_norm_square_check(ix, iy):
        raise AssertionError(f"norm of coprime form {(ix, iy)} is not a square > 1")
    if bound > 0 and identity_power_sweep(a, bound) is not None:
        raise AssertionError(f"acyclic element reached the identity within {bound} powers")
    return CyclicityReport(a, "acyclic", checked_bound=bound)
