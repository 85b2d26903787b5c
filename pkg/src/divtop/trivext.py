"""Trivial extension rings Z_n ⋉ Z_m and their pseudo-simplicity tests.

Ring elements are pairs (a, x) with componentwise addition and the
multiplication (a, x)(b, y) = (ab, ay + bx).  The ring is treated as a
module over itself: nongenerators are exactly the nonunits, and a unit is
any pair whose first coordinate is invertible mod n (the explicit inverse
is (a^-1, -a^-2 x)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd

from .modules import BoundExceeded, ExplicitIdeal
from .primes import is_prime

TRIVIAL_EXTENSION_BOUND = 10_000
MAXIMALITY_CROSS_CHECK_SIZE = 64


class InvalidPair(ValueError):
    """The module modulus does not divide the ring modulus."""


@dataclass(frozen=True)
class TrivialExtensionRing:
    n: int
    m: int
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("base ring needs n >= 2")
        if self.m < 1 or self.n % self.m != 0:
            raise InvalidPair(f"{self.m} does not divide {self.n}")

    @property
    def size(self) -> int:
        return self.n * self.m

    @property
    def zero(self):
        return (0, 0)

    @property
    def one(self):
        return (1, 0)

    def elements(self):
        return product(range(self.n), range(self.m))

    def add(self, u, v):
        return ((u[0] + v[0]) % self.n, (u[1] + v[1]) % self.m)

    def mul(self, u, v):
        a, x = u
        b, y = v
        return ((a * b) % self.n, (a * y + b * x) % self.m)

    def is_unit(self, u) -> bool:
        return gcd(u[0], self.n) == 1

    def describe(self) -> str:
        return f"triv:n={self.n},m={self.m}"


def trivial_extension_ring(
    n: int, m: int, *, bound: int = TRIVIAL_EXTENSION_BOUND
) -> TrivialExtensionRing:
    if n * m > bound:
        raise BoundExceeded(f"{n}*{m} ring elements exceed bound {bound}")
    return TrivialExtensionRing(n, m)


def annihilator_element(R: TrivialExtensionRing, u) -> ExplicitIdeal:
    """ann((a, x)) = {(b, y) : ab = 0 mod n and ay + bx = 0 mod m}.

    Enumerated from the congruences: b runs over multiples of n/gcd(a, n),
    and for each b the y-solutions of a y = -b x (mod m) form an arithmetic
    progression of step m/gcd(a, m).
    """
    n, m = R.n, R.m
    a, x = u
    members = []
    g_n = gcd(a, n)
    step_b = n // g_n
    g_m = gcd(a, m)
    step_y = m // g_m
    if step_y > 1:
        inv = pow((a // g_m) % step_y, -1, step_y)
    for k in range(g_n):
        b = k * step_b
        c = (-b * x) % m
        if c % g_m != 0:
            continue
        y0 = 0 if step_y == 1 else ((c // g_m) * inv) % step_y
        members.extend((b, y0 + t * step_y) for t in range(g_m))
    return ExplicitIdeal(frozenset(members))


def _principal_ideal(R: TrivialExtensionRing, z) -> frozenset:
    mul = R.mul
    return frozenset(mul(r, z) for r in R.elements())


def _maximal_by_extension(R: TrivialExtensionRing, members: frozenset) -> bool:
    # literal test: adjoining any outside element generates the whole ring
    add = R.add
    size = R.size
    for z in R.elements():
        if z in members:
            continue
        grown = {add(i, w) for i in members for w in _principal_ideal(R, z)}
        if len(grown) != size:
            return False
    return True


def is_maximal_ideal_trivial(R: TrivialExtensionRing, ideal: ExplicitIdeal) -> bool:
    """Maximality of an ideal of Z_n ⋉ Z_m.

    The fast verdict is prime additive index: the quotient by any ideal is
    generated by the image of (1, 0), because the module part is nilpotent
    and dies in any field quotient, so maximal ideals are exactly the proper
    ideals of prime index.  Small rings re-verify by literal extension.
    """
    members = ideal.elements
    cache = R._cache.setdefault("maximal", {})
    got = cache.get(members)
    if got is not None:
        return got
    size = R.size
    proper = R.one not in members and R.zero in members
    verdict = proper and size % len(members) == 0 and is_prime(size // len(members))
    if size <= MAXIMALITY_CROSS_CHECK_SIZE:
        brute = proper and _maximal_by_extension(R, members)
        if brute != verdict:
            raise AssertionError(
                f"maximality criteria disagree on {R.describe()} ideal of "
                f"size {len(members)}"
            )
    cache[members] = verdict
    return verdict


def pseudo_simple_ring_violation(R: TrivialExtensionRing):
    """A nonzero nonunit whose annihilator is not maximal, or None."""
    zero = R.zero
    for u in R.elements():
        if u == zero or R.is_unit(u):
            continue
        if not is_maximal_ideal_trivial(R, annihilator_element(R, u)):
            return u
    return None


def is_pseudo_simple_ring(R: TrivialExtensionRing) -> bool:
    """The ring is pseudo-simple as a module over itself: every nonzero
    nonunit has a maximal annihilator."""
    return pseudo_simple_ring_violation(R) is None


def local_criterion(R: TrivialExtensionRing) -> bool:
    """The base-ring condition equivalent to pseudo-simplicity of Z_n ⋉ Z_m:
    Z_n is local, its unique maximal ideal is ann(Z_m) = mZ_n, and every
    nonzero nonunit r of Z_n has ann(r) = mZ_n.

    Ideals of Z_n are compared through their canonical divisor generators.
    """
    n, m = R.n, R.m
    prime_divisors = _prime_divisors(n)
    if len(prime_divisors) != 1:
        return False
    p = prime_divisors[0]
    # ann(Z_m) inside Z_n is mZ_n (m divides n); it equals the maximal
    # ideal pZ_n exactly when m = p.  m = 1 gives the whole ring: never maximal.
    if m != p:
        return False
    for r in range(1, n):
        if gcd(r, n) == 1:
            continue
        # ann(r) = (n / gcd(r, n)) Z_n, compared by canonical generator
        if n // gcd(r, n) != m:
            return False
    return True


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
