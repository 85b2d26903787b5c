"""The three built-in infinite modules: Z, Q, and the p-primary quotient
group E(p), each with closed-form class arithmetic and finite windows.

Class encodings: positive integers n >= 2 for Z (signs collapse into the
associate class), reduced positive fractions for Q (every nonzero rational
is a nongenerator), and the level k >= 1 standing for the coset of 1/p^k
in E(p), where level a divides level b exactly when b <= a.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .modules import BoundExceeded, ModuleDescriptor
from .primes import is_prime, next_prime, primes_upto, smallest_prime_factors
from .topology import ClassId, PropertyVerdict, TopologySnapshot, snapshot_from_divides

WINDOW_SNAPSHOT_BOUND = 2048


class UnsupportedFamily(ValueError):
    pass


class WindowTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class IntegersOverZ:
    window: int  # classes [n] for 2 <= n <= window

    def __post_init__(self):
        if self.window < 2:
            raise ValueError("window must be >= 2")

    def describe(self) -> str:
        return f"sym:Z,N={self.window}"


@dataclass(frozen=True)
class RationalsOverZ:
    bound: int  # reduced fractions a/b with 1 <= a, b <= bound

    def __post_init__(self):
        if self.bound < 1:
            raise ValueError("bound must be >= 1")

    def describe(self) -> str:
        return f"sym:Q,B={self.bound}"


@dataclass(frozen=True)
class Prufer:
    p: int
    depth: int  # levels 1..depth, level k encoding the class of 1/p^k

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.depth < 1:
            raise ValueError("depth must be >= 1")

    def describe(self) -> str:
        return f"sym:E,p={self.p},D={self.depth}"


SymbolicFamily = IntegersOverZ | RationalsOverZ | Prufer


# --- classes and divisibility ----------------------------------------------


def family_classes(F: SymbolicFamily) -> tuple:
    if isinstance(F, IntegersOverZ):
        return tuple(range(2, F.window + 1))
    if isinstance(F, RationalsOverZ):
        fracs = sorted(
            {
                Fraction(a, b)
                for a in range(1, F.bound + 1)
                for b in range(1, F.bound + 1)
                if gcd(a, b) == 1
            }
        )
        return tuple(fracs)
    if isinstance(F, Prufer):
        return tuple(range(1, F.depth + 1))
    raise UnsupportedFamily(str(F))


def divides_symbolic(F: SymbolicFamily, a, b) -> bool:
    """a | b in the family: b is an integer multiple of a."""
    if isinstance(F, IntegersOverZ):
        return b % a == 0
    if isinstance(F, RationalsOverZ):
        q = Fraction(b) / Fraction(a)
        return q.denominator == 1
    if isinstance(F, Prufer):
        # level a covers every shallower level: 1/p^a | 1/p^b iff b <= a
        return b <= a
    raise UnsupportedFamily(str(F))


def class_label(F: SymbolicFamily, c) -> str:
    if isinstance(F, Prufer):
        return f"1/{F.p}^{c}" if c > 1 else f"1/{F.p}"
    return str(c)


# --- windows ----------------------------------------------------------------


def window_snapshot(
    F: SymbolicFamily, *, bound: int = WINDOW_SNAPSHOT_BOUND
) -> TopologySnapshot:
    """A finite window of the family's divisor topology.

    Basic opens are exact for Z (divisor sets are finite) and for E(p) up to
    the depth cut; closures are window-relative.  Every window is labeled
    truncated so downstream reports can flag window-relative claims.
    """
    classes = family_classes(F)
    if len(classes) > bound:
        raise BoundExceeded(f"{len(classes)} window classes exceed bound {bound}")
    ids = tuple(
        ClassId(i, c, class_label(F, c)) for i, c in enumerate(classes)
    )
    return snapshot_from_divides(
        ids,
        lambda a, b: divides_symbolic(F, a, b),
        truncated=True,
        label=F.describe(),
    )


# --- compactness ------------------------------------------------------------


def simple_submodule_count(F: SymbolicFamily) -> int:
    """Closed-form count of simple submodules.

    Z and Q have none: every nonzero cyclic submodule mZ strictly contains
    2mZ.  E(p) has exactly one, the subgroup generated by the level-1 class.
    """
    return 1 if isinstance(F, Prufer) else 0


def refute_finite_subcover(F: SymbolicFamily, opens) -> object:
    """A class outside the union of the given basic opens.

    For Z: the smallest prime exceeding every listed value divides none of
    them.  For Q: with q the smallest prime beyond all numerators and
    denominators, the class q * prod(a_i/b_i) divides no a_i/b_i, because the
    quotient (a_i/b_i) / x has numerator coprime to q but denominator q * (...).
    The returned class is re-verified against every input.
    """
    opens = list(opens)
    if not opens:
        raise ValueError("need at least one basic open")
    if isinstance(F, IntegersOverZ):
        escape = next_prime(max(opens))
    elif isinstance(F, RationalsOverZ):
        fracs = [Fraction(x) for x in opens]
        q = next_prime(max(max(f.numerator, f.denominator) for f in fracs))
        escape = Fraction(q, 1)
        for f in fracs:
            escape *= f
    else:
        raise UnsupportedFamily("E(p) windows admit finite subcovers")
    for given in opens:
        if divides_symbolic(F, escape, given):
            raise AssertionError(f"refuter {escape} divides {given}")
    return escape


def compactness_verdict_symbolic(F: SymbolicFamily) -> PropertyVerdict:
    """Compactness of the family with a machine-checked witness, plus the
    simple-submodule count and whether the count criterion agrees.

    Z and Q report the documented tension: zero simple submodules (finitely
    many) yet no finite subcover exists.
    """
    simples = simple_submodule_count(F)
    if isinstance(F, Prufer):
        # every basic open containing the level-1 class is the whole space
        witness = {
            "covering_open": class_label(F, 1),
            "reason": "the basic open of the level-1 class is the entire class set",
            "simple_submodule_count": simples,
        }
        return PropertyVerdict(
            "compact", True, witness=witness, note="criterion agrees"
        )
    if isinstance(F, IntegersOverZ):
        sample = list(range(2, 8))
    else:
        sample = [Fraction(1, 2), Fraction(2, 3), Fraction(3, 1)]
    escape = refute_finite_subcover(F, sample)
    witness = {
        "sample_opens": [str(x) for x in sample],
        "escaping_class": str(escape),
        "simple_submodule_count": simples,
    }
    return PropertyVerdict(
        "compact",
        False,
        witness=witness,
        note=(
            "documented discrepancy: finitely many (zero) simple submodules, "
            "yet every finite family of basic opens is escaped"
        ),
    )


# --- Noetherian and T5 -------------------------------------------------------


def noetherian_report(target, *, chain_base: int = 3, chain_length: int = 5) -> PropertyVerdict:
    """Ascending-chain behaviour of the basic opens.

    Finite snapshots hold trivially.  Vector spaces hold because all basic
    opens are singletons.  For Z the report exhibits a strictly ascending
    chain U_m < U_2m < U_4m < ..., refuting the ascending chain condition.
    """
    if isinstance(target, TopologySnapshot):
        return PropertyVerdict(
            "noetherian", True, note="finite space: ascending chains stabilize"
        )
    if isinstance(target, ModuleDescriptor):
        from .modules import PrimeField

        if isinstance(target.ring, PrimeField):
            return PropertyVerdict(
                "noetherian", True, note="vector space: all basic opens are singletons"
            )
        return PropertyVerdict(
            "noetherian", True, note="finite module: finitely many opens"
        )
    if isinstance(target, IntegersOverZ):
        chain = [chain_base * 2**k for k in range(chain_length + 1)]
        for lo, hi in zip(chain, chain[1:]):
            if not divides_symbolic(target, lo, hi) or divides_symbolic(target, hi, lo):
                raise AssertionError("chain is not strictly ascending")
        return PropertyVerdict(
            "noetherian",
            False,
            witness={"ascending_opens": [f"U_{c}" for c in chain]},
            note="strictly ascending basic-open chain, any length",
        )
    if isinstance(target, RationalsOverZ):
        chain = [Fraction(1, 2**k) for k in range(chain_length + 1)]
        return PropertyVerdict(
            "noetherian",
            False,
            witness={"ascending_opens": [f"U_{c}" for c in chain]},
        )
    if isinstance(target, Prufer):
        return PropertyVerdict(
            "noetherian", True,
            note="opens form a single descending chain; ascending chains stabilize",
        )
    raise TypeError(f"no noetherian report for {type(target)}")


def t5_refutation_witness_integers(m1: int, m2: int, m: int, *, window: int):
    """Classes ([m*m1], [m*m2], [m]) certifying that D(Z) is not T5.

    Requires m1 and m2 divisibility-incomparable; the two product classes are
    then separated singletons whose minimal neighborhoods share [m].
    """
    if m1 % m2 == 0 or m2 % m1 == 0:
        raise ValueError(f"{m1} and {m2} must be divisibility-incomparable")
    if min(m1, m2, m) < 2:
        raise ValueError("classes must be >= 2")
    a, b = m * m1, m * m2
    if max(a, b) > window:
        raise WindowTooSmall(f"window {window} cannot hold {max(a, b)}")
    F = IntegersOverZ(window)
    if divides_symbolic(F, a, b) or divides_symbolic(F, b, a):
        raise AssertionError("product classes are not separated")
    if not (divides_symbolic(F, m, a) and divides_symbolic(F, m, b)):
        raise AssertionError("common class escapes a minimal neighborhood")
    return (a, b, m)


# --- density and Baire -------------------------------------------------------


def baire_and_density_report(
    target, *, dense_open_generators=None
) -> PropertyVerdict:
    """Baire/density behaviour.

    Finite modules hold: there are finitely many opens and dense opens are
    closed under finite intersection (each point's minimal neighborhood meets
    any dense open inside any open).  For a Z window: the closure of the
    prime classes is the whole window, and any supplied dense open must
    contain every prime class.
    """
    if isinstance(target, ModuleDescriptor):
        return PropertyVerdict(
            "baire", True, note="finite space: finitely many dense opens"
        )
    if isinstance(target, TopologySnapshot):
        return PropertyVerdict(
            "baire", True, note="finite space: finitely many dense opens"
        )
    if not isinstance(target, IntegersOverZ):
        raise UnsupportedFamily(f"no density report for {type(target)}")
    N = target.window
    spf = smallest_prime_factors(N)
    primes = set(primes_upto(N))
    for n in range(2, N + 1):
        if spf[n] not in primes:
            return PropertyVerdict(
                "baire", False, witness={"class_without_prime_divisor": n}
            )
    witness = {"window": N, "prime_class_closure_covers": True}
    if dense_open_generators is not None:
        gens = sorted(set(int(g) for g in dense_open_generators))
        members = {d for g in gens for d in _divisors_in_window(g)}
        missing_density = [
            n for n in range(2, N + 1) if not any(n % x == 0 for x in members)
        ]
        if missing_density:
            return PropertyVerdict(
                "baire",
                False,
                witness={"open_not_dense_missing": missing_density[:5]},
                note="supplied open set is not dense in the window",
            )
        missing_primes = sorted(p for p in primes if p not in members)
        witness["dense_open_generators"] = len(gens)
        witness["contains_all_prime_classes"] = not missing_primes
        if missing_primes:
            return PropertyVerdict(
                "baire", False,
                witness={**witness, "missing_primes": missing_primes[:5]},
            )
    return PropertyVerdict("baire", True, witness=witness)


def _divisors_in_window(n: int) -> list[int]:
    return [d for d in range(2, n + 1) if n % d == 0]


def hausdorff_refutation_rationals(x, y) -> dict:
    """Two distinct Q-classes always share a common divisor class.

    1/(b1*b2) divides both a1/b1 and a2/b2, so their minimal neighborhoods
    meet once the window grows to contain it; the needed bound is returned.
    """
    fx, fy = Fraction(x), Fraction(y)
    if fx == fy:
        raise ValueError("need two distinct classes")
    common = Fraction(1, fx.denominator * fy.denominator)
    F = RationalsOverZ(max(fx.denominator * fy.denominator, 1))
    assert divides_symbolic(F, common, fx) and divides_symbolic(F, common, fy)
    return {
        "pair": (str(fx), str(fy)),
        "common_divisor_class": str(common),
        "window_bound_needed": common.denominator,
    }
