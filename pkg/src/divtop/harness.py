"""Sweep harness: enumerate module families, evaluate both sides of each
registered claim by independent code paths, and report failures with
reproducible witnesses.

Outcomes: ``pass``/``fail`` per the claim's logical shape (equivalence or
implication), ``flagged`` for the documented compactness discrepancy on the
torsion-free symbolic families, and ``skipped`` when an instance falls
outside a check's stated bound.  Reports are deterministic given the family
description and bounds.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import trivext
from .families import (
    IntegersOverZ,
    Prufer,
    RationalsOverZ,
    compactness_verdict_symbolic,
    simple_submodule_count,
)
from .modules import (
    BoundExceeded,
    IntegerIdeal,
    ModuleDescriptor,
    class_table,
    direct_sum,
    is_bezout,
    is_generator,
    is_maximal_ideal,
    is_pseudo_simple,
    is_uniserial,
    gcd_elements,
    module_annihilator,
    quotient_module,
    satisfies_star,
    sharp_elements,
    star_violation,
    submodules_all,
    cyclic_orbit,
)
from .primes import factorint, partitions
from .topology import (
    DEFAULT_CLASS_BOUND,
    build_topology,
    check_nested,
    check_separation,
    compactness_verdict,
    isolated_points,
)


@dataclass(frozen=True)
class TheoremCase:
    theorem_id: str
    instance: str
    lhs: object
    rhs: object
    outcome: str  # pass | fail | flagged | skipped
    point: str | None = None
    witness: object = None

    def to_json(self):
        out = {
            "theorem_id": self.theorem_id,
            "instance": self.instance,
            "lhs": _plain(self.lhs),
            "rhs": _plain(self.rhs),
            "outcome": self.outcome,
        }
        if self.point is not None:
            out["point"] = self.point
        if self.witness is not None:
            out["witness"] = _plain(self.witness)
        return out


def _plain(value):
    if isinstance(value, (bool, int, str, type(None))):
        return value
    if isinstance(value, (list, tuple, set, frozenset)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return str(value)


@dataclass
class SweepReport:
    theorem_id: str
    statement: str
    family: str
    instance_count: int = 0
    pass_count: int = 0
    failures: list = field(default_factory=list)
    flagged: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    wall_time_s: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, case: TheoremCase):
        self.instance_count += 1
        if case.outcome == "pass":
            self.pass_count += 1
        elif case.outcome == "fail":
            self.failures.append(case)
        elif case.outcome == "flagged":
            self.flagged.append(case)
        else:
            self.skipped.append(case)

    def to_json(self):
        return {
            "theorem_id": self.theorem_id,
            "statement": self.statement,
            "family": self.family,
            "instance_count": self.instance_count,
            "pass_count": self.pass_count,
            "failures": [c.to_json() for c in self.failures],
            "flagged": [c.to_json() for c in self.flagged],
            "skipped": [c.to_json() for c in self.skipped],
            "wall_time_s": round(self.wall_time_s, 4),
        }


class UnknownTheorem(KeyError):
    pass


# --- family enumeration -----------------------------------------------------


def enumerate_family(kind: str, limit: int):
    """Duplicate-free module families, canonically ordered.

    kinds: 'cyclic' (Z_n, 2 <= n <= limit), 'abelian' (all finite abelian
    groups of order 2..limit, factors sorted), 'vector' (F_p spaces with
    p^d <= limit), 'trivial' (pairs (n, m), m | n, m >= 2, n*m <= limit;
    m = 1 would make the module part zero).
    """
    if kind == "cyclic":
        return [ModuleDescriptor.cyclic(n) for n in range(2, limit + 1)]
    if kind == "abelian":
        out = []
        for n in range(2, limit + 1):
            out.extend(_abelian_groups_of_order(n))
        return out
    if kind == "vector":
        out = []
        for p in _primes_le(limit):
            d = 1
            while p**d <= limit:
                out.append(ModuleDescriptor.vector_space(p, d))
                d += 1
        return sorted(out, key=lambda M: (M.order, M.factors))
    if kind == "trivial":
        pairs = [
            (n, m)
            for n in range(2, limit + 1)
            for m in range(2, n + 1)
            if n % m == 0 and n * m <= limit
        ]
        return sorted(pairs, key=lambda nm: (nm[0] * nm[1], nm))
    raise ValueError(f"unknown family kind {kind!r}")


def _abelian_groups_of_order(n: int):
    parts_by_prime = [
        [(p, part) for part in partitions(e)] for p, e in sorted(factorint(n).items())
    ]
    choices = [[]]
    for options in parts_by_prime:
        choices = [done + [opt] for done in choices for opt in options]
    out = []
    for combo in choices:
        factors = []
        for p, part in combo:
            factors.extend((p, k) for k in part)
        out.append(ModuleDescriptor.abelian(sorted(factors)))
    return sorted(out, key=lambda M: M.factors)


def _primes_le(n: int):
    from .primes import primes_upto

    return primes_upto(n)


# --- per-theorem runners -----------------------------------------------------


def _run_pseudo_zn(report, limit, bounds):
    for n in range(2, limit + 1):
        M = ModuleDescriptor.cyclic(n)
        lhs = is_pseudo_simple(M)
        fac = factorint(n)
        es = sorted(fac.values())
        rhs = es == [1] or es == [2] or es == [1, 1]
        report.add(_case(report, M.describe(), lhs, rhs, lhs == rhs))


def classified_pseudo_simple(M: ModuleDescriptor) -> bool:
    """Closed-form classification of pseudo-simple finite abelian groups:
    (Z_p)^k, Z_p + Z_q for distinct primes, or Z_{p^2}.

    The two-case form without Z_{p^2} is not a theorem: Z_4 satisfies the
    definition (its only nongenerator class has annihilator 2Z) but is
    neither elementary abelian nor squarefree of two primes.
    """
    factors = sorted(M.factors)
    primes = {p for p, _ in factors}
    if all(k == 1 for _, k in factors):
        if len(primes) == 1:
            return True  # (Z_p)^k
        return len(factors) == 2 and len(primes) == 2  # Z_p + Z_q
    return len(factors) == 1 and factors[0][1] == 2  # Z_{p^2}


def _run_fg_classification(report, limit, bounds):
    for M in enumerate_family("abelian", limit):
        lhs = is_pseudo_simple(M)
        rhs = classified_pseudo_simple(M)
        report.add(_case(report, M.describe(), lhs, rhs, lhs == rhs))


def _run_main_equivalence(report, limit, bounds):
    for M in enumerate_family("abelian", limit):
        T = build_topology(M)
        values = {
            "pseudo_simple": is_pseudo_simple(M),
            "star": satisfies_star(M),
            "discrete": check_separation(T, "discrete").holds,
            "hausdorff": check_separation(T, "T2").holds,
            "t1": check_separation(T, "T1").holds,
        }
        ok = len(set(values.values())) == 1
        report.add(
            _case(
                report, M.describe(), values["pseudo_simple"], values["t1"], ok,
                witness=None if ok else values,
            )
        )


def _run_hausdorff_star(report, limit, bounds):
    for M in enumerate_family("abelian", limit):
        lhs = satisfies_star(M)
        rhs = check_separation(build_topology(M), "T2").holds
        witness = None
        if lhs != rhs:
            violation = star_violation(M)
            witness = {"star_violation": [M.element_label(x) for x in violation]}
        report.add(_case(report, M.describe(), lhs, rhs, lhs == rhs, witness=witness))


def _run_nested_uniserial(report, limit, bounds):
    for M in enumerate_family("abelian", limit):
        lhs = is_uniserial(M)
        verdict = check_nested(build_topology(M))
        report.add(
            _case(report, M.describe(), lhs, verdict.holds, lhs == verdict.holds,
                  witness=None if lhs == verdict.holds else verdict.witness)
        )


def _run_isolated_irreducible(report, limit, bounds):
    from .modules import is_irreducible_on_sharp

    for M in enumerate_family("abelian", limit):
        T = build_topology(M)
        isolated = isolated_points(T)  # already cross-compared internally
        for i, cls in enumerate(T.classes):
            lhs = is_irreducible_on_sharp(M, cls.representative)
            rhs = i in isolated
            report.add(
                _case(report, M.describe(), lhs, rhs, lhs == rhs, point=cls.label)
            )


def _run_tcom_counts(report, limit, bounds):
    for M in enumerate_family("abelian", limit):
        T = build_topology(M)
        minimal = sum(1 for i in range(T.n_classes) if T.rows[i] == 1 << i)
        simple = len(_nonsharp_safe_simples(M, T))
        report.add(
            _case(report, M.describe(), minimal, simple, minimal == simple)
        )


def _nonsharp_safe_simples(M, T):
    from .modules import simple_submodules

    simples = simple_submodules(M)
    if T.n_classes == 0:
        # simple module: the class space is empty and the counts are not
        # comparable (the unique simple submodule is generated by generators)
        return []
    return simples


def _run_finitely_cogenerated(report, limit, bounds):
    from .modules import is_finitely_cogenerated

    for M in enumerate_family("abelian", limit):
        T = build_topology(M)
        lhs = compactness_verdict(T, M).holds
        rhs = is_finitely_cogenerated(M)
        report.add(_implication(report, M.describe(), lhs, rhs))


def _run_homo_stability(report, limit, bounds):
    for M in enumerate_family("abelian", limit):
        if M.order > bounds.submodule_bound or not is_pseudo_simple(M):
            continue
        for N in submodules_all(M, bound=bounds.submodule_bound):
            if len(N) == M.order:
                continue  # quotient would be the zero module
            if len(N) > 1:
                sub_type = _subgroup_type(M, N.elements)
                report.add(
                    _implication(
                        report, M.describe(), True, is_pseudo_simple(sub_type),
                        point=f"submodule[{len(N)}]",
                    )
                )
            Q = quotient_module(M, N)
            report.add(
                _implication(
                    report, M.describe(), True, is_pseudo_simple(Q.module),
                    point=f"quotient[{M.order // len(N)}]",
                )
            )


def _subgroup_type(M, elems):
    """Isomorphism type of a subgroup, via torsion counts (as for quotients):
    for each prime p, |{x : p^k x = 0}| = p^{e_k} and the differences
    e_k - e_{k-1} count the cyclic factors with exponent >= k."""
    size = len(elems)
    if size == 1:
        raise ValueError("zero module has no descriptor")
    factors = []
    for p, e_total in sorted(factorint(size).items()):
        levels = []
        prev = 0
        k = 1
        while prev < e_total:
            killed = sum(1 for x in elems if M.scalar(p**k, x) == M.zero)
            e_k = 0
            while p**e_k < killed:
                e_k += 1
            assert p**e_k == killed, "torsion count is not a p-power"
            levels.append(e_k - prev)
            prev = e_k
            k += 1
        levels.append(0)
        for j in range(len(levels) - 1):
            factors.extend([(p, j + 1)] * (levels[j] - levels[j + 1]))
    return ModuleDescriptor(M.ring, tuple(sorted(factors)))


def _run_summand_stability(report, limit, bounds):
    mods = [M for M in enumerate_family("abelian", limit)]
    for M1 in mods:
        for M2 in mods:
            if M1.order * M2.order > limit:
                continue
            S = direct_sum(M1, M2)
            if not is_pseudo_simple(S.module):
                continue
            rhs = is_pseudo_simple(M1) and is_pseudo_simple(M2)
            report.add(
                _implication(
                    report, S.module.describe(), True, rhs,
                    point=f"{M1.describe()}+{M2.describe()}",
                )
            )


def _run_direct_sum_noncyclic(report, limit, bounds):
    mods = enumerate_family("abelian", limit)
    for M1 in mods:
        for M2 in mods:
            if M1.order * M2.order > limit:
                continue
            if M1.is_cyclic() and M2.is_cyclic():
                continue  # outside this statement's hypothesis
            S = direct_sum(M1, M2)
            lhs = (
                is_pseudo_simple(M1)
                and is_pseudo_simple(M2)
                and _annihilators_equal_maximal(M1, M2)
            )
            rhs = is_pseudo_simple(S.module)
            report.add(
                _case(
                    report, S.module.describe(), lhs, rhs, lhs == rhs,
                    point=f"{M1.describe()}+{M2.describe()}",
                )
            )


def _annihilators_equal_maximal(M1, M2):
    a1, a2 = module_annihilator(M1), module_annihilator(M2)
    return a1 == a2 and is_maximal_ideal(M1.ring, a1)


def _run_direct_sum_cyclic(report, limit, bounds):
    mods = [M for M in enumerate_family("abelian", limit) if M.is_cyclic()]
    for M1 in mods:
        for M2 in mods:
            if M1.order * M2.order > limit:
                continue
            S = direct_sum(M1, M2)
            both_simple = _is_simple(M1) and _is_simple(M2)
            a1, a2 = module_annihilator(M1), module_annihilator(M2)
            branch_ii = a1 == a2 and is_maximal_ideal(M1.ring, a1)
            branch_i = (
                a1 != a2
                and is_maximal_ideal(M1.ring, a1)
                and is_maximal_ideal(M2.ring, a2)
                and _nonzero_pairs_generate(S)
            )
            lhs = both_simple and (branch_i or branch_ii)
            rhs = is_pseudo_simple(S.module)
            report.add(
                _case(
                    report, S.module.describe(), lhs, rhs, lhs == rhs,
                    point=f"{M1.describe()}+{M2.describe()}",
                )
            )


def _is_simple(M):
    zero = M.zero
    return all(is_generator(M, x) for x in M.elements() if x != zero)


def _nonzero_pairs_generate(S):
    M = S.module
    z1, z2 = S.left.zero, S.right.zero
    for m in M.elements():
        m1, m2 = S.split(m)
        if m1 != z1 and m2 != z2 and not is_generator(M, m):
            return False
    return True


def _run_trivial_extension(report, limit, bounds):
    for n, m in enumerate_family("trivial", limit):
        R = trivext.trivial_extension_ring(n, m, bound=bounds.trivial_bound)
        lhs = trivext.is_pseudo_simple_ring(R)
        rhs = trivext.local_criterion(R)
        witness = None
        if lhs != rhs:
            bad = trivext.pseudo_simple_ring_violation(R)
            witness = {"violating_element": bad}
        report.add(_case(report, R.describe(), lhs, rhs, lhs == rhs, witness=witness))


def _run_t5_uniserial(report, limit, bounds):
    for M in enumerate_family("abelian", limit):
        T = build_topology(M)
        lhs = is_uniserial(M)
        try:
            rhs = check_separation(T, "T5", class_bound=bounds.class_bound).holds
        except BoundExceeded as exc:
            report.add(
                TheoremCase(report.theorem_id, M.describe(), lhs, None, "skipped",
                            witness=str(exc))
            )
            continue
        report.add(_implication(report, M.describe(), lhs, rhs))


def _run_completely_normal(report, limit, bounds):
    for M in enumerate_family("abelian", limit):
        T = build_topology(M)
        lhs = is_pseudo_simple(M)
        try:
            t4 = check_separation(T, "T4", class_bound=bounds.class_bound).holds
            t5 = check_separation(T, "T5", class_bound=bounds.class_bound).holds
        except BoundExceeded as exc:
            report.add(
                TheoremCase(report.theorem_id, M.describe(), lhs, None, "skipped",
                            witness=str(exc))
            )
            continue
        t1 = check_separation(T, "T1").holds
        rhs = t1 and t4 and t5  # normal and completely normal together
        report.add(_case(report, M.describe(), lhs, rhs, lhs == rhs))


def _run_bezout_star(report, limit, bounds):
    for M in enumerate_family("abelian", limit):
        if M.order > bounds.submodule_bound:
            continue
        lhs = is_bezout(M) and satisfies_star(M)
        if not lhs:
            report.add(_implication(report, M.describe(), False, True))
            continue
        subs = submodules_all(M, bound=bounds.submodule_bound)
        rhs = True
        witness = None
        for rep, orbit, _ in class_table(M):
            # Rm maximal: nothing strictly between Rm and M
            between = [
                s for s in subs
                if orbit < s.elements and len(s.elements) < M.order
            ]
            if between:
                rhs = False
                witness = {"class": M.element_label(rep)}
                break
        report.add(_implication(report, M.describe(), lhs, rhs, witness=witness))


def _run_gcd_intersection(report, limit, bounds):
    from itertools import combinations

    for M in enumerate_family("abelian", limit):
        T = build_topology(M)
        reps = [cls.representative for cls in T.classes]
        for i, j in combinations(range(len(reps)), 2):
            g = gcd_elements(M, reps[i], reps[j])
            if g is None or is_generator(M, g) or g == M.zero:
                continue
            gi = next(
                idx for idx, cls in enumerate(T.classes)
                if cyclic_orbit(M, cls.representative) == cyclic_orbit(M, g)
            )
            lhs = True  # gcd lies in the sharp set
            rhs = T.cols[gi] == T.cols[i] & T.cols[j]
            report.add(
                _case(
                    report, M.describe(), lhs, rhs, rhs,
                    point=f"({T.classes[i].label},{T.classes[j].label})",
                )
            )


def _run_tcom_symbolic(report, limit, bounds):
    for F in (Prufer(2, 8), IntegersOverZ(max(limit, 50)), RationalsOverZ(10)):
        verdict = compactness_verdict_symbolic(F)
        lhs = True  # each family has finitely many simple submodules
        rhs = verdict.holds
        if lhs == rhs:
            outcome = "pass"
        else:
            # documented discrepancy for the torsion-free families
            outcome = "flagged"
        report.add(
            TheoremCase(
                report.theorem_id, F.describe(), lhs, rhs, outcome,
                witness={
                    "simple_submodules": simple_submodule_count(F),
                    **(verdict.witness or {}),
                },
            )
        )


def _case(report, instance, lhs, rhs, ok, point=None, witness=None):
    return TheoremCase(
        report.theorem_id, instance, lhs, rhs, "pass" if ok else "fail",
        point=point, witness=witness,
    )


def _implication(report, instance, lhs, rhs, point=None, witness=None):
    ok = (not lhs) or rhs
    return TheoremCase(
        report.theorem_id, instance, lhs, rhs, "pass" if ok else "fail",
        point=point, witness=witness,
    )


# --- registry ----------------------------------------------------------------


@dataclass(frozen=True)
class Bounds:
    submodule_bound: int = 512
    class_bound: int = DEFAULT_CLASS_BOUND
    trivial_bound: int = 10_000


_REGISTRY = {
    "pseudoZn": (
        "Z_n is pseudo-simple iff n is p, p^2, or pq for distinct primes",
        _run_pseudo_zn,
        "cyclic",
    ),
    "fgPS": (
        "a finite abelian group is pseudo-simple iff it is Z_p + Z_q (p != q), "
        "(Z_p)^k, or Z_{p^2} (the last case is required: Z_4 qualifies)",
        _run_fg_classification,
        "abelian",
    ),
    "main-equivalence": (
        "pseudo-simple, the joint-containment condition, discrete, Hausdorff "
        "and T1 agree",
        _run_main_equivalence,
        "abelian",
    ),
    "hausdorff-star": (
        "the class space is Hausdorff iff the module satisfies the "
        "joint-containment condition",
        _run_hausdorff_star,
        "abelian",
    ),
    "nested-uniserial": (
        "the class space is nested iff the module is uniserial",
        _run_nested_uniserial,
        "abelian",
    ),
    "isolated-irreducible": (
        "a class is isolated iff its representative is irreducible among "
        "nonzero nongenerators",
        _run_isolated_irreducible,
        "abelian",
    ),
    "tcom-counts": (
        "minimal cyclic submodules and simple submodules are in bijection",
        _run_tcom_counts,
        "abelian",
    ),
    "tfinitelycog": (
        "a compact class space forces a finitely cogenerated module",
        _run_finitely_cogenerated,
        "abelian",
    ),
    "homo-stability": (
        "pseudo-simplicity passes to submodules and quotient images",
        _run_homo_stability,
        "abelian",
    ),
    "cfac": (
        "direct summands of a pseudo-simple sum are pseudo-simple",
        _run_summand_stability,
        "abelian pairs",
    ),
    "tdir": (
        "with a noncyclic summand: the sum is pseudo-simple iff both are and "
        "their annihilators agree on one maximal ideal",
        _run_direct_sum_noncyclic,
        "abelian pairs",
    ),
    "tdir2": (
        "for two cyclic summands: pseudo-simple iff both are simple and the "
        "annihilators are maximal and either equal, or distinct with every "
        "mixed nonzero pair generating",
        _run_direct_sum_cyclic,
        "cyclic pairs",
    ),
    "ttri": (
        "Z_n x| Z_m is a pseudo-simple ring iff Z_n is local with unique "
        "maximal ideal mZ_n and every nonzero nonunit has that annihilator",
        _run_trivial_extension,
        "trivial extensions",
    ),
    "t5-uniserial": (
        "uniserial modules give T5 class spaces",
        _run_t5_uniserial,
        "abelian",
    ),
    "completely-normal": (
        "pseudo-simple iff the class space is (completely) normal",
        _run_completely_normal,
        "abelian",
    ),
    "bezout-star": (
        "in a Bezout module with the joint-containment condition, every "
        "nongenerator's cyclic submodule is maximal",
        _run_bezout_star,
        "abelian",
    ),
    "gcd-intersection": (
        "when a gcd of two nongenerators stays a nongenerator, its basic open "
        "is the intersection of theirs",
        _run_gcd_intersection,
        "abelian",
    ),
    "tcom-symbolic": (
        "compactness versus simple-submodule counts on the built-in infinite "
        "families (documented discrepancy for the torsion-free ones)",
        _run_tcom_symbolic,
        "symbolic",
    ),
}

THEOREM_IDS = tuple(_REGISTRY)

DEFAULT_LIMITS = {
    "pseudoZn": 1000,
    "fgPS": 200,
    "main-equivalence": 200,
    "hausdorff-star": 200,
    "nested-uniserial": 200,
    "isolated-irreducible": 200,
    "tcom-counts": 512,
    "tfinitelycog": 200,
    "homo-stability": 100,
    "cfac": 100,
    "tdir": 256,
    "tdir2": 256,
    "ttri": 2000,
    "t5-uniserial": 200,
    "completely-normal": 200,
    "bezout-star": 64,
    "gcd-intersection": 100,
    "tcom-symbolic": 100,
}


def registry() -> dict[str, str]:
    """theorem_id -> statement, emitted in every report header."""
    return {tid: entry[0] for tid, entry in _REGISTRY.items()}


def verify(theorem_id: str, limit: int | None = None, bounds: Bounds = Bounds()) -> SweepReport:
    if theorem_id not in _REGISTRY:
        raise UnknownTheorem(theorem_id)
    statement, runner, family = _REGISTRY[theorem_id]
    limit = limit if limit is not None else DEFAULT_LIMITS[theorem_id]
    report = SweepReport(theorem_id, statement, f"{family} (limit {limit})")
    start = time.perf_counter()
    runner(report, limit, bounds)
    report.wall_time_s = time.perf_counter() - start
    return report


def verify_stability(kind: str, limit: int, bounds: Bounds = Bounds()) -> SweepReport:
    """Stability sweeps shared with the registered ids."""
    mapping = {
        "submodule": "homo-stability",
        "quotient": "homo-stability",
        "direct_sum_noncyclic": "tdir",
        "direct_sum_cyclic": "tdir2",
    }
    if kind not in mapping:
        raise ValueError(f"unknown stability kind {kind!r}")
    return verify(mapping[kind], limit, bounds)


def verify_many(theorem_ids, limits=None, bounds: Bounds = Bounds()):
    limits = limits or {}
    return [verify(tid, limits.get(tid), bounds) for tid in theorem_ids]
