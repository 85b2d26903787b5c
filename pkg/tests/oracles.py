"""Independent brute-force oracles for the test suite.

Everything in here recomputes results from first principles (explicit open
families, scalar sweeps) without touching the production shortcuts, so the
main code paths can be checked against textbook definitions on small inputs.
"""

from __future__ import annotations

from itertools import product


def oracle_scalar_multiples(M, a):
    """{r * a : r in Z} by sweeping scalars 0..order-1."""
    return frozenset(M.scalar(r, a) for r in range(M.order))


def oracle_divides(M, a, b):
    return any(M.scalar(r, a) == b for r in range(M.order))


def oracle_sharp(M):
    zero = M.zero
    full = frozenset(M.elements())
    return [
        m
        for m in M.elements()
        if m != zero and oracle_scalar_multiples(M, m) != full
    ]


def oracle_subgroups(M):
    """All subsets closed under addition and containing zero (order <= ~16)."""
    elems = list(M.elements())
    out = []
    for bits in product((0, 1), repeat=len(elems)):
        subset = frozenset(e for e, b in zip(elems, bits) if b)
        if M.zero not in subset:
            continue
        if all(M.add(a, b) in subset for a in subset for b in subset):
            out.append(subset)
    return out


# --- explicit finite topologies ------------------------------------------


def all_opens(T):
    """Every open set of the snapshot as a mask: all unions of basic opens."""
    opens = {0}
    frontier = {0}
    basics = [T.cols[i] for i in range(T.n_classes)]
    while frontier:
        new = set()
        for o in frontier:
            for b in basics:
                u = o | b
                if u not in opens:
                    opens.add(u)
                    new.add(u)
        frontier = new
    return sorted(opens)


def _masks_disjoint_pair(opens, need_a, need_b):
    for o1 in opens:
        if o1 & need_a != need_a:
            continue
        for o2 in opens:
            if o2 & need_b == need_b and not o1 & o2:
                return True
    return False


def oracle_separation(T, axiom):
    """Textbook separation checks quantifying over the full open family."""
    k = T.n_classes
    opens = all_opens(T)
    full = T.full_mask
    closeds = [full & ~o for o in opens]
    points = range(k)
    if axiom == "T0":
        return all(
            any(bool(o & (1 << i)) != bool(o & (1 << j)) for o in opens)
            for i in points
            for j in points
            if i < j
        )
    if axiom == "T1":
        return all(
            any(o & (1 << i) and not o & (1 << j) for o in opens)
            for i in points
            for j in points
            if i != j
        )
    if axiom == "T2":
        return all(
            _masks_disjoint_pair(opens, 1 << i, 1 << j)
            for i in points
            for j in points
            if i < j
        )
    if axiom == "discrete":
        return all((1 << i) in opens for i in points)
    if axiom == "T3":
        return all(
            _masks_disjoint_pair(opens, 1 << i, F)
            for F in closeds
            if F
            for i in points
            if not F & (1 << i)
        )
    if axiom == "T4":
        return all(
            _masks_disjoint_pair(opens, F, K)
            for F in closeds
            if F
            for K in closeds
            if K and not F & K
        )
    if axiom == "T5":
        closure = lambda mask: _closure(T, mask)
        for assignment in product((0, 1, 2), repeat=k):
            A = sum(1 << i for i, v in enumerate(assignment) if v == 1)
            B = sum(1 << i for i, v in enumerate(assignment) if v == 2)
            if not A or not B:
                continue
            if A & closure(B) or B & closure(A):
                continue
            if not _masks_disjoint_pair(opens, A, B):
                return False
        return True
    raise ValueError(axiom)


def _closure(T, mask):
    out = 0
    for i in range(T.n_classes):
        if mask & (1 << i):
            out |= T.rows[i]
    return out


def oracle_nested(T):
    opens = all_opens(T)
    return all(o1 | o2 in (o1, o2) for o1 in opens for o2 in opens)


def oracle_connected(T):
    full = T.full_mask
    if full == 0:
        return False
    return not any(
        o1 and o2 and not o1 & o2 and (o1 | o2) == full
        for o1 in all_opens(T)
        for o2 in all_opens(T)
    )


def oracle_ultraconnected(T):
    opens = all_opens(T)
    full = T.full_mask
    closeds = [full & ~o for o in opens]
    return all(
        F & K for F in closeds if F for K in closeds if K
    )
