"""The divisor topology on the associate classes of nonzero nongenerators.

A snapshot is the finite class set with the divisibility relation stored as
row bitmasks: bit j of row i means rep_i | rep_j.  Open sets are exactly the
divisor-closed (downward-closed) class sets, so closed sets are up-sets, the
basic open of a class is its column, and the closure of a class is its row.

Every point has a smallest open set (its basic open), which the separation
checks below exploit; each such shortcut's one-line justification sits next
to the code, and exhaustive enumerations re-verify it wherever they fit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .modules import (
    BoundExceeded,
    ModuleDescriptor,
    class_table,
    is_irreducible_on_sharp,
    simple_submodules,
)

DEFAULT_CLASS_BOUND = 16
EXHAUSTIVE_UPSET_CAP = 4096
EXHAUSTIVE_PARTITION_CAP = 3**10


@dataclass(frozen=True)
class ClassId:
    index: int
    representative: object
    label: str

    def __repr__(self):
        return f"[{self.label}]"


@dataclass(frozen=True)
class PropertyVerdict:
    property: str
    holds: bool
    witness: object = None
    note: str | None = None

    def to_json(self):
        out = {"property": self.property, "holds": self.holds}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class TopologySnapshot:
    classes: tuple[ClassId, ...]
    rows: tuple[int, ...]  # bit j of rows[i]: rep_i | rep_j  (closure of i)
    cols: tuple[int, ...]  # bit i of cols[j]: rep_i | rep_j  (basic open of j)
    module: ModuleDescriptor | None = None
    truncated: bool = False
    label: str = ""

    def __post_init__(self):
        k = len(self.classes)
        full = (1 << k) - 1
        for i, row in enumerate(self.rows):
            if not row & (1 << i):
                raise ValueError("divisibility must be reflexive")
            if row & ~full:
                raise ValueError("relation mask out of range")
            for j in _bits(row):
                if self.rows[j] | row != row:
                    raise ValueError("divisibility must be transitive")

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.classes)) - 1

    def open_of(self, i: int) -> frozenset:
        """U_[rep_i]: the classes of divisors of rep_i."""
        return frozenset(_bits(self.cols[i]))

    def closure_mask(self, i: int) -> int:
        return self.rows[i]

    def labels(self, mask_or_set) -> tuple[str, ...]:
        idxs = _bits(mask_or_set) if isinstance(mask_or_set, int) else sorted(mask_or_set)
        return tuple(self.classes[i].label for i in idxs)

    def is_open_mask(self, mask: int) -> bool:
        # open = divisor-closed: contains the basic open of each member
        return all(self.cols[i] | mask == mask for i in _bits(mask))


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def build_topology(M: ModuleDescriptor) -> TopologySnapshot:
    """Snapshot of D(M) for a finite module (empty for a simple module)."""
    table = class_table(M)
    k = len(table)
    orbits = [orbit for _, orbit, _ in table]
    rows = []
    for i in range(k):
        row = 0
        Hi = orbits[i]
        for j in range(k):
            if orbits[j] <= Hi:
                row |= 1 << j
        rows.append(row)
    cols = _columns_from_rows(rows, k)
    classes = tuple(
        ClassId(i, rep, M.element_label(rep)) for i, (rep, _, _) in enumerate(table)
    )
    return TopologySnapshot(classes, tuple(rows), tuple(cols), module=M)


def _columns_from_rows(rows, k):
    cols = [0] * k
    for i, row in enumerate(rows):
        for j in _bits(row):
            cols[j] |= 1 << i
    return cols


def snapshot_from_divides(classes, divides_fn, *, module=None, truncated=False, label=""):
    """Build a snapshot from explicit class objects and a divides predicate."""
    k = len(classes)
    rows = []
    for i in range(k):
        row = 0
        for j in range(k):
            if divides_fn(classes[i].representative, classes[j].representative):
                row |= 1 << j
        rows.append(row)
    cols = _columns_from_rows(rows, k)
    return TopologySnapshot(
        tuple(classes), tuple(rows), tuple(cols), module=module,
        truncated=truncated, label=label,
    )


# --- closures and isolated points ---------------------------------------


def closure_of_class(T: TopologySnapshot, c: int) -> frozenset:
    """Closure of {[c]}: the classes of multiples of rep_c.

    Cross-checked against the generic computation: the complement of the
    largest open set avoiding c.
    """
    direct = T.rows[c]
    avoiding = 0
    for j in range(T.n_classes):
        if not T.cols[j] & (1 << c):
            avoiding |= T.cols[j]
    generic = T.full_mask & ~avoiding
    if direct != generic:
        raise AssertionError("closure computations disagree")
    return frozenset(_bits(direct))


def isolated_points(T: TopologySnapshot) -> frozenset:
    """Classes whose basic open is a singleton.

    For module-backed snapshots this is compared with the irreducibility
    of each representative among the nonzero nongenerators.
    """
    singleton = frozenset(i for i in range(T.n_classes) if T.cols[i] == 1 << i)
    if T.module is not None:
        irr = frozenset(
            i
            for i, cls in enumerate(T.classes)
            if is_irreducible_on_sharp(T.module, cls.representative)
        )
        if irr != singleton:
            raise AssertionError("isolated points do not match irreducibles")
    return singleton


# --- separation axioms ----------------------------------------------------


def _upsets(T: TopologySnapshot, cap: int = EXHAUSTIVE_UPSET_CAP):
    """All closed sets (up-sets) as masks, or None when more than `cap`."""
    sets = {0}
    for i in range(T.n_classes):
        sets |= {s | T.rows[i] for s in sets}
        if len(sets) > cap:
            return None
    return sorted(sets)


def check_separation(
    T: TopologySnapshot, axiom: str, *, class_bound: int = DEFAULT_CLASS_BOUND
) -> PropertyVerdict:
    """Decide one of T0, T1, T2, discrete, T3, T4, T5.

    T3/T4/T5 are brute-force checks over closed sets and raise BoundExceeded
    above the class bound.  Since every point carries a minimal open set,
    "disjoint open supersets of A and B exist" reduces to disjointness of the
    unions of basic opens over A and B; the bounded enumerations below apply
    exactly that test to every qualifying pair of closed (resp. separated)
    sets, and the quadratic reductions must agree with them.
    """
    k = T.n_classes
    name = axiom.upper() if axiom.lower() != "discrete" else "discrete"
    if k == 0:
        return PropertyVerdict(name, True, note="empty space: vacuous")

    if name == "T0":
        for i, j in combinations(range(k), 2):
            both = (1 << i) | (1 << j)
            if T.cols[i] & both == both and T.cols[j] & both == both:
                return PropertyVerdict(name, False, witness=_pair(T, i, j))
        return PropertyVerdict(name, True)

    if name == "T1":
        for i in range(k):
            extra = T.rows[i] & ~(1 << i)
            if extra:
                j = next(_bits(extra))
                return PropertyVerdict(
                    name, False, witness=_pair(T, i, j),
                    note="second class lies in the closure of the first",
                )
        return PropertyVerdict(name, True)

    if name == "T2":
        # minimal neighborhoods: two points have disjoint opens iff their
        # basic opens are disjoint
        for i, j in combinations(range(k), 2):
            common = T.cols[i] & T.cols[j]
            if common:
                c = next(_bits(common))
                return PropertyVerdict(
                    name, False,
                    witness={"pair": _pair(T, i, j), "common": T.classes[c].label},
                )
        return PropertyVerdict(name, True)

    if name == "discrete":
        for i in range(k):
            if T.cols[i] != 1 << i:
                return PropertyVerdict(
                    name, False,
                    witness={"class": T.classes[i].label,
                             "basic_open": T.labels(T.cols[i])},
                )
        return PropertyVerdict(name, True)

    if name in ("T3", "T4", "T5"):
        if k > class_bound:
            raise BoundExceeded(f"{k} classes exceed separation bound {class_bound}")
        return _separation_bruteforce(T, name)

    raise ValueError(f"unknown separation axiom {axiom!r}")


def _pair(T, i, j):
    return (T.classes[i].label, T.classes[j].label)


def _nbhd(T, mask: int) -> int:
    """Union of basic opens over a class set: its smallest open superset."""
    out = 0
    for i in _bits(mask):
        out |= T.cols[i]
    return out


def _separation_bruteforce(T: TopologySnapshot, name: str) -> PropertyVerdict:
    k = T.n_classes
    reduced = _separation_reduced(T, name)
    upsets = _upsets(T)
    note = None
    if name == "T3" and upsets is not None:
        exhaustive = True
        witness = None
        for F in upsets:
            nF = _nbhd(T, F)
            for i in range(k):
                if F & (1 << i):
                    continue
                if T.cols[i] & nF:
                    exhaustive = False
                    witness = {"point": T.classes[i].label, "closed": T.labels(F)}
                    break
            if not exhaustive:
                break
        _agree(reduced, exhaustive, witness, name)
    elif name == "T4" and upsets is not None:
        exhaustive = True
        witness = None
        for F, K in combinations(upsets, 2):
            if F & K or not F or not K:
                continue
            if _nbhd(T, F) & _nbhd(T, K):
                exhaustive = False
                witness = {"closed_pair": (T.labels(F), T.labels(K))}
                break
        _agree(reduced, exhaustive, witness, name)
    elif name == "T5" and 3**k <= EXHAUSTIVE_PARTITION_CAP:
        exhaustive = True
        witness = None
        for A, B in _set_pairs(k):
            clA = _closure_mask(T, A)
            clB = _closure_mask(T, B)
            if A & clB or B & clA:
                continue  # not separated
            if _nbhd(T, A) & _nbhd(T, B):
                exhaustive = False
                witness = {"separated_pair": (T.labels(A), T.labels(B))}
                break
        _agree(reduced, exhaustive, witness, name)
    else:
        note = "pairwise reduction only (enumeration above cap)"
    holds, witness = reduced
    return PropertyVerdict(name, holds, witness=witness, note=note)


def _agree(reduced, exhaustive, witness, name):
    if reduced[0] != exhaustive:
        raise AssertionError(f"{name}: reduction and enumeration disagree")


def _closure_mask(T, mask: int) -> int:
    out = 0
    for i in _bits(mask):
        out |= T.rows[i]
    return out


def _set_pairs(k: int):
    """All (A, B) masks over k points with A, B nonempty and disjoint."""
    def rec(i, A, B):
        if i == k:
            if A and B:
                yield A, B
            return
        yield from rec(i + 1, A, B)
        yield from rec(i + 1, A | (1 << i), B)
        yield from rec(i + 1, A, B | (1 << i))

    yield from rec(0, 0, 0)


def _separation_reduced(T: TopologySnapshot, name: str):
    """Quadratic forms of T3/T4/T5, valid because closed sets are unions of
    point closures and minimal open supersets distribute over those unions."""
    k = T.n_classes
    if name == "T3":
        # point i vs closed set F avoiding i: minimal such F is a closure row
        for i in range(k):
            for j in range(k):
                if T.rows[j] & (1 << i):
                    continue
                if T.cols[i] & _nbhd(T, T.rows[j]):
                    return False, {
                        "point": T.classes[i].label,
                        "closed": T.labels(T.rows[j]),
                    }
        return True, None
    if name == "T4":
        for i, j in combinations(range(k), 2):
            if T.rows[i] & T.rows[j]:
                continue  # their closures meet: no disjoint closed pair here
            if _nbhd(T, T.rows[i]) & _nbhd(T, T.rows[j]):
                return False, {
                    "closed_pair": (T.labels(T.rows[i]), T.labels(T.rows[j]))
                }
        return True, None
    if name == "T5":
        # separated sets shrink to separated singletons
        for i, j in combinations(range(k), 2):
            sep = not (T.rows[i] & (1 << j)) and not (T.rows[j] & (1 << i))
            if sep and T.cols[i] & T.cols[j]:
                return False, {"separated_pair": _pair(T, i, j)}
        return True, None
    raise ValueError(name)


# --- nestedness and connectivity -----------------------------------------


def check_nested(T: TopologySnapshot) -> PropertyVerdict:
    """Opens are totally ordered iff the basic opens are pairwise comparable."""
    for i, j in combinations(range(T.n_classes), 2):
        a, b = T.cols[i], T.cols[j]
        if a | b not in (a, b):
            return PropertyVerdict(
                "nested", False,
                witness={"pair": _pair(T, i, j),
                         "opens": (T.labels(a), T.labels(b))},
            )
    return PropertyVerdict("nested", True)


def check_connectivity(T: TopologySnapshot) -> dict[str, PropertyVerdict]:
    """Connected, path-connected and ultraconnected verdicts.

    Connectedness is component-connectivity of the comparability graph of
    the class preorder; path-connectedness equals connectedness on finite
    spaces (standard fact, noted as derived).  Ultraconnected means every
    two point closures meet, which covers all closed sets since closed sets
    are unions of point closures.
    """
    k = T.n_classes
    if k == 0:
        return {
            "connected": PropertyVerdict(
                "connected", False, note="empty space convention"
            ),
            "path_connected": PropertyVerdict(
                "path_connected", False, note="empty space convention"
            ),
            "ultraconnected": PropertyVerdict(
                "ultraconnected", True, note="empty space: vacuous"
            ),
        }
    adj = [T.rows[i] | T.cols[i] for i in range(k)]
    seen = 1
    frontier = [0]
    while frontier:
        nxt = 0
        for i in frontier:
            nxt |= adj[i]
        new = nxt & ~seen
        seen |= nxt
        frontier = list(_bits(new))
    connected = seen == T.full_mask
    conn_witness = None if connected else {
        "component": T.labels(seen),
        "rest": T.labels(T.full_mask & ~seen),
    }
    ultra = True
    ultra_witness = None
    for i, j in combinations(range(k), 2):
        if not T.rows[i] & T.rows[j]:
            ultra = False
            ultra_witness = {"closures": (T.labels(T.rows[i]), T.labels(T.rows[j]))}
            break
    return {
        "connected": PropertyVerdict("connected", connected, witness=conn_witness),
        "path_connected": PropertyVerdict(
            "path_connected", connected, witness=conn_witness,
            note="equals connectedness on finite spaces (derived fact)",
        ),
        "ultraconnected": PropertyVerdict(
            "ultraconnected", ultra, witness=ultra_witness
        ),
    }


# --- Alexandrov, compactness, Noetherian ----------------------------------


def verify_alexandrov_and_minimal_nbhd(T: TopologySnapshot) -> PropertyVerdict:
    """Intersections of basic opens are open, and the basic open of a class
    is contained in every open set containing the class.

    Within the cap, every open set (down-set) is enumerated; above it the
    pairwise intersections still run and the verdict is noted as sampled.
    """
    k = T.n_classes
    for i, j in combinations(range(k), 2):
        meet = T.cols[i] & T.cols[j]
        if not T.is_open_mask(meet):
            return PropertyVerdict(
                "alexandrov", False,
                witness={"pair": _pair(T, i, j), "intersection": T.labels(meet)},
            )
    downsets = None
    if k <= DEFAULT_CLASS_BOUND:
        downsets = {0}
        for i in range(k):
            downsets |= {s | T.cols[i] for s in downsets}
            if len(downsets) > EXHAUSTIVE_UPSET_CAP:
                downsets = None
                break
    note = None
    if downsets is not None:
        for O in downsets:
            for c in _bits(O):
                if T.cols[c] | O != O:
                    return PropertyVerdict(
                        "alexandrov", False,
                        witness={"open": T.labels(O), "class": T.classes[c].label},
                    )
    else:
        note = "minimal-neighborhood sweep sampled (open-set family above cap)"
    return PropertyVerdict("alexandrov", True, note=note)


def compactness_verdict(T: TopologySnapshot, M: ModuleDescriptor | None = None) -> PropertyVerdict:
    """Finite spaces are compact; additionally counts the minimal cyclic
    submodules (classes with singleton closure) against the module's simple
    submodules and checks that their basic opens cover the space."""
    k = T.n_classes
    minimal = [i for i in range(k) if T.rows[i] == 1 << i]
    cover = 0
    for i in minimal:
        cover |= T.cols[i]
    witness = {
        "minimal_cyclic_count": len(minimal),
        "minimal_classes": [T.classes[i].label for i in minimal],
    }
    if k and cover != T.full_mask:
        raise AssertionError("minimal basic opens fail to cover the class set")
    M = M if M is not None else T.module
    if M is not None:
        simple_count = len(simple_submodules(M))
        witness["simple_submodule_count"] = simple_count
        if k and simple_count != len(minimal):
            raise AssertionError(
                f"minimal-cyclic count {len(minimal)} != simple count {simple_count}"
            )
        if k == 0:
            witness["note"] = "simple module: empty space, counts not compared"
    return PropertyVerdict("compact", True, witness=witness)


# --- export ---------------------------------------------------------------


def hasse_edges(T: TopologySnapshot) -> list[tuple[int, int]]:
    """Transitive reduction of the strict divisibility order on classes."""
    k = T.n_classes
    strict = [T.rows[i] & ~(1 << i) for i in range(k)]
    edges = []
    for i in range(k):
        reach2 = 0
        for j in _bits(strict[i]):
            reach2 |= strict[j]
        for j in _bits(strict[i] & ~reach2):
            edges.append((i, j))
    return edges


def export_topology(T: TopologySnapshot, format: str, verdicts=None) -> bytes:
    """Serialize the snapshot: 'dot' renders the Hasse diagram of the class
    order, 'json' emits the full snapshot (schema documented in docs/)."""
    if format == "dot":
        lines = ["digraph divisor_topology {"]
        for cls in T.classes:
            lines.append(f'  n{cls.index} [label="class:{cls.label}"];')
        for i, j in hasse_edges(T):
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    if format == "json":
        import json

        payload = {
            "schema_version": 1,
            "label": T.label or (T.module.describe() if T.module else ""),
            "truncated": T.truncated,
            "classes": [
                {"index": c.index, "label": c.label} for c in T.classes
            ],
            "relation": [[i, j] for i, j in hasse_edges(T)],
            "basic_opens": {
                c.label: sorted(T.labels(T.cols[c.index])) for c in T.classes
            },
            "verdicts": {
                name: v.to_json() for name, v in (verdicts or {}).items()
            },
        }
        return (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode()
    raise ValueError(f"unknown export format {format!r}")


def standard_verdicts(
    T: TopologySnapshot, *, class_bound: int = DEFAULT_CLASS_BOUND
) -> dict[str, PropertyVerdict]:
    """The battery of checks used by exports and the CLI."""
    out: dict[str, PropertyVerdict] = {}
    for axiom in ("T0", "T1", "T2", "discrete"):
        out[axiom] = check_separation(T, axiom)
    for axiom in ("T3", "T4", "T5"):
        try:
            out[axiom] = check_separation(T, axiom, class_bound=class_bound)
        except BoundExceeded as exc:
            out[axiom] = PropertyVerdict(axiom, False, note=f"skipped: {exc}")
    out["nested"] = check_nested(T)
    out.update(check_connectivity(T))
    out["alexandrov"] = verify_alexandrov_and_minimal_nbhd(T)
    out["compact"] = compactness_verdict(T)
    return out
