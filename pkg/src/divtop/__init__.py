"""Divisor topology of modules: associate-class spaces of nonzero
nongenerators, their topological properties, and an exhaustive
theorem-checking harness over finite and symbolic module families."""

from .families import (
    IntegersOverZ,
    Prufer,
    RationalsOverZ,
    baire_and_density_report,
    compactness_verdict_symbolic,
    divides_symbolic,
    noetherian_report,
    refute_finite_subcover,
    t5_refutation_witness_integers,
    window_snapshot,
)
from .harness import (
    Bounds,
    SweepReport,
    TheoremCase,
    enumerate_family,
    registry,
    verify,
    verify_stability,
)
from .modules import (
    BoundExceeded,
    DirectSum,
    Element,
    ExplicitIdeal,
    FieldIdeal,
    IntegerIdeal,
    IntegerRing,
    ModuleDescriptor,
    NotInSharp,
    PrimeField,
    QuotientModule,
    Submodule,
    annihilator,
    are_associates,
    canonical_representative,
    class_representatives,
    cyclic_submodule,
    direct_sum,
    divides,
    gcd_elements,
    is_bezout,
    is_essential,
    is_finitely_cogenerated,
    is_irreducible_on_sharp,
    is_maximal_ideal,
    is_multiplication,
    is_pseudo_simple,
    is_uniserial,
    lcm_elements,
    quotient_module,
    satisfies_star,
    sharp_elements,
    simple_submodules,
    socle,
    submodules_all,
)
from .topology import (
    ClassId,
    PropertyVerdict,
    TopologySnapshot,
    build_topology,
    check_connectivity,
    check_nested,
    check_separation,
    closure_of_class,
    compactness_verdict,
    export_topology,
    isolated_points,
    verify_alexandrov_and_minimal_nbhd,
)
from .trivext import (
    InvalidPair,
    TrivialExtensionRing,
    is_pseudo_simple_ring,
    local_criterion,
    trivial_extension_ring,
)

__version__ = "0.1.0"
