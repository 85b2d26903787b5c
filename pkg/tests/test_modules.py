"""Element-level operations against frozen values and brute-force oracles."""

import pytest

from divtop.modules import (
    ModuleDescriptor,
    annihilator,
    are_associates,
    canonical_representative,
    cyclic_orbit,
    cyclic_submodule,
    divides,
    gcd_elements,
    lcm_elements,
    sharp_elements,
    IntegerIdeal,
    FieldIdeal,
    is_maximal_ideal,
    IntegerRing,
    PrimeField,
)

from oracles import oracle_divides, oracle_scalar_multiples, oracle_sharp

Z6 = ModuleDescriptor.cyclic(6)
Z12 = ModuleDescriptor.cyclic(12)
V22 = ModuleDescriptor.abelian([(2, 1), (2, 1)])


def ints(M, elems):
    return sorted(M.to_int(x) for x in elems)


def test_descriptor_validation():
    with pytest.raises(ValueError):
        ModuleDescriptor.cyclic(1)
    with pytest.raises(ValueError):
        ModuleDescriptor.abelian([(4, 1)])  # 4 is not prime
    with pytest.raises(ValueError):
        ModuleDescriptor.vector_space(6, 2)
    with pytest.raises(ValueError):
        ModuleDescriptor(PrimeField(3), ((3, 2),))


def test_sharp_elements_frozen():
    assert ints(Z6, sharp_elements(Z6)) == [2, 3, 4]
    assert ints(Z12, sharp_elements(Z12)) == [2, 3, 4, 6, 8, 9, 10]
    # simple module: no nonzero nongenerators
    assert sharp_elements(ModuleDescriptor.cyclic(7)) == ()
    # noncyclic: everything nonzero is sharp
    assert len(sharp_elements(V22)) == 3


def test_sharp_matches_oracle():
    for M in (Z6, Z12, V22, ModuleDescriptor.abelian([(2, 2), (2, 1)])):
        assert list(sharp_elements(M)) == sorted(oracle_sharp(M), key=M.element_key)


def test_cyclic_submodule_frozen():
    assert ints(Z6, cyclic_submodule(Z6, Z6.from_int(2)).elements) == [0, 2, 4]
    assert ints(Z12, cyclic_submodule(Z12, Z12.from_int(8)).elements) == [0, 4, 8]
    assert cyclic_submodule(V22, (1, 1)).elements == frozenset({(0, 0), (1, 1)})


def test_orbits_match_scalar_sweep():
    for M in (Z6, Z12, V22, ModuleDescriptor.vector_space(3, 2)):
        for m in M.elements():
            assert cyclic_orbit(M, m) == oracle_scalar_multiples(M, m)


def test_divides_frozen():
    assert divides(Z12, Z12.from_int(2), Z12.from_int(4))
    assert not divides(Z12, Z12.from_int(4), Z12.from_int(2))
    assert not divides(V22, (1, 0), (0, 1))
    for m in Z12.elements():
        assert divides(Z12, m, m)


def test_divides_matches_oracle():
    for M in (Z6, V22, ModuleDescriptor.cyclic(9)):
        for a in M.elements():
            for b in M.elements():
                assert divides(M, a, b) == oracle_divides(M, a, b)


def test_associates():
    assert are_associates(Z12, Z12.from_int(2), Z12.from_int(10))
    assert not are_associates(Z12, Z12.from_int(2), Z12.from_int(4))
    assert canonical_representative(Z12, Z12.from_int(10)) == Z12.from_int(2)


def test_annihilators_frozen():
    assert annihilator(Z6, Z6.from_int(2)) == IntegerIdeal(3)
    assert annihilator(Z6, Z6.from_int(4)) == IntegerIdeal(3)
    assert annihilator(Z6, Z6.from_int(3)) == IntegerIdeal(2)
    assert annihilator(Z12, Z12.from_int(3)) == IntegerIdeal(4)
    W = ModuleDescriptor.vector_space(5, 2)
    assert annihilator(W, (1, 2)) == FieldIdeal(is_zero=True)
    assert annihilator(W, (0, 0)) == FieldIdeal(is_zero=False)


def test_is_maximal_ideal():
    assert is_maximal_ideal(IntegerRing(), IntegerIdeal(3))
    assert not is_maximal_ideal(IntegerRing(), IntegerIdeal(4))
    assert not is_maximal_ideal(IntegerRing(), IntegerIdeal(0))
    assert not is_maximal_ideal(IntegerRing(), IntegerIdeal(1))
    assert is_maximal_ideal(PrimeField(5), FieldIdeal(is_zero=True))
    assert not is_maximal_ideal(PrimeField(5), FieldIdeal(is_zero=False))


def test_gcd_frozen():
    g = gcd_elements(Z12, Z12.from_int(4), Z12.from_int(6))
    assert Z12.to_int(g) == 2
    # idempotence up to associates
    for m in sharp_elements(Z12):
        g = gcd_elements(Z12, m, m)
        assert are_associates(Z12, g, m)
    # no element of Z2^2 divides both basis vectors
    assert gcd_elements(V22, (1, 0), (0, 1)) is None


def test_gcd_divides_both_and_is_greatest():
    for M in (Z12, ModuleDescriptor.cyclic(18)):
        elems = list(M.elements())
        for a in elems:
            for b in elems:
                g = gcd_elements(M, a, b)
                if g is None:
                    continue
                assert divides(M, g, a) and divides(M, g, b)
                for c in elems:
                    if divides(M, c, a) and divides(M, c, b):
                        assert divides(M, c, g)


def test_lcm():
    l = lcm_elements(Z12, Z12.from_int(4), Z12.from_int(6))
    assert l is not None and Z12.to_int(l) == 0  # R4 ∩ R6 = {0}
    l = lcm_elements(Z12, Z12.from_int(2), Z12.from_int(4))
    assert are_associates(Z12, l, Z12.from_int(4))


def test_element_labels():
    assert Z12.element_label(Z12.from_int(10)) == "10"
    assert V22.element_label((1, 0)) == "(1,0)"
