import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from endograph.catalog import CLASS_COUNTS, catalog_group, catalog_groups_up_to
from endograph.groups import (AbelianShape, Group, GroupSizeError, UnsupportedError,
                              abelian_shape, are_isomorphic_groups, center, centralizer,
                              euler_phi, factorize, find_isomorphism, generated_subgroup,
                              is_abelian, make_abelian, make_alternating, make_cyclic,
                              make_dihedral, make_direct_product, make_quaternion,
                              make_symmetric, minimal_generating_set, relabel)

import oracles


def test_factorize_and_phi():
    assert factorize(1) == {}
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    for n in range(1, 80):
        assert euler_phi(n) == oracles.phi(n)


def test_shape_canonical_form():
    s = AbelianShape.from_moduli([6, 2, 8])
    assert s == AbelianShape.of([(2, 3, 1), (2, 1, 2), (3, 1, 1)])
    assert s.order == 96
    assert s.primes == (2, 3)
    assert str(AbelianShape(())) == "Z1"
    assert str(AbelianShape.from_moduli([2, 8])) == "Z8xZ2"


def test_cyclic_group_basics():
    g = make_cyclic(6)
    assert g.order == 6
    assert g.elem_order == (1, 6, 3, 2, 3, 6)
    assert g.inverse[1] == 5
    assert g.power(2, 4) == 2
    g.validate()


def test_quaternion_census_and_center():
    q = make_quaternion()
    q.validate()
    assert dict(q.order_census()) == {1: 1, 2: 1, 4: 6}
    assert len(center(q)) == 2
    assert not is_abelian(q)


@pytest.mark.parametrize("maker,order", [
    (lambda: make_dihedral(4), 8), (lambda: make_symmetric(4), 24),
    (lambda: make_alternating(4), 12), (lambda: make_symmetric(1), 1)])
def test_permutation_families_validate(maker, order):
    g = maker()
    g.validate()
    assert g.order == order


def test_table_rejects_non_identity_row():
    with pytest.raises(ValueError):
        Group([[1, 0], [0, 1]], make_cyclic(2).descriptor)


def test_size_cap():
    with pytest.raises(GroupSizeError):
        make_abelian(AbelianShape.from_moduli([2] * 8), cap=128 // 2)


def test_catalog_class_counts():
    groups = catalog_groups_up_to(15)
    assert len(groups) == 28
    counts = [sum(1 for g in groups if g.order == n) for n in range(1, 16)]
    assert counts == [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1]
    assert tuple(counts) == tuple(CLASS_COUNTS)
    assert [g.order for g in catalog_groups_up_to(4)] == [1, 2, 3, 4, 4]


def test_catalog_pairwise_non_isomorphic():
    groups = catalog_groups_up_to(15)
    for g in groups:
        g.validate()
    for g1, g2 in itertools.combinations(groups, 2):
        if g1.order == g2.order:
            assert not are_isomorphic_groups(g1, g2), (g1.name, g2.name)


def test_catalog_bound():
    with pytest.raises(UnsupportedError):
        catalog_groups_up_to(16)


def test_isomorphism_examples():
    assert not are_isomorphic_groups(make_cyclic(4), make_abelian(AbelianShape.from_moduli([2, 2])))
    z6 = make_cyclic(6)
    z2z3 = make_direct_product(make_cyclic(2), make_cyclic(3))
    iso = find_isomorphism(z2z3, z6)
    assert iso is not None
    for a in range(6):
        for b in range(6):
            assert iso[z2z3.mul(a, b)] == z6.mul(iso[a], iso[b])
    assert are_isomorphic_groups(z6, z6)


def test_abelian_shape_detection():
    assert abelian_shape(catalog_group("Z6")) == AbelianShape.from_moduli([6])
    assert abelian_shape(catalog_group("Z2xZ2xZ2")) == AbelianShape.from_moduli([2, 2, 2])
    assert abelian_shape(make_quaternion()) is None


def test_centralizer_s4_transposition():
    s4 = make_symmetric(4)
    idx = {s4.order // len(centralizer(s4, a)) for a in range(s4.order) if s4.elem_order[a] == 2}
    # transpositions have centralizer of order 4, double transpositions of order 8
    assert idx == {6, 3}


def test_generating_sets():
    for g in catalog_groups_up_to(15):
        gens = minimal_generating_set(g)
        assert sorted(generated_subgroup(g, gens)) == list(range(g.order))
        assert len(gens) <= 3


def test_relabel_is_isomorphic():
    d4 = catalog_group("D4")
    h = relabel(d4, [0, 7, 6, 5, 4, 3, 2, 1])
    h.validate()
    assert are_isomorphic_groups(d4, h)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 5), min_size=1, max_size=3))
def test_abelian_construction_matches_oracle(moduli):
    shape = AbelianShape.from_moduli(moduli)
    g = make_abelian(shape)
    elems, mul = oracles.cyclic_product(g.factors)
    assert g.order == len(elems) == int(np.prod(moduli))
    idx = {c: i for i, c in enumerate(g.coords)}
    for a in range(g.order):
        for b in range(g.order):
            assert g.coords[g.mul(a, b)] == mul(g.coords[a], g.coords[b])
        assert g.elem_order[a] == oracles.element_order(elems, mul, g.coords[a])
    assert len(idx) == g.order
