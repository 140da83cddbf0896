"""The sixteen acceptance criteria, each with its runtime bound.

A summary line per criterion is printed at the end of the pytest run.
Caches are cleared before each criterion so timings are cold.
"""

import itertools
import random

import networkx as nx
import numpy as np
import pytest

from endograph import catalog, graphs as gk, verify
from endograph.builders import GraphKind, build, clique_count_formula, edge_count_formula
from endograph.groups import AbelianShape, centralizer, make_abelian, make_cyclic, make_symmetric
from endograph.morphisms import (abelian_arc_fast, abelian_arc_matrix, endo_arc_matrix,
                                 enumerate_automorphisms, enumerate_endomorphisms)
from endograph.verify import VerifyConfig

import oracles

acceptance = pytest.mark.acceptance


@pytest.fixture(autouse=True)
def cold_caches():
    for fn in (catalog._all_groups, verify._abelian_group, verify._cyclic,
               verify._quaternion, verify._s4):
        fn.cache_clear()
    yield


def _passes(check):
    assert check.status == "pass", check.witnesses[:3]
    return check


@acceptance(1, "End(Z6) = 6 and Aut(Z6) = 2", 1)
def test_ac01_z6_counts(budget_timer):
    with budget_timer:
        g = make_cyclic(6)
        assert len(enumerate_endomorphisms(g)) == 6
        assert len(enumerate_automorphisms(g)) == 2


@acceptance(2, "edge-count formula vs brute force, 2 <= n <= 60", 60)
def test_ac02_edge_formula(budget_timer):
    with budget_timer:
        check = _passes(verify.check_edge_formula(VerifyConfig()))
        assert check.groups_checked == 59
        for n, want in ((6, 13), (12, 56)):
            assert build(make_cyclic(n), "endo").edge_count == want == edge_count_formula(n)


@acceptance(3, "maximal-clique count vs multinomial, 2 <= n <= 60; Z6 cliques", 60)
def test_ac03_clique_formula(budget_timer):
    with budget_timer:
        check = _passes(verify.check_clique_formula(VerifyConfig()))
        assert check.groups_checked == 59
        cliques = {frozenset(c) for c in gk.maximal_cliques(build(make_cyclic(6), "endo"))}
        assert cliques == {frozenset({0, 2, 4, 1, 5}), frozenset({0, 3, 1, 5})}
        assert clique_count_formula(6) == 2


@acceptance(4, "Endo and power digraphs of Z_n coincide, n <= 48", 60)
def test_ac04_power_equality(budget_timer):
    with budget_timer:
        check = _passes(verify.check_endo_power_equality(VerifyConfig()))
        assert check.groups_checked == 48


@acceptance(5, "completeness characterization, abelian <= 64; audit <= 16", 300)
def test_ac05_completeness(budget_timer):
    with budget_timer:
        check = _passes(verify.check_completeness(VerifyConfig()))
        assert check.groups_checked == len(verify.abelian_shapes(64)) == 117
        assert "closed form matched enumeration on 25 groups" in check.notes
        z2_4 = make_abelian(AbelianShape.from_moduli([2, 2, 2, 2]))
        monoid = enumerate_endomorphisms(z2_4)
        assert len(monoid) == 65536
        assert np.array_equal(monoid.arc_matrix, abelian_arc_matrix(z2_4))


@acceptance(6, "divisibility: forward on catalog, biconditional on homocyclic <= 64", 120)
def test_ac06_divisibility(budget_timer):
    with budget_timer:
        _passes(verify.check_divisibility(VerifyConfig()))
        g = make_abelian(AbelianShape.from_moduli([8, 2]))
        a, b = g.coords.index((4, 0)), g.coords.index((0, 1))
        assert g.elem_order[a] == g.elem_order[b] == 2
        assert not enumerate_endomorphisms(g).arc_matrix[a, b]
        assert not abelian_arc_fast([8, 2], (4, 0), (0, 1))


@acceptance(7, "Endo(S4) non-planar; transposition centralizer index 6", 30)
def test_ac07_s4(budget_timer):
    with budget_timer:
        s4 = make_symmetric(4)
        # transpositions are the involutions with centralizer of order 4
        transposition = None
        for x in range(s4.order):
            if s4.elem_order[x] == 2 and len(centralizer(s4, x)) == 4:
                transposition = x
                break
        assert transposition is not None
        assert s4.order // len(centralizer(s4, transposition)) == 6
        assert not gk.is_planar(build(s4, "endo"))
        _passes(verify.check_centralizer_planarity(VerifyConfig()))


@acceptance(8, "abelian <= 32: planar iff order <= 4; base graphs K2 K4 K3 K4", 120)
def test_ac08_planarity(budget_timer):
    with budget_timer:
        check = _passes(verify.check_planarity_characterization(VerifyConfig()))
        assert [w["observed"] for w in check.witnesses] == [
            "Endo(Z2) = K2", "Endo(Z2xZ2) = K4", "Endo(Z3) = K3", "Endo(Z4) = K4"]


@acceptance(9, "girth 3 unless Z2; bipartite iff tree iff Z2 (catalog)", 120)
def test_ac09_girth(budget_timer):
    with budget_timer:
        check = _passes(verify.check_girth_bipartite_tree(VerifyConfig()))
        assert check.groups_checked == 27


@acceptance(10, "identity-deleted digraph: three predicates agree (catalog)", 120)
def test_ac10_identity_deleted(budget_timer):
    with budget_timer:
        check = _passes(verify.check_identity_deleted_equivalence(VerifyConfig()))
        assert check.groups_checked == 26


@acceptance(11, "abelian <= 32: strongly connected G* iff elementary abelian", 120)
def test_ac11_elementary(budget_timer):
    with budget_timer:
        check = _passes(verify.check_elementary_abelian(VerifyConfig()))
        assert check.groups_checked == len(verify.abelian_shapes(32)) - 1


@acceptance(12, "Endo(G*) is a tree exactly for Z2 and Z3", 60)
def test_ac12_tree(budget_timer):
    with budget_timer:
        _passes(verify.check_identity_deleted_tree(VerifyConfig()))
        trees = [g.name for g in catalog.catalog_groups_up_to(15)
                 if gk.is_tree(build(g, "endo", delete_identity=True))]
        assert trees == ["Z2", "Z3"]


@acceptance(13, "Auto(G) = complete graphs on orbits, e isolated, Auto within Endo", 120)
def test_ac13_auto(budget_timer):
    with budget_timer:
        check = _passes(verify.check_auto_structure(VerifyConfig()))
        assert check.groups_checked == 28


@acceptance(14, "single point basis: abelian <= 32 and Q8", 60)
def test_ac14_point_basis(budget_timer):
    with budget_timer:
        check = _passes(verify.check_point_basis(VerifyConfig()))
        assert check.groups_checked == len(verify.abelian_shapes(32)) + 1


@acceptance(15, "conjecture hunt completes, reports findings, never flips verdict", 180)
def test_ac15_hunt(budget_timer):
    with budget_timer:
        hunt = verify.hunt_converse_counterexample(VerifyConfig())
        assert not hunt.asserting
        observed = [w["observed"] for w in hunt.witnesses]
        assert "Endo(Z4) ~ Endo(Z2xZ2); directed graphs differ" in observed
        assert "25 non-isomorphic equal-order pairs compared" in hunt.notes[0]
        z4 = build(make_cyclic(4), GraphKind.ENDO_DIRECTED)
        klein = build(make_abelian(AbelianShape.from_moduli([2, 2])), GraphKind.ENDO_DIRECTED)
        assert not gk.digraphs_isomorphic(z4, klein)
        report = verify.VerificationReport([hunt], {})
        assert report.verdict == "pass"


@acceptance(16, "property suite: arc oracles, transitivity, divisibility, graph oracles", 300)
def test_ac16_properties(budget_timer):
    with budget_timer:
        # closed form against exhaustive enumeration and the brute-force oracle
        for shape in verify.abelian_shapes(16):
            g = make_abelian(shape)
            assert np.array_equal(enumerate_endomorphisms(g).arc_matrix, abelian_arc_matrix(g))
            if g.order <= 9:
                elems, mul = oracles.cyclic_product(g.factors)
                units = [tuple(int(i == k) for i in range(len(g.factors)))
                         for k in range(len(g.factors))]
                arcs = oracles.endo_arcs(elems, mul, units)
                got = {(g.coords[a], g.coords[b]) for a, b in zip(*np.nonzero(abelian_arc_matrix(g)))}
                assert got == arcs
        # transitivity and order divisibility of arcs
        fleet = catalog.catalog_groups_up_to(15) + verify.abelian_fleet(32)
        for g in fleet:
            arcs, _ = endo_arc_matrix(g)
            o = np.array(g.elem_order)
            assert not (arcs & (o[:, None] % o[None, :] != 0)).any(), g.name
            c = (arcs | np.eye(g.order, dtype=bool)).astype(np.int64)
            assert np.array_equal((c @ c) > 0, c > 0), g.name
        # graph algorithms against exhaustive oracles on <= 12 vertices
        rnd = random.Random(2024)
        for _ in range(150):
            n = rnd.randint(0, 12)
            p = rnd.random()
            edges = [e for e in itertools.combinations(range(n), 2) if rnd.random() < p]
            g = gk.SimpleGraph.from_edges(n, edges)
            assert {frozenset(q) for q in gk.maximal_cliques(g)} == oracles.maximal_cliques(n, edges)
            assert gk.is_bipartite(g) == oracles.is_bipartite(n, edges)
            h = nx.Graph(edges)
            h.add_nodes_from(range(n))
            assert gk.is_planar(g) == nx.check_planarity(h)[0]
            if n <= 8:
                assert gk.girth(g) == oracles.girth(n, edges)
            m = rnd.randint(0, 8)
            arcs = [(a, b) for a in range(m) for b in range(m) if a != b and rnd.random() < p]
            d = gk.Digraph.from_arcs(m, arcs)
            assert gk.is_strongly_connected(d) == oracles.strongly_connected(m, arcs)
            assert len(gk.minimum_point_basis(d)) == oracles.point_basis_size(m, arcs)
            assert gk.has_hamiltonian_cycle(d) == oracles.hamiltonian_digraph(m, arcs)
            if m <= 6:
                perm = list(range(m))
                rnd.shuffle(perm)
                other = [(perm[a], perm[b]) for a, b in arcs]
                if other and rnd.random() < 0.5:
                    other = other[1:]
                e = gk.Digraph.from_arcs(m, other)
                assert gk.digraphs_isomorphic(d, e) == oracles.isomorphic(m, arcs, m, other, True)
