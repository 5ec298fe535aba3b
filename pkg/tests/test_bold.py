import math
import random

import pytest

from conftest import brute_cds, brute_components, catalogue
from uberhom.bold import (BoldGenerator, IntPolynomial, TooLargeError, bold_complex, bold_generator_count_euler,
                          bold_homology, certify_retraction, components, connected_domination_number,
                          connected_domination_polynomial, connected_dominating_sets, dominating_complex,
                          domination_counts_dense, domination_polynomial, euler_check, retraction_matching)
from uberhom.complex import homology, validate
from uberhom.graphs import (Graph, complete, complete_bipartite, cone, cycle, disjoint_union, neck_stretch, path,
                            petersen, random_connected, random_graph, random_tree, tuple_to_mask)
from uberhom.linalg import GF, GF2, QQ
from uberhom.simplicial import Colouring

# a..g = 0..6 as drawn; colouring a b c f g = 1, d e = 0
FIG4 = Graph(7, [(0, 1), (0, 2), (0, 3), (0, 4), (2, 1), (2, 4), (5, 4), (5, 3), (6, 4), (5, 6)])
FIG4_EPS = Colouring((1, 1, 1, 0, 0, 1, 1))

PETERSEN_DC = (0, 0, 0, 0, 10, 72, 135, 110, 45, 10, 1)


def test_components_examples():
    g = cycle(5)
    assert components(g, Colouring.zeros(5)) == []
    assert components(g, Colouring.ones(5)) == [(0, 1, 2, 3, 4)]
    assert components(FIG4, FIG4_EPS) == [(0, 1, 2), (5, 6)]


def test_components_against_bfs():
    rng = random.Random(0)
    for seed in range(20):
        g = random_graph(8, 0.3, seed)
        for _ in range(20):
            eps = rng.randrange(1 << 8)
            verts = [v for v in range(8) if eps >> v & 1]
            assert components(g, eps) == brute_components(g, verts)


def test_bold_complex_examples():
    k1 = bold_complex(complete(1))
    assert {d: len(b) for d, b in k1.basis.items()} == {1: 1}
    k3 = bold_complex(complete(3))
    assert [len(k3.basis[d]) for d in (1, 2, 3)] == [3, 3, 1]
    assert homology(k3).nonzero() == {1: 1}
    # a 4-vertex graph in which v1 and v4 are not adjacent
    g = Graph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    eps = tuple_to_mask((0, 3))
    assert [x for x in bold_complex(g).basis[2] if x.colouring == eps] == [
        BoldGenerator(eps, 1), BoldGenerator(eps, 8)]


@pytest.mark.parametrize("field", [GF2, GF(3), QQ], ids=str)
def test_d_squared(field):
    for seed in range(10):
        assert validate(bold_complex(random_graph(6, 0.4, seed), field))


def test_bold_homology_examples():
    assert bold_homology(cycle(5)).nonzero() == {3: 1}
    assert bold_homology(complete_bipartite(3, 3)).nonzero() == {2: 1}
    for seed in range(10):
        assert bold_homology(random_tree(3 + seed, seed)).is_zero()


def test_cds_examples():
    for n in range(1, 6):
        assert len(list(connected_dominating_sets(complete(n)))) == 2 ** n - 1
    assert list(connected_dominating_sets(cycle(4))) == brute_cds(cycle(4))
    assert [len(s) for s in connected_dominating_sets(cycle(4))] == [2] * 4 + [3] * 4 + [4]
    assert list(connected_dominating_sets(Graph(2))) == []


def test_cds_against_brute_force():
    for n in range(1, 7):
        for g in catalogue(n):
            assert list(connected_dominating_sets(g)) == brute_cds(g)


def test_polynomial_examples():
    assert connected_domination_polynomial(petersen()).coeffs == PETERSEN_DC
    for n in range(1, 7):
        want = IntPolynomial(tuple(math.comb(n, k) if k else 0 for k in range(n + 1)))
        assert connected_domination_polynomial(complete(n)) == want
    assert connected_domination_polynomial(cycle(4)).coeffs == (0, 0, 4, 4, 1)
    assert domination_polynomial(complete(1)).coeffs == (0, 1)
    assert domination_polynomial(complete(2)).coeffs == (0, 2, 1)
    assert domination_polynomial(cycle(4)).coeffs == (0, 0, 6, 4, 1)
    assert str(connected_domination_polynomial(cycle(4))) == "x^4 + 4x^3 + 4x^2"


def test_dense_scan_agrees_with_enumeration():
    for seed in range(15):
        g = random_graph(9, 0.35, seed)
        d, dc = domination_counts_dense(g)
        assert IntPolynomial.from_counts(d) == domination_polynomial(g)
        assert IntPolynomial.from_counts(dc) == connected_domination_polynomial(g)
        d2, dc2 = domination_counts_dense(g, chunk_bits=4)
        assert (d2, dc2) == (d, dc)


def test_dominating_complex_examples():
    l3 = dominating_complex(path(3))
    assert [[x.vertices() for x in l3.basis[k]] for k in (1, 2, 3)] == [[(1,)], [(0, 1), (1, 2)], [(0, 1, 2)]]
    assert homology(l3).is_zero()
    c4 = dominating_complex(cycle(4))
    assert [len(c4.basis[k]) for k in (1, 2, 3, 4)] == [0, 4, 4, 1]
    assert homology(c4).nonzero() == {2: 1}
    assert [len(b) for b in dominating_complex(complete(1)).basis.values()] == [1]


def test_dominating_complex_is_subcomplex():
    for seed in range(8):
        g = random_connected(6, 0.35, seed)
        ch, dh = bold_complex(g, GF(3)), dominating_complex(g, GF(3))
        for k in dh.basis:
            for x in dh.basis[k]:
                for y in dh.basis.get(k + 1, []):
                    assert dh.coefficient(k, x, y) == ch.coefficient(k, x, y)


def test_retraction_examples():
    assert len(retraction_matching(complete(5))) == 0
    g = path(3)
    c = bold_complex(g)
    m = retraction_matching(g)
    crit = sorted(x.vertices() for b in m.critical(c).values() for x in b)
    assert crit == [(0, 1), (0, 1, 2), (1,), (1, 2)]
    assert certify_retraction(g, c, m)


def test_retraction_critical_set_small():
    for n in range(1, 6):
        for g in catalogue(n):
            c = bold_complex(g)
            m = retraction_matching(g)
            crit = {k: sorted(v) for k, v in m.critical(c).items()}
            dh = dominating_complex(g)
            assert crit == {k: sorted(v) for k, v in dh.basis.items()}


def test_euler_examples():
    assert euler_check(petersen()) == {"chi": -1, "dc_at_minus1": -1, "chi_generators": -1, "pass": True}
    assert euler_check(cycle(6))["chi"] == 1 and euler_check(cycle(6))["pass"]


def test_structural_small():
    for n in range(1, 6):
        for g in catalogue(n):
            h = bold_homology(g, via="ch")
            assert h[0] == 0
            if not g.is_connected():
                assert h.is_zero()
                continue
            assert (h[1] != 0) == g.is_complete()
            gc = connected_domination_number(g)
            assert all(gc <= d <= n for d in h.nonzero())


def test_cone_and_cycles():
    for n in range(3, 10):
        assert bold_homology(cycle(n)).nonzero() == {n - 2: 1}
    for seed in range(5):
        g = random_connected(5, 0.4, seed)
        assert bold_homology(cone(g)).nonzero() == bold_homology(g).nonzero()


def test_neck_stretch_shift():
    k3 = complete(3)
    base = bold_homology(neck_stretch(k3, 0, k3, 0, 0)).nonzero()
    for j in range(1, 4):
        got = bold_homology(neck_stretch(k3, 0, k3, 0, j)).nonzero()
        assert got == {d + j: r for d, r in base.items()}


def test_disconnected_routes_to_full_complex():
    g = disjoint_union(cycle(3), cycle(4))
    assert bold_homology(g).is_zero()
    assert list(connected_dominating_sets(g)) == []


def test_size_guard():
    with pytest.raises(TooLargeError):
        bold_complex(path(29))
    with pytest.raises(TooLargeError):
        list(connected_dominating_sets(path(29)))


def test_generator_count_euler():
    for seed in range(5):
        g = random_connected(7, 0.4, seed)
        assert bold_generator_count_euler(g) == homology(bold_complex(g)).euler()


def test_via_both():
    assert bold_homology(petersen(), via="both").nonzero() == {5: 1}
    with pytest.raises(ValueError):
        bold_homology(petersen(), via="xx")
