import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from uberhom.graphs import (FAMILIES, FamilySpec, Graph, GraphFormatError, InvalidSpecError, cartesian_product,
                            complete, cone, cube, cycle, emit_edge_list, emit_graph6, gem, generate,
                            generalized_petersen, is_isomorphic, neck_stretch, parse_edge_list, parse_graph6, path,
                            petersen, wheel)


def test_generate_examples():
    c4 = generate(FamilySpec("cycle", (4,)))
    assert c4.n == 4 and len(c4.edges) == 4 and set(c4.degrees()) == {2}
    p = generate(FamilySpec("generalized_petersen", (5, 2)))
    assert p.n == 10 and len(p.edges) == 15 and set(p.degrees()) == {3}
    assert is_isomorphic(p, petersen())
    assert nx.is_isomorphic(nx.Graph(p.edges), nx.petersen_graph())
    q3 = generate(FamilySpec("cube", (3,)))
    assert (q3.n, len(q3.edges)) == (8, 12)


def test_generate_errors():
    for spec in [FamilySpec("cycle", (2,)), FamilySpec("wheel", (3,)), FamilySpec("nope", ()),
                 FamilySpec("cycle", ()), FamilySpec("complete", ("x",)), FamilySpec("generalized_petersen", (5, 3))]:
        with pytest.raises(InvalidSpecError):
            generate(spec)


def test_family_conventions():
    w = wheel(6)
    assert w.n == 6 and w.degree(5) == 5 and all(w.degree(v) == 3 for v in range(5))
    q = cube(3)
    assert all(bin(u ^ v).count("1") == 1 for u, v in q.edges)
    gp = generalized_petersen(6, 2)
    assert all(gp.has_edge(i, (i + 1) % 6) for i in range(6))
    assert gp.n == 12 and len(gp.edges) == 18 and set(gp.degrees()) == {3}


def test_all_families_connected():
    rng = random.Random(0)
    for name, (fn, arity) in FAMILIES.items():
        params = {0: (), 1: (5,), 2: (5, 2)}[arity]
        g = generate(FamilySpec(name, params, seed=rng.randrange(100)))
        assert g.is_connected(), name


def test_products():
    assert is_isomorphic(cartesian_product(cycle(4), path(2)), cube(3))
    g = petersen()
    assert cartesian_product(complete(1), g) == g
    assert is_isomorphic(cartesian_product(path(2), path(2)), cycle(4))
    for n in range(1, 5):
        it = path(2)
        for _ in range(n - 1):
            it = cartesian_product(it, path(2))
        # row-major numbering of the iterated product is already binary order
        assert it == cube(n)
        assert nx.is_isomorphic(nx.Graph(it.edges), nx.hypercube_graph(n))


def test_cone():
    for n in range(3, 8):
        assert is_isomorphic(cone(cycle(n)), wheel(n + 1))
        assert cone(complete(n)) == complete(n + 1)
    assert is_isomorphic(cone(path(4)), gem())


def test_neck_stretch():
    k1 = complete(1)
    assert neck_stretch(k1, 0, k1, 0, 0) == complete(2)
    assert is_isomorphic(neck_stretch(k1, 0, k1, 0, 1), path(3))
    with pytest.raises(InvalidSpecError):
        neck_stretch(k1, 1, k1, 0, 0)


def test_graph6_examples():
    g = parse_graph6("D?{")
    assert g.n == 5 and g.edges == ((0, 4), (1, 4), (2, 4), (3, 4))
    assert emit_graph6(g) == "D?{"
    assert emit_graph6(complete(1)) == "@"
    with pytest.raises(GraphFormatError):
        parse_graph6("")
    with pytest.raises(GraphFormatError) as e:
        parse_graph6("D?\x10")
    assert e.value.offset == 2
    with pytest.raises(GraphFormatError):
        parse_graph6("D?")


def test_graph6_against_networkx():
    for seed in range(30):
        rng = random.Random(seed)
        n = rng.randint(1, 70)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.2])
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(g.edges)
        want = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert emit_graph6(g) == want
        assert parse_graph6(want) == g


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 30).flatmap(lambda n: st.tuples(
    st.just(n), st.sets(st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0)))))))
def test_graph6_round_trip(data):
    n, pairs = data
    g = Graph(n, [(u, v) for u, v in pairs if u != v])
    s = emit_graph6(g)
    assert parse_graph6(s) == g
    assert emit_graph6(parse_graph6(s)) == s


def test_edge_list_round_trip():
    g = petersen()
    assert parse_edge_list(emit_edge_list(g)) == g
    with pytest.raises(GraphFormatError):
        parse_edge_list("3\n0 1\n1 x\n")
    with pytest.raises(GraphFormatError):
        parse_edge_list("2\n0 0\n")
