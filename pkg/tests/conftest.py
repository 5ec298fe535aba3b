"""Shared oracles and fixtures.

Everything here is deliberately naive: dense lists, full subset scans and
permutation searches, so the tests never check the library against itself.
"""
import random
import sys
from fractions import Fraction
from itertools import combinations
from pathlib import Path

import pytest

from uberhom.graphs import Graph, parse_graph6
from uberhom.linalg import QQ, GF2, Field, SparseMatrix
from uberhom.morse import MorseMatching, is_acyclic

DATA = Path(__file__).parent / "data"


def catalogue(n):
    """All graphs on ``n`` vertices up to isomorphism (stored graph6)."""
    return [parse_graph6(s) for s in (DATA / f"graphs{n}.g6").read_text().split()]


def connected_catalogue(max_n):
    return [g for n in range(1, max_n + 1) for g in catalogue(n) if g.is_connected()]


# --- dense elimination --------------------------------------------------------

def dense_rank(rows, field: Field = GF2):
    """Textbook Gaussian elimination on a list of lists (copy), exact arithmetic."""
    a = [[Fraction(x) if field.kind == "Q" else x % field.p for x in r] for r in rows]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        if field.kind == "Q":
            inv = 1 / a[r][c]
        else:
            inv = pow(int(a[r][c]), -1, field.p)
        a[r] = [x * inv if field.kind == "Q" else (x * inv) % field.p for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                k = a[i][c]
                a[i] = [x - k * y if field.kind == "Q" else (x - k * y) % field.p for x, y in zip(a[i], a[r])]
        r += 1
        if r == m:
            break
    return r


def dense_homology(c):
    """Ranks of a GradedComplex from dense matrices, bypassing the sparse engine."""
    from uberhom.complex import shift, unshift
    out = {}
    for d in c.degrees:
        n = c.size(d)
        if not n:
            continue
        dout = c.differential(d).to_dense()
        prev = unshift(d, c.step)
        din = c.differential(prev).to_dense() if c.size(prev) else []
        r_out = dense_rank(dout, c.field) if dout and dout[0] else 0
        r_in = dense_rank(din, c.field) if din and din[0] else 0
        if n - r_out - r_in:
            out[d] = n - r_out - r_in
    return out


def random_matrix(rng, rows, cols, field, density=0.3):
    ent = []
    for r in range(rows):
        for c in range(cols):
            if rng.random() < density:
                if field.kind == "Q":
                    x = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                elif field.kind == "GF2":
                    x = 1
                else:
                    x = rng.randrange(1, field.p)
                if x:
                    ent.append((r, c, x))
    return SparseMatrix(rows, cols, ent, field)


# --- graph oracles -------------------------------------------------------------

def brute_components(g: Graph, verts):
    """Components of the induced subgraph by plain BFS over vertex lists."""
    left = set(verts)
    comps = []
    while left:
        start = min(left)
        seen, todo = {start}, [start]
        while todo:
            v = todo.pop()
            for u in g.neighbours(v):
                if u in left and u not in seen:
                    seen.add(u)
                    todo.append(u)
        comps.append(tuple(sorted(seen)))
        left -= seen
    return sorted(comps)


def brute_cds(g: Graph):
    """Connected dominating sets by scanning all subsets."""
    out = []
    for k in range(1, g.n + 1):
        for s in combinations(range(g.n), k):
            if len(brute_components(g, s)) != 1:
                continue
            dom = set(s)
            for v in s:
                dom.update(g.neighbours(v))
            if len(dom) == g.n:
                out.append(s)
    return out


def random_complex(rng, field=GF2, max_gens=200):
    """A random simplicial chain complex (as a GradedComplex with step -1)."""
    from uberhom.complex import GradedComplex
    m = rng.randint(3, 8)
    facets = [rng.sample(range(m), rng.randint(1, min(4, m))) for _ in range(rng.randint(1, 6))]
    from uberhom.simplicial import SimplicialComplex
    X = SimplicialComplex(m, facets)
    while len(X) > max_gens:
        facets.pop()
        X = SimplicialComplex(m, facets)
    basis = {d: list(X.simplices[d]) for d in X.simplices}
    diff = {}
    for d in basis:
        if d == 0:
            continue
        idx = {s: i for i, s in enumerate(basis[d - 1])}
        ent = [(idx[s[:p] + s[p + 1:]], j, -1 if p % 2 else 1)
               for j, s in enumerate(basis[d]) for p in range(len(s))]
        diff[d] = SparseMatrix(len(basis[d - 1]), len(basis[d]), ent, field)
    return GradedComplex(basis, diff, field, step=-1)


def grow_matching(c, rng, max_pairs):
    """Randomly grown acyclic matching, re-certified after every accepted pair."""
    edges = []
    for d, mat in c.diff.items():
        for r, k, x in mat.items():
            edges.append(((d, c.basis[d][k]), (d + c.step, c.basis[d + c.step][r])))
    rng.shuffle(edges)
    pairs, used = [], set()
    for a, b in edges:
        if len(pairs) >= max_pairs:
            break
        if a in used or b in used:
            continue
        trial = MorseMatching(pairs + [(a, b)])
        if is_acyclic(c, trial):
            pairs.append((a, b))
            used.update((a, b))
    return MorseMatching(pairs)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "REPORT", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
