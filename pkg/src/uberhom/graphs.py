"""Simple graphs, the graph families used throughout, and graph6 I/O.

Vertices are ``0..n-1``.  Vertex subsets are passed around as int bitmasks
(bit ``v`` set iff ``v`` is in the subset), which keeps the exponential
enumerations in :mod:`uberhom.bold` cheap.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple


class InvalidSpecError(ValueError):
    pass


class GraphFormatError(ValueError):
    """Malformed graph6 or edge-list text; ``offset`` locates the bad byte."""

    def __init__(self, msg: str, offset: Optional[int] = None):
        super().__init__(msg if offset is None else f"{msg} (at offset {offset})")
        self.offset = offset


class Graph:
    """Finite simple undirected graph on ``0..n-1``."""

    __slots__ = ("n", "edges", "adj", "_connected")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("negative vertex count")
        self.n = n
        es = set()
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            e = (min(u, v), max(u, v))
            es.add(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.edges: Tuple[Tuple[int, int], ...] = tuple(sorted(es))
        self.adj = adj
        self._connected = None

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def neighbours(self, v: int) -> List[int]:
        return [u for u in range(self.n) if (self.adj[v] >> u) & 1]

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> List[int]:
        return [self.degree(v) for v in range(self.n)]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def closed_neighbourhood(self, mask: int) -> int:
        out = mask
        m = mask
        while m:
            low = m & -m
            out |= self.adj[low.bit_length() - 1]
            m ^= low
        return out

    def is_dominating(self, mask: int) -> bool:
        return self.closed_neighbourhood(mask) == self.full

    def component_of(self, v: int, within: int) -> int:
        """Vertex mask of the component of ``v`` in the subgraph induced by ``within``."""
        comp = 1 << v
        frontier = comp
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = self.adj[low.bit_length() - 1] & within & ~comp
            comp |= new
            frontier |= new
        return comp

    def components_mask(self, within: int) -> List[int]:
        """Components of the induced subgraph on ``within``, ordered by minimum vertex."""
        out = []
        rest = within
        while rest:
            low = rest & -rest
            c = self.component_of(low.bit_length() - 1, within)
            out.append(c)
            rest &= ~c
        return out

    def is_connected_subset(self, mask: int) -> bool:
        if not mask:
            return False
        low = mask & -mask
        return self.component_of(low.bit_length() - 1, mask) == mask

    def is_connected(self) -> bool:
        if self._connected is None:
            self._connected = self.n > 0 and self.is_connected_subset(self.full)
        return self._connected

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def leaves(self) -> List[int]:
        return [v for v in range(self.n) if self.degree(v) == 1]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


def mask_to_tuple(mask: int) -> Tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def tuple_to_mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


# ---------------------------------------------------------------------------
# families


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    """Parts ``0..m-1`` and ``m..m+n-1``."""
    return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidSpecError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """The linear graph L_n on ``n`` vertices."""
    if n < 1:
        raise InvalidSpecError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def wheel(n: int) -> Graph:
    """W_n with ``n`` vertices in total: rim ``0..n-2``, hub ``n-1``."""
    if n < 4:
        raise InvalidSpecError("wheel needs n >= 4 vertices")
    return cone(cycle(n - 1))


def star(n: int) -> Graph:
    """Centre 0 with ``n`` leaves."""
    if n < 1:
        raise InvalidSpecError("star needs n >= 1 leaves")
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def cube(n: int) -> Graph:
    """1-skeleton of the n-cube; vertex ``v`` has binary coordinates ``v``."""
    if n < 0:
        raise InvalidSpecError("cube needs n >= 0")
    return Graph(1 << n, [(v, v | (1 << i)) for v in range(1 << n) for i in range(n) if not v >> i & 1])


def generalized_petersen(n: int, k: int) -> Graph:
    """Outer cycle ``0..n-1``, inner vertices ``n..2n-1`` with ``n+i ~ n+(i+k) mod n``."""
    if n < 3 or not 1 <= k < n / 2:
        raise InvalidSpecError("generalized_petersen needs n >= 3 and 1 <= k < n/2")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph(2 * n, edges)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def gem() -> Graph:
    """Cone over the 4-vertex path."""
    return cone(path(4))


def random_tree(n: int, seed=None) -> Graph:
    """Uniform labelled tree via a Prüfer sequence."""
    if n < 1:
        raise InvalidSpecError("random_tree needs n >= 1")
    rng = random.Random(seed)
    if n <= 2:
        return path(n)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    deg = [1] * n
    for v in seq:
        deg[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if deg[u] == 1)
        edges.append((leaf, v))
        deg[leaf] -= 1
        deg[v] -= 1
    u, w = [x for x in range(n) if deg[x] == 1]
    edges.append((u, w))
    return Graph(n, edges)


def random_connected(n: int, p: float = 0.3, seed=None) -> Graph:
    """A random spanning tree plus each other edge independently with probability ``p``."""
    rng = random.Random(seed)
    t = random_tree(n, rng.random())
    edges = set(t.edges)
    for e in combinations(range(n), 2):
        if e not in edges and rng.random() < p:
            edges.add(e)
    return Graph(n, edges)


def random_graph(n: int, p: float = 0.5, seed=None) -> Graph:
    """Erdős–Rényi G(n, p); may be disconnected."""
    rng = random.Random(seed)
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


# ---------------------------------------------------------------------------
# operations


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex ``(a, b)`` is numbered ``a * h.n + b``."""
    edges = []
    for a in range(g.n):
        for b1, b2 in h.edges:
            edges.append((a * h.n + b1, a * h.n + b2))
    for a1, a2 in g.edges:
        for b in range(h.n):
            edges.append((a1 * h.n + b, a2 * h.n + b))
    return Graph(g.n * h.n, edges)


def cone(g: Graph) -> Graph:
    """Add an apex ``n`` joined to every vertex."""
    return Graph(g.n + 1, list(g.edges) + [(v, g.n) for v in range(g.n)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, list(g.edges) + [(u + g.n, v + g.n) for u, v in h.edges])


def neck_stretch(g0: Graph, r0: int, g1: Graph, r1: int, j: int) -> Graph:
    """Join root ``r0`` of ``g0`` to root ``r1`` of ``g1`` by a path with ``j`` inner vertices.

    ``g0`` keeps its numbering, ``g1`` is shifted by ``g0.n`` and the inner
    path vertices come last, in order from ``r0`` to ``r1``.
    """
    if not 0 <= r0 < g0.n:
        raise InvalidSpecError(f"root {r0} not a vertex of g0")
    if not 0 <= r1 < g1.n:
        raise InvalidSpecError(f"root {r1} not a vertex of g1")
    if j < 0:
        raise InvalidSpecError("j must be >= 0")
    u = disjoint_union(g0, g1)
    base = u.n
    chain = [r0] + [base + i for i in range(j)] + [g0.n + r1]
    return Graph(base + j, list(u.edges) + list(zip(chain, chain[1:])))


# ---------------------------------------------------------------------------
# family dispatch

FAMILIES = {
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "cycle": (cycle, 1),
    "wheel": (wheel, 1),
    "path": (path, 1),
    "cube": (cube, 1),
    "petersen": (petersen, 0),
    "generalized_petersen": (generalized_petersen, 2),
    "star": (star, 1),
    "random_tree": (random_tree, 1),
    "random_connected": (random_connected, 1),
    "gem": (gem, 0),
}


@dataclass
class FamilySpec:
    name: str
    params: Tuple = ()
    seed: Optional[int] = None
    extra: dict = field(default_factory=dict)


def generate(spec: FamilySpec) -> Graph:
    """Build a graph from a :class:`FamilySpec`; raises :class:`InvalidSpecError`."""
    if spec.name not in FAMILIES:
        raise InvalidSpecError(f"unknown family {spec.name!r}; choose from {sorted(FAMILIES)}")
    fn, arity = FAMILIES[spec.name]
    params = tuple(spec.params)
    if spec.name == "random_connected":
        if len(params) not in (1, 2):
            raise InvalidSpecError("random_connected takes n [p]")
        n = int(params[0])
        p = float(params[1]) if len(params) > 1 else 0.3
        if n < 1 or not 0 <= p <= 1:
            raise InvalidSpecError("random_connected needs n >= 1 and 0 <= p <= 1")
        return random_connected(n, p, spec.seed)
    if len(params) != arity:
        raise InvalidSpecError(f"family {spec.name} takes {arity} parameter(s), got {len(params)}")
    try:
        ints = [int(x) for x in params]
    except (TypeError, ValueError):
        raise InvalidSpecError(f"non-integer parameter in {params}") from None
    if spec.name == "random_tree":
        return random_tree(ints[0], spec.seed)
    if spec.name in ("complete", "complete_bipartite") and any(x < 1 for x in ints):
        raise InvalidSpecError(f"{spec.name} needs positive parameters")
    return fn(*ints)


# ---------------------------------------------------------------------------
# isomorphism (brute force, small graphs only)


def is_isomorphic(g: Graph, h: Graph, max_n: int = 10) -> bool:
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    if g.n > max_n:
        raise ValueError(f"brute-force isomorphism limited to {max_n} vertices")
    return find_isomorphism(g, h) is not None


def find_isomorphism(g: Graph, h: Graph) -> Optional[Tuple[int, ...]]:
    """A permutation ``p`` with ``g.relabel(p) == h``, by backtracking on degrees."""
    n = g.n
    gd, hd = g.degrees(), h.degrees()
    order = sorted(range(n), key=lambda v: -gd[v])
    perm = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or hd[w] != gd[v]:
                continue
            ok = True
            for u in order[:i]:
                if g.has_edge(u, v) != h.has_edge(perm[u], w):
                    ok = False
                    break
            if ok:
                perm[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
        perm[v] = -1
        return False

    return tuple(perm) if extend(0) else None


# ---------------------------------------------------------------------------
# graph6 and edge lists


def _n_header(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def emit_graph6(g: Graph) -> str:
    """graph6 encoding: upper triangle in column order, 6 bits per byte, +63."""
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append((row >> i) & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6))
    return _n_header(g.n) + body


def parse_graph6(s: str) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` header is accepted)."""
    if isinstance(s, bytes):
        s = s.decode("ascii", errors="replace")
    s = s.strip()
    start = 0
    if s.startswith(">>graph6<<"):
        start = 10
    data = s[start:]
    if not data:
        raise GraphFormatError("empty graph6 string", start)
    for k, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"byte {ch!r} outside 63..126", start + k)
    vals = [ord(ch) - 63 for ch in data]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphFormatError("truncated size header", start + len(vals))
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        if len(vals) < 4:
            raise GraphFormatError("truncated size header", start + len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) < need:
        raise GraphFormatError(f"body has {len(body)} bytes, expected {need}", start + len(vals))
    if len(body) > need:
        raise GraphFormatError(f"trailing bytes after body", start + pos + need)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte, off = divmod(k, 6)
            if (body[byte] >> (5 - off)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def parse_edge_list(text: str) -> Graph:
    """First line ``n``, then one ``u v`` pair per line (0-indexed)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty edge list", 0)
    try:
        n = int(lines[0])
    except ValueError:
        raise GraphFormatError(f"first line must be the vertex count, got {lines[0]!r}", 0) from None
    edges = []
    for k, ln in enumerate(lines[1:], start=1):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {k + 1}: expected 'u v'", k)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {k + 1}: non-integer vertex", k) from None
        edges.append((u, v))
    try:
        return Graph(n, edges)
    except ValueError as e:
        raise GraphFormatError(str(e)) from None


def emit_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges]) + "\n"
