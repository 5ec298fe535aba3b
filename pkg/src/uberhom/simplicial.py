"""Bi-coloured simplicial complexes and their horizontal chain complexes."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Tuple

from .complex import ChainMap, GradedComplex, HomologySummary, homology
from .linalg import GF2, Field, SparseMatrix

Simplex = Tuple[int, ...]


class UnknownSimplexError(KeyError):
    pass


class NotAdjacentError(ValueError):
    """Two colourings are not a covering pair of the Boolean poset."""


class UnsupportedMapError(ValueError):
    """Non-injective maps do not induce chain maps on horizontal complexes."""


class NotColouredError(ValueError):
    """A vertex map violates the coloured-map conditions."""


class NotSimplicialError(ValueError):
    pass


class SimplicialComplex:
    """Finite simplicial complex on vertices ``0..m-1``.

    Built from any collection of simplices; the face closure is taken.  Each
    dimension's simplices are kept as sorted tuples in lexicographic order,
    which fixes every matrix layout downstream.
    """

    def __init__(self, m: int, simplices: Iterable[Sequence[int]] = ()):
        if m < 1:
            raise ValueError("a simplicial complex needs at least one vertex")
        self.m = m
        faces = {(v,) for v in range(m)}
        for s in simplices:
            s = tuple(sorted(set(s)))
            if not s:
                continue
            if s[0] < 0 or s[-1] >= m:
                raise ValueError(f"simplex {s} uses a vertex outside 0..{m - 1}")
            if s in faces:
                continue
            for k in range(1, len(s) + 1):
                faces.update(combinations(s, k))
        self.simplices: Dict[int, List[Simplex]] = {}
        for s in faces:
            self.simplices.setdefault(len(s) - 1, []).append(s)
        for d in self.simplices:
            self.simplices[d].sort()
        self._set = faces

    @classmethod
    def from_graph(cls, g) -> "SimplicialComplex":
        return cls(g.n, g.edges)

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        """The full ``n``-simplex on ``n+1`` vertices."""
        return cls(n + 1, [range(n + 1)])

    @property
    def dim(self) -> int:
        return max(self.simplices)

    def __contains__(self, s) -> bool:
        return tuple(s) in self._set

    def __iter__(self):
        for d in sorted(self.simplices):
            yield from self.simplices[d]

    def __len__(self):
        return len(self._set)

    def is_connected(self) -> bool:
        parent = list(range(self.m))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x
        for e in self.simplices.get(1, ()):
            parent[find(e[0])] = find(e[1])
        return len({find(v) for v in range(self.m)}) == 1

    def relabel(self, perm: Sequence[int]) -> "SimplicialComplex":
        return SimplicialComplex(self.m, [[perm[v] for v in s] for s in self])

    def __repr__(self):
        counts = [len(self.simplices[d]) for d in sorted(self.simplices)]
        return f"SimplicialComplex(m={self.m}, f-vector={counts})"


@dataclass(frozen=True)
class Colouring:
    """A bi-colouring as a tuple of bits; ``bits[v]`` is the colour of vertex ``v``."""

    bits: Tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"colour bits must be 0/1, got {self.bits}")
        object.__setattr__(self, "bits", tuple(int(b) for b in self.bits))

    @classmethod
    def from_mask(cls, mask: int, m: int) -> "Colouring":
        return cls(tuple((mask >> i) & 1 for i in range(m)))

    @classmethod
    def zeros(cls, m: int) -> "Colouring":
        return cls((0,) * m)

    @classmethod
    def ones(cls, m: int) -> "Colouring":
        return cls((1,) * m)

    @property
    def mask(self) -> int:
        return sum(b << i for i, b in enumerate(self.bits))

    @property
    def level(self) -> int:
        return sum(self.bits)

    def __len__(self):
        return len(self.bits)

    def __getitem__(self, v):
        return self.bits[v]

    def flip(self, i: int) -> "Colouring":
        b = list(self.bits)
        b[i] ^= 1
        return Colouring(tuple(b))

    def __str__(self):
        return "".join(map(str, self.bits))


def _check_len(X: SimplicialComplex, eps: Colouring):
    if len(eps) != X.m:
        raise ValueError(f"colouring has length {len(eps)}, complex has {X.m} vertices")


def weight(sigma: Sequence[int], eps: Colouring, X: SimplicialComplex = None) -> int:
    """Number of 0-coloured vertices of ``sigma``."""
    if X is not None:
        _check_len(X, eps)
        if tuple(sorted(sigma)) not in X:
            raise UnknownSimplexError(tuple(sigma))
    return len(sigma) - sum(eps[v] for v in sigma)


def cover_index(eps: Colouring, eps2: Colouring) -> int:
    """Index of the single bit flipped 0 -> 1 from ``eps`` to ``eps2``."""
    if len(eps) != len(eps2):
        raise NotAdjacentError("colourings of different lengths")
    diff = [i for i, (a, b) in enumerate(zip(eps.bits, eps2.bits)) if a != b]
    if len(diff) != 1 or eps[diff[0]] != 0:
        raise NotAdjacentError(f"{eps} is not covered by {eps2}")
    return diff[0]


def horizontal_complex(X: SimplicialComplex, eps: Colouring, field: Field = GF2) -> GradedComplex:
    """Weight-preserving part of the simplicial boundary, bigraded by (dimension, weight).

    A face survives only if the deleted vertex is 1-coloured; deleting the
    vertex at sorted position ``p`` carries the sign ``(-1)**p``.
    """
    _check_len(X, eps)
    basis: Dict[Tuple[int, int], List[Simplex]] = {}
    for d in sorted(X.simplices):
        for s in X.simplices[d]:
            basis.setdefault((d, weight(s, eps)), []).append(s)
    index = {deg: {s: i for i, s in enumerate(b)} for deg, b in basis.items()}
    diff = {}
    for (d, k), simplices in basis.items():
        if d == 0:
            continue
        tgt_deg = (d - 1, k)
        tgt = index.get(tgt_deg, {})
        ent = []
        for j, s in enumerate(simplices):
            for p, v in enumerate(s):
                if eps[v]:
                    face = s[:p] + s[p + 1:]
                    ent.append((tgt[face], j, -1 if p % 2 else 1))
        diff[(d, k)] = SparseMatrix(len(tgt), len(simplices), ent, field)
    for deg in list(diff):
        basis.setdefault((deg[0] - 1, deg[1]), [])
    return GradedComplex(basis, diff, field, step=(-1, 0))


def horizontal_homology(X: SimplicialComplex, eps: Colouring, field: Field = GF2,
                        representatives: bool = True) -> HomologySummary:
    return homology(horizontal_complex(X, eps, field), representatives=representatives)


def _map_blocks(src: GradedComplex, tgt: GradedComplex, image, field: Field) -> Dict:
    """Blocks for ``sigma -> sign * image(sigma)``; ``image`` returns (simplex, sign) or None."""
    blocks = {}
    for deg, simplices in src.basis.items():
        tb = tgt.basis.get(deg, [])
        pos = {s: i for i, s in enumerate(tb)}
        ent = []
        for j, s in enumerate(simplices):
            im = image(s)
            if im is None:
                continue
            t, sgn = im
            if t not in pos:
                raise ValueError(f"image {t} of {s} is not in degree {deg} of the target")
            ent.append((pos[t], j, sgn))
        blocks[deg] = SparseMatrix(len(tb), len(simplices), ent, field)
    return blocks


def transition_chain_map(X: SimplicialComplex, eps: Colouring, eps2: Colouring,
                         field: Field = GF2, source: GradedComplex = None,
                         target: GradedComplex = None) -> ChainMap:
    """Weight-preserving part of the identity from ``eps`` to a cover ``eps2``."""
    t = cover_index(eps, eps2)
    src = source or horizontal_complex(X, eps, field)
    tgt = target or horizontal_complex(X, eps2, field)
    blocks = _map_blocks(src, tgt, lambda s: None if t in s else (s, 1), field)
    return ChainMap(src, tgt, blocks)


def _perm_sign(seq: Sequence[int]) -> int:
    sgn = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sgn = -sgn
    return sgn


@dataclass
class ColouredMap:
    """Vertex map ``vmap[v]`` from ``(X, eps_x)`` to ``(Y, eps_y)``."""

    X: SimplicialComplex
    eps_x: Colouring
    Y: SimplicialComplex
    eps_y: Colouring
    vmap: Tuple[int, ...]

    @property
    def injective(self) -> bool:
        return len(set(self.vmap)) == len(self.vmap)

    def check_simplicial(self):
        if len(self.vmap) != self.X.m:
            raise NotSimplicialError("vertex map length differs from the source vertex count")
        for s in self.X:
            img = tuple(sorted({self.vmap[v] for v in s}))
            if img not in self.Y:
                raise NotSimplicialError(f"image of {s} is not a simplex of the target")

    def check_coloured(self):
        hits: Dict[int, int] = {}
        for x, y in enumerate(self.vmap):
            if self.eps_x[x]:
                hits[y] = hits.get(y, 0) + 1
        for y in set(self.vmap):
            if hits.get(y, 0) > 1:
                raise NotColouredError(f"two 1-coloured vertices map onto {y}")
            if (self.eps_y[y] == 0) != (hits.get(y, 0) == 0):
                raise NotColouredError(f"colour of {y} disagrees with its 1-coloured preimages")


def induced_injective_map(psi: ColouredMap, field: Field = GF2) -> ChainMap:
    """Chain map ``sigma -> psi(sigma)`` between horizontal complexes."""
    psi.check_simplicial()
    if not psi.injective:
        raise UnsupportedMapError("only injective coloured maps induce chain maps")
    psi.check_coloured()
    src = horizontal_complex(psi.X, psi.eps_x, field)
    tgt = horizontal_complex(psi.Y, psi.eps_y, field)

    def image(s):
        img = [psi.vmap[v] for v in s]
        return tuple(sorted(img)), _perm_sign(img)
    return ChainMap(src, tgt, _map_blocks(src, tgt, image, field))
