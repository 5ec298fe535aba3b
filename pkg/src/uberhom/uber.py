"""Boolean-poset machinery and the triply graded über complex.

The über complex in poset level ``j`` is the direct sum of the horizontal
homologies of all colourings with ``j`` ones.  Its differential sums the
maps induced on horizontal homology by the transition chain maps along
every cover ``eps -> eps'``, each twisted by the Koszul sign.  Generators
carry the degree ``(j, i, k)``: poset level, simplex dimension and weight.
"""
from __future__ import annotations

from itertools import combinations
from typing import Dict, List, Tuple

from .complex import GradedComplex, HomologySummary, homology, induced_map_on_homology
from .linalg import GF2, Field, SparseMatrix
from .simplicial import (Colouring, NotAdjacentError, SimplicialComplex, cover_index,
                         horizontal_complex, transition_chain_map)

#: über computations refuse larger complexes unless forced
MAX_UBER_VERTICES = 14


def covers(eps: Colouring) -> List[Colouring]:
    """Colourings obtained by turning one 0 into a 1, by increasing bit index."""
    return [eps.flip(i) for i in range(len(eps)) if eps[i] == 0]


def sign(eps: Colouring, eps2: Colouring) -> int:
    """Koszul sign assignment: parity of the 1 bits of ``eps`` below the flipped index."""
    t = cover_index(eps, eps2)
    return sum(eps.bits[:t]) % 2


def square_condition_holds(m: int) -> bool:
    """Check the sign-assignment equation on every square of B(m)."""
    for mask in range(1 << m):
        x = Colouring.from_mask(mask, m)
        zeros = [i for i in range(m) if not x[i]]
        for a, b in combinations(zeros, 2):
            y, y2 = x.flip(a), x.flip(b)
            z = y.flip(b)
            lhs = sign(x, y) + sign(y, z)
            rhs = sign(x, y2) + sign(y2, z) + 1
            if (lhs - rhs) % 2:
                return False
    return True


def boolean_complex(m: int, field: Field = GF2, include_empty: bool = True) -> GradedComplex:
    """The cube complex of B(m): generators are subsets, ``S -> sum (-1)^s S+v``.

    With ``include_empty`` this is the augmented simplicial chain complex of
    the (m-1)-simplex read upside down, which is acyclic.
    """
    basis: Dict[int, List[Tuple[int, ...]]] = {}
    start = 0 if include_empty else 1
    for k in range(start, m + 1):
        basis[k] = [tuple(s) for s in combinations(range(m), k)]
    diff = {}
    for k in range(start, m):
        tgt = {s: i for i, s in enumerate(basis[k + 1])}
        ent = []
        for j, s in enumerate(basis[k]):
            for v in range(m):
                if v in s:
                    continue
                t = tuple(sorted(s + (v,)))
                below = sum(1 for u in s if u < v)
                ent.append((tgt[t], j, -1 if below % 2 else 1))
        diff[k] = SparseMatrix(len(basis[k + 1]), len(basis[k]), ent, field)
    return GradedComplex(basis, diff, field, 1)


class _Level:
    """Horizontal complexes and homologies of all colourings at one poset level."""

    def __init__(self, X: SimplicialComplex, j: int, field: Field):
        self.j = j
        self.cols: List[Colouring] = []
        self.cplx: Dict[Colouring, GradedComplex] = {}
        self.hom: Dict[Colouring, HomologySummary] = {}
        for ones in combinations(range(X.m), j):
            eps = Colouring(tuple(1 if v in ones else 0 for v in range(X.m)))
            c = horizontal_complex(X, eps, field)
            self.cols.append(eps)
            self.cplx[eps] = c
            self.hom[eps] = homology(c, representatives=True)

    def basis(self) -> Dict[Tuple[int, int, int], list]:
        out: Dict[Tuple[int, int, int], list] = {}
        for eps in self.cols:
            h = self.hom[eps]
            for (i, k), r in sorted(h.ranks.items()):
                for a in range(r):
                    out.setdefault((self.j, i, k), []).append((str(eps), a))
        return out


def uber_complex(X: SimplicialComplex, field: Field = GF2, force: bool = False,
                 require_connected: bool = True) -> GradedComplex:
    """Assemble the über complex with degrees ``(j, i, k)`` and step ``(1, 0, 0)``."""
    if X.m > MAX_UBER_VERTICES and not force:
        raise ValueError(f"{X.m} vertices exceeds the über limit {MAX_UBER_VERTICES}; pass force=True")
    if require_connected and not X.is_connected():
        raise ValueError("über homology is defined for connected complexes")
    basis: Dict[Tuple[int, int, int], list] = {}
    diff: Dict[Tuple[int, int, int], SparseMatrix] = {}
    cur = _Level(X, 0, field)
    basis.update(cur.basis())
    for j in range(X.m):
        nxt = _Level(X, j + 1, field)
        basis.update(nxt.basis())
        # offsets of each colouring's summand inside the (j, i, k) blocks
        def offsets(level):
            off: Dict[Tuple[Colouring, int, int], int] = {}
            count: Dict[Tuple[int, int], int] = {}
            for eps in level.cols:
                for (i, k), r in sorted(level.hom[eps].ranks.items()):
                    off[(eps, i, k)] = count.get((i, k), 0)
                    count[(i, k)] = count.get((i, k), 0) + r
            return off
        src_off, tgt_off = offsets(cur), offsets(nxt)
        entries: Dict[Tuple[int, int], list] = {}
        for eps in cur.cols:
            for eps2 in covers(eps):
                fmap = transition_chain_map(X, eps, eps2, field, cur.cplx[eps], nxt.cplx[eps2])
                blocks = induced_map_on_homology(fmap, cur.hom[eps], nxt.hom[eps2], check=False)
                s = sign(eps, eps2)
                for (i, k), mat in blocks.items():
                    if mat.rows == 0 or mat.cols == 0:
                        continue
                    r0, c0 = tgt_off[(eps2, i, k)], src_off[(eps, i, k)]
                    for r, c, x in mat.items():
                        entries.setdefault((i, k), []).append((r0 + r, c0 + c, field.neg(x) if s else x))
        for (i, k), ent in entries.items():
            src_deg, tgt_deg = (j, i, k), (j + 1, i, k)
            diff[src_deg] = SparseMatrix(len(basis.get(tgt_deg, [])), len(basis.get(src_deg, [])), ent, field)
        cur = nxt
    return GradedComplex(basis, diff, field, step=(1, 0, 0))


def uber_homology(X: SimplicialComplex, field: Field = GF2, force: bool = False,
                  require_connected: bool = True) -> Dict[Tuple[int, int, int], int]:
    """Nonzero ranks of the über homology keyed by ``(j, i, k)``."""
    h = homology(uber_complex(X, field, force, require_connected))
    return h.nonzero()


def bold_slice(ranks: Dict[Tuple[int, int, int], int]) -> Dict[int, int]:
    """The bidegree (0, 0) column ``j -> rank``."""
    return {j: r for (j, i, k), r in sorted(ranks.items()) if (i, k) == (0, 0) and r}


__all__ = ["covers", "sign", "square_condition_holds", "boolean_complex", "uber_complex",
           "uber_homology", "bold_slice", "NotAdjacentError", "MAX_UBER_VERTICES"]
