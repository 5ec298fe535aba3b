"""Graded chain complexes with labelled bases over a field.

A :class:`GradedComplex` stores, per degree, an ordered list of generator
labels and the differential out of that degree as a :class:`SparseMatrix`
whose columns are the source generators and whose rows are the target
generators.  Degrees are ints or tuples of up to three ints; the differential
moves a degree ``d`` to ``d + step`` (componentwise for tuples).  All the
complexes built in this package use ``step = +1`` on the first component
except the horizontal simplicial complexes, which keep the usual
dimension-lowering boundary (``step = (-1, 0)``).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Dict, Hashable, List, Optional, Sequence

from .linalg import (GF2, Field, MalformedInputError, SpanReducer, SparseMatrix, Vector,
                     kernel_basis, rank)


class MalformedComplexError(ValueError):
    """A differential whose shape disagrees with the bases it connects."""


class ContractViolation(ValueError):
    """An operation was handed data violating its precondition."""


def shift(d, step):
    if isinstance(d, tuple):
        return tuple(a + b for a, b in zip(d, step))
    return d + step


def unshift(d, step):
    if isinstance(d, tuple):
        return tuple(a - b for a, b in zip(d, step))
    return d - step


def primary(d) -> int:
    return d[0] if isinstance(d, tuple) else d


class GradedComplex:
    """Finite chain complex: ``basis[d]`` labels and ``diff[d]: C_d -> C_{d+step}``."""

    def __init__(self, basis: Dict[Hashable, Sequence], diff: Optional[Dict[Hashable, SparseMatrix]] = None,
                 field: Field = GF2, step=1):
        self.basis = {d: list(b) for d, b in basis.items()}
        self.field = field
        self.step = step
        self.diff: Dict[Hashable, SparseMatrix] = {}
        for d, m in (diff or {}).items():
            self.diff[d] = m
        self._index = None

    @property
    def degrees(self) -> List:
        return sorted(self.basis)

    def size(self, d) -> int:
        return len(self.basis.get(d, ()))

    def total_size(self) -> int:
        return sum(len(b) for b in self.basis.values())

    def differential(self, d) -> SparseMatrix:
        """The matrix of ``C_d -> C_{d+step}``, zero if not stored."""
        m = self.diff.get(d)
        if m is None:
            return SparseMatrix.zeros(self.size(shift(d, self.step)), self.size(d), self.field)
        return m

    def index(self, d, label) -> int:
        if self._index is None:
            self._index = {dd: {lab: i for i, lab in enumerate(b)} for dd, b in self.basis.items()}
        return self._index[d][label]

    def labels(self):
        """All ``(degree, label)`` pairs."""
        for d in self.degrees:
            for lab in self.basis[d]:
                yield d, lab

    def coefficient(self, d, src, dst):
        """``<diff src, dst>`` for labels ``src`` in degree ``d`` and ``dst`` in ``d+step``."""
        m = self.diff.get(d)
        if m is None:
            return self.field.zero
        return m[self.index(shift(d, self.step), dst), self.index(d, src)]

    def __repr__(self):
        sizes = {d: len(b) for d, b in sorted(self.basis.items()) if b}
        return f"GradedComplex({sizes}, field={self.field})"


@dataclass
class Validation:
    ok: bool
    degree: object = None
    message: str = ""

    def __bool__(self):
        return self.ok


def validate(c: GradedComplex) -> Validation:
    """Check shapes (raising on mismatch) and that ``d o d = 0`` in every degree."""
    for d, m in c.diff.items():
        want = (c.size(shift(d, c.step)), c.size(d))
        if m.shape != want:
            raise MalformedComplexError(f"differential at {d} has shape {m.shape}, expected {want}")
        if m.field != c.field:
            raise MalformedComplexError(f"differential at {d} is over {m.field}, complex over {c.field}")
    for d in sorted(c.diff):
        nxt = shift(d, c.step)
        if nxt not in c.diff:
            continue
        prod = c.diff[nxt] @ c.diff[d]
        if not prod.is_zero():
            return Validation(False, d, f"d∘d != 0 starting in degree {d} ({prod.nnz()} nonzero entries)")
    return Validation(True)


@dataclass
class HomologySummary:
    """Ranks per degree, optionally with representative cycles.

    ``representatives[d]`` lists cycles (as Vectors over the degree-``d``
    basis) whose classes form a basis of homology in that degree.
    """

    ranks: Dict[Hashable, int]
    representatives: Optional[Dict[Hashable, List[Vector]]] = None
    field: Field = GF2
    _quotients: Dict = dc_field(default_factory=dict, repr=False)

    def nonzero(self) -> Dict[Hashable, int]:
        return {d: r for d, r in sorted(self.ranks.items()) if r}

    def __getitem__(self, d) -> int:
        return self.ranks.get(d, 0)

    def total(self) -> int:
        return sum(self.ranks.values())

    def euler(self) -> int:
        return sum((-1) ** (primary(d) % 2) * r for d, r in self.ranks.items())

    def is_zero(self) -> bool:
        return not any(self.ranks.values())


def _columns(m: SparseMatrix) -> List[Vector]:
    t = m.transpose()
    return [Vector(m.rows, t.row(j)) for j in range(m.cols)]


def homology(c: GradedComplex, representatives: bool = False, check: bool = False) -> HomologySummary:
    """Homology ranks ``nullity(d_out) - rank(d_in)`` in every degree.

    With ``representatives=True`` a kernel basis is completed modulo the image
    (image columns first, then kernel vectors in order) and the chosen kernel
    vectors are returned; this is what :func:`induced_map_on_homology` uses.
    """
    if check:
        v = validate(c)
        if not v:
            raise ContractViolation(v.message)
    f = c.field
    ranks: Dict = {}
    reps: Dict = {}
    quotients: Dict = {}
    rank_cache: Dict = {}

    def rk(d):
        if d not in rank_cache:
            m = c.diff.get(d)
            rank_cache[d] = 0 if m is None or m.is_zero() else rank(m)
        return rank_cache[d]

    for d in c.degrees:
        n = c.size(d)
        if n == 0:
            ranks[d] = 0
            continue
        prev = unshift(d, c.step)
        r_in = rk(prev) if c.size(prev) else 0
        if not representatives:
            ranks[d] = n - rk(d) - r_in
            continue
        ker = kernel_basis(c.differential(d))
        red = SpanReducer(n, f)
        if prev in c.diff and c.size(prev):
            for j, col in enumerate(_columns(c.diff[prev])):
                red.add(col, tag=("b", j))
        chosen = []
        for z in ker:
            if red.add(z, tag=("h", len(chosen))):
                chosen.append(z)
        ranks[d] = len(chosen)
        reps[d] = chosen
        quotients[d] = red
    return HomologySummary(ranks, reps if representatives else None, f, quotients)


def euler_characteristic(c: GradedComplex, check: bool = True) -> int:
    """Alternating count of generators by the primary degree component."""
    chi = sum((-1) ** (primary(d) % 2) * len(b) for d, b in c.basis.items())
    if check:
        h = homology(c).euler()
        if h != chi:
            raise ContractViolation(f"generator count gives chi={chi} but homology gives {h}")
    return chi


@dataclass
class ChainMap:
    """Degree-preserving map; ``blocks[d]`` has shape (target size, source size)."""

    source: GradedComplex
    target: GradedComplex
    blocks: Dict[Hashable, SparseMatrix]

    def block(self, d) -> SparseMatrix:
        m = self.blocks.get(d)
        if m is None:
            return SparseMatrix.zeros(self.target.size(d), self.source.size(d), self.source.field)
        return m

    def commutes(self) -> Validation:
        src, tgt = self.source, self.target
        for d in sorted(set(src.basis) | set(tgt.basis)):
            nxt = shift(d, src.step)
            left = tgt.differential(d) @ self.block(d)
            right = self.block(nxt) @ src.differential(d)
            if left != right:
                return Validation(False, d, f"chain map fails to commute at degree {d}")
        return Validation(True)

    def compose(self, first: "ChainMap") -> "ChainMap":
        """``self o first``."""
        blocks = {d: self.block(d) @ first.block(d) for d in first.source.basis}
        return ChainMap(first.source, self.target, blocks)


def identity_map(c: GradedComplex) -> ChainMap:
    return ChainMap(c, c, {d: SparseMatrix.identity(len(b), c.field) for d, b in c.basis.items()})


def induced_map_on_homology(fmap: ChainMap, src_h: Optional[HomologySummary] = None,
                            tgt_h: Optional[HomologySummary] = None, check: bool = True) -> Dict[Hashable, SparseMatrix]:
    """Matrix of ``H(f)`` per degree with respect to the representative bases.

    Precomputed summaries (with representatives) can be passed to avoid
    recomputing homology of either side.
    """
    if check:
        v = fmap.commutes()
        if not v:
            raise ContractViolation(v.message)
    f = fmap.source.field
    if src_h is None or src_h.representatives is None:
        src_h = homology(fmap.source, representatives=True)
    if tgt_h is None or tgt_h.representatives is None:
        tgt_h = homology(fmap.target, representatives=True)
    out = {}
    for d, reps in src_h.representatives.items():
        n_tgt = tgt_h.ranks.get(d, 0)
        entries = []
        if reps and n_tgt:
            blk = fmap.block(d)
            red = tgt_h._quotients[d]
            for j, z in enumerate(reps):
                coords = red.express(blk.apply(z))
                if coords is None:
                    raise ContractViolation(f"image of a cycle is not a cycle in degree {d}")
                for tag, x in coords.items():
                    if tag[0] == "h":
                        entries.append((tag[1], j, x))
        out[d] = SparseMatrix(n_tgt, len(reps), entries, f)
    return out
