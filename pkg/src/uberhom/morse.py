"""Algebraic Morse theory on :class:`GradedComplex` objects.

A generator is addressed as a *cell* ``(degree, label)``.  A matching is a
set of disjoint pairs ``(lower, upper)`` with ``upper`` in degree
``lower + step`` and ``<diff lower, upper>`` invertible.  The reduced
complex keeps the unmatched (critical) cells; its differential is the
weighted zig-zag count, computed here by memoised elimination.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Tuple, Union

from .complex import ContractViolation, GradedComplex, shift
from .linalg import SparseMatrix

Cell = Tuple[Hashable, Hashable]


class NotAMatchingError(ValueError):
    """Two matched pairs share a generator."""


class InvalidEdgeError(ValueError):
    """A matched pair is not an edge of the differential graph."""


class MorseMatching:
    """Disjoint pairs ``(lower_cell, upper_cell)``."""

    def __init__(self, pairs: Iterable[Tuple[Cell, Cell]] = ()):
        self.pairs: List[Tuple[Cell, Cell]] = [(tuple(a), tuple(b)) for a, b in pairs]
        self.up: Dict[Cell, Cell] = {}
        self.down: Dict[Cell, Cell] = {}
        for a, b in self.pairs:
            self.up.setdefault(a, b)
            self.down.setdefault(b, a)

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def is_matched(self, cell: Cell) -> bool:
        return cell in self.up or cell in self.down

    def critical(self, c: GradedComplex) -> Dict[Hashable, List]:
        return {d: [lab for lab in b if not self.is_matched((d, lab))] for d, b in c.basis.items()}

    def __repr__(self):
        return f"MorseMatching({len(self.pairs)} pairs)"


def validate_matching(c: GradedComplex, m: MorseMatching) -> bool:
    """Raise unless ``m`` is a matching of nonzero differential edges of ``c``."""
    seen = set()
    for a, b in m.pairs:
        for cell in (a, b):
            if cell in seen:
                raise NotAMatchingError(f"generator {cell} appears in two matched pairs")
            seen.add(cell)
        if b[0] != shift(a[0], c.step):
            raise InvalidEdgeError(f"pair {a} -> {b} does not go up one degree")
        try:
            x = c.coefficient(a[0], a[1], b[1])
        except KeyError:
            raise InvalidEdgeError(f"pair {a} -> {b} names an unknown generator") from None
        if not x:
            raise InvalidEdgeError(f"pair {a} -> {b} has zero differential coefficient")
    return True


def _out_edges(c: GradedComplex) -> Dict[Cell, List[Tuple[Cell, object]]]:
    """``cell -> [(target_cell, coefficient), ...]`` for the differential graph."""
    out: Dict[Cell, List[Tuple[Cell, object]]] = {}
    for d in c.degrees:
        m = c.diff.get(d)
        if m is None or m.is_zero():
            continue
        tgt_deg = shift(d, c.step)
        tgt = c.basis[tgt_deg]
        src = c.basis[d]
        for r, col, x in m.items():
            out.setdefault((d, src[col]), []).append(((tgt_deg, tgt[r]), x))
    return out


def _has_cycle(cells: Iterable[Cell], succ: Callable[[Cell], Iterable[Cell]]) -> bool:
    """Iterative three-colour DFS."""
    WHITE, GREY, BLACK = 0, 1, 2
    colour: Dict[Cell, int] = {}
    for root in cells:
        if colour.get(root, WHITE) != WHITE:
            continue
        colour[root] = GREY
        stack = [(root, iter(succ(root)))]
        while stack:
            node, it = stack[-1]
            for nxt in it:
                s = colour.get(nxt, WHITE)
                if s == GREY:
                    return True
                if s == WHITE:
                    colour[nxt] = GREY
                    stack.append((nxt, iter(succ(nxt))))
                    break
            else:
                colour[node] = BLACK
                stack.pop()
    return False


def _modified_successors(m: MorseMatching, edges, allowed=None):
    def succ(cell):
        if cell in m.down:
            lower = m.down[cell]
            if allowed is None or lower in allowed:
                yield lower
        for tgt, _ in edges.get(cell, ()):
            if m.up.get(cell) == tgt:
                continue
            if allowed is None or tgt in allowed:
                yield tgt
    return succ


def is_acyclic(c: GradedComplex, m: MorseMatching, _edges=None) -> bool:
    """True iff reversing the matched edges leaves the differential graph acyclic."""
    edges = _out_edges(c) if _edges is None else _edges
    cells = [cell for pair in m.pairs for cell in pair]
    # every directed cycle passes through a matched edge, so matched cells suffice as roots
    return not _has_cycle(cells, _modified_successors(m, edges))


@dataclass
class LayerFunction:
    """Integer layer ``phi`` and block id ``partition`` on cells (callables or dicts)."""

    phi: Union[Callable[[Cell], int], Mapping[Cell, int]]
    partition: Union[Callable[[Cell], Hashable], Mapping[Cell, Hashable]]

    def layer(self, cell: Cell) -> int:
        return self.phi[cell] if isinstance(self.phi, Mapping) else self.phi(cell)

    def block(self, cell: Cell):
        return self.partition[cell] if isinstance(self.partition, Mapping) else self.partition(cell)


@dataclass
class Certificate:
    ok: bool
    clause: Optional[int] = None
    detail: str = ""

    def __bool__(self):
        return self.ok


def layered_acyclicity(c: GradedComplex, m: MorseMatching, layers: LayerFunction, _edges=None) -> Certificate:
    """Certify acyclicity from a block partition and a layer function.

    Clauses checked:

    1. each block's sub-matching is acyclic on the block's own generators;
    2. matched pairs lie in one block and have equal layer;
    3. across blocks, every unmatched differential edge strictly raises the
       layer (inside a block it may not lower it).

    A failed clause means the certificate does not apply, not that ``m`` is
    cyclic.
    """
    edges = _out_edges(c) if _edges is None else _edges
    blocks: Dict[Hashable, set] = {}
    for a, b in m.pairs:
        ba, bb = layers.block(a), layers.block(b)
        if ba != bb:
            return Certificate(False, 2, f"pair {a} -> {b} straddles blocks {ba!r}, {bb!r}")
        if layers.layer(a) != layers.layer(b):
            return Certificate(False, 2, f"layer differs on matched pair {a} -> {b}")
    for cell in c_cells(c):
        blocks.setdefault(layers.block(cell), set()).add(cell)
    for src, outs in edges.items():
        ps, bs = layers.layer(src), layers.block(src)
        for tgt, _ in outs:
            if m.up.get(src) == tgt:
                continue
            pt, bt = layers.layer(tgt), layers.block(tgt)
            if bs != bt and not pt > ps:
                return Certificate(False, 3, f"edge {src} -> {tgt} crosses blocks without raising the layer")
            if bs == bt and pt < ps:
                return Certificate(False, 3, f"edge {src} -> {tgt} lowers the layer inside a block")
    by_block: Dict[Hashable, List[Cell]] = {}
    for a, b in m.pairs:
        by_block.setdefault(layers.block(a), []).append(a)
    for bid, roots in by_block.items():
        allowed = blocks[bid]
        if _has_cycle(roots, _modified_successors(m, edges, allowed)):
            return Certificate(False, 1, f"sub-matching of block {bid!r} has a directed cycle")
    return Certificate(True)


def c_cells(c: GradedComplex):
    for d, b in c.basis.items():
        for lab in b:
            yield (d, lab)


def morse_reduce(c: GradedComplex, m: MorseMatching, layers: Optional[LayerFunction] = None,
                 certified: bool = False) -> GradedComplex:
    """The critical complex of ``c`` with respect to the acyclic matching ``m``.

    Acyclicity is certified with ``layers`` when given (falling back to the
    global search if the layered certificate does not apply), otherwise by
    :func:`is_acyclic`.  Pass ``certified=True`` to skip the check.
    """
    validate_matching(c, m)
    edges = _out_edges(c)
    if not certified:
        ok = False
        if layers is not None:
            ok = bool(layered_acyclicity(c, m, layers, edges))
        if not ok and not is_acyclic(c, m, edges):
            raise ContractViolation("matching is not acyclic")
    f = c.field
    crit = m.critical(c)
    crit_index = {d: {lab: i for i, lab in enumerate(labs)} for d, labs in crit.items()}

    # flow(b): contribution of reaching cell b, expressed on critical cells of b's degree
    memo: Dict[Cell, Dict[Cell, object]] = {}

    def flow(b: Cell) -> Dict[Cell, object]:
        if b in memo:
            return memo[b]
        stack = [b]
        while stack:
            cur = stack[-1]
            if cur in memo:
                stack.pop()
                continue
            if cur in m.up:
                memo[cur] = {}
                stack.pop()
                continue
            if cur not in m.down:
                memo[cur] = {cur: f.one}
                stack.pop()
                continue
            a = m.down[cur]
            pending = [t for t, _ in edges.get(a, ()) if t != cur and t not in memo]
            if pending:
                stack.extend(pending)
                continue
            acc: Dict[Cell, object] = {}
            w = None
            for t, x in edges.get(a, ()):
                if t == cur:
                    w = x
            scale = f.neg(f.inv(w))
            for t, x in edges.get(a, ()):
                if t == cur:
                    continue
                coeff = f.mul(scale, x)
                for k, y in memo[t].items():
                    v = f.add(acc.get(k, f.zero), f.mul(coeff, y))
                    if v:
                        acc[k] = v
                    else:
                        acc.pop(k, None)
            memo[cur] = acc
            stack.pop()
        return memo[b]

    diff = {}
    for d in c.degrees:
        src = crit.get(d, [])
        tgt_deg = shift(d, c.step)
        tgt = crit.get(tgt_deg, [])
        if not src or not tgt:
            continue
        entries: Dict[Tuple[int, int], object] = {}
        for j, lab in enumerate(src):
            for t, x in edges.get((d, lab), ()):
                for k, y in flow(t).items():
                    i = crit_index[tgt_deg][k[1]]
                    v = f.add(entries.get((i, j), f.zero), f.mul(x, y))
                    entries[(i, j)] = v
        diff[d] = SparseMatrix(len(tgt), len(src), {k: v for k, v in entries.items() if v}, f)
    return GradedComplex(crit, diff, f, c.step)


def restricted_complex(c: GradedComplex, keep: Mapping[Hashable, Iterable]) -> GradedComplex:
    """Restriction of the differential to the span of the kept labels.

    This agrees with :func:`morse_reduce` when the kept (critical) cells or
    the matched cells span a sub-complex.
    """
    f = c.field
    basis = {}
    for d, labs in c.basis.items():
        ks = set(keep.get(d, ()))
        basis[d] = [lab for lab in labs if lab in ks]
    diff = {}
    for d, m in c.diff.items():
        tgt_deg = shift(d, c.step)
        src_pos = {c.index(d, lab): j for j, lab in enumerate(basis.get(d, []))}
        tgt_pos = {c.index(tgt_deg, lab): i for i, lab in enumerate(basis.get(tgt_deg, []))}
        ent = [(tgt_pos[r], src_pos[col], x) for r, col, x in m.items() if r in tgt_pos and col in src_pos]
        diff[d] = SparseMatrix(len(tgt_pos), len(src_pos), ent, f)
    return GradedComplex(basis, diff, f, c.step)
