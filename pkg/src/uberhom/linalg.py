"""Exact linear algebra over GF(2), GF(p) and the rationals.

Matrices are sparse and row-oriented.  Over GF(2) each row is packed into a
Python ``int`` (bit ``c`` set iff column ``c`` is nonzero), so row additions
are a single XOR over machine words.  Over the other fields rows are
``{column: scalar}`` dicts.

Every elimination uses the same pivoting rule: rows are processed in index
order and each row is reduced on its leftmost nonzero column, so the pivot
for a column is owned by the lowest-index row that reaches it.  Results are
therefore reproducible for a fixed input ordering.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple


class MalformedInputError(ValueError):
    """Raised for entries that cannot be interpreted in the requested field."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Field:
    """A coefficient field: ``GF2``, ``GFp`` (small prime ``p``) or ``Q``."""

    kind: str = "GF2"
    p: int = 2

    def __post_init__(self):
        if self.kind == "GF2":
            object.__setattr__(self, "p", 2)
        elif self.kind == "GFp":
            if not (_is_prime(self.p) and self.p < 2 ** 16):
                raise MalformedInputError(f"GF(p) needs a prime p < 2^16, got {self.p}")
            if self.p == 2:
                object.__setattr__(self, "kind", "GF2")
        elif self.kind == "Q":
            object.__setattr__(self, "p", 0)
        else:
            raise MalformedInputError(f"unknown field kind {self.kind!r}")

    @classmethod
    def parse(cls, text) -> "Field":
        """Parse ``"2"``, ``"GF2"``, a prime such as ``"3"``, or ``"Q"``."""
        t = str(text).strip().upper()
        if t in ("Q", "QQ", "RATIONAL"):
            return QQ
        if t.startswith("GF"):
            t = t[2:].strip("()")
        try:
            p = int(t)
        except ValueError:
            raise MalformedInputError(f"cannot parse field {text!r}") from None
        return GF2 if p == 2 else cls("GFp", p)

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_gf2(self) -> bool:
        return self.kind == "GF2"

    def __str__(self):
        if self.kind == "Q":
            return "Q"
        return f"GF({self.p})"

    # scalar arithmetic -------------------------------------------------
    def coerce(self, x):
        """Map an int or Fraction into the field (canonical representative)."""
        if self.kind == "Q":
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            raise MalformedInputError(f"not an exact rational: {x!r}")
        if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
            if isinstance(x, bool):
                return int(x)
            raise MalformedInputError(f"not an exact scalar: {x!r}")
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise MalformedInputError(f"{x} has denominator divisible by {self.p}")
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return x % self.p

    @property
    def one(self):
        return Fraction(1) if self.kind == "Q" else 1

    @property
    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    def add(self, a, b):
        return a + b if self.kind == "Q" else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.kind == "Q" else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.kind == "Q" else (a * b) % self.p

    def neg(self, a):
        return -a if self.kind == "Q" else (-a) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.kind == "Q" else pow(a, -1, self.p)

    def sign(self, s: int):
        """The scalar ``(-1)**s``."""
        return self.coerce(-1 if s % 2 else 1)


GF2 = Field("GF2")
QQ = Field("Q")


def GF(p: int) -> Field:
    return GF2 if p == 2 else Field("GFp", p)


@dataclass
class Vector:
    """Sparse vector: ``entries`` maps index to a nonzero scalar."""

    length: int
    entries: Dict[int, object] = dc_field(default_factory=dict)

    def __post_init__(self):
        for i in self.entries:
            if not 0 <= i < self.length:
                raise MalformedInputError(f"index {i} out of range for length {self.length}")
        self.entries = {i: v for i, v in self.entries.items() if v}

    @classmethod
    def from_dense(cls, values: Sequence, field: Field = GF2) -> "Vector":
        ent = {}
        for i, x in enumerate(values):
            x = field.coerce(x)
            if x:
                ent[i] = x
        return cls(len(values), ent)

    def to_dense(self, field: Field = GF2) -> list:
        out = [field.zero] * self.length
        for i, v in self.entries.items():
            out[i] = v
        return out

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.length == other.length and self.entries == other.entries


class SparseMatrix:
    """A ``rows x cols`` matrix over ``field`` stored by rows.

    ``entries`` may be a mapping ``{(r, c): x}`` or an iterable of
    ``(r, c, x)`` triples.  Scalars are coerced into the field and zeros are
    dropped; a repeated ``(r, c)`` pair is rejected.
    """

    __slots__ = ("rows", "cols", "field", "_data")

    def __init__(self, rows: int, cols: int, entries=(), field: Field = GF2):
        self.rows = rows
        self.cols = cols
        self.field = field
        if field.is_gf2:
            data: List = [0] * rows
        else:
            data = [dict() for _ in range(rows)]
        seen = set()
        items = entries.items() if isinstance(entries, dict) else entries
        for item in items:
            if isinstance(entries, dict):
                (r, c), x = item
            else:
                r, c, x = item
            if not (0 <= r < rows and 0 <= c < cols):
                raise MalformedInputError(f"entry ({r}, {c}) outside {rows}x{cols}")
            if (r, c) in seen:
                raise MalformedInputError(f"duplicate entry ({r}, {c})")
            seen.add((r, c))
            x = field.coerce(x)
            if not x:
                continue
            if field.is_gf2:
                data[r] |= 1 << c
            else:
                data[r][c] = x
        self._data = data

    # construction helpers ----------------------------------------------
    @classmethod
    def _from_rows(cls, rows: int, cols: int, data: list, field: Field) -> "SparseMatrix":
        m = cls.__new__(cls)
        m.rows, m.cols, m.field, m._data = rows, cols, field, data
        return m

    @classmethod
    def from_dense(cls, a: Sequence[Sequence], field: Field = GF2) -> "SparseMatrix":
        rows = len(a)
        cols = len(a[0]) if rows else 0
        ent = [(i, j, x) for i, row in enumerate(a) for j, x in enumerate(row) if x]
        return cls(rows, cols, ent, field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = GF2) -> "SparseMatrix":
        return cls(rows, cols, (), field)

    @classmethod
    def identity(cls, n: int, field: Field = GF2) -> "SparseMatrix":
        return cls(n, n, ((i, i, 1) for i in range(n)), field)

    # access ------------------------------------------------------------
    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def row(self, r: int) -> Dict[int, object]:
        if self.field.is_gf2:
            return {c: 1 for c in _bits(self._data[r])}
        return dict(self._data[r])

    def row_bits(self, r: int) -> int:
        """Packed GF(2) row."""
        return self._data[r]

    def items(self) -> Iterator[Tuple[int, int, object]]:
        """Nonzero entries in row-major order."""
        if self.field.is_gf2:
            for r, bits in enumerate(self._data):
                for c in _bits(bits):
                    yield r, c, 1
        else:
            for r, row in enumerate(self._data):
                for c in sorted(row):
                    yield r, c, row[c]

    def __getitem__(self, rc):
        r, c = rc
        if self.field.is_gf2:
            return (self._data[r] >> c) & 1
        return self._data[r].get(c, self.field.zero)

    def nnz(self) -> int:
        if self.field.is_gf2:
            return sum(bin(b).count("1") for b in self._data)
        return sum(len(r) for r in self._data)

    def to_dense(self) -> List[list]:
        out = [[self.field.zero] * self.cols for _ in range(self.rows)]
        for r, c, x in self.items():
            out[r][c] = x
        return out

    def is_zero(self) -> bool:
        return not any(self._data)

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.shape == other.shape and self.field == other.field
                and self._data == other._data)

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz()}, field={self.field})"

    # algebra -----------------------------------------------------------
    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, ((c, r, x) for r, c, x in self.items()), self.field)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise MalformedInputError(f"cannot multiply {self.shape} by {other.shape}")
        f = self.field
        if f.is_gf2:
            data = []
            for bits in self._data:
                acc = 0
                for k in _bits(bits):
                    acc ^= other._data[k]
                data.append(acc)
            return SparseMatrix._from_rows(self.rows, other.cols, data, f)
        data = []
        for row in self._data:
            acc: Dict[int, object] = {}
            for k, a in row.items():
                for c, b in other._data[k].items():
                    v = f.add(acc.get(c, f.zero), f.mul(a, b))
                    if v:
                        acc[c] = v
                    else:
                        acc.pop(c, None)
            data.append(acc)
        return SparseMatrix._from_rows(self.rows, other.cols, data, f)

    def scale(self, x) -> "SparseMatrix":
        x = self.field.coerce(x)
        return SparseMatrix(self.rows, self.cols,
                            ((r, c, self.field.mul(v, x)) for r, c, v in self.items()), self.field)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape != other.shape:
            raise MalformedInputError("shape mismatch in addition")
        f = self.field
        if f.is_gf2:
            return SparseMatrix._from_rows(self.rows, self.cols,
                                           [a ^ b for a, b in zip(self._data, other._data)], f)
        data = []
        for a, b in zip(self._data, other._data):
            acc = dict(a)
            for c, x in b.items():
                v = f.add(acc.get(c, f.zero), x)
                if v:
                    acc[c] = v
                else:
                    acc.pop(c, None)
            data.append(acc)
        return SparseMatrix._from_rows(self.rows, self.cols, data, f)

    def apply(self, v: Vector) -> Vector:
        """Matrix-vector product ``self @ v``."""
        if v.length != self.cols:
            raise MalformedInputError(f"vector length {v.length} != {self.cols} columns")
        f = self.field
        out = {}
        for r in range(self.rows):
            if f.is_gf2:
                bits = self._data[r]
                s = sum(x for c, x in v.entries.items() if (bits >> c) & 1) % 2
            else:
                row = self._data[r]
                s = f.zero
                for c, x in v.entries.items():
                    a = row.get(c)
                    if a:
                        s = f.add(s, f.mul(a, x))
            if s:
                out[r] = s
        return Vector(self.rows, out)


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# ---------------------------------------------------------------------------
# elimination kernels


def _echelon_gf2(rows: Iterable[int]) -> Dict[int, int]:
    """Return ``{pivot_bit: row}`` for the packed GF(2) rows (not reduced)."""
    pivots: Dict[int, int] = {}
    get = pivots.get
    for r in rows:
        while r:
            low = r & -r
            p = get(low)
            if p is None:
                pivots[low] = r
                break
            r ^= p
    return pivots


def _rref_gf2(rows: Iterable[int]) -> Dict[int, int]:
    """Reduced echelon form: ``{pivot_col: row}`` with pivot columns cleared elsewhere."""
    piv = _echelon_gf2(rows)
    out: Dict[int, int] = {}
    # process pivots right to left so each row only needs already-reduced rows
    for low in sorted(piv, reverse=True):
        r = piv[low]
        rest = r ^ low
        for c in _bits(rest):
            q = out.get(c)
            if q is not None:
                r ^= q
        out[low.bit_length() - 1] = r
    return out


def _echelon_generic(rows: Iterable[Dict[int, object]], f: Field) -> Dict[int, Dict[int, object]]:
    """``{pivot_col: row}`` with each pivot row normalised to leading 1."""
    pivots: Dict[int, Dict[int, object]] = {}
    for row in rows:
        r = dict(row)
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                inv = f.inv(r[c])
                pivots[c] = {k: f.mul(v, inv) for k, v in r.items()}
                break
            _axpy(r, p, f.neg(r[c]), f)
    return pivots


def _axpy(r: Dict[int, object], p: Dict[int, object], a, f: Field) -> None:
    """In place ``r += a * p``."""
    for k, v in p.items():
        x = f.add(r.get(k, f.zero), f.mul(a, v))
        if x:
            r[k] = x
        else:
            r.pop(k, None)


def _rref_generic(rows, f: Field) -> Dict[int, Dict[int, object]]:
    piv = _echelon_generic(rows, f)
    out: Dict[int, Dict[int, object]] = {}
    for c in sorted(piv, reverse=True):
        r = dict(piv[c])
        for k in sorted(k for k in r if k != c):
            q = out.get(k)
            if q is not None and k in r:
                _axpy(r, q, f.neg(r[k]), f)
        out[c] = r
    return out


# ---------------------------------------------------------------------------
# public operations


def rank(m: SparseMatrix, field: Optional[Field] = None) -> int:
    """Rank of ``m`` by leftmost-pivot Gaussian elimination."""
    m = _in_field(m, field)
    if m.field.is_gf2:
        # eliminate along whichever side gives shorter packed rows
        data = m._data if m.cols <= m.rows else m.transpose()._data
        return len(_echelon_gf2(data))
    return len(_echelon_generic(m._data, m.field))


def kernel_basis(m: SparseMatrix, field: Optional[Field] = None) -> List[Vector]:
    """Basis of ``{x : m x = 0}``, one vector per free column in increasing order."""
    m = _in_field(m, field)
    f = m.field
    basis = []
    if f.is_gf2:
        red = _rref_gf2(m._data)
        by_col = {}  # free column -> pivot columns whose row contains it
        for c, r in red.items():
            for k in _bits(r ^ (1 << c)):
                by_col.setdefault(k, []).append(c)
        for j in range(m.cols):
            if j in red:
                continue
            ent = {j: 1}
            for c in by_col.get(j, ()):
                ent[c] = 1
            basis.append(Vector(m.cols, ent))
        return basis
    red = _rref_generic(m._data, f)
    by_col = {}
    for c, r in red.items():
        for k, v in r.items():
            if k != c:
                by_col.setdefault(k, []).append((c, v))
    for j in range(m.cols):
        if j in red:
            continue
        ent = {j: f.one}
        for c, v in by_col.get(j, ()):
            ent[c] = f.neg(v)
        basis.append(Vector(m.cols, ent))
    return basis


def coordinates_in_span(basis: Sequence[Vector], v: Vector, field: Field = GF2) -> Optional[Vector]:
    """Coefficients ``c`` with ``sum(c[i] * basis[i]) == v``, or ``None``.

    If ``basis`` is linearly dependent, vectors that reduce to zero against
    earlier ones get coefficient 0.
    """
    for b in basis:
        if b.length != v.length:
            raise MalformedInputError(f"length mismatch: {b.length} != {v.length}")
    red = SpanReducer(v.length, field)
    for i, b in enumerate(basis):
        red.add(b, tag=i)
    coeffs = red.express(v)
    if coeffs is None:
        return None
    return Vector(len(basis), coeffs)


class SpanReducer:
    """Incrementally built echelon basis of a subspace, with provenance.

    Each stored pivot row remembers which tagged input vectors it is a
    combination of, so membership tests can return coordinates.
    """

    def __init__(self, length: int, field: Field = GF2):
        self.length = length
        self.field = field
        # pivot column -> (row, combination of tags)
        self._piv: Dict[int, Tuple[Dict[int, object], Dict[object, object]]] = {}

    def __len__(self):
        return len(self._piv)

    def _reduce(self, row: Dict[int, object], comb: Dict[object, object]):
        f = self.field
        row = dict(row)
        comb = dict(comb)
        while True:
            hit = None
            for c in sorted(row):
                if c in self._piv:
                    hit = c
                    break
            if hit is None:
                return row, comb
            prow, pcomb = self._piv[hit]
            a = f.neg(row[hit])
            _axpy(row, prow, a, f)
            _axpy(comb, pcomb, a, f)

    def add(self, v: Vector, tag=None) -> bool:
        """Insert ``v``; return False if it was already in the span."""
        f = self.field
        row, comb = self._reduce({k: f.coerce(x) for k, x in v.entries.items()},
                                 {} if tag is None else {tag: f.one})
        if not row:
            return False
        c = min(row)
        inv = f.inv(row[c])
        self._piv[c] = ({k: f.mul(x, inv) for k, x in row.items()},
                        {k: f.mul(x, inv) for k, x in comb.items()})
        return True

    def contains(self, v: Vector) -> bool:
        row, _ = self._reduce({k: self.field.coerce(x) for k, x in v.entries.items()}, {})
        return not row

    def express(self, v: Vector) -> Optional[Dict[object, object]]:
        """Tag coordinates of ``v`` (zeros omitted), or None if outside the span."""
        f = self.field
        row, comb = self._reduce({k: f.coerce(x) for k, x in v.entries.items()}, {})
        if row:
            return None
        return {k: f.neg(x) for k, x in comb.items() if x}


def _in_field(m: SparseMatrix, field: Optional[Field]) -> SparseMatrix:
    if field is None or field == m.field:
        return m
    return SparseMatrix(m.rows, m.cols, ((r, c, x) for r, c, x in m.items()), field)
