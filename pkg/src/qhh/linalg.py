"""Sparse exact linear algebra over a :class:`~qhh.field.Field`.

Vectors are plain dicts ``{index: scalar}`` without stored zeros. Subspaces
are kept in reduced row echelon form, which is unique for a given subspace,
so every basis and transversal derived from one is reproducible.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence

from .field import Field

Vector = Dict[int, object]


def axpy(y: Vector, c, x: Vector, field: Field) -> Vector:
    """Return ``y + c*x`` as a new vector."""
    out = dict(y)
    if not c:
        return out
    for k, v in x.items():
        s = field.norm(out.get(k, 0) + c * v)
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def scale(c, x: Vector, field: Field) -> Vector:
    if not c:
        return {}
    out = {}
    for k, v in x.items():
        s = field.norm(c * v)
        if s:
            out[k] = s
    return out


def clean(x: Vector, field: Field) -> Vector:
    out = {}
    for k, v in x.items():
        v = field(v)
        if v:
            out[k] = v
    return out


class Subspace:
    """A subspace of ``field^n`` held as RREF rows keyed by pivot column."""

    def __init__(self, n: int, field: Field, vectors: Iterable[Vector] = ()):
        self.n = n
        self.field = field
        self._rows: Dict[int, Vector] = {}
        for v in vectors:
            self.add(v)

    # -- construction -----------------------------------------------------
    def add(self, v: Vector) -> bool:
        """Insert ``v``; returns False if it was already in the span."""
        r = self.reduce(v)
        if not r:
            return False
        f = self.field
        p = min(r)
        inv = f.inv(r[p])
        r = scale(inv, r, f)
        for q, row in self._rows.items():
            c = row.get(p)
            if c:
                self._rows[q] = axpy(row, -c, r, f)
        self._rows[p] = r
        return True

    def copy(self) -> "Subspace":
        s = Subspace(self.n, self.field)
        s._rows = {p: dict(r) for p, r in self._rows.items()}
        return s

    @classmethod
    def coordinate(cls, n: int, field: Field, indices: Iterable[int]) -> "Subspace":
        s = cls(n, field)
        for i in indices:
            s._rows[i] = {i: field.one}
        return s

    # -- queries ----------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self._rows)

    @property
    def basis(self) -> List[Vector]:
        return [self._rows[p] for p in sorted(self._rows)]

    def reduce(self, v: Vector) -> Vector:
        """Remainder of ``v`` after clearing every pivot column."""
        f = self.field
        out = dict(v)
        for p, row in self._rows.items():
            c = out.get(p)
            if c:
                out = axpy(out, -c, row, f)
        return out

    def __contains__(self, v: Vector) -> bool:
        return not self.reduce(v)

    def coordinates(self, v: Vector) -> List:
        """Coefficients of ``v`` in :attr:`basis`; raises if ``v`` is outside."""
        if self.reduce(v):
            raise ValueError("vector not in subspace")
        return [v.get(p, self.field.zero) for p in sorted(self._rows)]

    def issubspace(self, other: "Subspace") -> bool:
        return all(r in other for r in self._rows.values())

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __repr__(self):
        return f"Subspace(dim={self.dim}, n={self.n})"

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "Subspace") -> "Subspace":
        s = self.copy()
        for r in other._rows.values():
            s.add(r)
        return s

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus intersection."""
        n, f = self.n, self.field
        z = Subspace(2 * n, f)
        for r in self._rows.values():
            z.add({**r, **{k + n: v for k, v in r.items()}})
        for r in other._rows.values():
            z.add(dict(r))
        out = Subspace(n, f)
        for p, row in z._rows.items():
            if p >= n:
                out.add({k - n: v for k, v in row.items()})
        return out

    def restrict_support(self, indices: Iterable[int]) -> "Subspace":
        return self.intersect(Subspace.coordinate(self.n, self.field, indices))

    def transversal(self, sub: "Subspace") -> List[Vector]:
        """Canonical complement basis of ``sub`` inside ``self``.

        Rows of ``self`` are reduced modulo ``sub`` and the remainders put
        in RREF; the result is independent of any insertion order.
        """
        t = Subspace(self.n, self.field)
        for r in self.basis:
            t.add(sub.reduce(r))
        return t.basis


class Quotient:
    """``numerator / denominator`` with canonical representatives."""

    def __init__(self, numerator: Subspace, denominator: Subspace):
        if not denominator.issubspace(numerator):
            raise ValueError("denominator is not contained in numerator")
        self.numerator = numerator
        self.denominator = denominator
        self.transversal = numerator.transversal(denominator)
        self._tpiv = [min(t) for t in self.transversal]

    @property
    def dim(self) -> int:
        return len(self.transversal)

    def class_coordinates(self, v: Vector) -> List:
        """Coordinates of the class of ``v`` (which must lie in the numerator)."""
        if v not in self.numerator:
            raise ValueError("vector not in numerator")
        r = self.denominator.reduce(v)
        zero = self.numerator.field.zero
        return [r.get(p, zero) for p in self._tpiv]

    def is_zero_class(self, v: Vector) -> bool:
        return v in self.denominator


class ExactMatrix:
    """Sparse ``rows x cols`` matrix stored column-wise."""

    def __init__(self, rows: int, cols: int, field: Field,
                 columns: Optional[Sequence[Vector]] = None):
        self.rows = rows
        self.cols = cols
        self.field = field
        if columns is None:
            columns = [{} for _ in range(cols)]
        if len(columns) != cols:
            raise ValueError("column count mismatch")
        self._cols = [clean(c, field) for c in columns]
        for c in self._cols:
            for i in c:
                if not 0 <= i < rows:
                    raise IndexError(f"row index {i} out of range")

    @classmethod
    def from_entries(cls, rows, cols, field, entries: Dict) -> "ExactMatrix":
        columns = [{} for _ in range(cols)]
        for (i, j), v in entries.items():
            columns[j][i] = v
        return cls(rows, cols, field, columns)

    @property
    def entries(self) -> Dict:
        return {(i, j): v for j, c in enumerate(self._cols) for i, v in c.items()}

    def column(self, j: int) -> Vector:
        return self._cols[j]

    def row_vectors(self) -> List[Vector]:
        out = [dict() for _ in range(self.rows)]
        for j, c in enumerate(self._cols):
            for i, v in c.items():
                out[i][j] = v
        return out

    def apply(self, x: Vector) -> Vector:
        f = self.field
        out: Vector = {}
        for j, c in x.items():
            out = axpy(out, c, self._cols[j], f)
        return out

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        return ExactMatrix(self.rows, other.cols, self.field,
                           [self.apply(c) for c in other._cols])

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, self.field, self.row_vectors())

    def is_zero(self) -> bool:
        return not any(self._cols)

    def image(self) -> Subspace:
        return Subspace(self.rows, self.field, self._cols)

    def rank(self) -> int:
        return self.image().dim

    def kernel(self) -> Subspace:
        """Null space, spanned by the free-column vectors of the row RREF."""
        f = self.field
        rs = Subspace(self.cols, f, self.row_vectors())
        piv = rs._rows
        free = [j for j in range(self.cols) if j not in piv]
        vecs = []
        for j in free:
            v = {j: f.one}
            for p, row in piv.items():
                c = row.get(j)
                if c:
                    v[p] = f.norm(-c)
            vecs.append(v)
        return Subspace(self.cols, f, vecs)

    def restrict_columns(self, cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(self.rows, len(cols), self.field, [self._cols[j] for j in cols])

    def restrict_rows(self, rows: Sequence[int]) -> "ExactMatrix":
        index = {r: k for k, r in enumerate(rows)}
        cols = [{index[i]: v for i, v in c.items() if i in index} for c in self._cols]
        return ExactMatrix(len(rows), self.cols, self.field, cols)

    def to_dense(self) -> List[List]:
        z = self.field.zero
        return [[self._cols[j].get(i, z) for j in range(self.cols)] for i in range(self.rows)]

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, nnz={sum(map(len, self._cols))})"
