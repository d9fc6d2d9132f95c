"""Exact dense linear algebra over a coefficient field.

Everything is deterministic: Gauss-Jordan elimination pivots on the first
nonzero entry in row order, so reduced row echelon form is a canonical
representative and subspaces compare by plain equality of their bases.
Rows are Python lists while being reduced and frozen tuples afterwards.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import AmbientMismatch, BadShape
from .fields import Field, PrimeField, Scalar, require_same_field

Vector = Tuple[Scalar, ...]


def _rref_mod_inplace(rows: List[List[int]], p: int) -> List[int]:
    """Row reduce over F_p. Returns pivot column indices."""
    if not rows:
        return []
    ncols = len(rows[0])
    nrows = len(rows)
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        row = rows[r]
        a = row[c]
        if a != 1:
            ia = pow(a, p - 2, p)
            for t in range(c, ncols):
                row[t] = row[t] * ia % p
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    for t in range(c, ncols):
                        ri[t] = (ri[t] - f * row[t]) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def _rref_exact_inplace(rows: List[list]) -> List[int]:
    """Row reduce with Fraction entries. Returns pivot column indices."""
    if not rows:
        return []
    ncols = len(rows[0])
    nrows = len(rows)
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        row = rows[r]
        a = row[c]
        if a != 1:
            for t in range(c, ncols):
                row[t] = row[t] / a
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    for t in range(c, ncols):
                        ri[t] = ri[t] - f * row[t]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref_rows(field: Field, rows: List[list]) -> List[int]:
    """Reduce mutable rows in place; returns pivot columns."""
    if isinstance(field, PrimeField):
        return _rref_mod_inplace(rows, field.p)
    return _rref_exact_inplace(rows)


@dataclass(frozen=True)
class Matrix:
    """Dense matrix; entries row-major over a single field."""

    field: Field
    rows: Tuple[Vector, ...]
    cols: int

    @staticmethod
    def from_rows(field: Field, rows: Sequence[Sequence[Scalar]], cols: Optional[int] = None) -> "Matrix":
        rows = [tuple(field.coerce(x) for x in row) for row in rows]
        if rows:
            width = len(rows[0])
            if cols is not None and cols != width:
                raise BadShape(f"declared {cols} columns but rows have {width}")
            cols = width
            if any(len(r) != cols for r in rows):
                raise BadShape("ragged rows")
        elif cols is None:
            raise BadShape("empty matrix needs an explicit column count")
        return Matrix(field, tuple(rows), cols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def rref(self) -> Tuple["Matrix", int, Tuple[int, ...]]:
        work = [list(r) for r in self.rows]
        pivots = rref_rows(self.field, work)
        rank = len(pivots)
        return Matrix(self.field, tuple(tuple(r) for r in work), self.cols), rank, tuple(pivots)

    def kernel(self) -> "Subspace":
        """Canonical basis of {v : M v = 0}."""
        work = [list(r) for r in self.rows]
        pivots = rref_rows(self.field, work)
        field = self.field
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for f in free:
            v = [field.zero] * self.cols
            v[f] = field.one
            for i, pc in enumerate(pivots):
                v[pc] = field.neg(work[i][f])
            basis.append(v)
        return Subspace.from_rows(field, self.cols, basis)


def rref(m: Matrix) -> Tuple[Matrix, int, Tuple[int, ...]]:
    return m.rref()


def kernel(m: Matrix) -> "Subspace":
    return m.kernel()


class Subspace:
    """A subspace held by its canonical RREF basis (no zero rows).

    Equality of subspaces is equality of representations, which the
    canonical form makes sound. The basis rows have pivot entries 1 and
    strictly increasing pivot columns.
    """

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field: Field, ambient: int, basis: Tuple[Vector, ...], pivots: Tuple[int, ...]):
        self.field = field
        self.ambient = ambient
        self.basis = basis
        self.pivots = pivots

    @staticmethod
    def from_rows(field: Field, ambient: int, rows: Iterable[Sequence[Scalar]]) -> "Subspace":
        work = [list(r) for r in rows]
        for r in work:
            if len(r) != ambient:
                raise AmbientMismatch(f"row of length {len(r)} in ambient dimension {ambient}")
        pivots = rref_rows(field, work)
        basis = tuple(tuple(work[i]) for i in range(len(pivots)))
        return Subspace(field, ambient, basis, tuple(pivots))

    @staticmethod
    def zero(field: Field, ambient: int) -> "Subspace":
        return Subspace(field, ambient, (), ())

    @staticmethod
    def full(field: Field, ambient: int) -> "Subspace":
        one, zero = field.one, field.zero
        basis = tuple(tuple(one if j == i else zero for j in range(ambient)) for i in range(ambient))
        return Subspace(field, ambient, basis, tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, vec: Sequence[Scalar]) -> List[Scalar]:
        """Residual of vec after elimination against the basis."""
        v = list(vec)
        if len(v) != self.ambient:
            raise AmbientMismatch(f"vector of length {len(v)} in ambient {self.ambient}")
        field = self.field
        if isinstance(field, PrimeField):
            p = field.p
            for row, j in zip(self.basis, self.pivots):
                c = v[j]
                if c:
                    for t in range(j, self.ambient):
                        v[t] = (v[t] - c * row[t]) % p
        else:
            for row, j in zip(self.basis, self.pivots):
                c = v[j]
                if c:
                    for t in range(j, self.ambient):
                        v[t] = v[t] - c * row[t]
        return v

    def contains(self, vec: Sequence[Scalar]) -> bool:
        return not any(self.reduce(vec))

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return all(self.contains(row) for row in other.basis)

    def sum_with(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.from_rows(self.field, self.ambient, list(self.basis) + list(other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        """Exact intersection via the relation kernel of stacked bases."""
        self._check_compatible(other)
        r, s = self.dim, other.dim
        if r == 0 or s == 0:
            return Subspace.zero(self.field, self.ambient)
        field = self.field
        # columns: r coefficients on self.basis then s on other.basis
        rows = []
        for t in range(self.ambient):
            row = [self.basis[i][t] for i in range(r)]
            row += [field.neg(other.basis[j][t]) for j in range(s)]
            rows.append(row)
        rel = Matrix.from_rows(field, rows).kernel()
        vecs = []
        for coeffs in rel.basis:
            v = [field.zero] * self.ambient
            for i in range(r):
                c = coeffs[i]
                if c:
                    row = self.basis[i]
                    for t in range(self.ambient):
                        v[t] = field.add(v[t], field.mul(c, row[t]))
            vecs.append(v)
        return Subspace.from_rows(field, self.ambient, vecs)

    def meets_nontrivially(self, other: "Subspace") -> bool:
        """True iff the intersection is nonzero. Rank counting, no basis built."""
        self._check_compatible(other)
        if self.dim == 0 or other.dim == 0:
            return False
        # rank(self + other) < dim self + dim other  iff  intersection != 0
        extra = _StackedRank(other)
        for row in self.basis:
            extra.add(row)
        return extra.added < self.dim

    def element_count(self) -> int:
        if not self.field.finite:
            from .errors import InfiniteField

            raise InfiniteField("cannot count points of a rational subspace")
        return self.field.order ** self.dim

    def elements(self, include_zero: bool = False) -> Iterator[Vector]:
        """Deterministic sweep: index -> base-p digits -> combination of basis rows.

        Digit significance matches element enumeration of algebras: the
        least significant digit scales the first basis row.
        """
        if not self.field.finite:
            from .errors import InfiniteField

            raise InfiniteField("cannot enumerate a rational subspace")
        p = self.field.order
        d = self.dim
        total = p**d
        start = 0 if include_zero else 1
        basis = self.basis
        amb = self.ambient
        for idx in range(start, total):
            v = [0] * amb
            rem = idx
            for bi in range(d):
                digit = rem % p
                rem //= p
                if digit:
                    row = basis[bi]
                    for t in range(amb):
                        v[t] = (v[t] + digit * row[t]) % p
            yield tuple(v)

    def sort_key(self):
        return (self.dim, self.pivots, self.basis)

    def _check_compatible(self, other: "Subspace") -> None:
        require_same_field(self.field, other.field)
        if self.ambient != other.ambient:
            raise AmbientMismatch(f"ambient {self.ambient} vs {other.ambient}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.field, self.ambient, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


class _StackedRank:
    """Incremental rank tracker seeded with a fixed RREF basis."""

    def __init__(self, seed: Subspace):
        self.field = seed.field
        self.ambient = seed.ambient
        self.rows: List[List[Scalar]] = [list(r) for r in seed.basis]
        self.pivots: List[int] = list(seed.pivots)
        self.added = 0

    def add(self, vec: Sequence[Scalar]) -> bool:
        """Reduce vec against current rows; absorb and report True if independent."""
        field = self.field
        v = list(vec)
        if isinstance(field, PrimeField):
            p = field.p
            for row, j in zip(self.rows, self.pivots):
                c = v[j]
                if c:
                    for t in range(j, self.ambient):
                        v[t] = (v[t] - c * row[t]) % p
        else:
            for row, j in zip(self.rows, self.pivots):
                c = v[j]
                if c:
                    for t in range(j, self.ambient):
                        v[t] = v[t] - c * row[t]
        piv = next((t for t, x in enumerate(v) if x), -1)
        if piv < 0:
            return False
        c = v[piv]
        if c != field.one:
            ic = field.inv(c)
            v = [field.mul(ic, x) for x in v]
        # keep rows sorted by pivot so later reductions stay one pass
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < piv:
            pos += 1
        self.rows.insert(pos, v)
        self.pivots.insert(pos, piv)
        self.added += 1
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    return u.sum_with(v)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    return u.intersect(v)


def contains(u: Subspace, vec: Sequence[Scalar]) -> bool:
    return u.contains(vec)
