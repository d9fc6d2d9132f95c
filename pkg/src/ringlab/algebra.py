"""Finite-dimensional associative unital algebras over an exact field.

An algebra is given by its dimension n, the coordinates of 1, and the
structure constants c[i][j][k] with b_i b_j = sum_k c[i][j][k] b_k.
Elements are plain coordinate tuples. Multiplication runs off a sparse
form of the tensor, which keeps exhaustive sweeps over all p^n elements
affordable for the dimensions this package targets (n <= ~50, and
p^n <= 2^24 for the sweeps themselves).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import (
    BadShape,
    DimensionMismatch,
    ImproperIdeal,
    InfiniteField,
    NoUnit,
    NotAnIdeal,
    NotAssociative,
    NotClosed,
    UnitLawFails,
)
from .fields import Field, PrimeField, Scalar, require_same_field
from .linalg import Matrix, Subspace, Vector, _StackedRank

SparseRow = Tuple[Tuple[int, Scalar], ...]


@dataclass(frozen=True)
class MatrixRep:
    """Faithful matrix picture of an algebra: one k x k grid per basis element."""

    size: int
    mats: Tuple[Tuple[Vector, ...], ...]

    def to_matrix(self, field: Field, coords: Sequence[Scalar]) -> Tuple[Vector, ...]:
        k = self.size
        acc = [[field.zero] * k for _ in range(k)]
        for i, ci in enumerate(coords):
            if ci:
                grid = self.mats[i]
                for r in range(k):
                    row = grid[r]
                    for c in range(k):
                        if row[c]:
                            acc[r][c] = field.add(acc[r][c], field.mul(ci, row[c]))
        return tuple(tuple(r) for r in acc)


class Algebra:
    """Validated associative unital algebra; immutable after construction."""

    def __init__(
        self,
        field: Field,
        dim: int,
        unit: Sequence[Scalar],
        table: Sequence[Sequence[Sequence[Scalar]]],
        names: Sequence[str],
        rep: Optional[MatrixRep] = None,
        coord_names: Optional[Sequence[str]] = None,
        _validate_associativity: bool = True,
    ):
        if dim < 1:
            raise BadShape("algebra dimension must be at least 1")
        if len(names) != dim:
            raise BadShape(f"expected {dim} basis names, got {len(names)}")
        if len(set(names)) != dim:
            raise BadShape("basis names must be distinct")
        unit = tuple(field.coerce(x) for x in unit)
        if len(unit) != dim:
            raise BadShape(f"unit vector has length {len(unit)}, expected {dim}")
        if len(table) != dim or any(
            len(ti) != dim or any(len(tij) != dim for tij in ti) for ti in table
        ):
            raise BadShape("structure constants must form an n*n*n tensor")
        self.field = field
        self.dim = dim
        self.unit = unit
        self.names = tuple(names)
        self.coord_names = tuple(coord_names) if coord_names else tuple(names)
        self.table: Tuple[Tuple[Vector, ...], ...] = tuple(
            tuple(tuple(field.coerce(x) for x in tij) for tij in ti) for ti in table
        )
        self._srows: Tuple[Tuple[SparseRow, ...], ...] = tuple(
            tuple(
                tuple((k, c) for k, c in enumerate(tij) if c)
                for tij in ti
            )
            for ti in self.table
        )
        self.rep = rep
        self._memo: Dict = {}
        self._validate(check_associativity=_validate_associativity)

    # -- validation ---------------------------------------------------
    def _validate(self, check_associativity: bool) -> None:
        n = self.dim
        for i in range(n):
            b = self.basis_vector(i)
            if self.multiply(self.unit, b) != b:
                raise UnitLawFails(i)
            if self.multiply(b, self.unit) != b:
                raise UnitLawFails(i)
        if not check_associativity:
            return
        field = self.field
        srows = self._srows
        zero = field.zero
        for i in range(n):
            srows_i = srows[i]
            for j in range(n):
                row_ij = srows_i[j]
                for k in range(n):
                    lhs = [zero] * n
                    for l, c in row_ij:
                        for m, d in srows[l][k]:
                            lhs[m] = field.add(lhs[m], field.mul(c, d))
                    rhs = [zero] * n
                    for l, c in srows[j][k]:
                        for m, d in srows_i[l]:
                            rhs[m] = field.add(rhs[m], field.mul(c, d))
                    if lhs != rhs:
                        raise NotAssociative((i, j, k))

    # -- basic vectors ------------------------------------------------
    def zero_element(self) -> Vector:
        return tuple([self.field.zero] * self.dim)

    def basis_vector(self, i: int) -> Vector:
        z = self.field.zero
        one = self.field.one
        return tuple(one if j == i else z for j in range(self.dim))

    def element(self, coords: Sequence) -> Vector:
        v = tuple(self.field.coerce(x) for x in coords)
        if len(v) != self.dim:
            raise DimensionMismatch(f"length {len(v)} vs dimension {self.dim}")
        return v

    # -- arithmetic ---------------------------------------------------
    def add(self, u: Vector, v: Vector) -> Vector:
        f = self.field
        return tuple(f.add(a, b) for a, b in zip(u, v))

    def sub(self, u: Vector, v: Vector) -> Vector:
        f = self.field
        return tuple(f.sub(a, b) for a, b in zip(u, v))

    def scale(self, c: Scalar, v: Vector) -> Vector:
        f = self.field
        return tuple(f.mul(c, x) for x in v)

    def multiply(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
        n = self.dim
        if len(u) != n or len(v) != n:
            raise DimensionMismatch(f"element lengths {len(u)}, {len(v)} vs dimension {n}")
        srows = self._srows
        field = self.field
        if isinstance(field, PrimeField):
            p = field.p
            acc = [0] * n
            for i, ui in enumerate(u):
                if ui:
                    rows_i = srows[i]
                    for j, vj in enumerate(v):
                        if vj:
                            w = ui * vj
                            for k, c in rows_i[j]:
                                acc[k] += w * c
            return tuple(a % p for a in acc)
        acc = [field.zero] * n
        for i, ui in enumerate(u):
            if ui:
                rows_i = srows[i]
                for j, vj in enumerate(v):
                    if vj:
                        w = ui * vj
                        for k, c in rows_i[j]:
                            acc[k] = acc[k] + w * c
        return tuple(acc)

    def commutator(self, u: Vector, v: Vector) -> Vector:
        return self.sub(self.multiply(u, v), self.multiply(v, u))

    def power(self, u: Vector, e: int) -> Vector:
        if e < 1:
            raise ValueError("power expects a positive exponent")
        acc = u
        for _ in range(e - 1):
            acc = self.multiply(acc, u)
        return acc

    def right_multiples(self, m: Sequence[Scalar]) -> List[List[Scalar]]:
        """Rows m*b_j for all j; spans the principal right ideal of m."""
        n = self.dim
        field = self.field
        srows = self._srows
        if isinstance(field, PrimeField):
            p = field.p
            out = []
            for j in range(n):
                acc = [0] * n
                for i, mi in enumerate(m):
                    if mi:
                        for k, c in srows[i][j]:
                            acc[k] += mi * c
                out.append([a % p for a in acc])
            return out
        out = []
        for j in range(n):
            acc = [field.zero] * n
            for i, mi in enumerate(m):
                if mi:
                    for k, c in srows[i][j]:
                        acc[k] = acc[k] + mi * c
            out.append(acc)
        return out

    def left_multiples(self, m: Sequence[Scalar]) -> List[List[Scalar]]:
        """Rows b_j*m for all j; spans the principal left ideal of m."""
        n = self.dim
        field = self.field
        srows = self._srows
        if isinstance(field, PrimeField):
            p = field.p
            out = []
            for j in range(n):
                acc = [0] * n
                rows_j = srows[j]
                for i, mi in enumerate(m):
                    if mi:
                        for k, c in rows_j[i]:
                            acc[k] += mi * c
                out.append([a % p for a in acc])
            return out
        out = []
        for j in range(n):
            acc = [field.zero] * n
            rows_j = srows[j]
            for i, mi in enumerate(m):
                if mi:
                    for k, c in rows_j[i]:
                        acc[k] = acc[k] + mi * c
            out.append(acc)
        return out

    def left_operator_matrix(self, u: Sequence[Scalar]) -> Matrix:
        """Matrix of x -> u*x acting on coordinate columns."""
        cols = self.right_multiples(u)  # column j is u*b_j
        n = self.dim
        rows = tuple(tuple(cols[j][r] for j in range(n)) for r in range(n))
        return Matrix(self.field, rows, n)

    # -- commutativity ------------------------------------------------
    def is_commutative(self) -> Tuple[bool, Optional[Tuple[int, int]]]:
        """All basis pairs commute; first violating pair in index order otherwise."""
        key = "commutative"
        if key not in self._memo:
            verdict: Tuple[bool, Optional[Tuple[int, int]]] = (True, None)
            for i in range(self.dim):
                for j in range(i + 1, self.dim):
                    if self.table[i][j] != self.table[j][i]:
                        verdict = (False, (i, j))
                        break
                if not verdict[0]:
                    break
            self._memo[key] = verdict
        return self._memo[key]

    # -- enumeration ----------------------------------------------------
    def element_count(self) -> int:
        if not self.field.finite:
            raise InfiniteField("element count undefined over Q")
        return self.field.order ** self.dim

    def enumerate_elements(self) -> Iterator[Vector]:
        """All p^n coordinate vectors; index i maps to its base-p digits with
        the least significant digit in coordinate 0. The order is a contract."""
        if not self.field.finite:
            raise InfiniteField("cannot enumerate elements over Q")
        p = self.field.order
        n = self.dim
        v = [0] * n
        yield tuple(v)
        total = p**n
        for _ in range(total - 1):
            i = 0
            while True:
                v[i] += 1
                if v[i] == p:
                    v[i] = 0
                    i += 1
                else:
                    break
            yield tuple(v)

    def element_str(self, vec: Sequence[Scalar]) -> str:
        """Human form, e.g. "U + 2*Eb"; never raw indices."""
        field = self.field
        parts = []
        for i, c in enumerate(vec):
            if not c:
                continue
            if c == field.one:
                parts.append(self.names[i])
            else:
                parts.append(f"{field.format(c)}*{self.names[i]}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"Algebra(dim={self.dim}, field={self.field})"


def build_algebra(
    field: Field,
    dim: int,
    unit: Sequence,
    constants: Sequence[Sequence[Sequence]],
    names: Optional[Sequence[str]] = None,
    coord_names: Optional[Sequence[str]] = None,
) -> Algebra:
    """Validated construction from a dense structure-constant tensor.

    Associativity and the unit laws are verified exhaustively over basis
    triples; violations raise NotAssociative / UnitLawFails with the
    offending indices.
    """
    if names is None:
        names = [f"b{i}" for i in range(dim)]
    return Algebra(field, dim, unit, constants, names, coord_names=coord_names)


class _AugmentedSolver:
    """Solves coordinate problems  sum_i c_i row_i = target  for a fixed row list."""

    def __init__(self, field: Field, rows: Sequence[Sequence[Scalar]]):
        self.field = field
        self.count = len(rows)
        self.width = len(rows[0]) if rows else 0
        aug = []
        zero, one = field.zero, field.one
        for i, row in enumerate(rows):
            tail = [zero] * self.count
            tail[i] = one
            aug.append(list(row) + tail)
        self._rows = aug
        self._pivots: List[int] = []
        self._reduce_all()

    def _reduce_all(self) -> None:
        # RREF with pivots restricted to the first `width` columns
        field = self.field
        rows = self._rows
        r = 0
        for c in range(self.width):
            pr = -1
            for i in range(r, len(rows)):
                if rows[i][c]:
                    pr = i
                    break
            if pr < 0:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            row = rows[r]
            a = row[c]
            if a != field.one:
                ia = field.inv(a)
                for t in range(c, len(row)):
                    row[t] = field.mul(ia, row[t])
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    ri = rows[i]
                    for t in range(c, len(ri)):
                        ri[t] = field.sub(ri[t], field.mul(f, row[t]))
            self._pivots.append(c)
            r += 1
            if r == len(rows):
                break

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def solve(self, target: Sequence[Scalar]) -> Optional[List[Scalar]]:
        """Coefficients on the original rows, or None if target is outside the span."""
        field = self.field
        v = list(target) + [field.zero] * self.count
        for row, c in zip(self._rows, self._pivots):
            f = v[c]
            if f:
                for t in range(c, len(v)):
                    v[t] = field.sub(v[t], field.mul(f, row[t]))
        if any(v[: self.width]):
            return None
        return [field.neg(x) for x in v[self.width :]]


def _mat_mul(field: Field, a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> List[List[Scalar]]:
    k = len(a)
    out = [[field.zero] * k for _ in range(k)]
    for r in range(k):
        ar = a[r]
        outr = out[r]
        for m in range(k):
            c = ar[m]
            if c:
                bm = b[m]
                for t in range(k):
                    if bm[t]:
                        outr[t] = field.add(outr[t], field.mul(c, bm[t]))
    return out


def from_matrix_basis(
    field: Field,
    size: int,
    matrices: Sequence[Sequence[Sequence]],
    autoclose: bool = False,
    names: Optional[Sequence[str]] = None,
    coord_names: Optional[Sequence[str]] = None,
) -> Tuple[Algebra, MatrixRep]:
    """Algebra spanned by square matrices, with products expressed in that basis.

    The given matrices must be linearly independent; the span must contain
    the identity matrix (NoUnit otherwise) and be multiplicatively closed.
    With autoclose, products falling outside the span are appended as new
    basis elements until closure, capped at size*size; without it the
    first escaping product raises NotClosed with the witness pair.
    """
    k = size
    mats: List[Tuple[Vector, ...]] = []
    for mi, grid in enumerate(matrices):
        if len(grid) != k or any(len(row) != k for row in grid):
            raise BadShape(f"generator {mi} is not {k}x{k}")
        mats.append(tuple(tuple(field.coerce(x) for x in row) for row in grid))

    def vec(grid) -> List[Scalar]:
        return [x for row in grid for x in row]

    span = _StackedRank(Subspace.zero(field, k * k))
    for mi, grid in enumerate(mats):
        if not span.add(vec(grid)):
            raise BadShape(f"generator {mi} depends linearly on earlier generators")

    # close under multiplication; sweep all pairs until a pass adds nothing
    while True:
        size = len(mats)
        for i in range(size):
            for j in range(size):
                prod = _mat_mul(field, mats[i], mats[j])
                if span.add(vec(prod)):
                    if not autoclose:
                        raise NotClosed((i, j))
                    if len(mats) >= k * k:
                        raise NotClosed((i, j), "span closure exceeded the full matrix algebra cap")
                    mats.append(tuple(tuple(row) for row in prod))
        if len(mats) == size:
            break

    solver = _AugmentedSolver(field, [vec(g) for g in mats])
    identity = [[field.one if r == c else field.zero for c in range(k)] for r in range(k)]
    unit = solver.solve(vec(identity))
    if unit is None:
        raise NoUnit("identity matrix is not in the multiplicative span")

    n = len(mats)
    table = []
    for i in range(n):
        ti = []
        for j in range(n):
            coords = solver.solve(vec(_mat_mul(field, mats[i], mats[j])))
            assert coords is not None  # closure established above
            ti.append(coords)
        table.append(ti)

    if names is None:
        names = [f"m{i}" for i in range(n)]
    else:
        names = list(names) + [f"g{i}" for i in range(len(names), n)]
    rep = MatrixRep(size=k, mats=tuple(mats))
    alg = Algebra(
        field,
        n,
        unit,
        table,
        names,
        rep=rep,
        coord_names=coord_names,
        _validate_associativity=False,  # inherited from matrix multiplication
    )
    return alg, rep


@dataclass(frozen=True)
class QuotientMap:
    """Projection A -> A/I along the complement of I's pivot coordinates."""

    ideal: Subspace
    coords: Tuple[int, ...]  # ambient coordinates carrying the quotient

    def project(self, vec: Sequence[Scalar]) -> Vector:
        res = self.ideal.reduce(vec)
        return tuple(res[c] for c in self.coords)

    def lift(self, qvec: Sequence[Scalar]) -> Vector:
        amb = self.ideal.ambient
        field = self.ideal.field
        v = [field.zero] * amb
        for c, x in zip(self.coords, qvec):
            v[c] = x
        return tuple(v)


def quotient_algebra(algebra: Algebra, ideal: Subspace) -> Tuple[Algebra, QuotientMap]:
    """Quotient by a proper two-sided ideal, on complement-coordinate cosets.

    The projection is checked to be an algebra morphism on all basis pairs.
    """
    require_same_field(algebra.field, ideal.field)
    if ideal.ambient != algebra.dim:
        raise DimensionMismatch(f"ideal ambient {ideal.ambient} vs dimension {algebra.dim}")
    if ideal.dim == algebra.dim:
        raise ImproperIdeal("cannot form the quotient by the whole algebra")
    for row in ideal.basis:
        for j in range(algebra.dim):
            b = algebra.basis_vector(j)
            if not ideal.contains(algebra.multiply(row, b)):
                raise NotAnIdeal(f"not a right ideal: generator*{algebra.names[j]} escapes")
            if not ideal.contains(algebra.multiply(b, row)):
                raise NotAnIdeal(f"not a left ideal: {algebra.names[j]}*generator escapes")

    pivot_set = set(ideal.pivots)
    coords = tuple(c for c in range(algebra.dim) if c not in pivot_set)
    qmap = QuotientMap(ideal, coords)
    qdim = len(coords)
    reps = [algebra.basis_vector(c) for c in coords]
    table = []
    for i in range(qdim):
        ti = []
        for j in range(qdim):
            ti.append(list(qmap.project(algebra.multiply(reps[i], reps[j]))))
        table.append(ti)
    qunit = qmap.project(algebra.unit)
    qnames = [algebra.names[c] for c in coords]
    quotient = Algebra(algebra.field, qdim, qunit, table, qnames)

    # surjective morphism check on basis pairs of the source algebra
    for i in range(algebra.dim):
        bi = algebra.basis_vector(i)
        pi = qmap.project(bi)
        for j in range(algebra.dim):
            bj = algebra.basis_vector(j)
            lhs = qmap.project(algebra.multiply(bi, bj))
            rhs = quotient.multiply(pi, qmap.project(bj))
            if lhs != rhs:
                raise NotAnIdeal(f"projection fails to be multiplicative on pair ({i}, {j})")
    return quotient, qmap


@dataclass(frozen=True)
class TruncatedExtension:
    """A[x]/(x^m) with basis b_i x^j at index j*n + i."""

    algebra: Algebra
    base: Algebra
    order: int

    @property
    def x(self) -> Vector:
        return self.embed(self.base.unit, 1)

    def embed(self, vec: Sequence[Scalar], degree: int = 0) -> Vector:
        n = self.base.dim
        if not 0 <= degree < self.order:
            raise BadShape(f"degree {degree} outside [0, {self.order})")
        zero = self.base.field.zero
        out = [zero] * (n * self.order)
        for i, c in enumerate(vec):
            out[degree * n + i] = c
        return tuple(out)

    def coefficient(self, vec: Sequence[Scalar], degree: int) -> Vector:
        n = self.base.dim
        return tuple(vec[degree * n : (degree + 1) * n])


def truncated_polynomial_algebra(base: Algebra, order: int) -> TruncatedExtension:
    """Polynomial extension truncated at x^order; x is central by construction."""
    if order < 2:
        raise BadShape("truncation order must be at least 2")
    n = base.dim
    m = order
    dim = n * m
    field = base.field
    zero = field.zero
    table = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for j in range(m):
            a = j * n + i
            for k in range(n):
                prod = base.table[i][k]
                for l in range(m):
                    b = l * n + k
                    if j + l < m:
                        shift = (j + l) * n
                        row = table[a][b]
                        for t in range(n):
                            row[shift + t] = prod[t]
    unit = [zero] * dim
    for i, c in enumerate(base.unit):
        unit[i] = c
    names = []
    for j in range(m):
        for nm in base.names:
            if j == 0:
                names.append(nm)
            elif j == 1:
                names.append(f"{nm}*x")
            else:
                names.append(f"{nm}*x^{j}")
    algebra = Algebra(field, dim, unit, table, names)
    return TruncatedExtension(algebra=algebra, base=base, order=m)
