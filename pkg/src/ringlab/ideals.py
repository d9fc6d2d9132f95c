"""One-sided ideal machinery: sidedness, radical, maximal and minimal
ideals, socle, essential and closed submodules, intersection complements,
quasi-invariance.

Radical algorithm. Over the rationals, or over F_p with p > dim, the
radical is the kernel of the trace form tr(L_x L_y) of the left regular
representation. Over small prime fields the radical is collected by
element filtering: x belongs to J(A) exactly when every 1 - x*a is
invertible, which for a finite-dimensional unital algebra is equivalent
to the right ideal x*A being nilpotent; that nilpotency test is what the
filter evaluates per element. The sweep is restricted to a subspace that
provably contains J (the trace-form kernel, intersected with the kernel
of the matrix-trace form when a faithful matrix picture is available:
both forms vanish on J in every characteristic because traces of
nilpotents vanish). Every result is validated afterwards: two-sidedness,
nilpotency with its index, and a recomputed zero radical for the
quotient. A validation failure raises RadicalUncertified and is never
returned silently.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Algebra, quotient_algebra
from .errors import (
    InfiniteField,
    NotAnIdeal,
    NotMaximal,
    NotNested,
    RadicalUncertified,
    TooLarge,
)
from .fields import PrimeField
from .linalg import Matrix, Subspace, Vector, _StackedRank

SWEEP_GUARD = 1 << 20

RIGHT = "right"
LEFT = "left"
TWO_SIDED = "two_sided"


@dataclass(frozen=True)
class SidednessViolation:
    multiplier: Vector  # basis element of the algebra
    generator: Vector  # basis element of the subspace
    product: Vector  # lands outside the subspace


@dataclass(frozen=True)
class SidedIdeal:
    """A subspace with verified multiplication flags and witnesses."""

    subspace: Subspace
    is_right: bool
    is_left: bool
    right_violation: Optional[SidednessViolation] = None
    left_violation: Optional[SidednessViolation] = None

    @property
    def two_sided(self) -> bool:
        return self.is_right and self.is_left

    @property
    def dim(self) -> int:
        return self.subspace.dim


def sidedness(algebra: Algebra, subspace: Subspace) -> SidedIdeal:
    """Verify both multiplication flags, recording the first violation."""
    right_viol = None
    left_viol = None
    for g in subspace.basis:
        for j in range(algebra.dim):
            b = algebra.basis_vector(j)
            if right_viol is None:
                prod = algebra.multiply(g, b)
                if not subspace.contains(prod):
                    right_viol = SidednessViolation(multiplier=b, generator=g, product=prod)
            if left_viol is None:
                prod = algebra.multiply(b, g)
                if not subspace.contains(prod):
                    left_viol = SidednessViolation(multiplier=b, generator=g, product=prod)
        if right_viol is not None and left_viol is not None:
            break
    return SidedIdeal(
        subspace=subspace,
        is_right=right_viol is None,
        is_left=left_viol is None,
        right_violation=right_viol,
        left_violation=left_viol,
    )


def ideal_closure(algebra: Algebra, generators: Sequence[Sequence], side: str) -> SidedIdeal:
    """Smallest subspace containing the generators and closed under the
    requested basis multiplications. Terminates because the dimension
    grows strictly at every absorption."""
    if side not in (RIGHT, LEFT, TWO_SIDED):
        raise ValueError(f"unknown side {side!r}")
    gens = [algebra.element(g) for g in generators]
    tracker = _StackedRank(Subspace.zero(algebra.field, algebra.dim))
    work: List[Vector] = []
    for g in gens:
        if tracker.add(g):
            work.append(g)
    while work:
        v = work.pop()
        for j in range(algebra.dim):
            b = algebra.basis_vector(j)
            if side in (RIGHT, TWO_SIDED):
                prod = algebra.multiply(v, b)
                if tracker.add(prod):
                    work.append(prod)
            if side in (LEFT, TWO_SIDED):
                prod = algebra.multiply(b, v)
                if tracker.add(prod):
                    work.append(prod)
    sub = Subspace.from_rows(algebra.field, algebra.dim, tracker.rows)
    return sidedness(algebra, sub)


# ---------------------------------------------------------------------------
# principal one-sided ideals, with a small per-algebra cache
# ---------------------------------------------------------------------------


def principal_subspace(algebra: Algebra, m: Sequence, side: str = RIGHT) -> Subspace:
    """Span of m*A (right) or A*m (left)."""
    m = tuple(m)
    cacheable = algebra.field.finite and algebra.field.order ** algebra.dim <= 4096
    key = ("principal", side, m)
    if cacheable and key in algebra._memo:
        return algebra._memo[key]
    rows = algebra.right_multiples(m) if side == RIGHT else algebra.left_multiples(m)
    sub = Subspace.from_rows(algebra.field, algebra.dim, rows)
    if cacheable:
        algebra._memo[key] = sub
    return sub


def subspace_product(algebra: Algebra, u: Subspace, v: Subspace) -> Subspace:
    rows = []
    for a in u.basis:
        for b in v.basis:
            rows.append(algebra.multiply(a, b))
    return Subspace.from_rows(algebra.field, algebra.dim, rows)


# ---------------------------------------------------------------------------
# Jacobson radical
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RadicalCertificate:
    radical: Subspace
    nilpotency_index: int
    quotient_radical_dim: int
    method: str

    @property
    def dim(self) -> int:
        return self.radical.dim


def _regular_trace_functional(algebra: Algebra) -> List:
    """T[l] = trace of left multiplication by b_l."""
    n = algebra.dim
    field = algebra.field
    T = []
    for l in range(n):
        acc = field.zero
        for k in range(n):
            acc = field.add(acc, algebra.table[l][k][k])
        T.append(acc)
    return T


def _gram_kernel(algebra: Algebra, weight: List) -> Subspace:
    """Kernel of G[i][j] = weight(b_i b_j) for a linear functional weight."""
    n = algebra.dim
    field = algebra.field
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = field.zero
            for l, c in algebra._srows[i][j]:
                if weight[l]:
                    acc = field.add(acc, field.mul(c, weight[l]))
            row.append(acc)
        rows.append(row)
    return Matrix.from_rows(field, rows, n).kernel()


def radical_by_trace_form(algebra: Algebra) -> Subspace:
    """Kernel of tr(L_x L_y); equals J(A) in characteristic 0 or p > dim."""
    return _gram_kernel(algebra, _regular_trace_functional(algebra))


def _matrix_trace_bound(algebra: Algebra) -> Optional[Subspace]:
    if algebra.rep is None:
        return None
    field = algebra.field
    k = algebra.rep.size
    weight = []
    for grid in algebra.rep.mats:
        acc = field.zero
        for r in range(k):
            acc = field.add(acc, grid[r][r])
        weight.append(acc)
    return _gram_kernel(algebra, weight)


def element_is_nilpotent(algebra: Algebra, x: Vector) -> bool:
    """Repeated squaring; x is nilpotent iff x^(2^s) = 0 once 2^s >= dim."""
    y = tuple(x)
    bound = 1
    while bound < algebra.dim:
        y = algebra.multiply(y, y)
        if not any(y):
            return True
        bound <<= 1
    y = algebra.multiply(y, y)
    return not any(y)


def right_ideal_is_nilpotent(algebra: Algebra, x: Vector) -> bool:
    """Squaring chain of the subspace x*A; descends, so it stabilizes."""
    v = principal_subspace(algebra, x, RIGHT)
    while v.dim:
        w = subspace_product(algebra, v, v)
        if w.dim == v.dim:
            return False
        v = w
    return True


def radical_by_element_filter(algebra: Algebra, bound: Optional[Subspace] = None) -> Subspace:
    """Collect {x : x*A nilpotent} inside a subspace known to contain J.

    Equivalent per element to quasi-regularity of every x*a. Elements
    already inside the collected span are skipped; a cheap elementwise
    nilpotency test rejects most outsiders before the subspace chain runs.
    """
    if not isinstance(algebra.field, PrimeField):
        raise InfiniteField("element filtering needs a finite field")
    n = algebra.dim
    if bound is None:
        bound = Subspace.full(algebra.field, n)
    if bound.dim and algebra.field.order ** bound.dim > SWEEP_GUARD:
        raise TooLarge(
            f"radical filter sweep of size {algebra.field.order}^{bound.dim} exceeds the guard"
        )
    collected = _StackedRank(Subspace.zero(algebra.field, n))
    for x in bound.elements():
        v = list(x)
        for row, j in zip(collected.rows, collected.pivots):
            c = v[j]
            if c:
                p = algebra.field.p
                for t in range(j, n):
                    v[t] = (v[t] - c * row[t]) % p
        if not any(v):
            continue
        if not element_is_nilpotent(algebra, x):
            continue
        if right_ideal_is_nilpotent(algebra, x):
            collected.add(x)
    return Subspace.from_rows(algebra.field, n, collected.rows)


def jacobson_radical(algebra: Algebra) -> RadicalCertificate:
    """Radical with a validated certificate; cached on the algebra."""
    memo = algebra._memo
    if "radical" not in memo:
        memo["radical"] = _compute_radical(algebra, validate_quotient=True)
    return memo["radical"]


def _compute_radical(algebra: Algebra, validate_quotient: bool) -> RadicalCertificate:
    field = algebra.field
    n = algebra.dim
    if not field.finite or field.char > n:
        rad = radical_by_trace_form(algebra)
        method = "trace_form"
    else:
        bound = radical_by_trace_form(algebra)
        mbound = _matrix_trace_bound(algebra)
        if mbound is not None:
            bound = bound.intersect(mbound)
        rad = radical_by_element_filter(algebra, bound)
        method = "element_filter"

    sided = sidedness(algebra, rad)
    if not sided.two_sided:
        raise RadicalUncertified("computed radical is not a two-sided ideal")
    index = 1
    power = rad
    while power.dim:
        power = subspace_product(algebra, power, rad)
        index += 1
        if index > n + 1:
            raise RadicalUncertified("computed radical is not nilpotent")
    quotient_dim = 0
    if validate_quotient and rad.dim:
        quotient, _ = quotient_algebra(algebra, rad)
        recomputed = _compute_radical(quotient, validate_quotient=False)
        quotient_dim = recomputed.radical.dim
        if quotient_dim:
            raise RadicalUncertified("quotient by the radical still has a nonzero radical")
    return RadicalCertificate(
        radical=rad, nilpotency_index=index, quotient_radical_dim=quotient_dim, method=method
    )


# ---------------------------------------------------------------------------
# maximal and minimal one-sided ideals, socle
# ---------------------------------------------------------------------------


def _require_enumerable(algebra: Algebra, what: str) -> None:
    if not algebra.field.finite:
        raise InfiniteField(f"{what} needs a finite field")
    if algebra.element_count() > SWEEP_GUARD:
        raise TooLarge(f"{what}: {algebra.element_count()} elements exceed the sweep guard")


def maximal_one_sided_ideals(algebra: Algebra, side: str = RIGHT) -> List[SidedIdeal]:
    """All maximal right (left) ideals, as preimages from the semisimple
    quotient, where every one-sided ideal is principal."""
    if side not in (RIGHT, LEFT):
        raise ValueError(f"side must be right or left, got {side!r}")
    _require_enumerable(algebra, "maximal ideal enumeration")
    cert = jacobson_radical(algebra)
    quotient, qmap = quotient_algebra(algebra, cert.radical)
    seen: Dict[Tuple, Subspace] = {}
    # include s = 0: its principal ideal is the zero ideal, which is the
    # unique maximal one-sided ideal when the quotient is a division ring
    for s in quotient.enumerate_elements():
        t = principal_subspace(quotient, s, side)
        if t.dim < quotient.dim:
            seen.setdefault(t.basis, t)
    candidates = list(seen.values())
    maximal = [
        t
        for t in candidates
        if not any(u.dim > t.dim and u.contains_subspace(t) for u in candidates)
    ]
    out = []
    for t in maximal:
        rows = [qmap.lift(r) for r in t.basis] + list(cert.radical.basis)
        sub = Subspace.from_rows(algebra.field, algebra.dim, rows)
        out.append(sidedness(algebra, sub))
    out.sort(key=lambda si: si.subspace.sort_key())
    return out


def minimal_one_sided_ideals(algebra: Algebra, side: str = RIGHT) -> List[SidedIdeal]:
    """Inclusion-minimal members of {a*A : a nonzero} (resp. A*a), which are
    exactly the minimal right (left) ideals."""
    if side not in (RIGHT, LEFT):
        raise ValueError(f"side must be right or left, got {side!r}")
    _require_enumerable(algebra, "minimal ideal enumeration")
    seen: Dict[Tuple, Subspace] = {}
    for a in algebra.enumerate_elements():
        if not any(a):
            continue
        t = principal_subspace(algebra, a, side)
        seen.setdefault(t.basis, t)
    candidates = list(seen.values())
    minimal = [
        t
        for t in candidates
        if not any(u.dim < t.dim and t.contains_subspace(u) for u in candidates)
    ]
    out = [sidedness(algebra, t) for t in minimal]
    out.sort(key=lambda si: si.subspace.sort_key())
    return out


def socle(algebra: Algebra, side: str = RIGHT) -> Subspace:
    """Sum of all minimal right (left) ideals."""
    acc = Subspace.zero(algebra.field, algebra.dim)
    for ideal in minimal_one_sided_ideals(algebra, side):
        acc = acc.sum_with(ideal.subspace)
    return acc


# ---------------------------------------------------------------------------
# essentiality, closedness, complements, quasi-invariance
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EssentialResult:
    essential: bool
    witness: Optional[Vector] = None  # nonzero m in M with m*A meeting N trivially

    def __bool__(self) -> bool:
        return self.essential


def _check_one_sided(algebra: Algebra, sub: Subspace, side: str, label: str) -> None:
    si = sidedness(algebra, sub)
    ok = si.is_right if side == RIGHT else si.is_left
    if not ok:
        raise NotAnIdeal(f"{label} is not a {side} ideal")


def is_essential(algebra: Algebra, inner: Subspace, outer: Subspace, side: str = RIGHT) -> EssentialResult:
    """Is inner essential in outer? Checks every nonzero m in outer for
    (m*A) meeting inner; cyclic submodules suffice because m lies in m*A."""
    if side not in (RIGHT, LEFT):
        raise ValueError(f"side must be right or left, got {side!r}")
    _require_enumerable(algebra, "essentiality sweep")
    if not outer.contains_subspace(inner):
        raise NotNested("inner subspace is not contained in the outer one")
    _check_one_sided(algebra, inner, side, "inner")
    _check_one_sided(algebra, outer, side, "outer")
    for m in outer.elements():
        if inner.contains(m):
            continue
        t = principal_subspace(algebra, m, side)
        if not t.meets_nontrivially(inner):
            return EssentialResult(False, witness=m)
    return EssentialResult(True)


@dataclass(frozen=True)
class ClosednessResult:
    closed: bool
    extension_element: Optional[Vector] = None
    extension: Optional[Subspace] = None  # proper essential extension when not closed
    checked: int = 0

    def __bool__(self) -> bool:
        return self.closed


def is_closed(algebra: Algebra, ideal: Subspace, side: str = RIGHT) -> ClosednessResult:
    """No proper essential extension inside the algebra.

    If the ideal is essential in some strictly larger submodule Y, it is
    essential in the intermediate module ideal + u*A for any u in Y outside
    the ideal, so sweeping u over the complement is a complete test.
    """
    if side not in (RIGHT, LEFT):
        raise ValueError(f"side must be right or left, got {side!r}")
    _require_enumerable(algebra, "closedness sweep")
    _check_one_sided(algebra, ideal, side, "ideal")
    checked = 0
    for u in algebra.enumerate_elements():
        if not any(u) or ideal.contains(u):
            continue
        checked += 1
        extension = ideal.sum_with(principal_subspace(algebra, u, side))
        verdict = _essential_no_revalidate(algebra, ideal, extension, side)
        if verdict.essential:
            return ClosednessResult(False, extension_element=u, extension=extension, checked=checked)
    return ClosednessResult(True, checked=checked)


def _essential_no_revalidate(algebra: Algebra, inner: Subspace, outer: Subspace, side: str) -> EssentialResult:
    for m in outer.elements():
        if inner.contains(m):
            continue
        t = principal_subspace(algebra, m, side)
        if not t.meets_nontrivially(inner):
            return EssentialResult(False, witness=m)
    return EssentialResult(True)


@dataclass(frozen=True)
class ComplementResult:
    is_complement: bool
    reason: str
    witness: Optional[Vector] = None  # u whose extension still avoids the target

    def __bool__(self) -> bool:
        return self.is_complement


def intersection_complement_check(
    algebra: Algebra, candidate: Subspace, target: Subspace, side: str = RIGHT
) -> ComplementResult:
    """Is candidate maximal among submodules meeting target trivially?

    True certifies that candidate is a closed submodule.
    """
    if side not in (RIGHT, LEFT):
        raise ValueError(f"side must be right or left, got {side!r}")
    _require_enumerable(algebra, "complement sweep")
    _check_one_sided(algebra, candidate, side, "candidate")
    _check_one_sided(algebra, target, side, "target")
    if candidate.meets_nontrivially(target):
        return ComplementResult(False, reason="candidate meets the target nontrivially")
    for u in algebra.enumerate_elements():
        if not any(u) or candidate.contains(u):
            continue
        extension = candidate.sum_with(principal_subspace(algebra, u, side))
        if not extension.meets_nontrivially(target):
            return ComplementResult(
                False,
                reason="a proper extension still meets the target trivially",
                witness=u,
            )
    return ComplementResult(True, reason="maximal among submodules meeting the target trivially")


@dataclass(frozen=True)
class QuasiInvarianceResult:
    quasi_invariant: bool
    side: str
    maximal_count: int
    witness: Optional[SidedIdeal] = None  # a maximal one-sided ideal that is not two-sided

    def __bool__(self) -> bool:
        return self.quasi_invariant


def is_quasi_invariant(algebra: Algebra, side: str = RIGHT) -> QuasiInvarianceResult:
    """Every maximal right (left) ideal is two-sided."""
    ideals = maximal_one_sided_ideals(algebra, side)
    for ideal in ideals:
        if not ideal.two_sided:
            return QuasiInvarianceResult(False, side, len(ideals), witness=ideal)
    return QuasiInvarianceResult(True, side, len(ideals))


def verify_maximality(algebra: Algebra, ideal: Subspace, side: str = RIGHT) -> None:
    """Raise NotMaximal unless the one-sided ideal is proper and maximal."""
    _require_enumerable(algebra, "maximality sweep")
    _check_one_sided(algebra, ideal, side, "ideal")
    if ideal.dim >= algebra.dim:
        raise NotMaximal("the whole algebra is not a proper ideal")
    for u in algebra.enumerate_elements():
        if not any(u) or ideal.contains(u):
            continue
        extension = ideal.sum_with(principal_subspace(algebra, u, side))
        if extension.dim < algebra.dim:
            raise NotMaximal("a proper extension exists, the ideal is not maximal")
