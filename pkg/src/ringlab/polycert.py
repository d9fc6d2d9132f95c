"""Field-independent certificates via integer-coefficient polynomials.

Products of generic elements expand to bilinear polynomials through the
structure constants; a linear witness map then yields quadratic
certificates whose vanishing behaviour can be read off per characteristic
by specializing the integer coefficients. Coefficients are integers, not
rationals, precisely so that reduction mod p is meaningful; algebras with
non-integral structure constants are rejected by this module only.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import Algebra
from .central import center
from .errors import NonIntegralConstants, WitnessNotCentral
from .fields import RationalField

Exponents = Tuple[int, ...]


@dataclass(frozen=True)
class MultiPoly:
    """Sparse integer polynomial in canonical graded-lex descending form.

    Equality is representation equality, which the canonical ordering and
    the no-zero-coefficients rule make sound.
    """

    variables: Tuple[str, ...]
    terms: Tuple[Tuple[Exponents, int], ...]

    @staticmethod
    def _canonical(variables: Sequence[str], raw: Dict[Exponents, int]) -> "MultiPoly":
        terms = [(e, c) for e, c in raw.items() if c]
        terms.sort(key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))
        return MultiPoly(tuple(variables), tuple(terms))

    @staticmethod
    def constant(c: int, variables: Sequence[str] = ()) -> "MultiPoly":
        raw = {tuple([0] * len(variables)): int(c)} if c else {}
        return MultiPoly._canonical(variables, raw)

    @staticmethod
    def variable(name: str, variables: Optional[Sequence[str]] = None) -> "MultiPoly":
        if variables is None:
            variables = (name,)
        idx = list(variables).index(name)
        e = tuple(1 if i == idx else 0 for i in range(len(variables)))
        return MultiPoly._canonical(variables, {e: 1})

    # -- variable alignment -------------------------------------------
    def _aligned(self, other: "MultiPoly") -> Tuple[Tuple[str, ...], Dict, Dict]:
        if self.variables == other.variables:
            return self.variables, dict(self.terms), dict(other.terms)
        merged = list(self.variables)
        for v in other.variables:
            if v not in merged:
                merged.append(v)

        def remap(poly: "MultiPoly") -> Dict[Exponents, int]:
            pos = [merged.index(v) for v in poly.variables]
            out: Dict[Exponents, int] = {}
            for exps, c in poly.terms:
                e = [0] * len(merged)
                for p, x in zip(pos, exps):
                    e[p] = x
                out[tuple(e)] = out.get(tuple(e), 0) + c
            return out

        return tuple(merged), remap(self), remap(other)

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        variables, a, b = self._aligned(other)
        for e, c in b.items():
            a[e] = a.get(e, 0) + c
        return MultiPoly._canonical(variables, a)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.variables, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        variables, a, b = self._aligned(other)
        out: Dict[Exponents, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return MultiPoly._canonical(variables, out)

    def scaled(self, c: int) -> "MultiPoly":
        if not c:
            return MultiPoly(self.variables, ())
        return MultiPoly(self.variables, tuple((e, c * k) for e, k in self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, point: Dict[str, int], modulus: Optional[int] = None) -> int:
        total = 0
        for exps, c in self.terms:
            term = c
            for v, e in zip(self.variables, exps):
                if e:
                    term *= point[v] ** e
            total += term
        return total % modulus if modulus else total

    # -- printing --------------------------------------------------------
    def _monomial_str(self, exps: Exponents) -> str:
        parts = []
        for v, e in zip(self.variables, exps):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for i, (exps, c) in enumerate(self.terms):
            mono = self._monomial_str(exps)
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            if i == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(pieces)


def poly_add(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    return f + g


def poly_mul(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    return f * g


def poly_neg(f: MultiPoly) -> MultiPoly:
    return -f


def is_zero(f: MultiPoly) -> bool:
    return f.is_zero()


# ---------------------------------------------------------------------------
# generic products and witness certificates
# ---------------------------------------------------------------------------


def _integral_table(algebra: Algebra) -> List[List[List[int]]]:
    if not isinstance(algebra.field, RationalField):
        raise NonIntegralConstants("symbolic certificates run over the rationals")
    table = []
    for i, ti in enumerate(algebra.table):
        row = []
        for j, tij in enumerate(ti):
            cell = []
            for k, c in enumerate(tij):
                frac = Fraction(c)
                if frac.denominator != 1:
                    raise NonIntegralConstants(
                        f"structure constant c[{i}][{j}][{k}] = {c} is not an integer"
                    )
                cell.append(frac.numerator)
            row.append(cell)
        table.append(row)
    return table


def generic_product(
    algebra: Algebra, u_prefix: str = "u", v_prefix: str = "v"
) -> List[MultiPoly]:
    """Coordinates of (sum u_i b_i)(sum v_j b_j) as bilinear polynomials."""
    table = _integral_table(algebra)
    n = algebra.dim
    names = algebra.coord_names
    variables = tuple(f"{u_prefix}_{nm}" for nm in names) + tuple(
        f"{v_prefix}_{nm}" for nm in names
    )
    raws: List[Dict[Exponents, int]] = [dict() for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                c = table[i][j][k]
                if c:
                    e = [0] * (2 * n)
                    e[i] += 1
                    e[n + j] += 1
                    key = tuple(e)
                    raws[k][key] = raws[k].get(key, 0) + c
    return [MultiPoly._canonical(variables, raw) for raw in raws]


@dataclass(frozen=True)
class ProbeFailure:
    """An integer point where every central coordinate of the product dies."""

    point: Tuple[int, ...]
    gcd: int  # 0 means vanishing over every field, else characteristics divide it
    characteristics: Tuple[int, ...]


@dataclass(frozen=True)
class WitnessCertificate:
    variables: Tuple[str, ...]
    noncentral_vanishes: bool
    central_coords: Tuple[Tuple[str, MultiPoly], ...]
    failing_probes: Tuple[ProbeFailure, ...]
    branch_variable: Optional[str] = None
    branch_square_certified: Optional[bool] = None

    @property
    def sound_over_every_field(self) -> bool:
        if not self.noncentral_vanishes:
            return False
        if self.branch_variable is not None:
            return bool(self.branch_square_certified)
        return not self.failing_probes


def _prime_factors(g: int) -> Tuple[int, ...]:
    g = abs(g)
    out = []
    d = 2
    while d * d <= g:
        if g % d == 0:
            out.append(d)
            while g % d == 0:
                g //= d
        d += 1
    if g > 1:
        out.append(g)
    return tuple(out)


def witness_certificate_check(
    algebra: Algebra,
    witness: Sequence[Sequence[int]],
    branch_variable: Optional[str] = None,
) -> WitnessCertificate:
    """Certify a linear witness map W: for a generic element a, expand
    a * W(a) and report (i) whether all non-central coordinates vanish
    identically and (ii) the central coordinates as explicit polynomials,
    plus integer probe points where every central coordinate vanishes
    while a stays non-central (naming the characteristics involved).

    With branch_variable set, the certificate is restricted to the locus
    where that coordinate is nonzero, and additionally reports whether one
    central coordinate is syntactically the square of the branch variable
    (which rules out vanishing there over every field at once).
    """
    table = _integral_table(algebra)
    n = algebra.dim
    names = algebra.coord_names
    field = algebra.field

    wmat = [[int(x) for x in row] for row in witness]
    if len(wmat) != n or any(len(r) != n for r in wmat):
        raise NonIntegralConstants(f"witness map must be a {n}x{n} integer matrix")

    z_space = center(algebra)
    for j in range(n):
        col = tuple(field.coerce(wmat[r][j]) for r in range(n))
        if not z_space.contains(col):
            raise WitnessNotCentral(f"witness image of basis element {algebra.names[j]} is not central")

    variables = tuple(names)
    gen = [MultiPoly.variable(nm, variables) for nm in names]
    image = []
    for r in range(n):
        acc = MultiPoly.constant(0, variables)
        for c in range(n):
            if wmat[r][c]:
                acc = acc + gen[c].scaled(wmat[r][c])
        image.append(acc)

    # q = a * W(a), coordinate polynomials
    q = [MultiPoly.constant(0, variables) for _ in range(n)]
    for i in range(n):
        for j in range(n):
            cell = table[i][j]
            prod = None
            for k in range(n):
                if cell[k]:
                    if prod is None:
                        prod = gen[i] * image[j]
                    q[k] = q[k] + prod.scaled(cell[k])

    # commutation system: x central iff K x = 0, with integer K
    krows: List[List[int]] = []
    for i in range(n):
        for k in range(n):
            row = []
            for j in range(n):
                diff = Fraction(algebra.table[i][j][k]) - Fraction(algebra.table[j][i][k])
                row.append(int(diff))
            if any(row):
                krows.append(row)

    residuals = []
    for row in krows:
        acc = MultiPoly.constant(0, variables)
        for j, c in enumerate(row):
            if c:
                acc = acc + q[j].scaled(c)
        residuals.append(acc)
    noncentral_vanishes = all(r.is_zero() for r in residuals)

    # central coordinates: RREF pivot columns are exclusive, so the
    # coefficient on the basis row with pivot P is exactly q[P]
    central_coords = []
    for row, pivot in zip(z_space.basis, z_space.pivots):
        label = algebra.element_str(row)
        central_coords.append((label, q[pivot]))

    # integer probes over {-1, 0, 1}
    failing: List[ProbeFailure] = []
    seen_characteristic_sets = set()
    point = [0] * n

    def noncentral_at(pt: Sequence[int]) -> bool:
        return any(
            sum(c * pt[j] for j, c in enumerate(row)) != 0 for row in krows
        )

    total = 3**n
    for code in range(total):
        rem = code
        for i in range(n):
            point[i] = rem % 3 - 1
            rem //= 3
        if not noncentral_at(point):
            continue
        if branch_variable is not None:
            bidx = names.index(branch_variable)
            if point[bidx] == 0:
                continue
        values = [poly.evaluate(dict(zip(variables, point))) for _, poly in central_coords]
        if any(values):
            g = 0
            for v in values:
                g = _gcd(g, v)
            chars = _prime_factors(g) if g not in (0, 1) else ()
            if not chars:
                continue
            key = chars
        else:
            g = 0
            key = (0,)
        if key in seen_characteristic_sets:
            continue
        seen_characteristic_sets.add(key)
        failing.append(
            ProbeFailure(point=tuple(point), gcd=g, characteristics=_prime_factors(g) if g else ())
        )

    branch_square = None
    if branch_variable is not None:
        b = MultiPoly.variable(branch_variable, variables)
        square = b * b
        branch_square = any(poly == square for _, poly in central_coords)

    return WitnessCertificate(
        variables=variables,
        noncentral_vanishes=noncentral_vanishes,
        central_coords=tuple(central_coords),
        failing_probes=tuple(failing),
        branch_variable=branch_variable,
        branch_square_certified=branch_square,
    )


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a
