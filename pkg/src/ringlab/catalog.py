"""Built-in algebras: the flagship 7x7 example, matrix-unit algebras, and
seeded random matrix subalgebras for property sweeps.

The seven generator patterns of the flagship algebra are transcribed here
once, as 1-indexed (row, column) positions, and everything else about the
example (products, center, ideals) is re-derived from them:

    U  : identity
    Ea : (1,2), (5,7)
    Eb : (1,3), (2,4), (6,7)
    Ec : (1,4)
    Ed : (1,5), (2,7)
    Ee : (1,6), (3,7)
    Ef : (1,7)

The distinguished subspaces I = span{Eb, Ef}, J = span{Ea, Ef} and
C = span{Ec} are the coordinate subspaces read off the corresponding
parameter slots, and the bundled witness map sends an element with
coordinates (alpha, a, b, c, d, e, f) to the central element with d = a,
e = b and zeros elsewhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .algebra import Algebra, MatrixRep, from_matrix_basis
from .fields import Field, PrimeField
from .linalg import Subspace
from .rng import SCHEME_ID, SplitMix64
from .serialization import matrix_basis_spec

PAPER_NAMES = ("U", "Ea", "Eb", "Ec", "Ed", "Ee", "Ef")
PAPER_COORD_NAMES = ("alpha", "a", "b", "c", "d", "e", "f")
_PAPER_PATTERNS: Dict[str, Tuple[Tuple[int, int], ...]] = {
    "U": tuple((i, i) for i in range(1, 8)),
    "Ea": ((1, 2), (5, 7)),
    "Eb": ((1, 3), (2, 4), (6, 7)),
    "Ec": ((1, 4),),
    "Ed": ((1, 5), (2, 7)),
    "Ee": ((1, 6), (3, 7)),
    "Ef": ((1, 7),),
}


def paper_generator_matrices() -> List[List[List[int]]]:
    out = []
    for nm in PAPER_NAMES:
        grid = [[0] * 7 for _ in range(7)]
        for r, c in _PAPER_PATTERNS[nm]:
            grid[r - 1][c - 1] = 1
        out.append(grid)
    return out


@dataclass(frozen=True)
class PaperBundle:
    """The flagship algebra with its distinguished ideals and witness map."""

    algebra: Algebra
    rep: MatrixRep
    ideal_I: Subspace  # right ideal span{Eb, Ef}
    ideal_J: Subspace  # left ideal span{Ea, Ef}
    ideal_C: Subspace  # two-sided ideal span{Ec}
    witness_map: Tuple[Tuple[int, ...], ...]  # integer matrix, coords -> central coords

    def witness_image(self, coords) -> Tuple:
        return apply_integer_map(self.algebra, self.witness_map, coords)


def paper_algebra(field: Field) -> PaperBundle:
    """Build the 7-dimensional example over any supported field."""
    algebra, rep = from_matrix_basis(
        field,
        7,
        paper_generator_matrices(),
        names=PAPER_NAMES,
        coord_names=PAPER_COORD_NAMES,
    )
    assert algebra.dim == 7  # the span is multiplicatively closed as given
    base = lambda i: algebra.basis_vector(i)
    ideal_I = Subspace.from_rows(field, 7, [base(2), base(6)])
    ideal_J = Subspace.from_rows(field, 7, [base(1), base(6)])
    ideal_C = Subspace.from_rows(field, 7, [base(3)])
    wm = [[0] * 7 for _ in range(7)]
    wm[4][1] = 1  # d <- a
    wm[5][2] = 1  # e <- b
    return PaperBundle(
        algebra=algebra,
        rep=rep,
        ideal_I=ideal_I,
        ideal_J=ideal_J,
        ideal_C=ideal_C,
        witness_map=tuple(tuple(r) for r in wm),
    )


def paper_spec(field: Field) -> dict:
    """Exportable algebra-spec document (matrix basis presentation)."""
    return matrix_basis_spec(field, 7, paper_generator_matrices(), names=PAPER_NAMES)


def apply_integer_map(algebra: Algebra, matrix: Tuple[Tuple[int, ...], ...], coords) -> Tuple:
    """Apply an integer matrix to a coordinate vector over the algebra's field."""
    f = algebra.field
    n = algebra.dim
    out = []
    for r in range(n):
        acc = f.zero
        row = matrix[r]
        for c in range(n):
            if row[c]:
                acc = f.add(acc, f.mul(f.coerce(row[c]), coords[c]))
        out.append(acc)
    return tuple(out)


def _matrix_units(k: int, only_upper: bool) -> Tuple[List[str], List[List[List[int]]]]:
    names = []
    mats = []
    for r in range(k):
        for c in range(k):
            if only_upper and c < r:
                continue
            names.append(f"E{r + 1}{c + 1}")
            grid = [[0] * k for _ in range(k)]
            grid[r][c] = 1
            mats.append(grid)
    return names, mats


def full_matrix(k: int, field: Field) -> Algebra:
    """The full matrix algebra M_k."""
    names, mats = _matrix_units(k, only_upper=False)
    algebra, _ = from_matrix_basis(field, k, mats, names=names)
    return algebra


def upper_triangular(k: int, field: Field) -> Algebra:
    """Upper triangular k x k matrices."""
    names, mats = _matrix_units(k, only_upper=True)
    algebra, _ = from_matrix_basis(field, k, mats, names=names)
    return algebra


def diagonal(k: int, field: Field) -> Algebra:
    """Diagonal k x k matrices, the split commutative product of k fields."""
    names = [f"E{i + 1}{i + 1}" for i in range(k)]
    mats = []
    for i in range(k):
        grid = [[0] * k for _ in range(k)]
        grid[i][i] = 1
        mats.append(grid)
    algebra, _ = from_matrix_basis(field, k, mats, names=names)
    return algebra


@dataclass(frozen=True)
class SampledAlgebra:
    algebra: Algebra
    ambient_size: int
    prime: int
    generator_count: int
    seed: int
    scheme: str


def random_subalgebra(k: int, field: PrimeField, generator_count: int, seed: int) -> SampledAlgebra:
    """Unital subalgebra of M_k(F_p) spanned by the identity and
    generator_count random matrices, closed under multiplication.

    Deterministic for a fixed seed; the generation scheme identifier is
    recorded alongside so runs can be replayed bit for bit.
    """
    from .linalg import _StackedRank

    rng = SplitMix64(seed)
    p = field.p
    ident = [[1 if r == c else 0 for c in range(k)] for r in range(k)]
    mats: List[List[List[int]]] = [ident]
    span = _StackedRank(Subspace.zero(field, k * k))
    span.add([x for row in ident for x in row])
    drawn = 0
    while drawn < generator_count:
        grid = [[rng.randrange(p) for _ in range(k)] for _ in range(k)]
        if not span.add([x for row in grid for x in row]):
            continue  # dependent draw, redraw
        mats.append(grid)
        drawn += 1
    algebra, _ = from_matrix_basis(field, k, mats, autoclose=True)
    return SampledAlgebra(
        algebra=algebra,
        ambient_size=k,
        prime=p,
        generator_count=generator_count,
        seed=seed,
        scheme=SCHEME_ID,
    )
