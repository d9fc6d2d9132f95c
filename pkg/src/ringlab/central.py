"""Center computation and the centrally-essential decision procedure.

An algebra is centrally essential when every non-central element a admits
nonzero central x, y with a*x = y; equivalently the image a*Z meets Z
nontrivially for every such a. Over a prime field the decision is
exhaustive and produces per-element witnesses; over the rationals only
randomized falsification is attempted here (symbolic certificates live in
the polycert module).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import List, Optional, Tuple

from .algebra import Algebra
from .errors import InfiniteField
from .fields import PrimeField
from .linalg import Matrix, Subspace, Vector
from .rng import SplitMix64, SCHEME_ID


def center(algebra: Algebra) -> Subspace:
    """Solutions of x*b_i = b_i*x for all i, as a canonical subspace.

    Always contains the unit. Cached on the algebra.
    """
    memo = algebra._memo
    if "center" not in memo:
        n = algebra.dim
        field = algebra.field
        rows = []
        for i in range(n):
            # operator x -> b_i x - x b_i ; row k, column j: c[i][j][k] - c[j][i][k]
            for k in range(n):
                row = [field.sub(algebra.table[i][j][k], algebra.table[j][i][k]) for j in range(n)]
                rows.append(row)
        sub = Matrix.from_rows(field, rows, n).kernel()
        memo["center"] = sub
    return memo["center"]


def is_central(algebra: Algebra, vec) -> bool:
    return center(algebra).contains(vec)


@dataclass(frozen=True)
class CEWitness:
    element: Vector  # non-central a
    factor: Vector  # central x, nonzero
    product: Vector  # a*x, central and nonzero


@dataclass(frozen=True)
class CEReport:
    """Outcome of the centrally-essential test with re-checkable evidence."""

    verdict: str  # centrally_essential | not_centrally_essential | inconclusive_random
    mode: str  # "exhaustive" | "random"
    checked: int  # non-central elements examined
    witnesses: Tuple[CEWitness, ...] = ()
    counterexample: Optional[Vector] = None
    trials: Optional[int] = None
    seed: Optional[int] = None
    scheme: Optional[str] = None

    def to_dict(self, algebra: Algebra, full_witnesses: bool = False, witness_cap: int = 64) -> dict:
        f = algebra.field
        out = {
            "verdict": self.verdict,
            "mode": self.mode,
            "non_central_checked": self.checked,
        }
        if self.mode == "random":
            out["trials"] = self.trials
            out["seed"] = self.seed
            out["scheme"] = self.scheme
        if self.counterexample is not None:
            out["counterexample"] = {
                "coords": [f.format(x) for x in self.counterexample],
                "display": algebra.element_str(self.counterexample),
            }
        include = full_witnesses or len(self.witnesses) <= witness_cap
        out["witness_count"] = len(self.witnesses)
        if include:
            out["witnesses"] = [
                {
                    "element": algebra.element_str(w.element),
                    "factor": algebra.element_str(w.factor),
                    "product": algebra.element_str(w.product),
                }
                for w in self.witnesses
            ]
        else:
            out["witnesses_elided"] = True
        return out


def _witness_for(algebra: Algebra, z_space: Subspace, a: Vector) -> Optional[CEWitness]:
    """First central z in the deterministic sweep of Z with a*z in Z minus 0."""
    for z in z_space.elements():
        y = algebra.multiply(a, z)
        if any(y) and z_space.contains(y):
            return CEWitness(element=a, factor=z, product=y)
    return None


def _image_meets_center(algebra: Algebra, z_space: Subspace, a: Vector) -> bool:
    rows = [algebra.multiply(a, z) for z in z_space.basis]
    image = Subspace.from_rows(algebra.field, algebra.dim, rows)
    return image.meets_nontrivially(z_space)


def check_centrally_essential(
    algebra: Algebra,
    mode: str = "exhaustive",
    trials: int = 200,
    seed: int = 0,
) -> CEReport:
    """Decide central essentiality.

    exhaustive: prime fields only; sweeps every non-central element in
    enumeration order. The verdict is centrally_essential iff no element
    has a*Z meeting Z trivially; each non-central element gets the first
    sweep witness. Stops at the first counterexample.

    random: any field; samples elements with small integer coordinates and
    can only return not_centrally_essential (verified) or
    inconclusive_random.
    """
    z_space = center(algebra)
    if mode == "exhaustive":
        if not isinstance(algebra.field, PrimeField):
            raise InfiniteField("exhaustive central-essentiality needs a finite field")
        witnesses: List[CEWitness] = []
        checked = 0
        # bail out to rank arithmetic early when the center is large enough
        # that a fruitless full sweep would hurt
        rank_first = z_space.element_count() > 256
        for a in algebra.enumerate_elements():
            if not any(a):
                continue
            if z_space.contains(a):
                continue
            checked += 1
            if rank_first and not _image_meets_center(algebra, z_space, a):
                return CEReport(
                    verdict="not_centrally_essential",
                    mode="exhaustive",
                    checked=checked,
                    witnesses=tuple(witnesses),
                    counterexample=a,
                )
            w = _witness_for(algebra, z_space, a)
            if w is None:
                return CEReport(
                    verdict="not_centrally_essential",
                    mode="exhaustive",
                    checked=checked,
                    witnesses=tuple(witnesses),
                    counterexample=a,
                )
            witnesses.append(w)
        return CEReport(
            verdict="centrally_essential",
            mode="exhaustive",
            checked=checked,
            witnesses=tuple(witnesses),
        )

    if mode != "random":
        raise ValueError(f"unknown mode {mode!r}")
    rng = SplitMix64(seed)
    f = algebra.field
    n = algebra.dim
    for _ in range(trials):
        if isinstance(f, PrimeField):
            a = tuple(rng.randrange(f.p) for _ in range(n))
        else:
            a = tuple(f.coerce(rng.randrange(5) - 2) for _ in range(n))
        if not any(a) or z_space.contains(a):
            continue
        if not _image_meets_center(algebra, z_space, a):
            return CEReport(
                verdict="not_centrally_essential",
                mode="random",
                checked=trials,
                counterexample=a,
                trials=trials,
                seed=seed,
                scheme=SCHEME_ID,
            )
    return CEReport(
        verdict="inconclusive_random",
        mode="random",
        checked=trials,
        trials=trials,
        seed=seed,
        scheme=SCHEME_ID,
    )
