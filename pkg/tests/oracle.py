"""Independent brute-force oracles used to freeze expected values.

Everything here works on plain integer matrices and dense sweeps, with no
imports from ringlab's linear algebra, so agreement between the two paths
is meaningful.
"""
from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

# 1-indexed (row, col) positions of the seven generator patterns of the
# built-in 7x7 example: the identity plus six elementary patterns.
PATTERNS: Dict[str, List[Tuple[int, int]]] = {
    "U": [(i, i) for i in range(1, 8)],
    "Ea": [(1, 2), (5, 7)],
    "Eb": [(1, 3), (2, 4), (6, 7)],
    "Ec": [(1, 4)],
    "Ed": [(1, 5), (2, 7)],
    "Ee": [(1, 6), (3, 7)],
    "Ef": [(1, 7)],
}
NAMES = list(PATTERNS)


def pattern_matrix(name: str) -> List[List[int]]:
    m = [[0] * 7 for _ in range(7)]
    for r, c in PATTERNS[name]:
        m[r - 1][c - 1] = 1
    return m


def int_matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> List[List[int]]:
    k = len(a)
    return [[sum(a[r][m] * b[m][c] for m in range(k)) for c in range(k)] for r in range(k)]


def decompose_in_patterns(m: Sequence[Sequence[int]]) -> Dict[str, int]:
    """Write an integer matrix as a combination of the seven patterns.

    The patterns have disjoint supports apart from the diagonal, so the
    coefficients can be read off positionally; a leftover entry means the
    matrix is outside the span and raises.
    """
    coeff = {}
    coeff["U"] = m[0][0]
    residue = [[m[r][c] - coeff["U"] * (1 if r == c else 0) for c in range(7)] for r in range(7)]
    for name in ("Ea", "Eb", "Ec", "Ed", "Ee", "Ef"):
        anchor_r, anchor_c = PATTERNS[name][0]
        coeff[name] = residue[anchor_r - 1][anchor_c - 1]
        for r, c in PATTERNS[name]:
            residue[r - 1][c - 1] -= coeff[name]
    if any(any(row) for row in residue):
        raise ValueError("matrix is outside the pattern span")
    return coeff


def pattern_product_table() -> Dict[Tuple[str, str], Dict[str, int]]:
    """Integer multiplication table for all 49 pattern pairs."""
    out = {}
    for x in NAMES:
        for y in NAMES:
            out[(x, y)] = decompose_in_patterns(int_matmul(pattern_matrix(x), pattern_matrix(y)))
    return out


def brute_center_mod_p(table: Dict[Tuple[str, str], Dict[str, int]], p: int) -> List[Tuple[int, ...]]:
    """All vectors commuting with every basis element, by full sweep (p^7)."""
    names = NAMES
    idx = {nm: i for i, nm in enumerate(names)}

    def mult(u, v):
        acc = [0] * 7
        for i, nm_i in enumerate(names):
            if u[i]:
                for j, nm_j in enumerate(names):
                    if v[j]:
                        for nm_k, c in table[(nm_i, nm_j)].items():
                            acc[idx[nm_k]] += u[i] * v[j] * c
        return tuple(a % p for a in acc)

    central = []
    total = p**7
    for code in range(total):
        v = []
        rem = code
        for _ in range(7):
            v.append(rem % p)
            rem //= p
        v = tuple(v)
        basis = [tuple(1 if t == i else 0 for t in range(7)) for i in range(7)]
        if all(mult(v, b) == mult(b, v) for b in basis):
            central.append(v)
    return central
