import json

import pytest

from ringlab.algebra import build_algebra
from ringlab.catalog import (
    diagonal,
    full_matrix,
    paper_algebra,
    paper_spec,
    random_subalgebra,
    upper_triangular,
)
from ringlab.central import center, check_centrally_essential
from ringlab.fields import GF2, GF3, QQ
from ringlab.ideals import jacobson_radical, sidedness
from ringlab.serialization import algebra_from_spec, algebra_to_spec, dumps_spec

from oracle import NAMES, pattern_product_table


def test_bundle_element_count():
    bundle = paper_algebra(GF2)
    assert bundle.algebra.element_count() == 128


def test_bundle_multiplication_table_rederived():
    # nonzero products among the six nilpotent patterns, from the matrix oracle
    table = pattern_product_table()
    nonzero = {
        (x, y): {k: v for k, v in coeffs.items() if v}
        for (x, y), coeffs in table.items()
        if x != "U" and y != "U" and any(coeffs.values())
    }
    assert nonzero == {
        ("Ea", "Eb"): {"Ec": 1},
        ("Ea", "Ed"): {"Ef": 1},
        ("Ed", "Ea"): {"Ef": 1},
        ("Eb", "Ee"): {"Ef": 1},
        ("Ee", "Eb"): {"Ef": 1},
    }
    bundle = paper_algebra(GF3)
    alg = bundle.algebra
    for (x, y), coeffs in table.items():
        got = alg.multiply(alg.basis_vector(NAMES.index(x)), alg.basis_vector(NAMES.index(y)))
        assert got == tuple(coeffs.get(nm, 0) % 3 for nm in NAMES)


def test_bundle_sidedness_rederived():
    bundle = paper_algebra(GF2)
    alg = bundle.algebra
    si = sidedness(alg, bundle.ideal_I)
    sj = sidedness(alg, bundle.ideal_J)
    sc = sidedness(alg, bundle.ideal_C)
    assert (si.is_right, si.is_left) == (True, False)
    assert (sj.is_right, sj.is_left) == (False, True)
    assert sc.two_sided


def test_bundle_center_and_radical():
    bundle = paper_algebra(GF2)
    assert center(bundle.algebra).dim == 5
    assert jacobson_radical(bundle.algebra).radical.dim == 6


def test_witness_image():
    bundle = paper_algebra(GF3)
    a = bundle.algebra.element([1, 2, 1, 0, 0, 0, 0])  # alpha=1, a=2, b=1
    w = bundle.witness_image(a)
    assert w == bundle.algebra.element([0, 0, 0, 0, 2, 1, 0])


def test_upper_triangular_and_full_matrix_shapes():
    assert upper_triangular(2, GF2).dim == 3
    assert upper_triangular(3, GF2).dim == 6
    assert full_matrix(2, GF3).dim == 4
    assert full_matrix(1, GF2).dim == 1  # the field itself
    assert diagonal(2, GF2).dim == 2


def test_control_algebra_properties():
    assert check_centrally_essential(full_matrix(2, GF2)).verdict == "not_centrally_essential"
    ut = upper_triangular(2, GF2)
    cert = jacobson_radical(ut)
    assert cert.radical.dim == 1


def test_random_subalgebra_deterministic():
    a = random_subalgebra(3, GF2, 2, seed=42)
    b = random_subalgebra(3, GF2, 2, seed=42)
    assert a.algebra.table == b.algebra.table
    assert a.algebra.dim == b.algebra.dim
    assert a.scheme == "splitmix64-mod-v1"
    c = random_subalgebra(3, GF2, 2, seed=43)
    # a different seed; the odds of an identical table are negligible
    assert (c.algebra.dim, c.algebra.table) != (a.algebra.dim, a.algebra.table)


def test_random_subalgebra_zero_generators_is_scalars():
    s = random_subalgebra(3, GF3, 0, seed=0)
    assert s.algebra.dim == 1


def test_random_subalgebra_passes_validation():
    for seed in range(5):
        s = random_subalgebra(2, GF3, 2, seed=seed)
        alg = s.algebra
        # re-validate the produced table from scratch, associativity included
        rebuilt = build_algebra(alg.field, alg.dim, alg.unit, alg.table, alg.names)
        assert rebuilt.table == alg.table


def test_paper_spec_round_trip_identical():
    spec = paper_spec(GF2)
    text = dumps_spec(spec)
    decoded, _ = algebra_from_spec(json.loads(text))
    original = paper_algebra(GF2).algebra
    assert decoded.table == original.table
    assert decoded.unit == original.unit
    assert decoded.names == original.names
    # byte stability
    assert dumps_spec(spec) == text


def test_structure_constant_round_trip_over_q():
    alg = paper_algebra(QQ).algebra
    spec = algebra_to_spec(alg)
    decoded, _ = algebra_from_spec(json.loads(dumps_spec(spec)))
    assert decoded.table == alg.table
    assert decoded.unit == alg.unit
