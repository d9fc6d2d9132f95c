import pytest

from ringlab.algebra import build_algebra
from ringlab.catalog import paper_algebra
from ringlab.errors import NonIntegralConstants, WitnessNotCentral
from ringlab.fields import GF2, GF3, GF5, QQ, PrimeField
from ringlab.polycert import (
    MultiPoly,
    generic_product,
    is_zero,
    witness_certificate_check,
)
from ringlab.rng import SplitMix64


def P(name):
    return MultiPoly.variable(name)


def test_difference_of_squares_golden():
    a, b = P("a"), P("b")
    prod = (a + b) * (a - b)
    assert str(prod) == "a^2 - b^2"


def test_sum_of_squares_golden():
    a, b = P("a"), P("b")
    assert str(a * a + b * b) == "a^2 + b^2"


def test_cancellation_to_zero():
    f = P("x") * P("y") + MultiPoly.constant(3, ("x", "y"))
    assert is_zero(f - f)
    assert str(f - f) == "0"


def test_commuting_variables():
    assert is_zero(P("a") * P("b") - P("b") * P("a"))


def test_canonical_order_and_formatting():
    x, y = P("x"), P("y")
    f = MultiPoly.constant(2) + x * x.scaled(3) + y
    # graded-lex descending: degree 2, then degree 1, then the constant
    assert str(f) == "3*x^2 + y + 2"
    g = MultiPoly.constant(-1) - x
    assert str(g) == "-x - 1"


def test_evaluation_with_modulus():
    f = P("a") * P("a") + P("b") * P("b")
    assert f.evaluate({"a": 1, "b": 1}) == 2
    assert f.evaluate({"a": 1, "b": 1}, modulus=2) == 0
    assert f.evaluate({"a": 1, "b": 1}, modulus=3) == 2


def test_generic_product_one_dimensional():
    alg = build_algebra(QQ, 1, [1], [[[1]]])
    polys = generic_product(alg)
    assert len(polys) == 1
    assert str(polys[0]) == "u_b0*v_b0"


def test_generic_product_commutator_of_paper_algebra():
    bundle = paper_algebra(QQ)
    polys = generic_product(bundle.algebra)
    # The Ec coordinate of u*v is u_a*v_b plus the unit cross terms
    assert str(polys[3]) == "u_alpha*v_c + u_a*v_b + u_c*v_alpha"
    # commutator: swap prefixes and subtract; only the Ec slot survives
    swapped = generic_product(bundle.algebra, u_prefix="v", v_prefix="u")
    comm = [p - q for p, q in zip(polys, swapped)]
    assert str(comm[3]) == "u_a*v_b - u_b*v_a"
    for k in (0, 1, 2, 4, 5, 6):
        assert comm[k].is_zero()


def test_generic_product_specializes_to_multiply():
    bundle_q = paper_algebra(QQ)
    polys = generic_product(bundle_q.algebra)
    for p in (2, 3, 5):
        field = PrimeField(p)
        alg = paper_algebra(field).algebra
        rng = SplitMix64(41 + p)
        for _ in range(100):
            u = tuple(rng.randrange(p) for _ in range(7))
            v = tuple(rng.randrange(p) for _ in range(7))
            point = {}
            for nm, x in zip(bundle_q.algebra.coord_names, u):
                point[f"u_{nm}"] = x
            for nm, x in zip(bundle_q.algebra.coord_names, v):
                point[f"v_{nm}"] = x
            got = tuple(poly.evaluate(point, modulus=p) for poly in polys)
            assert got == alg.multiply(u, v)


def test_generic_product_rejects_prime_fields():
    bundle = paper_algebra(GF2)
    with pytest.raises(NonIntegralConstants):
        generic_product(bundle.algebra)


def test_paper_witness_certificate():
    bundle = paper_algebra(QQ)
    cert = witness_certificate_check(bundle.algebra, bundle.witness_map)
    assert cert.noncentral_vanishes
    coords = dict(cert.central_coords)
    assert str(coords["Ed"]) == "alpha*a"
    assert str(coords["Ee"]) == "alpha*b"
    assert str(coords["Ef"]) == "a^2 + b^2"
    assert coords["U"].is_zero()
    assert coords["Ec"].is_zero()
    # characteristic-2 failure at (alpha, a, b) = (0, 1, 1)
    assert cert.failing_probes
    probe = next(p for p in cert.failing_probes if p.characteristics == (2,))
    assert probe.point[0] == 0 and probe.point[1] != 0 and probe.point[2] != 0
    assert not cert.sound_over_every_field


def test_corrected_piecewise_witness_branches():
    bundle = paper_algebra(QQ)
    n = 7
    w_d = [[0] * n for _ in range(n)]
    w_d[4][1] = 1  # d <- a, for the branch a != 0
    cert_d = witness_certificate_check(bundle.algebra, w_d, branch_variable="a")
    assert cert_d.noncentral_vanishes
    assert cert_d.branch_square_certified
    assert cert_d.sound_over_every_field
    coords = dict(cert_d.central_coords)
    assert str(coords["Ed"]) == "alpha*a"
    assert str(coords["Ef"]) == "a^2"

    w_e = [[0] * n for _ in range(n)]
    w_e[5][2] = 1  # e <- b, for the branch b != 0
    cert_e = witness_certificate_check(bundle.algebra, w_e, branch_variable="b")
    assert cert_e.noncentral_vanishes
    assert cert_e.branch_square_certified
    assert str(dict(cert_e.central_coords)["Ef"]) == "b^2"


def test_noncentral_witness_rejected():
    bundle = paper_algebra(QQ)
    w = [[0] * 7 for _ in range(7)]
    w[1][1] = 1  # image Ea is not central
    with pytest.raises(WitnessNotCentral):
        witness_certificate_check(bundle.algebra, w)


def test_vanishing_implication_specializes_to_finite_fields():
    # noncentral coordinates of a*W(a) vanish identically over Q, hence
    # the same products are central after any specialization
    bundle_q = paper_algebra(QQ)
    cert = witness_certificate_check(bundle_q.algebra, bundle_q.witness_map)
    assert cert.noncentral_vanishes
    from ringlab.central import center

    for field in (GF2, GF3, GF5):
        bundle = paper_algebra(field)
        alg = bundle.algebra
        z = center(alg)
        for a in alg.enumerate_elements():
            product = alg.multiply(a, bundle.witness_image(a))
            assert z.contains(product)


def test_piecewise_witness_matches_exhaustive_checks():
    # Ed-branch when the a coordinate is nonzero, Ee-branch otherwise
    from ringlab.central import center

    for field in (GF2, GF3, GF5):
        alg = paper_algebra(field).algebra
        z = center(alg)
        ed, ee = alg.basis_vector(4), alg.basis_vector(5)
        for a in alg.enumerate_elements():
            if z.contains(a):
                continue
            factor = ed if a[1] else ee
            y = alg.multiply(a, factor)
            assert any(y) and z.contains(y)
