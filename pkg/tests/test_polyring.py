from fractions import Fraction

import pytest

from arrgr.errors import ConsistencyError, InputError
from arrgr.polyring import Poly, format_poincare


def test_zero_coefficients_dropped():
    p = Poly.generator(0) - Poly.generator(0)
    assert p.is_zero
    assert (Poly.monomial((0, 1)) * 0).is_zero


def test_monomials_sorted_with_repeats():
    p = Poly.generator(2) * Poly.generator(0) * Poly.generator(2)
    assert list(p.terms) == [((0, 2, 2), 0)]


def test_arithmetic():
    e0, e1 = Poly.generator(0), Poly.generator(1)
    p = (e0 + 1) * (e1 - 1)
    assert p == Poly({((0, 1), 0): 1, ((0,), 0): -1, ((1,), 0): 1, ((), 0): -1})
    assert p - p == Poly.zero()
    assert 2 * e0 == e0 + e0


def test_substitute_and_divide_u():
    e = Poly.generator(0)
    rel = e * (e - Poly.u())
    assert rel.substitute_u(0) == e * e
    assert rel.substitute_u(1) == e * e - e
    assert (rel.substitute_u(1)).squarefree_reduce().is_zero
    div = (Poly.u() * e - Poly.u(2)).divide_u()
    assert div == e - Poly.u()
    with pytest.raises(ConsistencyError):
        (e + Poly.u()).divide_u()


def test_kill_squares_and_reduce():
    e = Poly.generator(0)
    sq = e * e + e
    assert sq.kill_squares() == e
    assert sq.squarefree_reduce() == 2 * e


def test_top_e_part():
    e0, e1 = Poly.generator(0), Poly.generator(1)
    p = e0 * e1 - e0 + 3
    assert p.top_e_part() == e0 * e1
    with pytest.raises(InputError):
        (e0 + Poly.u()).top_e_part()


def test_homogeneity_in_the_degree2_grading():
    e = Poly.generator(0)
    assert (e * e - Poly.u() * e).is_homogeneous
    assert not (e * e - e).is_homogeneous


def test_to_str_canonical():
    e0, e1, e2 = (Poly.generator(i) for i in range(3))
    labels = ("12", "13", "23")
    p = e0 * e1 - e0 * e2 + e1 * e2 - Poly.u() * e1
    assert p.to_str(labels) == "e12*e13 - e12*e23 + e13*e23 - u*e13"
    assert (e0 * e0 - Poly.u() * e0).to_str(labels) == "e12^2 - u*e12"
    assert Poly.zero().to_str(labels) == "0"
    assert (Poly.constant(Fraction(-1, 2)) + e0).to_str(labels) == "e12 - 1/2"


def test_format_poincare():
    assert format_poincare([1, 6, 11, 6]) == "1 + 6t^2 + 11t^4 + 6t^6"
    assert format_poincare([1, 0, 2]) == "1 + 2t^4"
    assert format_poincare([]) == "0"
