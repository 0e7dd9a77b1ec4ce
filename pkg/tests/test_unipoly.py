from fractions import Fraction

import pytest
from hypothesis import given

from kchalex.algebra import RatFunc, UniPoly, ratfunc_reduce, unipoly_gcd
from kchalex.parser import parse_ratfunc, parse_unipoly

from conftest import unipolys

P = parse_unipoly


def test_gcd_examples():
    assert unipoly_gcd(P("mu^2 - 1"), P("mu - 1")) == P("mu - 1")
    assert unipoly_gcd(P("mu^2 - mu + 1"), P("mu - 1")) == P("1")
    assert unipoly_gcd(P("3*mu - 6"), UniPoly([])) == P("mu - 2")


def test_gcd_of_two_zeros_raises():
    with pytest.raises(ValueError):
        unipoly_gcd(UniPoly([]), UniPoly([]))


def test_ratfunc_reduce_examples():
    r = ratfunc_reduce(P("4*mu^3 - 7*mu^2 + 5*mu - 2"), P("(mu - 1)*(mu^2 - mu + 1)"))
    assert (r.num, r.den) == (P("4*mu^2 - 3*mu + 2"), P("mu^2 - mu + 1"))
    z = ratfunc_reduce(UniPoly([]), P("mu + 7"))
    assert (z.num, z.den) == (UniPoly([]), UniPoly([1]))
    q = ratfunc_reduce(P("mu^2 - 1"), P("mu - 1"))
    assert (q.num, q.den) == (P("mu + 1"), UniPoly([1]))


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RatFunc(P("mu"), UniPoly([]))


def test_denominator_is_monic():
    r = RatFunc(P("2"), P("-4*mu + 2"))
    assert r.den == P("mu - 1/2")
    assert r.num == UniPoly([Fraction(-1, 2)])


def test_sqrt_of_square_discriminant():
    disc = parse_ratfunc("((mu - 2)/mu)^2")
    s = disc.sqrt()
    assert s is not None and s * s == disc
    assert parse_ratfunc("mu").sqrt() is None
    assert parse_ratfunc("-(mu+1)^2").sqrt() is None


def test_at_infinity():
    assert parse_ratfunc("(4*mu^2 - 3*mu + 2)/(mu^2 - mu + 1)").at_infinity() == 4
    assert parse_ratfunc("1/(mu - 1)").at_infinity() == 0
    assert parse_ratfunc("mu^2/(mu - 1)").at_infinity() is None


@given(unipolys(), unipolys())
def test_divmod_identity(a, b):
    if b.is_zero():
        return
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(unipolys(), unipolys(), unipolys())
def test_gcd_divides_both(a, b, c):
    if (a * c).is_zero() and (b * c).is_zero():
        return
    g = unipoly_gcd(a * c, b * c)
    assert (a * c) % g == UniPoly([]) and (b * c) % g == UniPoly([])
    if not c.is_zero():
        assert g % c.monic() == UniPoly([])


@given(unipolys(), unipolys(max_degree=3))
def test_ratfunc_is_reduced(a, b):
    if b.is_zero():
        return
    r = RatFunc(a, b)
    if not r.is_zero():
        assert unipoly_gcd(r.num, r.den).degree == 0
    assert r.den.lc == 1
    assert r * RatFunc(b) == RatFunc(a)


@given(unipolys(max_degree=4), unipolys(max_degree=4))
def test_derivative_product_rule(a, b):
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@given(unipolys(max_degree=4))
def test_evaluation_is_ring_homomorphism(a):
    b = a * a + a
    for x in (Fraction(-2), Fraction(1, 3), Fraction(5)):
        assert b(x) == a(x) * a(x) + a(x)
