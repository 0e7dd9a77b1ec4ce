from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kchalex.algebra import SeriesDomainError, TruncSeries, series_exp, series_inverse, series_log

from conftest import small_fracs


def test_exp_of_harmonic_is_geometric():
    f = TruncSeries.from_coeffs([0] + [Fraction(1, n) for n in range(1, 5)], 5)
    assert series_exp(f).coeffs == (1, 1, 1, 1, 1)


def test_exp_zero():
    assert series_exp(TruncSeries((), 4)).coeffs == (1, 0, 0, 0)


@pytest.mark.parametrize("c", [Fraction(2), Fraction(-1, 3), Fraction(5, 2)])
def test_log_one_minus_c_mu(c):
    g = TruncSeries.from_coeffs([1, -c], 4)
    mercator = [Fraction(0)] + [-c ** n / n for n in range(1, 4)]
    assert series_log(g).coeffs == tuple(mercator)


def test_domain_errors():
    with pytest.raises(SeriesDomainError):
        series_exp(TruncSeries.from_coeffs([1], 3))
    with pytest.raises(SeriesDomainError):
        series_log(TruncSeries.from_coeffs([2], 3))
    with pytest.raises(SeriesDomainError):
        series_inverse(TruncSeries.from_coeffs([0, 1], 3))


@given(st.lists(small_fracs, min_size=1, max_size=8), st.integers(1, 10))
def test_exp_log_round_trip(tail, order):
    g = TruncSeries.from_coeffs([1] + tail, order)
    assert series_exp(series_log(g)) == g
    f = TruncSeries.from_coeffs([0] + tail, order)
    assert series_log(series_exp(f)) == f


@given(st.lists(small_fracs, min_size=1, max_size=6), st.integers(1, 8))
def test_inverse(cs, order):
    g = TruncSeries.from_coeffs([1] + cs, order)
    one = TruncSeries.from_coeffs([1], order)
    assert g * series_inverse(g) == one


def test_truncation_discards_high_terms():
    a = TruncSeries.from_coeffs([0, 1], 3)
    assert (a * a * a).coeffs == (0, 0, 0)
