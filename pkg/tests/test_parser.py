import pytest
from hypothesis import given
from hypothesis import strategies as st

from kchalex.algebra import MultiPoly
from kchalex.parser import ParseError, parse_expr, parse_ratfunc, parse_unipoly, tokenize

from conftest import GENS


def test_trefoil_differential_text():
    p = parse_expr("lambda*mu^-2 - lambda*mu^-3 - (2*Q - mu)*a12 - Q*a12^2*a21", GENS)
    assert len(p.terms) == 5
    assert p.evaluate({"lambda": 1, "mu": 1, "Q": 1, "a12": 1, "a21": 1}) == -2


def test_zero():
    assert parse_expr("0", GENS).is_zero()


def test_negative_chord_exponent():
    with pytest.raises(ParseError):
        parse_expr("a12^-1", GENS)


def test_unary_minus_binds_looser_than_power():
    assert parse_expr("-mu^2", GENS) == -MultiPoly.var("mu", GENS) ** 2
    assert parse_expr("--mu", GENS) == MultiPoly.var("mu", GENS)


def test_whitespace_insignificant():
    assert parse_expr(" lambda *\tmu ^ 2 ", GENS) == parse_expr("lambda*mu^2", GENS)


def test_error_position():
    with pytest.raises(ParseError) as e:
        parse_expr("mu + $", GENS)
    assert e.value.pos == 5


def test_unknown_identifier():
    with pytest.raises(ParseError):
        parse_expr("nu + 1", GENS)


def test_ratfunc_and_unipoly():
    r = parse_ratfunc("(mu-1)/mu^2")
    assert str(r.num) == "mu - 1" and str(r.den) == "mu^2"
    assert parse_unipoly("(mu^3 + 1)/(mu + 1)") == parse_unipoly("mu^2 - mu + 1")
    with pytest.raises(ParseError):
        parse_unipoly("1/mu")
    with pytest.raises(ParseError):
        parse_ratfunc("1/(mu - mu)")


FUZZ = ["", " ", "(", ")", "mu +", "+", "*mu", "mu**2", "mu^", "mu^x", "mu^2^3", "((mu)",
        "mu)", "2 mu", "mu mu", "3.5", "mu^-", "a12^-2", "lambda/a12", "mu/0", "#", "mu^99999",
        "1e3", "mu,lambda", "a12 a21", "()", "mu^(2)", "λ", "-", "--", "mu - * 2"]


@pytest.mark.parametrize("text", FUZZ)
def test_fuzz_corpus_rejected(text):
    with pytest.raises(ParseError):
        parse_expr(text, GENS)


@given(st.text(alphabet="lambdmuQa12+-*/^() 0123456789", max_size=25))
def test_random_strings_never_crash(text):
    try:
        parse_expr(text, GENS)
    except ParseError:
        pass


def test_tokenize_positions():
    assert [t[2] for t in tokenize("mu + 12")] == [0, 3, 5, 7]
