"""Multivariate gcd over Q by recursive primitive pseudo-remainder sequences.

A polynomial in x_1..x_n is viewed as univariate in its first occurring
variable with coefficients in the remaining variables; contents are taken
recursively.  Only nonnegative exponents are supported.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce

from .multipoly import MultiPoly


def _lex_lead(p: MultiPoly):
    return max(p.terms)


def _normalize(p: MultiPoly) -> MultiPoly:
    if p.is_zero():
        return p
    return p.scale(1 / p.terms[_lex_lead(p)])


def mpoly_exact_div(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """f / g, raising ArithmeticError when g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    glm = _lex_lead(g)
    glc = g.terms[glm]
    rem = dict(f.terms)
    q: dict = {}
    while rem:
        lt = max(rem)
        shift = tuple(a - b for a, b in zip(lt, glm))
        if any(s < 0 for s in shift):
            raise ArithmeticError(f"{g} does not divide {f}")
        c = rem[lt] / glc
        q[shift] = c
        for e, gc in g.terms.items():
            ne = tuple(a + b for a, b in zip(e, shift))
            v = rem.get(ne, 0) - c * gc
            if v == 0:
                rem.pop(ne, None)
            else:
                rem[ne] = v
    return MultiPoly(f.gens, q, check=False)


def _coeffs(p: MultiPoly, i: int) -> dict[int, MultiPoly]:
    out: dict[int, dict] = {}
    for e, c in p.terms.items():
        k = e[i]
        stripped = e[:i] + (0,) + e[i + 1:]
        out.setdefault(k, {})[stripped] = c
    return {k: MultiPoly(p.gens, t, check=False) for k, t in out.items()}


def _deg(p: MultiPoly, i: int) -> int:
    return max((e[i] for e in p.terms), default=-1)


def _content(p: MultiPoly, i: int) -> MultiPoly:
    return reduce(mpoly_gcd, _coeffs(p, i).values())


def _prem(a: MultiPoly, b: MultiPoly, i: int) -> MultiPoly:
    db = _deg(b, i)
    lcb = _coeffs(b, i)[db]
    r = a
    while not r.is_zero() and _deg(r, i) >= db:
        dr = _deg(r, i)
        lcr = _coeffs(r, i)[dr]
        shift = [0] * len(a.gens)
        shift[i] = dr - db
        r = r * lcb - (lcr * b).mul_monomial(shift)
    return r


def mpoly_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Greatest common divisor, normalized to lex-leading coefficient 1."""
    if f.gens != g.gens:
        g = g.with_gens(f.gens)
    if f.is_zero():
        return _normalize(g)
    if g.is_zero():
        return _normalize(f)
    used = f.variables() | g.variables()
    if not used:
        return MultiPoly.constant(Fraction(1), f.gens)
    i = min(f.gens.index(v) for v in used)
    if _deg(f, i) <= 0 or _deg(g, i) <= 0:
        # x_i divides out of one side entirely: gcd of the other's coefficients with it
        if _deg(f, i) <= 0:
            f, g = g, f
        return _normalize(reduce(mpoly_gcd, _coeffs(f, i).values(), g))
    cf, cg = _content(f, i), _content(g, i)
    c = mpoly_gcd(cf, cg)
    a = mpoly_exact_div(f, cf)
    b = mpoly_exact_div(g, cg)
    if _deg(a, i) < _deg(b, i):
        a, b = b, a
    while not b.is_zero() and _deg(b, i) > 0:
        r = _prem(a, b, i)
        a = b
        b = r if r.is_zero() else mpoly_exact_div(r, _content(r, i))
    if b.is_zero():
        res = mpoly_exact_div(a, _content(a, i))
    else:
        # nonzero remainder free of x_i: the primitive parts are coprime in x_i
        res = MultiPoly.constant(Fraction(1), f.gens)
    return _normalize(c * res)
