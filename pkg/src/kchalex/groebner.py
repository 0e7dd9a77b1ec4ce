"""Groebner bases over a coefficient field, with elimination and saturation.

Polynomials are handled internally as ``{exponent tuple: coefficient}``
dicts.  Coefficients are usually ``Fraction`` but any exact field works
(the augmentation solver runs this over Q(mu) with ``RatFunc``).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .algebra.mgcd import mpoly_exact_div, mpoly_gcd
from .algebra.multipoly import RING_VARS, MultiPoly
from .dga import DGA


class GroebnerTimeout(RuntimeError):
    pass


class LaurentExponents(ValueError):
    pass


class ZeroEliminationIdeal(ValueError):
    pass


DEFAULT_TIMEOUT = 120.0


# -- monomial orders ----------------------------------------------------

@dataclass(frozen=True)
class MonomialOrder:
    """lex, grevlex, or a two-block elimination order.

    For ``kind="elim"`` the first ``nfront`` variables form the block to be
    eliminated; blocks compare lexicographically, grevlex inside each block.
    """

    kind: str = "grevlex"
    nfront: int = 0

    def key(self) -> Callable:
        if self.kind == "lex":
            return _lex_key
        if self.kind == "grevlex":
            return _grevlex_key
        if self.kind == "elim":
            k = self.nfront

            def elim_key(e):
                return (_grevlex_key(e[:k]), _grevlex_key(e[k:]))
            return elim_key
        raise ValueError(f"unknown monomial order {self.kind!r}")


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def _lex_key(e):
    return e


def _grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


@dataclass(frozen=True)
class Ideal:
    generators: tuple[MultiPoly, ...]
    symtab: tuple[str, ...]
    warnings: tuple[str, ...] = field(default=())

    @classmethod
    def of(cls, gens: Iterable[MultiPoly], symtab: Sequence[str] | None = None) -> "Ideal":
        gens = [g for g in gens]
        if symtab is None:
            if not gens:
                raise ValueError("symtab needed for an empty generator list")
            symtab = gens[0].gens
        symtab = tuple(symtab)
        return cls(tuple(g.with_gens(symtab) for g in gens if not g.is_zero()), symtab)

    def is_zero(self) -> bool:
        return not self.generators


# -- internal dict arithmetic --------------------------------------------

def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a, b) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class _Poly:
    __slots__ = ("terms", "lm", "lc")

    def __init__(self, terms: dict, key):
        self.terms = terms
        self.lm = max(terms, key=key)
        self.lc = terms[self.lm]


def _monic(terms: dict, key) -> dict:
    lm = max(terms, key=key)
    lc = terms[lm]
    if lc == 1:
        return terms
    inv = 1 / lc
    return {e: c * inv for e, c in terms.items()}


def _reduce(f: dict, basis: list[_Poly], key, deadline: float | None) -> dict:
    """Full reduction of f modulo basis; returns the remainder dict."""
    f = dict(f)
    rem = {}
    steps = 0
    while f:
        lt = max(f, key=key)
        c = f[lt]
        for g in basis:
            if _divides(g.lm, lt):
                shift = tuple(a - b for a, b in zip(lt, g.lm))
                factor = c / g.lc
                for e, gc in g.terms.items():
                    ne = tuple(a + b for a, b in zip(e, shift))
                    v = f.get(ne)
                    v = -factor * gc if v is None else v - factor * gc
                    if v == 0:
                        f.pop(ne, None)
                    else:
                        f[ne] = v
                break
        else:
            rem[lt] = c
            del f[lt]
        steps += 1
        if deadline is not None and steps % 64 == 0 and time.monotonic() > deadline:
            raise GroebnerTimeout("Groebner computation exceeded its time budget")
    return rem


def _spoly(f: _Poly, g: _Poly) -> dict:
    l = _lcm(f.lm, g.lm)
    sf = tuple(a - b for a, b in zip(l, f.lm))
    sg = tuple(a - b for a, b in zip(l, g.lm))
    out: dict = {}
    inv_f, inv_g = 1 / f.lc, 1 / g.lc
    for e, c in f.terms.items():
        out[tuple(a + b for a, b in zip(e, sf))] = c * inv_f
    for e, c in g.terms.items():
        ne = tuple(a + b for a, b in zip(e, sg))
        v = out.get(ne)
        v = -c * inv_g if v is None else v - c * inv_g
        if v == 0:
            out.pop(ne, None)
        else:
            out[ne] = v
    return out


def _clean(terms: dict) -> dict:
    return {e: c for e, c in terms.items() if c != 0}


def groebner_dicts(polys: list[dict], key, deadline: float | None = None) -> list[dict]:
    """Reduced Groebner basis of dict polynomials under the order ``key``.

    Buchberger's algorithm with the normal selection strategy and the
    Gebauer-Moeller pair criteria.
    """
    polys = [_clean(p) for p in polys]
    polys = [p for p in polys if p]
    if not polys:
        return []
    store: list[_Poly] = []
    active: list[int] = []
    pairs: list[tuple[int, int]] = []

    def update(h: int):
        nonlocal active, pairs
        hp = store[h]
        cands = list(active)
        # Gebauer-Moeller: drop (h, g1) when some other pair has a dividing lcm
        keep = []
        for idx, g1 in enumerate(cands):
            l1 = _lcm(hp.lm, store[g1].lm)
            if _coprime(hp.lm, store[g1].lm):
                keep.append(g1)
                continue
            dominated = False
            for g2 in cands[idx + 1:]:
                if _divides(_lcm(hp.lm, store[g2].lm), l1):
                    dominated = True
                    break
            if not dominated:
                for g2 in keep:
                    if _divides(_lcm(hp.lm, store[g2].lm), l1):
                        dominated = True
                        break
            if not dominated:
                keep.append(g1)
        new_pairs = [(g, h) for g in keep if not _coprime(hp.lm, store[g].lm)]
        old = []
        for (a, b) in pairs:
            lab = _lcm(store[a].lm, store[b].lm)
            if (_divides(hp.lm, lab)
                    and _lcm(store[a].lm, hp.lm) != lab
                    and _lcm(hp.lm, store[b].lm) != lab):
                continue
            old.append((a, b))
        pairs = old + new_pairs
        active = [g for g in active if not _divides(hp.lm, store[g].lm)] + [h]

    for p in sorted(polys, key=lambda t: key(max(t, key=key))):
        r = _reduce(p, [store[i] for i in active], key, deadline)
        if not r:
            continue
        store.append(_Poly(_monic(r, key), key))
        update(len(store) - 1)
        if deadline is not None and time.monotonic() > deadline:
            raise GroebnerTimeout("Groebner computation exceeded its time budget")

    while pairs:
        if deadline is not None and time.monotonic() > deadline:
            raise GroebnerTimeout("Groebner computation exceeded its time budget")
        best = min(range(len(pairs)),
                   key=lambda k: (key(_lcm(store[pairs[k][0]].lm, store[pairs[k][1]].lm)), pairs[k]))
        a, b = pairs.pop(best)
        s = _spoly(store[a], store[b])
        r = _reduce(s, [store[i] for i in active], key, deadline)
        if not r:
            continue
        store.append(_Poly(_monic(r, key), key))
        update(len(store) - 1)

    basis = [store[i] for i in active]
    # minimal basis, then interreduce
    basis.sort(key=lambda p: key(p.lm))
    minimal: list[_Poly] = []
    for p in basis:
        if not any(_divides(q.lm, p.lm) for q in minimal):
            minimal.append(p)
    reduced = []
    for i, p in enumerate(minimal):
        others = [q for j, q in enumerate(minimal) if j != i]
        tail = {e: c for e, c in p.terms.items() if e != p.lm}
        r = _reduce(tail, others, key, deadline)
        r[p.lm] = p.lc
        reduced.append(_monic(r, key))
    reduced.sort(key=lambda t: key(max(t, key=key)), reverse=True)
    return reduced


# -- public API on MultiPoly ------------------------------------------------

def _check_polynomial(p: MultiPoly):
    if p.has_negative_exponents():
        raise LaurentExponents(f"{p} has negative exponents; saturate or clear denominators first")


def _deadline(timeout: float | None) -> float | None:
    return None if timeout is None else time.monotonic() + timeout


def normal_form(p: MultiPoly, basis: Sequence[MultiPoly], order: MonomialOrder = GREVLEX) -> MultiPoly:
    """Remainder of p on division by ``basis`` (in the given order)."""
    _check_polynomial(p)
    for g in basis:
        _check_polynomial(g)
    key = order.key()
    polys = [_Poly(dict(g.with_gens(p.gens).terms), key) for g in basis if not g.is_zero()]
    return MultiPoly(p.gens, _reduce(p.terms, polys, key, None), check=False)


def buchberger(ideal: Ideal, order: MonomialOrder = GREVLEX, timeout: float | None = DEFAULT_TIMEOUT
               ) -> list[MultiPoly]:
    """Reduced Groebner basis, sorted by descending leading monomial."""
    for g in ideal.generators:
        _check_polynomial(g)
    key = order.key()
    gb = groebner_dicts([dict(g.terms) for g in ideal.generators], key, _deadline(timeout))
    return [MultiPoly(ideal.symtab, t, check=False) for t in gb]


def leading_monomial(p: MultiPoly, order: MonomialOrder = GREVLEX):
    return max(p.terms, key=order.key())


def spoly(f: MultiPoly, g: MultiPoly, order: MonomialOrder = GREVLEX) -> MultiPoly:
    key = order.key()
    return MultiPoly(f.gens, _spoly(_Poly(dict(f.terms), key), _Poly(dict(g.terms), key)), check=False)


def eliminate(ideal: Ideal, drop_vars: Iterable[str], timeout: float | None = DEFAULT_TIMEOUT) -> Ideal:
    """Groebner basis of the elimination ideal ``ideal ∩ k[remaining vars]``."""
    drop = [v for v in ideal.symtab if v in set(drop_vars)]
    unknown = set(drop_vars) - set(ideal.symtab)
    if unknown:
        raise KeyError(f"unknown variables {sorted(unknown)}")
    keep = [v for v in ideal.symtab if v not in drop]
    work = tuple(drop) + tuple(keep)
    gens = [g.with_gens(work) for g in ideal.generators]
    order = MonomialOrder("elim", len(drop))
    gb = buchberger(Ideal(tuple(gens), work), order, timeout)
    k = len(drop)
    out = []
    for g in gb:
        if all(not any(e[:k]) for e in g.terms):
            out.append(MultiPoly(tuple(keep), {e[k:]: c for e, c in g.terms.items()}, check=False))
    return Ideal(tuple(out), tuple(keep))


def _fresh(symtab: Sequence[str], base: str = "w") -> str:
    name = base
    n = 0
    while name in symtab:
        n += 1
        name = f"{base}{n}"
    return name


def saturate(ideal: Ideal, f: MultiPoly, timeout: float | None = DEFAULT_TIMEOUT) -> Ideal:
    """(ideal : f^inf) via a Rabinowitsch variable w and elimination of w."""
    if f.is_zero():
        raise ValueError("cannot saturate by zero")
    w = _fresh(ideal.symtab)
    ext = ideal.symtab + (w,)
    gens = [g.with_gens(ext) for g in ideal.generators]
    rab = MultiPoly.var(w, ext) * f.with_gens(ext) - 1
    return eliminate(Ideal(tuple(gens) + (rab,), ext), [w], timeout)


# -- augmentation polynomial by elimination ---------------------------------

@dataclass(frozen=True)
class AugPolyCandidate:
    poly: MultiPoly
    basis: tuple[MultiPoly, ...]
    principal: bool
    warnings: tuple[str, ...] = ()


def clear_denominators(p: MultiPoly) -> MultiPoly:
    """Multiply by the smallest monomial making every exponent nonnegative."""
    shift = [0] * len(p.gens)
    for exps in p.terms:
        for i, e in enumerate(exps):
            shift[i] = max(shift[i], -e)
    return p.mul_monomial(shift) if any(shift) else p


def squarefree_part(g: MultiPoly) -> MultiPoly:
    """g / gcd(g, dg/dx_1, ..., dg/dx_n), made primitive with positive leading coefficient."""
    h = g
    for v in sorted(g.variables(), key=g.gens.index):
        h = mpoly_gcd(h, g.partial(v))
        if h.is_constant():
            break
    if h.is_constant():
        out = g
    else:
        out = mpoly_exact_div(g, h)
    return primitive_integer(out)


def primitive_integer(p: MultiPoly) -> MultiPoly:
    """Scale to coprime integer coefficients with positive leading (lex) coefficient."""
    if p.is_zero():
        return p
    cs = list(p.terms.values())
    den = math.lcm(*(Fraction(c).denominator for c in cs))
    num = math.gcd(*(int(Fraction(c) * den) for c in cs))
    scale = Fraction(den, num)
    lead = p.sorted_terms()[0][1]
    if lead < 0:
        scale = -scale
    return p.scale(scale)


def augpoly_from_dga(dga: DGA, timeout: float | None = DEFAULT_TIMEOUT) -> AugPolyCandidate:
    """Eliminate chords from the degree-1 differentials, saturating by lambda*mu*Q."""
    deg1 = dga.chords(1)
    if not deg1:
        raise ValueError(f"DGA {dga.name!r} has no degree-1 differentials")
    chords = dga.chords(0)
    w = _fresh(dga.symtab)
    # chords first (eliminated), then w, then the ring variables
    work = tuple(chords) + (w,) + RING_VARS
    gens = [clear_denominators(dga.d(b)).with_gens(work) for b in deg1]
    lmq = MultiPoly.var("lambda", work) * MultiPoly.var("mu", work) * MultiPoly.var("Q", work)
    rab = MultiPoly.var(w, work) * lmq - 1
    elim = eliminate(Ideal.of(gens + [rab], work), list(chords) + [w], timeout)
    if elim.is_zero():
        raise ZeroEliminationIdeal("elimination ideal is zero: the augmentation polynomial may be 0")
    basis = tuple(primitive_integer(g) for g in elim.generators)
    if len(basis) == 1:
        return AugPolyCandidate(squarefree_part(basis[0]), basis, True)
    best = min(basis, key=lambda g: (g.total_degree(), len(g.terms), str(g)))
    return AugPolyCandidate(best, basis, False,
                            (f"elimination ideal is non-principal ({len(basis)} generators);"
                             " returning the lowest-degree member",))


def divides(d: MultiPoly, p: MultiPoly) -> tuple[bool, MultiPoly]:
    """Exact multivariate division test; returns (zero remainder?, quotient)."""
    d = d.with_gens(p.gens)
    key = LEX.key()
    dp = _Poly(dict(d.terms), key)
    f = dict(p.terms)
    q: dict = {}
    rem: dict = {}
    while f:
        lt = max(f, key=key)
        c = f[lt]
        if _divides(dp.lm, lt):
            shift = tuple(a - b for a, b in zip(lt, dp.lm))
            factor = c / dp.lc
            q[shift] = q.get(shift, 0) + factor
            for e, gc in dp.terms.items():
                ne = tuple(a + b for a, b in zip(e, shift))
                v = f.get(ne, 0) - factor * gc
                if v == 0:
                    f.pop(ne, None)
                else:
                    f[ne] = v
        else:
            rem[lt] = c
            del f[lt]
    return (not rem), MultiPoly(p.gens, _clean(q), check=False)
