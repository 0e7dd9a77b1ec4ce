"""Sparse multivariate Laurent polynomials.

A ``MultiPoly`` is a map from exponent vectors to nonzero coefficients over
an ordered tuple of generator names.  Only the ring variables ``lambda``,
``mu`` and ``Q`` may carry negative exponents; every other generator (Reeb
chords, auxiliary Groebner variables) is polynomial.

Coefficients are normally ``Fraction``; after substituting rational
functions for some variables they become ``RatFunc``.  Both support the
field operations the code below needs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .unipoly import RatFunc, UniPoly

RING_VARS = ("lambda", "mu", "Q")


class SymtabMismatch(ValueError):
    pass


class SubstitutionPole(ZeroDivisionError):
    pass


def _is_zero(c) -> bool:
    return c == 0


def _fmt_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _fmt_monomial(exps, gens) -> str:
    parts = []
    for g, e in zip(gens, exps):
        if e == 0:
            continue
        parts.append(g if e == 1 else f"{g}^{e}")
    return "*".join(parts)


def render_terms(terms, gens) -> str:
    """Render (exps, coeff) pairs, already in display order."""
    if not terms:
        return "0"
    out = []
    for k, (exps, c) in enumerate(terms):
        mono = _fmt_monomial(exps, gens)
        if isinstance(c, RatFunc) and not c.is_constant():
            body = f"({c})"
            neg = False
        else:
            if isinstance(c, RatFunc):
                c = c.constant_value()
            neg = c < 0
            a = -c if neg else c
            if mono and a == 1:
                body = ""
            else:
                body = _fmt_coeff(a)
        piece = "*".join(x for x in (body, mono) if x)
        if k == 0:
            out.append(("-" if neg else "") + piece)
        else:
            out.append((" - " if neg else " + ") + piece)
    return "".join(out)


class MultiPoly:
    """Immutable sparse polynomial.

    >>> x = MultiPoly.var("lambda")
    >>> mu = MultiPoly.var("mu")
    >>> str(x * mu**-2 - x * mu**-3)
    'lambda*mu^-2 - lambda*mu^-3'
    """

    __slots__ = ("gens", "terms", "_hash")

    def __init__(self, gens: Iterable[str], terms: Mapping | None = None, *, check: bool = True):
        self.gens: tuple[str, ...] = tuple(gens)
        if terms is None:
            terms = {}
        if check:
            n = len(self.gens)
            clean = {}
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != n:
                    raise ValueError(f"exponent vector {exps} does not match {self.gens}")
                if isinstance(c, int):
                    c = Fraction(c)
                if _is_zero(c):
                    continue
                for g, e in zip(self.gens, exps):
                    if e < 0 and g not in RING_VARS:
                        raise ValueError(f"negative exponent on non-Laurent variable {g}")
                clean[exps] = c
            terms = clean
        self.terms: dict = dict(terms)
        self._hash = None

    # -- constructors --------------------------------------------------

    @classmethod
    def var(cls, name: str, gens: Iterable[str] | None = None) -> "MultiPoly":
        gens = tuple(gens) if gens is not None else (name,)
        if name not in gens:
            raise KeyError(f"{name} not in {gens}")
        exps = tuple(1 if g == name else 0 for g in gens)
        return cls(gens, {exps: Fraction(1)}, check=False)

    @classmethod
    def constant(cls, c, gens: Iterable[str] = ()) -> "MultiPoly":
        gens = tuple(gens)
        return cls(gens, {(0,) * len(gens): c})

    @classmethod
    def zero(cls, gens: Iterable[str] = ()) -> "MultiPoly":
        return cls(gens, {}, check=False)

    # -- structure -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * len(self.gens), Fraction(0))

    def sorted_terms(self) -> list:
        """Terms in canonical (descending lex) order."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def variables(self) -> set[str]:
        """Generators that actually occur."""
        used = set()
        for exps in self.terms:
            for g, e in zip(self.gens, exps):
                if e:
                    used.add(g)
        return used

    def degree_in(self, name: str) -> int:
        i = self.gens.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def min_degree_in(self, name: str) -> int:
        i = self.gens.index(name)
        return min((e[i] for e in self.terms), default=0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def has_negative_exponents(self) -> bool:
        return any(e < 0 for exps in self.terms for e in exps)

    def with_gens(self, gens: Iterable[str]) -> "MultiPoly":
        """Re-embed into another symtab containing every used generator."""
        gens = tuple(gens)
        if gens == self.gens:
            return self
        idx = {g: i for i, g in enumerate(gens)}
        for g in self.variables():
            if g not in idx:
                raise SymtabMismatch(f"variable {g} missing from target symtab {gens}")
        pos = [(idx[g], k) for k, g in enumerate(self.gens) if g in idx]
        terms = {}
        for exps, c in self.terms.items():
            new = [0] * len(gens)
            for i, k in pos:
                new[i] = exps[k]
            terms[tuple(new)] = c
        return MultiPoly(gens, terms, check=False)

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.gens != self.gens:
                raise SymtabMismatch(f"{self.gens} vs {other.gens}")
            return other
        if isinstance(other, (int, Fraction, RatFunc, UniPoly)):
            if isinstance(other, UniPoly):
                other = RatFunc(other)
            return MultiPoly.constant(other, self.gens)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for exps, c in o.terms.items():
            s = terms.get(exps)
            s = c if s is None else s + c
            if _is_zero(s):
                terms.pop(exps, None)
            else:
                terms[exps] = s
        return MultiPoly(self.gens, terms, check=False)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.gens, {e: -c for e, c in self.terms.items()}, check=False)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e)
                terms[e] = c1 * c2 if s is None else s + c1 * c2
        return MultiPoly(self.gens, {e: c for e, c in terms.items() if not _is_zero(c)}, check=False)

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        if _is_zero(c):
            return MultiPoly.zero(self.gens)
        return MultiPoly(self.gens, {e: v * c for e, v in self.terms.items()}, check=False)

    def mul_monomial(self, exps) -> "MultiPoly":
        exps = tuple(exps)
        return MultiPoly(self.gens, {tuple(a + b for a, b in zip(e, exps)): c
                                     for e, c in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (exps, c), = self.terms.items()
            return MultiPoly(self.gens, {tuple(e * n for e in exps): 1 / c ** (-n)})
        result = MultiPoly.constant(1, self.gens)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def partial(self, name: str) -> "MultiPoly":
        """Formal partial derivative, Laurent power rule included."""
        if name not in self.gens:
            raise KeyError(f"unknown variable {name!r}")
        i = self.gens.index(name)
        terms = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            new = list(exps)
            new[i] = e - 1
            terms[tuple(new)] = c * e
        return MultiPoly(self.gens, terms, check=False)

    def substitute(self, assignment: Mapping[str, object]) -> "MultiPoly":
        """Simultaneously replace generators by values.

        Values may be ``int``/``Fraction``, ``RatFunc``/``UniPoly`` (a new
        coefficient), or ``MultiPoly`` over a sub-symtab of ``self.gens``.
        The symtab is preserved; assigned variables simply stop occurring.
        """
        for name in assignment:
            if name not in self.gens:
                raise KeyError(f"unknown variable {name!r}")
        if not assignment:
            return self
        slots = []
        for k, g in enumerate(self.gens):
            if g in assignment:
                v = assignment[g]
                if isinstance(v, MultiPoly):
                    v = v.with_gens(self.gens)
                elif isinstance(v, UniPoly):
                    v = RatFunc(v)
                elif isinstance(v, int):
                    v = Fraction(v)
                slots.append((k, v))
        cache: dict = {}

        def power(k, v, e):
            key = (k, e)
            if key not in cache:
                if e < 0:
                    if isinstance(v, MultiPoly):
                        try:
                            cache[key] = v ** e
                        except ValueError:
                            raise SubstitutionPole(
                                f"{self.gens[k]} -> non-monomial with negative exponent") from None
                    else:
                        if _is_zero(v):
                            raise SubstitutionPole(f"{self.gens[k]} -> 0 with exponent {e}")
                        cache[key] = v ** e
                else:
                    cache[key] = v ** e
            return cache[key]

        result_terms: dict = {}
        poly_parts = []
        for exps, c in self.terms.items():
            coeff = c
            mono = list(exps)
            polyfactor = None
            for k, v in slots:
                e = exps[k]
                mono[k] = 0
                if e == 0:
                    continue
                pv = power(k, v, e)
                if isinstance(pv, MultiPoly):
                    polyfactor = pv if polyfactor is None else polyfactor * pv
                else:
                    coeff = coeff * pv
            if _is_zero(coeff):
                continue
            mono = tuple(mono)
            if polyfactor is None:
                s = result_terms.get(mono)
                result_terms[mono] = coeff if s is None else s + coeff
            else:
                poly_parts.append(polyfactor.mul_monomial(mono).scale(coeff))
        out = MultiPoly(self.gens, {e: c for e, c in result_terms.items() if not _is_zero(c)},
                        check=False)
        for p in poly_parts:
            out = out + p
        return out

    def evaluate(self, point: Mapping[str, object]):
        """Fully evaluate; returns the scalar coefficient."""
        missing = self.variables() - set(point)
        if missing:
            raise KeyError(f"no value for {sorted(missing)}")
        res = self.substitute({g: v for g, v in point.items() if g in self.gens})
        return res.constant_term()

    def restrict_to_ratfunc(self, values: Mapping[str, object]) -> RatFunc:
        """Substitute and return the (constant) result as a RatFunc."""
        r = self.substitute(values)
        if not r.is_constant():
            raise ValueError(f"{r} still depends on {sorted(r.variables())}")
        c = r.constant_term()
        if isinstance(c, RatFunc):
            return c
        return RatFunc(UniPoly([c]))

    # -- comparison / display -----------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            other = MultiPoly.constant(other, self.gens)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if other.gens != self.gens:
            try:
                other = other.with_gens(self.gens)
            except SymtabMismatch:
                return False
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.gens, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        return render_terms(self.sorted_terms(), self.gens)

    def __repr__(self):
        return f"MultiPoly({str(self)!r})"


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    if a.gens != b.gens:
        raise SymtabMismatch(f"{a.gens} vs {b.gens}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poly_partial(p: MultiPoly, var: str) -> MultiPoly:
    return p.partial(var)


def poly_substitute(p: MultiPoly, assignment: Mapping[str, object]) -> MultiPoly:
    return p.substitute(assignment)


def to_unipoly(p: MultiPoly, var: str) -> UniPoly:
    """View a polynomial in ``var`` alone as a UniPoly (nonnegative exponents)."""
    if p.variables() - {var}:
        raise ValueError(f"{p} involves more than {var}")
    i = p.gens.index(var) if var in p.gens else None
    coeffs: dict[int, Fraction] = {}
    for exps, c in p.terms.items():
        e = exps[i] if i is not None else 0
        if e < 0:
            raise ValueError(f"{p} has negative powers of {var}")
        coeffs[e] = c
    n = max(coeffs, default=-1)
    return UniPoly([coeffs.get(k, 0) for k in range(n + 1)], var)


def from_unipoly(u: UniPoly, gens: Iterable[str]) -> MultiPoly:
    gens = tuple(gens)
    i = gens.index(u.var)
    terms = {}
    for k, c in enumerate(u.coeffs):
        if c != 0:
            e = [0] * len(gens)
            e[i] = k
            terms[tuple(e)] = c
    return MultiPoly(gens, terms, check=False)


def ratfunc_from_laurent(p: MultiPoly, var: str) -> RatFunc:
    """Laurent polynomial in ``var`` (Fraction or RatFunc coefficients) as a RatFunc."""
    if p.variables() - {var}:
        raise ValueError(f"{p} involves more than {var}")
    if var not in p.gens:
        c = p.constant_term()
        return c if isinstance(c, RatFunc) else RatFunc(UniPoly([c], var))
    return p.substitute({var: RatFunc.x(var)}).restrict_to_ratfunc({})
