"""Univariate polynomials and rational functions over the rationals."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


class UniPoly:
    """Dense polynomial in one variable, coefficients stored in ascending degree.

    >>> p = UniPoly([1, -1, 1])
    >>> str(p)
    'mu^2 - mu + 1'
    >>> p(2)
    Fraction(3, 1)
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs: Iterable = (), var: str = "mu"):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.var = var

    @classmethod
    def monomial(cls, n: int, c=1, var: str = "mu") -> "UniPoly":
        return cls([0] * n + [c], var)

    @classmethod
    def constant(cls, c, var: str = "mu") -> "UniPoly":
        return cls([c], var)

    @classmethod
    def x(cls, var: str = "mu") -> "UniPoly":
        return cls([0, 1], var)

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, n: int) -> Fraction:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else Fraction(0)

    def ord0(self) -> int:
        """Multiplicity of the root at 0 (order of vanishing)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        raise ValueError("order at 0 of the zero polynomial")

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, (UniPoly, RatFunc)) else 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly([other], self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(i) + other.coeff(i) for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly([], self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly([1], self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (UniPoly, int, Fraction)):
            return RatFunc(self, other if isinstance(other, UniPoly) else UniPoly([other], self.var))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc(UniPoly([other], self.var), self)
        return NotImplemented

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lc = other.lc
        d = other.degree
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            f = c / lc
            q[k - d] = f
            for j, b in enumerate(other.coeffs):
                rem[k - d + j] -= f * b
        return UniPoly(q, self.var), UniPoly(rem[:d] if d > 0 else [], self.var)

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lc = self.lc
        return UniPoly([c / lc for c in self.coeffs], self.var)

    def content(self) -> Fraction:
        """Positive rational c with self/c primitive with integer coefficients."""
        if self.is_zero():
            return Fraction(0)
        den = math.lcm(*(c.denominator for c in self.coeffs))
        num = math.gcd(*(c.numerator * (den // c.denominator) for c in self.coeffs))
        return Fraction(num, den)

    def primitive(self) -> "UniPoly":
        if self.is_zero():
            return self
        c = self.content()
        return UniPoly([x / c for x in self.coeffs], self.var)

    def shift_down(self, k: int) -> "UniPoly":
        """Divide by var**k; the low coefficients must vanish."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ArithmeticError(f"{self} is not divisible by {self.var}^{k}")
        return UniPoly(self.coeffs[k:], self.var)

    def reversed(self) -> "UniPoly":
        """var**deg * p(1/var)."""
        return UniPoly(self.coeffs[::-1], self.var)

    def sqrt(self) -> "UniPoly | None":
        """Exact square root with positive leading coefficient, or None."""
        if self.is_zero():
            return self
        if self.degree % 2:
            return None
        lc = self.lc
        if lc < 0:
            return None
        rn, rd = math.isqrt(lc.numerator), math.isqrt(lc.denominator)
        if rn * rn != lc.numerator or rd * rd != lc.denominator:
            return None
        n = self.degree // 2
        root = [Fraction(0)] * (n + 1)
        root[n] = Fraction(rn, rd)
        # match coefficients of degree 2n-1 .. n from the top
        for k in range(n - 1, -1, -1):
            s = self.coeff(n + k)
            for i in range(k + 1, n):
                s -= root[i] * root[n + k - i]
            root[k] = s / (2 * root[n])
        r = UniPoly(root, self.var)
        return r if r * r == self else None

    # -- comparison / display -----------------------------------------

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        if isinstance(other, RatFunc):
            return other == self
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeff(0))
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({str(self)!r})"

    def __str__(self):
        from .multipoly import render_terms

        terms = [((i,), c) for i, c in enumerate(self.coeffs) if c != 0]
        terms.sort(reverse=True)
        return render_terms(terms, (self.var,))


def unipoly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd. Raises ValueError when both inputs are zero."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


class RatFunc:
    """Reduced quotient num/den of univariate polynomials.

    The denominator is kept monic, so equal functions have identical fields.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var: str | None = None):
        if not isinstance(num, UniPoly):
            num = UniPoly([num], var or (den.var if isinstance(den, UniPoly) else "mu"))
        if den is None:
            den = UniPoly([1], num.var)
        elif not isinstance(den, UniPoly):
            den = UniPoly([den], num.var)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num = UniPoly([], num.var)
            self.den = UniPoly([1], num.var)
            return
        if den.degree > 0:
            g = unipoly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lc = den.lc
        if lc != 1:
            num = UniPoly([c / lc for c in num.coeffs], num.var)
            den = UniPoly([c / lc for c in den.coeffs], den.var)
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num: UniPoly, den: UniPoly) -> "RatFunc":
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def x(cls, var: str = "mu") -> "RatFunc":
        return cls(UniPoly.x(var))

    @property
    def var(self) -> str:
        return self.num.var

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.coeff(0)

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, UniPoly):
            return RatFunc._raw(other, UniPoly([1], other.var))
        if isinstance(other, (int, Fraction)):
            return RatFunc._raw(UniPoly([other], self.var), UniPoly([1], self.var))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RatFunc(UniPoly([], self.var))
            return RatFunc._raw(self.num * other, self.den)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._raw(self.num ** n, self.den ** n)

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole of {self} at {x}")
        return self.num(x) / d

    def derivative(self) -> "RatFunc":
        return RatFunc(self.num.derivative() * self.den - self.num * self.den.derivative(),
                       self.den * self.den)

    def at_infinity(self) -> Fraction | None:
        """Limit at infinity, or None when it is infinite."""
        if self.num.degree > self.den.degree:
            return None
        if self.num.degree < self.den.degree:
            return Fraction(0)
        return self.num.lc / self.den.lc

    def sqrt(self) -> "RatFunc | None":
        """Exact square root in Q(var), or None when there is none."""
        if self.is_zero():
            return self
        lc = self.num.lc
        sign = 1 if lc > 0 else -1
        if sign < 0:
            return None
        rn = self.num.sqrt()
        rd = self.den.sqrt()
        if rn is None or rd is None:
            return None
        return RatFunc(rn, rd)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.den.degree == 0:
            return hash(self.num)
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({str(self)!r})"

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        num = str(self.num)
        den = str(self.den)
        if _needs_parens(self.num):
            num = f"({num})"
        if _needs_parens(self.den):
            den = f"({den})"
        return f"{num}/{den}"


def _needs_parens(p: UniPoly) -> bool:
    nonzero = [c for c in p.coeffs if c != 0]
    if len(nonzero) != 1:
        return True
    c = nonzero[0]
    # bare monomial with unit coefficient renders as "mu^k" or a plain integer
    return not (c == 1 or (p.degree == 0 and c.denominator == 1 and c > 0))


def as_ratfunc(x, var: str = "mu") -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, UniPoly):
        return RatFunc(x)
    return RatFunc(UniPoly([x], var))

