"""Truncated power series with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .unipoly import UniPoly


class SeriesDomainError(ValueError):
    pass


@dataclass(frozen=True)
class TruncSeries:
    """c_0 + c_1 x + ... + c_{N-1} x^{N-1}  (mod x^N)."""

    coeffs: tuple
    order: int
    var: str = "mu"

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("truncation order must be positive")
        cs = [Fraction(c) for c in self.coeffs][: self.order]
        cs += [Fraction(0)] * (self.order - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_poly(cls, p: UniPoly, order: int) -> "TruncSeries":
        return cls(p.coeffs[:order], order, p.var)

    @classmethod
    def from_coeffs(cls, cs: Iterable, order: int, var: str = "mu") -> "TruncSeries":
        return cls(tuple(cs), order, var)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def _check(self, other: "TruncSeries"):
        if self.order != other.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        return TruncSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.order, self.var)

    def __neg__(self):
        return TruncSeries(tuple(-a for a in self.coeffs), self.order, self.var)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncSeries(tuple(a * other for a in self.coeffs), self.order, self.var)
        self._check(other)
        n = self.order
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n - i):
                out[i + j] += a * other.coeffs[j]
        return TruncSeries(tuple(out), n, self.var)

    __rmul__ = __mul__

    def derivative_coeffs(self) -> list[Fraction]:
        return [k * c for k, c in enumerate(self.coeffs)]

    def to_poly(self) -> UniPoly:
        return UniPoly(self.coeffs, self.var)


def series_exp(f: TruncSeries) -> TruncSeries:
    """exp(f) for f(0) = 0, via n g_n = sum_k k f_k g_{n-k}."""
    if f[0] != 0:
        raise SeriesDomainError("exp needs a series with zero constant term")
    n = f.order
    g = [Fraction(0)] * n
    g[0] = Fraction(1)
    for m in range(1, n):
        s = sum((k * f[k] * g[m - k] for k in range(1, m + 1)), Fraction(0))
        g[m] = s / m
    return TruncSeries(tuple(g), n, f.var)


def series_log(g: TruncSeries) -> TruncSeries:
    """log(g) for g(0) = 1, via f' = g'/g."""
    if g[0] != 1:
        raise SeriesDomainError("log needs a series with constant term 1")
    n = g.order
    f = [Fraction(0)] * n
    for m in range(1, n):
        s = m * g[m] - sum((k * f[k] * g[m - k] for k in range(1, m)), Fraction(0))
        f[m] = s / m
    return TruncSeries(tuple(f), n, g.var)


def series_inverse(g: TruncSeries) -> TruncSeries:
    if g[0] == 0:
        raise SeriesDomainError("series with zero constant term is not invertible")
    n = g.order
    h = [Fraction(0)] * n
    h[0] = 1 / g[0]
    for m in range(1, n):
        h[m] = -sum((g[k] * h[m - k] for k in range(1, m + 1)), Fraction(0)) / g[0]
    return TruncSeries(tuple(h), n, g.var)
