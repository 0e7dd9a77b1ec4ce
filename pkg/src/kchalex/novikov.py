"""Novikov differential of a circle-valued Morse function and its identities.

    D(mu) = [[1 - mu*psiF, -mu*psiC],
             [eta,          d0     ]]

det D is the Alexander polynomial.  It factors as
det(1 - mu psiF) * det(d0 + mu eta (1 - mu psiF)^{-1} psiC), and
det(1 - mu psiF) = exp(-sum_n mu^n tr(psiF^n)/n) is the loop zeta function
times (1 - mu).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra.matrix import Matrix, matrix_det
from .algebra.series import TruncSeries, series_exp
from .algebra.unipoly import RatFunc, UniPoly, as_ratfunc
from .extract import MU, AlexReport, _UNKNOT_TERM, normalize_alexander


class NovikovError(ValueError):
    pass


def _int_matrix(rows, nrows: int, ncols: int, name: str) -> Matrix:
    if ncols == 0 and not rows:
        rows = [[] for _ in range(nrows)]  # "[]" stands for any n x 0 block
    if len(rows) != nrows or any(len(r) != ncols for r in rows):
        raise NovikovError(f"{name} must be {nrows}x{ncols}")
    for r in rows:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, (int, Fraction)) or Fraction(x).denominator != 1:
                raise NovikovError(f"{name} entries must be integers, got {x!r}")
    return Matrix(rows, ncols)


@dataclass(frozen=True)
class NovikovData:
    """Block data: psiF r x r, psiC r x s, eta s x r, d0 s x s."""

    psiF: Matrix
    psiC: Matrix
    eta: Matrix
    d0: Matrix

    @property
    def r(self) -> int:
        return self.psiF.nrows

    @property
    def s(self) -> int:
        return self.d0.nrows

    @classmethod
    def from_lists(cls, psiF, psiC, eta, d0) -> "NovikovData":
        r = len(psiF)
        s = len(d0)
        return cls(_int_matrix(psiF, r, r, "psiF"), _int_matrix(psiC, r, s, "psiC"),
                   _int_matrix(eta, s, r, "eta"), _int_matrix(d0, s, s, "d0"))

    def to_document(self) -> dict:
        def lists(m: Matrix):
            return [[int(x) for x in row] for row in m.rows]
        return {"psiF": lists(self.psiF), "psiC": lists(self.psiC),
                "eta": lists(self.eta), "d0": lists(self.d0)}


def parse_novikov(document: str | Mapping) -> NovikovData:
    doc = json.loads(document) if isinstance(document, str) else document
    if not isinstance(doc, Mapping):
        raise NovikovError("Novikov document must be an object")
    missing = [k for k in ("psiF", "psiC", "eta", "d0") if k not in doc]
    if missing:
        raise NovikovError(f"Novikov document missing {missing}")
    try:
        return NovikovData.from_lists(doc["psiF"], doc["psiC"], doc["eta"], doc["d0"])
    except TypeError as e:
        raise NovikovError(f"malformed matrix: {e}") from None


@dataclass(frozen=True)
class Orbit:
    sigma: int
    m: int
    d: int

    def __post_init__(self):
        if self.sigma not in (1, -1) or self.m < 1 or self.d < 1:
            raise NovikovError(f"bad orbit (sigma={self.sigma}, m={self.m}, d={self.d})")


def parse_orbits(document: str | Sequence) -> list[Orbit]:
    doc = json.loads(document) if isinstance(document, str) else document
    try:
        return [Orbit(int(s), int(m), int(d)) for s, m, d in doc]
    except (TypeError, ValueError) as e:
        raise NovikovError(f"orbit list must be [[sigma, m, d], ...]: {e}") from None


def _poly(c) -> UniPoly:
    return UniPoly([c])


def assemble_D(nov: NovikovData) -> Matrix:
    """The (r+s)x(r+s) Novikov matrix over Q[mu]."""
    r, s = nov.r, nov.s
    mu = UniPoly.x()
    rows = []
    for i in range(r):
        row = [(UniPoly([1 if i == j else 0]) - mu * nov.psiF[i, j]) for j in range(r)]
        row += [-mu * nov.psiC[i, j] for j in range(s)]
        rows.append(row)
    for i in range(s):
        rows.append([_poly(nov.eta[i, j]) for j in range(r)] + [_poly(nov.d0[i, j]) for j in range(s)])
    return Matrix(rows, r + s)


def novikov_determinant(nov: NovikovData) -> UniPoly:
    n = nov.r + nov.s
    if n == 0:
        return UniPoly([1])
    det = matrix_det(assemble_D(nov))
    return det if isinstance(det, UniPoly) else UniPoly([det])


def novikov_alexander(nov: NovikovData) -> AlexReport:
    """Normalized det D, with det D(0) in the report details."""
    raw = novikov_determinant(nov)
    if raw.is_zero():
        raise NovikovError("Novikov matrix is singular")
    delta = normalize_alexander(raw)
    R = MU * RatFunc(delta.derivative()) / RatFunc(delta) + _UNKNOT_TERM
    return AlexReport(delta, raw, "Novikov", R, raw.degree, {"det_D0": str(raw.coeff(0))})


def _one_minus_mu_psi(psiF: Matrix) -> Matrix:
    mu = UniPoly.x()
    r = psiF.nrows
    return Matrix([[UniPoly([1 if i == j else 0]) - mu * psiF[i, j] for j in range(r)]
                   for i in range(r)], r)


def det_one_minus_mu_psi(psiF: Matrix) -> UniPoly:
    if psiF.nrows == 0:
        return UniPoly([1])
    d = matrix_det(_one_minus_mu_psi(psiF))
    return d if isinstance(d, UniPoly) else UniPoly([d])


def zeta_from_traces(psiF: Matrix, order: int) -> TruncSeries:
    """exp(-sum_{n<N} mu^n tr(psiF^n)/n)."""
    if psiF.nrows != psiF.ncols:
        raise NovikovError("psiF must be square")
    coeffs = [Fraction(0)] * order
    power = Matrix.identity(psiF.nrows)
    for n in range(1, order):
        power = power @ psiF
        tr = sum((power[i, i] for i in range(psiF.nrows)), Fraction(0))
        coeffs[n] = -tr / n
    return series_exp(TruncSeries.from_coeffs(coeffs, order))


def zeta_from_orbits(orbits: Sequence[Orbit], order: int) -> TruncSeries:
    """exp(sum sigma/m * mu^d) over the listed orbits."""
    coeffs = [Fraction(0)] * order
    for o in orbits:
        if o.d < order:
            coeffs[o.d] += Fraction(o.sigma, o.m)
    return series_exp(TruncSeries.from_coeffs(coeffs, order))


def tau_adjugate(nov: NovikovData) -> RatFunc:
    """det(d0 + mu * eta * (1 - mu psiF)^{-1} * psiC) over Q(mu)."""
    r, s = nov.r, nov.s
    if s == 0:
        return RatFunc(UniPoly([1]))
    one = RatFunc(UniPoly([1]))
    if r == 0:
        m = nov.d0.map(lambda x: one * x)
    else:
        A = _one_minus_mu_psi(nov.psiF)
        detA = det_one_minus_mu_psi(nov.psiF)
        if detA.is_zero():
            raise NovikovError("1 - mu*psiF is singular")
        # adjugate entries: adj[i][j] = (-1)^{i+j} det(minor(j, i))
        adj = [[RatFunc((-1) ** (i + j) * _minor_det(A, j, i)) for j in range(r)] for i in range(r)]
        inv = Matrix([[a / RatFunc(detA) for a in row] for row in adj], r)
        eta = nov.eta.map(lambda x: one * x)
        psiC = nov.psiC.map(lambda x: one * x)
        m = nov.d0.map(lambda x: one * x) + (eta @ inv @ psiC).scale(MU)
    return as_ratfunc(matrix_det(m))


def _minor_det(A: Matrix, i: int, j: int) -> UniPoly:
    if A.nrows == 1:
        return UniPoly([1])
    d = matrix_det(A.minor(i, j))
    return d if isinstance(d, UniPoly) else UniPoly([d])


def factorization_check(nov: NovikovData) -> bool:
    """det D == det(1 - mu psiF) * tau as an exact rational identity."""
    lhs = RatFunc(novikov_determinant(nov))
    rhs = RatFunc(det_one_minus_mu_psi(nov.psiF)) * tau_adjugate(nov)
    return lhs == rhs


def trace_identity_check(psiF: Matrix, order: int = 12) -> bool:
    """zeta_from_traces agrees with the truncated polynomial det(1 - mu psiF)."""
    return zeta_from_traces(psiF, order) == TruncSeries.from_poly(det_one_minus_mu_psi(psiF), order)


# -- random instances and unimodular changes of basis ---------------------

def random_instance(rng, max_r: int = 3, max_s: int = 3, bound: int = 3) -> NovikovData:
    r = rng.randint(0, max_r)
    s = rng.randint(0, max_s)

    def mat(a, b):
        return [[rng.randint(-bound, bound) for _ in range(b)] for _ in range(a)]
    return NovikovData.from_lists(mat(r, r), mat(r, s), mat(s, r), mat(s, s))


def random_unimodular(rng, n: int, steps: int = 6) -> tuple[Matrix, Matrix]:
    """An integer matrix with determinant +-1 and its exact inverse."""
    P = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    Pinv = [row[:] for row in P]
    for _ in range(steps if n else 0):
        kind = rng.randrange(3) if n > 1 else 2
        if kind == 0:
            # add c * row j to row i; inverse subtracts column i times c from column j
            i, j = rng.sample(range(n), 2)
            c = rng.choice([-2, -1, 1, 2])
            P[i] = [a + c * b for a, b in zip(P[i], P[j])]
            for row in Pinv:
                row[j] -= c * row[i]
        elif kind == 1:
            i, j = rng.sample(range(n), 2)
            P[i], P[j] = P[j], P[i]
            for row in Pinv:
                row[i], row[j] = row[j], row[i]
        else:
            i = rng.randrange(n)
            P[i] = [-a for a in P[i]]
            for row in Pinv:
                row[i] = -row[i]
    return Matrix(P, n), Matrix(Pinv, n)


def unimodular_transform(nov: NovikovData, P: Matrix, Pinv: Matrix, A: Matrix, B: Matrix) -> NovikovData:
    """psiF -> P psiF P^-1, psiC -> P psiC B, eta -> A eta P^-1, d0 -> A d0 B."""
    return NovikovData(P @ nov.psiF @ Pinv, P @ nov.psiC @ B, A @ nov.eta @ Pinv, A @ nov.d0 @ B)
