"""From branch derivatives (f_x, f_t) or an augmentation polynomial to the
Alexander polynomial.

The Alexander polynomial is recovered from the integrand R = -f_t/f_x by
inverting the logarithmic derivative

    R = mu * Delta'/Delta + mu/(1 - mu)

as a finite linear system over Q.  No antiderivatives are taken.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .algebra.matrix import Matrix, matrix_kernel
from .algebra.multipoly import RING_VARS, MultiPoly, ratfunc_from_laurent
from .algebra.unipoly import RatFunc, UniPoly
from .parser import ParseError, parse_expr

ROUTES = ("F-route", "Aug-route", "Burau", "Novikov")
INAPPLICABLE = "branch formula inapplicable; a different branch of V_K is required"

MU = RatFunc.x("mu")
_UNKNOT_TERM = MU / (1 - MU)


class ExtractionError(ValueError):
    pass


class UnusableCycle(ExtractionError):
    pass


class NotLogDerivative(ExtractionError):
    pass


class NoConsistentDelta(ExtractionError):
    pass


class NotAlexander(ExtractionError):
    pass


class DegenerateBranch(ExtractionError):
    def __init__(self, msg: str = INAPPLICABLE):
        super().__init__(msg)


class AugPolyError(ValueError):
    pass


def _mu(r: RatFunc) -> RatFunc:
    """Re-label a constant RatFunc into the variable mu."""
    if r.var == "mu":
        return r
    if not r.is_constant():
        raise ExtractionError(f"expected a function of mu, got {r}")
    return RatFunc(UniPoly([r.constant_value()], "mu"))


@dataclass(frozen=True)
class AlexReport:
    delta: UniPoly
    raw: UniPoly
    route: str
    integrand: RatFunc
    degree_at_infinity: int
    details: Mapping = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {
            "route": self.route,
            "delta": str(self.delta),
            "raw": str(self.raw),
            "integrand": {"num": str(self.integrand.num), "den": str(self.integrand.den)},
            "degree_at_infinity": self.degree_at_infinity,
        }

    def with_route(self, route: str, **details) -> "AlexReport":
        return AlexReport(self.delta, self.raw, route, self.integrand,
                          self.degree_at_infinity, {**self.details, **details})


def integrand(f_x: RatFunc, f_t: RatFunc) -> RatFunc:
    """R = -f_t/f_x, reduced."""
    f_x, f_t = _mu(f_x), _mu(f_t)
    if f_x.is_zero():
        if f_t.is_zero():
            raise UnusableCycle("unusable cycle (0/0)")
        raise UnusableCycle("unusable cycle: f_x vanishes identically")
    return -f_t / f_x


def normalize_alexander(raw: UniPoly) -> UniPoly:
    """Strip mu-powers, make primitive over Z and fix the sign so Delta(1) = 1."""
    if raw.is_zero():
        raise NotAlexander("not an Alexander polynomial: zero")
    p = raw.shift_down(raw.ord0()).primitive()
    v = p(1)
    if v not in (1, -1):
        raise NotAlexander(f"not an Alexander polynomial: value {v} at 1 after clearing content")
    return -p if v == -1 else p


def verify_logderivative(R: RatFunc, delta: UniPoly, shift: int = 0) -> bool:
    """Exact check of R == shift + mu*delta'/delta + mu/(1-mu)."""
    if delta.is_zero():
        raise ValueError("delta must be nonzero")
    R = _mu(R)
    d = RatFunc(delta)
    lhs = (R - shift - _UNKNOT_TERM) * d
    return lhs == MU * RatFunc(delta.derivative())


def recover_alexander(R: RatFunc, route: str = "F-route") -> AlexReport:
    """Invert the logarithmic derivative to get the canonical Delta."""
    R = _mu(R)
    S = R - _UNKNOT_TERM
    # mu^k factors of Delta show up as the constant k in S; remove it so the
    # polynomial part starts with a nonzero constant term.
    if S.den.coeff(0) == 0:
        raise NotLogDerivative("integrand is not a polynomial logarithmic derivative: pole at 0")
    s0 = S(0)
    if s0.denominator != 1:
        raise NotLogDerivative("integrand is not a polynomial logarithmic derivative: "
                               f"non-integer value {s0} at 0")
    shift = int(s0)
    at_inf = S.at_infinity()
    if at_inf is None or at_inf.denominator != 1 or at_inf < 0:
        raise NotLogDerivative("integrand is not a polynomial logarithmic derivative: "
                               f"value at infinity {at_inf}")
    lead = min(shift, 0)
    P = S - lead
    d = int(at_inf) - lead
    u, v = P.num, P.den
    # mu * Delta' * v - Delta * u = 0, linear in the d+1 coefficients of Delta
    cols = []
    for i in range(d + 1):
        mono = UniPoly.monomial(i)
        cols.append(UniPoly.monomial(i, i) * v - mono * u)
    nrows = max((c.degree for c in cols), default=-1) + 1
    if nrows == 0:
        kernel = [[Fraction(1)] * (d + 1)] if d == 0 else []
    else:
        m = Matrix([[c.coeff(r) for c in cols] for r in range(nrows)], d + 1)
        kernel = matrix_kernel(m, like=Fraction(1))
    if len(kernel) != 1:
        raise NoConsistentDelta(f"no consistent Delta: solution space has dimension {len(kernel)}")
    raw = UniPoly(kernel[0])
    if not verify_logderivative(R, raw, lead):
        raise NoConsistentDelta("no consistent Delta: logarithmic-derivative check failed")
    delta = normalize_alexander(raw)
    return AlexReport(delta, raw, route, R, d, {"mu_shift": shift})


def alexander_from_derivatives(f_x: RatFunc, f_t: RatFunc, route: str = "F-route") -> AlexReport:
    rep = recover_alexander(integrand(f_x, f_t), route)
    return rep.with_route(route, f_x=str(_mu(f_x)), f_t=str(_mu(f_t)))


# -- augmentation polynomials ---------------------------------------------

@dataclass(frozen=True)
class AugPoly:
    poly: MultiPoly
    name: str = ""

    def __post_init__(self):
        extra = self.poly.variables() - set(RING_VARS)
        if extra:
            raise AugPolyError(f"augmentation polynomial involves chord variables {sorted(extra)}")
        if self.poly.is_zero():
            raise AugPolyError("augmentation polynomial is identically zero")
        if self.poly.gens != RING_VARS:
            object.__setattr__(self, "poly", self.poly.with_gens(RING_VARS))

    @classmethod
    def parse(cls, text: str, name: str = "") -> "AugPoly":
        try:
            return cls(parse_expr(text, RING_VARS), name)
        except ParseError as e:
            raise AugPolyError(str(e)) from None

    def to_document(self) -> dict:
        return {"name": self.name, "polynomial": str(self.poly)}


def parse_augpoly(document: str | Mapping) -> AugPoly:
    """Read the ``{"name", "polynomial"}`` JSON form."""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as e:
            raise AugPolyError(f"malformed JSON: {e}") from None
    if not isinstance(document, Mapping) or not isinstance(document.get("polynomial"), str):
        raise AugPolyError("augmentation polynomial document needs a string 'polynomial'")
    return AugPoly.parse(document["polynomial"], str(document.get("name", "")))


def _on_line(p: MultiPoly) -> RatFunc:
    """Restrict to lambda = Q = 1 as a rational function of mu."""
    return ratfunc_from_laurent(p.substitute({"lambda": 1, "Q": 1}), "mu")


def line_derivatives(aug: AugPoly) -> tuple[RatFunc, RatFunc]:
    """(d/dlambda, d/dQ) of aug restricted to lambda = Q = 1."""
    return _on_line(aug.poly.partial("lambda")), _on_line(aug.poly.partial("Q"))


def detect_degenerate_branch(aug: AugPoly) -> bool:
    fx, ft = line_derivatives(aug)
    return fx.is_zero() and ft.is_zero()


def alexander_from_augpoly(aug: AugPoly) -> AlexReport:
    fx, ft = line_derivatives(aug)
    if fx.is_zero():
        if ft.is_zero():
            raise DegenerateBranch()
        raise UnusableCycle("d/dlambda of the augmentation polynomial vanishes on lambda = Q = 1")
    return alexander_from_derivatives(fx, ft, "Aug-route")


@dataclass(frozen=True)
class AugPolyValidation:
    vanishes_on_lambda_line: bool
    vanishes_on_mu_line: bool
    mu_partial_vanishes: bool

    @property
    def passed(self) -> bool:
        return self.vanishes_on_lambda_line and self.vanishes_on_mu_line and self.mu_partial_vanishes

    def to_document(self) -> dict:
        return {"aug(lambda,1,1) = 0": self.vanishes_on_lambda_line,
                "aug(1,mu,1) = 0": self.vanishes_on_mu_line,
                "d/dmu aug(1,mu,1) = 0": self.mu_partial_vanishes,
                "passed": self.passed}


def validate_augpoly(aug: AugPoly) -> AugPolyValidation:
    p = aug.poly
    return AugPolyValidation(
        p.substitute({"mu": 1, "Q": 1}).is_zero(),
        p.substitute({"lambda": 1, "Q": 1}).is_zero(),
        p.partial("mu").substitute({"lambda": 1, "Q": 1}).is_zero(),
    )


# -- variable transforms --------------------------------------------------

def _ring_only(p: MultiPoly) -> MultiPoly:
    extra = p.variables() - set(RING_VARS)
    if extra:
        raise AugPolyError(f"transform needs ring variables only, found {sorted(extra)}")
    return p.with_gens(RING_VARS)


def framing_transform(p: MultiPoly, k: int) -> MultiPoly:
    """(lambda, mu, Q) -> (lambda, lambda^k mu, Q)."""
    q = _ring_only(p)
    lam, mu = MultiPoly.var("lambda", RING_VARS), MultiPoly.var("mu", RING_VARS)
    return q.substitute({"mu": lam ** k * mu})


def splitting_transform(p: MultiPoly, l: int, m: int) -> MultiPoly:
    """(lambda, mu, Q) -> (lambda Q^l, mu Q^m, Q)."""
    q = _ring_only(p)
    lam, mu, Q = (MultiPoly.var(v, RING_VARS) for v in RING_VARS)
    return q.substitute({"lambda": lam * Q ** l, "mu": mu * Q ** m})


def mirror_normalized(delta: UniPoly) -> UniPoly:
    """Delta(1/mu) cleared of mu-powers and normalized."""
    return normalize_alexander(delta.reversed())
