"""Augmentation families on the two canonical branches, linearized
differentials, generating cycles and the branch functions F and G.

Branch ``M`` pins lambda = Q = 1 and leaves mu free; branch ``L`` pins
mu = Q = 1 and leaves lambda free.  Augmentation values are rational
functions of the free parameter.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .algebra.matrix import Matrix, column_space_basis, matrix_kernel, matrix_rank
from .algebra.multipoly import MultiPoly
from .algebra.unipoly import RatFunc, UniPoly, unipoly_gcd
from .dga import DGA
from .groebner import LEX, groebner_dicts
from .parser import ParseError, parse_ratfunc


class AugmentationError(ValueError):
    pass


class UnsolvableAtDeskScale(AugmentationError):
    def __init__(self, detail: str):
        super().__init__(f"unsolvable at desk scale: {detail}")


class MissingDifferentials(AugmentationError):
    pass


class EmptyKernel(AugmentationError):
    pass


class BranchFunctionError(AugmentationError):
    pass


@dataclass(frozen=True)
class Branch:
    tag: str

    def __post_init__(self):
        if self.tag not in ("M", "L"):
            raise ValueError(f"branch must be 'M' or 'L', got {self.tag!r}")

    @property
    def param(self) -> str:
        return "mu" if self.tag == "M" else "lambda"

    @property
    def pinned(self) -> tuple[str, ...]:
        return ("lambda", "Q") if self.tag == "M" else ("mu", "Q")

    @property
    def symbolic(self) -> tuple[str, str]:
        """Ring variables kept symbolic in the branch function: (x-like, Q)."""
        return ("lambda", "Q") if self.tag == "M" else ("mu", "Q")


BRANCH_M = Branch("M")
BRANCH_L = Branch("L")


@dataclass(frozen=True)
class AugFamily:
    branch: Branch
    values: Mapping[str, RatFunc]

    def assignment(self) -> dict:
        """Full substitution: pinned ring vars, parameter and chord values."""
        a: dict = {v: 1 for v in self.branch.pinned}
        a[self.branch.param] = RatFunc.x(self.branch.param)
        a.update(self.values)
        return a

    def to_document(self) -> dict:
        return {"branch": self.branch.tag, "values": {k: str(v) for k, v in self.values.items()}}

    def __str__(self):
        inner = ", ".join(f"{k} = {v}" for k, v in self.values.items())
        return f"{self.branch.tag}{{{inner}}}"


def parse_augfamily(document: str | Mapping) -> AugFamily:
    doc = json.loads(document) if isinstance(document, str) else document
    if not isinstance(doc, Mapping) or "branch" not in doc or "values" not in doc:
        raise AugmentationError("augmentation document needs 'branch' and 'values'")
    try:
        branch = Branch(doc["branch"])
    except ValueError as e:
        raise AugmentationError(str(e)) from None
    if not isinstance(doc["values"], Mapping):
        raise AugmentationError("'values' must be an object")
    values = {}
    for k, v in doc["values"].items():
        try:
            values[k] = parse_ratfunc(v, branch.param)
        except ParseError as e:
            raise AugmentationError(f"value of {k}: {e}") from None
    return AugFamily(branch, values)


def trivial_family(dga: DGA, branch: Branch) -> AugFamily:
    """All degree-0 chords sent to 0."""
    return AugFamily(branch, {a: RatFunc(UniPoly([], branch.param)) for a in dga.chords(0)})


def _in_param(c, var: str) -> RatFunc:
    """Coerce a scalar to a RatFunc in the branch parameter."""
    if isinstance(c, RatFunc):
        if c.var == var:
            return c
        if not c.is_constant():
            raise AugmentationError(f"value {c} is not a function of {var}")
        c = c.constant_value()
    return RatFunc(UniPoly([c], var))


def _scalar(p: MultiPoly, var: str) -> RatFunc:
    return _in_param(p.restrict_to_ratfunc({}), var)


# -- verification ---------------------------------------------------------

@dataclass(frozen=True)
class AugmentationReport:
    residuals: Mapping[str, RatFunc]

    @property
    def passed(self) -> bool:
        return all(r.is_zero() for r in self.residuals.values())

    @property
    def failures(self) -> list[str]:
        return [k for k, r in self.residuals.items() if not r.is_zero()]

    def to_document(self) -> dict:
        return {"passed": self.passed,
                "residuals": {k: str(v) for k, v in self.residuals.items()}}


def _check_values(dga: DGA, fam: AugFamily):
    missing = [a for a in dga.chords(0) if a not in fam.values]
    if missing:
        raise AugmentationError(f"no augmentation value for {missing}")
    extra = [a for a in fam.values if a not in dga.chords(0)]
    if extra:
        raise AugmentationError(f"values given for non-degree-0 generators {extra}")


def verify_augmentation(dga: DGA, fam: AugFamily) -> AugmentationReport:
    """Residual of eps(d b) for every degree-1 generator b."""
    _check_values(dga, fam)
    assign = fam.assignment()
    var = fam.branch.param
    res = {b: _scalar(dga.d(b).substitute(assign), var) for b in dga.chords(1)}
    return AugmentationReport(res)


# -- solving --------------------------------------------------------------

def _roots_deg_le2(coeffs: list[RatFunc], var: str) -> list[RatFunc]:
    deg = len(coeffs) - 1
    if deg == 1:
        return [-coeffs[0] / coeffs[1]]
    if deg == 2:
        c0, c1, c2 = coeffs
        disc = c1 * c1 - 4 * c2 * c0
        s = disc.sqrt()
        if s is None:
            raise UnsolvableAtDeskScale(f"discriminant {disc} of the quadratic in {var} is not a square")
        r1 = (-c1 + s) / (2 * c2)
        r2 = (-c1 - s) / (2 * c2)
        return [r1] if r1 == r2 else [r1, r2]
    raise UnsolvableAtDeskScale(f"univariate equation of degree {deg} in {var}")


def _solve_system(polys: list[dict], chords: list[str], param: str) -> list[dict]:
    if not chords:
        return [{}] if all(not p for p in polys) else []
    n = len(chords)
    gb = groebner_dicts(polys, LEX.key())
    if not gb:
        raise UnsolvableAtDeskScale(f"no equations constrain {chords}")
    zero = (0,) * n
    if len(gb) == 1 and set(gb[0]) == {zero}:
        return []
    last = n - 1
    univariate = [g for g in gb if all(not any(e[:last]) for e in g)]
    if not univariate:
        raise UnsolvableAtDeskScale(f"no equation in {chords[last]} alone (positive-dimensional system)")
    g = min(univariate, key=lambda t: max(e[last] for e in t))
    deg = max(e[last] for e in g)
    coeffs = [_in_param(g.get(zero[:last] + (k,), 0), param) for k in range(deg + 1)]
    solutions = []
    for root in _roots_deg_le2(coeffs, chords[last]):
        reduced = []
        for p in gb:
            q: dict = {}
            for e, c in p.items():
                v = c * root ** e[last] if e[last] else c
                k = e[:last]
                s = q.get(k)
                q[k] = v if s is None else s + v
            reduced.append({k: v for k, v in q.items() if v != 0})
        for sub in _solve_system(reduced, chords[:last], param):
            sub = dict(sub)
            sub[chords[last]] = root
            solutions.append(sub)
    return solutions


def solve_augmentation_family(dga: DGA, branch: Branch) -> list[AugFamily]:
    """All families with values in Q(parameter) found by lex Groebner back-substitution.

    Raises UnsolvableAtDeskScale when a step needs more than a rational
    root of a linear or quadratic factor.
    """
    chords = dga.chords(0)
    param = branch.param
    assign = {v: 1 for v in branch.pinned}
    assign[param] = RatFunc.x(param)
    polys = []
    for b in dga.chords(1):
        p = dga.d(b).substitute(assign).with_gens(tuple(chords))
        if p.is_zero():
            continue
        polys.append({e: _in_param(c, param) for e, c in p.terms.items()})
    if not chords:
        return [AugFamily(branch, {})] if not polys else []
    sols = _solve_system(polys, chords, param)
    families = []
    for s in sols:
        fam = AugFamily(branch, {a: s[a] for a in chords})
        if verify_augmentation(dga, fam).passed:
            families.append(fam)
    families.sort(key=lambda f: [str(f.values[a]) for a in chords])
    return families


# -- linearization --------------------------------------------------------

def linearized_matrix(dga: DGA, fam: AugFamily, from_degree: int) -> Matrix:
    """Rows: chords of degree from_degree-1; columns: chords of degree from_degree."""
    if from_degree not in (1, 2):
        raise ValueError("from_degree must be 1 or 2")
    sources = dga.chords(from_degree)
    targets = dga.chords(from_degree - 1)
    missing = [s for s in sources if s not in dga.differentials]
    if missing:
        raise MissingDifferentials(f"no differentials for degree-{from_degree} generators {missing}")
    _check_values(dga, fam)
    assign = fam.assignment()
    rows = []
    for t in targets:
        rows.append([_scalar(dga.d(s).partial(t).substitute(assign), fam.branch.param)
                     for s in sources])
    return Matrix(rows, len(sources))


@dataclass(frozen=True)
class Cycle:
    coords: Mapping[str, RatFunc]
    index: int = 0
    usable: bool = True
    f_x: RatFunc | None = None
    f_t: RatFunc | None = None

    def __str__(self):
        return " + ".join(f"({v})*{k}" for k, v in self.coords.items() if not v.is_zero()) or "0"


@dataclass(frozen=True)
class BranchFunction:
    F: MultiPoly
    branch: Branch
    cycle: Cycle
    dga_name: str = ""


def compute_branch_function(dga: DGA, fam: AugFamily, y: Cycle) -> BranchFunction:
    """F = sum_j y_j * eps(d b_j), the non-pinned ring variables kept symbolic."""
    _check_values(dga, fam)
    br = fam.branch
    assign = {br.param: RatFunc.x(br.param)}
    assign.update(fam.values)
    F = MultiPoly.zero(dga.symtab)
    for b, coeff in y.coords.items():
        if coeff.is_zero():
            continue
        F = F + dga.d(b).substitute(assign).scale(coeff)
    at_one = F.substitute({v: 1 for v in br.symbolic})
    if not at_one.is_zero():
        raise BranchFunctionError(f"branch function does not vanish at the base line: {at_one}")
    return BranchFunction(F, br, y, dga.name)


def branch_derivatives(bf: BranchFunction) -> tuple[RatFunc, RatFunc]:
    """(f_x, f_t): the x-like and Q partials of F at the pinned point.

    On branch M these are d/dlambda and d/dQ at lambda = Q = 1; on branch L
    they are d/dmu and d/dQ at mu = Q = 1.
    """
    x_var, q_var = bf.branch.symbolic
    at = {x_var: 1, q_var: 1}
    param = bf.branch.param
    return (_scalar(bf.F.partial(x_var).substitute(at), param),
            _scalar(bf.F.partial(q_var).substitute(at), param))


def _primitive_vector(vec: list[RatFunc]) -> list[RatFunc]:
    """Scale a nonzero vector over Q(t) to coprime integer polynomial entries."""
    nz = [x for x in vec if not x.is_zero()]
    if not nz:
        return vec
    den = nz[0].den
    for x in nz[1:]:
        den = den * x.den.exact_div(unipoly_gcd(den, x.den))
    polys = [(x * RatFunc(den)).num for x in vec]
    g = None
    for p in polys:
        if not p.is_zero():
            g = p if g is None else unipoly_gcd(g, p)
    polys = [p.exact_div(g) for p in polys]
    cs = [c for p in polys for c in p.coeffs if c != 0]
    lcm = math.lcm(*(c.denominator for c in cs))
    gcd = math.gcd(*(int(c * lcm) for c in cs))
    scale = Fraction(lcm, gcd)
    lead = next(p for p in polys if not p.is_zero()).lc
    if lead < 0:
        scale = -scale
    return [RatFunc(p * scale) for p in polys]


def find_generating_cycles(dga: DGA, fam: AugFamily) -> list[Cycle]:
    """Kernel basis of the linearized degree-1 differential, tagged by usability.

    With degree-2 differentials present the kernel is reduced modulo the
    image of the degree-2 differential first.  A cycle is usable when its
    f_x is not identically zero.
    """
    deg1 = dga.chords(1)
    m1 = linearized_matrix(dga, fam, 1)
    one = RatFunc.x(fam.branch.param) ** 0
    basis = matrix_kernel(m1, like=one)
    if not basis:
        raise EmptyKernel("linearized differential has trivial kernel in degree 1")
    if dga.chords(2) and all(c in dga.differentials for c in dga.chords(2)):
        image = column_space_basis(linearized_matrix(dga, fam, 2))
        chosen = list(image)
        reps = []
        for v in basis:
            cols = chosen + [v]
            if matrix_rank(Matrix([list(r) for r in zip(*cols)], len(cols))) > len(chosen):
                chosen.append(v)
                reps.append(v)
        basis = reps
        if not basis:
            raise EmptyKernel("degree-1 linearized homology is zero")
    cycles = []
    for k, v in enumerate(basis):
        v = _primitive_vector(v)
        y = Cycle({b: v[j] for j, b in enumerate(deg1)}, k)
        fx, ft = branch_derivatives(compute_branch_function(dga, fam, y))
        cycles.append(Cycle(y.coords, k, not fx.is_zero(), fx, ft))
    return cycles


def branch_l_identity_holds(f_p: RatFunc, f_t: RatFunc) -> bool:
    """lambda * f_p == (lambda - 1) * f_t, exactly."""
    lam = RatFunc.x("lambda")
    return lam * f_p == (lam - 1) * f_t


@dataclass(frozen=True)
class BranchLSelection:
    selected: list[Cycle] = field(default_factory=list)
    excluded: list[Cycle] = field(default_factory=list)


def select_branch_l_cycles(dga: DGA, fam: AugFamily) -> BranchLSelection:
    """Split branch-L kernel cycles by whether they satisfy the lambda/Q identity."""
    if fam.branch.tag != "L":
        raise ValueError("branch-L selection needs a branch-L family")
    sel = BranchLSelection()
    for c in find_generating_cycles(dga, fam):
        (sel.selected if branch_l_identity_holds(c.f_x, c.f_t) else sel.excluded).append(c)
    return sel


def make_cycle(dga: DGA, fam: AugFamily, coords: Mapping[str, object]) -> Cycle:
    """Build a Cycle from explicit coordinates, checking it lies in the kernel.

    Coordinates may be RatFuncs or strings in the branch parameter; missing
    degree-1 generators get 0.
    """
    var = fam.branch.param
    unknown = [k for k in coords if k not in dga.chords(1)]
    if unknown:
        raise AugmentationError(f"cycle coordinates on non-degree-1 generators {unknown}")
    vec = {}
    for b in dga.chords(1):
        c = coords.get(b, 0)
        vec[b] = parse_ratfunc(c, var) if isinstance(c, str) else _in_param(c, var)
    m1 = linearized_matrix(dga, fam, 1)
    image = m1.apply([vec[b] for b in dga.chords(1)])
    if any(not x.is_zero() for x in image):
        raise AugmentationError("vector is not a cycle of the linearized differential")
    y = Cycle(vec)
    fx, ft = branch_derivatives(compute_branch_function(dga, fam, y))
    return Cycle(vec, 0, not fx.is_zero(), fx, ft)
