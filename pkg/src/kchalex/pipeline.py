"""End-to-end routes from a knot's data to its Alexander polynomial."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra.unipoly import UniPoly
from .augment import (BRANCH_M, AugFamily, AugmentationError, AugmentationReport, Cycle,
                      find_generating_cycles, solve_augmentation_family, verify_augmentation)
from .dga import DGA, builtin_dga
from .extract import AlexReport, AugPoly, ExtractionError, alexander_from_augpoly, alexander_from_derivatives
from .oracle import alexander_from_braid, parse_braid


class AugmentationRejected(AugmentationError):
    def __init__(self, report: AugmentationReport):
        self.report = report
        super().__init__(f"augmentation fails on {', '.join(report.failures)}")


class RouteDisagreement(ExtractionError):
    def __init__(self, candidates: dict):
        self.candidates = candidates
        listing = "; ".join(f"{k}: {v}" for k, v in candidates.items())
        super().__init__(f"routes disagree: {listing}")


class NoUsableCycle(ExtractionError):
    pass


@dataclass
class DGAResult:
    family: AugFamily
    cycles: list[Cycle]
    reports: list[tuple[int, AlexReport]] = field(default_factory=list)

    @property
    def delta(self) -> UniPoly:
        return self.reports[0][1].delta

    def to_json(self) -> dict:
        return {
            "family": self.family.to_document(),
            "cycles": [{"index": c.index, "usable": c.usable,
                        "f_x": str(c.f_x), "f_t": str(c.f_t),
                        "coords": {k: str(v) for k, v in c.coords.items()}} for c in self.cycles],
            "reports": [{"cycle": i, **r.to_json()} for i, r in self.reports],
            "delta": str(self.delta),
        }


def alexander_from_dga(dga: DGA, family: AugFamily | None = None) -> DGAResult:
    """F-route: branch-M family, usable kernel cycles, one report per cycle.

    With no family given the solver is used and its first family taken.
    Every usable cycle must give the same delta.
    """
    if family is None:
        families = solve_augmentation_family(dga, BRANCH_M)
        if not families:
            raise AugmentationError("no branch-M augmentation family over Q(mu)")
        family = families[0]
    else:
        if family.branch.tag != "M":
            raise AugmentationError("the F-route needs a branch-M family")
        rep = verify_augmentation(dga, family)
        if not rep.passed:
            raise AugmentationRejected(rep)
    cycles = find_generating_cycles(dga, family)
    usable = [c for c in cycles if c.usable]
    if not usable:
        raise NoUsableCycle("no usable cycle: f_x vanishes for every kernel generator")
    result = DGAResult(family, cycles)
    for c in usable:
        result.reports.append((c.index, alexander_from_derivatives(c.f_x, c.f_t, "F-route")))
    deltas = {f"cycle {i}": str(r.delta) for i, r in result.reports}
    if len(set(deltas.values())) != 1:
        raise RouteDisagreement(deltas)
    return result


@dataclass
class RouteCheck:
    knot: str
    deltas: dict

    @property
    def agree(self) -> bool:
        return len(set(self.deltas.values())) == 1

    def to_json(self) -> dict:
        return {"knot": self.knot, "deltas": self.deltas, "agree": self.agree}


def check_routes(knot: str) -> RouteCheck:
    """F-route, Aug-route and Burau on a built-in knot."""
    dga = builtin_dga(knot)
    deltas = {"F-route": str(alexander_from_dga(dga).delta)}
    meta = dga.metadata
    if "augmentation_polynomial" in meta:
        deltas["Aug-route"] = str(alexander_from_augpoly(AugPoly.parse(meta["augmentation_polynomial"])).delta)
    if "braid" in meta:
        deltas["Burau"] = str(alexander_from_braid(parse_braid(meta["braid"])).delta)
    return RouteCheck(knot, deltas)
