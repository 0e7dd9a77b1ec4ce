"""Command-line interface.

Exit codes: 0 success, 2 input or validation error, 3 mathematically
inapplicable (degenerate branch, unusable cycles, unsolvable system),
4 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .algebra.matrix import matrix_det
from .augment import AugmentationError, EmptyKernel, UnsolvableAtDeskScale, parse_augfamily
from .dga import BUILTINS, DGAError, load_dga
from .extract import (AugPolyError, AugPoly, ExtractionError, alexander_from_augpoly, line_derivatives,
                      parse_augpoly, validate_augpoly)
from .groebner import (DEFAULT_TIMEOUT, GREVLEX, LEX, GroebnerTimeout, Ideal, LaurentExponents,
                       MonomialOrder, ZeroEliminationIdeal, augpoly_from_dga, buchberger, divides,
                       eliminate)
from .novikov import (NovikovError, det_one_minus_mu_psi, factorization_check, novikov_alexander,
                      novikov_determinant, parse_novikov, parse_orbits, trace_identity_check,
                      zeta_from_orbits, zeta_from_traces)
from .oracle import BraidError, alexander_from_braid, parse_braid
from .parser import ParseError, parse_expr
from .pipeline import AugmentationRejected, alexander_from_dga, check_routes

EXIT_OK, EXIT_INPUT, EXIT_INAPPLICABLE, EXIT_BUDGET = 0, 2, 3, 4


class CLIError(Exception):
    def __init__(self, msg: str, code: int, payload: dict | None = None):
        super().__init__(msg)
        self.code = code
        self.payload = payload


@dataclass
class RunConfig:
    subcommand: str
    input: str | None = None
    aug: str | None = None
    reference_aug: str | None = None
    orbits: str | None = None
    knot: str = "rh_trefoil"
    output: str | None = None
    json: bool = False
    timeout: float = DEFAULT_TIMEOUT
    order: int = 12
    verbosity: int = 0

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "RunConfig":
        return cls(ns.subcommand, getattr(ns, "input", None), getattr(ns, "aug", None),
                   getattr(ns, "reference_aug", None), getattr(ns, "orbits", None),
                   getattr(ns, "knot", "rh_trefoil"), ns.output, ns.json, ns.timeout, ns.order,
                   ns.verbose)

    def validate(self):
        if self.order < 1:
            raise CLIError("--order must be positive", EXIT_INPUT)
        if self.timeout is not None and self.timeout <= 0:
            raise CLIError("--timeout must be positive", EXIT_INPUT)
        for p in (self.aug, self.reference_aug, self.orbits):
            if p is not None and not Path(p).is_file():
                raise CLIError(f"no such file: {p}", EXIT_INPUT)
        if self.input is not None and not Path(self.input).is_file() \
                and not (self.subcommand in ("alex-dga", "augpoly") and _is_builtin(self.input)):
            raise CLIError(f"no such file: {self.input}", EXIT_INPUT)


def _is_builtin(name: str) -> bool:
    return name in BUILTINS or (name.startswith("builtin:") and name.split(":", 1)[1] in BUILTINS)


def _read(path: str) -> str:
    return Path(path).read_text()


def _need_input(cfg: RunConfig) -> str:
    if cfg.input is None:
        raise CLIError(f"{cfg.subcommand} needs --input", EXIT_INPUT)
    return cfg.input


def _load_augpoly(path: str) -> AugPoly:
    text = _read(path)
    try:
        return parse_augpoly(text)
    except AugPolyError:
        if text.lstrip().startswith("{"):
            raise
        return AugPoly.parse(text.strip())  # bare polynomial string


# -- subcommands ----------------------------------------------------------

def cmd_alexander_from_dga(cfg: RunConfig) -> tuple[dict, str]:
    dga = load_dga(_need_input(cfg))
    family = parse_augfamily(_read(cfg.aug)) if cfg.aug else None
    try:
        result = alexander_from_dga(dga, family)
    except AugmentationRejected as e:
        raise CLIError(str(e), EXIT_INPUT, {"verification": e.report.to_document()}) from None
    out = {"dga": dga.name, **result.to_json()}
    usable = sum(1 for c in result.cycles if c.usable)
    text = f"{dga.name}: delta = {result.delta}  ({usable} usable cycles agree)"
    return out, text


def cmd_alexander_from_augpoly(cfg: RunConfig) -> tuple[dict, str]:
    aug = _load_augpoly(_need_input(cfg))
    val = validate_augpoly(aug)
    fx, ft = line_derivatives(aug)
    rep = alexander_from_augpoly(aug)
    out = {"name": aug.name, "validation": val.to_document(),
           "f_x": str(fx), "f_t": str(ft), "report": rep.to_json(), "delta": str(rep.delta)}
    note = "" if val.passed else "  (warning: validation failed)"
    return out, f"{aug.name or 'aug'}: delta = {rep.delta}{note}"


def _parse_ideal(text: str) -> tuple[Ideal, MonomialOrder | list[str]]:
    """Ideal file: {"variables": [...], "generators": [...], "order": ...}.

    The order is "lex", "grevlex" or {"eliminate": [vars]}.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise CLIError(f"malformed JSON: {e}", EXIT_INPUT) from None
    if not isinstance(doc, dict) or not isinstance(doc.get("variables"), list) \
            or not isinstance(doc.get("generators"), list):
        raise CLIError("ideal file needs 'variables' and 'generators' lists", EXIT_INPUT)
    symtab = tuple(doc["variables"])
    gens = [parse_expr(g, symtab) for g in doc["generators"]]
    order = doc.get("order", "grevlex")
    if order == "lex":
        order = LEX
    elif order == "grevlex":
        order = GREVLEX
    elif isinstance(order, dict) and isinstance(order.get("eliminate"), list):
        order = list(order["eliminate"])
    else:
        raise CLIError(f"unknown order {order!r}", EXIT_INPUT)
    return Ideal.of(gens, symtab), order


def cmd_groebner(cfg: RunConfig) -> tuple[dict, str]:
    ideal, order = _parse_ideal(_read(_need_input(cfg)))
    if isinstance(order, list):
        elim = eliminate(ideal, order, cfg.timeout)
        basis = list(elim.generators)
        out = {"variables": list(elim.symtab), "order": {"eliminate": order}}
    else:
        basis = buchberger(ideal, order, cfg.timeout)
        out = {"variables": list(ideal.symtab), "order": order.kind}
    out["basis"] = [str(g) for g in basis]
    return out, "\n".join(out["basis"]) or "(zero ideal)"


def cmd_augpoly_from_dga(cfg: RunConfig) -> tuple[dict, str]:
    dga = load_dga(_need_input(cfg))
    cand = augpoly_from_dga(dga, cfg.timeout)
    out = {"dga": dga.name, "candidate": str(cand.poly), "principal": cand.principal,
           "basis": [str(g) for g in cand.basis], "warnings": list(cand.warnings)}
    text = f"{dga.name}: {cand.poly}"
    if cfg.reference_aug:
        ref = _load_augpoly(cfg.reference_aug)
        ok, q = divides(ref.poly.with_gens(cand.poly.gens), cand.poly)
        verdict = {"divisible": ok, "quotient": str(q) if ok else None,
                   "quotient_degree": q.total_degree() if ok else None}
        out["reference_check"] = verdict
        text += f"\nreference divides candidate: {ok}" + (f", quotient {q}" if ok else "")
    return out, text


def cmd_novikov(cfg: RunConfig) -> tuple[dict, str]:
    nov = parse_novikov(_read(_need_input(cfg)))
    det = novikov_determinant(nov)
    det_d0 = matrix_det(nov.d0) if nov.s else 1
    out = {
        "det": str(det),
        "det_D0": str(det.coeff(0)),
        "det_d0": str(det_d0),
        "leading_coefficient_check": det.coeff(0) == det_d0,
        "factorization_check": factorization_check(nov),
        "trace_identity_check": trace_identity_check(nov.psiF, cfg.order),
        "det_one_minus_mu_psiF": str(det_one_minus_mu_psi(nov.psiF)),
        "zeta_traces": [str(c) for c in zeta_from_traces(nov.psiF, cfg.order).coeffs],
        "order": cfg.order,
    }
    if cfg.orbits:
        out["zeta_orbits"] = [str(c) for c in zeta_from_orbits(parse_orbits(_read(cfg.orbits)),
                                                               cfg.order).coeffs]
    try:
        rep = novikov_alexander(nov)
        out["report"] = rep.to_json()
        out["delta"] = str(rep.delta)
    except (ExtractionError, NovikovError) as e:
        out["delta"] = None
        raise CLIError(str(e), EXIT_INAPPLICABLE, out) from None
    text = (f"det D = {det}; delta = {out['delta']}; factorization {out['factorization_check']}; "
            f"det-tr {out['trace_identity_check']}")
    return out, text


def cmd_burau(cfg: RunConfig) -> tuple[dict, str]:
    braid = parse_braid(_read(_need_input(cfg)))
    rep = alexander_from_braid(braid)
    return {"braid": braid.to_document(), "report": rep.to_json(), "delta": str(rep.delta)}, \
        f"delta = {rep.delta}"


def cmd_check(cfg: RunConfig) -> tuple[dict, str]:
    res = check_routes(cfg.knot)
    out = res.to_json()
    if not res.agree:
        raise CLIError(f"routes disagree on {cfg.knot}: {res.deltas}", EXIT_INAPPLICABLE, out)
    lines = [f"{k}: {v}" for k, v in res.deltas.items()]
    return out, "\n".join(lines + [f"{cfg.knot}: all routes agree"])


COMMANDS = {
    "alex-dga": (cmd_alexander_from_dga, "Alexander polynomial from a DGA (F-route)"),
    "alex-aug": (cmd_alexander_from_augpoly, "Alexander polynomial from an augmentation polynomial"),
    "groebner": (cmd_groebner, "reduced Groebner basis of an ideal file"),
    "augpoly": (cmd_augpoly_from_dga, "augmentation polynomial of a DGA by elimination"),
    "novikov": (cmd_novikov, "Novikov determinant and its identities"),
    "burau": (cmd_burau, "Alexander polynomial of a braid closure (reduced Burau)"),
    "check": (cmd_check, "cross-route agreement on a built-in knot"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", help="write the JSON report to this file")
    common.add_argument("--json", action="store_true", help="print JSON instead of a summary")
    common.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT,
                        help="Groebner budget in seconds (default %(default)s)")
    common.add_argument("--order", type=int, default=12, help="series truncation order (default 12)")
    common.add_argument("-v", "--verbose", action="count", default=0)

    p = argparse.ArgumentParser(prog="kchalex", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="subcommand", required=True)
    for name, (_, help_) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=help_)
        if name != "check":
            sp.add_argument("--input", required=True,
                            help="input file" + (" or built-in name" if name in ("alex-dga", "augpoly") else ""))
        if name == "alex-dga":
            sp.add_argument("--aug", help="augmentation family JSON (otherwise solved)")
        if name == "augpoly":
            sp.add_argument("--reference-aug", help="augmentation polynomial to test for divisibility")
        if name == "novikov":
            sp.add_argument("--orbits", help="orbit list JSON for the loop zeta function")
        if name == "check":
            sp.add_argument("--knot", default="rh_trefoil", choices=BUILTINS)
    return p


def _emit(cfg: RunConfig, payload: dict, text: str, stream):
    doc = json.dumps(payload, sort_keys=True, indent=2)
    if cfg.output:
        Path(cfg.output).write_text(doc + "\n")
    print(doc if cfg.json else text, file=stream)


def run(cfg: RunConfig) -> int:
    logging.basicConfig(level=logging.WARNING - 10 * cfg.verbosity, format="%(levelname)s %(message)s")
    handler = COMMANDS[cfg.subcommand][0]
    try:
        cfg.validate()
        payload, text = handler(cfg)
    except CLIError as e:
        if e.payload is not None and (cfg.json or cfg.output):
            _emit(cfg, {**e.payload, "error": str(e)}, "", sys.stdout)
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except GroebnerTimeout as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (UnsolvableAtDeskScale, EmptyKernel, ExtractionError, ZeroEliminationIdeal) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    except (DGAError, AugmentationError, AugPolyError, ParseError, NovikovError, BraidError,
            LaurentExponents, KeyError, OSError, json.JSONDecodeError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    _emit(cfg, payload, text, sys.stdout)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    return run(RunConfig.from_args(ns))


if __name__ == "__main__":
    sys.exit(main())
