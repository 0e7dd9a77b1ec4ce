"""Run every route on a built-in knot and print the intermediate objects."""

import argparse
import json
from dataclasses import asdict, dataclass

from kchalex.augment import BRANCH_L, BRANCH_M, select_branch_l_cycles, solve_augmentation_family, trivial_family
from kchalex.dga import BUILTINS, builtin_dga
from kchalex.groebner import augpoly_from_dga
from kchalex.pipeline import alexander_from_dga, check_routes


@dataclass
class PipelineConfig:
    knot: str = "rh_trefoil"
    timeout: float = 60.0
    branch_l: bool = True


def main(cfg: PipelineConfig) -> dict:
    dga = builtin_dga(cfg.knot)
    out = {"config": asdict(cfg)}
    out["families"] = [f.to_document() for f in solve_augmentation_family(dga, BRANCH_M)]
    out["f_route"] = alexander_from_dga(dga).to_json()
    out["routes"] = check_routes(cfg.knot).to_json()
    if dga.chords(0):
        out["augpoly_candidate"] = str(augpoly_from_dga(dga, cfg.timeout).poly)
    if cfg.branch_l:
        sel = select_branch_l_cycles(dga, trivial_family(dga, BRANCH_L))
        out["branch_l"] = {
            "selected": [{"f_p": str(c.f_x), "f_t": str(c.f_t), "cycle": str(c)} for c in sel.selected],
            "excluded": [{"f_p": str(c.f_x), "f_t": str(c.f_t), "cycle": str(c)} for c in sel.excluded],
        }
    return out


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--knot", default="rh_trefoil", choices=BUILTINS)
    ap.add_argument("--timeout", type=float, default=60.0)
    ap.add_argument("--no-branch-l", action="store_true")
    a = ap.parse_args()
    print(json.dumps(main(PipelineConfig(a.knot, a.timeout, not a.no_branch_l)), indent=2, sort_keys=True))
