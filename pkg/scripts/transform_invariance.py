"""Extract Delta from framing/splitting transforms of an augmentation polynomial over a grid."""

import argparse
import itertools
from collections import Counter
from dataclasses import dataclass

from kchalex.dga import builtin_dga
from kchalex.extract import AugPoly, alexander_from_augpoly, framing_transform, splitting_transform


@dataclass
class GridConfig:
    knot: str = "rh_trefoil"
    radius: int = 3


def run(cfg: GridConfig) -> Counter:
    aug = AugPoly.parse(builtin_dga(cfg.knot).metadata["augmentation_polynomial"]).poly
    seen = Counter()
    span = range(-cfg.radius, cfg.radius + 1)
    for k, l, m in itertools.product(span, repeat=3):
        p = splitting_transform(framing_transform(aug, k), l, m)
        seen[str(alexander_from_augpoly(AugPoly(p)).delta)] += 1
    return seen


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--knot", default="rh_trefoil")
    ap.add_argument("--radius", type=int, default=3)
    a = ap.parse_args()
    for delta, n in run(GridConfig(a.knot, a.radius)).items():
        print(f"{n:4d}  {delta}")
