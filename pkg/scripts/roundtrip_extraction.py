"""Recover random Alexander-like polynomials from their logarithmic derivatives,
and compare Burau against recovery on random knot braids."""

import argparse
import random
from dataclasses import dataclass

from kchalex.algebra import RatFunc, UniPoly
from kchalex.extract import MU, normalize_alexander, recover_alexander
from kchalex.oracle import alexander_from_braid, random_knot_braid


@dataclass
class RoundTripConfig:
    samples: int = 100
    max_degree: int = 8
    braids: int = 20
    seed: int = 1


def random_delta(rng, max_degree):
    while True:
        cs = [rng.randint(-5, 5) for _ in range(rng.randint(1, max_degree + 1))]
        cs[0] += rng.choice([1, -1]) - sum(cs)
        if cs[0]:
            return UniPoly(cs)


def logderivative(delta):
    return MU * RatFunc(delta.derivative()) / RatFunc(delta) + MU / (1 - MU)


def run(cfg: RoundTripConfig) -> dict:
    rng = random.Random(cfg.seed)
    poly_ok = sum(recover_alexander(logderivative(d)).delta == normalize_alexander(d)
                  for d in (random_delta(rng, cfg.max_degree) for _ in range(cfg.samples)))
    braid_ok = 0
    for _ in range(cfg.braids):
        rep = alexander_from_braid(random_knot_braid(rng))
        braid_ok += recover_alexander(rep.integrand).delta == rep.delta
    return {"polynomials": f"{poly_ok}/{cfg.samples}", "braids": f"{braid_ok}/{cfg.braids}"}


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--seed", type=int, default=1)
    a = ap.parse_args()
    print(run(RoundTripConfig(samples=a.samples, seed=a.seed)))
