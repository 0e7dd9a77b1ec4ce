"""Random Novikov instances: factorization, det-tr identity, det D(0) and unimodular invariance."""

import argparse
import random
import time
from dataclasses import dataclass

from kchalex.algebra import matrix_det
from kchalex.novikov import (factorization_check, novikov_determinant, random_instance,
                             random_unimodular, trace_identity_check, unimodular_transform)


@dataclass
class SuiteConfig:
    instances: int = 100
    max_r: int = 3
    max_s: int = 3
    bound: int = 3
    order: int = 12
    seed: int = 0


def run(cfg: SuiteConfig) -> dict:
    rng = random.Random(cfg.seed)
    counts = {"factorization": 0, "trace": 0, "leading": 0, "unimodular": 0}
    t0 = time.perf_counter()
    for _ in range(cfg.instances):
        nov = random_instance(rng, cfg.max_r, cfg.max_s, cfg.bound)
        det = novikov_determinant(nov)
        counts["factorization"] += factorization_check(nov)
        counts["trace"] += trace_identity_check(nov.psiF, cfg.order)
        counts["leading"] += det.coeff(0) == (matrix_det(nov.d0) if nov.s else 1)
        P, Pinv = random_unimodular(rng, nov.r)
        A, _ = random_unimodular(rng, nov.s)
        B, _ = random_unimodular(rng, nov.s)
        moved = novikov_determinant(unimodular_transform(nov, P, Pinv, A, B))
        counts["unimodular"] += moved in (det, -det)
    return {"passed": counts, "of": cfg.instances, "seconds": round(time.perf_counter() - t0, 3)}


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--instances", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--order", type=int, default=12)
    a = ap.parse_args()
    print(run(SuiteConfig(instances=a.instances, seed=a.seed, order=a.order)))
