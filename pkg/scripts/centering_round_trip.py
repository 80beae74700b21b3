"""Boost family realizations at random and move them back to Springborn position.

Reports, per family, the worst congruence error against the reference
Springborn realization, the worst final edge barycenter and the Newton
iteration counts.
"""

import argparse
import time
from dataclasses import dataclass

import numpy as np

from koebe.centering import springbornize
from koebe.families import family
from koebe.geometry import congruent
from koebe.moebius import AdmissibilityError, apply_lorentz, boost_to_origin, rotation_lorentz

CASES = {
    "tetrahedron": ("tetrahedron", None, "tetrahedron"),
    "octahedron_koebe4": ("octahedron_koebe4", None, "octahedron_springborn"),
    "cube_springborn": ("cube_springborn", None, "cube_springborn"),
    "dodecahedron": ("dodecahedron", None, "dodecahedron"),
    "icosahedron": ("icosahedron", None, "icosahedron"),
    "bipyramid_7": ("bipyramid", 7, "bipyramid"),
}


@dataclass
class Config:
    trials: int = 20
    max_boost: float = 0.6
    seed: int = 0


def random_image(r, rng, max_boost):
    while True:
        a = rng.normal(size=3)
        a *= rng.uniform(0, max_boost) / np.linalg.norm(a)
        q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
        try:
            return apply_lorentz(r, rotation_lorentz(q) @ boost_to_origin(a))
        except AdmissibilityError:
            continue


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--trials", type=int, default=Config.trials)
    p.add_argument("--max-boost", type=float, default=Config.max_boost)
    p.add_argument("--seed", type=int, default=Config.seed)
    a = p.parse_args()
    cfg = Config(a.trials, a.max_boost, a.seed)
    rng = np.random.default_rng(cfg.seed)
    print(f"{'family':>20} {'congruence':>11} {'|beta|':>9} {'newton':>7} {'seconds':>8}")
    for label, (name, k, ref) in CASES.items():
        r, reference = family(name, k=k), family(ref, k=k)
        start = time.perf_counter()
        cong, beta, iters = 0.0, 0.0, []
        for _ in range(cfg.trials):
            out, rep = springbornize(random_image(r, rng, cfg.max_boost))
            cong = max(cong, congruent(out, reference).gram_error)
            beta = max(beta, rep.barycenter_norm)
            iters.append(len(rep.history))
        print(f"{label:>20} {cong:>11.2e} {beta:>9.2e} {max(iters):>7} {time.perf_counter() - start:>8.2f}")


if __name__ == "__main__":
    main()
