"""Coordinate bit growth of exact stacked realizations.

Prints, for each number of stacking steps, the mean and maximum bit length
of coordinate numerators/denominators over random programs.
"""

import argparse
import random
from dataclasses import dataclass

from koebe.exact_stack import build_stacked, coordinate_bits, random_program


@dataclass
class Config:
    max_steps: int = 25
    programs: int = 50
    seed: int = 0


def run(cfg: Config) -> list[tuple[int, float, int]]:
    gen = random.Random(cfg.seed)
    per_step: dict[int, list[int]] = {n: [] for n in range(1, cfg.max_steps + 1)}
    for _ in range(cfg.programs):
        prog = random_program(cfg.max_steps, gen)
        build_stacked(prog, on_step=lambda i, r: per_step[i + 1].append(coordinate_bits(r)))
    return [(n, sum(b) / len(b), max(b)) for n, b in per_step.items()]


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-steps", type=int, default=Config.max_steps)
    p.add_argument("--programs", type=int, default=Config.programs)
    p.add_argument("--seed", type=int, default=Config.seed)
    a = p.parse_args()
    rows = run(Config(a.max_steps, a.programs, a.seed))
    print(f"{'steps':>5} {'mean bits':>10} {'max bits':>9}")
    for n, mean, mx in rows:
        print(f"{n:>5} {mean:>10.1f} {mx:>9}")
    # worst case for comparison: always stack on the newest facet
    chain = [(0, 1, 2)] + [(0, 1, n) for n in range(4, 3 + a.max_steps)]
    print(f"chain program, {a.max_steps} steps: {coordinate_bits(build_stacked(chain))} bits")


if __name__ == "__main__":
    main()
