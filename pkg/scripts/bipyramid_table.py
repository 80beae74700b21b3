"""Degree predictions and contact cross ratios of the bipyramids B_k."""

import argparse
from dataclasses import dataclass

from koebe.families import bipyramid_realization
from koebe.invariants import bipyramid_alpha, springborn_degree_prediction, totient
from koebe.moebius import contact_cross_ratio


@dataclass
class Config:
    k_min: int = 4
    k_max: int = 24


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--k-min", type=int, default=Config.k_min)
    p.add_argument("--k-max", type=int, default=Config.k_max)
    a = p.parse_args()
    cfg = Config(a.k_min, a.k_max)
    print(f"{'k':>3} {'phi':>4} {'sigma':>8} {'kappa>=':>7} {'alpha':>18} {'measured - alpha':>17}")
    for k in range(cfg.k_min, cfg.k_max + 1):
        pred = springborn_degree_prediction(k)
        alpha = float(bipyramid_alpha(k))
        measured = contact_cross_ratio(bipyramid_realization(k), [(j, (j + 1) % k) for j in range(4)])
        sigma = str(pred.springborn) if pred.springborn else "/".join(map(str, pred.springborn_candidates))
        print(f"{k:>3} {totient(k):>4} {sigma:>8} {pred.koebe_lower:>7} {alpha:>18.15f} {abs(measured - alpha):>17.2e}")


if __name__ == "__main__":
    main()
