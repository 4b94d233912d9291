#!/usr/bin/env python3
"""Power curves of the distribution-free peakedness test.

Two alternative families against the flat-center null pi = 2 at tail
areas (q, r) = (1/4, 3/8):

 * symmetric Beta(b, b): b = 1 IS the null (uniform), so its rejection
   rate should sit near the test level; smaller b means a deeper
   U-shape and more power,
 * half-half mixtures of t(1/2) and t(1/2)+delta: peaked at delta = 0,
   near-null in the middle, firmly bimodal for large delta — power dips
   and recovers as delta sweeps through the crossover.

250 replicates keep this quick; the documented operating points use 1000.
"""

import argparse

from qshape.distributions import Beta, shifted_t_mixture
from qshape.simulation import power_csv, power_study


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--reps", type=int, default=250)
    parser.add_argument("--n", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    beta_grid = [1.0, 0.75, 0.5, 1.0 / 3.0, 0.25]
    points = power_study(lambda b: Beta(b, b), beta_grid, n=args.n,
                         reps=args.reps, master_seed=args.seed)
    print(f"Beta(b, b), n = {args.n}, {args.reps} replicates "
          f"(x = b / (b + 1)):")
    print()
    print(power_csv(points, x_of_parameter=lambda b: b / (b + 1.0)), end="")
    print()

    tmix_grid = [0.0, 1.0, 1.7, 2.5, 3.0, 4.5, 6.0]
    points = power_study(lambda d: shifted_t_mixture(0.5, d), tmix_grid,
                         n=args.n, reps=args.reps, master_seed=args.seed)
    print(f"t(1/2) mixture at lag delta, n = {args.n}, {args.reps} "
          f"replicates:")
    print()
    print(power_csv(points), end="")
    print()
    print("The mixture curve is U-shaped in delta: the test sees the peaked")
    print("delta=0 shape and the split delta=6 shape, but the family passes")
    print("close to the null in between, where power bottoms out.")


if __name__ == "__main__":
    main()
