"""Watch simulated joint frequencies converge on the analytic law.

Runs the rod-coupled simulation at doubling trial counts and reports the
worst per-cell deviation from the analytic distribution together with
the expected statistical scale 1/sqrt(n).

Usage:
    python scripts/convergence_check.py --epsilon 0.7 --theta 1.2 --seed 7
"""

import argparse
import math
import sys

from esphere import Direction, JointTestSpec, joint_distribution_analytic, simulate


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--epsilon", type=float, default=0.7, help="elastic half-length")
    parser.add_argument("--theta", type=float, default=1.2, help="relative angle in [0, pi]")
    parser.add_argument("--seed", type=int, default=7, help="simulation seed")
    parser.add_argument("--doublings", type=int, default=8, help="steps from 1000 trials up")
    args = parser.parse_args()

    u1 = Direction.from_angles(0.0)
    u2 = Direction.from_angles(args.theta)
    spec = JointTestSpec(u1=u1, u2=u2, epsilon=args.epsilon)
    analytic = joint_distribution_analytic(u1, u2, args.epsilon)
    print(f"analytic: {analytic.as_tuple()}")
    print(f"{'trials':>10}  {'worst |freq - p|':>16}  {'1/sqrt(n)':>10}")

    trials = 1000
    for _ in range(args.doublings):
        freq, _ = simulate(spec, trials=trials, seed=args.seed)
        worst = max(
            abs(got - want) for got, want in zip(freq.as_tuple(), analytic.as_tuple())
        )
        print(f"{trials:>10}  {worst:>16.6f}  {1.0 / math.sqrt(trials):>10.6f}")
        trials *= 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
