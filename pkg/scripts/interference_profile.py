#!/usr/bin/env python3
"""Print the two-slit momentum profile as a quick terminal plot.

Shows the full distribution against the classical mixture so the
interference fringes stand out.
"""

import sys

from algq.experiments import TwoSlitConfig, two_slit_distribution


def main() -> int:
    result = two_slit_distribution(TwoSlitConfig(), "both")
    peak = max(result.total.max(), result.classical_mixture.max())
    width = 48
    print(f"{'k':>5} {'total':>9} {'classical':>9}  profile (#=quantum, .=classical)")
    for i, k in enumerate(result.k_index):
        bar_q = int(round(width * result.total[i] / peak))
        bar_c = int(round(width * result.classical_mixture[i] / peak))
        line = ["."] * max(bar_q, bar_c)
        for j in range(bar_q):
            line[j] = "#"
        print(f"{k:>5} {result.total[i]:9.5f} {result.classical_mixture[i]:9.5f}  {''.join(line)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
