"""Tabulate maximal terms of X^+, X^- and R_e for (2^{2p} 1^{2q}) up to a given rank.

    python scripts/gamma_table.py --max-rank 6
"""
import argparse

from orbitquant.orbits import family_partition, lambda_of
from orbitquant.vogan import family_range, gamma, theorem_c_closed_form


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-rank", type=int, default=5)
    args = ap.parse_args()
    print(f"{'orbit':<22}{'2 lambda_O':<20}{'gamma(X+)':<20}{'closed form':<20}{'gamma(X-)':<20}verdicts")
    for p, q in family_range(args.max_rank):
        P = family_partition(p, q)
        plus, minus, cover = (gamma(P, t) for t in ("plus", "minus", "cover"))
        print(f"{str(P):<22}{str(lambda_of(P).h_dual):<20}{str(plus.gamma):<20}"
              f"{str(theorem_c_closed_form(p, q)):<20}{str(minus.gamma):<20}"
              f"{plus.verdict}/{minus.verdict}/{cover.verdict}")


if __name__ == "__main__":
    main()
