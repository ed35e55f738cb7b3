"""K-type multiplicities of X^+ and X^- for (2^{2p} 1^{2q}) next to the multiplicity-free models.

    python scripts/ktype_scan.py --p 1 --q 1 --bound 6
"""
import argparse

from orbitquant.ktypes import closed_form, decompose
from orbitquant.orbits import family_partition
from orbitquant.vchar import unipotent_pair


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=int, default=1)
    ap.add_argument("--q", type=int, default=1)
    ap.add_argument("--bound", type=int, default=6)
    args = ap.parse_args()
    P = family_partition(args.p, args.q)
    xp, xm = unipotent_pair(P)
    plus, minus = decompose(xp, args.bound), decompose(xm, args.bound)
    for mu in sorted(plus.mults, reverse=True):
        a, b = plus.mults[mu], minus.mults[mu]
        if a or b:
            flag = "" if (a, b) == (closed_form(P, mu), closed_form(P, mu, "cover-extra")) else "  MISMATCH"
            print(f"V{mu}  X+ {a}  X- {b}{flag}")


if __name__ == "__main__":
    main()
