"""Maximal term of R_e for the Sp(20) orbit (4,4,3,3,2,2,1,1), with timings.

    python scripts/example52.py
"""
import json
import time

from orbitquant.catalog import catalog_lookup
from orbitquant.orbits import lambda_of
from orbitquant.vchar import r_x
from orbitquant.vogan import support_maxima, verify_achar_sommers
from orbitquant.weyl import arrangement

ORBIT = (4, 4, 3, 3, 2, 2, 1, 1)


def main():
    d = lambda_of(ORBIT)
    spec = catalog_lookup(ORBIT).spec("00")
    print(f"dual {d.dual}  lambda_O {d.lambda_O}  subgroup {spec} (order {spec.order()})")
    t = time.perf_counter()
    chi = r_x(arrangement(spec), spec)
    print(f"R_e: {len(chi)} terms in {time.perf_counter() - t:.3f}s; maxima {[str(w) for w in support_maxima(chi)]}")
    print(json.dumps(verify_achar_sommers(ORBIT).to_json(), indent=2))


if __name__ == "__main__":
    main()
