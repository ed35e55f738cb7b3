"""Exit criteria. All arithmetic is exact: every comparison is equality."""
import time

import pytest

from orbitquant.catalog import catalog_lookup
from orbitquant.ktypes import closed_form, decompose, weight_system, weyl_dimension
from orbitquant.orbits import collapse, family_partition, lambda_of, ls_dual, transpose
from orbitquant.vchar import mcgovern_character, r_e, r_x, unipotent_pair
from orbitquant.vogan import (
    family_range,
    gamma,
    parity_split_check,
    root_order_leq,
    support_maxima,
    theorem_c_closed_form,
    verify_achar_sommers,
)
from orbitquant.weight import Weight
from orbitquant.weyl import SubgroupSpec, arrangement, det_sign, enumerate_group, longest_element

from oracles import all_partitions, r_x_by_enumeration

SPHERICAL_DESK = [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1)]


def record(log, number, ok, detail):
    log.append(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
    print(log[-1])
    assert ok, detail


def test_c1_duality_anchors(acceptance_log):
    ok = ls_dual((2, 2, 1, 1)).parts == (5, 1, 1) and ls_dual((4, 4, 3, 3, 2, 2, 1, 1)).parts == (9, 5, 5, 1, 1)
    best = float("inf")
    for _ in range(20):
        t = time.perf_counter()
        ls_dual((4, 4, 3, 3, 2, 2, 1, 1))
        best = min(best, time.perf_counter() - t)
    record(acceptance_log, 1, ok and best < 1e-3, f"duals exact, best runtime {best * 1e6:.0f} us")


@pytest.mark.parametrize("p,q", SPHERICAL_DESK)
def test_c2_theorem_ab(acceptance_log, p, q):
    P = family_partition(p, q)
    xp, xm = unipotent_pair(P)
    t = time.perf_counter()
    plus = decompose(xp, 6)
    cover = decompose(xp + xm, 6)
    elapsed = time.perf_counter() - t
    bad = [mu for mu in plus.mults if plus.mults[mu] != closed_form(P, mu)]
    bad += [mu for mu in cover.mults
            if cover.mults[mu] != closed_form(P, mu) + closed_form(P, mu, "cover-extra")]
    record(acceptance_log, 2, not bad and elapsed < 300,
           f"(p,q)=({p},{q}) {len(plus.mults)} K-types scanned, mismatches {bad}, {elapsed:.1f}s")


@pytest.mark.parametrize("p,q", SPHERICAL_DESK)
def test_c3_mcgovern(acceptance_log, p, q):
    P = family_partition(p, q)
    dec = decompose(mcgovern_character(P), 6)
    bad = [mu for mu, m in dec.mults.items() if m != closed_form(P, mu)]
    record(acceptance_log, 3, not bad, f"(p,q)=({p},{q}) McGovern K-types, mismatches {bad}")


@pytest.mark.parametrize("n", [1, 2, 3])
def test_c3_denominator(acceptance_log, n):
    rho = Weight.of(*range(n, 0, -1))
    brute = r_x_by_enumeration(rho, SubgroupSpec((("C", n),)))
    ok = mcgovern_character((1,) * (2 * n)) == brute
    record(acceptance_log, 3, ok, f"zero orbit n={n}: McGovern product == Weyl denominator sum ({len(brute)} terms)")


@pytest.mark.parametrize("p,q", family_range(5))
def test_c4_theorem_c(acceptance_log, p, q):
    P = family_partition(p, q)
    cert = gamma(P, "plus")
    xp, _ = unipotent_pair(P)
    present = xp.coeff(lambda_of(P).h_dual) != 0
    ok = cert.gamma == theorem_c_closed_form(p, q) and cert.passed and present == (q % 2 == 1)
    record(acceptance_log, 4, ok, f"(p,q)=({p},{q}) gamma={cert.gamma}, 2lambda_O in X+: {present}")


def test_c4_parity_split(acceptance_log):
    bad = [(p, q) for p in range(1, 5) for q in range(5) if parity_split_check(p, q) != (q % 2 == 1)]
    record(acceptance_log, 4, not bad, f"parity split over 1<=p<=4, 0<=q<=4, disagreements {bad}")


@pytest.mark.parametrize("p,q", family_range(5))
def test_c5_theorem_d(acceptance_log, p, q):
    P = family_partition(p, q)
    chi = r_e(P)
    spec = catalog_lookup(P).spec("0")
    two_lambda = lambda_of(P).h_dual
    ok = support_maxima(chi) == [two_lambda] and chi.coeff(two_lambda) == det_sign(longest_element(spec))
    ok = ok and verify_achar_sommers(P).passed
    record(acceptance_log, 5, ok, f"(p,q)=({p},{q}) max R_e = {two_lambda}, coeff {chi.coeff(two_lambda)}")


def test_c6_example_52(acceptance_log):
    P = (4, 4, 3, 3, 2, 2, 1, 1)
    spec = catalog_lookup(P).spec("00")
    lam = arrangement(spec)
    t = time.perf_counter()
    count = sum(1 for _ in enumerate_group(spec))
    brute = r_x_by_enumeration(lam, spec)
    fast = r_x(lam, spec)
    maxima = support_maxima(brute)
    elapsed = time.perf_counter() - t
    expected = Weight.of(8, 6, 4, 4, 4, 2, 2, 2, 0, 0)
    ok = count == 73728 and brute == fast and maxima == [expected] == [lambda_of(P).h_dual]
    record(acceptance_log, 6, ok and elapsed < 10,
           f"{count} elements, maxima {[str(m) for m in maxima]}, {elapsed:.2f}s")


@pytest.mark.parametrize("p", [1, 2])
def test_c7_lemma_44(acceptance_log, p):
    spec = SubgroupSpec((("A", 2 * p),))
    a_sum = r_x_by_enumeration(arrangement(spec), spec)
    xp, _ = unipotent_pair(family_partition(p, 0))
    record(acceptance_log, 7, xp == a_sum, f"p={p}: X+ == S_{2 * p} alternating sum")


@pytest.mark.parametrize("p,q", SPHERICAL_DESK)
def test_c8_prop_33(acceptance_log, p, q):
    n = 2 * p + q
    xp, xm = unipotent_pair(family_partition(p, q))
    lowest = xm.coeff(Weight.of(*([1] * 2 * p + [0] * q)))
    below = [int(xm.coeff(Weight.of(*([1] * 2 * i + [0] * (n - 2 * i))))) for i in range(p)]
    zero = xp.coeff(Weight.zero(n))
    ok = lowest == 1 and all(c == 0 for c in below) and zero == 1
    record(acceptance_log, 8, ok, f"(p,q)=({p},{q}) X- lowest coeff {lowest}, below {below}, X+ at 0: {zero}")


def test_c9_property_suites(acceptance_log):
    parts = [p for total in range(1, 17) for p in all_partitions(total)]
    transpose_ok = all(transpose(transpose(p)).parts == p for p in parts)
    collapse_ok = True
    for p in parts:
        for kind in "BC":
            if sum(p) % 2 == (kind == "B"):
                c = collapse(p, kind)
                collapse_ok &= collapse(c, kind) == c
    elems = list(enumerate_group(SubgroupSpec.parse("C3")))
    det_ok = all(det_sign(u * v) == det_sign(u) * det_sign(v) for u in elems for v in elems[::7])
    catalog_ok = True
    for P in [family_partition(p, q) for p in range(1, 5) for q in range(5)] + [(4, 4, 3, 3, 2, 2, 1, 1)]:
        lam = sorted(lambda_of(P).lambda_O.twice)
        catalog_ok &= all(sorted(arrangement(s).twice) == lam for s in catalog_lookup(P).specs.values())
    import itertools
    freud_ok = all(
        sum(weight_system(mu).values()) == weyl_dimension(mu)
        for n in (1, 2, 3) for mu in itertools.combinations_with_replacement(range(4, -1, -1), n)
    )
    doms = list(itertools.combinations_with_replacement(range(3, -1, -1), 3))
    order_ok = all(root_order_leq(a, a) for a in doms)
    for a in doms:
        for b in doms:
            if a != b and root_order_leq(a, b):
                order_ok &= not root_order_leq(b, a)
                order_ok &= all(root_order_leq(a, c) for c in doms if root_order_leq(b, c))
    ok = transpose_ok and collapse_ok and det_ok and catalog_ok and freud_ok and order_ok
    record(acceptance_log, 9, ok,
           f"transpose {transpose_ok}, collapse {collapse_ok}, det {det_ok}, catalog {catalog_ok}, "
           f"freudenthal {freud_ok}, root order {order_ok}")
