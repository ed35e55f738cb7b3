"""Named verification suites. Each returns a list of JSON-ready certificates with a ``passed`` flag."""
from .catalog import catalog_lookup
from .ktypes import closed_form, decompose
from .orbits import family_partition, lambda_of, validate
from .vchar import character, mcgovern_character, r_x, unipotent_pair
from .vogan import (
    family_range,
    gamma,
    parity_split_check,
    support_maxima,
    theorem_c_closed_form,
    verify_achar_sommers,
)
from .weight import Weight
from .weyl import SubgroupSpec, arrangement

SPHERICAL_DESK = [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1)]
EXAMPLE_52 = (4, 4, 3, 3, 2, 2, 1, 1)


def _mismatches(dec, expect):
    return [
        {"mu": [str(x) for x in mu], "got": m, "expected": expect(mu)}
        for mu, m in sorted(dec.mults.items())
        if m != expect(mu)
    ]


def theorem_b(pairs=None, bound=6, threads=1, catalog=None):
    """K-types of X^+, X^+ + X^- and McGovern's product against the multiplicity-free models."""
    certs = []
    for p, q in pairs or SPHERICAL_DESK:
        P = family_partition(p, q)
        xp, xm = unipotent_pair(P, catalog)
        mg = mcgovern_character(P)
        plain = lambda mu: closed_form(P, mu, "plain")
        both = lambda mu: closed_form(P, mu, "plain") + closed_form(P, mu, "cover-extra")
        bad_plus = _mismatches(decompose(xp, bound, threads), plain)
        bad_cover = _mismatches(decompose(xp + xm, bound, threads), both)
        bad_mg = _mismatches(decompose(mg, bound, threads), plain)
        sum_is_re = (xp + xm) == character(P, "Re", catalog)
        certs.append({
            "suite": "theoremB",
            "orbit": list(P.parts),
            "bound": bound,
            "plus_mismatches": bad_plus,
            "cover_mismatches": bad_cover,
            "mcgovern_mismatches": bad_mg,
            "plus_plus_minus_equals_Re": sum_is_re,
            "mcgovern_equals_plus": mg == xp,
            "passed": not (bad_plus or bad_cover or bad_mg) and sum_is_re,
        })
    return certs


def theorem_c(pairs=None, catalog=None):
    certs = []
    for p, q in pairs or family_range(5):
        P = family_partition(p, q)
        cert = gamma(P, "plus", catalog)
        xp, _ = unipotent_pair(P, catalog)
        top_in_plus = xp.coeff(lambda_of(P).h_dual) != 0
        d = cert.to_json()
        d.update(suite="theoremC", top_in_plus=top_in_plus,
                 closed_form=theorem_c_closed_form(p, q).strings(),
                 passed=cert.passed and top_in_plus == (q % 2 == 1))
        certs.append(d)
    return certs


def theorem_d(pairs=None, catalog=None):
    certs = []
    for p, q in pairs or family_range(5):
        cert = verify_achar_sommers(family_partition(p, q), catalog=catalog)
        d = cert.to_json()
        d.update(suite="theoremD", passed=cert.passed)
        certs.append(d)
    return certs


def example_52(catalog=None):
    entry = catalog_lookup(EXAMPLE_52, catalog)
    spec = entry.spec(entry.identity)
    cert = verify_achar_sommers(EXAMPLE_52, catalog=catalog)
    d = cert.to_json()
    d.update(suite="example52", group_order=spec.order(), passed=cert.passed)
    return [d]


def lemma_44(ps=(1, 2), catalog=None):
    """X^+ of (2^{2p}) against the alternating sum over the symmetric group S_{2p}."""
    certs = []
    for p in ps:
        P = family_partition(p, 0)
        xp, _ = unipotent_pair(P, catalog)
        spec = SubgroupSpec((("A", 2 * p),))
        a_sum = r_x(arrangement(spec), spec)
        maxima = support_maxima(xp)
        certs.append({
            "suite": "lemma44",
            "orbit": list(P.parts),
            "equal": xp == a_sum,
            "maxima": [w.strings() for w in maxima],
            "expected": theorem_c_closed_form(p, 0).strings(),
            "passed": xp == a_sum and maxima == [theorem_c_closed_form(p, 0)],
        })
    return certs


def prop_33(pairs=None, catalog=None):
    certs = []
    for p, q in pairs or SPHERICAL_DESK:
        P = family_partition(p, q)
        n = 2 * p + q
        xp, xm = unipotent_pair(P, catalog)
        lowest_minus = xm.coeff(Weight.of(*([1] * 2 * p + [0] * q)))
        lower = {i: str(xm.coeff(Weight.of(*([1] * 2 * i + [0] * (n - 2 * i))))) for i in range(p)}
        zero_plus = xp.coeff(Weight.zero(n))
        certs.append({
            "suite": "prop33",
            "orbit": list(P.parts),
            "minus_coeff_lowest": str(lowest_minus),
            "minus_coeff_below": lower,
            "plus_coeff_zero": str(zero_plus),
            "passed": lowest_minus == 1 and all(v == "0" for v in lower.values()) and zero_plus == 1,
        })
    return certs


def prop_42(pairs=None, catalog=None):
    """Sign-parity criterion on the grid 1<=p<=4, 0<=q<=4; direct character check when n <= 5."""
    certs = []
    grid = pairs or [(p, q) for p in range(1, 5) for q in range(0, 5)]
    for p, q in grid:
        split = parity_split_check(p, q)
        d = {"suite": "prop42", "p": p, "q": q, "parity_split": split, "q_odd": q % 2 == 1}
        ok = split == (q % 2 == 1)
        if 2 * p + q <= 5:
            P = family_partition(p, q)
            xp, _ = unipotent_pair(P, catalog)
            present = xp.coeff(lambda_of(P).h_dual) != 0
            d["top_in_plus"] = present
            ok = ok and present == split
        d["passed"] = ok
        certs.append(d)
    return certs


def denominator(max_rank=3):
    """McGovern's product for the zero orbit against the Weyl denominator sum over W(C_n)."""
    certs = []
    for n in range(1, max_rank + 1):
        P = validate((1,) * (2 * n), "C")
        spec = SubgroupSpec((("C", n),))
        lhs = mcgovern_character(P)
        rhs = r_x(arrangement(spec), spec)
        certs.append({"suite": "denominator", "n": n, "terms": len(rhs), "group_order": spec.order(),
                      "passed": lhs == rhs})
    return certs


SUITES = {
    "theoremB": theorem_b,
    "theoremC": theorem_c,
    "theoremD": theorem_d,
    "lemma44": lemma_44,
    "prop33": prop_33,
    "prop42": prop_42,
    "example52": example_52,
    "denominator": denominator,
}
