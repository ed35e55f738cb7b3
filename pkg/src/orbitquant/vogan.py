"""Root order on dominant weights, maximal terms, and the gamma certificates."""
from dataclasses import dataclass, field

from .catalog import catalog_lookup
from .errors import NotDominant, RankMismatch, WrongFamily
from .orbits import Partition, family_partition, lambda_of, spherical_family, validate
from .vchar import VERSION, character, r_x
from .weight import Weight, as_weight
from .weyl import SubgroupSpec, arrangement, det_sign, longest_element


def root_order_leq(mu, la):
    """True iff la - mu is a nonnegative integer combination of simple roots of C_n."""
    mu, la = as_weight(mu), as_weight(la)
    if mu.rank != la.rank:
        raise RankMismatch(f"rank {mu.rank} != rank {la.rank}")
    for w in (mu, la):
        if not (w.is_dominant() and w.is_integral()):
            raise NotDominant(f"{w} is not dominant integral")
    s = 0
    for a, b in zip(la.ints(), mu.ints()):
        s += a - b
        if s < 0:
            return False
    return s % 2 == 0


def _leq(mu, la):
    s = 0
    for a, b in zip(la, mu):
        s += a - b
        if s < 0:
            return False
    return s % 2 == 0


def support_maxima(chi):
    """Elements of the support not lying strictly below another support element."""
    supp = chi.support()
    for w in supp:
        if not (w.is_dominant() and w.is_integral()):
            raise NotDominant(f"{w} is not dominant integral")
    pts = [(w, w.ints()) for w in supp]
    maxima = [w for w, x in pts if not any(v != w and _leq(x, y) for v, y in pts)]
    return sorted(maxima, reverse=True)


def norm_check(chi, top):
    """The root-order maximum must also have strictly the largest norm in the support."""
    n = top.norm2()
    return all(w == top or w.norm2() < n for w in chi.support())


def theorem_c_closed_form(p, q):
    """Maximal term of R(O) for O = (2^{2p} 1^{2q})."""
    r, odd = divmod(q, 2)
    if odd:
        head = list(range(2 * p + 4 * r + 2, 2 * p - 1, -2))
        mid = [x for x in range(2 * p - 2, 0, -2) for _ in (0, 1)]
        return Weight.of(*(head + mid + [0]))
    head = list(range(2 * p + 4 * r, 2 * p + 1, -2))
    mid = [x for x in range(2 * p - 1, 0, -2) for _ in (0, 1)]
    return Weight.of(*(head + mid))


@dataclass
class GammaCertificate:
    orbit: Partition
    character_tag: str
    support_size: int
    maxima: list
    gamma: object  # Weight, or None when the maxima are incomparable
    expected: object  # Weight, or None when no closed form is known
    verdict: str
    norm_check: bool
    extra: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.verdict == "pass"

    def to_json(self):
        out = {
            "version": VERSION,
            "orbit": list(self.orbit.parts),
            "tag": self.character_tag,
            "support_size": self.support_size,
            "maxima": [w.strings() for w in self.maxima],
            "gamma": self.gamma.strings() if self.gamma is not None else "incomparable",
            "expected": self.expected.strings() if self.expected is not None else None,
            "verdict": self.verdict,
            "norm_check": self.norm_check,
        }
        out.update(self.extra)
        return out


def _certify(p, tag, chi, expected, extra=None):
    maxima = support_maxima(chi)
    gamma = maxima[0] if len(maxima) == 1 else None
    norm_ok = gamma is not None and norm_check(chi, gamma)
    if gamma is None or not norm_ok:
        verdict = "fail"
    elif expected is None:
        verdict = "open"
    else:
        verdict = "pass" if gamma == expected else "fail"
    return GammaCertificate(p, tag, len(chi), maxima, gamma, expected, verdict, norm_ok, extra or {})


def gamma(p, tag="plus", catalog=None):
    """Maximal term of X^+ (tag plus), X^- (minus) or R_e (cover), checked against its closed form.

    X^- has a known expectation only for even q (then 2 lambda_O lands there);
    otherwise the verdict is "open".
    """
    p = p if isinstance(p, Partition) else validate(tuple(p), "C")
    catalog_lookup(p, catalog)
    two_lambda = lambda_of(p).h_dual
    fam = spherical_family(p)
    if tag == "cover":
        expected = two_lambda
    elif fam is None:
        raise WrongFamily(f"{p}: gamma({tag}) is only available for (2^(2p) 1^(2q))")
    elif tag == "plus":
        expected = theorem_c_closed_form(*fam)
    elif tag == "minus":
        expected = two_lambda if fam[1] % 2 == 0 else None
    else:
        raise ValueError(f"unknown tag {tag!r}")
    chi = character(p, "Re" if tag == "cover" else tag, catalog)
    return _certify(p, tag, chi, expected)


def verify_achar_sommers(p, spec_override=None, catalog=None):
    """Maximal term of R_e must be 2 lambda_O, with coefficient det(w0) of the sigma_e subgroup."""
    p = p if isinstance(p, Partition) else validate(tuple(p), "C")
    if spec_override is None:
        entry = catalog_lookup(p, catalog)
        spec = entry.spec(entry.identity)
    else:
        spec = SubgroupSpec.parse(spec_override) if isinstance(spec_override, str) else spec_override
    desc = lambda_of(p)
    arr = arrangement(spec)
    if sorted(arr.twice) != sorted(desc.lambda_O.twice):
        raise ValueError(f"arrangement of {spec} is not a rearrangement of lambda_O = {desc.lambda_O}")
    chi = r_x(arr, spec)
    w0_sign = det_sign(longest_element(spec))
    coeff = chi.coeff(desc.h_dual)
    cert = _certify(p, "cover", chi, desc.h_dual, {"spec": str(spec), "w0_sign": w0_sign, "top_coeff": str(coeff)})
    if coeff != w0_sign:
        cert.verdict = "fail"
    return cert


def parity_split_check(p, q):
    """Whether the 2 lambda_O term survives in X^+ = (R_e + R_s)/2: the two w0 signs agree."""
    e = SubgroupSpec((("D", p), ("C", p + q)))
    s = SubgroupSpec((("D", p + q + 1), ("C", p - 1)))
    return det_sign(longest_element(e)) == det_sign(longest_element(s))


def family_range(max_rank):
    """All (p, q) with p >= 1 and 2p + q <= max_rank."""
    return [(p, q) for p in range(1, max_rank // 2 + 1) for q in range(0, max_rank - 2 * p + 1)]


__all__ = [
    "GammaCertificate",
    "family_partition",
    "family_range",
    "gamma",
    "norm_check",
    "parity_split_check",
    "root_order_leq",
    "support_maxima",
    "theorem_c_closed_form",
    "verify_achar_sommers",
]
