"""Virtual characters: exact Q-combinations of Ind_T^G(lambda) for G = Sp(2n).

Ind_T^G(lambda) only depends on the W-orbit of lambda, so every key is stored
as its dominant representative.
"""
from collections import Counter, defaultdict
from fractions import Fraction

from .catalog import catalog_lookup
from .errors import InvalidInput, RankMismatch, WrongFamily
from .orbits import Partition, jm_h, spherical_family, validate
from .weight import Weight, as_weight, dominant_key
from .weyl import SignedPermutation, SubgroupSpec, arrangement, block_elements, det_sign

VERSION = "orbit-quant/1"


def dominant_rep(v):
    return as_weight(v).dominant()


class VirtualCharacter:
    """Immutable sparse map from dominant weights to nonzero rationals."""

    __slots__ = ("rank", "_terms")

    def __init__(self, rank, terms=()):
        acc = defaultdict(Fraction)
        items = terms.items() if hasattr(terms, "items") else terms
        for w, c in items:
            w = as_weight(w)
            if w.rank != rank:
                raise RankMismatch(f"weight {w} in a rank-{rank} character")
            acc[w.dominant()] += Fraction(c)
        self.rank = rank
        self._terms = {w: c for w, c in acc.items() if c != 0}

    @classmethod
    def _from_twice(cls, rank, counts):
        """Fast constructor from doubled dominant keys (no re-canonicalisation)."""
        obj = cls.__new__(cls)
        obj.rank = rank
        obj._terms = {Weight(k): Fraction(c) for k, c in counts.items() if c != 0}
        return obj

    @classmethod
    def ind(cls, *coords):
        w = Weight.of(*coords)
        return cls(w.rank, {w: 1})

    @property
    def terms(self):
        return dict(self._terms)

    def coeff(self, w):
        return self._terms.get(as_weight(w).dominant(), Fraction(0))

    def support(self):
        return list(self._terms)

    def is_integral(self):
        return all(w.is_integral() for w in self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def _check(self, other):
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} != rank {other.rank}")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, 0) + c
        return VirtualCharacter(self.rank, acc)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def scale(self, k):
        k = Fraction(k)
        return VirtualCharacter(self.rank, {w: k * c for w, c in self._terms.items()})

    def __mul__(self, k):
        return self.scale(k)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self):
        return hash((self.rank, frozenset(self._terms.items())))

    def sorted_terms(self):
        """Descending Euclidean norm, then lexicographic on the coordinates."""
        return sorted(self._terms.items(), key=lambda wc: (-wc[0].norm2(), wc[0].twice))

    def to_json(self):
        return [{"weight": w.strings(), "coeff": str(c)} for w, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, rank, rows):
        return cls(rank, {Weight.of(*r["weight"]): Fraction(r["coeff"]) for r in rows})

    def __repr__(self):
        body = " + ".join(f"{c}*Ind{w}" for w, c in self.sorted_terms()) or "0"
        return f"VirtualCharacter[{self.rank}]({body})"


def _block_sum(kind, lam):
    """Signed counts of the dominant keys of lam - w.lam over one factor group."""
    out = Counter()
    k = len(lam)
    if k == 0:
        out[()] = 1
        return out
    for win in block_elements(kind, k):
        moved = [lam[a - 1] if a > 0 else -lam[-a - 1] for a in win]
        key = dominant_key([x - y for x, y in zip(lam, moved)])
        out[key] += det_sign(SignedPermutation(win))
    return out


def _merge_keys(a, b):
    return tuple(sorted(a + b, reverse=True))


def r_x(lambda_arr, spec):
    """Alternating sum over the subgroup of Ind(lambda_arr - w.lambda_arr).

    The sum factorises over the blocks, so each block is summed on its own and
    the blocks are then combined (the group is never enumerated as a whole).
    """
    lam = as_weight(lambda_arr)
    if isinstance(spec, str):
        spec = SubgroupSpec.parse(spec)
    if lam.rank != spec.ambient_rank:
        raise RankMismatch(f"weight of rank {lam.rank} for subgroup {spec} of rank {spec.ambient_rank}")
    acc = Counter({(): 1})
    for (kind, k), off in zip(spec.factors, spec.offsets):
        block = _block_sum(kind, lam.twice[off:off + k])
        nxt = Counter()
        for ka, ca in acc.items():
            for kb, cb in block.items():
                nxt[_merge_keys(ka, kb)] += ca * cb
        acc = Counter({key: c for key, c in nxt.items() if c})
    return VirtualCharacter._from_twice(lam.rank, acc)


def _character_bit(pi, x):
    return -1 if sum(int(a) & int(b) for a, b in zip(pi, x)) % 2 else 1


def x_pi(entry, pi):
    """Average of pi(x) R_x over the component group (Z/2)^r.

    ``pi`` is a bit string naming the character x -> (-1)^{pi . x}; "0..0" is trivial.
    """
    r = entry.abar_rank
    if len(pi) != r or set(pi) - {"0", "1"}:
        raise InvalidInput(f"character {pi!r} of (Z/2)^{r} must be a {r}-bit string")
    specs = {x: entry.spec(x) for x in entry.elements()}
    n = entry.orbit.total // 2
    total = VirtualCharacter(n)
    for x, spec in specs.items():
        total = total + _character_bit(pi, x) * r_x(arrangement(spec), spec)
    return total.scale(Fraction(1, 2**r))


def _family_entry(p, catalog=None):
    p = p if isinstance(p, Partition) else validate(tuple(p), "C")
    if spherical_family(p) is None:
        raise WrongFamily(f"{p} is not of the form (2^(2p) 1^(2q)) with p >= 1")
    return catalog_lookup(p, catalog)


def unipotent_pair(p, catalog=None):
    """(X^+, X^-) for the orbit (2^{2p} 1^{2q})."""
    entry = _family_entry(p, catalog)
    return x_pi(entry, "0"), x_pi(entry, "1")


def r_e(p, catalog=None):
    entry = catalog_lookup(p, catalog)
    spec = entry.spec(entry.identity)
    return r_x(arrangement(spec), spec)


def r_s(p, catalog=None):
    entry = _family_entry(p, catalog)
    spec = entry.spec("1")
    return r_x(arrangement(spec), spec)


def positive_roots(n):
    """Positive roots of C_n as integer tuples: e_i - e_j, e_i + e_j (i < j), 2 e_i."""
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            a = [0] * n
            a[i], a[j] = 1, -1
            roots.append(tuple(a))
            b = [0] * n
            b[i], b[j] = 1, 1
            roots.append(tuple(b))
        c = [0] * n
        c[i] = 2
        roots.append(tuple(c))
    return roots


def mcgovern_roots(p):
    p = p if isinstance(p, Partition) else validate(tuple(p), "C")
    n = p.total // 2
    h = jm_h(p, n).ints()
    return [a for a in positive_roots(n) if sum(x * y for x, y in zip(a, h)) in (0, 1)]


def mcgovern_character(p):
    """Ind_T^G of the product of (1 - e^alpha) over positive roots with ad(h)-eigenvalue 0 or 1.

    The product is expanded on the raw weight lattice; W-canonicalisation happens
    only when the result is read as a virtual character.
    """
    p = p if isinstance(p, Partition) else validate(tuple(p), "C")
    n = p.total // 2
    poly = {(0,) * n: 1}
    for a in mcgovern_roots(p):
        nxt = dict(poly)
        for nu, c in poly.items():
            key = tuple(x + y for x, y in zip(nu, a))
            v = nxt.get(key, 0) - c
            if v:
                nxt[key] = v
            else:
                nxt.pop(key, None)
        poly = nxt
    counts = Counter()
    for nu, c in poly.items():
        counts[dominant_key([2 * x for x in nu])] += c
    return VirtualCharacter._from_twice(n, counts)


def character(p, tag, catalog=None):
    """Named characters attached to an orbit: plus, minus, Re, Rs, mcgovern (and cover = Re)."""
    p = p if isinstance(p, Partition) else validate(tuple(p), "C")
    if tag == "mcgovern":
        return mcgovern_character(p)
    if tag in ("Re", "cover"):
        return r_e(p, catalog)
    entry = catalog_lookup(p, catalog)
    if tag == "Rs":
        if entry.abar_rank != 1:
            raise InvalidInput("Rs is only defined when the component group is Z/2")
        spec = entry.spec("1")
        return r_x(arrangement(spec), spec)
    r = entry.abar_rank
    if tag == "plus":
        return x_pi(entry, "0" * r)
    if tag == "minus":
        if r == 0:
            raise InvalidInput(f"{p} has a trivial component group")
        return x_pi(entry, "0" * (r - 1) + "1")
    raise InvalidInput(f"unknown character tag {tag!r}")
