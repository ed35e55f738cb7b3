"""Weight multiplicities of sp(2n) irreducibles and K-type decompositions."""
import itertools
import json
import os
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import HalfIntegralSupport, NonIntegralMultiplicity, NotDominant, RankMismatch
from .orbits import Partition, validate
from .vchar import positive_roots
from .weight import as_weight

CACHE_VERSION = "orbit-quant/1"


def _ints(w):
    w = as_weight(w)
    if not w.is_integral():
        raise HalfIntegralSupport(f"{w} is not integral")
    return w.ints()


def _dom(v):
    return tuple(sorted(map(abs, v), reverse=True))


def root_leq(mu, la):
    """mu <= la in the root order of C_n (integer tuples, no dominance check)."""
    s = 0
    for a, b in zip(la, mu):
        s += a - b
        if s < 0:
            return False
    return s % 2 == 0


def dominant_weights_below(mu):
    """All dominant integral weights <= mu, ordered by increasing depth below mu."""
    n = len(mu)
    if n == 0:
        return [()]
    top = mu[0]
    out = []
    for combo in itertools.combinations_with_replacement(range(top, -1, -1), n):
        if root_leq(combo, mu):
            out.append(combo)

    def depth(lam):
        d, s = 0, 0
        for i, (a, b) in enumerate(zip(mu, lam)):
            s += a - b
            d += s if i < n - 1 else s // 2
        return d

    out.sort(key=lambda lam: (depth(lam), tuple(-x for x in lam)))
    return out


def freudenthal_table(mu):
    """Multiplicity of every dominant weight of V_mu, by Freudenthal's recursion."""
    n = len(mu)
    rho = tuple(range(n, 0, -1))
    roots = positive_roots(n)
    mr = [a + b for a, b in zip(mu, rho)]
    top = sum(x * x for x in mr)
    table = {}
    for lam in dominant_weights_below(mu):
        if lam == tuple(mu):
            table[lam] = 1
            continue
        num = 0
        for a in roots:
            k = 1
            while True:
                v = tuple(x + k * y for x, y in zip(lam, a))
                m = table.get(_dom(v), 0)
                if not m:
                    break
                num += m * sum(x * y for x, y in zip(v, a))
                k += 1
        lr = [a + b for a, b in zip(lam, rho)]
        den = top - sum(x * x for x in lr)
        q, r = divmod(2 * num, den)
        if r:
            raise ArithmeticError(f"Freudenthal recursion gave a non-integer at {lam} in V{mu}")
        table[lam] = q
    return table


class MultiplicityCache:
    """Single-assignment memo of Freudenthal tables keyed by highest weight.

    With ``cache_dir`` set, tables are also read from and written to
    ``<cache_dir>/orbit-quant-1/n<rank>/<mu>.json``.
    """

    def __init__(self, cache_dir=None):
        self.cache_dir = cache_dir
        self._tables = {}
        self._lock = threading.Lock()

    def _path(self, mu):
        name = "_".join(map(str, mu)) or "empty"
        return os.path.join(self.cache_dir, "orbit-quant-1", f"n{len(mu)}", f"{name}.json")

    def _load(self, mu):
        try:
            with open(self._path(mu)) as fh:
                data = json.load(fh)
        except (OSError, ValueError):
            return None
        if data.get("version") != CACHE_VERSION or tuple(data.get("mu", ())) != tuple(mu):
            return None
        return {tuple(k): m for k, m in data["table"]}

    def _store(self, mu, table):
        path = self._path(mu)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        tmp = f"{path}.{os.getpid()}.{threading.get_ident()}.tmp"
        with open(tmp, "w") as fh:
            json.dump({"version": CACHE_VERSION, "mu": list(mu), "table": [[list(k), m] for k, m in sorted(table.items())]}, fh)
        os.replace(tmp, path)

    def table(self, mu):
        mu = tuple(mu)
        t = self._tables.get(mu)
        if t is not None:
            return t
        t = self._load(mu) if self.cache_dir else None
        if t is None:
            t = freudenthal_table(mu)
            if self.cache_dir:
                self._store(mu, t)
        with self._lock:
            return self._tables.setdefault(mu, t)


_default_cache = MultiplicityCache()


def set_cache_dir(path):
    global _default_cache
    _default_cache = MultiplicityCache(path)


def weight_multiplicity(mu, nu, n=None, cache=None):
    """dim V_mu[nu], which is also the multiplicity of V_mu in Ind_T^G(nu)."""
    mu, nu = _ints(mu), _ints(nu)
    if n is not None and (len(mu) != n or len(nu) != n):
        raise RankMismatch(f"weights {mu}, {nu} are not of rank {n}")
    if _dom(mu) != tuple(mu):
        raise NotDominant(f"{mu} is not dominant")
    d = _dom(nu)
    if not root_leq(d, mu):
        return 0
    return (cache or _default_cache).table(mu).get(d, 0)


def weyl_dimension(mu, n=None):
    mu = _ints(mu)
    n = len(mu) if n is None else n
    rho = tuple(range(n, 0, -1))
    num = den = 1
    for a in positive_roots(n):
        num *= sum((m + r) * x for m, r, x in zip(mu, rho, a))
        den *= sum(r * x for r, x in zip(rho, a))
    assert num % den == 0
    return num // den


def weight_system(mu):
    """Every weight of V_mu (W-orbits of the dominant ones) with multiplicity."""
    table = _default_cache.table(tuple(mu))
    out = {}
    for lam, m in table.items():
        for perm in set(itertools.permutations(lam)):
            nz = [i for i, x in enumerate(perm) if x]
            for signs in itertools.product((1, -1), repeat=len(nz)):
                v = list(perm)
                for i, s in zip(nz, signs):
                    v[i] *= s
                out[tuple(v)] = m
    return out


def dominant_weights(n, bound):
    """Dominant integral weights of rank n with first coordinate at most ``bound``."""
    return [c for c in itertools.combinations_with_replacement(range(bound, -1, -1), n)]


@dataclass
class KTypeDecomposition:
    rank: int
    bound: int
    mults: dict = field(default_factory=dict)  # dominant int tuple -> int

    def __getitem__(self, mu):
        return self.mults.get(tuple(_ints(mu)), 0)

    def nonzero(self):
        return {mu: m for mu, m in self.mults.items() if m}

    def to_json(self):
        return [{"weight": [str(x) for x in mu], "mult": m} for mu, m in sorted(self.mults.items(), reverse=True) if m]


def decompose(chi, bound, threads=1, cache=None):
    """Multiplicity of each V_mu (mu_1 <= bound) in the G-module represented by ``chi``."""
    cache = cache or _default_cache
    if not chi.is_integral():
        raise HalfIntegralSupport("virtual character has half-integral support")
    terms = [(w.ints(), c) for w, c in chi]
    n = chi.rank

    def mult(mu):
        total = Fraction(0)
        live = [(nu, c) for nu, c in terms if root_leq(nu, mu)]
        if live:
            table = cache.table(mu)
            for nu, c in live:
                total += c * table.get(nu, 0)
        if total.denominator != 1:
            raise NonIntegralMultiplicity(f"multiplicity {total} of V{mu} is not an integer")
        return int(total)

    mus = dominant_weights(n, bound)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(mult, mus))
    else:
        values = [mult(mu) for mu in mus]
    return KTypeDecomposition(n, bound, dict(zip(mus, values)))


def closed_form(p, mu, variant="plain"):
    """1 if V_mu occurs in the multiplicity-free model of R(O) (plain) or of R(O~)/R(O) (cover-extra)."""
    p = p if isinstance(p, Partition) else validate(tuple(p), "C")
    parts = p.parts
    if any(k not in (1, 2) for k in parts):
        raise ValueError(f"{p} is not of the form (2^l 1^2q)")
    l = parts.count(2)
    mu = _ints(mu)
    if _dom(mu) != tuple(mu) or len(mu) != p.total // 2:
        return 0
    head, tail = mu[:l], mu[l:]
    if any(tail):
        return 0
    want = 0 if variant == "plain" else 1
    if variant not in ("plain", "cover-extra"):
        raise ValueError(f"unknown variant {variant!r}")
    return int(all(x % 2 == want for x in head))
