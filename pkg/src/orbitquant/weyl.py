"""Signed permutations and block-product reflection subgroups of W(C_n)."""
import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInput, RankMismatch
from .weight import Weight, as_weight


@dataclass(frozen=True)
class SignedPermutation:
    """Window notation: coordinate i of ``w.v`` is ``sign(images[i]) * v[|images[i]| - 1]``."""

    images: tuple

    def __post_init__(self):
        if sorted(abs(x) for x in self.images) != list(range(1, len(self.images) + 1)):
            raise InvalidInput(f"not a signed permutation: {self.images}")

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    @property
    def rank(self):
        return len(self.images)

    def __mul__(self, other):
        # (u*v).x == u.(v.x)
        if self.rank != other.rank:
            raise RankMismatch(f"{self.rank} != {other.rank}")
        out = []
        for a in self.images:
            b = other.images[abs(a) - 1]
            out.append(b if a > 0 else -b)
        return SignedPermutation(tuple(out))

    def inverse(self):
        inv = [0] * self.rank
        for i, a in enumerate(self.images, 1):
            inv[abs(a) - 1] = i if a > 0 else -i
        return SignedPermutation(tuple(inv))


def act(w, v):
    v = as_weight(v)
    if w.rank != v.rank:
        raise RankMismatch(f"element of rank {w.rank} acting on weight of rank {v.rank}")
    t = v.twice
    return Weight(tuple(t[a - 1] if a > 0 else -t[-a - 1] for a in w.images))


def _perm_sign(perm):
    """Sign of a permutation given as a sequence of distinct integers."""
    seen = [False] * len(perm)
    order = sorted(range(len(perm)), key=lambda i: perm[i])
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_sign(w):
    """Determinant of the signed permutation matrix; equals (-1)^length on every reflection subgroup."""
    negs = sum(1 for a in w.images if a < 0)
    return _perm_sign([abs(a) for a in w.images]) * (-1) ** negs


def _roots(kind, n):
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            out.append({i: 1, j: -1})
            if kind != "A":
                out.append({i: 1, j: 1})
        if kind == "C":
            out.append({i: 2})
    return out


def _length(w, kind):
    """Number of positive roots (first nonzero coordinate positive) sent to negative roots."""
    n = w.rank
    count = 0
    for root in _roots(kind, n):
        v = [0] * n
        for i, c in root.items():
            v[i] = c
        img = act(w, Weight.of(*v)).twice
        if next(x for x in img if x) < 0:
            count += 1
    return count


def length_c(w):
    return _length(w, "C")


def length_d(w):
    return _length(w, "D")


FACTOR_KINDS = ("A", "C", "D")
_FACTOR_RE = re.compile(r"([ACD])(\d+)")


@dataclass(frozen=True)
class SubgroupSpec:
    """Ordered product of factors (kind, size) laid out on consecutive coordinates.

    ``A k`` is the symmetric group on k coordinates, ``C k`` all signed
    permutations of the block, ``D k`` those with an even number of sign changes.
    """

    factors: tuple

    def __post_init__(self):
        for kind, k in self.factors:
            if kind not in FACTOR_KINDS or k < 0:
                raise InvalidInput(f"bad factor {kind}{k}")

    @classmethod
    def parse(cls, text):
        text = text.replace(" ", "").replace("×", "x")
        if not text:
            raise InvalidInput("empty subgroup spec")
        factors = []
        for token in text.split("x"):
            m = _FACTOR_RE.fullmatch(token)
            if not m:
                raise InvalidInput(f"cannot parse subgroup factor {token!r} in {text!r}")
            factors.append((m.group(1), int(m.group(2))))
        return cls(tuple(factors))

    @property
    def ambient_rank(self):
        return sum(k for _, k in self.factors)

    @property
    def offsets(self):
        return tuple(itertools.accumulate([0] + [k for _, k in self.factors[:-1]]))

    def order(self):
        return math.prod(factor_order(kind, k) for kind, k in self.factors)

    def __str__(self):
        return "x".join(f"{kind}{k}" for kind, k in self.factors)


def factor_order(kind, k):
    if kind == "A":
        return math.factorial(k)
    if kind == "C":
        return 2**k * math.factorial(k)
    return 2 ** max(k - 1, 0) * math.factorial(k)


def block_elements(kind, k):
    """Window tuples (1-based, local to the block) of one factor group."""
    out = []
    for perm in itertools.permutations(range(1, k + 1)):
        if kind == "A":
            out.append(perm)
            continue
        for signs in itertools.product((1, -1), repeat=k):
            if kind == "D" and signs.count(-1) % 2:
                continue
            out.append(tuple(s * a for s, a in zip(signs, perm)))
    return out


def enumerate_group(spec):
    """Yield every element of the product subgroup, embedded in the ambient rank."""
    blocks = []
    for (kind, k), off in zip(spec.factors, spec.offsets):
        blocks.append([tuple(a + off if a > 0 else a - off for a in win) for win in block_elements(kind, k)])
    for combo in itertools.product(*blocks):
        yield SignedPermutation(tuple(itertools.chain.from_iterable(combo)))


def longest_element(spec):
    """Longest element of each factor, assembled into one signed permutation."""
    images = []
    for (kind, k), off in zip(spec.factors, spec.offsets):
        if kind == "A":
            images.extend(off + k - i for i in range(k))
        elif kind == "C" or k % 2 == 0:
            images.extend(-(off + i) for i in range(1, k + 1))
        else:
            # -1 is not in D_k for odd k; w0 fixes the last coordinate (e_k is not a root)
            images.extend([-(off + i) for i in range(1, k)] + [off + k])
    return SignedPermutation(tuple(images))


def factor_length(kind, window):
    return _length(SignedPermutation(tuple(window)), kind)


def block_string(kind, k):
    """Canonical arrangement of one factor: D_k -> (k-1..0), C_k -> (k..1), A_k -> ((k-1)/2..-(k-1)/2)."""
    if kind == "D":
        return [Fraction(k - 1 - i) for i in range(k)]
    if kind == "C":
        return [Fraction(k - i) for i in range(k)]
    return [Fraction(k - 1 - 2 * i, 2) for i in range(k)]


def arrangement(spec):
    coords = []
    for kind, k in spec.factors:
        coords.extend(block_string(kind, k))
    return Weight.of(*coords)
