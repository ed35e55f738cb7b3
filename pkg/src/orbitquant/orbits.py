"""Partitions labelling nilpotent orbits of Sp(2n) and SO(2n+1)."""
from collections import Counter
from fractions import Fraction
from dataclasses import dataclass

from .errors import (
    NotDecreasing,
    ParityViolation,
    RankMismatch,
    TotalParityMismatch,
    WrongTotalParity,
)
from .weight import Weight

KINDS = ("C", "B", None)


@dataclass(frozen=True)
class Partition:
    parts: tuple
    kind: str = None  # "C", "B" or None (unrestricted)

    @property
    def total(self):
        return sum(self.parts)

    def multiplicity(self, k):
        return self.parts.count(k)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def _bad_part(parts, kind):
    """Largest part whose multiplicity breaks the type-``kind`` rule, or None."""
    odd_bad = 1 if kind == "C" else 0
    counts = Counter(parts)
    bad = [k for k, m in counts.items() if k % 2 == odd_bad and m % 2 == 1]
    return max(bad) if bad else None


def validate(parts, kind=None):
    """Check ``parts`` and return a :class:`Partition` of the given kind.

    Type C requires every odd part to occur an even number of times and an
    even total; type B the same for even parts with an odd total.
    """
    parts = tuple(int(k) for k in parts)
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if any(k < 1 for k in parts):
        raise NotDecreasing(f"parts must be positive: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise NotDecreasing(f"parts must be weakly decreasing: {parts}")
    if kind is not None:
        bad = _bad_part(parts, kind)
        if bad is not None:
            raise ParityViolation(bad, kind)
        want = 0 if kind == "C" else 1
        if sum(parts) % 2 != want:
            raise WrongTotalParity(f"type {kind} needs an {'even' if want == 0 else 'odd'} total, got {sum(parts)}")
    return Partition(parts, kind)


def transpose(p):
    parts = tuple(p)
    if not parts:
        return Partition((), None)
    return Partition(tuple(sum(1 for x in parts if x >= k) for k in range(1, parts[0] + 1)), None)


def collapse(p, kind):
    """Largest partition of the given kind dominated by ``p``.

    Sweep: take the largest offending part q, lower its last occurrence to
    q - 1 and raise the first later part below q - 1 (padding with a zero).
    """
    parts = list(p)
    want = 0 if kind == "C" else 1
    if kind not in ("B", "C"):
        raise ValueError(f"collapse needs kind B or C, got {kind!r}")
    if sum(parts) % 2 != want:
        raise TotalParityMismatch(f"total {sum(parts)} cannot be collapsed to type {kind}")
    while True:
        q = _bad_part(parts, kind)
        if q is None:
            break
        last = max(i for i, x in enumerate(parts) if x == q)
        parts[last] -= 1
        j = next((i for i in range(last + 1, len(parts)) if parts[i] < q - 1), None)
        if j is None:
            parts.append(1)
        else:
            parts[j] += 1
        parts = [x for x in parts if x > 0]
    return validate(parts, kind)


def ls_dual(p):
    """Lusztig-Spaltenstein dual of a type-C partition of 2n (a type-B partition of 2n+1)."""
    p = p if isinstance(p, Partition) and p.kind == "C" else validate(tuple(p), "C")
    return collapse(transpose(p.parts + (1,)), "B")


def jm_h(p, n):
    """Dominant Jacobson-Morozov semisimple element of ``p`` as a rank-n weight."""
    parts = tuple(p)
    total = sum(parts)
    if total not in (2 * n, 2 * n + 1):
        raise RankMismatch(f"partition of {total} does not live in rank {n}")
    eig = sorted((k - 1 - 2 * i for k in parts for i in range(k)), reverse=True)
    return Weight.of(*eig[:n])


@dataclass(frozen=True)
class OrbitDescriptor:
    partition: Partition
    rank: int
    dual: Partition
    h_self: Weight
    h_dual: Weight
    lambda_O: Weight


def lambda_of(p):
    p = p if isinstance(p, Partition) and p.kind == "C" else validate(tuple(p), "C")
    n = p.total // 2
    dual = ls_dual(p)
    h_dual = jm_h(dual, n)
    return OrbitDescriptor(
        partition=p,
        rank=n,
        dual=dual,
        h_self=jm_h(p, n),
        h_dual=h_dual,
        lambda_O=h_dual.scaled(Fraction(1, 2)),
    )


def spherical_family(p):
    """Return ``(pp, q)`` if ``p`` is (2^{2pp} 1^{2q}) with pp >= 1, else None."""
    parts = tuple(p)
    if any(k not in (1, 2) for k in parts):
        return None
    twos, ones = parts.count(2), parts.count(1)
    if twos < 2 or twos % 2 or ones % 2:
        return None
    return twos // 2, ones // 2


def family_partition(pp, q):
    return validate((2,) * (2 * pp) + (1,) * (2 * q), "C")



