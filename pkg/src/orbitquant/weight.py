"""Half-integral weights in the standard epsilon coordinates of type C_n.

A weight is stored as the tuple of its doubled coordinates, so integer and
half-integer vectors share one exact representation.
"""
from dataclasses import dataclass
from fractions import Fraction


def _twice(x):
    f = Fraction(x)
    d = 2 * f
    if d.denominator != 1:
        raise ValueError(f"coordinate {x} is not a half-integer")
    return int(d)


def dominant_key(twice):
    """Canonical W(C_n)-orbit representative of a doubled coordinate tuple."""
    return tuple(sorted(map(abs, twice), reverse=True))


@dataclass(frozen=True, order=True)
class Weight:
    twice: tuple

    @classmethod
    def of(cls, *coords):
        if len(coords) == 1 and not isinstance(coords[0], (int, Fraction, str)):
            coords = tuple(coords[0])
        return cls(tuple(_twice(c) for c in coords))

    @classmethod
    def zero(cls, n):
        return cls((0,) * n)

    @property
    def rank(self):
        return len(self.twice)

    @property
    def coords(self):
        return tuple(Fraction(t, 2) for t in self.twice)

    def is_integral(self):
        return all(t % 2 == 0 for t in self.twice)

    def ints(self):
        if not self.is_integral():
            raise ValueError(f"{self} is not integral")
        return tuple(t // 2 for t in self.twice)

    def is_dominant(self):
        t = self.twice
        return all(a >= b for a, b in zip(t, t[1:])) and (not t or t[-1] >= 0)

    def dominant(self):
        return Weight(dominant_key(self.twice))

    def norm2(self):
        return Fraction(sum(t * t for t in self.twice), 4)

    def _check(self, other):
        if self.rank != other.rank:
            from .errors import RankMismatch
            raise RankMismatch(f"rank {self.rank} != rank {other.rank}")

    def __add__(self, other):
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.twice, other.twice)))

    def __sub__(self, other):
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.twice, other.twice)))

    def __neg__(self):
        return Weight(tuple(-a for a in self.twice))

    def scaled(self, k):
        """Multiply by a rational ``k``; the result must stay half-integral."""
        return Weight.of(*(c * Fraction(k) for c in self.coords))

    def strings(self):
        return [str(c) for c in self.coords]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return self.rank

    def __str__(self):
        return "(" + ",".join(self.strings()) + ")"


def as_weight(v):
    return v if isinstance(v, Weight) else Weight.of(*v)
