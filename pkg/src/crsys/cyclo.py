"""Exact points on the unit circle and finite sets of them.

A point ``e^{2 pi i num/den}`` is stored as the reduced fraction ``num/den``
of a full turn, with ``0 <= num < den``. Because the fraction is reduced,
roots of different orders compare structurally: the square of the
primitive 4th root is stored as ``1/2``, the same as ``-1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .modcore import DomainError, check_int, check_modulus, gcd, mul


@dataclass(frozen=True)
class CyclotomicPoint:
    num: int
    den: int

    def __post_init__(self):
        if self.den < 1 or not 0 <= self.num < self.den:
            raise DomainError(f"need 0 <= num < den, got {self.num}/{self.den}")
        if self.num == 0 and self.den != 1:
            raise DomainError("the point 1 must be stored as 0/1")
        if self.num and gcd(self.num, self.den) != 1:
            raise DomainError(f"{self.num}/{self.den} is not in lowest terms")

    @property
    def turn(self) -> Fraction:
        return Fraction(self.num, self.den)

    def to_record(self) -> dict:
        return {"num": self.num, "den": self.den}

    @classmethod
    def from_record(cls, record) -> CyclotomicPoint:
        return cls(record["num"], record["den"])

    def __repr__(self) -> str:
        return f"CyclotomicPoint({self.num}/{self.den})"


def point_from_exponent(k: int, n: int) -> CyclotomicPoint:
    """The point ``e^{2 pi i k/n}`` in canonical form."""
    k = check_int(k, "k")
    n = check_modulus(n, minimum=1, name="N")
    r = k % n
    if r == 0:
        return CyclotomicPoint(0, 1)
    g = gcd(r, n)
    return CyclotomicPoint(r // g, n // g)


class RootSet:
    """Immutable deduplicated set of points, iterated in ascending angle."""

    __slots__ = ("_points", "_ordered")

    def __init__(self, points=()):
        pts = frozenset(points)
        for pt in pts:
            if not isinstance(pt, CyclotomicPoint):
                raise DomainError(f"not a CyclotomicPoint: {pt!r}")
        self._points = pts
        self._ordered = tuple(sorted(pts, key=lambda pt: pt.turn))

    @property
    def points(self) -> frozenset:
        return self._points

    def ordered(self) -> tuple[CyclotomicPoint, ...]:
        return self._ordered

    def __iter__(self):
        return iter(self._ordered)

    def __len__(self) -> int:
        return len(self._points)

    def __contains__(self, pt) -> bool:
        return pt in self._points

    def __eq__(self, other) -> bool:
        if isinstance(other, RootSet):
            return self._points == other._points
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._points)

    def __repr__(self) -> str:
        inner = ", ".join(f"{pt.num}/{pt.den}" for pt in self._ordered)
        return f"RootSet({{{inner}}})"

    def to_records(self) -> list[dict]:
        return [pt.to_record() for pt in self._ordered]

    @classmethod
    def from_records(cls, records) -> RootSet:
        return cls(CyclotomicPoint.from_record(r) for r in records)


def omega_set(h: int) -> RootSet:
    """All ``h``-th roots of unity."""
    h = check_modulus(h)
    return RootSet(point_from_exponent(k, h) for k in range(h))


def exponent_set(ints, h: int) -> RootSet:
    """``{w^a : a in ints}`` for the primitive ``h``-th root ``w``."""
    h = check_modulus(h)
    ints = list(ints)
    if len(ints) != h:
        raise DomainError(f"expected {h} exponents, got {len(ints)}")
    return RootSet(point_from_exponent(a, h) for a in ints)


def power_set(s: RootSet, p: int) -> RootSet:
    p = check_int(p, "p")
    return RootSet(point_from_exponent(mul(pt.num, p), pt.den) for pt in s)


def equals_omega(s: RootSet, h: int) -> bool:
    return s == omega_set(h)


def eval_complex(pt: CyclotomicPoint) -> tuple[float, float]:
    angle = 2 * math.pi * pt.num / pt.den
    return math.cos(angle), math.sin(angle)
