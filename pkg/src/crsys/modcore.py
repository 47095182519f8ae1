"""Integer and modular arithmetic kernel.

All values are plain Python ints, but every entry point enforces a signed
64-bit range so that results match a fixed-width implementation: anything
that would leave the range raises ``OverflowError`` instead of growing.
"""

from __future__ import annotations

import math

INT_MIN = -(2**63)
INT_MAX = 2**63 - 1


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class NotInvertible(DomainError):
    def __init__(self, a: int, m: int, gcd: int) -> None:
        super().__init__(f"{a} has no inverse modulo {m} (gcd={gcd})")
        self.a = a
        self.m = m
        self.gcd = gcd


def checked(value: int) -> int:
    if not INT_MIN <= value <= INT_MAX:
        raise OverflowError(f"{value} does not fit in a signed 64-bit integer")
    return value


def check_int(value, name: str = "value") -> int:
    # bool is an int subclass; reject it so True never sneaks in as 1
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    return checked(value)


def check_modulus(m, minimum: int = 2, name: str = "modulus") -> int:
    m = check_int(m, name)
    if m < minimum:
        raise DomainError(f"{name} must be >= {minimum}, got {m}")
    return m


def mul(a: int, b: int) -> int:
    return checked(a * b)


def add(a: int, b: int) -> int:
    return checked(a + b)


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = gcd(a, b) >= 0`` and ``a*x + b*y == g``."""
    a = check_int(a, "a")
    b = check_int(b, "b")
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return checked(old_r), checked(old_x), checked(old_y)


def gcd(a: int, b: int) -> int:
    a = check_int(a, "a")
    b = check_int(b, "b")
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def mod_inverse(a: int, m: int) -> int:
    """Return ``u`` in ``[0, m)`` with ``a*u = 1 (mod m)``.

    ``m = 1`` is accepted and yields 0, since every integer is congruent to 1
    modulo 1.
    """
    a = check_int(a, "a")
    m = check_modulus(m, minimum=1)
    g, x, _ = egcd(a, m)
    if g != 1:
        raise NotInvertible(a, m, g)
    return x % m


def canonical_residue(a: int, m: int) -> int:
    """Nonnegative remainder of ``a`` modulo ``m``, even for negative ``a``."""
    a = check_int(a, "a")
    m = check_modulus(m, minimum=1)
    # Python's % already floors toward the divisor's sign, so m > 0 gives [0, m)
    return a % m


def congruent(a: int, b: int, m: int) -> bool:
    m = check_modulus(m, minimum=1)
    return (check_int(a, "a") - check_int(b, "b")) % m == 0


# Congruence laws as predicates. Each returns True when both sides of the
# equivalence agree for the given integers, so a False is a counterexample.


def cancellation_holds(k: int, a: int, b: int, m: int) -> bool:
    """``k*a = k*b (mod m)`` iff ``a = b (mod m / gcd(k, m))``."""
    d = gcd(k, m)
    return congruent(mul(k, a), mul(k, b), m) == congruent(a, b, m // d)


def coprime_cancellation_holds(k: int, a: int, b: int, m: int) -> bool:
    """For ``gcd(k, m) = 1``: ``k*a = k*b (mod m)`` iff ``a = b (mod m)``."""
    if gcd(k, m) != 1:
        raise DomainError(f"gcd({k}, {m}) != 1")
    return congruent(mul(k, a), mul(k, b), m) == congruent(a, b, m)


def translation_holds(a: int, b: int, c: int, h: int) -> bool:
    return congruent(a, b, h) == congruent(add(a, c), add(b, c), h)


def multiple_shift_holds(a: int, b: int, c: int, d: int, h: int) -> bool:
    return congruent(add(a, mul(h, c)), add(b, mul(h, d)), h) == congruent(a, b, h)
