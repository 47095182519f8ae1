"""Branches of the p-th root acting on roots of unity.

The ``l``-th branch sends ``e^{i theta}`` (with ``theta`` taken in
``[0, 2 pi)``) to ``e^{i (theta + 2 pi l)/p}``. Choosing one branch per
``h``-th root of unity gives a branch vector; :func:`solve_branch_vector`
finds the one that maps the ``h``-th roots onto themselves, which exists
exactly when ``gcd(h, p) = 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .crs import CrsCandidate, is_crs
from .cyclo import CyclotomicPoint, RootSet, equals_omega, omega_set, point_from_exponent, power_set
from .modcore import DomainError, check_int, check_modulus, gcd, mod_inverse

DEFAULT_CAP = 2**20
_BLOCK = 1 << 20
_MASK_BITS = 62


class CollapsedSet(DomainError):
    def __init__(self, h: int, q: int, gcd: int) -> None:
        super().__init__(f"raising the roots of unity of order {h} to the power {q} collapses them (gcd={gcd}); positions are undefined")
        self.h = h
        self.q = q
        self.gcd = gcd


class BudgetExceeded(DomainError):
    def __init__(self, size: int, cap: int) -> None:
        super().__init__(f"enumeration needs p^h = {size} candidates, budget is {cap}")
        self.size = size
        self.cap = cap


@dataclass(frozen=True)
class BranchVector:
    h: int
    p: int
    l: tuple[int, ...]

    def __post_init__(self):
        check_modulus(self.h, name="h")
        check_modulus(self.p, minimum=1, name="p")
        l = tuple(check_int(x, "l_k") for x in self.l)
        if len(l) != self.h:
            raise DomainError(f"expected {self.h} branch indices, got {len(l)}")
        if any(not 0 <= x < self.p for x in l):
            raise DomainError(f"branch indices must lie in [0, {self.p}), got {list(l)}")
        object.__setattr__(self, "l", l)

    def to_record(self) -> dict:
        return {"h": self.h, "p": self.p, "l": list(self.l)}

    @classmethod
    def from_record(cls, record) -> BranchVector:
        return cls(record["h"], record["p"], tuple(record["l"]))


@dataclass(frozen=True)
class NoSolution:
    """No branch vector works; ``witness_k`` is an index with no usable branch."""

    h: int
    p: int
    gcd: int
    witness_k: int

    def to_record(self) -> dict:
        return {"gcd": self.gcd, "witness_k": self.witness_k}


@dataclass(frozen=True)
class BranchSearchReport:
    h: int
    p: int
    solutions: tuple[BranchVector, ...]
    exhaustive: bool

    def to_record(self) -> dict:
        return {
            "h": self.h,
            "p": self.p,
            "solutions": [list(bv.l) for bv in self.solutions],
            "exhaustive": self.exhaustive,
        }


def branch_root(pt: CyclotomicPoint, l: int, p: int) -> CyclotomicPoint:
    p = check_modulus(p, minimum=1, name="p")
    l = check_int(l, "l")
    if not 0 <= l < p:
        raise DomainError(f"branch index {l} outside [0, {p})")
    return point_from_exponent(pt.num + pt.den * l, pt.den * p)


def _apply_positional(points, l, p: int) -> RootSet:
    return RootSet(branch_root(pt, lk, p) for pt, lk in zip(points, l))


def apply_branches(bv: BranchVector) -> RootSet:
    """Apply branch ``l_k`` to the ``k``-th root of unity, in ascending angle."""
    return _apply_positional(omega_set(bv.h).ordered(), bv.l, bv.p)


def solve_branch_vector(h: int, p: int) -> BranchVector | NoSolution:
    h = check_modulus(h, name="h")
    p = check_modulus(p, minimum=1, name="p")
    d = gcd(h, p)
    if d != 1:
        for k in range(h):
            if all((k + h * l) % p for l in range(p)):
                return NoSolution(h, p, d, k)
        raise AssertionError(f"no witness found for h={h}, p={p}")  # pragma: no cover
    # k + h*l_k = 0 (mod p)  =>  l_k = -k * h^{-1} (mod p)
    inv = mod_inverse(h, p)
    return BranchVector(h, p, tuple((-k * inv) % p for k in range(h)))


def exponents_over_hp(bv: BranchVector) -> list[int]:
    """The integers ``k + h*l_k``; the k-th branched point is ``e^{2 pi i (k + h l_k)/(h p)}``."""
    return [k + bv.h * lk for k, lk in enumerate(bv.l)]


def brute_force_branch_search(h: int, p: int, cap: int = DEFAULT_CAP) -> BranchSearchReport:
    """Try every branch vector in ``{0..p-1}^h`` and keep those fixing the ``h``-th roots.

    Candidates are screened with vectorized exact integer arithmetic and every
    survivor is then confirmed with :func:`apply_branches`. Solutions come
    out in lexicographic order.
    """
    h = check_modulus(h, name="h")
    p = check_modulus(p, minimum=1, name="p")
    cap = check_int(cap, "cap")
    size = p**h
    if size > cap:
        raise BudgetExceeded(size, cap)

    omega = omega_set(h)
    if h > _MASK_BITS:
        # only reachable with p = 1 or an enormous cap
        candidates = (tuple(l) for l in itertools.product(range(p), repeat=h))
    else:
        candidates = _screen(h, p)
    solutions = []
    for l in candidates:
        bv = BranchVector(h, p, l)
        if apply_branches(bv) == omega:
            solutions.append(bv)
    return BranchSearchReport(h, p, tuple(solutions), True)


def _screen(h: int, p: int):
    """Yield, in lexicographic order, every ``l`` whose branched points cover all ``h`` roots.

    Position ``k`` with branch ``l`` lands on ``e^{2 pi i (k + h l)/(h p)}``,
    which is the ``j``-th ``h``-th root of unity iff ``k + h l = j p (mod h p)``.
    Each (k, l) contributes bit ``j`` (or nothing when off the roots), and
    ``h`` positions reach all ``h`` bits only if they land on distinct roots.
    """
    e = (np.arange(h)[:, None] + h * np.arange(p)[None, :]) % (h * p)
    bits = np.where(e % p == 0, np.left_shift(1, e // p), 0).astype(np.int64)
    full = (1 << h) - 1

    # enumerate the trailing positions as one flat array, the leading ones in Python
    tail_len = h
    while tail_len > 1 and p**tail_len > _BLOCK:
        tail_len -= 1
    head_len = h - tail_len
    tail = bits[head_len]
    for k in range(head_len + 1, h):
        tail = (tail[:, None] | bits[k][None, :]).ravel()

    head_bits = bits[:head_len].tolist()
    for head in itertools.product(range(p), repeat=head_len):
        acc = 0
        for k, lk in enumerate(head):
            acc |= head_bits[k][lk]
        for idx in np.flatnonzero((tail | acc) == full).tolist():
            rest = []
            for _ in range(tail_len):
                idx, d = divmod(idx, p)
                rest.append(d)
            yield head + tuple(reversed(rest))


def _check_pair(h: int, p: int, bv: BranchVector) -> None:
    if bv.h != h or bv.p != p:
        raise DomainError(f"branch vector is for (h={bv.h}, p={bv.p}), not (h={h}, p={p})")


def rational_power_root_first(h: int, p: int, q: int, bv: BranchVector) -> RootSet:
    """Take branched p-th roots of the ``h``-th roots of unity, then raise to ``q``."""
    _check_pair(h, p, bv)
    return power_set(apply_branches(bv), q)


def rational_power_power_first(h: int, p: int, q: int, bv: BranchVector) -> RootSet:
    """Raise the ``h``-th roots of unity to ``q``, then take branched p-th roots.

    The branch vector indexes the powered set in ascending angle, so the
    powered set must still have ``h`` points.
    """
    _check_pair(h, p, bv)
    powered = power_set(omega_set(h), q)
    if len(powered) < h:
        raise CollapsedSet(h, q, gcd(q, h))
    return _apply_positional(powered.ordered(), bv.l, p)


def branch_quotients(bv: BranchVector) -> CrsCandidate:
    """``(k + h*l_k)/p`` for each ``k``, as a candidate modulo ``h``.

    Raises :class:`DomainError` if some ``k + h*l_k`` is not divisible by ``p``.
    """
    quotients = []
    for e in exponents_over_hp(bv):
        if e % bv.p:
            raise DomainError(f"{e} is not divisible by p={bv.p}")
        quotients.append(e // bv.p)
    return CrsCandidate(bv.h, tuple(quotients))


def fixes_omega(bv: BranchVector) -> bool:
    return equals_omega(apply_branches(bv), bv.h)


def quotients_form_crs(bv: BranchVector) -> bool:
    return is_crs(branch_quotients(bv))
