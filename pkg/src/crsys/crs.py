"""Complete residue systems and the transformations that preserve or break them."""

from __future__ import annotations

from dataclasses import dataclass

from .modcore import INT_MAX, INT_MIN, DomainError, canonical_residue, check_int, check_modulus, checked


def _all_int64(values) -> bool:
    return all(type(v) is int for v in values) and (not values or INT_MIN <= min(values) and max(values) <= INT_MAX)


@dataclass(frozen=True)
class CrsCandidate:
    """``h`` integers indexed ``a_0 .. a_{h-1}`` together with the modulus ``h``.

    Elements are kept as an ordered tuple, so repeated integers are allowed;
    such a candidate simply fails :func:`is_crs`.
    """

    modulus: int
    elements: tuple[int, ...]

    def __post_init__(self):
        h = check_modulus(self.modulus)
        elements = tuple(self.elements)
        if not _all_int64(elements):
            elements = tuple(check_int(a, "element") for a in elements)
        if len(elements) != h:
            raise DomainError(f"expected {h} elements, got {len(elements)}")
        object.__setattr__(self, "elements", elements)

    @property
    def h(self) -> int:
        return self.modulus

    def to_record(self) -> dict:
        return {"h": self.modulus, "elements": list(self.elements)}

    @classmethod
    def from_record(cls, record) -> CrsCandidate:
        if not isinstance(record, dict) or set(record) != {"h", "elements"}:
            raise DomainError('expected a record {"h": <int>, "elements": [<int>, ...]}')
        if not isinstance(record["elements"], list):
            raise DomainError("elements must be an array of integers")
        return cls(record["h"], tuple(record["elements"]))


@dataclass(frozen=True)
class ResidueProfile:
    residues: tuple[int, ...]
    modulus: int

    def __post_init__(self):
        for r in self.residues:
            if not 0 <= r < self.modulus:
                raise DomainError(f"residue {r} outside [0, {self.modulus})")


def residue_profile(c: CrsCandidate) -> ResidueProfile:
    return ResidueProfile(tuple(canonical_residue(a, c.modulus) for a in c.elements), c.modulus)


def is_crs(c: CrsCandidate) -> bool:
    # h residues drawn from h classes: injective iff surjective
    h = c.modulus
    return len({a % h for a in c.elements}) == h


def canonical_crs(h: int) -> CrsCandidate:
    return CrsCandidate(h, tuple(range(check_modulus(h))))


def scale(c: CrsCandidate, p: int) -> CrsCandidate:
    """Multiply every element by ``p``; a CRS stays one iff ``gcd(p, h) = 1``."""
    p = check_int(p, "p")
    return CrsCandidate(c.modulus, tuple(p * a for a in c.elements))


def affine(c: CrsCandidate, p: int, l: int) -> CrsCandidate:
    p = check_int(p, "p")
    l = check_int(l, "l")
    return CrsCandidate(c.modulus, tuple(a + l for a in scale(c, p).elements))


def shift_multiples(c: CrsCandidate, ls) -> CrsCandidate:
    """Replace ``a_i`` by ``a_i + h*l_i``. Never changes whether ``c`` is a CRS."""
    ls = tuple(ls)
    if len(ls) != c.modulus:
        raise DomainError(f"expected {c.modulus} shifts, got {len(ls)}")
    h = c.modulus
    ls = tuple(checked(h * check_int(l, "shift")) for l in ls)
    return CrsCandidate(h, tuple(a + hl for a, hl in zip(c.elements, ls)))
