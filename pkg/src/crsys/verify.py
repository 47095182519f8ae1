"""Parameter sweeps that check every congruence and root-of-unity law.

Each check returns a :class:`PropertyResult`; a law holds over the sweep
when its counterexample list is empty.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import branches, crs, cyclo, modcore
from .branches import BranchVector
from .crs import CrsCandidate

MAX_REPORTED = 10


@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    counterexamples: list = field(default_factory=list)
    failures: int = 0

    def record(self, ok: bool, witness) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if len(self.counterexamples) < MAX_REPORTED:
                self.counterexamples.append(witness)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_record(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "failures": self.failures,
            "counterexamples": self.counterexamples,
        }


def random_crs(h: int, rng: random.Random, spread: int = 3) -> CrsCandidate:
    """A shuffled complete residue system with each class moved by a random multiple of ``h``."""
    residues = list(range(h))
    rng.shuffle(residues)
    return CrsCandidate(h, tuple(r + h * rng.randint(-spread, spread) for r in residues))


def random_candidate(h: int, rng: random.Random, lo: int, hi: int) -> CrsCandidate:
    return CrsCandidate(h, tuple(rng.randint(lo, hi) for _ in range(h)))


def check_cancellation(samples: int, mmax: int, rng: random.Random) -> PropertyResult:
    res = PropertyResult("cancellation")
    for _ in range(samples):
        m = rng.randint(2, mmax)
        k = rng.choice([-1, 1]) * rng.randint(1, 2 * mmax)
        # half the time force a congruent pair so both sides of the iff get exercised
        a = rng.randint(-10 * mmax, 10 * mmax)
        b = a + rng.randint(-10, 10) * (m // modcore.gcd(k, m)) if rng.random() < 0.5 else rng.randint(-10 * mmax, 10 * mmax)
        res.record(modcore.cancellation_holds(k, a, b, m), [k, a, b, m])
    return res


def check_coprime_cancellation(samples: int, mmax: int, rng: random.Random) -> PropertyResult:
    res = PropertyResult("coprime_cancellation")
    while res.checked < samples:
        m = rng.randint(2, mmax)
        k = rng.choice([-1, 1]) * rng.randint(1, 2 * mmax)
        if modcore.gcd(k, m) != 1:
            continue
        a = rng.randint(-10 * mmax, 10 * mmax)
        b = a + rng.randint(-10, 10) * m if rng.random() < 0.5 else rng.randint(-10 * mmax, 10 * mmax)
        res.record(modcore.coprime_cancellation_holds(k, a, b, m), [k, a, b, m])
    return res


def check_translation(samples: int, mmax: int, rng: random.Random) -> PropertyResult:
    res = PropertyResult("translation")
    for _ in range(samples):
        h = rng.randint(1, mmax)
        a, c = rng.randint(-10 * mmax, 10 * mmax), rng.randint(-10 * mmax, 10 * mmax)
        b = a + h * rng.randint(-5, 5) if rng.random() < 0.5 else rng.randint(-10 * mmax, 10 * mmax)
        res.record(modcore.translation_holds(a, b, c, h), [a, b, c, h])
    return res


def check_multiple_shift(samples: int, mmax: int, rng: random.Random) -> PropertyResult:
    res = PropertyResult("multiple_shift")
    for _ in range(samples):
        h = rng.randint(1, mmax)
        a = rng.randint(-10 * mmax, 10 * mmax)
        b = a + h * rng.randint(-5, 5) if rng.random() < 0.5 else rng.randint(-10 * mmax, 10 * mmax)
        c, d = rng.randint(-100, 100), rng.randint(-100, 100)
        res.record(modcore.multiple_shift_holds(a, b, c, d, h), [a, b, c, d, h])
    return res


def check_scale(hmax: int, pmax: int, per_h: int, rng: random.Random) -> PropertyResult:
    res = PropertyResult("scale_iff_coprime")
    for h in range(2, hmax + 1):
        for _ in range(per_h):
            c = random_crs(h, rng)
            for p in range(1, pmax + 1):
                got = crs.is_crs(crs.scale(c, p))
                res.record(got == (modcore.gcd(p, h) == 1), {"candidate": c.to_record(), "p": p})
    return res


def check_affine(hmax: int, pmax: int, per_h: int, rng: random.Random) -> PropertyResult:
    res = PropertyResult("affine_iff_coprime")
    for h in range(2, hmax + 1):
        for _ in range(per_h):
            c = random_crs(h, rng)
            for p in range(1, pmax + 1):
                l = rng.randint(-5 * h, 5 * h)
                got = crs.is_crs(crs.affine(c, p, l))
                res.record(got == (modcore.gcd(p, h) == 1), {"candidate": c.to_record(), "p": p, "l": l})
    return res


def check_shift(hmax: int, per_h: int, rng: random.Random) -> PropertyResult:
    res = PropertyResult("shift_preserves_crs")
    for h in range(2, hmax + 1):
        for i in range(per_h):
            c = random_crs(h, rng) if i % 2 else random_candidate(h, rng, -2 * h, 2 * h)
            ls = [rng.randint(-5, 5) for _ in range(h)]
            got = crs.is_crs(crs.shift_multiples(c, ls))
            res.record(got == crs.is_crs(c), {"candidate": c.to_record(), "shifts": ls})
    return res


def check_exponent_set(hmax: int, per_h: int, rng: random.Random) -> PropertyResult:
    res = PropertyResult("exponent_set_iff_crs")
    for h in range(2, hmax + 1):
        for i in range(per_h):
            c = random_crs(h, rng) if i % 2 else random_candidate(h, rng, -3 * h, 3 * h)
            got = cyclo.equals_omega(cyclo.exponent_set(c.elements, h), h)
            res.record(got == crs.is_crs(c), c.to_record())
    return res


def check_power_set(hmax: int, pmax: int) -> PropertyResult:
    res = PropertyResult("power_set_iff_coprime")
    for h in range(2, hmax + 1):
        omega = cyclo.omega_set(h)
        for p in range(1, pmax + 1):
            got = cyclo.equals_omega(cyclo.power_set(omega, p), h)
            res.record(got == (modcore.gcd(p, h) == 1), [h, p])
    return res


def branch_solution_ok(h: int, p: int) -> bool:
    """Solver outcome for ``(h, p)`` matches coprimality and verifies on its own terms."""
    sol = branches.solve_branch_vector(h, p)
    if modcore.gcd(h, p) == 1:
        return (
            isinstance(sol, BranchVector)
            and branches.fixes_omega(sol)
            and all(e % p == 0 for e in branches.exponents_over_hp(sol))
            and branches.quotients_form_crs(sol)
        )
    return (
        isinstance(sol, branches.NoSolution)
        and sol.gcd == modcore.gcd(h, p)
        and all((sol.witness_k + h * l) % p != 0 for l in range(p))
    )


def check_branch_solver(hmax: int, pmax: int) -> PropertyResult:
    res = PropertyResult("branch_solver_iff_coprime")
    for h in range(2, hmax + 1):
        for p in range(1, pmax + 1):
            res.record(branch_solution_ok(h, p), [h, p])
    return res


def check_branch_oracle(hmax: int, pmax: int, cap: int) -> PropertyResult:
    res = PropertyResult("branch_oracle_agreement")
    for h in range(2, hmax + 1):
        for p in range(1, pmax + 1):
            if p**h > cap:
                continue
            report = branches.brute_force_branch_search(h, p, cap)
            sol = branches.solve_branch_vector(h, p)
            expected = (sol,) if isinstance(sol, BranchVector) else ()
            res.record(report.exhaustive and report.solutions == expected, [h, p])
    return res


def check_rational_powers(hmax: int, pmax: int) -> PropertyResult:
    res = PropertyResult("rational_power_agreement")
    for h in range(2, hmax + 1):
        for p in range(1, pmax + 1):
            if modcore.gcd(h, p) != 1:
                continue
            bv = branches.solve_branch_vector(h, p)
            for q in range(1, pmax + 1):
                if modcore.gcd(h, q) != 1:
                    continue
                a = branches.rational_power_root_first(h, p, q, bv)
                b = branches.rational_power_power_first(h, p, q, bv)
                res.record(a == b and cyclo.equals_omega(a, h), [h, p, q])
    return res


def run_all(hmax: int, pmax: int, cap: int, seed: int = 0, samples: int = 2000, per_h: int = 20) -> list[PropertyResult]:
    if hmax < 2:
        raise modcore.DomainError(f"hmax must be >= 2, got {hmax}")
    if pmax < 1:
        raise modcore.DomainError(f"pmax must be >= 1, got {pmax}")
    if cap < 1:
        raise modcore.DomainError(f"cap must be >= 1, got {cap}")
    rng = random.Random(seed)
    mmax = max(hmax, pmax)
    return [
        check_cancellation(samples, mmax, rng),
        check_coprime_cancellation(samples, mmax, rng),
        check_translation(samples, mmax, rng),
        check_multiple_shift(samples, mmax, rng),
        check_scale(hmax, pmax, per_h, rng),
        check_affine(hmax, pmax, per_h, rng),
        check_shift(hmax, per_h, rng),
        check_exponent_set(hmax, per_h, rng),
        check_power_set(hmax, pmax),
        check_branch_solver(hmax, pmax),
        check_branch_oracle(hmax, pmax, cap),
        check_rational_powers(hmax, pmax),
    ]
