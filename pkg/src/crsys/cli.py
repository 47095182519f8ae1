"""Command-line interface. Every command prints one JSON record on stdout.

Exit codes: 0 when the predicate holds or a solution exists, 1 when it does
not, 2 for usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import branches, crs, cyclo, verify
from .branches import BranchVector, NoSolution
from .crs import CrsCandidate
from .modcore import DomainError

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")


def emit(record) -> None:
    sys.stdout.write(json.dumps(record) + "\n")


def read_candidate(args) -> CrsCandidate:
    if args.elements is not None:
        if args.h is None:
            raise UsageError("--elements needs --h")
        return CrsCandidate(args.h, tuple(args.elements))
    try:
        record = json.load(sys.stdin)
    except json.JSONDecodeError as e:
        raise UsageError(f"stdin is not a JSON record: {e}")
    return CrsCandidate.from_record(record)


def roots(s: cyclo.RootSet) -> list[dict]:
    return s.to_records()


def branch_vector_for(args) -> BranchVector | NoSolution:
    if args.l is not None:
        return BranchVector(args.h, args.p, tuple(args.l))
    return branches.solve_branch_vector(args.h, args.p)


def cmd_check_crs(args) -> int:
    c = read_candidate(args)
    ok = crs.is_crs(c)
    emit({"is_crs": ok, "profile": list(crs.residue_profile(c).residues)})
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_residues(args) -> int:
    c = read_candidate(args)
    emit({"h": c.modulus, "profile": list(crs.residue_profile(c).residues)})
    return EXIT_TRUE


def _transformed(c: CrsCandidate) -> int:
    ok = crs.is_crs(c)
    emit({"candidate": c.to_record(), "is_crs": ok, "profile": list(crs.residue_profile(c).residues)})
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_scale(args) -> int:
    return _transformed(crs.scale(read_candidate(args), args.p))


def cmd_affine(args) -> int:
    if args.l is None or len(args.l) != 1:
        raise UsageError("affine needs a single offset in --l")
    return _transformed(crs.affine(read_candidate(args), args.p, args.l[0]))


def cmd_shift(args) -> int:
    if args.l is None:
        raise UsageError("shift needs --l")
    return _transformed(crs.shift_multiples(read_candidate(args), args.l))


def cmd_omega(args) -> int:
    emit({"h": args.h, "roots": roots(cyclo.omega_set(args.h))})
    return EXIT_TRUE


def cmd_power(args) -> int:
    s = cyclo.power_set(cyclo.omega_set(args.h), args.p)
    ok = cyclo.equals_omega(s, args.h)
    emit({"h": args.h, "p": args.p, "roots": roots(s), "equals_omega": ok})
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_solve_branches(args) -> int:
    sol = branches.solve_branch_vector(args.h, args.p)
    if isinstance(sol, NoSolution):
        emit(sol.to_record())
        return EXIT_FALSE
    emit({"branch_vector": sol.to_record(), "roots": roots(branches.apply_branches(sol))})
    return EXIT_TRUE


def cmd_brute_branches(args) -> int:
    report = branches.brute_force_branch_search(args.h, args.p, args.cap)
    emit(report.to_record())
    return EXIT_TRUE if report.solutions else EXIT_FALSE


def cmd_rational(args) -> int:
    bv = branch_vector_for(args)
    if isinstance(bv, NoSolution):
        emit(bv.to_record())
        return EXIT_FALSE
    record = {"branch_vector": bv.to_record(), "q": args.q}
    results = []
    if args.order in ("both", "root-first"):
        s = branches.rational_power_root_first(args.h, args.p, args.q, bv)
        record["root_first"] = roots(s)
        results.append(s)
    if args.order in ("both", "power-first"):
        s = branches.rational_power_power_first(args.h, args.p, args.q, bv)
        record["power_first"] = roots(s)
        results.append(s)
    ok = all(cyclo.equals_omega(s, args.h) for s in results)
    record["equals_omega"] = ok
    emit(record)
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_verify(args) -> int:
    results = verify.run_all(args.hmax, args.pmax, args.cap)
    passed = all(r.passed for r in results)
    emit({
        "hmax": args.hmax,
        "pmax": args.pmax,
        "cap": args.cap,
        "properties": [r.to_record() for r in results],
        "passed": passed,
    })
    return EXIT_TRUE if passed else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crsys", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help, *flags):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="JSON output (the default and only format)")
        for flag in flags:
            if flag == "candidate":
                p.add_argument("--h", type=int)
                p.add_argument("--elements", type=int_list, help="comma-separated; omit to read a record on stdin")
            elif flag == "h":
                p.add_argument("--h", type=int, required=True)
            elif flag in ("p", "q"):
                p.add_argument(f"--{flag}", type=int, required=True)
            elif flag == "l":
                p.add_argument("--l", type=int_list)
            elif flag == "cap":
                p.add_argument("--cap", type=int, default=branches.DEFAULT_CAP)
        return p

    command("check-crs", cmd_check_crs, "test whether the elements form a complete residue system", "candidate")
    command("residues", cmd_residues, "canonical residues of the elements", "candidate")
    command("scale", cmd_scale, "multiply every element by p", "candidate", "p")
    command("affine", cmd_affine, "map a to p*a + l", "candidate", "p", "l")
    command("shift", cmd_shift, "map a_i to a_i + h*l_i", "candidate", "l")
    command("omega", cmd_omega, "the h-th roots of unity", "h")
    command("power", cmd_power, "p-th powers of the h-th roots of unity", "h", "p")
    command("solve-branches", cmd_solve_branches, "branch vector fixing the h-th roots of unity", "h", "p")
    command("brute-branches", cmd_brute_branches, "exhaustive branch vector search", "h", "p", "cap")
    rational = command("rational", cmd_rational, "q/p powers of the h-th roots of unity", "h", "p", "q", "l")
    rational.add_argument("--order", choices=["both", "root-first", "power-first"], default="both")

    v = command("verify", cmd_verify, "check every law over a parameter sweep", "cap")
    v.add_argument("--hmax", type=int, default=16)
    v.add_argument("--pmax", type=int, default=16)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 0 for --help and 2 for usage errors
        return EXIT_TRUE if e.code == 0 else EXIT_ERROR
    try:
        return args.func(args)
    except (UsageError, DomainError, OverflowError, KeyError, TypeError) as e:
        print(f"crsys {args.command}: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
