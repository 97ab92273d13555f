"""Command-line front end.

Exit codes: 0 success, 1 unreadable or malformed input, 2 rank/degeneracy
problem (or an oracle instance too large), 3 verification failure.
"""

import argparse
import sys
import time
from dataclasses import dataclass, field
from typing import List, Optional

from . import __version__
from .errors import LatticeError, MatrixParseError, RankDeficient, SingularMatrix, TooLarge
from .euclid_basic import basic_basis
from .euclid_fast import fast_basis, lowrank_basis
from .generate import random_instance
from .linalg import det, find_independent_columns, find_independent_rows
from .matfile import dumps, format_matrix, matrix_to_json, parse_matrix
from .matrix import IntMatrix
from .oracles import (DEFAULT_MINOR_CAP, enumerate_parallelepiped, fractionality_bruteforce,
                      is_basis_of, is_basis_of_projected)
from .reduction import column_sqnorms, reduce_result

EXIT_PARSE, EXIT_RANK, EXIT_VERIFY = 1, 2, 3


@dataclass
class RunReport:
    algorithm: str
    basis: IntMatrix
    abs_det: Optional[int]
    pivot_order: List[int] = field(default_factory=list)
    iterations: int = 0
    exchanges: int = 0
    max_denominator_bits: int = 0
    wall_time: float = 0.0
    verification: Optional[str] = None
    verification_detail: Optional[str] = None
    reduced_basis: Optional[IntMatrix] = None
    max_sqnorm_before: Optional[int] = None
    max_sqnorm_after: Optional[int] = None

    def to_json(self) -> dict:
        out = {
            "algorithm": self.algorithm,
            "rows": self.basis.nrows,
            "rank": self.basis.ncols,
            "basis": matrix_to_json(self.basis),
            "abs_det": None if self.abs_det is None else str(self.abs_det),
            "pivot_order": self.pivot_order,
            "iterations": self.iterations,
            "exchanges": self.exchanges,
            "max_denominator_bits": self.max_denominator_bits,
            "wall_time_s": round(self.wall_time, 6),
        }
        if self.verification is not None:
            out["verification"] = self.verification
            out["verification_detail"] = self.verification_detail
        if self.reduced_basis is not None:
            out["reduced_basis"] = matrix_to_json(self.reduced_basis)
            out["max_column_sqnorm"] = str(self.max_sqnorm_before)
            out["max_column_sqnorm_reduced"] = str(self.max_sqnorm_after)
        return out

    def to_text(self) -> str:
        lines = ["algorithm: %s" % self.algorithm, "basis (columns are basis vectors):"]
        lines += ["  " + " ".join(str(v) for v in row) for row in self.basis.rows]
        if self.abs_det is not None:
            lines.append("|det|: %d" % self.abs_det)
        if self.pivot_order:
            lines.append("pivot order: %s" % " ".join(str(p) for p in self.pivot_order))
        lines.append("iterations: %d  exchanges: %d" % (self.iterations, self.exchanges))
        lines.append("max denominator bits: %d" % self.max_denominator_bits)
        if self.reduced_basis is not None:
            lines.append("reduced basis:")
            lines += ["  " + " ".join(str(v) for v in row) for row in self.reduced_basis.rows]
            lines.append("max column norm^2: %d -> %d" % (self.max_sqnorm_before, self.max_sqnorm_after))
        if self.verification is not None:
            lines.append("verify: %s (%s)" % (self.verification, self.verification_detail))
        lines.append("time: %.4fs" % self.wall_time)
        return "\n".join(lines)


def _load(path: str, transpose: bool) -> IntMatrix:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
    except OSError as exc:
        raise MatrixParseError(str(exc)) from None
    return parse_matrix(text, transpose=transpose)


def cmd_basis(args) -> int:
    A = _load(args.file, args.transpose)
    t0 = time.perf_counter()
    rank_A = len(find_independent_columns(A))
    lowrank = rank_A < A.nrows
    if lowrank and (args.basic or args.lowrank == "never"):
        raise RankDeficient("rank(A) = %d < %d rows" % (rank_A, A.nrows))

    if args.basic:
        S, trace = basic_basis(A)
        report = RunReport("basic", S, abs(det(S)), iterations=len(trace.steps),
                           exchanges=trace.exchange_count)
        rows = list(range(A.nrows))
        result = None
    else:
        result = lowrank_basis(A) if lowrank else fast_basis(A)
        S = result.S
        rows = list(result.projection_rows)
        abs_det = abs(det(S.select_rows(rows))) if S.ncols else 1
        report = RunReport("lowrank" if lowrank else "fast", S, abs_det,
                           pivot_order=list(result.pivot_order), iterations=len(result.trace),
                           max_denominator_bits=result.stats.max_denominator_bits)
    if args.reduce:
        if result is None:
            print("--reduce needs the fast algorithm; ignored with --basic", file=sys.stderr)
        else:
            R = reduce_result(result)
            report.reduced_basis = R
            report.max_sqnorm_before = max(column_sqnorms(S), default=0)
            report.max_sqnorm_after = max(column_sqnorms(R), default=0)
    report.wall_time = time.perf_counter() - t0

    code = 0
    if args.verify:
        if lowrank:
            check = is_basis_of_projected(S, A, rows, minor_cap=args.minor_cap)
        else:
            check = is_basis_of(S, A, minor_cap=args.minor_cap)
        if check.ok and report.reduced_basis is not None:
            if lowrank:
                check2 = is_basis_of_projected(report.reduced_basis, A, rows, minor_cap=args.minor_cap)
            else:
                check2 = is_basis_of(report.reduced_basis, A, minor_cap=args.minor_cap)
            if not check2.ok:
                check = check2
        if not check.ok:
            report.verification = "fail"
            code = EXIT_VERIFY
        else:
            report.verification = "membership-only" if check.membership_only else "pass"
        report.verification_detail = check.describe()

    print(dumps(report.to_json()) if args.json else report.to_text())
    return code


def cmd_verify(args) -> int:
    S = _load(args.basis, args.transpose)
    A = _load(args.file, args.transpose)
    if S.nrows != A.nrows:
        raise MatrixParseError("basis has %d rows, generators %d" % (S.nrows, A.nrows))
    if S.ncols == S.nrows:
        check = is_basis_of(S, A, minor_cap=args.minor_cap)
    else:
        if len(find_independent_columns(S)) != S.ncols:
            raise RankDeficient("basis columns are dependent")
        check = is_basis_of_projected(S, A, find_independent_rows(S), minor_cap=args.minor_cap)
    verdict = "fail" if not check.ok else ("membership-only" if check.membership_only else "pass")
    if args.json:
        print(dumps({"verification": verdict, "detail": check.describe(),
                     "abs_det_basis": str(check.det_basis),
                     "abs_det_lattice": None if check.det_lattice is None else str(check.det_lattice),
                     "failing_columns": check.failing_columns}))
    else:
        print("%s: %s" % (verdict, check.describe()))
    return 0 if check.ok else EXIT_VERIFY


def cmd_det(args) -> int:
    M = _load(args.file, args.transpose)
    value = det(M)
    print(dumps({"det": str(value)}) if args.json else value)
    return 0


def cmd_frac(args) -> int:
    M = _load(args.file, args.transpose)
    if not 1 <= args.index <= M.ncols:
        raise MatrixParseError("index %d out of range 1..%d" % (args.index, M.ncols))
    value = fractionality_bruteforce(M, args.index - 1, cap=args.cap)
    print(dumps({"index": args.index, "fractionality": str(value)}) if args.json else value)
    return 0


def cmd_enumerate(args) -> int:
    M = _load(args.file, args.transpose)
    census = enumerate_parallelepiped(M, cap=args.cap)
    if args.json:
        out = {"count": census.count}
        if args.points:
            out["points"] = [[str(v) for v in p] for p in census.points]
        print(dumps(out))
    else:
        print(census.count)
        if args.points:
            for p in census.points:
                print(" ".join(str(v) for v in p))
    return 0


def cmd_gen(args) -> int:
    M = random_instance(args.d, args.n, args.max_entry, args.seed, rank=args.rank)
    text = format_matrix(M)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="latticebasis",
        description="Lattice bases via the generalized Euclidean algorithm.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, json=True):
        sp.add_argument("file", help="matrix file ('-' for stdin); generators are columns")
        sp.add_argument("--transpose", action="store_true", help="read each row as a generator")
        if json:
            sp.add_argument("--json", action="store_true", help="emit JSON")

    sp = sub.add_parser("basis", help="compute a basis of the lattice spanned by the columns")
    common(sp)
    alg = sp.add_mutually_exclusive_group()
    alg.add_argument("--fast", action="store_true", help="fast algorithm (default)")
    alg.add_argument("--basic", action="store_true", help="reference exchange algorithm")
    sp.add_argument("--lowrank", choices=["auto", "never"], default="auto",
                    help="use the lower-rank variant when rank(A) < rows (default: auto)")
    sp.add_argument("--reduce", action="store_true", help="apply the size-reduction postprocessor")
    sp.add_argument("--verify", action="store_true", help="check the result against brute-force oracles")
    sp.add_argument("--minor-cap", type=int, default=DEFAULT_MINOR_CAP,
                    help="max number of minors for the determinant check (default %(default)s)")
    sp.set_defaults(func=cmd_basis)

    sp = sub.add_parser("verify", help="check that BASIS generates the lattice of FILE")
    sp.add_argument("basis", help="basis matrix file")
    common(sp)
    sp.add_argument("--minor-cap", type=int, default=DEFAULT_MINOR_CAP)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("det", help="exact determinant of a square matrix")
    common(sp)
    sp.set_defaults(func=cmd_det)

    sp = sub.add_parser("frac", help="fractionality of a coordinate (brute force)")
    common(sp)
    sp.add_argument("index", type=int, help="1-based column index")
    sp.add_argument("--cap", type=int, default=10 ** 5, help="enumeration cap")
    sp.set_defaults(func=cmd_frac)

    sp = sub.add_parser("enumerate", help="count integer points of the fundamental parallelepiped")
    common(sp)
    sp.add_argument("--points", action="store_true", help="also list the points")
    sp.add_argument("--cap", type=int, default=10 ** 5, help="enumeration cap")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("gen", help="generate a reproducible random instance")
    sp.add_argument("d", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("--max-entry", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--rank", type=int, default=None, help="default: min(d, n)")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MatrixParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except (RankDeficient, SingularMatrix, TooLarge) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_RANK
    except (LatticeError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
