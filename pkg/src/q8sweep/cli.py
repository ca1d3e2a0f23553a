"""Command-line front end.

Subcommands: sweep (prime-range census with parallel workers and CSV/JSON
output), verify (matrix + verdict for one curve), orbit (isomorphy orbit of
one parameter), factor (dump of the entry-polynomial gcd and its splitting).

Exit codes: 0 when everything computed and matched the predictions, 2 when
any comparison flag is false or a sanity condition failed (rows are still
written), 1 on usage or I/O errors.

Determinism: with the same seed and flags the CSV output is byte-identical
across runs and worker counts.  The elapsed_ms column is therefore left
empty unless --timings is given; JSON always carries measured timings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, TextIO

from .cartier import CartierContext, cartier_matrix, gcdall_poly, is_superspecial
from .enumeration import (
    DEFAULT_SEED,
    EnumerationRecord,
    _cz_seed,
    iter_sweep,
    resolve_threads,
)
from .errors import SingularCurve
from .fields import PrimeContext, format_fp2, is_prime, parse_fp2, primes_in_range
from .orbits import aut_class, orbit
from .poly import factor_squarefree, format_poly, roots_in_fp2

CSV_HEADER = (
    "p,p_mod8,p_mod16,p_mod24,deg_gcdall,star_ok,q8_count,g24_superspecial,"
    "g32_superspecial,matches_q8_formula,matches_g24_rule,matches_g32_rule,"
    "elapsed_ms"
)

FULL_VERIFY_PRIME_CAP = 200  # exhaustive oracle is O(p^3); gate big ranges


class _Parser(argparse.ArgumentParser):
    """argparse flavor that exits 1 (not 2) on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _bool_csv(value: Optional[bool]) -> str:
    if value is None:
        return ""
    return "true" if value else "false"


def record_csv_row(rec: EnumerationRecord, timings: bool = False) -> str:
    fields = [
        str(rec.p),
        str(rec.p_mod8),
        str(rec.p_mod16),
        str(rec.p_mod24),
        str(rec.deg_gcdall),
        _bool_csv(rec.star_ok),
        "" if rec.q8_count is None else str(rec.q8_count),
        _bool_csv(rec.g24_superspecial),
        _bool_csv(rec.g32_superspecial),
        _bool_csv(rec.matches_q8_formula),
        _bool_csv(rec.matches_g24_rule),
        _bool_csv(rec.matches_g32_rule),
        f"{rec.elapsed_ms:.3f}" if timings else "",
    ]
    return ",".join(fields)


def record_json_obj(rec: EnumerationRecord, nonresidue: int) -> dict:
    return {
        "p": rec.p,
        "p_mod8": rec.p_mod8,
        "p_mod16": rec.p_mod16,
        "p_mod24": rec.p_mod24,
        "deg_gcdall": rec.deg_gcdall,
        "star_ok": rec.star_ok,
        "q8_count": rec.q8_count,
        "g24_superspecial": rec.g24_superspecial,
        "g32_superspecial": rec.g32_superspecial,
        "matches_q8_formula": rec.matches_q8_formula,
        "matches_g24_rule": rec.matches_g24_rule,
        "matches_g32_rule": rec.matches_g32_rule,
        "elapsed_ms": round(rec.elapsed_ms, 3),
        "seed": rec.seed,
        "nonresidue": nonresidue,
    }


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"q8sweep: error: {name} must be an integer, got {raw!r}")


def _resolve(flag: Optional[int], env_name: str, default: int) -> int:
    if flag is not None:
        return flag
    env = _env_int(env_name)
    return env if env is not None else default


def cmd_sweep(args) -> int:
    start, stop = args.from_, args.to
    if start < 7:
        print("q8sweep: error: --from must be at least 7", file=sys.stderr)
        return 1
    if start >= stop:
        print("q8sweep: error: --from must be smaller than --to", file=sys.stderr)
        return 1
    if args.verify_level == "full" and stop > FULL_VERIFY_PRIME_CAP and not args.allow_big_verify:
        print(
            f"q8sweep: error: --verify-level full with --to > {FULL_VERIFY_PRIME_CAP} "
            "requires --allow-big-verify (exhaustive oracle cost)",
            file=sys.stderr,
        )
        return 1
    threads = resolve_threads(_resolve(args.threads, "Q8SWEEP_THREADS", 0))
    seed = _resolve(args.seed, "Q8SWEEP_SEED", DEFAULT_SEED)

    out: TextIO
    close_out = False
    try:
        if args.output in (None, "-"):
            out = sys.stdout
        else:
            out = open(args.output, "w", encoding="utf-8")
            close_out = True
    except OSError as exc:
        print(f"q8sweep: error: cannot open output: {exc}", file=sys.stderr)
        return 1

    total = len(primes_in_range(start, stop))
    every = max(1, total // 10)
    all_ok = True
    json_objs = []
    try:
        if args.format == "csv":
            print(CSV_HEADER, file=out)
        for i, rec in enumerate(
            iter_sweep(start, stop, threads=threads, verify=args.verify_level, seed=seed),
            start=1,
        ):
            all_ok = all_ok and rec.all_ok
            if args.format == "csv":
                print(record_csv_row(rec, timings=args.timings), file=out)
                out.flush()
            else:
                json_objs.append(record_json_obj(rec, PrimeContext(rec.p).nonresidue))
            if i % every == 0 or i == total:
                print(f"q8sweep: {i}/{total} primes done (p = {rec.p})", file=sys.stderr)
        if args.format == "json":
            json.dump(json_objs, out, indent=2)
            out.write("\n")
    except OSError as exc:
        print(f"q8sweep: error: output failed: {exc}", file=sys.stderr)
        return 1
    finally:
        if close_out:
            out.close()
    return 0 if all_ok else 2


def _load_point(args):
    if not is_prime(args.p) or args.p < 7:
        print(f"q8sweep: error: {args.p} is not a prime >= 7", file=sys.stderr)
        return None
    ctx = PrimeContext(args.p)
    try:
        a = parse_fp2(args.a, ctx)
    except ValueError as exc:
        print(f"q8sweep: error: {exc}", file=sys.stderr)
        return None
    return ctx, a


def cmd_verify(args) -> int:
    loaded = _load_point(args)
    if loaded is None:
        return 1
    ctx, a = loaded
    cctx = CartierContext(ctx)
    try:
        matrix = cartier_matrix(cctx, a)
        ss = is_superspecial(cctx, a)
        cls = aut_class(ctx, a)
        orb = orbit(ctx, a)
    except SingularCurve:
        print("q8sweep: error: singular curve (a = 2 or a = -2)", file=sys.stderr)
        return 1
    print(f"p = {ctx.p} (nonresidue = {ctx.nonresidue})")
    print(f"a = {format_fp2(a)}")
    print(matrix)
    members = ", ".join(format_fp2(m) for m in orb.sorted_members())
    verdict = "true" if ss else "false"
    print(f"superspecial: {verdict}, aut: {cls}, orbit: {{{members}}}")
    return 0


def cmd_orbit(args) -> int:
    loaded = _load_point(args)
    if loaded is None:
        return 1
    ctx, a = loaded
    try:
        orb = orbit(ctx, a)
    except SingularCurve:
        print("q8sweep: error: singular curve (a = 2 or a = -2)", file=sys.stderr)
        return 1
    members = " ".join(format_fp2(m) for m in orb.sorted_members())
    print(f"{members} (size {orb.size})")
    return 0


def cmd_factor(args) -> int:
    if not is_prime(args.p) or args.p < 7:
        print(f"q8sweep: error: {args.p} is not a prime >= 7", file=sys.stderr)
        return 1
    seed = _resolve(args.seed, "Q8SWEEP_SEED", DEFAULT_SEED)
    ctx = PrimeContext(args.p)
    cctx = CartierContext(ctx)
    res = gcdall_poly(cctx)
    print(f"p = {ctx.p} (nonresidue = {ctx.nonresidue}, seed = {seed})")
    print(f"gcdall = {format_poly(res.poly)}")
    print("coefficients (ascending): " + " ".join(str(c) for c in res.poly))
    print(f"degree = {res.deg}")
    print(f"star_ok = {'true' if res.star_ok else 'false'}")
    if not res.star_ok:
        print("diagnostics: " + ", ".join(res.star_diagnostics))
        return 2
    if res.deg == 0:
        return 0
    factors = factor_squarefree(res.poly, ctx.p, seed=_cz_seed(seed, ctx.p))
    print("irreducible factors:")
    for coeffs, _mult in factors.factors:
        piece = list(coeffs)
        d = len(piece) - 1
        if d <= 2:
            roots, _ = roots_in_fp2(piece, ctx, seed=_cz_seed(seed, ctx.p))
            listing = "roots " + ", ".join(format_fp2(r) for r in sorted(roots))
        else:
            listing = "no roots in F_p^2"
        print(f"  {format_poly(piece)} (degree {d}): {listing}")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(
        prog="q8sweep",
        description=(
            "Census of genus-4 superspecial hyperelliptic curves with "
            "quaternion automorphisms over prime fields."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="enumerate all primes in a range")
    sweep.add_argument("--from", dest="from_", type=int, required=True,
                       metavar="P", help="first prime bound (inclusive, >= 7)")
    sweep.add_argument("--to", type=int, required=True, metavar="P",
                       help="last prime bound (exclusive)")
    sweep.add_argument("--threads", type=int, default=None,
                       help="worker count, 0 = all cores (env Q8SWEEP_THREADS)")
    sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    sweep.add_argument("--verify-level", choices=("none", "spot", "full"),
                       default="none", dest="verify_level",
                       help="cross-check against the direct matrix oracle")
    sweep.add_argument("--seed", type=int, default=None,
                       help="factorization randomness seed (env Q8SWEEP_SEED)")
    sweep.add_argument("--output", default=None, metavar="PATH",
                       help="output file, '-' or omitted = stdout")
    sweep.add_argument("--timings", action="store_true",
                       help="fill the elapsed_ms CSV column (breaks byte-stable output)")
    sweep.add_argument("--allow-big-verify", action="store_true",
                       help="permit --verify-level full beyond --to "
                            f"{FULL_VERIFY_PRIME_CAP}")
    sweep.set_defaults(func=cmd_sweep)

    verify = sub.add_parser("verify", help="matrix and verdict for one curve")
    verify.add_argument("-p", type=int, required=True, help="prime modulus")
    verify.add_argument("-a", required=True,
                        help="curve parameter, e.g. '5' or '2+3*w'")
    verify.set_defaults(func=cmd_verify)

    orb = sub.add_parser("orbit", help="isomorphy orbit of one parameter")
    orb.add_argument("-p", type=int, required=True, help="prime modulus")
    orb.add_argument("-a", required=True, help="curve parameter")
    orb.set_defaults(func=cmd_orbit)

    factor = sub.add_parser("factor", help="dump the entry-poly gcd and factors")
    factor.add_argument("-p", type=int, required=True, help="prime modulus")
    factor.add_argument("--seed", type=int, default=None,
                        help="factorization randomness seed (env Q8SWEEP_SEED)")
    factor.set_defaults(func=cmd_factor)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
