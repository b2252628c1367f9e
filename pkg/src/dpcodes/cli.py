"""Command-line front end.

Exit codes: 0 success/pass, 1 verification failed, 2 infeasible parameters,
3 inconclusive search, 4 usage error.
"""

from __future__ import annotations

import argparse
import sys
from math import comb

from . import __version__
from .anticodes import parse_anticode_spec
from .bounds import feasibility_report, q0_bounds
from .codeio import atomic_write, format_manifest, parse_code_file, write_code_file
from .designs import affine_plane_s239, fano_plane, gs_construct_2_3, gs_verify, steiner_verify
from .errors import (
    CodeError, InvariantViolation, NotPrimePower, ParamsInfeasible, ParamsOutOfRange, ParseError,
    PreconditionViolated,
)
from .families import (
    FamilyCode, f1_from_mds, f5_construct, f5_construct_w3, mds_cw_construct, mds_cw_union,
    moa_cw_construct, moa_reduce,
)
from .galois import is_prime_power
from .oracle import SearchBudget, max_anticode_search, max_code_search, perfect_code_search
from .report import VerificationReport
from .space import Anticode, Code, support
from .verifier import classify_family, diameter_perfect_check, perfect_check, support_regularity

EXIT_OK, EXIT_FAIL, EXIT_INFEASIBLE, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3, 4

FAMILY_CHOICES = ("gs23", "mds-cw", "mds-cw-union", "f1", "f5", "f5w3", "moa", "moa-puncture",
                  "moa-shorten", "fano", "s239")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.verb} --family {args.family} needs {' '.join(missing)}")


def _build(args) -> tuple[Code, dict]:
    fam = args.family
    if fam == "gs23":
        _need(args, "q")
        g = gs_construct_2_3(args.q)
        return g.code, {"family": "F3", "construction": "gs23", "t": 2, "w": 3, "n": args.q + 1, "q": args.q,
                        "size": len(g.code)}
    if fam in ("fano", "s239"):
        s = fano_plane() if fam == "fano" else affine_plane_s239()
        return s.to_code(), {"family": "S", "construction": fam, "t": s.t, "w": s.w, "n": s.n,
                             "blocks": len(s)}
    if fam == "mds-cw":
        _need(args, "n", "w", "q")
        fc = mds_cw_construct(args.n, args.w, args.q)
    elif fam == "mds-cw-union":
        _need(args, "n", "w", "q1", "q2")
        fc = mds_cw_union(mds_cw_construct(args.n, args.w, args.q1), mds_cw_construct(args.n, args.w, args.q2))
    elif fam == "f1":
        _need(args, "n", "t", "q")
        fc = f1_from_mds(args.t, args.n, args.q - 1)
    elif fam == "f5":
        _need(args, "n", "w")
        fc = f5_construct(args.n, args.w)
    elif fam == "f5w3":
        _need(args, "n")
        fc = f5_construct_w3(args.n)
    else:
        _need(args, "n", "t", "l", "q")
        fc = moa_cw_construct(args.n, args.t, args.l, args.q)
        if fam != "moa":
            fc = moa_reduce(fc, fam.split("-")[1])
    return fc.code, fc.manifest_entries()


def _certify_built(code: Code, manifest: dict, args) -> VerificationReport:
    fam = args.family
    if fam == "gs23":
        rep = gs_verify(code, 2)
        rep.extend(diameter_perfect_check(code, parse_anticode_spec(f"s:{code.n},3,2", code.q).build()))
        return rep
    if fam in ("fano", "s239"):
        blocks = [tuple(i + 1 for i in sorted(support(x))) for x in code.words]
        return steiner_verify(blocks, 2, 3, code.n)
    fc = FamilyCode(code, manifest["family"], code.n, int(manifest["d"]), code.weight, code.q)
    return fc.certify()


def cmd_construct(args) -> int:
    code, manifest = _build(args)
    report = _certify_built(code, manifest, args)
    manifest = {"tool": "dpcodes", "version": __version__, "verb": "construct",
                "family_arg": args.family, **manifest,
                "certified": "pass" if report.overall else "fail"}
    if args.out:
        write_code_file(args.out, code, [f"{k}={v}" for k, v in manifest.items()])
        atomic_write(args.out + ".manifest", format_manifest(manifest))
    print(f"constructed {len(code)} codewords n={code.n} w={code.weight} q={code.q}")
    if args.report:
        print(report.render(), end="")
    return EXIT_OK if report.overall else EXIT_FAIL


def cmd_verify(args) -> int:
    code = parse_code_file(args.code, cls=Code)
    report = VerificationReport(subject=args.code)
    modes = 0
    if args.anticode or args.anticode_file:
        modes += 1
        if args.anticode_file:
            a = parse_code_file(args.anticode_file, cls=Anticode)
        else:
            a = parse_anticode_spec(args.anticode, code.q).build()
        try:
            report.extend(diameter_perfect_check(code, a))
        except PreconditionViolated as exc:
            print(f"precondition violated: {exc}", file=sys.stderr)
            report.add("precondition", "code-anticode-bound", "satisfied", "violated", passed=False)
    elif args.diameter_perfect:
        raise UsageError("--diameter-perfect needs --anticode or --anticode-file")
    if args.perfect is not None:
        modes += 1
        report.extend(perfect_check(code, args.perfect))
    if args.per_support is not None:
        modes += 1
        report.extend(support_regularity(code, args.per_support, args.oa_strength))
    if args.gs is not None:
        modes += 1
        report.extend(gs_verify(code, args.gs))
    if args.steiner is not None:
        modes += 1
        blocks = [tuple(i + 1 for i in sorted(support(x))) for x in code.words]
        report.extend(steiner_verify(blocks, args.steiner, code.weight, code.n))
    if args.classify:
        modes += 1
        d = code.min_distance if len(code) >= 2 else code.n
        for m in classify_family(code.n, d, code.weight, code.q, len(code)):
            print(f"FAMILY {m.label} anticode={m.anticode.label() if m.anticode else '-'} {m.note}".rstrip())
    if not modes:
        raise UsageError("verify needs at least one of --anticode, --perfect, --per-support, --gs, --steiner, --classify")
    if report.checks:
        print(report.render(), end="")
    return EXIT_OK if report.overall else EXIT_FAIL


def cmd_search(args) -> int:
    budget = SearchBudget(args.max_nodes, args.time_limit)
    for name in ("n", "w", "q"):
        if getattr(args, name) is None:
            raise UsageError(f"search needs --{name}")
    if args.max_code:
        if args.d is None:
            raise UsageError("--max-code needs --d")
        res = max_code_search(args.n, args.d, args.w, args.q, budget)
        what = f"A_{args.q}({args.n},{args.d},{args.w})"
    elif args.max_anticode:
        if args.D is None:
            raise UsageError("--max-anticode needs --D")
        res = max_anticode_search(args.n, args.D, args.w, args.q, budget)
        what = f"max anticode, diameter {args.D}, in J_{args.q}({args.n},{args.w})"
    else:
        if args.e is None:
            raise UsageError("--perfect needs --e")
        res = perfect_code_search(args.n, args.w, args.q, args.e, budget)
        what = f"{args.e}-perfect code in J_{args.q}({args.n},{args.w})"
    print(res.value)
    print(f"# {what}: {res.status}, {res.nodes} nodes; {res.reason}", file=sys.stderr)
    if args.out and res.witness is not None:
        manifest = {"tool": "dpcodes", "version": __version__, "verb": "search",
                    "n": args.n, "w": args.w, "q": args.q, **res.manifest()}
        write_code_file(args.out, res.witness, [f"{k}={v}" for k, v in manifest.items()])
        atomic_write(args.out + ".manifest", format_manifest(manifest))
    return EXIT_OK if res.exact else EXIT_INCONCLUSIVE


def cmd_bounds(args) -> int:
    if args.q0:
        if args.w is None or args.n is None:
            raise UsageError("--q0 needs --w and --n")
        b = q0_bounds(args.w, args.n)
        print(f"q0({args.w},{args.n}) lower={b.lower} upper={b.upper} exact={b.exact if b.exact is not None else '-'}")
        return EXIT_OK
    for name in ("n", "d", "w", "q"):
        if getattr(args, name) is None:
            raise UsageError(f"bounds needs --{name}")
    r = feasibility_report(args.n, args.d, args.w, args.q)
    print(r.render_kv() if args.kv else r.render(), end="")
    return EXIT_OK if r.feasible_families else EXIT_INFEASIBLE


def best_construction(n: int, d: int, w: int, q: int) -> tuple[FamilyCode | None, str]:
    """The first applicable construction with exactly these parameters."""
    try:
        if d == w and w >= 2 and is_prime_power(q) and n <= q + 1:
            return mds_cw_construct(n, w, q), "mds-cw"
        if d == w + 1 and 1 <= w <= n - 1:
            if w == 3 and n >= 4 and q >= q0_bounds(3, n).exact:
                fc, label = f5_construct_w3(n), "f5w3"
            elif w == 2 and q >= n:
                fc, label = f5_construct(n, 2), "f5"
            elif q >= 1 + comb(n - 1, w - 1):
                fc, label = f5_construct(n, w), "f5"
            else:
                return None, "-"
            # one codeword per support stays diameter perfect over any larger alphabet
            fc = FamilyCode(Code(fc.code.words, q=q, n=n, weight=w), "F5", n, d, w, q, fc.manifest)
            return fc, label
        if w == n and 1 <= d <= n and is_prime_power(q - 1) and n <= q:
            return f1_from_mds(n - d + 1, n, q - 1), "f1"
        if d < w < n:
            l, t = n - w, w - d + 2
            if is_prime_power(q - 1) and q - 1 >= comb(n, l) and n <= q - 1:
                return moa_cw_construct(n + 1, t, l, q - 1), "moa"
    except (ParamsInfeasible, ParamsOutOfRange, NotPrimePower):
        pass
    return None, "-"


def cmd_catalog(args) -> int:
    budget = SearchBudget(args.max_nodes, args.time_limit)
    header = "n d w q families construction size certified oracle"
    rows = [header]
    print(header)
    for n in range(args.n_min, args.n_max + 1):
        for w in range(1, n + 1):
            for d in range(2, min(2 * w, n) + 1):
                for q in range(3, args.q_max + 1):
                    r = feasibility_report(n, d, w, q)
                    fams = ",".join(r.feasible_families) or "-"
                    fc, label = best_construction(n, d, w, q)
                    size = certified = "-"
                    if fc is not None:
                        size = str(len(fc.code))
                        certified = "pass" if fc.certify().overall else "FAIL"
                    oracle = "-"
                    if args.oracle:
                        try:
                            res = max_code_search(n, d, w, q, budget)
                            oracle = str(res.value) if res.exact else f">={res.value}"
                        except ParamsOutOfRange:
                            oracle = "?"
                    row = f"{n} {d} {w} {q} {fams} {label} {size} {certified} {oracle}"
                    rows.append(row)
                    print(row, flush=True)
    if args.out:
        atomic_write(args.out, "\n".join(rows) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dpcodes", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"dpcodes {__version__}")
    sub = p.add_subparsers(dest="verb", parser_class=_Parser)

    c = sub.add_parser("construct", help="build a code from one of the families")
    c.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    for name in ("n", "w", "q", "t", "l", "q1", "q2"):
        c.add_argument(f"--{name}", type=int)
    c.add_argument("--out", help="code file to write (a .manifest is written next to it)")
    c.add_argument("--report", action="store_true", help="print the certification report")

    v = sub.add_parser("verify", help="certify a code file")
    v.add_argument("--code", required=True)
    v.add_argument("--diameter-perfect", action="store_true")
    v.add_argument("--anticode", help="s:n,w,t | m:n,w,delta | ball:n,w,e | a:n,w,t | abar:n,w,t")
    v.add_argument("--anticode-file")
    v.add_argument("--perfect", type=int, metavar="E")
    v.add_argument("--per-support", type=int, metavar="COUNT")
    v.add_argument("--oa-strength", type=int)
    v.add_argument("--gs", type=int, metavar="T")
    v.add_argument("--steiner", type=int, metavar="T")
    v.add_argument("--classify", action="store_true")

    s = sub.add_parser("search", help="exhaustive search")
    kind = s.add_mutually_exclusive_group(required=True)
    kind.add_argument("--max-code", action="store_true")
    kind.add_argument("--max-anticode", action="store_true")
    kind.add_argument("--perfect", action="store_true")
    for name in ("n", "d", "D", "w", "q", "e"):
        s.add_argument(f"--{name}", type=int)
    s.add_argument("--max-nodes", type=int, default=50_000_000)
    s.add_argument("--time-limit", type=float, default=600.0)
    s.add_argument("--out")

    b = sub.add_parser("bounds", help="feasibility report")
    for name in ("n", "d", "w", "q"):
        b.add_argument(f"--{name}", type=int)
    b.add_argument("--q0", action="store_true", help="print q0(w,n) bounds instead")
    b.add_argument("--kv", action="store_true", help="key=value output")

    g = sub.add_parser("catalog", help="sweep a parameter grid")
    g.add_argument("--n-min", type=int, default=2)
    g.add_argument("--n-max", type=int, default=5)
    g.add_argument("--q-max", type=int, default=4)
    g.add_argument("--oracle", action="store_true", help="also run max_code_search per row")
    g.add_argument("--max-nodes", type=int, default=20_000)
    g.add_argument("--time-limit", type=float, default=5.0)
    g.add_argument("--out")
    return p


COMMANDS = {"construct": cmd_construct, "verify": cmd_verify, "search": cmd_search,
            "bounds": cmd_bounds, "catalog": cmd_catalog}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.verb is None:
            raise UsageError("missing verb: construct | verify | search | bounds | catalog")
        return COMMANDS[args.verb](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParamsInfeasible, ParamsOutOfRange, NotPrimePower) as exc:
        print(f"infeasible parameters: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (ParseError, InvariantViolation, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
