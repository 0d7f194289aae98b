"""Command-line front end: ``genuslab <command> ...``.

Exit codes: 0 success, 1 a verification run found a non-conforming case,
2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import __version__, cache
from .dissonance import derive_constraints, dissonance_feasible, item_vi_checks, proof_constants
from .genus import GenusId
from .identities import (
    conjecture_scan,
    h_triple_closed_form,
    verify_lemma_a1_chain,
    verify_pair_identity,
    verify_sign_lemma_pair,
    verify_sign_lemma_triple,
    zeta_bound_at,
)
from .numeric import MAX_PI_DIGITS
from .signature import ProjectiveProduct, hirzebruch_check, l_number, signature


class UsageError(Exception):
    pass


def _frac(x: Fraction) -> dict:
    return {"numerator": str(x.numerator), "denominator": str(x.denominator)}


def _int_list(text: str) -> list[int]:
    try:
        out = [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not out:
        raise argparse.ArgumentTypeError("expected at least one integer")
    return out


def _genus(text: str) -> GenusId:
    try:
        return GenusId.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# -- commands: each returns (results, conforming, csv_rows) ------------------------------------


def _poly_rows(poly):
    return [{"partition": " ".join(map(str, r["partition"])), "numerator": r["numerator"],
             "denominator": r["denominator"]} for r in poly.to_records()]


def cmd_poly(args, genus):
    if args.weight < 1:
        raise UsageError("--weight must be >= 1")
    poly = cache.cached_genus_polynomial(genus, args.weight, use_cache=not args.no_cache)
    return poly.to_records(), True, _poly_rows(poly)


def cmd_coeff(args):
    lam = sorted(args.partition, reverse=True)
    if min(lam) < 1:
        raise UsageError("partition parts must be positive")
    poly = cache.cached_genus_polynomial(args.genus, sum(lam), use_cache=not args.no_cache)
    c = poly[tuple(lam)]
    rec = {"partition": lam, **_frac(c)}
    return [rec], True, [{"partition": " ".join(map(str, lam)), **_frac(c)}]


def _sign_rows(reports):
    return [{"partition": " ".join(map(str, r.lam)), "numerator": str(r.value.numerator),
             "denominator": str(r.value.denominator), "expected_sign": r.expected_sign,
             "conforms": r.conforms} for r in reports]


def cmd_verify_pair(args):
    if args.max_weight < 2:
        raise UsageError("--max-weight must be >= 2")
    results, rows = [], []
    for rep in verify_sign_lemma_pair(args.max_weight):
        a, b = rep.lam
        ident = verify_pair_identity(b, a)
        rec = {**rep.to_record(), "identity": ident}
        results.append(rec)
        rows.append({**_sign_rows([rep])[0], "identity": ident})
    ok = all(r["conforms"] and r["identity"] for r in results)
    return results, ok, rows


def cmd_verify_triple(args):
    if args.max_weight < 3:
        raise UsageError("--max-weight must be >= 3")
    results, rows = [], []
    for rep in verify_sign_lemma_triple(args.max_weight):
        closed = h_triple_closed_form(*rep.lam) == rep.value
        results.append({**rep.to_record(), "closed_form": closed})
        rows.append({**_sign_rows([rep])[0], "closed_form": closed})
    ok = all(r["conforms"] and r["closed_form"] for r in results)
    return results, ok, rows


def _check_digits(d):
    if not 1 <= d <= MAX_PI_DIGITS:
        raise UsageError(f"--digits must be in 1..{MAX_PI_DIGITS}")


def cmd_verify_zeta(args):
    _check_digits(args.digits)
    if not 1 <= args.min_n <= args.max_n:
        raise UsageError("need 1 <= --min-n <= --max-n")
    results = []
    for n in range(args.min_n, args.max_n + 1):
        v = zeta_bound_at(n, args.digits)
        results.append({"n": n, "s": 2 * n, "verdict": "true" if v else ("indeterminate" if v is None else "false")})
    ok = all(r["verdict"] == "true" for r in results)
    return results, ok, results


def cmd_verify_a1(args):
    _check_digits(args.digits)
    if args.i is not None or args.j is not None:
        if args.i is None or args.j is None or min(args.i, args.j) < 1:
            raise UsageError("--i and --j must both be given and >= 1")
        pairs = [(args.i, args.j)]
    else:
        if args.max_weight < 2:
            raise UsageError("--max-weight must be >= 2")
        pairs = [(i, w - i) for w in range(2, args.max_weight + 1) for i in range(1, w // 2 + 1)]
    results, rows = [], []
    for i, j in pairs:
        rep = verify_lemma_a1_chain(i, j, args.digits, args.a4_reading)
        results.append(rep.to_record())
        rows.append({"i": i, "j": j, **{k: v for k, v in rep.steps.items()},
                     "a4_sign": rep.a4_sign, "exact_sign": rep.exact_sign})
    ok = all(r["exact_sign"] == -1 and r["a1_matches_exact"] for r in results)
    return results, ok, rows


def cmd_verify_item_vi(args):
    if args.bound < 1:
        raise UsageError("--bound must be >= 1")
    n_values = range(args.n, (args.n_max or args.n) + 1)
    ells = range(args.ell, (args.ell_max or args.ell) + 1)
    results = []
    for n in n_values:
        for ell in ells:
            if n < 2 or ell < 2:
                raise UsageError("--n and --ell must be >= 2")
            checks = item_vi_checks(n, ell, args.bound)
            results.append({"n": n, "ell": ell, "holds": all(c.holds for c in checks),
                            "checks": [c.to_record() for c in checks]})
    rows = [{"n": r["n"], "ell": r["ell"], "holds": r["holds"]} for r in results]
    return results, all(r["holds"] for r in results), rows


def cmd_scan_conjecture(args):
    if args.max_weight < 1:
        raise UsageError("--max-weight must be >= 1")
    reports = conjecture_scan(args.genus, args.max_weight, args.max_parts)
    results = [r.to_record() for r in reports]
    # the A-hat pattern is exploratory output only
    ok = True if args.genus is GenusId.A_HAT else all(r.conforms for r in reports)
    return results, ok, _sign_rows(reports)


def _check_ns(n, s):
    if s % 2:
        raise UsageError("--s must be even")
    if not 1 <= s <= 2 * n - 1:
        raise UsageError("need 1 <= s <= 2n - 1")


def cmd_diss_feasible(args):
    _check_ns(args.n, args.s)
    f = dissonance_feasible(args.n, args.s, args.shift_max)
    rec = f.to_record()
    row = {**rec, "decomposition": " ".join(map(str, f.decomposition))}
    return [rec], True, [row]


def cmd_diss_scan(args):
    s_min = args.s if args.s is not None else 2
    s_max = args.s if args.s is not None else args.s_max
    if s_max is None:
        raise UsageError("give --s or --s-max")
    if s_min % 2 and args.s is not None:
        raise UsageError("--s must be even")
    if args.n_max < 1:
        raise UsageError("--n-max must be >= 1")
    rows_out = derive_constraints(s_max, args.n_max, s_min=s_min, n_min=args.n_min, shift_max=args.shift_max)
    results, csv_rows = [], []
    for row in rows_out:
        rec = row.to_record()
        rec["witnesses"] = [row.witnesses[n].to_record() for n in sorted(row.witnesses) if n >= args.n_min]
        for n_check in sorted({row.threshold_n, row.sharp_n} - {None}):
            if n_check in row.witnesses:
                rec.setdefault("threshold_check", []).append(row.witnesses[n_check].to_record())
        results.append(rec)
        lo = max(args.n_min, row.s // 2 + 1)
        for n in range(lo, args.n_max + 1):
            f = row.witnesses.get(n)
            csv_rows.append({"n": n, "s": row.s, "feasible": f is None,
                             "witness": "" if f is None else f.witness,
                             "decomposition": "" if f is None else " ".join(map(str, f.decomposition))})
    summary = []
    for rec in results:
        line = {"s": rec["s"], "min_feasible_n": rec["min_feasible_n"] or "none",
                "stable": rec["eventually_stable"],
                "threshold_n": rec["threshold_n"] or "none", "matches_threshold": rec["matches_threshold"]}
        for chk in rec.get("threshold_check", []):
            line[f"n={chk['n']}"] = f"infeasible, witness {chk['witness']} = " + "+".join(map(str, chk["decomposition"]))
        summary.append(line)
    return results, True, csv_rows, summary


def cmd_diss_constants(args):
    if args.s % 2:
        raise UsageError("--s must be even")
    if not 0 < args.s < 2 * args.n:
        raise UsageError("need 0 < s < 2n")
    rec = proof_constants(args.n, args.s, args.shift_max).to_record()
    row = {k: (f"{Fraction(int(v['numerator']), int(v['denominator']))}" if isinstance(v, dict) else v)
           for k, v in rec.items()}
    return [rec], True, [row]


def cmd_signature(args):
    m = ProjectiveProduct(tuple(args.factors))
    sig = signature(m)
    rec = {"factors": list(m.factors), "dimension": m.dimension, "signature": sig}
    if m.dimension % 4 == 0:
        ln = l_number(m)
        rec.update({"l_number": _frac(ln), "hirzebruch_check": hirzebruch_check(m)})
        ok = rec["hirzebruch_check"]
    else:
        rec.update({"l_number": None, "hirzebruch_check": None})
        ok = True
    row = {**rec, "factors": " ".join(map(str, m.factors)),
           "l_number": "" if rec["l_number"] is None else str(l_number(m))}
    return [rec], ok, [row]


def cmd_cache(args):
    if args.action == "clear":
        n = cache.clear()
        rec = {"action": "clear", "removed": n}
    else:
        rec = {"action": "info", **cache.info()}
        rec["entries"] = list(rec["entries"])
    row = {k: (" ".join(v) if isinstance(v, list) else v) for k, v in rec.items()}
    return [rec], True, [row]


# -- parser ------------------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _fmt(p):
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="genuslab", description="Exact L-genus coefficients, sign checks and dimension-set calculus.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, genus in (("lpoly", GenusId.L), ("ahat", GenusId.A_HAT)):
        p = sub.add_parser(name, help=f"print the {genus.value} polynomial of a weight")
        p.add_argument("--weight", type=int, required=True)
        p.add_argument("--genus", type=_genus, default=genus, help=argparse.SUPPRESS)
        p.add_argument("--no-cache", action="store_true")
        _fmt(p)

    p = sub.add_parser("coeff", help="one coefficient h_lambda")
    p.add_argument("--genus", type=_genus, default=GenusId.L)
    p.add_argument("--partition", type=_int_list, required=True, help="e.g. 2,1,1")
    p.add_argument("--no-cache", action="store_true")
    _fmt(p)

    verify = sub.add_parser("verify", help="exact verification runs")
    vsub = verify.add_subparsers(dest="what", required=True, parser_class=_Parser)
    p = vsub.add_parser("pair")
    p.add_argument("--max-weight", type=int, default=30)
    _fmt(p)
    p = vsub.add_parser("triple")
    p.add_argument("--max-weight", type=int, default=20)
    _fmt(p)
    p = vsub.add_parser("zeta-bound")
    p.add_argument("--max-n", "--n", dest="max_n", type=int, default=10)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--digits", type=int, default=20)
    _fmt(p)
    p = vsub.add_parser("a1-chain")
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--max-weight", type=int, default=10)
    p.add_argument("--digits", type=int, default=30)
    p.add_argument("--a4-reading", choices=("corrected", "literal"), default="corrected")
    _fmt(p)
    p = vsub.add_parser("item-vi")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--n-max", type=int)
    p.add_argument("--ell", type=int, default=8)
    p.add_argument("--ell-max", type=int)
    p.add_argument("--bound", type=int, default=1000)
    _fmt(p)

    scan = sub.add_parser("scan", help="exploratory scans")
    ssub = scan.add_subparsers(dest="what", required=True, parser_class=_Parser)
    p = ssub.add_parser("conjecture")
    p.add_argument("--genus", type=_genus, default=GenusId.L)
    p.add_argument("--max-weight", type=int, default=13)
    p.add_argument("--max-parts", type=int)
    _fmt(p)

    diss = sub.add_parser("dissonance", help="stabilization feasibility calculus")
    dsub = diss.add_subparsers(dest="what", required=True, parser_class=_Parser)
    p = dsub.add_parser("feasible")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--shift-max", type=int, default=19)
    _fmt(p)
    p = dsub.add_parser("scan")
    p.add_argument("--s", type=int)
    p.add_argument("--s-max", type=int)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--shift-max", type=int, default=19)
    _fmt(p)
    p = dsub.add_parser("constants")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, default=20)
    p.add_argument("--shift-max", type=int, default=19)
    _fmt(p)

    p = sub.add_parser("signature", help="signature vs L-number of a product of projective spaces")
    p.add_argument("--factors", type=_int_list, required=True, help="complex dimensions, e.g. 2,4")
    _fmt(p)

    p = sub.add_parser("cache", help="inspect or clear the polynomial cache")
    p.add_argument("action", choices=("clear", "info"))
    _fmt(p)
    return parser


def _dispatch(args):
    c = args.command
    if c in ("lpoly", "ahat"):
        return cmd_poly(args, args.genus)
    if c == "coeff":
        return cmd_coeff(args)
    if c == "verify":
        return {"pair": cmd_verify_pair, "triple": cmd_verify_triple, "zeta-bound": cmd_verify_zeta,
                "a1-chain": cmd_verify_a1, "item-vi": cmd_verify_item_vi}[args.what](args)
    if c == "scan":
        return cmd_scan_conjecture(args)
    if c == "dissonance":
        return {"feasible": cmd_diss_feasible, "scan": cmd_diss_scan, "constants": cmd_diss_constants}[args.what](args)
    if c == "signature":
        return cmd_signature(args)
    if c == "cache":
        return cmd_cache(args)
    raise UsageError(f"unknown command {c}")


def _parameters(args) -> dict:
    out = {}
    for k, v in sorted(vars(args).items()):
        if k in ("format", "command", "what"):
            continue
        out[k] = v.value if isinstance(v, GenusId) else v
    return out


def _plain(command, conforming, rows) -> str:
    lines = [f"# {command}"]
    for r in rows:
        lines.append("  ".join(f"{k}={v}" for k, v in r.items()))
    lines.append(f"conforming: {'yes' if conforming else 'NO'}")
    return "\n".join(lines) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    fields = list(rows[0].keys()) if rows else ["empty"]
    for r in rows:
        for k in r:
            if k not in fields:
                fields.append(k)
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        out = _dispatch(args)
    except UsageError as exc:
        print(f"genuslab: error: {exc}", file=sys.stderr)
        return 2
    results, conforming, rows = out[:3]
    plain_rows = out[3] if len(out) > 3 else rows
    command = " ".join(x for x in (args.command, getattr(args, "what", None)) if x)
    if args.format == "json":
        report = {"command": command, "parameters": _parameters(args), "results": results,
                  "conforming": conforming, "version": __version__}
        stdout.write(json.dumps(report, indent=2) + "\n")
    elif args.format == "csv":
        stdout.write(_csv(rows))
    else:
        stdout.write(_plain(command, conforming, plain_rows))
    return 0 if conforming else 1


def main() -> None:
    sys.exit(run())
