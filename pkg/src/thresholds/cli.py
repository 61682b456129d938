"""Command-line front end.

One subcommand per capability: ``lct``, ``fpt``, ``nu``, ``tau``, ``fjump``,
``newton``, ``asym``, ``compare``, ``ordinary``.  Reports are deterministic;
JSON output carries ``"schema": 1`` and renders every rational as a
``"num/den"`` string.  Floating point appears only in explicitly labeled
``approx`` fields of asymptotic reports.

Exit codes: 0 success, 2 malformed input, 3 budget exhaustion (always) or
uncertified results under ``--strict``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from thresholds import asymptotic, frobenius, redmodp, testideal
from thresholds.lct0 import ThresholdResult
from thresholds.newton import (
    INFINITY,
    MonomialIdeal,
    check_amgm,
    lct_monomial,
    multiplicity_monomial,
)
from thresholds.rings import (
    BudgetExceededError,
    ParseError,
    Polynomial,
    Ring,
    infer_ring,
    parse_polynomial,
    render_polynomial,
)


def fmt_q(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _interval_dict(r: ThresholdResult) -> dict:
    return {
        "lo": fmt_q(r.lo),
        "hi": fmt_q(r.hi),
        "certified": r.certified,
        "method": r.method,
    }


def _parse_gens(text: str, p: int) -> list:
    """Comma-separated generator list over F_p."""
    pieces = [s.strip() for s in text.split(",") if s.strip()]
    if not pieces:
        raise ParseError("empty generator list", 0)
    ring = infer_ring("+".join(pieces), "Fp", p)
    return [parse_polynomial(s, ring) for s in pieces]


def _add_common(sub):
    sub.add_argument("--format", choices=("json", "text"), default="text")
    sub.add_argument("--strict", action="store_true")
    sub.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="thresholds",
        description="Exact singularity thresholds: log canonical and F-pure.",
    )
    sp = ap.add_subparsers(dest="command", required=True)

    s = sp.add_parser("lct", help="log canonical threshold of a monomial ideal")
    s.add_argument("--monomial", required=True, metavar="GENS")
    _add_common(s)

    s = sp.add_parser("fpt", help="F-pure threshold enclosure")
    s.add_argument("--poly", required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--e", type=int, default=3, help="largest Frobenius level used")
    _add_common(s)

    s = sp.add_parser("nu", help="largest i with a^i outside m^[p^e]")
    s.add_argument("--poly", required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--e", type=int, required=True)
    _add_common(s)

    s = sp.add_parser("tau", help="test ideal tau(a^lambda)")
    s.add_argument("--poly", required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--lambda", dest="lam", required=True, metavar="NUM/DEN")
    s.add_argument("--e", type=int, default=5, help="chain length cap")
    _add_common(s)

    s = sp.add_parser("fjump", help="F-jumping numbers on a rational grid")
    s.add_argument("--poly", required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--grid", type=int, required=True)
    s.add_argument("--lambda", dest="lam", default="1", metavar="NUM/DEN",
                   help="right end of the scanned interval")
    s.add_argument("--e", type=int, default=5)
    _add_common(s)

    s = sp.add_parser("newton", help="Newton polyhedron report for a monomial ideal")
    s.add_argument("--monomial", required=True, metavar="GENS")
    _add_common(s)

    s = sp.add_parser("asym", help="golden-ratio graded-sequence convergence table")
    s.add_argument("--mmax", type=int, default=2048)
    _add_common(s)

    s = sp.add_parser("compare", help="char-0 vs char-p thresholds for a diagonal")
    s.add_argument("--poly", required=True, help="diagonal polynomial over Q")
    s.add_argument("--pmax", type=int, default=100)
    s.add_argument("--e", type=int, default=3)
    _add_common(s)

    s = sp.add_parser("ordinary", help="ordinarity of a plane cubic over F_p")
    s.add_argument("--poly", required=True)
    s.add_argument("--p", type=int, required=True)
    _add_common(s)

    return ap


# ----------------------------------------------------------------------
# Subcommand bodies: each returns (report dict, certified flag)
# ----------------------------------------------------------------------

def _cmd_lct(args):
    ideal = MonomialIdeal.parse(args.monomial)
    value = lct_monomial(ideal)
    if value == INFINITY:
        raise ValueError("improper ideal: threshold is infinite")
    return {"lct": fmt_q(value), "method": "LP"}, True


def _cmd_fpt(args):
    gens = _parse_gens(args.poly, args.p)
    ctx = frobenius.FrobeniusContext(args.p, gens[0].ring.nvars, e_max=args.e)
    enc = frobenius.fpt_enclosure(gens, ctx)
    return {"fpt": _interval_dict(enc), "p": args.p}, enc.certified


def _cmd_nu(args):
    gens = _parse_gens(args.poly, args.p)
    return {"nu": frobenius.nu(gens, args.e), "p": args.p, "e": args.e}, True


def _cmd_tau(args):
    gens = _parse_gens(args.poly, args.p)
    res = testideal.tau(gens, Fraction(args.lam), e_max=args.e)
    return {
        "lambda": fmt_q(res.lam),
        "p": args.p,
        "generators": [render_polynomial(g) for g in res.ideal.groebner()],
        "stabilized": res.stabilized,
        "e_used": res.e_used,
    }, res.stabilized


def _cmd_fjump(args):
    gens = _parse_gens(args.poly, args.p)
    rep = testideal.fjump_scan(gens, args.grid, Fraction(args.lam), e_max=args.e)
    return {
        "p": args.p,
        "grid": rep.grid,
        "resolution": fmt_q(rep.resolution),
        "jumps": [fmt_q(j) for j in rep.jumps],
        "certified": rep.certified,
    }, rep.certified


def _cmd_newton(args):
    ideal = MonomialIdeal.parse(args.monomial)
    value = lct_monomial(ideal)
    report = {
        "generators": [list(g) for g in ideal.gens],
        "lct": None if value == INFINITY else fmt_q(value),
        "m_primary": ideal.is_m_primary(),
    }
    if ideal.is_m_primary():
        report["multiplicity"] = multiplicity_monomial(ideal)
        report["amgm_holds"] = check_amgm(ideal)
    return report, True


def _cmd_asym(args):
    est = asymptotic.golden_ratio_demo(args.mmax)
    return {
        "samples": [
            {"m": m, "value": fmt_q(v), "approx": float(v)}
            for m, v in est.samples
        ],
        "limit_lo": fmt_q(est.limit_lo),
        "limit_hi": fmt_q(est.limit_hi),
        "tag": est.tag,
    }, True


def _diagonal_exponents(text: str) -> list:
    ring = infer_ring(text)
    f = parse_polynomial(text, ring)
    exps = []
    seen_vars = set()
    for exp, c in sorted(f.terms.items()):
        nz = [i for i, x in enumerate(exp) if x]
        if len(nz) != 1 or c != 1 or nz[0] in seen_vars:
            raise ValueError("compare expects a diagonal x1^a1 + ... + xn^an")
        seen_vars.add(nz[0])
        exps.append(exp[nz[0]])
    return exps


def _cmd_compare(args):
    from thresholds.rings import is_prime

    exps = _diagonal_exponents(args.poly)
    primes = [p for p in range(2, args.pmax + 1) if is_prime(p)]
    rows = redmodp.compare_diagonal(exps, primes, e_max=args.e)
    out = []
    ok = True
    for r in rows:
        ok = ok and (r.relation != redmodp.INCONCLUSIVE)
        out.append({
            "p": r.p,
            "fpt": _interval_dict(r.fpt),
            "lct0": fmt_q(r.lct0),
            "relation": r.relation,
            "residue": r.residue,
        })
    return {"rows": out}, ok


def _cmd_ordinary(args):
    gens = _parse_gens(args.poly, args.p)
    if len(gens) != 1:
        raise ValueError("ordinary expects a single cubic")
    f = gens[0]
    ordinary = frobenius.is_ordinary_cubic(f)
    return {
        "p": args.p,
        "ordinary": ordinary,
        "cone_fpt": fmt_q(frobenius.fpt_cubic_cone(f)),
    }, True


_COMMANDS = {
    "lct": _cmd_lct,
    "fpt": _cmd_fpt,
    "nu": _cmd_nu,
    "tau": _cmd_tau,
    "fjump": _cmd_fjump,
    "newton": _cmd_newton,
    "asym": _cmd_asym,
    "compare": _cmd_compare,
    "ordinary": _cmd_ordinary,
}


def _render_text(report: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for key, value in report.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_render_text(value, indent + 1))
        elif isinstance(value, list):
            shown = " ".join(
                json.dumps(v, sort_keys=True) if isinstance(v, dict) else str(v)
                for v in value
            )
            lines.append(f"{pad}{key}: {shown}")
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(lines)


def _apply_budget_env():
    raw = os.environ.get("THRESHOLDS_BUDGET")
    if not raw:
        return
    try:
        cap = int(raw)
        if cap < 1:
            raise ValueError
    except ValueError:
        raise ValueError(f"THRESHOLDS_BUDGET must be a positive integer, got {raw!r}")
    frobenius.DEFAULT_BOX_BUDGET = cap
    frobenius.DEFAULT_PRODUCT_BUDGET = cap
    import thresholds.grobner as grobner

    grobner.DEFAULT_PAIR_BUDGET = cap


def run(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        _apply_budget_env()
        report, certified = _COMMANDS[args.command](args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, ValueError, ZeroDivisionError, NotImplementedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = {"schema": 1, "command": args.command, **report}
    if args.format == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        print(_render_text(report))
    if args.strict and not certified:
        print("error: result not certified under --strict", file=sys.stderr)
        return 3
    return 0


def main():  # console-script entry point
    sys.exit(run())


if __name__ == "__main__":
    main()
