"""Command-line front end.

Subcommands: table, eval, symmetry, density, count, values, scan, oracle.
Every subcommand takes ``--format {text,json,csv}``; JSON objects carry a
``schema_version`` and keep the exact rational as the authoritative field
(decimals are 6-place renderings).  Exit codes: 0 success, 1 hard
computational failure (a proved theorem violated, a sweep mismatch, or a
conjecture counterexample), 2 usage or hypothesis errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import density as density_mod
from . import scans as scans_mod
from .density import (
    BudgetExceededError,
    DegenerateCaseError,
    count_zeros_enum,
    count_zeros_exact,
    density_zero_generic,
    density_zero_motzkin,
    density_zero_named,
    empirical_value_counts,
    value_densities,
)
from .digits import HypothesisViolation, combo_eval, m_eval, t_eval
from .modmath import NonInvertibleError, NotPrimeError
from .oracle import (
    WEIGHT_MOTZKIN,
    WEIGHT_ONE,
    WEIGHT_ONE_MINUS_X,
    WEIGHT_ONE_PLUS_X,
    WEIGHT_X,
    oracle_ct,
)
from .symmetry import check_m_symmetry, check_t_symmetry, motzkin_pm2_criterion, t_pm1_square_check
from .tables import (
    NAMED_COMBOS,
    ShiftCombo,
    UnsupportedWidthError,
    combo_table,
    m_table,
    motzkin_combo,
    t_table,
)

SCHEMA_VERSION = 1

NAMED_IDS = ("a005717", "a005043", "a005773")
SEQ_CHOICES = ("trinomial", "motzkin") + NAMED_IDS + ("custom",)

ORACLE_WEIGHTS = {
    "trinomial": WEIGHT_ONE,
    "motzkin": WEIGHT_MOTZKIN,
    "a005717": WEIGHT_X,
    "a005043": WEIGHT_ONE_MINUS_X,
    "a005773": WEIGHT_ONE_PLUS_X,
}


class UsageError(Exception):
    """Bad request (flags, degenerate hypotheses, blown budgets): exit 2."""


class HardFailure(Exception):
    """A proved statement failed to verify: exit 1."""


def _ratio_str(fr: Fraction) -> str:
    return f"{fr.numerator}/{fr.denominator}"


def _ratio_text(fr: Fraction) -> str:
    return f"{_ratio_str(fr)} (~{float(fr):.6f})"


def _ratio_json(fr: Fraction) -> dict:
    return {"rational": _ratio_str(fr), "decimal": f"{float(fr):.6f}"}


def _emit_json(payload: dict) -> str:
    payload = {"schema_version": SCHEMA_VERSION, **payload}
    return json.dumps(payload, sort_keys=True)


def _emit_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _resolve_combo(args) -> ShiftCombo:
    if args.seq == "motzkin":
        return motzkin_combo(args.a, args.b)
    if args.seq in NAMED_IDS:
        if (args.a, args.b) != (1, 1):
            raise UsageError(f"--seq {args.seq} is defined for a=1, b=1 only")
        return NAMED_COMBOS[args.seq]
    if args.seq == "custom":
        if not args.alpha:
            raise UsageError("--seq custom needs --alpha c0,c1,...")
        try:
            alphas = tuple(int(tok) for tok in args.alpha.split(","))
        except ValueError as exc:
            raise UsageError(f"bad --alpha list: {exc}") from None
        return ShiftCombo(alphas)
    raise UsageError(f"--seq {args.seq} is not a shift combination here")


def _cmd_table(args) -> tuple[str, int]:
    p = args.p
    if args.seq == "trinomial":
        values = list(t_table(p, args.a, args.b).values[:p])
    elif args.seq == "motzkin":
        values = list(m_table(p, args.a, args.b).values)
    else:
        combo = _resolve_combo(args)
        scaled = args.seq != "custom"
        values = combo_table(combo, t_table(p, args.a, args.b), scaled=scaled)
    if args.format == "json":
        out = _emit_json({"command": "table", "p": p, "a": args.a, "b": args.b, "seq": args.seq, "values": values})
    elif args.format == "csv":
        out = _emit_csv(["n", "value"], [[n, v] for n, v in enumerate(values)])
    else:
        out = ",".join(str(v) for v in values)
    return out, 0


def _cmd_eval(args) -> tuple[str, int]:
    p, n = args.p, args.n
    tt = t_table(p, args.a, args.b)
    if args.seq == "trinomial":
        value = t_eval(tt, n)
    elif args.seq == "motzkin":
        try:
            value = m_eval(tt, m_table(p, args.a, args.b, ttable=tt), n)
        except HypothesisViolation as exc:
            raise UsageError(
                f"three-case evaluation refused ({exc}); use --seq custom with the "
                f"Motzkin coefficients, the table, or the oracle"
            ) from None
    else:
        combo = _resolve_combo(args)
        value = combo_eval(combo, tt, n, scaled=args.seq != "custom")
    if args.format == "json":
        out = _emit_json({"command": "eval", "p": p, "a": args.a, "b": args.b, "seq": args.seq, "n": n, "value": value})
    elif args.format == "csv":
        out = _emit_csv(["n", "value"], [[n, value]])
    else:
        out = str(value)
    return out, 0


def _cmd_symmetry(args) -> tuple[str, int]:
    p = args.p
    if p <= 3:
        raise UsageError("symmetry checks need p > 3 (both reflections defined)")
    t_rep = check_t_symmetry(p, args.a, args.b)
    m_rep = check_m_symmetry(p, args.a, args.b)
    square_ok = None
    if (args.b * args.b - 4 * args.a * args.a) % p != 0:
        square_ok = t_pm1_square_check(p, args.a, args.b)
    divides, residue = motzkin_pm2_criterion(p) if (args.a, args.b) == (1, 1) else (None, None)
    checks = {
        "t_reflection_violations": len(t_rep.violations),
        "m_reflection_violations": len(m_rep.violations),
        "t_pm1_square_is_one": square_ok,
        "m_pm2_divisibility": divides,
        "p_mod_3_is_1": residue,
    }
    hard = bool(t_rep.violations or m_rep.violations or square_ok is False)
    if divides is not None and divides != residue:
        hard = True
    if args.format == "json":
        out = _emit_json({"command": "symmetry", "p": p, "a": args.a, "b": args.b, "checks": checks, "ok": not hard})
    elif args.format == "csv":
        out = _emit_csv(["check", "result"], [[k, v] for k, v in checks.items()])
    else:
        lines = [f"{k}: {v}" for k, v in checks.items()]
        lines.append("ok" if not hard else "THEOREM VIOLATION (this is a bug)")
        out = "\n".join(lines)
    return out, 1 if hard else 0


def _density_report(args):
    if args.seq == "motzkin":
        return density_zero_motzkin(args.p, args.a, args.b)
    if args.seq in NAMED_IDS:
        if (args.a, args.b) != (1, 1):
            raise UsageError(f"--seq {args.seq} is defined for a=1, b=1 only")
        try:
            return density_zero_named(args.seq, args.p)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.seq == "custom":
        return density_zero_generic(_resolve_combo(args), args.p, args.a, args.b)
    raise UsageError("density is defined for motzkin, the named sequences, or custom combos")


def _cmd_density(args) -> tuple[str, int]:
    rep = _density_report(args)
    cases = rep.case_contributions
    if args.format == "json":
        payload = {
            "command": "density",
            "p": args.p,
            "a": args.a,
            "b": args.b,
            "seq": rep.sequence_id,
            "d0": _ratio_json(rep.d0),
            "degenerate": rep.degenerate,
            "cases": None if cases is None else [_ratio_json(c) for c in cases],
            "lower_bound": None if rep.lower_bound is None else _ratio_json(rep.lower_bound),
        }
        out = _emit_json(payload)
    elif args.format == "csv":
        rows = [["d0", _ratio_str(rep.d0), f"{float(rep.d0):.6f}"]]
        if cases is not None:
            for label, c in zip(("plain", "even_tail", "odd_tail"), cases):
                rows.append([label, _ratio_str(c), f"{float(c):.6f}"])
        if rep.lower_bound is not None:
            rows.append(["lower_bound", _ratio_str(rep.lower_bound), f"{float(rep.lower_bound):.6f}"])
        if rep.degenerate:
            rows.append(["degenerate", rep.degenerate, ""])
        out = _emit_csv(["field", "rational", "decimal"], rows)
    else:
        lines = [f"D0 = {_ratio_text(rep.d0)}"]
        if cases is not None:
            for label, c in zip(("plain", "even-run tail", "odd-run tail"), cases):
                lines.append(f"  {label}: {_ratio_text(c)}")
        if rep.degenerate:
            lines.append(f"degenerate case: {rep.degenerate}")
        if rep.lower_bound is not None:
            lines.append(f"lower bound: {_ratio_text(rep.lower_bound)}")
        out = "\n".join(lines)
    return out, 0


def _cmd_count(args) -> tuple[str, int]:
    combo = _resolve_combo(args)
    results: dict[str, int] = {}
    if args.method in ("exact", "both"):
        try:
            results["exact"] = count_zeros_exact(combo, args.p, args.digits, args.a, args.b)
        except DegenerateCaseError as exc:
            raise UsageError(str(exc)) from None
    if args.method in ("enum", "both"):
        try:
            results["enum"] = count_zeros_enum(combo, args.p, args.digits, args.a, args.b, budget=args.budget)
        except BudgetExceededError as exc:
            raise UsageError(str(exc)) from None
    hard = len(results) == 2 and results["exact"] != results["enum"]
    if args.format == "json":
        out = _emit_json({
            "command": "count", "p": args.p, "a": args.a, "b": args.b, "seq": args.seq,
            "digits": args.digits, "counts": results, "consistent": not hard if len(results) == 2 else None,
        })
    elif args.format == "csv":
        out = _emit_csv(["method", "zeros"], [[k, v] for k, v in sorted(results.items())])
    else:
        lines = [f"zeros below {args.p}^{args.digits}: " + ", ".join(f"{k}={v}" for k, v in sorted(results.items()))]
        if hard:
            lines.append("COUNTING MISMATCH (this is a bug)")
        out = "\n".join(lines)
    return out, 1 if hard else 0


def _cmd_values(args) -> tuple[str, int]:
    rep = value_densities(args.p, args.a, args.b)
    hist = None
    if args.digits is not None:
        try:
            hist = empirical_value_counts(args.p, args.digits, args.a, args.b, budget=args.budget)
        except (BudgetExceededError, HypothesisViolation) as exc:
            raise UsageError(str(exc)) from None
    if args.format == "json":
        payload = {
            "command": "values", "p": args.p, "a": args.a, "b": args.b,
            "d0": _ratio_json(rep.d0),
            "generation_status": rep.generation_status,
            "nonzero_density": None if rep.nonzero_density is None else _ratio_json(rep.nonzero_density),
            "degenerate": rep.degenerate,
        }
        if hist is not None:
            payload["histogram"] = {str(k): v for k, v in sorted(hist.items())}
        out = _emit_json(payload)
    elif args.format == "csv":
        rows = [["d0", _ratio_str(rep.d0)], ["generation_status", rep.generation_status]]
        if rep.nonzero_density is not None:
            rows.append(["nonzero_density", _ratio_str(rep.nonzero_density)])
        if hist is not None:
            rows.extend([f"count_{k}", v] for k, v in sorted(hist.items()))
        out = _emit_csv(["field", "value"], rows)
    else:
        lines = [
            f"D0 = {_ratio_text(rep.d0)}",
            f"T values generate F_p^x: {rep.generation_status}",
        ]
        if rep.nonzero_density is not None:
            lines.append(f"density of each nonzero residue: {_ratio_text(rep.nonzero_density)}")
        if rep.degenerate:
            lines.append(f"degenerate case: {rep.degenerate}")
        if hist is not None:
            lines.append("histogram over n < p^%d: %s" % (args.digits, dict(sorted(hist.items()))))
        out = "\n".join(lines)
    return out, 0


def _cmd_scan(args) -> tuple[str, int]:
    results = scans_mod.sweep(args.scan, args.max, jobs=args.jobs, checkpoint=args.checkpoint, every=args.every)
    hard = False
    summary: dict[str, object] = {}
    if args.scan == "a113305":
        passing = sum(1 for r in results if r.verdicts["a113305"])
        frac = Fraction(passing, len(results)) if results else Fraction(0)
        summary = {"passing": passing, "primes": len(results), "fraction": _ratio_json(frac),
                   "heuristic_exp_minus_half": "0.606531"}
    elif args.scan == "conjecture":
        bad = [r.p for r in results if r.verdicts["conjecture"] == "fails_to_generate"]
        hard = bool(bad)
        summary = {"fails_to_generate": bad,
                   "degenerate": sum(1 for r in results if r.verdicts["conjecture"] == "degenerate_zero")}
    elif args.scan == "equality":
        bad = [r.p for r in results if not r.verdicts["equal"]]
        hard = bool(bad)
        summary = {"unequal": bad}
    elif args.scan == "pm2":
        bad = [r.p for r in results if not r.verdicts["agree"]]
        hard = bool(bad)
        summary = {"mismatches": bad}
    if args.format == "json":
        out = _emit_json({
            "command": "scan", "scan": args.scan, "max": args.max, "summary": summary,
            "results": [{"p": r.p, "verdict": r.verdicts, "payload": r.payload} for r in results],
        })
    elif args.format == "csv":
        if args.scan == "a113305":
            header, rows = ["p", "passes"], [[r.p, r.verdicts["a113305"]] for r in results]
        elif args.scan == "conjecture":
            header = ["p", "outcome", "subgroup_order", "group_order"]
            rows = [[r.p, r.verdicts["conjecture"], r.payload.get("subgroup_order", ""), r.payload.get("group_order", "")]
                    for r in results]
        elif args.scan == "equality":
            header = ["p", "equal", "a005043_d0", "a005773_d0"]
            rows = [[r.p, r.verdicts["equal"], r.payload["a005043_d0"], r.payload["a005773_d0"]] for r in results]
        else:
            header = ["p", "divides_m_pm2", "p_mod_3_is_1", "agree"]
            rows = [[r.p, r.payload["divides_m_pm2"], r.payload["p_mod_3_is_1"], r.verdicts["agree"]] for r in results]
        out = _emit_csv(header, rows)
        out += "\n# summary: " + json.dumps(summary, sort_keys=True)
    else:
        lines = [f"{args.scan} over primes <= {args.max}: {len(results)} primes"]
        lines.append("summary: " + json.dumps(summary, sort_keys=True))
        if hard:
            lines.append("HARD FAILURE: see summary (a proved statement failed or a counterexample surfaced)")
        out = "\n".join(lines)
    return out, 1 if hard else 0


def _cmd_oracle(args) -> tuple[str, int]:
    if args.seq == "custom":
        raise UsageError("the oracle serves the fixed weights; use table/eval for custom combos")
    value = oracle_ct(args.a, args.b, args.n, ORACLE_WEIGHTS[args.seq], cap=args.cap)
    reduced = value % args.p if args.p is not None else None
    if args.format == "json":
        out = _emit_json({"command": "oracle", "a": args.a, "b": args.b, "seq": args.seq,
                          "n": args.n, "value": str(value), "p": args.p, "value_mod_p": reduced})
    elif args.format == "csv":
        out = _emit_csv(["n", "value", "value_mod_p"], [[args.n, value, "" if reduced is None else reduced]])
    else:
        out = str(value) if reduced is None else f"{value} = {reduced} (mod {args.p})"
    return out, 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motzkinmod",
        description="Generalized Motzkin numbers and central trinomial coefficients mod p: "
                    "tables, fast digit evaluation, symmetry checks, exact residue densities, and prime sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, seq=True, prime=True):
        if prime:
            sp.add_argument("--p", type=int, required=True, help="prime modulus")
        sp.add_argument("--a", type=int, default=1, help="up/down step colors (default 1)")
        sp.add_argument("--b", type=int, default=1, help="level step colors (default 1)")
        if seq:
            sp.add_argument("--seq", choices=SEQ_CHOICES, default="motzkin")
            sp.add_argument("--alpha", help="comma list of combo coefficients for --seq custom")
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")

    sp = sub.add_parser("table", help="first-p table of a sequence mod p")
    common(sp)
    sp.set_defaults(func=_cmd_table)

    sp = sub.add_parser("eval", help="one term mod p via digit products")
    common(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=_cmd_eval)

    sp = sub.add_parser("symmetry", help="verify the reflection theorems at one prime")
    common(sp, seq=False)
    sp.set_defaults(func=_cmd_symmetry)

    sp = sub.add_parser("density", help="exact density of 0 in a sequence mod p")
    common(sp)
    sp.set_defaults(func=_cmd_density)

    sp = sub.add_parser("count", help="zeros below p^N, closed form and/or enumeration")
    common(sp)
    sp.add_argument("--digits", type=int, required=True, metavar="N")
    sp.add_argument("--method", choices=("exact", "enum", "both"), default="both")
    sp.add_argument("--budget", type=int, default=10**8, help="max enumeration evaluations")
    sp.set_defaults(func=_cmd_count)

    sp = sub.add_parser("values", help="value densities and generation status")
    common(sp, seq=False)
    sp.add_argument("--digits", type=int, metavar="N", help="also histogram M_n over n < p^N")
    sp.add_argument("--budget", type=int, default=10**8)
    sp.set_defaults(func=_cmd_values)

    sp = sub.add_parser("scan", help="sweep a test over all primes up to a bound")
    sp.add_argument("scan", choices=sorted(scans_mod.SCAN_TESTS))
    sp.add_argument("--max", type=int, required=True, metavar="X")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--checkpoint", help="JSONL checkpoint path (resumable)")
    sp.add_argument("--every", type=int, default=100, help="flush checkpoint every K records")
    sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sp.set_defaults(func=_cmd_scan)

    sp = sub.add_parser("oracle", help="exact integer term by brute-force constant terms")
    common(sp, prime=False)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=int, help="also reduce mod p")
    sp.add_argument("--cap", type=int, default=2000)
    sp.set_defaults(func=_cmd_oracle)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if getattr(args, "p", None) is not None and args.command != "oracle":
            from .modmath import ensure_prime

            ensure_prime(args.p)
        out, code = args.func(args)
    except (UsageError, NotPrimeError, UnsupportedWidthError, NonInvertibleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HardFailure as exc:
        print(f"hard failure: {exc}", file=sys.stderr)
        return 1
    print(out)
    return code


def main() -> None:
    sys.exit(run())
