"""Command-line front end.

Commands: ``info``, ``adjoin``, ``sequence``, ``classify``, ``eliminate``,
``verify``.  Output formats: ``table`` (default, byte-deterministic),
``json`` (schema-stable, sorted keys), ``csv``.  Exit codes: 0 success,
1 usage or parse error, 2 flagged discrepancies (suppressed by
``--allow-flags``), 3 internal invariant violation.

Every number printed in a table is recomputed from the class at print time.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import eliminator, verifier
from .adjunction import LeavesFamilyError, adjoin, sequence
from .classifier import classify
from .picard import (
    canonical,
    degree,
    euler_char,
    intersect,
    invariants,
    sectional_genus,
)
from .typelang import ConversionError, TypeSyntaxError, from_divisor, parse, render, to_divisor

USAGE_ERROR, FLAGGED, INTERNAL_ERROR = 1, 2, 3


def _parse_e_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError("e-range must look like LO..HI") from None
    if lo_i > hi_i:
        raise argparse.ArgumentTypeError("empty e-range")
    return lo_i, hi_i


def _emit_json(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _emit_csv(fieldnames: list[str], rows: list[dict]) -> None:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    sys.stdout.write(buf.getvalue())


def _sweep(args) -> list[int | None]:
    if args.e_range is not None:
        return list(range(args.e_range[0], args.e_range[1] + 1))
    return [args.e]


def cmd_info(args) -> int:
    texpr = parse(args.type)
    rows = []
    for e in _sweep(args):
        model, h = to_divisor(texpr, e)
        rows.append(
            {
                "type": render(texpr),
                "e": model.e if model.kind == "hirzebruch" else None,
                "degree": degree(h),
                "genus": sectional_genus(h),
                "k_sq": model.k_squared,
                "chi": euler_char(h),
                "h_dot_k": intersect(h, canonical(model)),
            }
        )
    if args.format == "json":
        _emit_json({"command": "info", "format_version": 1, "rows": rows})
    elif args.format == "csv":
        _emit_csv(["type", "e", "degree", "genus", "k_sq", "chi", "h_dot_k"], rows)
    else:
        for r in rows:
            e_part = f" e={r['e']}" if r["e"] is not None else ""
            print(
                f"{r['type']}{e_part}: degree {r['degree']}, genus {r['genus']}, "
                f"K^2 {r['k_sq']}, chi {r['chi']}, H.K {r['h_dot_k']}"
            )
    return 0


def cmd_adjoin(args) -> int:
    texpr = parse(args.type)
    model, h = to_divisor(texpr, args.e)
    try:
        step = adjoin(model, h)
    except LeavesFamilyError as exc:
        print(f"{render(texpr)}: {exc} (raw adjoint {exc.raw})")
        return 0
    after_type = render(from_divisor(step.after[1]))
    payload = {
        "command": "adjoin",
        "format_version": 1,
        "before": {"type": render(texpr), "invariants": list(step.invariants_before)},
        "after": {"type": after_type, "invariants": list(step.invariants_after)},
        "blown_down": step.blown_down,
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        print(
            f"{render(texpr)} {step.invariants_before} -> {after_type} "
            f"{step.invariants_after}, blown down {step.blown_down}"
        )
    return 0


def cmd_sequence(args) -> int:
    texpr = parse(args.type)
    model, h = to_divisor(texpr, args.e)
    seq = sequence(model, h)
    rows = []
    cur_model, cur = model, h
    rows.append({"i": 0, "type": render(from_divisor(cur)), **_inv_dict(cur)})
    for i, step in enumerate(seq.steps, start=1):
        cur_model, cur = step.after
        rows.append({"i": i, "type": render(from_divisor(cur)), **_inv_dict(cur), "blown_down": step.blown_down})
    payload = {
        "command": "sequence",
        "format_version": 1,
        "steps": rows,
        "n0": seq.n0,
        "terminal": render(from_divisor(seq.terminal[1])),
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        for r in rows:
            extra = f", blown down {r['blown_down']}" if "blown_down" in r else ""
            print(f"S_{r['i']}: {r['type']} degree {r['degree']} genus {r['genus']} K^2 {r['k_sq']}{extra}")
        print(f"terminal: {payload['terminal']} (first genus <= 5 at index {seq.n0})")
    return 0


def _inv_dict(cls) -> dict:
    d, g, k = invariants(cls)
    return {"degree": d, "genus": g, "k_sq": k}


def cmd_classify(args) -> int:
    result = classify(args.degree, args.genus, parallel=args.parallel)
    payload = {"command": "classify", **result.payload()}
    if args.format == "json":
        _emit_json(payload)
    elif args.format == "csv":
        fields = ["status", "type", "e", "e_range", "k0_sq", "degree", "genus", "k_sequence", "terminal", "rule", "via"]
        rows = []
        for c in result.candidates:
            p = c.payload()
            rows.append(
                {
                    "status": p["status"],
                    "type": p["type"],
                    "e": p["e"],
                    "e_range": "" if p["e_range"] is None else f"{p['e_range'][0]}..{p['e_range'][1]}",
                    "k0_sq": p["k0_sq"],
                    "degree": p["degree"],
                    "genus": p["genus"],
                    "k_sequence": " ".join(map(str, p["k_sequence"])),
                    "terminal": p["terminal"]["label"],
                    "rule": p["rule"] or "",
                    "via": p["via"] or "",
                }
            )
        _emit_csv(fields, rows)
    else:
        print(f"classification for degree {args.degree}, sectional genus {args.genus}")
        print(f"candidates: {len(result.candidates)} "
              f"(survivors {len(result.survivors)}, eliminated {len(result.eliminated)}, flagged {len(result.flagged)})")
        print()
        print("eliminated:")
        for c in result.eliminated:
            rng = f" e in {c.e_range[0]}..{c.e_range[1]}" if c.e_range else (f" e={c.e}" if c.e is not None else "")
            print(f"  {c.type_str}{rng}  K0^2 {c.k0_sq}  chain {list(c.kseq)}  [{c.rule}] via {c.via}")
        print()
        print("flagged:")
        for c in result.flagged:
            rng = f" e in {c.e_range[0]}..{c.e_range[1]}" if c.e_range else (f" e={c.e}" if c.e is not None else "")
            print(f"  {c.type_str}{rng}  K0^2 {c.k0_sq}  chain {list(c.kseq)}  via {c.via}")
            for note in c.notes:
                print(f"    note: {note}")
        print()
        flagged_rows = [r for r in result.cross_report if r["status"] == "flagged"]
        print(f"printed-table cross-report: {len(result.cross_report)} rows, {len(flagged_rows)} flagged")
        for r in flagged_rows:
            label = r.get("printed_type") or r.get("claim") or ""
            print(f"  {r['row']} ({r['kind']}) {label}")
            for msg in r["flags"]:
                print(f"    {msg}")
        print()
        print("survivors:")
        for c in result.survivors:
            bound = f", stated bound e <= {c.stated_e_max}" if c.stated_e_max is not None else ""
            rng = f" e in {c.e_range[0]}..{c.e_range[1]}" if c.e_range else ""
            print(f"  {c.type_str}{rng}{bound}  K^2 {c.k0_sq}  chain {list(c.kseq)}")
    has_flags = bool(result.flagged) or any(r["status"] == "flagged" for r in result.cross_report)
    if has_flags and not args.allow_flags:
        return FLAGGED
    return 0


def cmd_eliminate(args) -> int:
    corpus = eliminator.load_corpus(args.corpus) if args.corpus else eliminator.load_default_corpus()
    rows = eliminator.run_table(corpus)
    summary = eliminator.summarize(rows)
    if args.format == "json":
        _emit_json(
            {
                "command": "eliminate",
                "format_version": 1,
                "rows": [r.payload() for r in rows],
                "summary": summary,
            }
        )
    elif args.format == "csv":
        fields = ["H", "A", "subscripts", "derived", "expected", "verdict", "rule"]
        out = []
        for r in rows:
            p = r.payload()
            out.append(
                {
                    "H": p["H"],
                    "A": p["A"],
                    "subscripts": " ".join(map(str, p["subscripts"])),
                    "derived": " ".join(map(str, p["derived"] or [])),
                    "expected": " ".join("-" if v is None else str(v) for v in (p["expected"] or [])),
                    "verdict": p["verdict"],
                    "rule": p["rule"] or "",
                }
            )
        _emit_csv(fields, out)
    else:
        for r in rows:
            derived = " ".join(map(str, r.derived)) if r.derived else "-"
            rule = f"({r.rule})" if r.rule else ""
            print(f"{r.h_str}  A={r.a_str}  derived [{derived}]  {r.verdict}{rule}")
            for d in r.deltas:
                print(f"    delta: {d}")
            for note in r.skipped_e and r.assumptions or []:
                if "skipped" in note:
                    print(f"    note: {note}")
        print(
            f"rows {summary['rows']}: eliminated {summary['eliminated']}, "
            f"flagged {summary['flagged']}, survivors {summary['survivors']}"
        )
    if summary["flagged"] and not args.allow_flags:
        return FLAGGED
    return 0


def cmd_verify(args) -> int:
    names = list(verifier.SCENARIOS) if args.scenario == "all" else [args.scenario]
    reports = [verifier.run_scenario(n) for n in names]
    if args.format == "json":
        _emit_json(
            {
                "command": "verify",
                "format_version": 1,
                "reports": [r.payload() for r in reports],
            }
        )
    else:
        for rep in reports:
            print(f"scenario {rep.scenario}: {'PASS' if rep.all_pass else 'FAIL'}")
            for c in rep.checks:
                mark = "ok" if c.passed else "FAIL"
                print(f"  [{mark}] {c.description}: expected {c.expected}, computed {c.computed}")
            for a in rep.assumptions:
                print(f"  assumed: {a}")
            for f in rep.flags:
                print(f"  flagged: {f.description}: printed {f.printed}, computed {f.computed}")
    bad = any(not r.all_pass for r in reports)
    flags = any(r.flags for r in reports)
    if bad or (flags and not args.allow_flags):
        return FLAGGED
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratsurf",
        description="Exact divisor-class arithmetic and classification tooling for blown-up rational surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, fmt=True):
        if fmt:
            p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--allow-flags", action="store_true", help="exit 0 even when discrepancies are flagged")

    p_info = sub.add_parser("info", help="invariants of a type")
    p_info.add_argument("type")
    p_info.add_argument("--e", type=int, default=None)
    p_info.add_argument("--e-range", type=_parse_e_range, default=None)
    add_common(p_info)
    p_info.set_defaults(func=cmd_info)

    p_adj = sub.add_parser("adjoin", help="one adjunction step")
    p_adj.add_argument("type")
    p_adj.add_argument("--e", type=int, default=None)
    add_common(p_adj)
    p_adj.set_defaults(func=cmd_adjoin)

    p_seq = sub.add_parser("sequence", help="full adjunction sequence")
    p_seq.add_argument("type")
    p_seq.add_argument("--e", type=int, default=None)
    add_common(p_seq)
    p_seq.set_defaults(func=cmd_sequence)

    p_cls = sub.add_parser("classify", help="candidate hyperplane systems for (degree, genus)")
    p_cls.add_argument("--degree", type=int, required=True)
    p_cls.add_argument("--genus", type=int, required=True)
    p_cls.add_argument("--parallel", type=int, default=0, help="explore depth-0 branches with this many threads")
    add_common(p_cls)
    p_cls.set_defaults(func=cmd_classify)

    p_elim = sub.add_parser("eliminate", help="recompute an elimination corpus")
    p_elim.add_argument("--corpus", default=None, help="JSONL corpus path (default: shipped tables)")
    add_common(p_elim)
    p_elim.set_defaults(func=cmd_eliminate)

    p_ver = sub.add_parser("verify", help="run a verification scenario")
    p_ver.add_argument("scenario", choices=("construction", "lifting1", "lifting2", "all"))
    add_common(p_ver)
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses its own exit codes
        return USAGE_ERROR if exc.code else 0
    try:
        return args.func(args)
    except (TypeSyntaxError, ConversionError, eliminator.CorpusError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except Exception as exc:  # noqa: BLE001 - map anything else to the invariant-violation code
        print(f"internal error: {exc}", file=sys.stderr)
        return INTERNAL_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
