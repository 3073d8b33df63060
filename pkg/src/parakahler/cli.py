"""Command-line front end.

Subcommands:
    list        algebras, forms, and structures with parameter domains
    verify      axiom + curvature + label verification (exit 1 on failures)
    extend      para-Sasakian extension checks (exit 1 on nonzero residuals)
    report      full run (verify + extend), writes a json/markdown document
    check-file  validate an external catalog document

Exit codes: 0 clean, 1 mathematical discrepancies/failures, 2 usage errors,
3 infrastructure errors (expression-size guard, sampling exhaustion).
Published-value mismatches that pass all axioms are reported but only flip
the exit code under --strict.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .catalog import Catalog, CatalogFormatError, builtin_catalog, load_catalog
from .expressions import ExpressionBlowupError, format_expr, set_term_limit
from .sampling import SamplingError
from .verify import RunConfig, render_report, verify_all

EXIT_OK = 0
EXIT_DISCREPANCY = 1
EXIT_USAGE = 2
EXIT_INFRASTRUCTURE = 3


class UsageError(ValueError):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parakahler",
        description=(
            "Exact verification of the builtin catalog of para-Kahler "
            "structures on four-dimensional Lie algebras and of their "
            "five-dimensional para-Sasakian central extensions."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=None, help="sampling seed (default 0 or PARAKAHLER_SEED)")
        p.add_argument("--samples", type=int, default=20, help="parameter samples per entry")
        p.add_argument("--format", dest="fmt", choices=("json", "markdown"), default="json")
        p.add_argument("--catalog", default=None, help="path to an external catalog document")
        p.add_argument("--filter", dest="entry_filter", default=None, help="glob on structure ids")
        p.add_argument("--strict", action="store_true", help="treat published-value mismatches as failures")
        p.add_argument("--out", default=None, help="write the rendered report to this path")
        p.add_argument("--term-limit", type=int, default=None, help="polynomial term-count guard")

    sub.add_parser("list", help="list algebras, forms, and structures")
    for name, help_text in (
        ("verify", "run axiom and curvature verification"),
        ("extend", "verify the para-Sasakian extension identities"),
        ("report", "full verification run, written as a document"),
    ):
        common(sub.add_parser(name, help=help_text))
    check = sub.add_parser("check-file", help="validate an external catalog document")
    check.add_argument("path", help="catalog JSON file")
    return parser


def _load(args) -> Catalog:
    if getattr(args, "catalog", None):
        with open(args.catalog, "r", encoding="utf-8") as handle:
            return load_catalog(json.load(handle))
    return builtin_catalog()


def _config(args) -> RunConfig:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("PARAKAHLER_SEED", "0"))
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    if args.term_limit is not None:
        try:
            set_term_limit(args.term_limit)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    return RunConfig(
        seed=seed,
        samples=args.samples,
        fmt=args.fmt,
        strict=args.strict,
        entry_filter=args.entry_filter,
    )


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_list(args) -> int:
    catalog = builtin_catalog()
    print(f"{len(catalog.algebras)} algebras, {len(catalog.entries)} structures")
    for name in catalog.algebras:
        algebra = catalog.algebras[name]
        domains = ", ".join(
            f"{pname} ({_domain_text(dom)})" for pname, dom in algebra.params
        ) or "none"
        forms = [fid for (alg, fid) in catalog.forms if alg == name]
        entries = [e for e in catalog.entries if e.algebra == name]
        print(f"- {name}: dim {algebra.dim}; parameters: {domains}")
        for fid in forms:
            form = catalog.forms[(name, fid)]
            body = " + ".join(
                f"({format_expr(v)})*e{i}^e{j}" for i, j, v in form.terms()
            )
            ids = [e.entry_id for e in entries if e.form == fid]
            print(f"    {fid}: {body}  [{len(ids)} structures]")
            for sid in ids:
                print(f"        {sid}")
    return EXIT_OK


def _domain_text(dom) -> str:
    if dom.kind == "free":
        return "free"
    if dom.kind == "positive":
        return "> 0"
    lo = "-inf" if dom.lo is None else str(dom.lo)
    hi = "+inf" if dom.hi is None else str(dom.hi)
    text = f"in ({lo}, {hi})"
    if dom.excluded:
        text += ", excluding " + ", ".join(str(v) for v in dom.excluded)
    return text


def _exit_code(report, strict: bool) -> int:
    if report.summary["failures"] or not report.summary["gates_ok"]:
        return EXIT_DISCREPANCY
    if report.summary.get("sasakian_failures"):
        return EXIT_DISCREPANCY
    if strict and report.summary["discrepancies"]:
        return EXIT_DISCREPANCY
    return EXIT_OK


def _cmd_verify(args, with_extensions: bool) -> int:
    catalog = _load(args)
    config = _config(args)
    report = verify_all(catalog, config, include_extensions=with_extensions)
    if args.out:
        _emit(args, render_report(report, config.fmt))
    for f in report.findings:
        marker = {"ok": "ok", "discrepancy": "DISCREPANCY", "failure": "FAILURE"}[f.status]
        detail = ""
        if f.status != "ok":
            bad_axioms = [k for k, v in f.axioms.items() if not v["ok"]]
            if bad_axioms:
                detail = f" axiom={','.join(bad_axioms)}"
            elif not f.label["match"]:
                detail = f" label {f.label['expected']}->{f.label['computed']}"
            elif f.ric_comparison["residuals"]:
                detail = " ric-differs"
        print(f"{marker:12s} {f.entry_id}{detail}")
    if report.sasakian is not None:
        for f in report.sasakian:
            print(f"{'ok' if f.status == 'ok' else 'FAILURE':12s} sasakian {f.entry_id}")
    s = report.summary
    print(
        f"verified {s['total']} structures: {s['ok']} clean, "
        f"{s['discrepancies']} documented discrepancies, {s['failures']} failures"
    )
    if report.sasakian is not None:
        print(
            f"extensions: {s['sasakian_ok']} clean, {s['sasakian_failures']} failures"
        )
    return _exit_code(report, config.strict)


def _cmd_report(args) -> int:
    catalog = _load(args)
    config = _config(args)
    report = verify_all(catalog, config, include_extensions=True)
    _emit(args, render_report(report, config.fmt))
    return _exit_code(report, config.strict)


def _cmd_check_file(args) -> int:
    with open(args.path, "r", encoding="utf-8") as handle:
        document = json.load(handle)
    catalog = load_catalog(document)
    print(
        f"OK: {len(catalog.algebras)} algebras, "
        f"{len(catalog.entries)} structures, "
        f"{len(catalog.forms)} forms"
    )
    return EXIT_OK


def main(argv: Optional[list] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        if args.command == "list":
            return _cmd_list(args)
        if args.command == "verify":
            return _cmd_verify(args, with_extensions=False)
        if args.command == "extend":
            return _cmd_verify(args, with_extensions=True)
        if args.command == "report":
            return _cmd_report(args)
        if args.command == "check-file":
            return _cmd_check_file(args)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CatalogFormatError, json.JSONDecodeError) as exc:
        print(f"catalog error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ExpressionBlowupError, SamplingError) as exc:
        print(f"infrastructure error: {exc}", file=sys.stderr)
        return EXIT_INFRASTRUCTURE


if __name__ == "__main__":
    sys.exit(main())
