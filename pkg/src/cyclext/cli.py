"""Command-line front end.

Each subcommand is a thin adapter over one library call.  Output is JSON,
CSV or a plain-text table; every emission carries ``format_version``.

Exit codes: 0 success, 1 malformed or invalid input, 2 internal invariant
violation (a bug), 3 oracle suite failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Optional

from . import __version__
from .conjugacy import (count_generator_classes, criterion_units, generators_conjugate,
                        orbit_conjugate, subgroups_conjugate)
from .errors import BudgetExceeded, CyclextError, InternalInvariantViolation
from .extendability import (ATLAS_COLUMNS, canonical_class, check_extendable,
                            enumerate_atlas)
from .lens import CSV_COLUMNS as LENS_COLUMNS
from .lens import certificate_row, domination_digraph, dominates_qr
from .moves import move_to_json, normalize
from .oracle import SUITES, OracleCaps, run_suites
from .orbifold import action_from_json, action_to_json

FORMAT_VERSION = 1
EXIT_OK, EXIT_INPUT, EXIT_INTERNAL, EXIT_ORACLE = 0, 1, 2, 3


class InputError(CyclextError, ValueError):
    """Bad command-line usage or unreadable input."""


@dataclass
class Emission:
    """What a subcommand produces: a JSON payload plus optional rows for csv/table."""

    payload: dict
    columns: list = field(default_factory=list)
    rows: list = field(default_factory=list)
    text: Optional[str] = None
    exit_code: int = EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


# -- input -------------------------------------------------------------------

def _load_json(source: str):
    """Inline JSON, ``-`` for stdin, or a file path."""
    try:
        if source == "-":
            text = sys.stdin.read()
        elif source.lstrip().startswith(("{", "[")):
            text = source
        else:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read action {source!r}: {exc}") from exc


def _load_action(source: str):
    obj = _load_json(source)
    if not isinstance(obj, dict):
        raise InputError("an action must be a JSON object")
    return action_from_json(obj)


# -- subcommands -------------------------------------------------------------

def cmd_atlas(args) -> Emission:
    classes = enumerate_atlas(args.genus, args.max_order, free_only=args.free_only)
    rows = [[args.genus, *c.astuple()] for c in classes]
    payload = {"genus": args.genus, "max_order": args.max_order, "free_only": args.free_only,
               "classes": [c.to_json() for c in classes]}
    return Emission(payload, list(ATLAS_COLUMNS), rows)


def cmd_check(args) -> Emission:
    sig, spec = _load_action(args.action)
    verdict = check_extendable(sig, spec)
    payload = {"action": action_to_json(sig, spec), "signature": str(sig),
               "summary": verdict.summary(), **verdict.to_json()}
    payload["class"] = canonical_class(sig, spec).to_json() if verdict.extendable else None
    cols = ["extendable", "condition_a", "condition_b", "condition_c", "summary"]
    row = [verdict.extendable, verdict.condition_a.passed, verdict.condition_b.passed,
           verdict.condition_c.passed, verdict.summary()]
    return Emission(payload, cols, [row], text=verdict.summary())


def cmd_normalize(args) -> Emission:
    sig, spec = _load_action(args.action)
    script, out = normalize(sig, spec)
    moves = [move_to_json(m) for m in script]
    payload = {"script": moves, "normalized": action_to_json(sig, out)}
    rows = [[i, m["kind"], json.dumps(m["args"], sort_keys=True)] for i, m in enumerate(moves)]
    text = (f"{len(script)} moves -> alpha={list(out.alpha)} beta={list(out.beta)} "
            f"gamma={list(out.gamma)}")
    return Emission(payload, ["step", "kind", "args"], rows, text=text)


def cmd_conjugacy(args) -> Emission:
    sig_a, spec_a = _load_action(args.action)
    if args.generators is not None:
        if args.other is not None:
            raise InputError("--generators takes a single action")
        u = args.generators
        verdict = generators_conjugate(sig_a, spec_a, u, uniform=args.uniform_sign)
        good = criterion_units(sig_a, spec_a, uniform=args.uniform_sign)
        payload = {"mode": "generators", "unit": u % spec_a.order, "conjugate": verdict,
                   "witness": {"accepted_units": good,
                               "classes": count_generator_classes(sig_a, spec_a,
                                                                  args.uniform_sign)}}
        return Emission(payload, ["unit", "conjugate"], [[u % spec_a.order, verdict]],
                        text=f"h ~ h^{u % spec_a.order}: {verdict}")
    if args.other is None:
        raise InputError("conjugacy needs two actions or --generators U")
    sig_b, spec_b = _load_action(args.other)
    va, vb = check_extendable(sig_a, spec_a), check_extendable(sig_b, spec_b)
    if va.extendable and vb.extendable:
        ca, cb = canonical_class(sig_a, spec_a), canonical_class(sig_b, spec_b)
        verdict = subgroups_conjugate(ca, cb)
        method, witness = "standard-form", {"first": ca.to_json(), "second": cb.to_json()}
    else:
        caps = OracleCaps.parse(args.caps) if args.caps else None
        verdict = orbit_conjugate(sig_a, spec_a, sig_b, spec_b, depth=args.depth, caps=caps)
        method, witness = "move-orbit", {"depth": args.depth}
    status = {True: "conjugate", False: "not conjugate", None: "unknown"}[verdict]
    payload = {"mode": "actions", "method": method, "conjugate": verdict, "status": status,
               "witness": witness}
    return Emission(payload, ["method", "conjugate", "status"], [[method, verdict, status]],
                    text=f"{status} ({method})")


def cmd_lens(args) -> Emission:
    if args.digraph is not None:
        if args.values:
            raise InputError("--digraph takes no positional values")
        dg = domination_digraph(args.digraph)
        rows = [[certificate_row(dg.p, s.q, d.q, c)[k] for k in LENS_COLUMNS]
                for s, d, c in dg.edges]
        payload = {"p": dg.p, "nodes": [str(x) for x in dg.nodes],
                   "edges": [certificate_row(dg.p, s.q, d.q, c) for s, d, c in dg.edges],
                   "mutual_pairs": [[str(a), str(b)] for a, b in dg.mutual_pairs]}
        text = "mutual non-equivalent pairs: " + (
            ", ".join(f"{a} <-> {b}" for a, b in dg.mutual_pairs) or "none")
        return Emission(payload, list(LENS_COLUMNS), rows, text=text)
    if len(args.values) != 3:
        raise InputError("lens takes P Q1 Q2, or --digraph P")
    p, q1, q2 = args.values
    cert = dominates_qr(p, q1, q2)
    if cert is None:
        payload = {"p": p, "q1": q1 % p, "q2": q2 % p, "dominates": False, "certificate": None}
        return Emission(payload, ["p", "q1", "q2", "dominates"],
                        [[p, q1 % p, q2 % p, False]],
                        text=f"q1*q2 is not a square mod {p}: no certificate")
    row = certificate_row(p, q1, q2, cert)
    payload = {"p": p, "q1": q1 % p, "q2": q2 % p, "dominates": True, "certificate": row}
    return Emission(payload, list(LENS_COLUMNS), [[row[k] for k in LENS_COLUMNS]])


def cmd_oracle(args) -> Emission:
    caps = OracleCaps.parse(args.caps) if args.caps else None
    try:
        reports = run_suites(args.suites or None, caps=caps)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from exc
    except BudgetExceeded as exc:
        payload = {"passed": False, "error": str(exc), "suites": []}
        return Emission(payload, text=f"[FAIL] budget exceeded: {exc}", exit_code=EXIT_ORACLE)
    passed = all(r.passed for r in reports)
    payload = {"passed": passed,
               "suites": [{"name": r.name, "passed": r.passed, "checked": r.checked,
                           "sampled": r.sampled, "failures": [repr(f) for f in r.failures[:5]]}
                          for r in reports]}
    rows = [[r.name, r.passed, r.checked, len(r.failures)] for r in reports]
    return Emission(payload, ["suite", "passed", "checked", "failures"], rows,
                    text="\n".join(r.line() for r in reports),
                    exit_code=EXIT_OK if passed else EXIT_ORACLE)


# -- output ------------------------------------------------------------------

def _meta(argv) -> dict:
    return {"tool": "cyclext", "version": __version__, "argv": list(argv),
            "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds")}


def render(em: Emission, fmt: str, meta: Optional[dict] = None) -> str:
    if fmt == "json":
        doc = {"format_version": FORMAT_VERSION, **em.payload}
        if meta is not None:
            doc["meta"] = meta
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    lines = [f"# format_version: {FORMAT_VERSION}"]
    if meta is not None:
        lines.append(f"# meta: {json.dumps(meta, sort_keys=True)}")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(em.columns or ["payload"])
        writer.writerows(em.rows or [[json.dumps(em.payload, sort_keys=True)]])
        return "\n".join(lines) + "\n" + buf.getvalue()
    if em.columns and em.rows:
        cells = [list(map(str, em.columns))] + [[str(v) for v in row] for row in em.rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(cells[0]))]
        for k, row in enumerate(cells):
            lines.append("  ".join(v.rjust(w) for v, w in zip(row, widths)).rstrip())
            if k == 0:
                lines.append("  ".join("-" * w for w in widths))
    if em.text:
        lines.append(em.text)
    return "\n".join(lines) + "\n"


def write_output(text: str, path: Optional[str]):
    """Write to stdout, or atomically to ``path`` via a sibling temp file."""
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    target = os.path.abspath(path)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(target), prefix=".cyclext-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "table"],
                        help="default: table on a terminal, json otherwise")
    common.add_argument("--out", metavar="PATH", help="write here instead of stdout")
    common.add_argument("--meta", action="store_true", help="attach provenance metadata")

    parser = _Parser(prog="cyclext", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"cyclext {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("atlas", parents=[common], help="extendable classes of a genus")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--max-order", type=int)
    p.add_argument("--free-only", action="store_true")
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("check", parents=[common], help="decide extendability of an action")
    p.add_argument("action", help="action JSON: inline, file path, or - for stdin")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("normalize", parents=[common], help="move script to normal form")
    p.add_argument("action")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("conjugacy", parents=[common], help="conjugacy of actions or generators")
    p.add_argument("action")
    p.add_argument("other", nargs="?")
    p.add_argument("--generators", type=int, metavar="U",
                   help="decide whether h and h^U are conjugate generators")
    p.add_argument("--uniform-sign", action="store_true",
                   help="require one sign for all gamma images")
    p.add_argument("--depth", type=int, default=12, help="BFS depth for non-extendable pairs")
    p.add_argument("--caps", help="oracle caps, e.g. state_budget=100000")
    p.set_defaults(func=cmd_conjugacy)

    p = sub.add_parser("lens", parents=[common], help="lens-space domination certificates")
    p.add_argument("values", nargs="*", type=int, metavar="P Q1 Q2")
    p.add_argument("--digraph", type=int, metavar="P")
    p.set_defaults(func=cmd_lens)

    p = sub.add_parser("oracle", parents=[common], help="run brute-force agreement suites")
    p.add_argument("suites", nargs="*", metavar="SUITE",
                   help=f"any of {', '.join(SUITES)} (default: all)")
    p.add_argument("--caps", help="oracle caps, e.g. max_order=20,state_budget=100000")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors, --help, --version
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    fmt = args.format or ("table" if args.out is None and sys.stdout.isatty() else "json")
    try:
        em = args.func(args)
    except InternalInvariantViolation as exc:
        print(f"cyclext: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except CyclextError as exc:
        print(f"cyclext: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001
        print(f"cyclext: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL
    try:
        write_output(render(em, fmt, _meta(argv) if args.meta else None), args.out)
    except OSError as exc:
        print(f"cyclext: error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return em.exit_code


if __name__ == "__main__":
    sys.exit(main())
