"""Command-line front end.

Exit status: 0 when every check passes, 1 when a check fails, 2 on usage,
I/O or parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog
from .birep import (
    SUBSTITUTIONS,
    Birepresentation,
    all_ok,
    compose_substitutions,
    enveloping_group,
    is_faithful,
    kernel,
    quadratic_family,
    regular_birepresentation,
    run_all_checks,
    triality_pair_reports,
    triality_substitute,
    validate,
)
from .errors import ClosureCapExceeded, MoufangError, TableParseError
from .loops import CayleyTable, classify, format_cayley_table, inverses, left_translation, right_translation
from .perms import DEFAULT_MAX_ORDER
from .quotient import kernel_is_normal_check, normal_divisors, pullback, quotient, quotient_report
from .reconstruction import check_conditions, forge_from_translations

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def resolve_table(source: str) -> CayleyTable:
    """Load a table from a path, from ``<data dir>/<source>[.tbl]``, or by catalog name."""
    path = Path(source)
    candidates = [path, catalog.data_dir() / source, catalog.data_dir() / f"{source}.tbl"]
    for p in candidates:
        if p.is_file():
            try:
                return catalog.load(p)
            except OSError as exc:
                raise UsageError(f"cannot read {p}: {exc}") from exc
    if source in catalog.names():
        return catalog.get(source)
    raise UsageError(f"no such file or catalog entry: {source}")


def parse_ids(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        return sorted({int(x) for x in text.replace(",", " ").split()})
    except ValueError:
        raise UsageError(f"malformed element list {text!r}") from None


def _regular_or_lifted(G: CayleyTable, divisor) -> Birepresentation:
    if divisor is None:
        return regular_birepresentation(G)
    qs = quotient(G, divisor)
    return pullback(regular_birepresentation(qs.quotient_table), qs)


# -- commands ---------------------------------------------------------------
# Each returns (exit status, payload for JSON, lines for text).

def cmd_classify(args, G):
    cls = classify(G)
    lines = [cls.summary()]
    if cls.unit is not None:
        lines.append(f"unit: {cls.unit}")
    lines += [f"  not {w.property}: {w.elements} {w.detail}" for w in cls.witnesses]
    return OK, cls.to_dict(), lines


def cmd_verify(args, G):
    n = G.order
    L = [left_translation(G, g) for g in range(n)]
    R = [right_translation(G, g) for g in range(n)]
    S, T = (R, L) if args.swapped else (L, R)
    sections = {"defining relations": validate(G, S, T)}
    if all_ok(sections["defining relations"][:3]):
        t = quadratic_family(Birepresentation(G, S, T))
        sections = run_all_checks(t)
    ok = all(all_ok(r) for r in sections.values())
    payload = {
        "pair": "(R,L)" if args.swapped else "(L,R)",
        "ok": ok,
        "sections": {k: [r.to_dict() for r in v] for k, v in sections.items()},
    }
    lines = []
    for name, reps in sections.items():
        lines.append(f"[{name}]")
        lines += ["  " + r.render().replace("\n", "\n  ") for r in reps]
    lines.append("all relations hold" if ok else "VIOLATIONS FOUND")
    return (OK if ok else FAILED), payload, lines


def cmd_kernel(args, G):
    b = _regular_or_lifted(G, parse_ids(args.divisor))
    K = sorted(kernel(b))
    normal = kernel_is_normal_check(b)
    faithful = is_faithful(b)
    payload = {"kernel": K, "faithful": faithful, "normal": normal}
    lines = [f"kernel: {K}", f"faithful: {faithful}", f"kernel is a normal divisor: {normal}"]
    return (OK if normal else FAILED), payload, lines


def cmd_envelope(args, G):
    b = _regular_or_lifted(G, parse_ids(args.divisor))
    group = enveloping_group(b, max_order=args.max_closure)
    payload = {"degree": group.degree, "generators": 2 * G.order, "order": group.order}
    return OK, payload, [f"enveloping group order: {group.order} (degree {group.degree})"]


def cmd_quotient(args, G):
    divisor = parse_ids(args.divisor)
    if divisor is None:
        found = [sorted(N) for N in normal_divisors(G)]
        return OK, {"normal_divisors": found}, ["normal divisors:"] + [f"  {N}" for N in found]
    rep = quotient_report(G, divisor)
    lines = [f"divisor: {rep['divisor']}", f"cosets: {rep['cosets']}",
             f"quotient order: {len(rep['cosets'])}", f"induced birepresentation faithful: {rep['faithful']}",
             format_cayley_table(CayleyTable(rep["quotient_table"])).rstrip()]
    return (OK if rep["faithful"] else FAILED), rep, lines


def cmd_triality(args, G):
    t = quadratic_family(regular_birepresentation(G))
    pairs = triality_pair_reports(t)
    subs = {name: triality_substitute(t, name) for name in SUBSTITUTIONS}
    table = {}
    composition_ok = True
    for a in SUBSTITUTIONS:
        for b in SUBSTITUTIONS:
            c = compose_substitutions(a, b)
            table[f"{a}*{b}"] = c
            composition_ok &= triality_substitute(subs[a], b) == subs[c]
    pairs_ok = all(all_ok(r) for r in pairs.values())
    ok = pairs_ok and composition_ok
    payload = {
        "ok": ok,
        "pairs": {k: [r.to_dict() for r in v] for k, v in pairs.items()},
        "composition": table,
        "composition_ok": composition_ok,
    }
    lines = [f"{name}: {'birepresentation' if all_ok(r) else 'NOT a birepresentation'}"
             for name, r in pairs.items()]
    lines.append(f"substitutions compose as S3: {composition_ok}")
    return (OK if ok else FAILED), payload, lines


def cmd_reconstruct(args, G):
    bar = None
    try:
        bar = inverses(G)
    except MoufangError:
        pass
    verdict = check_conditions(forge_from_translations(G, bar))
    payload = verdict.to_dict()
    if verdict.is_moufang_loop:
        lines = [f"Moufang loop reconstructed: unit {verdict.unit}, inverses {list(verdict.inverse_map)}"]
    else:
        lines = [f"hypotheses fail: condition {verdict.failed_condition}, witness {verdict.witness}"]
    return (OK if verdict.is_moufang_loop else FAILED), payload, lines


def cmd_catalog(args):
    if args.write:
        paths = catalog.write_all(args.write)
        return OK, {"written": [str(p) for p in paths]}, [str(p) for p in paths]
    if args.name:
        if args.name not in catalog.names():
            raise UsageError(f"no catalog entry named {args.name!r}")
        G = catalog.get(args.name)
        return OK, {"name": args.name, "table": G.rows}, [format_cayley_table(G).rstrip()]
    rows = [{"name": e.name, "order": e.table.order, "class": classify(e.table).summary()}
            for e in catalog.entries()]
    return OK, {"entries": rows}, [f"{r['name']:<12} {r['class']}" for r in rows]


COMMANDS = {
    "classify": (cmd_classify, "classify a Cayley table"),
    "verify": (cmd_verify, "check every birepresentation relation for (L,R,P)"),
    "kernel": (cmd_kernel, "kernel of the regular (or pulled-back) birepresentation"),
    "envelope": (cmd_envelope, "order of the enveloping group"),
    "quotient": (cmd_quotient, "normal divisors and quotient loops"),
    "triality": (cmd_triality, "triality pairs and substitutions"),
    "reconstruct": (cmd_reconstruct, "decide the reconstruction hypotheses for the translation triple"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-closure", type=int, default=DEFAULT_MAX_ORDER,
                        help="element cap for permutation group closure")
    common.add_argument("--quiet", action="store_true", help="print nothing; report by exit status")

    parser = argparse.ArgumentParser(prog="moufang", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("input", help="table file, or a catalog name")
        if name == "verify":
            p.add_argument("--swapped", action="store_true", help="use (R,L) instead of (L,R)")
        if name in ("kernel", "envelope", "quotient"):
            p.add_argument("--divisor", help="comma-separated element ids of a normal divisor")
    p = sub.add_parser("catalog", parents=[common], help="list or emit built-in tables")
    p.add_argument("name", nargs="?")
    p.add_argument("--write", metavar="DIR", help="write every catalog table to DIR")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK

    try:
        if args.command == "catalog":
            status, payload, lines = cmd_catalog(args)
        else:
            G = resolve_table(args.input)
            if args.command != "classify" and not classify(G).is_quasigroup:
                raise MoufangError("translations are not permutations: " + classify(G).summary())
            status, payload, lines = COMMANDS[args.command][0](args, G)
    except (UsageError, TableParseError) as exc:
        if not args.quiet:
            print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except ClosureCapExceeded as exc:
        status, payload, lines = FAILED, {"ok": False, "error": str(exc)}, [f"error: {exc}"]
    except MoufangError as exc:
        status, payload, lines = FAILED, {"ok": False, "error": str(exc)}, [f"failed: {exc}"]

    if not args.quiet:
        if args.format == "json":
            print(json.dumps(payload, indent=2))
        else:
            print("\n".join(lines))
    return status
