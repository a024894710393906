"""Command line front end: construct objects, report attributes, run the theorem audit.

Exit codes: 0 success (or every certificate PASS), 1 at least one FAIL
certificate, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .audit import SuiteConfig, run_suite, worst_verdict, write_certificates, FAIL
from .errors import ConfigError, RankMetricError
from .report import construct_and_report


def _json_arg(value: str):
    """Inline JSON, or the path of a file holding it."""
    if os.path.isfile(value):
        with open(value) as fh:
            return json.load(fh)
    try:
        return json.loads(value)
    except json.JSONDecodeError:
        return value


def _tower_flags(p: argparse.ArgumentParser, m_default: int | None = 1) -> None:
    p.add_argument("--p", type=int, help="characteristic")
    p.add_argument("--e", type=int, default=1, help="GF(q) = GF(p^e)")
    p.add_argument("--m", type=int, default=m_default, help="extension degree")
    p.add_argument("--tower", type=_json_arg, help="tower descriptor (JSON or file), overrides --p/--e/--m")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-enum", type=int, default=None, help="cap on enumerated codewords")
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--format", choices=["json", "csv"], default="json")


def _code_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int, help="code length, at most m (default m)")
    p.add_argument("--s", type=int, default=1, help="cartesian power")
    p.add_argument("--basis", type=_json_arg, default="self-dual",
                   help="self-dual, almost, polynomial, or a JSON list of element coordinates")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rankmetric", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_field = sub.add_parser("field", help="describe the tower GF(p) < GF(p^e) < GF(p^(em))")
    _tower_flags(p_field)
    _common(p_field)

    p_basis = sub.add_parser("basis", help="self-dual, almost self-dual and dual bases")
    bsub = p_basis.add_subparsers(dest="action", required=True)
    for name in ("find-self-dual", "find-almost", "dual"):
        b = bsub.add_parser(name)
        _tower_flags(b)
        _common(b)
        if name == "dual":
            b.add_argument("--basis", type=_json_arg, default="polynomial")

    p_gab = sub.add_parser("gabidulin", help="Gabidulin codes over GF(q^m)")
    gsub = p_gab.add_subparsers(dest="action", required=True)
    g_new = gsub.add_parser("new", help="Moore-matrix code from a basis")
    _tower_flags(g_new)
    _code_flags(g_new)
    _common(g_new)
    g_check = gsub.add_parser("check", help="report on a serialized vector code")
    g_check.add_argument("--code", type=_json_arg, required=True)
    _common(g_check)

    p_del = sub.add_parser("delsarte", help="matrix codes over GF(q)")
    dsub = p_del.add_subparsers(dest="action", required=True)
    d_exp = dsub.add_parser("expand", help="expand a Gabidulin code into a matrix code")
    _tower_flags(d_exp)
    _code_flags(d_exp)
    d_exp.add_argument("--expand-basis", type=_json_arg, default=None, help="defaults to --basis")
    _common(d_exp)
    d_anti = dsub.add_parser("anticode", help="ambient restriction F^(n x m)(U)")
    d_anti.add_argument("--p", type=int)
    d_anti.add_argument("--e", type=int, default=1)
    d_anti.add_argument("--n", type=int, required=True)
    d_anti.add_argument("--m", type=int, required=True)
    d_anti.add_argument("--U", type=_json_arg, default=[], help="JSON list of spanning vectors")
    _common(d_anti)
    d_check = dsub.add_parser("check", help="report on a serialized matrix code")
    d_check.add_argument("--code", type=_json_arg, required=True)
    _common(d_check)

    p_suite = sub.add_parser("suite", help="theorem audit")
    ssub = p_suite.add_subparsers(dest="action", required=True)
    s_run = ssub.add_parser("run")
    s_run.add_argument("--config", type=_json_arg, help="JSON config (inline or file)")
    _common(s_run)
    return parser


def _report_params(args: argparse.Namespace) -> tuple[str, dict]:
    cmd, action = args.command, getattr(args, "action", None)
    params = {k: v for k, v in vars(args).items() if k not in ("command", "action", "out", "format")}
    if cmd == "field":
        return "field", params
    if cmd == "basis":
        return {"find-self-dual": "self-dual-basis", "find-almost": "almost-self-dual-basis",
                "dual": "dual-basis"}[action], params
    if cmd == "gabidulin":
        return ("gabidulin" if action == "new" else "vector-code"), params
    if action == "expand":
        return "expand", params
    if action == "anticode":
        return "anticode", params
    return "matrix-code", params


def _write_report(report: dict, stream, fmt: str) -> None:
    if fmt == "json":
        stream.write(json.dumps(report, sort_keys=True) + "\n")
        return
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["key", "value"])
    for key in sorted(report):
        writer.writerow([key, json.dumps(report[key], sort_keys=True, separators=(",", ":"))])


def _run_suite(args: argparse.Namespace, stream) -> int:
    if not isinstance(args.config, (dict, type(None))):
        raise ConfigError("--config must be a JSON object or a file holding one")
    cfg = SuiteConfig.from_dict(args.config) if args.config else SuiteConfig()
    if args.seed is not None:
        cfg.seed = args.seed
    if args.max_enum is not None:
        cfg.max_enum = args.max_enum
    certs = run_suite(cfg)
    write_certificates(certs, stream, args.format)
    return 1 if worst_verdict(certs) == FAIL else 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = getattr(args, "out", None)
    if args.command == "suite" and out is None and isinstance(args.config, dict):
        out = args.config.get("out")
    try:
        stream = open(out, "w") if out else sys.stdout
    except OSError as exc:
        print(f"rankmetric: cannot open {out}: {exc}", file=sys.stderr)
        return 2
    try:
        if args.command == "suite":
            return _run_suite(args, stream)
        kind, params = _report_params(args)
        _write_report(construct_and_report(kind, params), stream, args.format)
        return 0
    except (RankMetricError, KeyError, TypeError, json.JSONDecodeError) as exc:
        print(f"rankmetric: {exc}", file=sys.stderr)
        return 2
    finally:
        if out:
            stream.close()


if __name__ == "__main__":
    sys.exit(main())
