"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a verification fails (the
report carries a witness), 2 on input or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, reports
from .document import DocumentError, dump_model, load_model, model_to_dict
from .errors import DimensionError, StructureError

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _global_flags(parser: argparse.ArgumentParser, default) -> None:
    parser.add_argument("--format", choices=("text", "json"), default=default or "text",
                        help="report format (default: text)")
    parser.add_argument("--quiet", action="store_true", default=default or False,
                        help="print nothing; only set the exit code")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="contactpairs", description="Exact verification of contact pairs and related structures "
                     "on left-invariant models of Lie groups.")
    _global_flags(parser, None)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    cat = sub.add_parser("catalog", help="built-in fixture models", parents=[common])
    cat_sub = cat.add_subparsers(dest="action", required=True, parser_class=_Parser)
    cat_sub.add_parser("list", help="list catalog models", parents=[common])
    show = cat_sub.add_parser("show", help="show one catalog model", parents=[common])
    show.add_argument("name")
    show.add_argument("--export", metavar="FILE", help="write the model document to FILE")

    def command(name, help, *args):
        p = sub.add_parser(name, help=help, parents=[common])
        p.add_argument("file", help="model document (JSON)")
        for flag, kw in args:
            p.add_argument(flag, **kw)
        return p

    req = {"required": True}
    command("verify", "Jacobi identity and every attached object")
    command("contact-pair", "verify a contact pair", ("--alpha", req), ("--beta", req),
            ("--h", {"type": int}), ("--k", {"type": int}))
    command("reeb", "solve for the Reeb vector fields", ("--alpha", req), ("--beta", req))
    command("to-lcs", "contact pair (or generalized pair with --c) to lcs form", ("--alpha", req),
            ("--beta", req), ("--c", {"help": "rational value or 'formal'"}),
            ("--write-model", {"metavar": "FILE", "help": "write the model with omega and theta attached"}))
    command("from-lcs", "lcs form plus automorphism X to contact pair", ("--omega", req),
            ("--x", {"required": True, "help": "comma-separated rationals"}))
    command("lcs", "verify an lcs form and its Lee vector field", ("--omega", req))
    command("nijenhuis", "integrability of an almost complex structure", ("--j", req))
    command("normal", "normality of a metric contact pair", ("--alpha", req), ("--beta", req),
            ("--j", req), ("--g", req))
    command("vaisman", "lcK and Vaisman conditions of a Hermitian structure", ("--j", req), ("--g", req))
    command("symplectic-pair", "verify a symplectic pair", ("--w1", req), ("--w2", req))
    command("kahler-pair", "verify a Kähler pair", ("--w1", req), ("--w2", req), ("--j", req), ("--g", req))
    command("derivation", "an outer derivation preserving a pair", ("--d", req), ("--alpha", req),
            ("--beta", req), ("--j", {}))
    return parser


def _emit(args, text: str, payload) -> None:
    if args.quiet:
        return
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _catalog(args) -> int:
    if args.action == "list":
        names = catalog.list_models()
        _emit(args, "\n".join(names), names)
        return EXIT_OK
    model = catalog.load_model(args.name)
    if args.export:
        dump_model(model, args.export)
    lines = [f"{model.name}: dimension {model.dim}", f"  provenance: {model.provenance}"]
    lines.append("  d: " + ", ".join(f"d{n} = {dw!r}" for n, dw in zip(model.coframe, model.algebra.differentials())))
    for kind, table in (("forms", model.forms), ("endomorphisms", model.endomorphisms), ("metrics", model.metrics)):
        if table:
            lines.append(f"  {kind}: {', '.join(table)}")
    for row in model.checks:
        args_text = " ".join(f"--{k} {v}" for k, v in row.get("args", {}).items())
        lines.append(f"  expect {'pass' if row['ok'] else 'fail'}: {row['command']} {args_text}")
    _emit(args, "\n".join(lines), model_to_dict(model))
    return EXIT_OK


def _dispatch(args) -> reports.Report:
    model = load_model(args.file)
    c = args.command
    if c == "verify":
        return reports.run_verify(model)
    if c == "contact-pair":
        return reports.run_contact_pair(model, args.alpha, args.beta, args.h, args.k)
    if c == "reeb":
        return reports.run_reeb(model, args.alpha, args.beta)
    if c == "to-lcs":
        rep = reports.run_to_lcs(model, args.alpha, args.beta, args.c)
        if args.write_model and rep.ok and "omega" in rep.data:
            reports.write_lcs_model(model, rep, args.write_model)
        return rep
    if c == "from-lcs":
        return reports.run_from_lcs(model, args.omega, args.x)
    if c == "lcs":
        return reports.run_lcs(model, args.omega)
    if c == "nijenhuis":
        return reports.run_nijenhuis(model, args.j)
    if c == "normal":
        return reports.run_normal(model, args.alpha, args.beta, args.j, args.g)
    if c == "vaisman":
        return reports.run_vaisman(model, args.j, args.g)
    if c == "symplectic-pair":
        return reports.run_symplectic_pair(model, args.w1, args.w2)
    if c == "kahler-pair":
        return reports.run_kahler_pair(model, args.w1, args.w2, args.j, args.g)
    if c == "derivation":
        return reports.run_derivation(model, args.d, args.alpha, args.beta, args.j)
    raise AssertionError(c)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "catalog":
            return _catalog(args)
        try:
            rep = _dispatch(args)
        except StructureError as exc:
            if isinstance(exc, DimensionError):
                raise
            rep = reports.Report(args.command, args.file)
            rep.add(args.command, False, f"{type(exc).__name__}: {exc}")
    except (DocumentError, DimensionError, ValueError, KeyError, OSError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        if not args.quiet:
            if args.format == "json":
                print(json.dumps({"error": type(exc).__name__, "message": message}), file=sys.stderr)
            else:
                print(f"error: {message}", file=sys.stderr)
        return EXIT_INPUT
    _emit(args, rep.to_text(), rep.to_dict())
    return EXIT_OK if rep.ok else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
