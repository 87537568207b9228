"""Command-line front end.

Exit codes: 0 on success, 1 when a check ran and came out negative
(invalid graph or sequence, obstructed extension), 2 when the input could
not be used at all.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from typing import Any, Callable, Sequence, TextIO

from . import dot, eulercalc, graphio, mfunctions, plumbing, roundfold
from .errors import FoldError, GraphValidationError, InvalidGraph, InvalidSequence
from .foldcore import Codim, FoldLabel, path_label_counts, validate_target_graph
from .mfunctions import CONVENTIONS


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


class Result:
    """What a subcommand produced, before formatting."""

    def __init__(self, outputs: dict, text: str, code: int = 0, warnings: Sequence[str] = ()):
        self.outputs = outputs
        self.text = text
        self.code = code
        self.warnings = list(warnings)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _json_arg(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what} is not valid JSON: {exc.msg}") from exc


def _graph(ns, validate=True):
    raw = _read(ns.file)
    ns._inputs.append(raw)
    return graphio.parse_target_graph_json(raw, validate=validate)


# -- target graph commands -------------------------------------------------


def cmd_validate(ns) -> Result:
    g = _graph(ns, validate=False)
    report = validate_target_graph(g)
    if report.ok:
        try:
            graphio.parse_target_graph_json(ns._inputs[-1])
        except GraphValidationError as exc:
            report = exc.report
    violations = [str(v) for v in report.violations]
    text = "ok" if report.ok else "\n".join(violations)
    return Result({"ok": report.ok, "violations": violations}, text, 0 if report.ok else 1)


def cmd_euler(ns) -> Result:
    g = _graph(ns)
    chi = eulercalc.total_euler(g)
    return Result({"chi": chi}, str(chi), warnings=eulercalc.realizability_warnings(g))


def cmd_fiber(ns) -> Result:
    g = _graph(ns)
    chi = eulercalc.fiber_euler(g, ns.vertex)
    walk = eulercalc.fiber_euler_by_walk(g, ns.vertex)
    counts = path_label_counts(g, ns.vertex)
    warnings = [] if chi == walk else [f"formula gives {chi} but the fiber walk gives {walk}"]
    out = {
        "vertex": ns.vertex,
        "chi": chi,
        "walk_chi": walk,
        "depth": counts.total,
        "counts": {
            "min+": counts.min_plus,
            "min-": counts.min_minus,
            "max+": counts.max_plus,
            "max-": counts.max_minus,
        },
    }
    return Result(out, str(chi), warnings=warnings)


def cmd_mod2(ns) -> Result:
    g = _graph(ns)
    r = eulercalc.total_euler_mod2(g)
    return Result({"chi_mod2": r}, str(r))


def cmd_sc_mod2(ns) -> Result:
    g = _graph(ns)
    r = eulercalc.simply_connected_mod2(g)
    return Result({"chi_mod2": r}, str(r))


def cmd_extension_check(ns) -> Result:
    g = _graph(ns)
    v = eulercalc.extension_obstruction(ns.chi, g)
    out = {
        "verdict": "Consistent" if v.consistent else "Obstructed",
        "lhs": str(v.lhs),
        "rhs": v.rhs,
    }
    return Result(out, str(v), 0 if v.consistent else 1)


def cmd_export_dot(ns) -> Result:
    raw = _read(ns.file)
    ns._inputs.append(raw)
    data = graphio.load_json(raw)
    if isinstance(data, dict) and "central" in data:
        obj = graphio.plumbing_graph_from_dict(data)
    else:
        obj = graphio.target_graph_from_dict(data)
    text = dot.emit_dot(obj)
    if ns.output:
        with open(ns.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return Result({"dot": text}, text.rstrip("\n"))


# -- k = 1 ----------------------------------------------------------------


def _sequence(ns):
    raw = _read(ns.file)
    ns._inputs.append(raw)
    return graphio.sequence_from_dict(graphio.load_json(raw))


def cmd_mfunc(ns) -> Result:
    seq = _sequence(ns)
    if ns.action == "validate":
        report = mfunctions.validate_sequence(seq)
        violations = [str(v) for v in report.violations]
        text = "ok" if report.ok else "\n".join(violations)
        return Result({"ok": report.ok, "violations": violations}, text, 0 if report.ok else 1)
    if ns.action == "handles":
        h = mfunctions.handle_decomposition(seq)
        counts = {str(i): c for i, c in sorted(h.counts().items())}
        chi = mfunctions.euler_from_handles(h)
        text = ", ".join(f"{c} x {i}-handle" for i, c in sorted(h.counts().items())) + f"; chi = {chi}"
        return Result({"n": h.n, "handles": list(h.handles), "counts": counts, "chi": chi}, text)
    dt = mfunctions.diffeotype(seq, ns.ball_count_convention)
    out = {
        "kind": dt.kind.value,
        "n": dt.n,
        "count": dt.count,
        "chi": dt.euler,
        "convention": ns.ball_count_convention,
        "convention_note": dt.convention_note,
    }
    return Result(out, str(dt))


def cmd_surface_gen(ns) -> Result:
    dec = mfunctions.generate_surface_mfunction(ns.g, ns.s, ns.b)
    blocks = [{"kind": b.kind.value, "index": b.index, "euler": b.euler} for b in dec.blocks]
    text = " ".join(b.kind.value for b in dec.blocks) + f"; chi = {dec.euler}"
    return Result({"g": ns.g, "s": ns.s, "b": ns.b, "blocks": blocks, "chi": dec.euler}, text)


# -- arrangements -----------------------------------------------------------


def cmd_arrange(ns) -> Result:
    if ns.kind == "round":
        labels = [FoldLabel.parse(s) for s in ns.labels.replace(",", " ").split()] if ns.labels else []
        g = roundfold.target_graph_from_round(Codim(ns.n, ns.k), labels)
    else:
        if not ns.file:
            raise UsageError("arrange forest: a forest JSON file is required")
        raw = _read(ns.file)
        ns._inputs.append(raw)
        codim, forest = graphio.forest_from_dict(graphio.load_json(raw))
        g = roundfold.target_graph_from_forest(codim, forest)
    doc = graphio.target_graph_to_dict(g)
    return Result({"graph": doc}, graphio.dumps(doc).rstrip("\n"))


# -- plumbing -----------------------------------------------------------------


def cmd_plumb(ns) -> Result:
    if ns.action == "factor":
        if ns.arg is None:
            raise UsageError("plumb factor: a 2x2 JSON matrix is required")
        m = graphio.matrix_from_json(_json_arg(ns.arg, "matrix"))
        es = plumbing.factor_attaching(plumbing.AttachingMatrix(m))
        return Result({"matrix": m.rows(), "factors": es}, json.dumps(es))
    if ns.action == "compose":
        es = _json_arg(ns.arg if ns.arg is not None else "[]", "factor list")
        if not isinstance(es, list) or not all(isinstance(e, int) and not isinstance(e, bool) for e in es):
            raise UsageError("factor list must be a JSON array of integers")
        m = plumbing.compose_factors(es)
        return Result({"factors": es, "matrix": m.rows()}, json.dumps(m.rows()))
    attachings = _json_arg(ns.attachings, "--attachings")
    if not isinstance(attachings, list):
        raise UsageError("--attachings must be a JSON array of 2x2 matrices")
    mats = [plumbing.AttachingMatrix(graphio.matrix_from_json(a)) for a in attachings]
    pg = plumbing.build_plumbing_graph(ns.g, ns.b, mats, ns.signs)
    doc = graphio.plumbing_graph_to_dict(pg)
    return Result({"plumbing_graph": doc}, graphio.dumps(doc).rstrip("\n"))


# -- driver -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)

    p = _Parser(
        prog="foldchi",
        description="Euler characteristics and plumbing data for submersions with definite folds.",
    )
    p.add_argument("--format", choices=("json", "text"), default="text")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("file", help="target-graph JSON file, or - for stdin")
        sp.set_defaults(fn=fn)
        return sp

    graph_cmd("validate", cmd_validate, "check a target graph")
    graph_cmd("euler", cmd_euler, "Euler characteristic of the source manifold")
    graph_cmd("fiber", cmd_fiber, "Euler characteristic of a regular fiber").add_argument("--vertex", required=True)
    graph_cmd("mod2", cmd_mod2, "Euler characteristic mod 2 from depths")
    graph_cmd("sc-mod2", cmd_sc_mod2, "mod 2 formula for simply connected boundary, k = 3")
    graph_cmd("extension-check", cmd_extension_check, "necessary condition for a non-singular extension").add_argument(
        "--chi", type=int, required=True, help="Euler characteristic of the closed manifold M"
    )
    graph_cmd("export-dot", cmd_export_dot, "render a target or plumbing graph JSON as DOT").add_argument(
        "--output", "-o", help="also write the DOT text to this file"
    )

    sp = sub.add_parser("mfunc", parents=[common], help="critical sequences of functions (k = 1)")
    sp.add_argument("action", choices=("validate", "handles", "diffeotype"))
    sp.add_argument("file", help="sequence JSON file, or - for stdin")
    sp.add_argument("--ball-count-convention", choices=CONVENTIONS, default=None)
    sp.set_defaults(fn=cmd_mfunc)

    sp = sub.add_parser("surface-gen", parents=[common], help="block decomposition for a surface with boundary")
    sp.add_argument("--g", type=int, default=0, help="orientable genus")
    sp.add_argument("--s", type=int, default=0, help="number of RP^2 summands")
    sp.add_argument("--b", type=int, default=1, help="number of boundary circles")
    sp.set_defaults(fn=cmd_surface_gen)

    sp = sub.add_parser("arrange", parents=[common], help="target graph of a sphere arrangement")
    sp.add_argument("kind", choices=("round", "forest"))
    sp.add_argument("file", nargs="?", help="forest JSON file (forest only)")
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--labels", default="", help='outer-to-inner labels, e.g. "min+,max+"')
    sp.set_defaults(fn=cmd_arrange)

    sp = sub.add_parser("plumb", parents=[common], help="attaching matrices and plumbing graphs")
    sp.add_argument("action", choices=("factor", "compose", "graph"))
    sp.add_argument("arg", nargs="?", help="factor: 2x2 JSON matrix; compose: JSON list of integers")
    sp.add_argument("--g", type=int, default=0, help="genus of F^-1(L)")
    sp.add_argument("--b", type=int, default=1, help="boundary components of F^-1(L)")
    sp.add_argument("--attachings", default="[]", help="JSON array of 2x2 matrices")
    sp.add_argument("--signs", choices=plumbing.SIGN_CONVENTIONS, default=plumbing.NEGATE)
    sp.set_defaults(fn=cmd_plumb)
    return p


def _digest(ns, inputs: Sequence[str]) -> str:
    """SHA-256 over the options and input contents; file paths are left out."""
    skip = {"fn", "file", "output", "format", "_inputs"}
    opts = {k: v for k, v in vars(ns).items() if k not in skip}
    h = hashlib.sha256(json.dumps(opts, sort_keys=True, default=str).encode("utf-8"))
    for part in inputs:
        h.update(b"\0")
        h.update(part.encode("utf-8"))
    return h.hexdigest()


def run(argv: Sequence[str], stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(list(argv))
        if ns.command == "mfunc" and ns.ball_count_convention is None:
            ns.ball_count_convention = mfunctions.default_convention()
        if ns.command == "arrange" and ns.kind == "round" and (ns.n is None or ns.k is None):
            raise UsageError("arrange round: --n and --k are required")
        ns._inputs = []
        fn: Callable[[Any], Result] = ns.fn
        result = fn(ns)
    except UsageError as exc:
        print(str(exc), file=stderr)
        return 2
    except (InvalidGraph, InvalidSequence) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except FoldError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    if ns.format == "json":
        doc = {
            "command": " ".join([ns.command] + [getattr(ns, a) for a in ("action", "kind") if getattr(ns, a, None)]),
            "inputs_digest": _digest(ns, ns._inputs),
            "outputs": result.outputs,
            "warnings": result.warnings,
        }
        stdout.write(graphio.dumps(doc))
    else:
        stdout.write(result.text + "\n")
        for w in result.warnings:
            print(f"warning: {w}", file=stderr)
    return result.code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
