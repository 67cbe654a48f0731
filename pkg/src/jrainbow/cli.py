"""Command-line front end.

Exit codes: 0 success, 1 parse/validation error (or a colouring that fails
``verify``), 2 not colourable under ``solve --strict``, 3 oracle budget
exceeded, 4 solver/oracle mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalogue import predict
from .colouring import Colouring, colour_distribution, is_proper, rainbow_vertices
from .errors import BudgetExceeded, JRainbowError, ValidationError
from .graph import FAMILIES, Graph, family_spec, parse_graph, serialize_graph
from .solver import Mode, cross_check, default_budget, feasibility_check, j_number

EXIT_OK, EXIT_INVALID, EXIT_NOT_COLOURABLE, EXIT_BUDGET, EXIT_MISMATCH = 0, 1, 2, 3, 4


def _ints(tokens) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ValidationError(f"expected integer parameters, got {' '.join(tokens)!r}") from None


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read {source}: {exc.strerror}") from None


def load_graph(source: str, fmt: str | None) -> Graph:
    """Read a graph from a file, ``-`` (stdin) or a family shorthand like ``wheel:9``."""
    kind, sep, params = source.partition(":")
    if sep and kind in FAMILIES and not Path(source).exists():
        return family_spec(kind, *_ints(params.replace(",", " ").split())).generate()
    if fmt is None:
        fmt = "dimacs" if Path(source).suffix in (".col", ".dimacs") else "edge-list"
    return parse_graph(_read_text(source), fmt)


def load_colouring(source: str) -> Colouring:
    """One colour per line, line ``i`` colours vertex ``i``; ``#`` starts a comment."""
    colors = []
    for lineno, raw in enumerate(_read_text(source).splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            colors.append(int(line))
        except ValueError:
            raise ValidationError(f"{source} line {lineno}: expected one integer colour, got {line!r}") from None
    if not colors:
        raise ValidationError(f"{source}: no colours found")
    return Colouring.from_colors(colors)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _fmt_q(q) -> str:
    return "-" if q is None else str(q)


def _table_text(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells)


def cmd_family(args) -> int:
    g = family_spec(args.kind, *_ints(args.params)).generate()
    sys.stdout.write(serialize_graph(g, args.format or "edge-list"))
    return EXIT_OK


def cmd_solve(args) -> int:
    g = load_graph(args.graph, args.format)
    workers = 1 if args.canonical else args.jobs
    out = j_number(g, args.mode, per_k=args.per_k, workers=workers)
    if out.colourable:
        text = f"mode {out.mode.value}: k = {out.k} (delta+1 = {out.delta_plus_one})\n"
        text += "certificate: " + " ".join(map(str, out.certificate.colors))
    else:
        text = f"mode {out.mode.value}: not colourable (delta+1 = {out.delta_plus_one})"
    if out.per_k:
        text += "\nper-k: " + " ".join(f"{k}:{'yes' if f else 'no'}" for k, f in sorted(out.per_k.items()))
    _emit(args, out.to_json(), text)
    if args.strict and not out.colourable:
        return EXIT_NOT_COLOURABLE
    return EXIT_OK


def cmd_verify(args) -> int:
    g = load_graph(args.graph, args.format)
    c = load_colouring(args.colouring)
    ok = feasibility_check(args.mode)(g, c)
    proper = is_proper(g, c)
    rainbow = sorted(rainbow_vertices(g, c))
    payload = {
        "mode": args.mode.value,
        "feasible": ok,
        "k": c.k,
        "proper": proper,
        "rainbow_vertices": rainbow,
    }
    text = f"{'feasible' if ok else 'NOT feasible'} as {args.mode.value}-colouring with k = {c.k}"
    if not ok:
        missing = sorted(set(range(g.n)) - set(rainbow))
        text += f"\nproper: {proper}; non-rainbow vertices: {missing}"
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_INVALID


def cmd_stats(args) -> int:
    g = load_graph(args.graph, args.format)
    d = colour_distribution(g, load_colouring(args.colouring))
    payload = d.to_json()
    rows = [[i, t, p] for i, (t, p) in enumerate(zip(d.theta, d.pmf), start=1)]
    text = _table_text(["i", "theta", "f(i)"], rows)
    text += f"\nmean = {payload['mean'][0]}/{payload['mean'][1]}"
    text += f"\nvariance = {payload['variance'][0]}/{payload['variance'][1]}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_predict(args) -> int:
    p = predict(family_spec(args.kind, *_ints(args.params)))
    lines = [f"{p.family.label}: colourable = {p.colourable}"]
    if p.colourable:
        lines.append(f"J = {p.j_number}, J* = {p.j_star_number}")
    if p.mean is not None:
        lines.append(f"mean = {p.mean}, variance = {p.variance}")
    for name, prov in p.provenance.items():
        note = f" (printed value {prov.paper_value})" if prov.paper_value is not None else ""
        lines.append(f"  {name}: {prov.tag}{note}")
    _emit(args, p.to_json(), "\n".join(lines))
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = load_graph(args.graph, args.format)
    report = cross_check(g, args.mode, args.budget if args.budget is not None else default_budget())
    text = (
        f"solver k = {_fmt_q(report.solver.k)}, oracle k = {_fmt_q(report.oracle_k)}, "
        f"match = {report.match}"
    )
    _emit(args, report.to_json(), text)
    return EXIT_OK if report.match else EXIT_MISMATCH


def parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return range(int(text), int(text) + 1)
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise ValidationError(f"range must look like 3..18, got {text!r}") from None


def cmd_table(args) -> int:
    if args.kind == "multipartite":
        raise ValidationError("table needs a one-parameter family")
    rows = []
    for n in parse_range(args.range):
        spec = family_spec(args.kind, n)
        out = j_number(spec.generate(), args.mode)
        pred = predict(spec)
        pred_k = pred.j_number if args.mode is Mode.J else pred.j_star_number
        rows.append({
            "n": n,
            "label": spec.label,
            "colourable": out.colourable,
            "j": out.k,
            "predicted_colourable": pred.colourable,
            "predicted_j": pred_k,
            "agree": out.colourable == pred.colourable and out.k == pred_k,
        })
    header = ["n", "graph", "colourable", "J" if args.mode is Mode.J else "J*", "predicted", "agree"]
    text = _table_text(header, [
        [r["n"], r["label"], r["colourable"], _fmt_q(r["j"]), _fmt_q(r["predicted_j"]), r["agree"]]
        for r in rows
    ])
    _emit(args, {"family": args.kind, "mode": args.mode.value, "rows": rows}, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable JSON on stdout")
    common.add_argument("--format", choices=["edge-list", "dimacs"], help="graph file format")
    moded = argparse.ArgumentParser(add_help=False)
    moded.add_argument("--mode", type=Mode.parse, default=Mode.J, help="J (default) or Jstar")

    parser = argparse.ArgumentParser(prog="jrainbow", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", parents=[common], help="print a family graph")
    p.add_argument("kind", choices=list(FAMILIES))
    p.add_argument("params", nargs="+")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("solve", parents=[common, moded], help="compute the J / J* colouring number")
    p.add_argument("graph", help="graph file, '-' for stdin, or family shorthand such as wheel:9")
    p.add_argument("--strict", action="store_true", help="exit 2 when not colourable")
    p.add_argument("--canonical", action="store_true", help="force sequential search")
    p.add_argument("--jobs", type=int, default=1, help="threads for the per-k scan")
    p.add_argument("--per-k", action="store_true", help="report feasibility of every palette size")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", parents=[common, moded], help="check a colouring file")
    p.add_argument("graph")
    p.add_argument("colouring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", parents=[common], help="colour distribution, mean and variance")
    p.add_argument("graph")
    p.add_argument("colouring")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("predict", parents=[common], help="closed-form values for a family")
    p.add_argument("kind", choices=list(FAMILIES))
    p.add_argument("params", nargs="+")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("oracle", parents=[common, moded], help="cross-check solver against brute force")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=None, help="max assignments per palette (default 1e8)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("table", parents=[common, moded], help="solver vs closed form over a range of n")
    p.add_argument("kind", choices=[k for k in FAMILIES if k != "multipartite"])
    p.add_argument("range", help="inclusive range, e.g. 3..18")
    p.set_defaults(func=cmd_table)
    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"jrainbow: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except JRainbowError as exc:
        print(f"jrainbow: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
