"""Command-line interface: ``hyperseidel <command> ...``.

Exit codes: 0 ok, 1 verification failures, 2 usage or input error,
3 eigensolver non-convergence, 4 partition not equitable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .equitable import format_partition, parse_partition, quotient_matrix
from .errors import EdgeNotFound, HyperSeidelError, NoConvergence, NotEquitable
from .hypergraph import (
    FIXTURES,
    BipartitionLabels,
    Hypergraph,
    classify_edge,
    delete_hyperedge,
    gen_complete_bipartite,
    gen_turan,
    load_fixture,
    read_hypergraph,
    strong_delete_vertex,
    to_json,
    weak_delete_vertex,
)
from .linalg import DEFAULT_TOL, char_poly_exact, inertia_of
from .poly import real_roots
from .seidel import seidel_matrix, seidel_spectrum
from . import verify

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_NUMERIC, EXIT_NOT_EQUITABLE = 0, 1, 2, 3, 4


class UsageError(HyperSeidelError):
    pass


def _default_tol(fallback: float = DEFAULT_TOL) -> float:
    raw = os.environ.get("SEIDEL_TOL")
    if raw is None:
        return fallback
    try:
        tol = float(raw)
    except ValueError as exc:
        raise UsageError(f"SEIDEL_TOL={raw!r} is not a number") from exc
    if tol <= 0:
        raise UsageError("SEIDEL_TOL must be positive")
    return tol


def _load(source: str) -> Hypergraph:
    """A path, or ``fixture:NAME`` for a bundled example."""
    if source.startswith("fixture:"):
        return load_fixture(source.split(":", 1)[1])
    path = Path(source)
    if not path.is_file():
        raise UsageError(f"cannot read {source!r}")
    return read_hypergraph(path)


def _parse_edge(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) - 1 for t in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad edge {text!r}; use 1-based labels like 1,2,4") from exc


def _parse_vertex(text: str) -> int:
    try:
        return int(text) - 1
    except ValueError as exc:
        raise UsageError(f"bad vertex {text!r}") from exc


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _apply_deletions(h: Hypergraph, args):
    summary = None
    if getattr(args, "delete_edge", None):
        h = delete_hyperedge(h, _parse_edge(args.delete_edge))
    vertex = getattr(args, "delete_vertex", None)
    if vertex is not None:
        h, summary = _delete_vertex(h, _parse_vertex(vertex), args.mode)
    return h, summary


def _delete_vertex(h: Hypergraph, v: int, mode: str):
    if mode == "weak":
        return weak_delete_vertex(h, v, return_summary=True)
    return strong_delete_vertex(h, v, keep_vertex=(mode == "isolate"), return_summary=True)


def _fmt(x: float) -> str:
    return f"{x:.10f}".rstrip("0").rstrip(".") if abs(x) >= 5e-11 else "0"


# --- commands -------------------------------------------------------------

def cmd_gen(args) -> int:
    if args.kind == "complete-bipartite":
        h, _ = gen_complete_bipartite(args.k, args.m, args.n)
    elif args.kind == "turan":
        h, _ = gen_turan(args.n, args.k, args.r, strict=args.strict)
    else:
        h = load_fixture(args.name)
    if args.out:
        Path(args.out).write_text(to_json(h), encoding="utf-8")
        print(f"edges: {len(h.edges)}")
    else:
        sys.stdout.write(to_json(h))
        print(f"edges: {len(h.edges)}", file=sys.stderr)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    h, _ = _apply_deletions(_load(args.file), args)
    spec = seidel_spectrum(h, tol=args.tol)
    inertia = inertia_of(spec)
    if args.json:
        doc = {"order": h.n, "eigenvalues": list(spec.values),
               "clusters": [[v, k] for v, k in spec.clusters()],
               "energy": spec.energy, "trace_residual": spec.residual,
               "inertia": list(inertia)}
        print(json.dumps(doc))
        return EXIT_OK
    print(f"order {h.n}, edges {len(h.edges)}")
    print("eigenvalue       multiplicity")
    for value, mult in spec.clusters():
        print(f"{_fmt(value):>16}  {mult}")
    print(f"trace residual  {spec.residual:.3e}")
    print(f"inertia         (+{inertia.n_pos}, 0:{inertia.n_zero}, -{inertia.n_neg})")
    print(f"energy          {spec.energy:.7f}")
    return EXIT_OK


def cmd_energy(args) -> int:
    h, _ = _apply_deletions(_load(args.file), args)
    energy = seidel_spectrum(h, tol=args.tol).energy if h.n else 0.0
    print(f"{energy:.7f}")
    return EXIT_OK


def _detect_bipartition(h: Hypergraph, spec: str | None) -> BipartitionLabels | None:
    if spec:
        p = parse_partition(spec)
        if p.size != 2:
            raise UsageError("--bipartition needs exactly two blocks")
        return BipartitionLabels(p.blocks[0], p.blocks[1])
    for m in range(1, h.n):
        if gen_complete_bipartite(3, m, h.n - m)[0] == h:
            return BipartitionLabels(tuple(range(m)), tuple(range(m, h.n)))
    return None


def cmd_delete(args) -> int:
    h = _load(args.file)
    if bool(args.edge) == (args.vertex is not None):
        raise UsageError("give exactly one of --edge or --vertex")
    lines = []
    if args.edge:
        edge = _parse_edge(args.edge)
        labels = _detect_bipartition(h, args.bipartition)
        out = delete_hyperedge(h, edge)
        lines.append(f"removed edge {{{','.join(str(v + 1) for v in sorted(edge))}}}")
        if labels is not None:
            kind = classify_edge(edge, labels)
            lines.append(f"edge type: Type{kind.value}")
        else:
            lines.append("edge type: unclassified (no bipartition)")
    else:
        out, summary = _delete_vertex(h, _parse_vertex(args.vertex), args.mode)
        lines.append(f"mode {args.mode}: removed {summary.removed}, shrunk {summary.shrunk}, "
                     f"merged {summary.merged}, containments {summary.containments}")
    lines.append(f"vertices {out.n}, edges {len(out.edges)}")
    if args.out:
        Path(args.out).write_text(to_json(out), encoding="utf-8")
    else:
        sys.stdout.write(to_json(out))
    print("\n".join(lines), file=sys.stderr if not args.out else sys.stdout)
    return EXIT_OK


def cmd_quotient(args) -> int:
    h, _ = _apply_deletions(_load(args.file), args)
    partition = parse_partition(args.partition)
    s = seidel_matrix(h)
    try:
        q = quotient_matrix(s, partition)
    except NotEquitable as exc:
        r, c, i, i2 = exc.witness
        print("not equitable")
        print(f"witness: vertices {i + 1} and {i2 + 1} in block {r + 1} have different "
              f"sums over block {c + 1}")
        return EXIT_NOT_EQUITABLE
    poly = char_poly_exact(q)
    roots = real_roots(poly)
    print(f"equitable partition {format_partition(partition)}")
    print("quotient matrix:")
    width = max(len(str(v)) for row in q for v in row)
    for row in q:
        print("  " + " ".join(f"{v:>{width}}" for v in row))
    print(f"det(xI - Q) = {poly}")
    print("real roots: " + ", ".join(_fmt(r) for r in roots))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in verify.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(verify.SUITES)}")
    m_range = verify.parse_range(args.m_range) if args.m_range else None
    n_range = verify.parse_range(args.n_range) if args.n_range else None
    tol = args.tol if args.tol is not None else _default_tol(verify.ANALYTIC_TOL)
    result = verify.run_suite(args.suite, m_range, n_range, tol=tol, jobs=args.jobs,
                              samples=args.max)
    text = verify.rows_to_csv(result.rows) if args.format == "csv" else verify.rows_to_jsonl(result.rows)
    _write_or_print(text, args.out)
    if args.runtimes:
        Path(args.runtimes).write_text("".join(f"{t:.6f}\n" for t in result.runtimes), encoding="utf-8")
    counts = result.counts()
    print(f"{args.suite}: {counts['pass']} pass, {counts['fail']} fail, "
          f"{counts['reported']} reported", file=sys.stderr)
    return EXIT_OK if result.ok else EXIT_FAIL


def cmd_sweep(args) -> int:
    if args.family != "c3":
        raise UsageError("only the c3 family is supported")
    text = verify.sweep_csv(args.quantity, verify.parse_range(args.m_range),
                            verify.parse_range(args.n_range))
    _write_or_print(text, args.out)
    return EXIT_OK


# --- parser ---------------------------------------------------------------

def _add_deletion_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--delete-edge", metavar="A,B,C", help="delete this edge first (1-based)")
    p.add_argument("--delete-vertex", metavar="V", help="delete this vertex first (1-based)")
    p.add_argument("--mode", choices=("strong", "weak", "isolate"), default="strong",
                   help="vertex deletion mode; isolate drops incident edges but keeps the vertex")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperseidel",
                                     description="Seidel spectra and energy of hypergraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a hypergraph as canonical JSON")
    gen_sub = gen.add_subparsers(dest="kind", required=True)
    cb = gen_sub.add_parser("complete-bipartite")
    cb.add_argument("--k", type=int, default=3)
    cb.add_argument("--m", type=int, required=True)
    cb.add_argument("--n", type=int, required=True)
    tu = gen_sub.add_parser("turan")
    tu.add_argument("--n", type=int, required=True)
    tu.add_argument("--k", type=int, required=True)
    tu.add_argument("--r", type=int, required=True)
    tu.add_argument("--strict", action="store_true",
                    help="require every edge vertex in a distinct part")
    fx = gen_sub.add_parser("fixture")
    fx.add_argument("--name", required=True, choices=FIXTURES)
    for p in (cb, tu, fx):
        p.add_argument("--out", help="output file (default stdout)")
    gen.set_defaults(func=cmd_gen)

    for name, func, helptext in (("spectrum", cmd_spectrum, "Seidel eigenvalues"),
                                 ("energy", cmd_energy, "Seidel energy")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file", help="hypergraph JSON, or fixture:NAME")
        _add_deletion_flags(p)
        p.add_argument("--tol", type=float, default=None)
        if name == "spectrum":
            p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)

    de = sub.add_parser("delete", help="delete an edge or a vertex")
    de.add_argument("file")
    de.add_argument("--edge", metavar="A,B,C")
    de.add_argument("--vertex", metavar="V")
    de.add_argument("--mode", choices=("strong", "weak", "isolate"), default="strong")
    de.add_argument("--bipartition", metavar="SPEC",
                    help='two blocks like "1-3|4-9" for edge classification')
    de.add_argument("--out")
    de.set_defaults(func=cmd_delete)

    qu = sub.add_parser("quotient", help="exact quotient of an equitable partition")
    qu.add_argument("file")
    qu.add_argument("--partition", required=True, metavar="SPEC", help='e.g. "1|2,3|4-9"')
    _add_deletion_flags(qu)
    qu.set_defaults(func=cmd_quotient)

    ve = sub.add_parser("verify", help="run a verification suite")
    ve.add_argument("--suite", required=True)
    ve.add_argument("--m-range", metavar="LO:HI")
    ve.add_argument("--n-range", metavar="LO:HI")
    ve.add_argument("--tol", type=float, default=None)
    ve.add_argument("--max", type=int, default=100, help="sample count for random suites")
    ve.add_argument("--jobs", type=int, default=1)
    ve.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    ve.add_argument("--out")
    ve.add_argument("--runtimes", metavar="FILE", help="write per-cell runtimes here")
    ve.set_defaults(func=cmd_verify)

    sw = sub.add_parser("sweep", help="closed form vs eigensolve over a grid, as CSV")
    sw.add_argument("--quantity", choices=("energy", "spectrum"), default="energy")
    sw.add_argument("--family", default="c3")
    sw.add_argument("--m-range", required=True, metavar="LO:HI")
    sw.add_argument("--n-range", required=True, metavar="LO:HI")
    sw.add_argument("--out")
    sw.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_INPUT
    try:
        if getattr(args, "tol", "absent") is None and args.command != "verify":
            args.tol = _default_tol()
        return args.func(args)
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except NotEquitable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_EQUITABLE
    except (HyperSeidelError, EdgeNotFound, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
