"""Command-line interface.

Subcommands: ``check`` (claw-freeness + innocence certificates), ``solve``
(strong stable set, optionally through prescribed vertices), ``generate``
(family generators), ``decompose`` (report found decompositions), and
``roundtrip`` (line-graph root recovery).

Exit codes: 0 for a definitive answer, 1 for usage or input errors, 2 when a
budget was exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .core import (
    Budget,
    BudgetExceededError,
    Graph,
    GraphError,
    Multigraph,
    is_strong_stable_set,
    line_graph,
    squares,
)
from .decompose import (
    HypothesisViolationError,
    find_clique_cutset,
    find_one_join,
    find_zero_join,
    grow_square_connected_pair,
    internal_clique_cutset_from_deletion,
)
from .forbidden import Innocent, innocence_certificate
from .generators import GenSpec, GenerationError, generate
from .graphio import (
    FormatError,
    certificate_json,
    encode_graph6,
    format_edgelist,
    parse_graph,
)
from .linegraph import recover_root
from .recognizers import find_claw, find_twins, simplicial_vertices
from .solver import SolveStatus, solve


class CliUsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit code 1 for usage problems, not argparse's 2
        raise CliUsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="strongstable", description=__doc__)
    p.add_argument("--version", action="version", version=f"strongstable {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_input=True):
        if with_input:
            sp.add_argument("input", nargs="?", default="-", help="path or - for stdin")
            sp.add_argument(
                "--format", choices=("auto", "graph6", "edgelist"), default="auto"
            )
        sp.add_argument("--json", action="store_true", help="emit a JSON certificate")
        sp.add_argument("--output", default="-", help="output path (default stdout)")
        sp.add_argument("--budget-vertices", type=int, default=24)
        sp.add_argument("--budget-enum", type=int, default=1_000_000)

    sp = sub.add_parser("check", help="claw-freeness and innocence certificates")
    common(sp)

    sp = sub.add_parser("solve", help="strong stable set computation")
    common(sp)
    sp.add_argument("--require", default="", help="comma-separated prescribed vertices")
    sp.add_argument(
        "--trusted", action="store_true", help="skip validating the prescribed set"
    )

    sp = sub.add_parser("generate", help="family generators")
    common(sp, with_input=False)
    sp.add_argument("--kind", required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--c1", type=int)
    sp.add_argument("--c2", type=int)
    sp.add_argument("--path", type=int)
    sp.add_argument("--paths", help="comma-separated path lengths")
    sp.add_argument("--variant", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--base-size", type=int)
    sp.add_argument("--size", type=int)
    sp.add_argument("--rate", type=float)
    sp.add_argument("--sizes", help="comma-separated peculiar part sizes")
    sp.add_argument("--seed", type=int)
    sp.add_argument(
        "--out-format", choices=("edgelist", "graph6"), default="edgelist"
    )

    sp = sub.add_parser("decompose", help="report found decompositions")
    common(sp)

    sp = sub.add_parser("roundtrip", help="line-graph root recovery report")
    common(sp)
    return p


def _read_input(args) -> Graph:
    if args.input == "-":
        text = sys.stdin.read()
        return parse_graph(text, args.format)
    return parse_graph(Path(args.input).read_text(), args.format, name=args.input)


def _budget(args) -> Budget:
    return Budget(max_vertices=args.budget_vertices, max_enumerations=args.budget_enum)


def _emit(args, text: str) -> None:
    if args.output == "-":
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)


def _tool_block(budget: Budget) -> dict:
    return {
        "tool": {"name": "strongstable", "version": __version__},
        "budget": {
            "max_vertices": budget.max_vertices,
            "max_enumerations": budget.max_enumerations,
        },
    }


def _witness_block(w) -> dict:
    return {
        "kind": w.kind.value,
        "vertices": sorted(w.vertices),
        "anatomy": {key: value for key, value in w.anatomy.items()},
    }


def _cmd_check(args) -> int:
    g = _read_input(args)
    budget = _budget(args)
    claw = find_claw(g)
    cert = innocence_certificate(g, budget)
    innocent = isinstance(cert, Innocent)
    payload = {
        "command": "check",
        "n": g.n,
        "claw_free": claw is None,
        "status": "innocent" if innocent else "not-innocent",
        **_tool_block(budget),
    }
    if claw is not None:
        payload["claw"] = {"center": claw.center, "leaves": list(claw.leaves)}
    if not innocent:
        payload["witness"] = _witness_block(cert)
    if args.json:
        _emit(args, certificate_json(payload))
    else:
        lines = [
            f"vertices: {g.n}",
            f"claw-free: {'yes' if claw is None else f'no (center {claw.center}, leaves {claw.leaves})'}",
            f"innocent: {'yes' if innocent else f'no ({cert.kind.value} on {sorted(cert.vertices)})'}",
        ]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_solve(args) -> int:
    g = _read_input(args)
    budget = _budget(args)
    z = frozenset(int(t) for t in args.require.split(",") if t.strip() != "")
    res = solve(g, z, budget, trusted=args.trusted)
    if res.s is not None:
        if not (z <= res.s and is_strong_stable_set(g, res.s, budget)):
            raise RuntimeError("internal error: result failed re-verification")
    payload = {
        "command": "solve",
        "n": g.n,
        "status": res.status.value,
        "strong_stable_set": sorted(res.s) if res.s is not None else None,
        "require": sorted(z),
        "trace": [
            {"branch": rec.branch, "detail": rec.detail} for rec in res.trace
        ],
        **_tool_block(budget),
    }
    if args.json:
        _emit(args, certificate_json(payload))
    else:
        body = f"status: {res.status.value}\n"
        if res.s is not None:
            body += f"strong stable set: {sorted(res.s)}\n"
        body += "trace: " + " -> ".join(rec.branch for rec in res.trace) + "\n"
        _emit(args, body)
    return 2 if res.status == SolveStatus.BUDGET else 0


def _gen_spec(args) -> GenSpec:
    params: dict = {}
    if args.n is not None:
        params["n"] = args.n
    if args.k is not None:
        params["k"] = args.k
    if args.c1 is not None:
        params["c1"] = args.c1
    if args.c2 is not None:
        params["c2"] = args.c2
    if args.path is not None:
        params["path"] = args.path
    if args.paths:
        params["paths"] = tuple(int(t) for t in args.paths.split(","))
    if args.variant is not None:
        params["variant"] = args.variant
    if args.m is not None:
        params["m"] = args.m
    if args.base_size is not None:
        params["base_size"] = args.base_size
    if args.size is not None:
        params["size"] = args.size
    if args.rate is not None:
        params["rate"] = args.rate
    if args.sizes:
        params["sizes"] = tuple(int(t) for t in args.sizes.split(","))
    return GenSpec(args.kind, params, args.seed)


def _cmd_generate(args) -> int:
    spec = _gen_spec(args)
    try:
        g = generate(spec)
    except (KeyError, TypeError) as exc:
        raise CliUsageError(f"missing or bad parameters for kind {spec.kind!r}: {exc}")
    if args.out_format == "graph6":
        if isinstance(g, Multigraph):
            raise CliUsageError("graph6 cannot encode multigraphs; use edgelist")
        _emit(args, encode_graph6(g) + "\n")
    else:
        _emit(args, format_edgelist(g))
    return 0


def _cmd_decompose(args) -> int:
    g = _read_input(args)
    budget = _budget(args)
    report: dict = {"command": "decompose", "n": g.n, **_tool_block(budget)}
    zj = find_zero_join(g)
    report["zero_join"] = [sorted(zj[0]), sorted(zj[1])] if zj else None
    tw = find_twins(g)
    report["twins"] = list(tw) if tw else None
    report["simplicial_vertices"] = sorted(simplicial_vertices(g))
    cut = find_clique_cutset(g, budget)
    report["clique_cutset"] = (
        {
            "clique": sorted(cut.k),
            "side_a": sorted(cut.side_a),
            "side_b": sorted(cut.side_b),
            "internal": cut.internal,
        }
        if cut
        else None
    )
    try:
        lifted = internal_clique_cutset_from_deletion(g, budget)
    except GraphError:
        lifted = None
    report["lifted_internal_cutset"] = (
        {
            "clique": sorted(lifted.k),
            "side_a": sorted(lifted.side_a),
            "side_b": sorted(lifted.side_b),
        }
        if lifted
        else None
    )
    oj = find_one_join(g, budget)
    report["one_join"] = (
        {
            "v1": sorted(oj.v1),
            "v2": sorted(oj.v2),
            "a1": sorted(oj.a1),
            "a2": sorted(oj.a2),
            "rich": oj.rich,
        }
        if oj
        else None
    )
    wj_found = None
    for cyc in squares(g, budget):
        for a_side, b_side in (
            ((cyc[0], cyc[1]), (cyc[2], cyc[3])),
            ((cyc[1], cyc[2]), (cyc[3], cyc[0])),
        ):
            try:
                wj = grow_square_connected_pair(g, cyc, a_side, b_side)
            except (HypothesisViolationError, GraphError):
                continue
            wj_found = {"a": sorted(wj.a), "b": sorted(wj.b)}
            break
        if wj_found:
            break
    report["w_join"] = wj_found
    if args.json:
        _emit(args, certificate_json(report))
    else:
        lines = [f"{key}: {value}" for key, value in report.items() if key != "tool"]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_roundtrip(args) -> int:
    g = _read_input(args)
    budget = _budget(args)
    try:
        rr = recover_root(g, budget)
    except GraphError as exc:
        raise CliUsageError(str(exc))
    payload = {"command": "roundtrip", "n": g.n, **_tool_block(budget)}
    if rr is None:
        payload["root"] = None
    else:
        lg, _ = line_graph(rr.root)
        payload["root"] = {
            "n": rr.root.n,
            "edges": [list(e) for e in rr.root.edges],
            "ambiguous": rr.ambiguous,
        }
        payload["line_graph_matches"] = lg == g
    if args.json:
        _emit(args, certificate_json(payload))
    else:
        if rr is None:
            _emit(args, "no bipartite root\n")
        else:
            _emit(
                args,
                f"root: n={rr.root.n} edges={list(rr.root.edges)} "
                f"ambiguous={rr.ambiguous}\n",
            )
    return 0


_COMMANDS = {
    "check": _cmd_check,
    "solve": _cmd_solve,
    "generate": _cmd_generate,
    "decompose": _cmd_decompose,
    "roundtrip": _cmd_roundtrip,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except CliUsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (FormatError, GraphError, GenerationError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
