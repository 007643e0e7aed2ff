"""Command-line front end: solve, classify, generate, verify, oracle.

Graph files are plain UTF-8 text:

    # comment
    colours r b
    vertices 4
    edge 0 1 r
    edge 0 1 r     # repeated lines keep their multiplicity

Target names follow the grammar H1_<loops> with loops in {-, r, b, rb} and
H2<alpha>_<beta>,<gamma> with alpha in {-, r, b, rb} and beta, gamma in
{-, r, b}: alpha lists the colours of the 0-1 edge, beta and gamma the
loops at vertices 0 and 1.  Names are canonicalised (colour swap, vertex
swap) before dispatch and reports state the canonical form used.

Exit codes: 0 = yes / success, 1 = no / failed checks, 2 = error.
"""

from __future__ import annotations

import argparse
import re
import sys

from .dichotomy import classify_edel, classify_switch, classify_vdel
from .fptsolve import ProblemKind, solve
from .gadgets import (
    MisInstance,
    VcInstance,
    gen_mis_switch,
    gen_vc_edel_h2b_rb,
    gen_vc_edel_h2rb_rb,
    gen_vc_switch_h2b_rdash,
    verify_gadget_properties,
)
from .graphs import (
    ColouredGraph,
    GraphError,
    Target,
    make_order1_target,
    make_order2_target,
    match_core,
)

_NAME1 = re.compile(r"H1_(rb|r|b|-)\Z")
_NAME2 = re.compile(r"H2(rb|r|b|-)_(r|b|-),(r|b|-)\Z")


class GraphFileError(GraphError):
    """Parse failure in a graph file; the message carries the line number."""


def parse_target_name(token: str) -> Target:
    m = _NAME1.match(token)
    if m:
        loops = m.group(1).replace("-", "")
        return make_order1_target(loops)
    m = _NAME2.match(token)
    if m:
        alpha, beta, gamma = (s.replace("-", "") for s in m.groups())
        return make_order2_target(alpha, beta, gamma)
    raise GraphError(f"not a target name: {token!r}")


def format_target_name(t: Target) -> str:
    if t.canonical_name:
        return t.canonical_name
    return f"custom(order={t.order})"


def parse_graph_text(text: str) -> ColouredGraph:
    declared = None
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind = parts[0]
        try:
            if kind == "colours":
                declared = set(parts[1:])
            elif kind == "vertices":
                if len(parts) != 2:
                    raise GraphError("expected: vertices <n>")
                n = int(parts[1])
            elif kind == "edge":
                if len(parts) != 4:
                    raise GraphError("expected: edge <u> <v> <colour>")
                if n is None:
                    raise GraphError("edge line before the vertices line")
                u, v, c = int(parts[1]), int(parts[2]), parts[3]
                if not (0 <= u < n and 0 <= v < n):
                    raise GraphError(f"endpoint outside 0..{n - 1}")
                if declared is not None and c not in declared:
                    raise GraphError(f"colour {c!r} not declared")
                edges.append((u, v, c))
            else:
                raise GraphError(f"unknown directive {kind!r}")
        except (GraphError, ValueError) as exc:
            raise GraphFileError(f"line {lineno}: {exc}") from None
    if n is None:
        raise GraphFileError("missing vertices line")
    try:
        return ColouredGraph(n, edges)
    except GraphError as exc:
        raise GraphFileError(str(exc)) from None


def serialize_graph(g: ColouredGraph, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append("colours " + " ".join(sorted(g.colours())) if g.colours() else "colours")
    lines.append(f"vertices {g.n}")
    lines += [f"edge {u} {v} {c}" for u, v, c in g.edges]
    return "\n".join(lines) + "\n"


def _load_graph(path):
    if path == "-":
        return parse_graph_text(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_graph_text(fh.read())


def _load_target(token):
    try:
        return parse_target_name(token)
    except GraphError:
        pass
    try:
        return Target(_load_graph(token))
    except OSError as exc:
        raise GraphError(
            f"target {token!r} is neither a target name nor a readable graph file ({exc})"
        ) from None


def _format_certificate(problem, certificate):
    if problem is ProblemKind.EDEL:
        return " ".join(f"{u},{v},{c},{occ}" for u, v, c, occ in certificate)
    return " ".join(str(v) for v in certificate)


def _cmd_solve(args, force_xp=False):
    g = _load_graph(args.input)
    h = _load_target(args.target)
    problem = ProblemKind(args.problem)
    name, cswap, vswap = match_core(h) if h.order <= 2 else (None, False, False)
    sol = solve(
        problem, g, h, args.k,
        strict=args.strict_exact_k,
        force_xp=force_xp or args.force_xp,
    )
    print(f"problem: {problem.value}")
    print(f"target: {format_target_name(h)}")
    if name and (cswap or vswap):
        print(f"canonical-target: {name} (colour-swapped: {'yes' if cswap else 'no'})")
    print(f"k: {args.k}")
    print(f"answer: {'yes' if sol.answer else 'no'}")
    if sol.answer:
        print(f"budget-used: {sol.budget_used}")
    if sol.used_xp_fallback:
        print("warning: target order > 2, solved by XP enumeration")
    if args.certificate and sol.answer:
        print(f"certificate: {_format_certificate(problem, sol.certificate)}")
        hom = " ".join(f"{v}->{img}" for v, img in enumerate(sol.homomorphism.mapping))
        print(f"homomorphism: {hom}")
    return 0 if sol.answer else 1


def _cmd_classify(args):
    h = _load_target(args.target)
    if args.problem == "vdel":
        cls = classify_vdel(h, ambient_colours=set("rb") if h.graph.is_two_coloured() else None)
    elif args.problem == "edel":
        cls = classify_edel(h)
    else:
        cls = classify_switch(h)
    print(cls.record())
    print(f"classical: {cls.classical}")
    print(f"parameterized: {cls.parameterized}")
    return 0


_REDUCTIONS = {
    "vc-edel-h2b_rb": gen_vc_edel_h2b_rb,
    "vc-edel-h2rb_rb": gen_vc_edel_h2rb_rb,
    "vc-switch-h2b_rdash": gen_vc_switch_h2b_rdash,
}


def _parse_parts(spec, n):
    parts = []
    for chunk in spec.split(";"):
        chunk = chunk.strip()
        if not chunk:
            raise GraphError("empty part in --parts")
        parts.append(tuple(int(tok) for tok in chunk.split(",")))
    flat = sorted(v for p in parts for v in p)
    if flat != list(range(n)):
        raise GraphError("--parts must partition the vertex set")
    return tuple(parts)


def _cmd_generate(args):
    g = _load_graph(args.input)
    pairs = tuple((u, v) for u, v, _ in g.edges)
    if args.reduction == "mis-switch":
        if args.parts is None:
            raise GraphError("mis-switch needs --parts")
        mis = MisInstance(g.n, pairs, _parse_parts(args.parts, g.n))
        reduced = gen_mis_switch(mis, args.x, args.q)
    else:
        vc = VcInstance(g.n, pairs, args.k)
        reduced = _REDUCTIONS[args.reduction](vc)
    comments = [
        f"reduction: {args.reduction}",
        f"problem: {reduced.problem.value}",
        f"target: {format_target_name(reduced.target)}",
        f"budget: {reduced.budget}",
    ]
    comments += [
        f"prov {v} = {' '.join(str(x) for x in reduced.provenance[v])}"
        for v in sorted(reduced.provenance)
    ]
    sys.stdout.write(serialize_graph(reduced.instance, comments))
    return 0


def _parse_range(spec):
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return range(int(lo), int(hi) + 1)
    return range(int(spec), int(spec) + 1)


def _cmd_verify(args):
    ok = True
    for q in _parse_range(args.q):
        for size in _parse_range(args.size):
            report = verify_gadget_properties(args.family, q, size)
            for prop in sorted(report.results):
                status = "pass" if report.results[prop] else "fail"
                line = f"family={args.family} q={q} size={size} {prop}: {status}"
                if not report.results[prop]:
                    line += f" ({report.details[prop]})"
                    ok = False
                print(line)
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ecmod",
        description="Modification problems on edge-coloured graphs: "
        "vertex deletion, edge deletion and switching to a fixed target.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_solve_args(p):
        p.add_argument("--problem", required=True, choices=["vdel", "edel", "switch"])
        p.add_argument("--target", required=True,
                       help="target name (e.g. H2b_r,b) or a graph file")
        p.add_argument("--input", required=True, help="instance graph file, - for stdin")
        p.add_argument("--k", required=True, type=int, help="modification budget")
        p.add_argument("--certificate", action="store_true",
                       help="print certificate and homomorphism on yes")
        p.add_argument("--strict-exact-k", action="store_true",
                       help="search exact-size modification sets by enumeration")

    p_solve = sub.add_parser("solve", help="decide one instance")
    add_solve_args(p_solve)
    p_solve.add_argument("--force-xp", action="store_true",
                         help="bypass the specialised solvers")

    p_oracle = sub.add_parser("oracle", help="solve by brute-force enumeration")
    add_solve_args(p_oracle)

    p_classify = sub.add_parser("classify", help="complexity of (problem, target)")
    p_classify.add_argument("--problem", required=True,
                            choices=["vdel", "edel", "switch"])
    p_classify.add_argument("--target", required=True)

    p_gen = sub.add_parser("generate", help="emit a hardness-reduction instance")
    p_gen.add_argument("reduction", choices=sorted(_REDUCTIONS) + ["mis-switch"])
    p_gen.add_argument("--input", required=True, help="source graph file")
    p_gen.add_argument("--k", type=int, default=0, help="vertex cover budget")
    p_gen.add_argument("--x", choices=["r", "b", "-"], default="r",
                       help="mis-switch target family")
    p_gen.add_argument("--q", type=int, default=3, help="girth parameter")
    p_gen.add_argument("--parts", help="partition, e.g. 0,1;2,3")

    p_verify = sub.add_parser("verify", help="check gadget properties P1-P3/E1-E4")
    p_verify.add_argument("--family", required=True, choices=["r", "b", "-"])
    p_verify.add_argument("--q", default="3..4", help="q or lo..hi")
    p_verify.add_argument("--size", default="1..3", help="part size or lo..hi")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "oracle":
            args.force_xp = True
            return _cmd_solve(args, force_xp=True)
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "generate":
            return _cmd_generate(args)
        return _cmd_verify(args)
    except (GraphError, GraphFileError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
