"""Command-line interface: ``gborsuk <group> <command> [options]``.

Exit codes: 0 success, 1 verification failure or UNSAT, 2 usage error, 3 timeout.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import complex as cx
from . import covers, homcx, quotient, solver
from . import random_graphs as rg
from .group import GroupError, build_cyclic, build_from_table, parse_group, GroupTable

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_TIMEOUT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _group(args) -> GroupTable:
    try:
        if getattr(args, "group_file", None):
            return GroupTable.from_json(_read(args.group_file))
        return parse_group(args.group)
    except GroupError as exc:
        raise UsageError(f"--group: {exc}") from None


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("GBORSUK_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError("GBORSUK_SEED must be an integer") from None


def _load_graph(path: str) -> quotient.QuotGraph:
    text = _read(path)
    if text.lstrip().startswith("{"):
        t = cx.GComplex.from_json(text)
        return quotient.quotient_graph(t)
    return quotient.parse_dimacs(text)


def _load_precolor(path: str | None) -> dict[int, int]:
    if not path:
        return {}
    out = {}
    for line in _read(path).splitlines():
        parts = line.split()
        if len(parts) == 3 and parts[0] == "v":
            out[int(parts[1])] = int(parts[2])
    return out


# ------------------------------------------------------------------ group
def cmd_group(args) -> int:
    if args.action == "build":
        if args.table:
            try:
                g = build_from_table(json.loads(_read(args.table)))
            except GroupError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_FAIL
        elif args.order:
            g = build_cyclic(args.order)
        else:
            g = _group(args)
        _write(g.to_json() + "\n", args.out)
    else:
        g = _group(args)
        print(f"order {g.order}, {'abelian' if g.is_abelian else 'non-abelian'}, "
              f"{'cyclic' if g.is_cyclic else 'not cyclic'}")
        print("inverses " + " ".join(map(str, g.inverses)))
        for row in g.table:
            print(" ".join(map(str, row)))
    return EXIT_OK


# ---------------------------------------------------------------- complex
def cmd_complex(args) -> int:
    if args.action == "build":
        g = _group(args)
        if args.kind == "points":
            t = cx.group_complex(g)
        elif args.kind == "cycle":
            t = cx.cycle_complex(args.n or g.order, group=g)
        else:
            t = cx.classifying_space(g, args.dim)
        _write(t.to_json() + "\n", args.out)
        return EXIT_OK
    t = cx.GComplex.from_json(_read(args.input))
    if args.action == "subdivide":
        for _ in range(args.times):
            if args.mode == "bary":
                t = cx.barycentric(t)
            elif args.mode == "2d":
                t = cx.medial_subdivide_2d(t)
            else:
                t = cx.medial_subdivide_3d(t)
        _write(t.to_json() + "\n", args.out)
        return EXIT_OK
    if args.action == "check-free":
        ok, wit = cx.check_free(t, strict=not args.geometric)
        print("free" if ok else f"not free: face {list(wit[0])} meets its translate by g={wit[1]}")
        return EXIT_OK if ok else EXIT_FAIL
    print(t.describe())
    print("f-vector " + " ".join(map(str, t.f_vector())))
    print(f"pure {t.is_pure}, group order {t.group.order}, atoms {t.num_atoms}")
    return EXIT_OK


# --------------------------------------------------------------- quotient
def cmd_quotient(args) -> int:
    t = cx.GComplex.from_json(_read(args.input))
    h = quotient.quotient_graph(t)
    if args.action == "export-dimacs":
        _write(quotient.export_dimacs(h, allow_loops=True), args.out)
    else:
        _write(json.dumps({"vertices": h.n, "edges": h.num_edges, "loops": sorted(h.loops)}) + "\n",
               args.out)
    return EXIT_FAIL if h.loops else EXIT_OK


# -------------------------------------------------------------- chromatic
def cmd_chromatic(args) -> int:
    g = _load_graph(args.graph)
    if g.loops:
        print(f"error: graph has loops at {sorted(g.loops)[:5]}", file=sys.stderr)
        return EXIT_FAIL
    if args.action == "exact":
        chi, col = solver.exact_chromatic(g, budget=args.budget)
        print(f"chromatic number {chi}")
        if args.out:
            _write(solver.format_solution(col), args.out)
        return EXIT_OK
    if args.colors is None:
        raise UsageError("--colors is required")
    prob = solver.ColoringProblem(g, args.colors, _load_precolor(args.precolor))
    if args.action == "export-ilp":
        _write(solver.export_ilp(prob), args.out)
        return EXIT_OK
    if args.action == "import-solution":
        if not args.solution:
            raise UsageError("--solution is required")
        try:
            col = solver.import_solution(prob, _read(args.solution))
        except ValueError as exc:
            print(f"rejected: {exc}", file=sys.stderr)
            return EXIT_FAIL
        print(f"accepted: proper coloring with {col.num_colors_used} colors")
        return EXIT_OK
    try:
        col = solver.extend_precoloring(prob, budget=args.budget, method=args.method)
    except solver.ImproperPrecoloring as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if col is None:
        print("UNSAT")
        return EXIT_FAIL
    print(f"SAT with {col.num_colors_used} colors")
    if args.out:
        _write(solver.format_solution(col), args.out)
    return EXIT_OK


# ------------------------------------------------------------------ cover
def _emit_cover(c: covers.CoverColoring, args) -> int:
    if args.out:
        _write(c.to_json() + "\n", args.out)
    print(f"{c.status}: {c.num_colors_used} colors on {c.triangulation.num_vertices} vertices")
    if not c.verified:
        print(f"witness {c.witness}")
    return EXIT_OK if c.verified else EXIT_FAIL


def cmd_cover(args) -> int:
    if args.action == "bounds":
        b = covers.bounds(_group(args), args.index)
        print(f"lower {b.lower}, upper {b.upper}, conjectured {b.conjectured}")
        return EXIT_OK
    if args.action == "circle":
        try:
            c = covers.circle_cover(args.m, args.n)
        except covers.IncompatibleRefinement as exc:
            raise UsageError(f"--n: {exc}") from None
        return _emit_cover(c, args)
    if args.action == "onedim":
        return _emit_cover(covers.one_dim_cover(_group(args)), args)
    if args.action == "join":
        base = covers.verify_cover(covers.CoverColoring.from_json(_read(args.base)))
        extras = [args.extra] if args.extra is not None else range(4)
        try:
            for e in extras:
                c = covers.join_cover(base.triangulation.group, base, e)
                if c.verified:
                    break
        except covers.BaseUnverified as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAIL
        return _emit_cover(c, args)
    if args.action == "verify":
        return _emit_cover(covers.verify_cover(covers.CoverColoring.from_json(_read(args.input))), args)
    return _cover_pipeline(args)


def _cover_pipeline(args) -> int:
    g = _group(args)
    method = "export" if args.ilp_out else args.method
    try:
        rep = covers.pipeline(g, args.dim, max_k=args.max_k, budget=args.budget, method=method,
                              min_k=args.min_k)
    except covers.MaxKExceeded as exc:
        _print_trace(exc.report)
        print(f"no cover found with k <= {args.max_k} (inconclusive)")
        return EXIT_FAIL
    except covers.PipelineTimeout as exc:
        _print_trace(exc.report)
        print(f"timeout: {exc}")
        return EXIT_TIMEOUT
    _print_trace(rep)
    if args.ilp_out:
        _write(solver.export_ilp(rep.problem), args.ilp_out)
        print(f"exported ILP with {rep.problem.graph.n} vertices and {rep.problem.num_colors} colors")
        if args.dimacs_out:
            _write(quotient.export_dimacs(rep.problem.graph), args.dimacs_out)
        if args.precolor_out:
            _write("".join(f"v {v} {c}\n" for v, c in sorted(rep.problem.precolored.items())),
                   args.precolor_out)
        return EXIT_OK
    if args.out:
        _write(rep.to_json() + "\n", args.out)
    b = rep.bounds
    print(f"{rep.cover.status} cover with {rep.achieved} colors; lower bound {b.lower}, "
          f"conjectured {b.conjectured}; {'equality certified' if rep.certified_equal else 'not certified'}")
    return EXIT_OK if rep.cover.verified else EXIT_FAIL


def _print_trace(rep: covers.PipelineReport) -> None:
    for s in rep.trace:
        print(f"k={s.k} vertices={s.vertices} base_proper={s.base_proper} outcome={s.outcome}")


# -------------------------------------------------------------------- hom
def cmd_hom(args) -> int:
    if args.action == "dim":
        d, w = homcx.hom_dimension_complete(args.m, args.t)
        print(d)
        return EXIT_OK
    h = homcx.complete_graph(args.t) if args.t is not None else _load_graph(args.graph or "-")
    if args.action == "cells":
        cells = homcx.hom_cells(args.m, h, max_dim=args.max_dim)
        _write(homcx.cells_to_json(cells) + "\n", args.out)
        return EXIT_OK
    sk, verts = homcx.hom_one_skeleton(args.m, h)
    _write(quotient.export_dimacs(sk), args.out)
    return EXIT_OK


# ----------------------------------------------------------------- random
def _space(args) -> rg.AnalyticSpace:
    try:
        if args.space == "circle":
            return rg.AnalyticSpace.circle(args.m)
        return rg.AnalyticSpace.sphere(args.d)
    except ValueError as exc:
        raise UsageError(f"--space: {exc}") from None


def cmd_random(args) -> int:
    space = _space(args)
    seed = _seed(args)
    if args.action == "net":
        if args.delta is None:
            raise UsageError("--delta is required")
        pts, cert = rg.greedy_net(space, args.delta, seed)
        print(json.dumps({"size": cert.size, "delta": cert.delta, "min_separation": cert.min_separation,
                          "covering_radius": cert.covering_radius, "ok": cert.ok}))
        return EXIT_OK if cert.ok else EXIT_FAIL
    mode = "clique" if args.action == "clique" else args.mode
    try:
        cfg = rg.ExperimentConfig(space, args.n, coef=args.coef, trials=args.trials, seed=seed,
                                  mode=mode, eps=args.eps, target=args.target, budget=args.budget,
                                  record_timing=args.timing, workers=args.threads)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = rg.clique_sweep(cfg) if mode == "clique" else rg.threshold_sweep(cfg)
    if args.csv:
        _write(res.to_csv(), args.csv)
    _write(res.to_json() + "\n", args.json)
    return EXIT_OK


# ----------------------------------------------------------------- render
def cmd_render(args) -> int:
    from .render import NotAConeComplex, RenderSpec, render_cover

    if args.cover:
        c = covers.CoverColoring.from_json(_read(args.cover))
    else:
        g = _group(args)
        c = covers.pipeline(g, 2, max_k=args.max_k, budget=args.budget).cover
    try:
        svg = render_cover(RenderSpec(c, mesh=args.mesh))
    except NotAConeComplex as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _write(svg, args.out)
    return EXIT_OK


# ----------------------------------------------------------------- parser
def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gborsuk", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def group_opts(sp, required=False):
        sp.add_argument("--group", default=None if required else "Z2", required=required,
                        help="group name such as Z3, Z2xZ2, S3")
        sp.add_argument("--group-file", help="group JSON file (overrides --group)")

    def budget(sp):
        sp.add_argument("--budget", type=int, default=solver.DEFAULT_BUDGET, help="solver node limit")

    gp = sub.add_parser("group", help="finite groups")
    gp.add_argument("action", choices=["build", "show"])
    group_opts(gp)
    gp.add_argument("--order", type=int, help="build the cyclic group of this order")
    gp.add_argument("--table", help="JSON file with a Cayley table")
    gp.add_argument("--out")
    gp.set_defaults(func=cmd_group)

    cp = sub.add_parser("complex", help="G-simplicial complexes")
    cp.add_argument("action", choices=["build", "subdivide", "check-free", "info"])
    group_opts(cp)
    cp.add_argument("--kind", choices=["classifying", "cycle", "points"], default="classifying")
    cp.add_argument("--dim", type=int, default=1)
    cp.add_argument("--n", type=int, help="cycle length for --kind cycle")
    cp.add_argument("--in", dest="input", default="-")
    cp.add_argument("--times", type=int, default=1)
    cp.add_argument("--mode", choices=["2d", "3d", "bary"], default="3d")
    cp.add_argument("--geometric", action="store_true", help="only require that no face is fixed")
    cp.add_argument("--out")
    cp.set_defaults(func=cmd_complex)

    qp = sub.add_parser("quotient", help="quotient graphs")
    qp.add_argument("action", choices=["build", "export-dimacs"])
    qp.add_argument("--in", dest="input", default="-")
    qp.add_argument("--out")
    qp.set_defaults(func=cmd_quotient)

    hp = sub.add_parser("chromatic", help="colouring problems")
    hp.add_argument("action", choices=["exact", "extend", "export-ilp", "import-solution"])
    hp.add_argument("--graph", required=True, help="DIMACS graph or complex JSON")
    hp.add_argument("--colors", type=int)
    hp.add_argument("--precolor", help="file of 'v <vertex> <color>' lines")
    hp.add_argument("--solution", help="solution file to verify")
    hp.add_argument("--method", choices=["bnb", "milp"], default="bnb")
    hp.add_argument("--out")
    budget(hp)
    hp.set_defaults(func=cmd_chromatic)

    vp = sub.add_parser("cover", help="covers and certificates")
    vp.add_argument("action", choices=["circle", "onedim", "join", "verify", "bounds", "pipeline"])
    group_opts(vp)
    vp.add_argument("--m", type=int, default=2)
    vp.add_argument("--n", type=int, help="cycle length for circle covers")
    vp.add_argument("--index", type=int, default=1, help="G-index k for bounds")
    vp.add_argument("--dim", type=int, default=2, help="target dimension for the pipeline")
    vp.add_argument("--max-k", type=int, default=4)
    vp.add_argument("--min-k", type=int, default=0)
    vp.add_argument("--method", choices=["bnb", "milp"], default="bnb")
    vp.add_argument("--ilp-out", help="export the first admissible instance as LP instead of solving")
    vp.add_argument("--dimacs-out", help="with --ilp-out, also write the graph")
    vp.add_argument("--precolor-out", help="with --ilp-out, also write the forced colours")
    vp.add_argument("--base", help="base cover JSON for join")
    vp.add_argument("--extra", type=int, help="extra subdivisions for join (default: first of 0..3 that verifies)")
    vp.add_argument("--in", dest="input", default="-")
    vp.add_argument("--out")
    budget(vp)
    vp.set_defaults(func=cmd_cover)

    op = sub.add_parser("hom", help="Hom complexes")
    op.add_argument("action", choices=["cells", "dim", "skeleton"])
    op.add_argument("--m", type=int, required=True)
    op.add_argument("--t", type=int, help="use the complete graph K_t as target")
    op.add_argument("--graph", help="target graph (DIMACS)")
    op.add_argument("--max-dim", type=int)
    op.add_argument("--out")
    op.set_defaults(func=cmd_hom)

    rp = sub.add_parser("random", help="random G-Borsuk graphs")
    rp.add_argument("action", choices=["sweep", "clique", "net"])
    rp.add_argument("--space", choices=["circle", "sphere"], default="circle")
    rp.add_argument("--m", type=int, default=2, help="group order on the circle")
    rp.add_argument("--d", type=int, default=2, help="sphere dimension")
    rp.add_argument("--n", type=int, default=1000)
    rp.add_argument("--coef", type=float, default=6.0)
    rp.add_argument("--eps", type=float)
    rp.add_argument("--trials", type=int, default=10)
    rp.add_argument("--mode", choices=["exact", "kcolor", "bipartite"], default="exact")
    rp.add_argument("--target", type=int)
    rp.add_argument("--delta", type=float)
    rp.add_argument("--seed", type=int)
    rp.add_argument("--threads", type=int, default=1)
    rp.add_argument("--timing", action="store_true", help="record per-trial wall time")
    rp.add_argument("--csv")
    rp.add_argument("--json")
    budget(rp)
    rp.set_defaults(func=cmd_random)

    sp = sub.add_parser("render", help="SVG picture of a cover of Z_m * S^1")
    group_opts(sp)
    sp.add_argument("--cover", help="cover JSON; otherwise the pipeline is run for --group")
    sp.add_argument("--mesh", type=int, default=200)
    sp.add_argument("--max-k", type=int, default=4)
    sp.add_argument("--out")
    budget(sp)
    sp.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except solver.SolverTimeout as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT
    except (solver.LoopyGraph, cx.ComplexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
