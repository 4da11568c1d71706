"""Command-line entry points tying the toolkit together.

Every subcommand prints a JSON run report on stdout (plus any requested
output files) and exits 0 on success or verified PASS, 1 on a verification
FAIL, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .exact import QQ, rational_circle_point
from .facetgraph import build_adjacency, export_adjacency
from .formats import HFile, RunReport, VFile, emit_hfile, emit_vfile, parse_vfile
from .geodesic import (
    central_fan,
    incidence_pattern,
    minimal_pattern_oracle,
    reduce_pattern,
    transversality_check,
    two_cycle_check,
)
from .hull import facet_enumeration, polytope_digest, validate_facets
from .prismatoid import (
    GALLERY_NAMES,
    from_lifted_vertices,
    gallery,
    gallery_pair,
    gallery_prismatoid,
    width,
)
from .suspension import PerturbationSchedule, build_tower, published_q20_plan, verify_non_hirsch
from .twisted import two_copies_prismatoid, verify_twisted_hull


def _write(path: str | None, text: str):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_polytope(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_vfile(fh.read())


def cmd_gallery(args) -> int:
    P = gallery(args.name)
    report = RunReport("gallery", polytope_digest(P),
                       {"name": args.name, "n": P.n, "dim": P.dim})
    _write(args.out, emit_vfile(VFile(args.name, P)))
    print(report.to_json())
    return 0


def cmd_hull(args) -> int:
    vf = _load_polytope(args.input)
    t0 = time.perf_counter()
    F = facet_enumeration(vf.polytope)
    report = RunReport("hull", polytope_digest(vf.polytope), threads=args.threads)
    report.phase("facets", time.perf_counter() - t0)
    report.fields.update({"n": vf.polytope.n, "dim": vf.polytope.dim,
                          "facets": len(F)})
    if args.out:
        _write(args.out, emit_hfile(HFile(vf.name, vf.polytope.dim,
                                          [f.plane for f in F.facets])))
    if args.incidence:
        _write(args.incidence, "\n".join(
            " ".join(str(i) for i in f.indices()) for f in F.facets) + "\n")
    if args.adjacency:
        t0 = time.perf_counter()
        G = build_adjacency(F, args.threads)
        report.phase("adjacency", time.perf_counter() - t0)
        report.fields["edges"] = sum(len(a) for a in G.adjacency) // 2
        _write(args.adjacency, export_adjacency(G))
    code = 0
    if args.validate:
        rep = validate_facets(F)
        report.passed = rep.ok
        report.fields["validation"] = "PASS" if rep.ok else rep.problems[:5]
        code = 0 if rep.ok else 1
    print(report.to_json())
    return code


def cmd_width(args) -> int:
    t0 = time.perf_counter()
    if args.gallery:
        prism = gallery_prismatoid(args.gallery, args.threads)
        digest = polytope_digest(prism.body)
    else:
        vf = _load_polytope(args.input)
        prism = from_lifted_vertices(vf.polytope, args.threads)
        digest = polytope_digest(vf.polytope)
    r = width(prism)
    report = RunReport("width", digest, threads=args.threads)
    report.phase("total", time.perf_counter() - t0)
    report.fields.update(r.as_dict())
    report.fields["facets"] = len(prism.facets)
    print(report.to_json())
    return 0


def cmd_pattern(args) -> int:
    if args.gallery_pair:
        Pp, Pm = gallery_pair(args.gallery_pair)
    else:
        Pp = _load_polytope(args.plus).polytope
        Pm = _load_polytope(args.minus).polytope
    t0 = time.perf_counter()
    Gp, Gm = central_fan(Pp), central_fan(Pm)
    red = reduce_pattern(incidence_pattern(Gp, Gm))
    report = RunReport("pattern", threads=1)
    report.phase("pattern", time.perf_counter() - t0)
    lines = []
    for (sa, ia), (sb, ib) in sorted(red.arrows):
        lines.append(f"{sa}:{ia} -> {sb}:{ib}")
    _write(args.out, "\n".join(lines) + "\n")
    has_cycle = two_cycle_check(red)
    report.fields.update({
        "nodes_plus": len(red.nodes_plus),
        "nodes_minus": len(red.nodes_minus),
        "arrows": len(red.arrows),
        "two_cycle": has_cycle,
    })
    code = 0
    if args.transversality:
        t0 = time.perf_counter()
        ok = transversality_check(Gp, Gm)
        report.phase("transversality", time.perf_counter() - t0)
        report.fields["transversal"] = ok
        if not ok:
            code = 1
    if has_cycle:
        code = 1
    report.passed = code == 0
    print(report.to_json())
    return code


def cmd_tower(args) -> int:
    from .suspension import replay_tower

    os.makedirs(args.out, exist_ok=True)
    trace_path = os.path.join(args.out, "trace.json")
    trace_dicts = []
    if args.resume and os.path.exists(trace_path):
        with open(trace_path, "r", encoding="utf-8") as fh:
            trace_dicts = json.load(fh)["steps"]
    prism = gallery_prismatoid(args.start, args.threads)
    plan = published_q20_plan() if args.plan == "published" else None
    done = len(trace_dicts)
    state = None
    if done:
        if plan is None:
            print("error: --resume needs the published plan", file=sys.stderr)
            return 2
        state = replay_tower(prism, plan[:done], [s["width"] for s in trace_dicts])
    schedule = PerturbationSchedule(initial_exponent=-args.exponent)

    def cb(step, p):
        trace_dicts.append(step.as_dict())
        body = p.body
        path = os.path.join(args.out, f"step{len(trace_dicts):02d}_dim{body.dim}.v")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(emit_vfile(VFile(f"tower step {len(trace_dicts)}", body)))
        with open(trace_path, "w", encoding="utf-8") as fh:
            json.dump({"start": args.start, "steps": trace_dicts}, fh, indent=1)

    t0 = time.perf_counter()
    trace, final = build_tower(prism, args.steps, schedule, plan=plan,
                               threads=args.threads, step_callback=cb,
                               state=state, done=done)
    report = RunReport("tower", threads=args.threads)
    report.phase("total", time.perf_counter() - t0)
    report.fields.update(verify_non_hirsch(final))
    report.fields["steps"] = trace_dicts
    report.passed = all(b["width"] > a["width"]
                        for a, b in zip(trace_dicts, trace_dicts[1:]))
    print(report.to_json())
    return 0 if report.passed else 1


def cmd_twisted(args) -> int:
    report = RunReport("twisted", threads=args.threads)
    alpha = None
    if args.alpha_num is not None:
        alpha = rational_circle_point(QQ(args.alpha_num, args.alpha_den), QQ(1, 10**4))
    code = 0
    t0 = time.perf_counter()
    if args.two_copies:
        prism = two_copies_prismatoid(args.d, args.q, alpha=alpha,
                                      threads=args.threads)
        r = width(prism)
        report.phase("total", time.perf_counter() - t0)
        report.fields.update(r.as_dict())
        top, bottom = prism.base_masks()
        report.fields["base_vertices"] = [top.bit_count(), bottom.bit_count()]
        if args.out:
            _write(args.out, emit_vfile(VFile(
                f"two copies d={args.d} q={args.q}", prism.body)))
    else:
        res = verify_twisted_hull(args.d, args.q, alpha=alpha)
        report.phase("total", time.perf_counter() - t0)
        report.fields.update({
            "d": args.d, "q": args.q,
            "vertices": res.polytope.n,
            "facets": len(res.facets),
            "verified": "PASS" if res.passed else "FAIL",
        })
        if not res.passed:
            report.fields["mismatches"] = len(res.mismatches)
            code = 1
        report.passed = res.passed
        if args.out:
            _write(args.out, emit_vfile(VFile(
                f"twisted d={args.d} q={args.q}", res.polytope)))
        if args.facets_out:
            kinds = "\n".join(
                f"{kind}: " + " ".join(str(i) for i in f.indices())
                for kind, f in zip(res.kinds, res.facets.facets))
            _write(args.facets_out, kinds + "\n")
    print(report.to_json())
    return code


def cmd_render(args) -> int:
    from .render import diagram, svg_write

    maps = []
    for path in args.input:
        vf = _load_polytope(path)
        maps.append(central_fan(vf.polytope))
    dia = diagram(maps, size=args.size)
    svg_write(dia, args.out)
    report = RunReport("render")
    report.fields.update({
        "layers": len(maps),
        "markers": len(dia.markers),
        "segments": len(dia.polylines),
        "skipped": len(dia.warnings),
        "out": args.out,
    })
    print(report.to_json())
    return 0


def cmd_oracle(args) -> int:
    t0 = time.perf_counter()
    splits = [tuple(args.split)] if args.split else None
    res = minimal_pattern_oracle(args.max_nodes, splits=splits)
    report = RunReport("oracle")
    report.phase("search", time.perf_counter() - t0)
    report.fields.update({
        "max_nodes": args.max_nodes,
        "minimum_nodes": res["minimum_nodes"],
        "splits_at_minimum": [list(s) for s in res["splits_at_minimum"]],
        "classes": {f"{p}+{q}": c for (p, q), c in res["per_split"].items()},
    })
    print(report.to_json())
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="prismatoids",
        description="exact prismatoid width computations and non-Hirsch towers",
    )
    ap.add_argument("--threads", type=int,
                    default=max(1, os.cpu_count() or 1),
                    help="worker cap for the adjacency kernel")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gallery", help="emit a stored construction as a V-file")
    g.add_argument("--name", required=True, choices=GALLERY_NAMES)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gallery)

    h = sub.add_parser("hull", help="facet enumeration of a V-file")
    h.add_argument("--in", dest="input", required=True)
    h.add_argument("--out", help="H-file output path")
    h.add_argument("--incidence", help="write facet incidence index lists")
    h.add_argument("--adjacency", help="write the dual graph adjacency")
    h.add_argument("--validate", action="store_true")
    h.set_defaults(func=cmd_hull)

    w = sub.add_parser("width", help="width report of a lifted prismatoid")
    src = w.add_mutually_exclusive_group(required=True)
    src.add_argument("--in", dest="input")
    src.add_argument("--gallery", choices=GALLERY_NAMES)
    w.set_defaults(func=cmd_width)

    p = sub.add_parser("pattern", help="reduced incidence pattern of a base pair")
    srcp = p.add_mutually_exclusive_group(required=True)
    srcp.add_argument("--gallery-pair", choices=("q40", "q32", "q28"))
    srcp.add_argument("--plus")
    p.add_argument("--minus")
    p.add_argument("--out")
    p.add_argument("--transversality", action="store_true")
    p.set_defaults(func=cmd_pattern)

    t = sub.add_parser("tower", help="iterated verified suspension tower")
    t.add_argument("--start", default="q20", choices=GALLERY_NAMES)
    t.add_argument("--steps", type=int, required=True)
    t.add_argument("--out", required=True)
    t.add_argument("--plan", default="published", choices=("published", "auto"))
    t.add_argument("--exponent", type=int, default=7)
    t.add_argument("--resume", action="store_true")
    t.set_defaults(func=cmd_tower)

    tw = sub.add_parser("twisted", help="twisted products and two-copy prismatoids")
    tw.add_argument("--d", type=int, required=True)
    tw.add_argument("--q", type=int, required=True)
    tw.add_argument("--alpha-num", type=int)
    tw.add_argument("--alpha-den", type=int, default=100)
    tw.add_argument("--two-copies", action="store_true")
    tw.add_argument("--verify", action="store_true",
                    help="kept for symmetry; hull verification always runs")
    tw.add_argument("--out")
    tw.add_argument("--facets-out")
    tw.set_defaults(func=cmd_twisted)

    r = sub.add_parser("render", help="flat-torus SVG of one or two fans")
    r.add_argument("--in", dest="input", action="append", required=True)
    r.add_argument("--out", required=True)
    r.add_argument("--size", type=float, default=1.0)
    r.set_defaults(func=cmd_render)

    o = sub.add_parser("oracle", help="exhaustive minimal-pattern search")
    o.add_argument("--max-nodes", type=int, default=8)
    o.add_argument("--split", type=int, nargs=2)
    o.set_defaults(func=cmd_oracle)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
