"""Command-line entry point.

Machine-first: every run prints one JSON document embedding the tool
version and the full effective configuration, so identical invocations
produce identical bytes. DOT and plain-text renderings exist for the
outputs where they make sense. Exit codes: 0 success, 1 domain error,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import __version__
from .anneal import AnnealParams, anneal, multi_restart
from .bounds import bounds_report
from .booleanf import g_f, ip_lower_bound, parse_dnf
from .cir import Cir, align_jaccard, communities, graph_from_assignment, score, verify
from .constructions import (construct_bipartite, construct_cycle, construct_knn,
                            construct_multipartite, construct_path, construct_star)
from .graphs import Graph, generate, parse_edge_list, render_edge_list, to_dot
from .oracle import LimitExceeded, OracleLimits, brute_theta_c
from .packings import ResolvablePacking, affine_plane, packing_three_classes
from .rng import SplitMix64
from .sat import SearchAborted, encode, export_dimacs, theta_c_exact


def graph_to_obj(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def cir_to_obj(r: Cir) -> dict:
    return json.loads(r.to_json())


def _emit(args, payload: dict, raw_text: Optional[str] = None) -> None:
    if raw_text is not None:
        text = raw_text
    else:
        doc = {
            "tool": "cointersect",
            "version": __version__,
            "command": args.command,
            "config": {k: v for k, v in sorted(vars(args).items())
                       if k not in ("func", "out") and v is not None},
            "result": payload,
        }
        text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0, help="seed for all randomness in this run")
    p.add_argument("--format", choices=["json", "dot", "text"], default="json")
    p.add_argument("--out", help="write output to this file instead of stdout")


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", help="edge-list file ('u v' lines, optional 'n N' header)")
    p.add_argument("--family", help="generated family, e.g. path, cycle, complete_multipartite")
    p.add_argument("--params", help="comma-separated integer parameters for --family")
    p.add_argument("--parts", help="alias of --params for multipartite part sizes")


def _resolve_graph(args) -> Graph:
    if args.graph and args.family:
        raise ValueError("give either --graph or --family, not both")
    if args.graph:
        with open(args.graph) as fh:
            return parse_edge_list(fh.read())
    if args.family:
        raw = args.parts if args.parts else args.params
        params = [int(x) for x in raw.split(",")] if raw else []
        return generate(args.family, params)
    raise ValueError("a graph is required: pass --graph FILE or --family NAME")


def _load_cir(path: str) -> Cir:
    with open(path) as fh:
        doc = json.load(fh)
    if "result" in doc and isinstance(doc["result"], dict) and "cir" in doc["result"]:
        doc = doc["result"]["cir"]
    return Cir.from_json(json.dumps(doc))


# -- subcommand handlers ----------------------------------------------------


def cmd_gen(args) -> int:
    g = _resolve_graph(args)
    if args.format == "dot":
        _emit(args, {}, raw_text=to_dot(g))
    elif args.format == "text":
        _emit(args, {}, raw_text=render_edge_list(g))
    else:
        _emit(args, {"graph": graph_to_obj(g)})
    return 0


def cmd_bounds(args) -> int:
    g = _resolve_graph(args)
    rep = bounds_report(g, exact_limit=args.theta1_limit,
                        chordal_clique_size=args.chordal_clique_size,
                        complement_degree=args.complement_degree)
    _emit(args, rep.as_dict())
    return 0


def cmd_exact(args) -> int:
    g = _resolve_graph(args)
    hook = None
    if args.emit_cnf:
        os.makedirs(args.emit_cnf, exist_ok=True)

        def hook(alpha: int, beta: int) -> None:
            path = os.path.join(args.emit_cnf, f"cir_a{alpha}_b{beta}.cnf")
            with open(path, "w") as fh:
                fh.write(export_dimacs(encode(g, alpha, beta)))

    t1 = args.theta1
    res = theta_c_exact(
        g,
        theta1_lower=t1, theta1_upper=t1,
        time_limit=args.timeout_ms / 1000.0 if args.timeout_ms else None,
        conflict_limit=args.conflicts,
        probe_hook=hook)
    _emit(args, {
        "theta_c": res.theta_c,
        "alpha": res.alpha,
        "beta": res.beta,
        "theta1_lower": res.theta1_lower,
        "theta1_is_exact": res.theta1_is_exact,
        "cir": cir_to_obj(res.witness),
    })
    return 0


def cmd_anneal(args) -> int:
    g = _resolve_graph(args)
    if args.rounds is not None and args.b is not None:
        raise UsageError("--rounds and --b conflict; give one")
    params = AnnealParams(alpha=args.alpha, beta=args.beta, c=args.c,
                          b=args.b if args.b is not None else 5000.0,
                          rounds=args.rounds, seed=args.seed,
                          trace_every=args.trace_every if args.trace else 0)
    res = multi_restart(g, params, args.restarts) if args.restarts > 1 else anneal(g, params)
    if args.trace:
        with open(args.trace, "w") as fh:
            json.dump([list(t) for t in res.trace], fh)
            fh.write("\n")
    _emit(args, {
        "score": {"matched": res.best_score.matched, "total": res.best_score.total},
        "rounds": res.rounds,
        "winning_seed": res.seed,
        "cir": cir_to_obj(res.best),
    })
    return 0


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "star":
        r = construct_star(args.n, args.alpha, args.beta)
    elif kind == "path":
        r = construct_path(args.n, args.alpha, args.beta)
    elif kind == "cycle":
        r = construct_cycle(args.n, args.alpha, args.beta)
    elif kind == "bipartite":
        r = construct_bipartite(_resolve_graph(args))
    elif kind == "knn":
        r = construct_knn(args.n, args.t, args.s)
    elif kind == "multipartite":
        packing = affine_plane(args.k) if args.packing == "affine" else packing_three_classes(args.k)
        r = construct_multipartite(packing, args.r)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown kind {kind}")
    _emit(args, {"cir": cir_to_obj(r)})
    return 0


def cmd_verify(args) -> int:
    g = _resolve_graph(args)
    r = _load_cir(args.cir)
    bad = verify(g, r)
    _emit(args, {"valid": not bad, "violations": [list(p) for p in bad]})
    return 0 if not bad else 1


def cmd_score(args) -> int:
    g = _resolve_graph(args)
    r = _load_cir(args.cir)
    s = score(g, r)
    _emit(args, {"matched": s.matched, "total": s.total})
    return 0


def cmd_communities(args) -> int:
    r = _load_cir(args.cir)
    rep = communities(r)
    if args.format == "dot":
        g = graph_from_assignment(r)
        lines = ["graph communities {"]
        palette = ["lightblue", "salmon", "palegreen", "khaki", "plum",
                   "lightgray", "orange", "cyan"]
        for v in range(r.n):
            first = min(r.a_sets[v]) if r.a_sets[v] else -1
            color = palette[first % len(palette)] if first >= 0 else "white"
            label = f"{v}: A{sorted(r.a_sets[v])} B{sorted(r.b_sets[v])}"
            lines.append(f'  {v} [style=filled fillcolor="{color}" label="{label}"];')
        for u, v in g.sorted_edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        _emit(args, {}, raw_text="\n".join(lines) + "\n")
        return 0
    _emit(args, {
        "a_communities": [sorted(c) for c in rep.a_communities],
        "b_communities": [sorted(c) for c in rep.b_communities],
        "pair_communities": {f"{a},{b}": sorted(members)
                             for (a, b), members in sorted(rep.pair_communities.items())},
    })
    return 0


def cmd_synth(args) -> int:
    rng = SplitMix64(args.seed)
    pairs = []
    for _ in range(args.n):
        am = rng.mask(args.alpha)
        bm = rng.mask(args.beta)
        pairs.append(({a for a in range(args.alpha) if am >> a & 1},
                      {b for b in range(args.beta) if bm >> b & 1}))
    truth = Cir.from_lists(args.alpha, args.beta, pairs)
    g = graph_from_assignment(truth)
    _emit(args, {"graph": graph_to_obj(g), "cir": cir_to_obj(truth)})
    return 0


def cmd_align(args) -> int:
    ref = _load_cir(args.reference)
    cand = _load_cir(args.candidate)
    relabeled, value = align_jaccard(ref, cand)
    _emit(args, {"average_jaccard": value, "cir": cir_to_obj(relabeled)})
    return 0


def cmd_dnf_bound(args) -> int:
    f = parse_dnf(args.formula)
    value, witness = ip_lower_bound(f, args.theta1, cap=args.cap)
    _emit(args, {
        "formula": f.render(),
        "theta1": args.theta1,
        "value": value,
        "witness": list(witness),
        "g_f_at_witness": g_f(f, witness),
    })
    return 0


def cmd_export_dimacs(args) -> int:
    g = _resolve_graph(args)
    inst = encode(g, args.alpha, args.beta)
    _emit(args, {}, raw_text=export_dimacs(inst))
    return 0


def cmd_packing(args) -> int:
    p = affine_plane(args.k) if args.kind == "affine" else packing_three_classes(args.k)
    _emit(args, json.loads(p.to_json()))
    return 0


def cmd_oracle(args) -> int:
    g = _resolve_graph(args)
    limits = OracleLimits(max_n=args.max_n, max_total_features=args.max_total)
    value, witness = brute_theta_c(g, limits)
    _emit(args, {"theta_c": value, "cir": cir_to_obj(witness)})
    return 0


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="cointersect", description=__doc__)
    top.add_argument("--version", action="version", version=f"cointersect {__version__}")
    sub = top.add_subparsers(dest="command", required=True)

    def new(name, handler, help_text, graph_source=False):
        p = sub.add_parser(name, help=help_text)
        _add_common(p)
        if graph_source:
            _add_graph_source(p)
        p.set_defaults(func=handler)
        return p

    new("gen", cmd_gen, "generate a graph from a named family", graph_source=True)

    p = new("bounds", cmd_bounds, "theta_1 and all bound formulas", graph_source=True)
    p.add_argument("--theta1-limit", type=int, default=20)
    p.add_argument("--chordal-clique-size", type=int)
    p.add_argument("--complement-degree", type=int)

    p = new("exact", cmd_exact, "optimal representation via the embedded solver",
            graph_source=True)
    p.add_argument("--theta1", type=int, help="override the clique-cover bound (exact value)")
    p.add_argument("--timeout-ms", type=int)
    p.add_argument("--conflicts", type=int, help="per-probe conflict budget")
    p.add_argument("--emit-cnf", metavar="DIR", help="write each probe's DIMACS file here")

    p = new("anneal", cmd_anneal, "approximate representation by simulated annealing",
            graph_source=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--c", type=float, default=10.0)
    p.add_argument("--b", type=float, default=None, help="rounds = ceil(b n ln n); default 5000")
    p.add_argument("--rounds", type=int, default=None, help="explicit round count")
    p.add_argument("--restarts", type=int, default=1)
    p.add_argument("--trace", help="write best-score trace JSON to this file")
    p.add_argument("--trace-every", type=int, default=100)

    p = new("construct", cmd_construct, "explicit representations for standard families",
            graph_source=True)
    p.add_argument("--kind", required=True,
                   choices=["star", "path", "cycle", "bipartite", "knn", "multipartite"])
    p.add_argument("--n", type=int)
    p.add_argument("--alpha", type=int)
    p.add_argument("--beta", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--packing", choices=["affine", "three"], default="affine")

    p = new("verify", cmd_verify, "check a representation against a graph", graph_source=True)
    p.add_argument("--cir", required=True)

    p = new("score", cmd_score, "count matching vertex pairs", graph_source=True)
    p.add_argument("--cir", required=True)

    p = new("communities", cmd_communities, "per-feature and per-pair communities")
    p.add_argument("--cir", required=True)

    p = new("synth", cmd_synth, "random assignment and the graph it generates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)

    p = new("align", cmd_align, "relabel one representation to best match another")
    p.add_argument("--reference", required=True)
    p.add_argument("--candidate", required=True)

    p = new("dnf-bound", cmd_dnf_bound, "integer-program lower bound for a DNF rule")
    p.add_argument("--formula", required=True, help='e.g. "x1 | x2 & x3"')
    p.add_argument("--theta1", type=int, required=True)
    p.add_argument("--cap", type=int)

    p = new("export-dimacs", cmd_export_dimacs, "emit the CNF for one (alpha, beta) probe",
            graph_source=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)

    p = new("packing", cmd_packing, "resolvable packing generators")
    p.add_argument("--kind", choices=["affine", "three"], required=True)
    p.add_argument("--k", type=int, required=True)

    p = new("oracle", cmd_oracle, "brute-force reference search (dev tool; tiny inputs only)",
            graph_source=True)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--max-total", type=int, default=6)

    return top


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.exit(2, f"error: {exc}\n")
    except (ValueError, OSError, LimitExceeded, SearchAborted) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
