"""Command-line interface.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 size cap exceeded.
All output is deterministic for a fixed command line.
"""
import argparse
import json
import sys

from . import acceptance, experiments, grid, invgraph, letters, perms, permletters, prime, reflect
from .graphs import (
    SizeCapError,
    canonical_form,
    generate_all_graphs,
    graph6_decode,
    graph6_encode,
    graph_from_json,
    graph_to_json,
    is_isomorphic,
    is_perfect,
)

EXIT_DOMAIN, EXIT_USAGE, EXIT_CAP = 1, 2, 3


def parse_graph_arg(text: str):
    """Graph from graph6 or inline JSON."""
    text = text.strip()
    if text.startswith("{"):
        return graph_from_json(json.loads(text))
    return graph6_decode(text)


def emit(args, payload: dict):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for key in sorted(payload):
            print(f"{key}: {payload[key]}")


# ------------------------------------------------------------- subcommands

def cmd_perm(args):
    if args.action == "decode":
        q = perms.lehmer_decode([int(tok) for tok in args.perm.split(",")])
        emit(args, {"perm": perms.format_perm(q)})
        return
    if args.action == "poly":
        emit(args, {"coefficients": list(perms.inversion_polynomial(int(args.perm)))})
        return
    p = perms.parse_perm(args.perm)
    if args.action == "code":
        emit(args, {"perm": perms.format_perm(p), "code": list(perms.lehmer_encode(p))})
    elif args.action == "inversions":
        emit(args, {"inversions": sorted(list(x) for x in perms.inversion_list(p))})
    elif args.action == "pattern":
        pat = perms.parse_perm(args.arg)
        found, witness = perms.contains_pattern(p, pat)
        emit(args, {"contains": found, "witness": list(witness) if witness else None})
    elif args.action == "symmetry":
        emit(args, {"result": perms.format_perm(perms.symmetry(p, args.arg))})
    elif args.action == "stats":
        prof = perms.descent_profile(p)
        window = perms.find_interval(p)
        emit(
            args,
            {
                "length": perms.length(p),
                "absolute_length": perms.absolute_length(p),
                "cycles": [list(c) for c in perms.cycles(p)],
                "descent_set": sorted(prof["descent_set"]),
                "X_d": prof["X_d"],
                "X_ddd": prof["X_ddd"],
                "X_ddadd": prof["X_ddadd"],
                "simple": perms.is_simple(p),
                "interval": list(window) if window else None,
            },
        )


def cmd_graph(args):
    if args.action == "catalog":
        graphs = generate_all_graphs(int(args.graph))
        emit(args, {"n": int(args.graph), "count": len(graphs), "graph6": [graph6_encode(g) for g in graphs]})
        return
    g = parse_graph_arg(args.graph)
    if args.action == "graph6":
        emit(args, {"graph6": graph6_encode(g), "json": graph_to_json(g)})
    elif args.action == "iso":
        h = parse_graph_arg(args.arg)
        emit(args, {"isomorphic": is_isomorphic(g, h)})
    elif args.action == "canon":
        form = canonical_form(g)
        emit(args, {"n": form.n, "bits": form.bits})
    elif args.action == "perfect":
        emit(args, {"perfect": is_perfect(g)})


def cmd_invgraph(args):
    if args.action == "build":
        p = perms.parse_perm(args.arg)
        emit(args, graph_to_json(invgraph.inversion_graph(p)))
    elif args.action == "intervals":
        p = perms.parse_perm(args.arg)
        emit(args, invgraph.interval_system_to_json(invgraph.to_interval_system(p)))
    elif args.action == "recognize":
        g = parse_graph_arg(args.arg)
        got = invgraph.recognize(g)
        if got is None:
            emit(args, {"permutation": None})
        else:
            q, mapping = got
            emit(
                args,
                {
                    "permutation": perms.format_perm(q),
                    "vertex_to_value": {str(v): mapping[v] for v in g.vertices()},
                },
            )
    elif args.action == "equivalents":
        p = perms.parse_perm(args.arg)
        equiv = sorted(invgraph.equivalent_permutations(p))
        emit(args, {"count": len(equiv), "permutations": [perms.format_perm(q) for q in equiv]})


def cmd_prime(args):
    g = parse_graph_arg(args.graph)
    if args.action == "modules":
        module = prime.find_nontrivial_module(g)
        emit(args, {"prime": module is None, "module": sorted(module) if module else None})
    elif args.action == "chains":
        chain = prime.find_chain(g, args.u, args.v, args.w)
        emit(args, {"chain": list(chain) if chain else None})
    elif args.action == "edge-classes":
        classes = prime.edge_classes(g)
        emit(args, {"count": len(classes), "classes": sorted(sorted(list(e) for e in c) for c in classes)})
    elif args.action == "orientations":
        count = prime.count_transitive_orientations(g)
        listed = prime.transitive_orientations(g)
        emit(args, {"count": count, "orientations": [[list(a) for a in o] for o in listed]})


def cmd_letters(args):
    if args.action == "decode":
        obj = json.loads(args.arg)
        lt = letters.Lettering(
            int(obj["k"]), tuple(obj["word"]), frozenset(tuple(p) for p in obj["decoder"])
        )
        emit(args, graph_to_json(letters.decode(lt)))
    elif args.action == "lettericity":
        g = parse_graph_arg(args.arg)
        result = letters.lettericity_exact(g, args.k_max)
        if result is None:
            emit(args, {"lettericity": None, "k_max": args.k_max})
        else:
            k, lt, order = result
            emit(
                args,
                {
                    "lettericity": k,
                    "word": list(lt.word),
                    "decoder": sorted(list(p) for p in lt.decoder),
                    "vertex_order": list(order),
                },
            )
    elif args.action == "savings":
        g = parse_graph_arg(args.arg)
        order, lt = letters.palindromic_savings(g)
        emit(
            args,
            {
                "k": lt.k,
                "word": list(lt.word),
                "decoder": sorted(list(p) for p in lt.decoder),
                "subgraph_vertices": list(order),
            },
        )


def cmd_grid(args):
    if args.action == "pmm":
        m = grid.matrix_from_json(json.loads(args.arg))
        signs = grid.is_pmm(m)
        if signs is None:
            emit(args, {"pmm": False})
        else:
            emit(args, {"pmm": True, "col_signs": list(signs[0]), "row_signs": list(signs[1])})
    elif args.action == "expand":
        m = grid.matrix_from_json(json.loads(args.arg))
        emit(args, grid.matrix_to_json(grid.expand_to_pmm(m)))
    elif args.action == "draw":
        p = perms.parse_perm(args.arg)
        emit(args, grid.drawing_to_json(grid.monotone_run_drawing(p)))
    elif args.action == "lettering":
        d = grid.drawing_from_json(json.loads(args.arg))
        lt, letter = grid.drawing_to_lettering(d)
        emit(
            args,
            {
                "k": lt.k,
                "word": list(lt.word),
                "decoder": sorted(list(p) for p in lt.decoder),
                "cell_letters": {f"{c},{r}": name for (c, r), name in sorted(letter.items())},
            },
        )
    elif args.action == "runs":
        p = perms.parse_perm(args.arg)
        emit(args, {"min_monotone_runs": grid.min_monotone_runs(p)})
    elif args.action == "expectations":
        ex = grid.descent_expectations(int(args.arg))
        emit(args, {key: f"{v.numerator}/{v.denominator}" for key, v in ex.items()})


def cmd_permletters(args):
    if args.action == "decode":
        pl = permletters.perm_lettering_from_json(json.loads(args.arg))
        emit(args, graph_to_json(permletters.decode_perm(pl)))
    elif args.action == "ellperm":
        g = parse_graph_arg(args.arg)
        result = permletters.ell_perm_exact(g)
        k, pl, order = result
        out = permletters.perm_lettering_to_json(pl)
        out["ell_perm"] = k
        out["vertex_order"] = list(order)
        emit(args, out)
    elif args.action == "universal":
        g = parse_graph_arg(args.arg)
        emit(args, permletters.perm_lettering_to_json(permletters.universal_encoding(g)))
    elif args.action == "cycle":
        emit(args, permletters.perm_lettering_to_json(permletters.cycle_encoding(int(args.arg))))


def cmd_reflect(args):
    g = parse_graph_arg(args.graph)
    if args.action == "apply":
        t = reflect.reflection_from_json(json.loads(args.arg))
        emit(args, graph_to_json(reflect.apply_reflection(g, t)))
    elif args.action == "bfs":
        dist, witness = reflect.bfs_to_edgeless(g, args.nonedge)
        emit(
            args,
            {
                "distance": dist,
                "witness": [reflect.reflection_to_json(t) for t in witness],
            },
        )
    elif args.action == "greedy":
        seq = reflect.greedy_empty(g)
        emit(args, {"length": len(seq), "sequence": [reflect.reflection_to_json(t) for t in seq]})
    elif args.action == "cyclic":
        seq, savings = reflect.cyclic_empty(g)
        emit(
            args,
            {
                "length": len(seq),
                "savings": savings,
                "sequence": [reflect.reflection_to_json(t) for t in seq],
            },
        )
    elif args.action == "cover":
        emit(args, {"min_edge_edge_cover": reflect.min_edge_edge_cover(g)})
    elif args.action == "nested":
        blocks, count = reflect.nested_triangle_partition(g)
        emit(
            args,
            {
                "blocks": [
                    {"center": list(center), "outer": sorted(outer)} for center, outer in blocks
                ],
                "count": count,
                "bound": reflect.partition_bound_value(g, blocks),
            },
        )


def cmd_convert(args):
    if args.from_format == "graph6" and args.to_format == "json":
        print(json.dumps(graph_to_json(graph6_decode(args.payload)), sort_keys=True))
    elif args.from_format == "json" and args.to_format == "graph6":
        print(graph6_encode(graph_from_json(json.loads(args.payload))))
    elif args.from_format == "perm" and args.to_format == "json":
        print(json.dumps({"values": list(perms.parse_perm(args.payload))}, sort_keys=True))
    elif args.from_format == "json" and args.to_format == "perm":
        print(perms.format_perm(perms.check_perm(json.loads(args.payload)["values"])))
    else:
        raise ValueError(f"no conversion {args.from_format} -> {args.to_format}")


def cmd_experiment(args):
    out = experiments.run_experiment(args.kind, n=args.n, samples=args.samples, seed=args.seed)
    emit(args, out)


def cmd_verify(args):
    names = args.criteria or None
    results = acceptance.run_all(names)
    failures = 0
    for name, ok, detail in results:
        print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
        failures += 0 if ok else 1
    print(f"{len(results) - failures}/{len(results)} criteria passed")
    return EXIT_DOMAIN if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invgraphs",
        description="Exact toolkit for inversion graphs, letter graphs, and edge reflections.",
    )
    parser.add_argument("--format", choices=("json", "table"), default="json")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--cap-override",
        type=int,
        default=None,
        help="request a higher size cap (refused above the hard caps)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("perm", help="permutation operations")
    p.add_argument("action", choices=("code", "decode", "inversions", "pattern", "symmetry", "stats", "poly"))
    p.add_argument("perm")
    p.add_argument("arg", nargs="?")
    p.set_defaults(func=cmd_perm)

    p = sub.add_parser("graph", help="graph utilities")
    p.add_argument("action", choices=("graph6", "iso", "canon", "catalog", "perfect"))
    p.add_argument("graph")
    p.add_argument("arg", nargs="?")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("invgraph", help="inversion graphs")
    p.add_argument("action", choices=("build", "recognize", "equivalents", "intervals"))
    p.add_argument("arg")
    p.set_defaults(func=cmd_invgraph)

    p = sub.add_parser("prime", help="modules and orientations")
    p.add_argument("action", choices=("modules", "chains", "edge-classes", "orientations"))
    p.add_argument("graph")
    p.add_argument("u", nargs="?", type=int)
    p.add_argument("v", nargs="?", type=int)
    p.add_argument("w", nargs="?", type=int)
    p.set_defaults(func=cmd_prime)

    p = sub.add_parser("letters", help="letter graphs and lettericity")
    p.add_argument("action", choices=("decode", "lettericity", "savings"))
    p.add_argument("arg")
    p.add_argument("--k-max", type=int, default=5)
    p.set_defaults(func=cmd_letters)

    p = sub.add_parser("grid", help="grid matrices and drawings")
    p.add_argument("action", choices=("pmm", "expand", "draw", "lettering", "runs", "expectations"))
    p.add_argument("arg")
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("permletters", help="permutation letter graphs")
    p.add_argument("action", choices=("decode", "ellperm", "universal", "cycle"))
    p.add_argument("arg")
    p.set_defaults(func=cmd_permletters)

    p = sub.add_parser("reflect", help="edge and nonedge reflections")
    p.add_argument("action", choices=("apply", "bfs", "greedy", "cyclic", "cover", "nested"))
    p.add_argument("graph")
    p.add_argument("arg", nargs="?")
    p.add_argument("--nonedge", action="store_true", help="allow nonedge reflections in bfs")
    p.set_defaults(func=cmd_reflect)

    p = sub.add_parser("convert", help="format conversions")
    p.add_argument("from_format", choices=("graph6", "json", "perm"))
    p.add_argument("to_format", choices=("graph6", "json", "perm"))
    p.add_argument("payload")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("experiment", help="seeded Monte Carlo reports")
    p.add_argument("kind", choices=experiments.EXPERIMENT_KINDS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=100)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("verify", help="run the acceptance criteria")
    p.add_argument("criteria", nargs="*")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cap_override is not None and args.cap_override > 12:
        print("cap override refused: above the hard caps", file=sys.stderr)
        return EXIT_CAP
    try:
        result = args.func(args)
        return result or 0
    except SizeCapError as exc:
        print(f"size cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
