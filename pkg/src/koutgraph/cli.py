"""Command-line entry point: ``koutgraph <subcommand> ...``.

Exit codes: 0 success, 2 bad parameters, 3 capacity exceeded, 4 I/O or
format error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .components import connected_components
from .errors import KoutError, ParameterError
from .graph import delete_random_nodes, generate_kout, graph_stats
from .io import deletion_metadata, read_edgelist, write_edgelist
from .montecarlo import ExperimentConfig, run_experiment
from .numerics import (ThresholdQuery, cut_union_bound, evaluate_threshold,
                       robustness_term_bound, robustness_union_bound)
from .rng import split_streams
from .robustness import (is_r_robust_bruteforce, max_robustness, nodes_of,
                         vertex_connectivity_bruteforce)

EXIT_OK = 0
EXIT_PARAM = 2
EXIT_CAPACITY = 3
EXIT_IO = 4


def _emit(data: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(data, sort_keys=True))
        return
    for key, value in data.items():
        if isinstance(value, bool):
            value = str(value).lower()
        print(f"{key}={value}")


def cmd_generate(args) -> int:
    g, _ = generate_kout(args.n, args.k, args.seed)
    delete_rng = split_streams(args.seed, 2)[1]
    meta = {"n": g.n, "k": args.k, "seed": args.seed}
    gamma = args.delete
    if args.alpha is not None:
        gamma = int(round(args.alpha * args.n))
    if gamma:
        g, record = delete_random_nodes(g, gamma, delete_rng)
        meta.update(deletion_metadata(record))
    write_edgelist(g, args.out, meta)
    _emit({"n": g.n, "edges": g.edge_count, "gamma": gamma or 0, "out": args.out}, args.json)
    return EXIT_OK


def cmd_analyze(args) -> int:
    g, _ = read_edgelist(args.input)
    stats = graph_stats(g)
    labels = connected_components(g)
    giant = labels.largest_size
    out = {
        "n": g.n,
        "edges": g.edge_count,
        "min_degree": stats.min_degree,
        "max_degree": stats.max_degree,
        "mean_degree": stats.mean_degree,
        "components": labels.count,
        "connected": g.n > 0 and giant == g.n,
        "giant_size": giant,
        "outside": g.n - giant,
    }
    if args.r is not None:
        verdict = is_r_robust_bruteforce(g, args.r)
        out["r"] = args.r
        out["robust"] = verdict.robust
        out["vertex_connectivity"] = vertex_connectivity_bruteforce(g)
    _emit(out, args.json)
    return EXIT_OK


def cmd_robustness(args) -> int:
    g, _ = read_edgelist(args.input)
    out = {"n": g.n, "max_robustness": max_robustness(g),
           "vertex_connectivity": vertex_connectivity_bruteforce(g)}
    if args.r is not None:
        verdict = is_r_robust_bruteforce(g, args.r, method=args.method)
        out["r"] = args.r
        out["robust"] = verdict.robust
        if verdict.witness is not None:
            s1, s2 = verdict.witness
            out["witness_1"] = " ".join(map(str, sorted(nodes_of(s1))))
            out["witness_2"] = " ".join(map(str, sorted(nodes_of(s2))))
    _emit(out, args.json)
    return EXIT_OK


def cmd_thresholds(args) -> int:
    q = ThresholdQuery(n=args.n, alpha=args.alpha, gamma=args.gamma, lam=args.lam, r=args.r)
    res = evaluate_threshold(args.theorem, q)
    out = {"theorem": res.theorem_tag.value, "value": res.value}
    if "shifted_value" in res.extras:
        out["value_plus_one"] = res.extras["shifted_value"]
    out.update({k: v for k, v in vars(q).items() if v is not None})
    _emit(out, args.json)
    return EXIT_OK


def cmd_bound(args) -> int:
    if args.which == "cut":
        b = cut_union_bound(args.n, args.k, args.gamma, args.lam)
        out = {"bound": "cut", "n": args.n, "k": args.k, "gamma": args.gamma,
               "lambda": args.lam, "total": b.total, "capped": b.capped}
    elif args.which == "robust-term":
        value = robustness_term_bound(args.n, args.m, args.k, args.r)
        out = {"bound": "robust-term", "n": args.n, "m": args.m, "k": args.k, "r": args.r,
               "total": value}
        b = None
    else:
        b = robustness_union_bound(args.n, args.k, args.r)
        out = {"bound": "robust-sum", "n": args.n, "k": args.k, "r": args.r,
               "total": b.total, "capped": b.capped}
    if args.terms and b is not None:
        out["terms"] = [[i, t] for i, t in b.per_r_terms]
    if not args.json and "terms" in out:
        terms = out.pop("terms")
        _emit(out, False)
        for i, t in terms:
            print(f"term[{i}]={t}")
        return EXIT_OK
    _emit(out, args.json)
    return EXIT_OK


def _config_from_args(args) -> ExperimentConfig:
    if args.config:
        try:
            cfg = ExperimentConfig.from_json(args.config)
        except TypeError as exc:
            raise ParameterError(f"bad config file: {exc}") from None
        if args.kind:
            cfg.kind = args.kind.replace("-", "_")
        if args.threads is not None:
            cfg.threads = args.threads
        return cfg
    missing = [f for f in ("n", "k_min", "k_max", "trials") if getattr(args, f) is None]
    if missing or not args.kind:
        raise ParameterError("experiment needs --config or --kind, --n, --k-min, --k-max, --trials")
    return ExperimentConfig(kind=args.kind, n=args.n, k_range=(args.k_min, args.k_max),
                            trials=args.trials, master_seed=args.seed, gamma=args.gamma,
                            alpha=args.alpha, r=args.r, deletion=args.deletion,
                            coupled=args.coupled, threads=args.threads or 1)


def cmd_experiment(args) -> int:
    cfg = _config_from_args(args)
    cfg.validate()
    result = run_experiment(cfg, keep_trials=args.trials_csv)
    os.makedirs(args.out_dir, exist_ok=True)
    for name, text in result.files.items():
        with open(os.path.join(args.out_dir, name), "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    summary_name = "robust.csv" if cfg.kind == "robust_sample" else "aggregate.csv"
    sys.stdout.write(result.files[summary_name])
    if "aggregate_er.csv" in result.files:
        sys.stdout.write("# er\n" + result.files["aggregate_er.csv"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="koutgraph",
                                description="Random K-out graphs under node deletion.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="sample a K-out graph and write an edge list")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    dg = g.add_mutually_exclusive_group()
    dg.add_argument("--delete", type=int, default=0, metavar="GAMMA")
    dg.add_argument("--alpha", type=float)
    g.add_argument("--out", required=True)
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_generate)

    a = sub.add_parser("analyze", help="component statistics of an edge list")
    a.add_argument("--in", dest="input", required=True)
    a.add_argument("--r", type=int)
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    rb = sub.add_parser("robustness", help="exact r-robustness of a small graph")
    rb.add_argument("--in", dest="input", required=True)
    rb.add_argument("--r", type=int)
    rb.add_argument("--method", choices=["sos", "enumerate"], default="sos")
    rb.add_argument("--json", action="store_true")
    rb.set_defaults(func=cmd_robustness)

    t = sub.add_parser("thresholds", help="evaluate a minimum-K threshold")
    t.add_argument("--theorem", required=True, choices=["t1", "t2a", "t2b", "t3", "t4", "robust"])
    t.add_argument("--n", type=int)
    t.add_argument("--alpha", type=float)
    t.add_argument("--gamma", type=int)
    t.add_argument("--lambda", dest="lam", type=int)
    t.add_argument("--r", type=int)
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_thresholds)

    b = sub.add_parser("bound", help="finite-n union bounds")
    bsub = b.add_subparsers(dest="which", required=True)
    bc = bsub.add_parser("cut")
    bc.add_argument("--n", type=int, required=True)
    bc.add_argument("--k", type=int, required=True)
    bc.add_argument("--gamma", type=int, required=True)
    bc.add_argument("--lambda", dest="lam", type=int, required=True)
    br = bsub.add_parser("robust-term")
    br.add_argument("--n", type=int, required=True)
    br.add_argument("--m", type=int, required=True)
    br.add_argument("--k", type=int, required=True)
    br.add_argument("--r", type=int, required=True)
    bs = bsub.add_parser("robust-sum")
    bs.add_argument("--n", type=int, required=True)
    bs.add_argument("--k", type=int, required=True)
    bs.add_argument("--r", type=int, required=True)
    for sp in (bc, br, bs):
        sp.add_argument("--terms", action="store_true", help="print the per-size terms")
        sp.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bound)

    e = sub.add_parser("experiment", help="run a Monte Carlo sweep and write CSV")
    e.add_argument("--kind", choices=["connectivity", "giant", "er-compare", "robust-sample"])
    e.add_argument("--config", help="JSON file with ExperimentConfig fields")
    e.add_argument("--n", type=int)
    e.add_argument("--k-min", type=int)
    e.add_argument("--k-max", type=int)
    e.add_argument("--trials", type=int)
    e.add_argument("--seed", type=int, default=0)
    eg = e.add_mutually_exclusive_group()
    eg.add_argument("--gamma", type=int)
    eg.add_argument("--alpha", type=float)
    e.add_argument("--r", type=int, default=1)
    e.add_argument("--deletion", choices=["subset", "bernoulli"], default="subset")
    e.add_argument("--coupled", action="store_true")
    e.add_argument("--threads", type=int)
    e.add_argument("--trials-csv", action="store_true", help="also write per-trial records")
    e.add_argument("--out-dir", required=True)
    e.set_defaults(func=cmd_experiment)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except KoutError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
