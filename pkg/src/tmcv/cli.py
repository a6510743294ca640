"""Command line interface: ``tmcv <command> [options]``.

Exit codes: 0 ok, 1 usage error, 2 data error, 3 infeasible request.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__
from .core import core_decompose
from .errors import InfeasibleError, TMCVError
from .exact import BRUTE_FORCE_CAP, exact_bruteforce, exact_forest_dp
from .generators import generate
from .graph import from_edge_list, largest_component, to_edge_list
from .heuristics import deletion_trace, run_method
from .reductions import CONSTRUCTIONS, SetCoverInstance, inapprox_gadget_to_tmcv
from .resilience import pearson, resilience_core, resilience_rand
from .sweep import ExperimentConfig, run_sweep

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_INFEASIBLE = 0, 1, 2, 3

log = logging.getLogger("tmcv")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--input", "-i", help="edge list file ('-' for stdin)")
    p.add_argument("--output", "-o", help="output file (default stdout)")
    p.add_argument("--format", choices=("csv", "json"), default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--lcc", action="store_true", help="restrict to the largest connected component")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _read_graph(args):
    if not args.input:
        raise UsageError("--input is required")
    if args.input == "-":
        g = from_edge_list(sys.stdin.buffer)
    else:
        with open(args.input, "rb") as fh:
            g = from_edge_list(fh)
    if getattr(args, "lcc", False):
        g = largest_component(g)
    return g


def _emit(args, text: str) -> None:
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_side(path, text):
    if path:
        with open(path, "w") as fh:
            fh.write(text)


def _ids_from_labels(g, tokens):
    index = {g.label(v): v for v in range(g.n)}
    out = []
    for tok in tokens:
        if tok not in index:
            raise TMCVError(f"unknown vertex {tok!r}")
        out.append(index[tok])
    return out


def _candidates(g, spec):
    if spec in (None, "all"):
        return None
    with open(spec) as fh:
        return _ids_from_labels(g, fh.read().split())


def _budget(g, args):
    if args.budget_frac is not None:
        return int(args.budget_frac * g.live_count)
    if args.budget is None:
        raise UsageError("give --budget or --budget-frac")
    return args.budget


def _trace_csv(g, res):
    n = res.n
    order = [v for v, _ in res.per_step] if res.per_step else list(res.B)
    lines = ["step,vertex,f_cum,F_cum\n"]
    for step, (v, _, f) in enumerate(deletion_trace(g, order), start=1):
        lines.append(f"{step},{g.label(v)},{f},{f / n if n else 0.0:.10g}\n")
    return "".join(lines)


def cmd_decompose(args):
    g = _read_graph(args)
    d = core_decompose(g)
    summary = {
        "n": g.live_count, "m": g.m, "degeneracy": d.degeneracy,
        "core_size_histogram": {str(k): c for k, c in d.core_size_histogram().items()},
    }
    csv_text = "vertex,coreness\n" + "".join(
        f"{g.label(v)},{d.coreness[v]}\n" for v in g.live_vertices()
    )
    if args.format == "json":
        _emit(args, json.dumps(summary, indent=1) + "\n")
        _write_side(args.csv, csv_text)
    else:
        _emit(args, csv_text)
        _write_side(args.summary, json.dumps(summary, indent=1) + "\n")


def cmd_attack(args):
    g = _read_graph(args)
    b = _budget(g, args)
    res = run_method(args.method, g, _candidates(g, args.candidates), b, seed=args.seed)
    trace = _trace_csv(g, res)
    if args.format == "csv":
        _emit(args, trace)
    else:
        _emit(args, json.dumps(res.to_json(g), indent=1) + "\n")
        _write_side(args.trace, trace)


def cmd_exact(args):
    g = _read_graph(args)
    b = _budget(g, args)
    cands = _candidates(g, args.candidates)
    if args.solver == "brute":
        res = exact_bruteforce(g, cands, b, cap=args.cap)
    else:
        res = exact_forest_dp(g, cands, b)
    _emit(args, json.dumps(res.to_json(g), indent=1) + "\n")


def cmd_resilience(args):
    g = _read_graph(args)
    if args.metric == "core":
        curve = resilience_core(g, args.grid, method=args.method, seed=args.seed)
    else:
        curve = resilience_rand(g, args.trials, args.grid, seed=args.seed)
    summary = json.dumps({"metric": args.metric, "score": curve.score, "auc": curve.auc}) + "\n"
    if args.format == "json":
        _emit(args, summary)
    else:
        _emit(args, curve.to_csv())
        _write_side(args.summary, summary)


def _read_column(path):
    vals = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            tok = line.split(",")[-1].strip()
            try:
                vals.append(float(tok))
            except ValueError:
                if vals:  # only a leading header may be non-numeric
                    raise TMCVError(f"{path}: not a number: {tok!r}")
    return vals


def cmd_correlate(args):
    x, y = _read_column(args.x), _read_column(args.y)
    try:
        r, p = pearson(x, y)
    except ValueError as exc:
        raise TMCVError(str(exc))
    _emit(args, json.dumps({"r": r, "p": p, "N": len(x)}) + "\n")


def cmd_generate(args):
    g = generate(args.model, args.n, args.deg, args.seed)
    _emit(args, to_edge_list(g))


def cmd_reduce(args):
    with open(args.instance) as fh:
        inst = SetCoverInstance.from_json(fh.read())
    if args.construction == "inapprox":
        red = inapprox_gadget_to_tmcv(inst, args.gadget_size)
    else:
        red = CONSTRUCTIONS[args.construction](inst)
    meta = {"construction": args.construction, "n": red.graph.n, "m": red.graph.m,
            "budget": red.budget, "yes_threshold": red.yes_threshold,
            "candidates": list(red.candidates)}
    if args.prefix:
        _write_side(args.prefix + ".edges", to_edge_list(red.graph))
        _write_side(args.prefix + ".roles.json", json.dumps(list(red.roles), indent=1) + "\n")
        _write_side(args.prefix + ".thresholds.json", json.dumps(meta, indent=1) + "\n")
        _emit(args, json.dumps(meta) + "\n")
    else:
        meta["edges"] = red.graph.edges()
        meta["roles"] = list(red.roles)
        _emit(args, json.dumps(meta) + "\n")


def cmd_sweep(args):
    cfg = ExperimentConfig.from_file(args.config)
    result = run_sweep(cfg, threads=args.threads)
    if args.output:
        result.write(args.output)
    else:
        sys.stdout.write(result.results_csv())


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    p = _Parser(prog="tmcv", description="k-core robustness under vertex deletion")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("decompose", parents=[common], help="coreness per vertex")
    s.add_argument("--summary", help="also write the JSON summary here")
    s.add_argument("--csv", help="with --format json, also write the CSV here")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("attack", parents=[common], help="run a deletion heuristic",
                       description="Zero-gain AHDR rounds still delete a vertex, so B has "
                                   "exactly the requested size. Ties go to the lowest id.")
    s.add_argument("--method", choices=("random", "hd", "hdr", "ahdr"), default="ahdr")
    s.add_argument("--budget", type=int)
    s.add_argument("--budget-frac", type=float)
    s.add_argument("--candidates", default="all", help="'all' or a file of vertex labels")
    s.add_argument("--trace", help="write the step,vertex,f_cum,F_cum CSV here")
    s.set_defaults(func=cmd_attack)

    s = sub.add_parser("exact", parents=[common], help="optimal deletion set")
    s.add_argument("--solver", choices=("brute", "forest-dp"), default="brute")
    s.add_argument("--budget", type=int)
    s.add_argument("--budget-frac", type=float)
    s.add_argument("--candidates", default="all")
    s.add_argument("--cap", type=int, default=BRUTE_FORCE_CAP)
    s.set_defaults(func=cmd_exact)

    s = sub.add_parser("resilience", parents=[common], help="resilience curve and score")
    s.add_argument("--metric", choices=("core", "rand"), default="core")
    s.add_argument("--grid", type=int, default=101)
    s.add_argument("--trials", type=int, default=10)
    s.add_argument("--method", choices=("ahdr", "hdr", "hd", "random"), default="ahdr")
    s.add_argument("--summary", help="also write the JSON score here")
    s.set_defaults(func=cmd_resilience)

    s = sub.add_parser("correlate", parents=[common], help="Pearson r and p-value")
    s.add_argument("--x", required=True)
    s.add_argument("--y", required=True)
    s.set_defaults(func=cmd_correlate)

    s = sub.add_parser("generate", parents=[common], help="synthetic ER / BA graph")
    s.add_argument("--model", choices=("er", "ba"), required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--deg", type=float, default=2.0,
                   help="average degree (ba: attaches round(deg/2) edges per vertex)")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("reduce", parents=[common], help="Set Cover reduction instance")
    s.add_argument("--construction", choices=tuple(CONSTRUCTIONS), required=True)
    s.add_argument("--instance", required=True, help='JSON like {"n":4,"sets":[[1,2],[1,3,4],[3]],"r":2}')
    s.add_argument("--gadget-size", type=int, default=6)
    s.add_argument("--prefix", help="write PREFIX.edges, PREFIX.roles.json, PREFIX.thresholds.json")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("sweep", parents=[common], help="run an experiment config")
    s.add_argument("--config", required=True)
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        args.func(args)
    except UsageError as exc:
        print(f"tmcv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InfeasibleError as exc:
        print(f"tmcv: infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (TMCVError, ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"tmcv: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
