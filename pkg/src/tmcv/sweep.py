"""Batch experiments: every (dataset, method, budget) cell of a config."""
from __future__ import annotations

import csv
import io
import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .core import core_decompose
from .generators import derive_seed, generate
from .graph import largest_component, read_edge_list
from .heuristics import METHODS, ahdr_steps, run_method

log = logging.getLogger(__name__)

RESULT_COLUMNS = ["dataset", "method", "budget", "f", "F", "seconds"]
THRESHOLD_COLUMNS = ["dataset", "threshold", "budget"]


@dataclass
class ExperimentConfig:
    datasets: list[dict]
    methods: list[str]
    budgets: list[int] = field(default_factory=list)
    budget_fracs: list[float] = field(default_factory=list)
    seed: int = 0
    lcc: bool = False
    thresholds: list[float] = field(default_factory=list)
    base_dir: str = "."

    def __post_init__(self):
        if not self.methods:
            raise ValueError("config needs at least one method")
        for m in self.methods:
            if m not in METHODS:
                raise ValueError(f"unknown method {m!r}")
        if not self.budgets and not self.budget_fracs:
            raise ValueError("config needs budgets or budget_fracs")
        for grid in (self.budgets, self.budget_fracs):
            if list(grid) != sorted(grid):
                raise ValueError("budget grid must be ascending")
        names = [d.get("name") for d in self.datasets]
        if None in names or len(set(names)) != len(names):
            raise ValueError("every dataset needs a unique name")

    @classmethod
    def from_file(cls, path) -> "ExperimentConfig":
        with open(path) as fh:
            data = json.load(fh)
        data.setdefault("base_dir", os.path.dirname(os.path.abspath(path)))
        return cls(**data)

    def budgets_for(self, n: int) -> list[int]:
        grid = set(self.budgets) | {int(p * n) for p in self.budget_fracs}
        return sorted(grid)


def load_dataset(spec: dict, cfg: ExperimentConfig):
    if "path" in spec:
        path = spec["path"]
        if not os.path.isabs(path):
            path = os.path.join(cfg.base_dir, path)
        g = read_edge_list(path)
    elif "model" in spec:
        seed = spec.get("seed", derive_seed(cfg.seed, spec["name"]))
        g = generate(spec["model"], int(spec["n"]), float(spec["deg"]), int(seed))
    else:
        raise ValueError(f"dataset {spec['name']!r} needs a path or a model")
    if cfg.lcc:
        g = largest_component(g)
    return g


def _run_cell(args):
    name, g, base, method, b, seed = args
    t0 = time.perf_counter()
    try:
        res = run_method(method, g, None, b, seed=seed, base=base)
    except Exception as exc:  # recorded as an error row, the sweep goes on
        return {"dataset": name, "method": method, "budget": b, "error": str(exc)}
    return {
        "dataset": name, "method": method, "budget": b, "f": res.f, "F": res.F,
        "seconds": time.perf_counter() - t0, "B": list(res.B),
    }


def _threshold_budgets(name, g, base, thresholds):
    # smallest AHDR budget reaching each disruption level
    n = g.live_count
    todo = sorted(thresholds)
    found = {}
    if todo and n:
        for step, (_, _, f) in enumerate(ahdr_steps(g, None, n, base), start=1):
            while todo and f / n >= todo[0]:
                found[todo.pop(0)] = step
            if not todo:
                break
    return [{"dataset": name, "threshold": t, "budget": found.get(t)} for t in sorted(thresholds)]


@dataclass
class SweepResult:
    rows: list[dict]
    thresholds: list[dict]

    def results_csv(self, include_seconds: bool = True) -> str:
        buf = io.StringIO()
        cols = RESULT_COLUMNS if include_seconds else RESULT_COLUMNS[:-1]
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in self.rows:
            if "error" in r:
                w.writerow([r["dataset"], r.get("method", "error"), r.get("budget", "")] + [""] * (len(cols) - 3))
            else:
                vals = [r["dataset"], r["method"], r["budget"], r["f"], f"{r['F']:.10g}"]
                if include_seconds:
                    vals.append(f"{r['seconds']:.6f}")
                w.writerow(vals)
        return buf.getvalue()

    def thresholds_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(THRESHOLD_COLUMNS)
        for r in self.thresholds:
            w.writerow([r["dataset"], r["threshold"], "" if r["budget"] is None else r["budget"]])
        return buf.getvalue()

    def deletions(self) -> list[dict]:
        return [
            {k: r[k] for k in ("dataset", "method", "budget", "B", "f", "error") if k in r}
            for r in self.rows
        ]

    def write(self, outdir) -> None:
        os.makedirs(outdir, exist_ok=True)
        with open(os.path.join(outdir, "results.csv"), "w") as fh:
            fh.write(self.results_csv())
        with open(os.path.join(outdir, "deletions.json"), "w") as fh:
            json.dump(self.deletions(), fh, indent=1)
        if self.thresholds:
            with open(os.path.join(outdir, "thresholds.csv"), "w") as fh:
                fh.write(self.thresholds_csv())


def run_sweep(cfg: ExperimentConfig, threads: int = 1) -> SweepResult:
    jobs, rows, thresholds = [], [], []
    for spec in cfg.datasets:
        name = spec["name"]
        try:
            g = load_dataset(spec, cfg)
        except Exception as exc:
            log.warning("dataset %s failed to load: %s", name, exc)
            rows.append({"dataset": name, "method": "error", "budget": "", "error": str(exc)})
            continue
        base = core_decompose(g)
        for method in cfg.methods:
            for b in cfg.budgets_for(g.live_count):
                seed = derive_seed(cfg.seed, name, method, b)
                jobs.append((name, g, base, method, b, seed))
        if cfg.thresholds:
            thresholds += _threshold_budgets(name, g, base, cfg.thresholds)

    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows += list(pool.map(_run_cell, jobs))
    else:
        rows += [_run_cell(j) for j in jobs]
    rows.sort(key=lambda r: (r["dataset"], r.get("method", ""), r["budget"] if r["budget"] != "" else -1))
    return SweepResult(rows, thresholds)
