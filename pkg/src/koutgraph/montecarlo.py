"""Seeded Monte Carlo sweeps over K with CSV output.

Every trial is keyed by ``(k, gamma, trial_index)`` and draws all of its
randomness from a seed derived from those keys and the master seed, so the
result of a sweep does not depend on how trials are scheduled across
workers. Aggregation is done after all trials of a K value are collected,
in trial-index order.
"""
from __future__ import annotations

import csv
import io
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .components import connected_components
from .errors import CapacityError, ParameterError
from .graph import (delete_bernoulli, delete_random_nodes, generate_er, generate_kout,
                    matched_er_probability)
from .rng import FAMILY_ER, FAMILY_KOUT, derive_trial_seed, split_streams
from .robustness import ROBUSTNESS_MAX_N, is_r_robust_bruteforce, vertex_connectivity_bruteforce

__all__ = [
    "KINDS",
    "ExperimentConfig",
    "TrialRecord",
    "AggregateRow",
    "RobustnessRow",
    "AGGREGATE_HEADER",
    "TRIAL_HEADER",
    "ROBUST_HEADER",
    "run_trial",
    "aggregate",
    "run_connectivity_sweep",
    "run_giant_sweep",
    "run_er_comparison",
    "run_robustness_sample",
    "run_experiment",
    "format_number",
    "aggregate_csv",
    "trials_csv",
    "robust_csv",
]

KINDS = ("connectivity", "giant", "er_compare", "robust_sample")

AGGREGATE_HEADER = ["n", "k", "gamma", "trials", "p_connected", "ci_low", "ci_high",
                    "max_outside", "mean_outside"]
TRIAL_HEADER = ["n", "k", "gamma", "trial", "seed", "connected", "giant_size", "outside"]
ROBUST_HEADER = ["n", "k", "r", "trials", "fraction_r_robust", "fraction_r_connected"]

_Z95 = 1.959963984540054


@dataclass
class ExperimentConfig:
    """Parameters of one sweep.

    Give the deletion either as an absolute ``gamma`` or as a fraction
    ``alpha`` (rounded to the nearest count). ``deletion="bernoulli"``
    removes each node independently with probability alpha instead of a
    fixed-size subset. With ``coupled=True`` the trial seed ignores k, so
    the graph for k is a subgraph of the graph for k+1 in the same trial.
    """

    kind: str
    n: int
    k_range: tuple[int, int]
    trials: int
    master_seed: int = 0
    gamma: int | None = None
    alpha: float | None = None
    r: int = 1
    deletion: str = "subset"
    coupled: bool = False
    threads: int = 1

    def __post_init__(self):
        self.kind = self.kind.replace("-", "_")
        self.k_range = (int(self.k_range[0]), int(self.k_range[1]))

    @property
    def resolved_gamma(self) -> int:
        if self.gamma is not None:
            return int(self.gamma)
        if self.alpha is not None:
            return int(round(self.alpha * self.n))
        return 0

    @property
    def ks(self) -> range:
        return range(self.k_range[0], self.k_range[1] + 1)

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise ParameterError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.n < 2:
            raise ParameterError(f"n must be >= 2, got {self.n}")
        lo, hi = self.k_range
        if not 1 <= lo <= hi <= self.n - 1:
            raise ParameterError(f"k_range must lie within [1, n-1], got {self.k_range}")
        if self.trials < 1:
            raise ParameterError("trials must be >= 1")
        if self.gamma is not None and self.alpha is not None:
            raise ParameterError("give gamma or alpha, not both")
        if self.alpha is not None and not 0.0 <= self.alpha < 1.0:
            raise ParameterError(f"alpha must lie in [0, 1), got {self.alpha}")
        if not 0 <= self.resolved_gamma < self.n:
            raise ParameterError(f"gamma must satisfy 0 <= gamma < n, got {self.resolved_gamma}")
        if self.deletion not in ("subset", "bernoulli"):
            raise ParameterError(f"deletion must be 'subset' or 'bernoulli', got {self.deletion!r}")
        if self.deletion == "bernoulli" and self.alpha is None:
            raise ParameterError("bernoulli deletion needs alpha")
        if self.threads < 1:
            raise ParameterError("threads must be >= 1")
        if self.r < 1:
            raise ParameterError("r must be >= 1")
        if self.kind == "robust_sample" and self.n > ROBUSTNESS_MAX_N:
            raise CapacityError(f"robust_sample needs n <= {ROBUSTNESS_MAX_N}, got {self.n}")

    @classmethod
    def from_json(cls, path: str | os.PathLike) -> "ExperimentConfig":
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        return cls(**data)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class TrialRecord:
    n: int
    k: int
    gamma: int
    trial_index: int
    trial_seed: int
    connected: bool
    giant_size: int
    outside: int


@dataclass(frozen=True)
class AggregateRow:
    n: int
    k: int
    gamma: int
    trials: int
    p_connected_hat: float
    ci_low: float
    ci_high: float
    max_outside: int
    mean_outside: float


@dataclass(frozen=True)
class RobustnessRow:
    n: int
    k: int
    r: int
    trials: int
    fraction_r_robust: float
    fraction_r_connected: float


def _family_graph(family: int, n: int, k: int, rng):
    if family == FAMILY_KOUT:
        g, _ = generate_kout(n, k, rng)
        return g
    return generate_er(n, matched_er_probability(n, k), rng)


def run_trial(n: int, k: int, gamma: int, trial_index: int, master_seed: int, *,
              family: int = FAMILY_KOUT, deletion: str = "subset",
              alpha: float | None = None, coupled: bool = False) -> TrialRecord:
    """Sample one graph, delete nodes, and measure its components."""
    seed = derive_trial_seed(master_seed, 0 if coupled else k, gamma, trial_index, family)
    graph_rng, delete_rng = split_streams(seed, 2)
    g = _family_graph(family, n, k, graph_rng)
    if deletion == "bernoulli":
        h, rec = delete_bernoulli(g, alpha, delete_rng)
    else:
        h, rec = delete_random_nodes(g, gamma, delete_rng)
    labels = connected_components(h)
    giant = labels.largest_size
    outside = h.n - giant
    # record the realised deletion count (differs from gamma only for bernoulli)
    return TrialRecord(n, k, rec.gamma if deletion == "bernoulli" else gamma, trial_index,
                       seed, outside == 0, giant, outside)


def aggregate(records: Sequence[TrialRecord], n: int, k: int, gamma: int) -> AggregateRow:
    """Fold trial records into one row; a 95% normal-approximation interval is attached."""
    t = len(records)
    if t == 0:
        raise ParameterError("no trials to aggregate")
    connected = sum(1 for rec in records if rec.connected)
    outs = [rec.outside for rec in records]
    p = connected / t
    half = _Z95 * math.sqrt(p * (1.0 - p) / t)
    return AggregateRow(n, k, gamma, t, p, max(0.0, p - half), min(1.0, p + half),
                        max(outs), math.fsum(outs) / t)


def _run_trials(jobs: list[tuple], fn: Callable, threads: int) -> list:
    if threads <= 1:
        return [fn(*job) for job in jobs]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        # map preserves input order, so output is independent of scheduling
        return list(pool.map(lambda job: fn(*job), jobs))


def _sweep_family(config: ExperimentConfig, family: int) -> tuple[list[AggregateRow], list[TrialRecord]]:
    gamma = config.resolved_gamma
    n = config.n
    rows: list[AggregateRow] = []
    records: list[TrialRecord] = []

    def one(k, i):
        return run_trial(n, k, gamma, i, config.master_seed, family=family,
                         deletion=config.deletion, alpha=config.alpha, coupled=config.coupled)

    for k in config.ks:
        recs = _run_trials([(k, i) for i in range(config.trials)], one, config.threads)
        rows.append(aggregate(recs, n, k, gamma))
        records.extend(recs)
    return rows, records


def run_connectivity_sweep(config: ExperimentConfig, keep_trials: bool = False):
    """Empirical probability of connectivity after deletion, one row per k.

    Returns the aggregate rows, or ``(rows, records)`` when ``keep_trials``.
    """
    config.validate()
    rows, records = _sweep_family(config, FAMILY_KOUT)
    return (rows, records) if keep_trials else rows


def run_giant_sweep(config: ExperimentConfig, keep_trials: bool = False):
    """Same trials as the connectivity sweep; the outside-giant columns are the focus."""
    return run_connectivity_sweep(config, keep_trials)


def run_er_comparison(config: ExperimentConfig, keep_trials: bool = False):
    """K-out vs G(n, 2k/n) with the same deletion count, paired by k.

    Returns ``[(kout_row, er_row), ...]``; with ``keep_trials`` also the two
    record lists.
    """
    config.validate()
    kout_rows, kout_recs = _sweep_family(config, FAMILY_KOUT)
    er_rows, er_recs = _sweep_family(config, FAMILY_ER)
    pairs = list(zip(kout_rows, er_rows))
    return (pairs, kout_recs, er_recs) if keep_trials else pairs


def _robust_trial(n: int, k: int, r: int, gamma: int, trial_index: int, master_seed: int,
                  coupled: bool) -> tuple[bool, bool]:
    seed = derive_trial_seed(master_seed, 0 if coupled else k, gamma, trial_index)
    graph_rng, delete_rng = split_streams(seed, 2)
    g, _ = generate_kout(n, k, graph_rng)
    if gamma:
        g, _ = delete_random_nodes(g, gamma, delete_rng)
    if g.n < 2:
        return False, False
    robust = is_r_robust_bruteforce(g, r).robust
    connected = vertex_connectivity_bruteforce(g) >= r
    return robust, connected


def run_robustness_sample(config: ExperimentConfig) -> list[RobustnessRow]:
    """Fraction of sampled K-out graphs that are r-robust and r-connected, per k."""
    config.validate()
    gamma = config.resolved_gamma
    rows = []
    for k in config.ks:
        jobs = [(config.n, k, config.r, gamma, i, config.master_seed, config.coupled)
                for i in range(config.trials)]
        out = _run_trials(jobs, _robust_trial, config.threads)
        t = len(out)
        rows.append(RobustnessRow(config.n - gamma, k, config.r, t,
                                  sum(rb for rb, _ in out) / t, sum(c for _, c in out) / t))
    return rows


def format_number(x) -> str:
    """Locale-free, exponent-free decimal text; booleans become 0/1."""
    if isinstance(x, (bool, np.bool_)):
        return "1" if x else "0"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return np.format_float_positional(float(x), trim="-")


def _csv_text(header: list[str], rows: Iterable[Iterable]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([format_number(v) for v in row])
    return buf.getvalue()


def aggregate_csv(rows: Iterable[AggregateRow]) -> str:
    return _csv_text(AGGREGATE_HEADER, (
        (r.n, r.k, r.gamma, r.trials, r.p_connected_hat, r.ci_low, r.ci_high,
         r.max_outside, r.mean_outside) for r in rows))


def trials_csv(records: Iterable[TrialRecord]) -> str:
    return _csv_text(TRIAL_HEADER, (
        (t.n, t.k, t.gamma, t.trial_index, t.trial_seed, t.connected, t.giant_size, t.outside)
        for t in records))


def robust_csv(rows: Iterable[RobustnessRow]) -> str:
    return _csv_text(ROBUST_HEADER, (
        (r.n, r.k, r.r, r.trials, r.fraction_r_robust, r.fraction_r_connected) for r in rows))


@dataclass
class ExperimentOutput:
    files: dict[str, str] = field(default_factory=dict)
    summary: list = field(default_factory=list)


def run_experiment(config: ExperimentConfig, keep_trials: bool = False) -> ExperimentOutput:
    """Run any sweep kind and render its CSV files (name -> text)."""
    config.validate()
    out = ExperimentOutput()
    if config.kind in ("connectivity", "giant"):
        rows, recs = run_connectivity_sweep(config, keep_trials=True)
        out.files["aggregate.csv"] = aggregate_csv(rows)
        if keep_trials:
            out.files["trials.csv"] = trials_csv(recs)
        out.summary = rows
    elif config.kind == "er_compare":
        pairs, kout_recs, er_recs = run_er_comparison(config, keep_trials=True)
        out.files["aggregate.csv"] = aggregate_csv(p[0] for p in pairs)
        out.files["aggregate_er.csv"] = aggregate_csv(p[1] for p in pairs)
        if keep_trials:
            out.files["trials.csv"] = trials_csv(kout_recs)
            out.files["trials_er.csv"] = trials_csv(er_recs)
        out.summary = pairs
    else:
        rows = run_robustness_sample(config)
        out.files["robust.csv"] = robust_csv(rows)
        out.summary = rows
    return out
