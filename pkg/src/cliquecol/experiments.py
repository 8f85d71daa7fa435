"""Per-component clique chromatic numbers and Monte Carlo sweeps over G(n, r)."""
from __future__ import annotations

import csv
import io
import logging
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from statistics import NormalDist
from typing import Iterable, Iterator, Sequence

import numpy as np
from scipy.spatial import cKDTree

from .budget import DEFAULT_BUDGET, Budget
from .census import find_triangle_free_c5
from .cliques import local_bitmasks
from .colourers.strip import strip_colouring
from .exact import chi_c_of_bitmask_graph
from .exceptions import BudgetExceeded
from .graph import Colouring, Graph, PointSet, candidate_pair_count, geometric_pairs
from .greedy import greedy_sqrt_colouring
from .rgg import RggConfig, component_labels, sample_points, split_components, trial_rng

log = logging.getLogger(__name__)

Z95 = NormalDist().inv_cdf(0.975)
TAG_ORDER = ("exact", "lower_bound", "upper_bound", "budget_exceeded")


@dataclass(frozen=True)
class ChiResult:
    """Clique chromatic number, or certified bounds on it.

    ``method`` is ``"exact"`` when every component was solved, and then
    ``lower == upper``. Otherwise it is ``"bounds"``. ``witness`` is a valid
    clique colouring with ``upper`` colours.
    """

    lower: int
    upper: int
    method: str
    witness: Colouring | None = None

    @property
    def exact(self) -> bool:
        return self.method == "exact"

    @property
    def k(self) -> int | None:
        return self.lower if self.exact else None


def _small_component_colouring(g: Graph) -> list[int]:
    # every connected graph on 2 or 3 vertices has chi_c = 2: colour a
    # vertex of largest degree apart from the rest
    hub = max(range(g.n), key=g.degree)
    return [0 if v == hub else 1 for v in range(g.n)]


def _bounded_component(
    sub: Graph, points: np.ndarray | None, radius: float, budget: Budget
) -> tuple[int, list[int]]:
    lower = 3 if find_triangle_free_c5(sub) is not None else 2
    colours = None
    if points is not None and points.shape[1] == 2:
        try:
            colours = strip_colouring(PointSet(points, radius), budget=budget).compact().colours
        except BudgetExceeded:
            log.info("strip colouring over budget on a %d-vertex component", sub.n)
    if colours is None:
        colours = greedy_sqrt_colouring(sub).colours
    return lower, list(colours)


def _solve_components(
    n: int,
    components: Iterable[tuple[Sequence[int], Graph]],
    points: np.ndarray | None,
    radius: float,
    budget: Budget,
) -> ChiResult:
    colours = [0] * n
    lower = upper = 1
    bounded = False
    meter = budget.meter()
    for members, sub in components:
        if sub.n == 1:
            continue
        if sub.n <= 3:
            k, local = 2, _small_component_colouring(sub)
            lo = hi = k
        else:
            solved = None
            if sub.n <= budget.max_component_order:
                try:
                    solved = chi_c_of_bitmask_graph(local_bitmasks(sub, range(sub.n)), meter)
                except BudgetExceeded:
                    log.info("component of order %d over the exact budget", sub.n)
            if solved is not None:
                lo = hi = solved[0]
                local = solved[1]
            else:
                bounded = True
                sub_pts = None if points is None else points[np.asarray(members)]
                lo, local = _bounded_component(sub, sub_pts, radius, budget)
                hi = len(set(local))
        lower, upper = max(lower, lo), max(upper, hi)
        for v, c in zip(members, local):
            colours[int(v)] = int(c)
    return ChiResult(lower, upper, "bounds" if bounded else "exact", Colouring(tuple(colours)))


def chi_c_by_components(
    g: Graph, budget: Budget = DEFAULT_BUDGET, ps: PointSet | None = None
) -> ChiResult:
    """``chi_c(g)`` as the maximum over components, or bounds when that is too costly.

    Components of order above ``budget.max_component_order``, or whose exact
    search exceeds the budget, are bounded instead. The lower bound is 2, or
    3 when the component holds a triangle-free 5-cycle. The upper bound comes
    from the strip colouring when the planar points ``ps`` are given, and
    from the greedy colouring otherwise.
    """
    pts = None if ps is None else ps.points
    radius = 1.0 if ps is None else ps.radius
    comps = ((c, g.induced(c)) for c in g.components())
    return _solve_components(g.n, comps, pts, radius, budget)


# -- sweeps ------------------------------------------------------------------


@dataclass(frozen=True)
class SweepConfig:
    n: int
    r: float
    model: str = "uniform"
    trials: int = 100
    seed: int = 0
    budget: Budget = DEFAULT_BUDGET
    regime: str = ""

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        self.rgg()  # validates n, r and model

    def rgg(self) -> RggConfig:
        return RggConfig(self.n, self.r, self.model, self.seed)


@dataclass(frozen=True)
class TrialOutcome:
    trial: int
    n_points: int
    n_edges: int | None  # None when the graph was too dense to materialise
    lower: int
    upper: int | None  # None when no colouring fit the budget
    method: str  # exact, bounds or budget_exceeded
    c5_components: int | None
    component_total: int | None = None


def _count_c5_components(sizes: np.ndarray, labels: np.ndarray, pairs: np.ndarray) -> int:
    # a connected graph on 5 vertices with 5 edges, all of degree 2, is C5
    five = sizes == 5
    if not five.any() or not len(pairs):
        return 0
    lab = labels[pairs[:, 0]]
    edges = np.bincount(lab[five[lab]], minlength=len(sizes))
    deg = np.bincount(pairs.ravel(), minlength=len(labels))
    maxdeg = np.zeros(len(sizes), dtype=np.int64)
    np.maximum.at(maxdeg, labels, deg)
    return int((five & (edges == 5) & (maxdeg == 2)).sum())


def run_trial(cfg: SweepConfig, trial: int, solve: bool = True) -> TrialOutcome:
    """One seeded sample of ``G(n, r)`` and its clique chromatic number (or bounds)."""
    pts = sample_points(cfg.rgg(), trial_rng(cfg.seed, trial))
    n = len(pts)
    budget = cfg.budget
    if candidate_pair_count(pts, cfg.r) > budget.max_edges:
        # too dense to build the graph: strip upper bound, edge lower bound
        lower = 1
        if n > 1:
            d, _ = cKDTree(pts).query(pts, k=2)
            lower = 2 if (d[:, 1] <= cfg.r).any() else 1
        if not solve:
            return TrialOutcome(trial, n, None, lower, None, "bounds", None)
        try:
            upper = strip_colouring(PointSet(pts, cfg.r), budget=budget).palette_size
        except BudgetExceeded:
            return TrialOutcome(trial, n, None, lower, None, "budget_exceeded", None)
        return TrialOutcome(trial, n, None, lower, upper, "bounds", None)

    pairs = geometric_pairs(pts, cfg.r)
    labels = component_labels(n, pairs)
    sizes = np.bincount(labels, minlength=1) if n else np.zeros(0, dtype=np.int64)
    c5 = _count_c5_components(sizes, labels, pairs) if n else 0
    total = int(sizes.sum())
    if not solve:
        return TrialOutcome(trial, n, len(pairs), 0, None, "skipped", c5, total)
    if not len(pairs):
        return TrialOutcome(trial, n, 0, 1, 1, "exact", c5, total)
    # components of order 2 and 3 all have chi_c = 2 and are never split out
    comps: Iterator = split_components(n, pairs, min_size=4)
    res = _solve_components(n, comps, pts, cfg.r, budget)
    return TrialOutcome(
        trial, n, len(pairs), max(2, res.lower), max(2, res.upper), res.method, c5, total
    )


def wilson_interval(successes: int, trials: int, z: float = Z95) -> tuple[float, float]:
    if trials <= 0:
        raise ValueError("trials must be positive")
    p = successes / trials
    denom = 1 + z * z / trials
    centre = (p + z * z / (2 * trials)) / denom
    half = z * math.sqrt(p * (1 - p) / trials + z * z / (4 * trials * trials)) / denom
    return max(0.0, centre - half), min(1.0, centre + half)


@dataclass(frozen=True)
class EstimateRow:
    n: int
    r: float
    model: str
    trials: int
    seed: int
    k: int
    p_hat: float
    ci_lo: float
    ci_hi: float
    method_tag: str
    regime: str = ""


@dataclass(frozen=True)
class ConfigResult:
    config: SweepConfig
    outcomes: tuple[TrialOutcome, ...]

    def rows(self) -> list[EstimateRow]:
        """Empirical distribution of chi_c per tag.

        ``exact`` trials count at their value. Trials with bounds contribute
        to ``lower_bound`` and ``upper_bound`` rows. Trials where not even a
        bound could be produced appear as ``budget_exceeded`` rows at their
        lower bound. Every ``p_hat`` is over all trials of the config.
        """
        cfg = self.config
        tally: Counter[tuple[str, int]] = Counter()
        for o in self.outcomes:
            if o.method == "exact":
                tally["exact", o.lower] += 1
            elif o.method == "bounds":
                tally["lower_bound", o.lower] += 1
                if o.upper is not None:
                    tally["upper_bound", o.upper] += 1
            else:
                tally["budget_exceeded", o.lower] += 1
        t = len(self.outcomes)
        out = []
        for tag, k in sorted(tally, key=lambda key: (TAG_ORDER.index(key[0]), key[1])):
            lo, hi = wilson_interval(tally[tag, k], t)
            out.append(EstimateRow(cfg.n, cfg.r, cfg.model, t, cfg.seed, k,
                                   tally[tag, k] / t, lo, hi, tag, cfg.regime))
        return out

    def probability(self, k: int, tag: str = "exact") -> float:
        return sum(r.p_hat for r in self.rows() if r.k == k and r.method_tag == tag)


CSV_COLUMNS = ("n", "r", "model", "trials", "seed", "k", "p_hat", "ci_lo", "ci_hi", "method_tag")


@dataclass(frozen=True)
class EstimateTable:
    results: tuple[ConfigResult, ...] = field(default_factory=tuple)

    @property
    def rows(self) -> list[EstimateRow]:
        return [row for res in self.results for row in res.rows()]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for row in self.rows:
            w.writerow([row.n, f"{row.r:.6f}", row.model, row.trials, row.seed, row.k,
                        f"{row.p_hat:.6f}", f"{row.ci_lo:.6f}", f"{row.ci_hi:.6f}", row.method_tag])
        return buf.getvalue()


def _trial_task(args) -> TrialOutcome:
    cfg, trial, solve = args
    return run_trial(cfg, trial, solve)


def _run_trials(cfg: SweepConfig, trials: int, jobs: int, solve: bool = True) -> list[TrialOutcome]:
    tasks = [(cfg, t, solve) for t in range(trials)]
    if jobs <= 1:
        return [_trial_task(a) for a in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_trial_task, tasks, chunksize=max(1, trials // (4 * jobs))))


def run_sweep(
    configs: Iterable[SweepConfig], trials: int | None = None, jobs: int = 1
) -> EstimateTable:
    """Run every config for its number of trials (or ``trials`` if given).

    Trial ``t`` of a config draws from the stream seeded by ``(seed, t)``,
    so the table does not depend on ``jobs``.
    """
    if trials is not None and trials < 1:
        raise ValueError("trials must be at least 1")
    results = []
    for cfg in configs:
        outcomes = _run_trials(cfg, trials or cfg.trials, jobs)
        results.append(ConfigResult(cfg, tuple(outcomes)))
    return EstimateTable(tuple(results))


@dataclass(frozen=True)
class C5Estimate:
    n: int
    r: float
    trials: int
    mean: float  # mean number of C5 components per trial
    se: float
    p_any: float  # fraction of trials with at least one C5 component
    p_any_ci: tuple[float, float]

    def __float__(self) -> float:
        return self.mean


def estimate_mu_c5(
    n: int, trials: int, seed: int = 0, model: str = "uniform", jobs: int = 1
) -> C5Estimate:
    """Mean number of C5 components of ``G(n, r)`` with ``n r^8 = 1``."""
    r = n ** (-1 / 8)
    cfg = SweepConfig(n, r, model, trials, seed)
    counts = np.array([o.c5_components for o in _run_trials(cfg, trials, jobs, solve=False)])
    hits = int((counts > 0).sum())
    se = float(counts.std(ddof=1) / math.sqrt(trials)) if trials > 1 else math.nan
    return C5Estimate(n, r, trials, float(counts.mean()), se, hits / trials,
                      wilson_interval(hits, trials))
