# Copyright 2019 The Forte Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
Hill climbing to r-optimal orderings, for plain (weight-free) scores.

An ordering is r-optimal when no single insertion and no rearrangement of
``r + 1`` consecutive variables improves its score. The climber first tries
all insertions and takes the first improving one; if there is none, it
slides a window of ``r + 1`` positions from left to right and takes the
first window whose best rearrangement improves the score. It stops when
neither step improves the score by more than ``epsilon``.
"""
import logging
import math
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple

from ordsearch.common.const import DEFAULT_EPSILON, DEFAULT_RESTARTS
from ordsearch.common.evaluation import Evaluator
from ordsearch.common.exception import OrderingRangeError, SolverConfigError
from ordsearch.common.resources import Resources
from ordsearch.common.types import VarId
from ordsearch.data.instance import SearchInstance
from ordsearch.data.multiscores import MultiScores
from ordsearch.data.ordering import Ordering
from ordsearch.data.scored_dag import ScoredDag, SearchResult
from ordsearch.solvers.base import BaseSolver
from ordsearch.solvers.order_dp import PlainScorer
from ordsearch.utils.parallel import ordered_map
from ordsearch.utils.random_utils import random_permutation

__all__ = [
    "HillclimbConfig",
    "HillclimbOutcome",
    "RestartStats",
    "RestartStatsEvaluator",
    "start_orderings",
    "best_window_permutation",
    "hillclimb",
    "is_r_optimal",
    "run_restarts",
    "run_restart_table",
    "HillclimbSolver",
]

logger = logging.getLogger(__name__)


class HillclimbConfig:
    r"""Settings of the climber and of the restart harness.

    Args:
        radius (int): Windows span ``radius + 1`` positions.
        epsilon (float): Smallest accepted improvement.
        max_iterations (int): Cap on accepted moves, 0 for no cap.
        restarts (int): Number of random start orderings.
        seed (int): Seed of the start orderings.

    Raises:
        SolverConfigError: If a value is out of range.
    """

    def __init__(self, radius: int, epsilon: float = DEFAULT_EPSILON,
                 max_iterations: int = 0, restarts: int = DEFAULT_RESTARTS,
                 seed: int = 0):
        if radius < 0:
            raise SolverConfigError(
                f"The radius must be non-negative, got {radius}.")
        if not epsilon >= 0:
            raise SolverConfigError(
                f"epsilon must be non-negative, got {epsilon}.")
        if max_iterations < 0:
            raise SolverConfigError(
                f"max_iterations must be non-negative, got {max_iterations}.")
        if restarts < 1:
            raise SolverConfigError(
                f"At least one restart is needed, got {restarts}.")
        self.radius = radius
        self.epsilon = epsilon
        self.max_iterations = max_iterations
        self.restarts = restarts
        self.seed = seed

    def with_radius(self, radius: int) -> "HillclimbConfig":
        return HillclimbConfig(radius, self.epsilon, self.max_iterations,
                               self.restarts, self.seed)


class HillclimbOutcome(NamedTuple):
    ordering: Ordering
    dag: ScoredDag
    iterations: int
    # Score before the first move and after every accepted move.
    trace: Tuple[float, ...]


class RestartStats:
    r"""Final scores of the restarts of one instance at one radius."""

    def __init__(self, instance: str, radius: int):
        self.instance = instance
        self.radius = radius
        self.starts: List[Ordering] = []
        self.orderings: List[Ordering] = []
        self.finals: List[float] = []
        self.iterations: List[int] = []

    @property
    def average(self) -> float:
        # Clamped so that rounding never puts the average above the maximum.
        return min(math.fsum(self.finals) / len(self.finals), self.maximum)

    @property
    def maximum(self) -> float:
        return max(self.finals)

    @property
    def best_index(self) -> int:
        return self.finals.index(self.maximum)

    def __repr__(self) -> str:
        return (f"RestartStats({self.instance!r}, r={self.radius}, "
                f"average={self.average}, maximum={self.maximum})")


class RestartStatsEvaluator(Evaluator):
    r"""Collects the outcomes of the restarts into :class:`RestartStats`.
    """

    def __init__(self, instance: str, radius: int):
        super().__init__()
        self._stats = RestartStats(instance, radius)

    def consume_next(self, result: Tuple[Ordering, HillclimbOutcome]):
        start, outcome = result
        self._stats.starts.append(start)
        self._stats.orderings.append(outcome.ordering)
        self._stats.finals.append(outcome.dag.score)
        self._stats.iterations.append(outcome.iterations)

    def get_result(self) -> RestartStats:
        return self._stats


def start_orderings(n: int, restarts: int, seed: int) -> List[Ordering]:
    r"""Uniformly random start orderings; restart ``i`` is drawn from
    ``(seed, i)`` only, so every radius gets the same starts.
    """
    return [Ordering(random_permutation(n, seed, i)) for i in range(restarts)]


class _Climber:
    r"""The current ordering with the best score of every variable."""

    def __init__(self, scorer: PlainScorer, ordering: Ordering):
        self.scorer = scorer
        self.reset(list(ordering))

    def reset(self, sequence: List[VarId]):
        self.sequence = sequence
        n = len(sequence)
        self.prefix = [0] * (n + 1)
        for i, v in enumerate(sequence):
            self.prefix[i + 1] = self.prefix[i] | 1 << v
        self.current = [0.0] * n
        for i, v in enumerate(sequence):
            self.current[v] = self.scorer.best(v, self.prefix[i])[0]
        self.total = math.fsum(self.current)

    def score_of(self, sequence: Sequence[VarId]) -> float:
        preceding = 0
        values = []
        for v in sequence:
            values.append(self.scorer.best(v, preceding)[0])
            preceding |= 1 << v
        return math.fsum(values)

    def insertion_gains(self, i: int) -> List[Optional[float]]:
        r"""The score change of moving the variable at ``i`` to every
        position, ``None`` at ``i`` itself.
        """
        best, seq, prefix, current = (self.scorer.best, self.sequence,
                                       self.prefix, self.current)
        n = len(seq)
        v = seq[i]
        v_bit = 1 << v
        gains: List[Optional[float]] = [None] * n

        jumped = 0.0
        for j in range(i + 1, n):
            u = seq[j]
            jumped += best(u, prefix[j] & ~v_bit)[0] - current[u]
            gains[j] = (jumped + best(v, prefix[j + 1] & ~v_bit)[0]
                        - current[v])

        jumped = 0.0
        for j in range(i - 1, -1, -1):
            w = seq[j]
            jumped += best(w, prefix[j] | v_bit)[0] - current[w]
            gains[j] = jumped + best(v, prefix[j])[0] - current[v]
        return gains

    def try_insertion(self, epsilon: float) -> bool:
        n = len(self.sequence)
        for i in range(n):
            for j, gain in enumerate(self.insertion_gains(i)):
                if gain is None or not gain > epsilon:
                    continue
                moved = list(self.sequence)
                moved.insert(j, moved.pop(i))
                if self.score_of(moved) > self.total + epsilon:
                    logger.debug("Insertion %d -> %d gains %r", i, j, gain)
                    self.reset(moved)
                    return True
        return False

    def best_window(self, start: int, length: int
                    ) -> Tuple[List[VarId], float]:
        r"""The best rearrangement of ``length`` variables from ``start``,
        and its window score.
        """
        window = self.sequence[start:start + length]
        base = self.prefix[start]
        inside = 0
        for v in window:
            inside |= 1 << v
        local = {v: x for x, v in enumerate(window)}

        # Per variable, the weight-zero triples usable in the window, as
        # (score, required local parents), best first.
        usable: List[List[Tuple[float, int]]] = []
        for v in window:
            options = []
            for score, _, parents in self.scorer.ranked(v):
                if parents & ~(base | inside):
                    continue
                required = 0
                for u in window:
                    if parents >> u & 1:
                        required |= 1 << local[u]
                options.append((score, required))
            usable.append(options)

        # Later window variables are tried as the last placed one first, so
        # equal arrangements keep the incumbent order.
        size = 1 << length
        table = [0.0] + [-math.inf] * (size - 1)
        last = [-1] * size
        for placed in range(1, size):
            for x in range(length - 1, -1, -1):
                if not placed >> x & 1:
                    continue
                before = placed & ~(1 << x)
                for score, required in usable[x]:
                    if required & ~before == 0:
                        value = table[before] + score
                        if value > table[placed]:
                            table[placed], last[placed] = value, x
                        break

        order: List[VarId] = []
        placed = size - 1
        while placed:
            x = last[placed]
            order.append(window[x])
            placed &= ~(1 << x)
        order.reverse()
        return order, table[size - 1]

    def window_score(self, start: int, order: Sequence[VarId]) -> float:
        preceding = self.prefix[start]
        values = []
        for v in order:
            values.append(self.scorer.best(v, preceding)[0])
            preceding |= 1 << v
        return math.fsum(values)

    def try_window(self, radius: int, epsilon: float) -> bool:
        n = len(self.sequence)
        for start in range(n - radius):
            order, _ = self.best_window(start, radius + 1)
            current = self.sequence[start:start + radius + 1]
            if order == current:
                continue
            gain = (self.window_score(start, order)
                    - self.window_score(start, current))
            if not gain > epsilon:
                continue
            moved = (self.sequence[:start] + order
                     + self.sequence[start + radius + 1:])
            if self.score_of(moved) > self.total + epsilon:
                logger.debug("Window at %d gains %r", start, gain)
                self.reset(moved)
                return True
        return False


def best_window_permutation(scores: MultiScores, ordering: Ordering, i: int,
                            r: int, k: int = 0) -> Ordering:
    r"""The best rearrangement of the window of positions ``i..i+r``
    (1-based) for the plain ordering score.

    Variables after the window see the same predecessors whatever the
    window order, so only the window variables matter. ``D[S]`` is the best
    score of placing the subset ``S`` of the window variables first, where
    the variable placed last in ``S`` may use parents among the variables
    before the window and the rest of ``S``. The ordering is returned
    unchanged unless the rearrangement scores strictly higher.

    Raises:
        OrderingRangeError: Unless ``1 <= i <= n - r``.
        SolverConfigError: If ``k`` is not 0.
    """
    if k != 0:
        raise SolverConfigError("Window rearrangements use plain scores, k=0.")
    n = len(ordering)
    if r < 0 or not 1 <= i <= n - r:
        raise OrderingRangeError(
            f"A window of radius {r} cannot start at {i} in an ordering of "
            f"length {n}.")
    climber = _Climber(PlainScorer(scores), ordering)
    start = i - 1
    order, _ = climber.best_window(start, r + 1)
    current = list(ordering[start:start + r + 1])
    if (order == current or not climber.window_score(start, order)
            > climber.window_score(start, current)):
        return ordering
    return ordering.replace_window(start, order)


def hillclimb(scores: MultiScores, ordering: Ordering, cfg: HillclimbConfig
              ) -> HillclimbOutcome:
    r"""Climbs from ``ordering`` to an r-optimal ordering.

    Every accepted move raises the score by more than ``cfg.epsilon``, so
    the trace is strictly increasing and the climb terminates.

    Returns:
        The final ordering, its best DAG, the number of accepted moves and
        the score trace.
    """
    scorer = PlainScorer(scores)
    climber = _Climber(scorer, ordering)
    trace = [climber.total]
    iterations = 0
    while not cfg.max_iterations or iterations < cfg.max_iterations:
        if not (climber.try_insertion(cfg.epsilon)
                or climber.try_window(cfg.radius, cfg.epsilon)):
            break
        iterations += 1
        trace.append(climber.total)

    final = Ordering(climber.sequence)
    return HillclimbOutcome(final, scorer.dag(final), iterations,
                            tuple(trace))


def is_r_optimal(scores: MultiScores, ordering: Ordering, r: int,
                 epsilon: float = DEFAULT_EPSILON) -> bool:
    r"""Checks r-optimality directly: rescores all ``n (n - 1)``
    insertions and the best rearrangement of every window, and looks for
    an improvement above ``epsilon``.
    """
    scorer = PlainScorer(scores)
    total = scorer.dag(ordering).score
    n = len(ordering)
    for i in range(n):
        for j in range(n):
            if i != j and (scorer.dag(ordering.insert(i, j)).score
                           > total + epsilon):
                return False
    for i in range(1, n - r + 1):
        rearranged = best_window_permutation(scores, ordering, i, r)
        if scorer.dag(rearranged).score > total + epsilon:
            return False
    return True


def _climb(task: Tuple[MultiScores, Ordering, HillclimbConfig]
           ) -> HillclimbOutcome:
    scores, start, cfg = task
    return hillclimb(scores, start, cfg)


def run_restarts(scores: MultiScores, cfg: HillclimbConfig,
                 instance: str = "", starts: Optional[List[Ordering]] = None,
                 workers: int = 1) -> RestartStats:
    r"""Runs :func:`hillclimb` from ``cfg.restarts`` random start orderings.

    Args:
        scores: The multiscores.
        cfg: The climber settings.
        instance (str): The instance name reported in the statistics.
        starts (optional): Explicit start orderings, instead of
            :func:`start_orderings`.
        workers (int): Number of worker processes for the restarts.

    Returns:
        The restart statistics.
    """
    if starts is None:
        starts = start_orderings(scores.n, cfg.restarts, cfg.seed)
    for idx, start in enumerate(starts):
        logger.info("Restart %d of %s at r=%d starts from %s", idx, instance,
                    cfg.radius, start.names(scores))

    outcomes = ordered_map(_climb, [(scores, start, cfg) for start in starts],
                           workers)
    evaluator = RestartStatsEvaluator(instance, cfg.radius)
    for start, outcome in zip(starts, outcomes):
        evaluator.consume_next((start, outcome))
    stats = evaluator.get_result()
    logger.info("%s at r=%d: average %r, maximum %r", instance, cfg.radius,
                stats.average, stats.maximum)
    return stats


def run_restart_table(scores: MultiScores, radii: Sequence[int],
                      cfg: HillclimbConfig, instance: str = "",
                      workers: int = 1) -> List[RestartStats]:
    r"""Runs the restarts at every radius of ``radii`` from the same start
    orderings.
    """
    starts = start_orderings(scores.n, cfg.restarts, cfg.seed)
    return [run_restarts(scores, cfg.with_radius(r), instance, starts,
                         workers) for r in radii]


class HillclimbSolver(BaseSolver):
    r"""Runs the restart harness on each instance and returns the best
    final ordering. The statistics of every instance and radius are kept in
    :attr:`restart_stats` and registered as the ``restart_stats``
    resource when the pipeline finishes.
    """

    def __init__(self):
        super().__init__()
        self.restart_stats: List[RestartStats] = []

    @staticmethod
    def default_configs() -> Dict[str, Any]:
        r"""Besides the base configs:

        - ``radius``: the window radius; ``radii`` overrides it with a
          list of radii sharing the same starts.
        - ``epsilon``, ``max_iterations``, ``restarts``: see
          :class:`HillclimbConfig`.
        - ``certify``: log whether every final ordering is r-optimal.
        """
        configs = BaseSolver.default_configs()
        configs.update({
            'radius': 1,
            'radii': None,
            'epsilon': DEFAULT_EPSILON,
            'max_iterations': 0,
            'restarts': DEFAULT_RESTARTS,
            'certify': False,
        })
        return configs

    def _check_configs(self):
        super()._check_configs()
        if self.configs.k != 0:
            raise SolverConfigError("Hill climbing uses plain scores, k=0.")
        self.hillclimb_config = HillclimbConfig(
            self.configs.radius, self.configs.epsilon,
            self.configs.max_iterations, self.configs.restarts,
            self.configs.seed)

    def _solve(self, instance: SearchInstance) -> SearchResult:
        radii = self.configs.radii or [self.configs.radius]
        tables = run_restart_table(instance.scores, radii,
                                   self.hillclimb_config, instance.name,
                                   self.configs.workers)
        self.restart_stats.extend(tables)

        best = max(tables, key=lambda stats: stats.maximum)
        ordering = best.orderings[best.best_index]
        if self.configs.certify:
            for stats in tables:
                for final in stats.orderings:
                    logger.info("%s r=%d final %s r-optimal: %s",
                                instance.name, stats.radius,
                                final.names(instance.scores),
                                is_r_optimal(instance.scores, final,
                                             stats.radius,
                                             self.configs.epsilon))

        dag = PlainScorer(instance.scores).dag(ordering)
        return SearchResult(
            dag, seed=self.configs.seed, repetitions=self.configs.restarts,
            iterations=sum(sum(stats.iterations) for stats in tables),
            diagnostics={
                "radius": best.radius,
                "restart_scores": list(best.finals),
                "average": best.average,
                "maximum": best.maximum,
            })

    def finish(self, resource: Resources):
        resource.update(restart_stats=list(self.restart_stats))
