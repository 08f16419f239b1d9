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
Local search in the inversion-window neighborhood: the ordering is cut into
consecutive windows, and each window is rearranged with at most ``r``
inversions of its own. A suffix dynamic program picks the windows and splits
the weight budget between them; each window is solved by the color-coding
DP of :mod:`ordsearch.solvers.inversions` on the window-restricted scores.
"""
import logging
import math
from typing import Any, Dict, List, Optional, Tuple, Union

from ordsearch.common.exception import OrderingRangeError, SolverConfigError
from ordsearch.common.types import VarId
from ordsearch.data.instance import SearchInstance
from ordsearch.data.multiscores import MultiScores, ScoreTriple
from ordsearch.data.ordering import Ordering
from ordsearch.data.scored_dag import ScoredDag, SearchResult
from ordsearch.solvers.base import BaseSolver
from ordsearch.solvers.inversions import (
    Coloring, ColorRestrictedDP, default_repetitions, num_colors)
from ordsearch.utils.parallel import ordered_map
from ordsearch.utils.random_utils import make_rng

__all__ = [
    "WindowRestrictedScores",
    "restrict_window",
    "guaranteed_oracle_repetitions",
    "ls_invwin",
    "InvWinSolver",
]

logger = logging.getLogger(__name__)

# (score, window witness, triple index per window variable)
WindowSolution = Tuple[float, Tuple[VarId, ...], Dict[VarId, int]]


class WindowRestrictedScores:
    r"""Multiscores of the variables of one window of an ordering. Every
    triple whose parents lie in the window or before it is kept, with its
    parents intersected with the window; the variables before the window
    precede it in any rearrangement, so they are always available.

    Args:
        window: The window variables in ordering order.
        entries: For each window variable, the ``(original triple index,
            restricted triple)`` pairs.
    """

    def __init__(self, window: Tuple[VarId, ...],
                 entries: Dict[VarId, List[Tuple[int, ScoreTriple]]]):
        self.window = window
        self._entries = entries

    @property
    def variables(self) -> Tuple[VarId, ...]:
        return self.window

    def entries(self, v: VarId) -> List[Tuple[int, ScoreTriple]]:
        return self._entries[v]

    def triples(self, v: VarId) -> List[ScoreTriple]:
        return [t for _, t in self._entries[v]]

    def source_index(self, v: VarId, position: int) -> int:
        r"""The original triple index of the ``position``-th restricted
        triple of ``v``.
        """
        return self._entries[v][position][0]


def restrict_window(scores: MultiScores, ordering: Ordering, a: int, b: int
                    ) -> WindowRestrictedScores:
    r"""Restricts ``scores`` to the window of positions ``a..b`` (1-based,
    inclusive) of ``ordering``. Triples with a parent after the window are
    dropped, the others keep score and weight with parents intersected
    with the window; duplicates are kept.

    Raises:
        OrderingRangeError: Unless ``1 <= a <= b <= n``.
    """
    n = len(ordering)
    if not 1 <= a <= b <= n:
        raise OrderingRangeError(
            f"[{a}, {b}] is not a window of an ordering of length {n}.")
    upto = ordering.prefix_mask(b)
    inside = upto & ~ordering.prefix_mask(a - 1)
    window = ordering[a - 1:b]
    entries = {
        v: [(idx, t._replace(parents=t.parents & inside))
            for idx, t in enumerate(scores.triples(v))
            if t.parents & ~upto == 0]
        for v in window}
    return WindowRestrictedScores(window, entries)


def guaranteed_oracle_repetitions(n: int, k: int) -> int:
    r"""``(n + 1)(k + 1) n k`` repetitions per window, which makes every
    window evaluation fail with probability at most ``e^-x`` for that many
    evaluations.
    """
    return max(1, (n + 1) * (k + 1) * n * k)


def _solve_window(task: Tuple[MultiScores, Ordering, int, int, int, int,
                              int, int, bool]) -> List[WindowSolution]:
    r"""Best solutions of window ``j..p`` (0-based) for every budget
    ``0..k``, over the window's colorings.
    """
    scores, ordering, j, p, k, r, seed, repetitions, exact = task
    restricted = restrict_window(scores, ordering, j + 1, p + 1)
    window = restricted.window
    if exact:
        colorings = [Coloring.all_distinct(window)]
    else:
        colors = num_colors(r)
        colorings = [Coloring.uniform(window, colors, make_rng(seed, j, p, i))
                     for i in range(repetitions)]

    best: List[Optional[WindowSolution]] = [None] * (k + 1)
    for coloring in colorings:
        dp = ColorRestrictedDP(
            window, {v: restricted.entries(v) for v in window}, coloring, r)
        for budget in range(k + 1):
            witness, choices = dp.traceback(budget)
            value = math.fsum(scores.triple(v, idx).score
                              for v, idx in choices.items())
            incumbent = best[budget]
            if incumbent is None or value > incumbent[0]:
                best[budget] = (value, tuple(witness), choices)
    return [solution for solution in best if solution is not None]


def ls_invwin(scores: MultiScores, ordering: Ordering, k: int, r: int,
              seed: int = 0, oracle_reps: Union[int, str, None] = None,
              exact: bool = False, workers: int = 1) -> SearchResult:
    r"""Inversion-window local search.

    ``T[j, k']`` is the best score of the variables at positions ``j..n-1``
    with budget ``k'``: the first window ends at some ``p`` and gets some
    budget ``k''``, and ``W(j, p, k'')`` is the best window solution found
    by ``oracle_reps`` colorings. Ties keep the shortest first window and
    then the smallest window budget.

    Args:
        scores: The multiscores.
        ordering: The start ordering.
        k (int): The weight budget.
        r (int): The inversion budget of every window.
        seed (int): Window ``(j, p)`` draws coloring ``i`` from
            ``make_rng(seed, j, p, i)``.
        oracle_reps (optional): Colorings per window: an int, ``"guaranteed"``
            for :func:`guaranteed_oracle_repetitions`, or ``None`` for
            :func:`~ordsearch.solvers.inversions.default_repetitions`.
        exact (bool): Solve every window with the all-distinct coloring.
        workers (int): Number of worker processes for the windows.

    Returns:
        The solution of ``T[0, k]``; its witness keeps the content of every
        chosen window.
    """
    if r < 0 or k < 0:
        raise SolverConfigError(
            f"The radius and budget must be non-negative, got r={r}, k={k}.")
    n = scores.n
    k = scores.clamp_budget(k)
    if oracle_reps is None:
        repetitions = default_repetitions(r)
    elif oracle_reps == "guaranteed":
        repetitions = guaranteed_oracle_repetitions(n, k)
    else:
        repetitions = int(oracle_reps)
    if repetitions < 1:
        raise SolverConfigError(
            f"At least one oracle repetition is needed, got {repetitions}.")

    windows = [(j, p) for j in range(n) for p in range(j, n)]
    solved = ordered_map(
        _solve_window,
        [(scores, ordering, j, p, k, r, seed, repetitions, exact)
         for j, p in windows], workers)
    table_w = dict(zip(windows, solved))
    logger.debug("Solved %d windows", len(windows))

    table = [[0.0] * (k + 1) for _ in range(n + 1)]
    arg: List[List[Tuple[int, int]]] = [[(-1, -1)] * (k + 1)
                                        for _ in range(n)]
    for j in range(n - 1, -1, -1):
        for budget in range(k + 1):
            best = -math.inf
            for p in range(j, n):
                solutions = table_w[(j, p)]
                for spent in range(budget + 1):
                    value = solutions[spent][0] + table[p + 1][budget - spent]
                    if value > best:
                        best = value
                        arg[j][budget] = (p, spent)
            table[j][budget] = best

    witness: List[VarId] = []
    choices: Dict[VarId, int] = {}
    cuts = []
    j, budget = 0, k
    while j < n:
        p, spent = arg[j][budget]
        _, window_witness, window_choices = table_w[(j, p)][spent]
        witness.extend(window_witness)
        choices.update(window_choices)
        cuts.append([j, p])
        j, budget = p + 1, budget - spent

    dag = ScoredDag.from_choices(scores, [choices[v] for v in range(n)],
                                 Ordering(witness))
    return SearchResult(dag, seed=seed,
                        repetitions=1 if exact else repetitions,
                        diagnostics={"windows": cuts})


class InvWinSolver(BaseSolver):
    r"""Searches the inversion-window neighborhood of the start ordering.
    """

    @staticmethod
    def default_configs() -> Dict[str, Any]:
        configs = BaseSolver.default_configs()
        configs.update({
            'radius': 1,
            'oracle_reps': None,
            'exact': False,
        })
        return configs

    def _check_configs(self):
        super()._check_configs()
        if self.configs.radius < 0:
            raise SolverConfigError(
                f"The radius must be non-negative, got "
                f"{self.configs.radius}.")
        reps = self.configs.oracle_reps
        if reps is not None and reps != "guaranteed" and int(reps) < 1:
            raise SolverConfigError(
                f"oracle_reps must be a positive int or 'guaranteed', got {reps}.")

    def _solve(self, instance: SearchInstance) -> SearchResult:
        return ls_invwin(instance.scores, instance.ordering, self.configs.k,
                         self.configs.radius, self.configs.seed,
                         self.configs.oracle_reps, self.configs.exact,
                         self.configs.workers)
