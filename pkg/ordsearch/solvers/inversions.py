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
Local search in the inversions (Kendall tau) neighborhood by color coding.

A coloring splits the variables into classes. A *color-restricted* solution
keeps the relative order of every class, and the best one is found by a
memoized dynamic program over prefix vectors: ``p[c]`` variables of class
``c`` (its first ones in the start ordering) have been placed, the last
placed variable is a sink of the prefix, and placing it after the rest of
the prefix costs one inversion per prefix variable it jumps over. Random
colorings with enough classes keep an optimal solution color-restricted
with good probability, which repetitions amplify.
"""
import logging
import math
import sys
from typing import (
    Any, Dict, List, Mapping, Optional, Sequence, Tuple)

import numpy as np

from ordsearch.common.exception import SolverConfigError
from ordsearch.common.types import VarId
from ordsearch.data.instance import SearchInstance
from ordsearch.data.multiscores import MultiScores, ScoreTriple
from ordsearch.data.ordering import Ordering
from ordsearch.data.scored_dag import ScoredDag, SearchResult
from ordsearch.solvers.base import BaseSolver
from ordsearch.utils.bitset import popcount
from ordsearch.utils.parallel import ordered_map
from ordsearch.utils.random_utils import make_rng

__all__ = [
    "Coloring",
    "ColorRestrictedDP",
    "num_colors",
    "default_repetitions",
    "memo_key_bound",
    "color_restricted_solve",
    "ls_inversions",
    "InversionsSolver",
]

logger = logging.getLogger(__name__)

PrefixVector = Tuple[int, ...]
# (prefix vector, remaining weight budget, remaining inversion budget)
DpKey = Tuple[PrefixVector, int, int]
Candidate = Tuple[int, ScoreTriple]


def num_colors(r: int) -> int:
    r"""``max(1, ceil(sqrt(8 r)))`` colors for radius ``r``."""
    return max(1, math.ceil(math.sqrt(8 * r)))


def default_repetitions(r: int) -> int:
    r"""``ceil((2e) ** sqrt(r / 8))`` colorings, enough for an optimal
    solution with probability at least ``1 - 1/e``.
    """
    return max(1, math.ceil((2 * math.e) ** math.sqrt(r / 8)))


def memo_key_bound(n: int, k: int, r: int, colors: int) -> int:
    r"""An upper bound on the number of DP keys: a reachable prefix has at
    most ``r`` holes, so for each of the ``n + 1`` prefix lengths every
    class count lies in a range of at most ``r + 2`` values.

    This is looser than ``(r + 2) ** colors * (k + 1) * (r + 1)`` by the
    factor ``n + 1``. The count ranges are anchored at the prefix length,
    so prefixes of different lengths do not share them; with one color and
    ``r = 0`` the DP already visits all ``n + 1`` prefixes, which the
    smaller product does not cover.
    """
    return (n + 1) * (r + 2) ** colors * (k + 1) * (r + 1)


class Coloring:
    r"""An assignment of colors ``0..num_colors-1`` to variables.

    Args:
        colors: The color of every colored variable.
        num_colors (int): The number of colors, at least 1.
    """

    def __init__(self, colors: Mapping[VarId, int], num_colors: int):
        if num_colors < 1:
            raise SolverConfigError("A coloring needs at least one color.")
        if any(not 0 <= c < num_colors for c in colors.values()):
            raise SolverConfigError(
                f"Colors must lie in 0..{num_colors - 1}.")
        self.colors: Dict[VarId, int] = dict(colors)
        self.num_colors = num_colors

    @classmethod
    def uniform(cls, variables: Sequence[VarId], num_colors: int,
                rng: np.random.Generator) -> "Coloring":
        drawn = rng.integers(0, num_colors, size=len(variables))
        return cls({v: int(c) for v, c in zip(variables, drawn)}, num_colors)

    @classmethod
    def all_distinct(cls, variables: Sequence[VarId]) -> "Coloring":
        r"""One color per variable: every class is a singleton, so color
        restriction is vacuous and the DP is exact.
        """
        return cls({v: i for i, v in enumerate(variables)},
                   max(1, len(variables)))

    @classmethod
    def single(cls, variables: Sequence[VarId]) -> "Coloring":
        return cls({v: 0 for v in variables}, 1)

    def classes(self, sequence: Sequence[VarId]) -> List[List[VarId]]:
        r"""The color classes, each in the order of ``sequence``."""
        classes: List[List[VarId]] = [[] for _ in range(self.num_colors)]
        for v in sequence:
            classes[self.colors[v]].append(v)
        return classes

    def __repr__(self) -> str:
        return f"Coloring({self.colors}, num_colors={self.num_colors})"


class ColorRestrictedDP:
    r"""The color-restricted dynamic program over one ordered set of
    variables.

    ``T[p, k', r']`` is the best score of the variables of the prefix
    vector ``p`` with weight budget ``k'`` and inversion budget ``r'``. It
    tries every class ``c`` as the one whose last prefix variable ``z`` is
    placed last, pays ``R`` inversions for the prefix variables after ``z``
    in the start ordering, and lets ``z`` take any triple with parents in
    the rest of the prefix. Classes are tried in color order, and triples
    by weight then index; the first maximum is kept.

    Args:
        sequence: The start ordering of the variables.
        candidates: For every variable, its ``(triple index, triple)``
            pairs. Parents must be among ``sequence``.
        coloring: A coloring of the variables of ``sequence``.
        r (int): The inversion budget.
    """

    def __init__(self, sequence: Sequence[VarId],
                 candidates: Mapping[VarId, Sequence[Candidate]],
                 coloring: Coloring, r: int):
        if r < 0:
            raise SolverConfigError(
                f"The radius must be non-negative, got {r}.")
        self.sequence: Tuple[VarId, ...] = tuple(sequence)
        self.r = r
        self._position = {v: i for i, v in enumerate(self.sequence)}
        self._classes = [c for c in coloring.classes(self.sequence) if c]
        # Per class, the id mask and the position mask of each prefix.
        self._id_prefix: List[List[int]] = []
        self._position_prefix: List[List[int]] = []
        for members in self._classes:
            ids, positions = [0], [0]
            for v in members:
                ids.append(ids[-1] | 1 << v)
                positions.append(positions[-1] | 1 << self._position[v])
            self._id_prefix.append(ids)
            self._position_prefix.append(positions)
        self._candidates = {
            v: sorted(candidates[v], key=lambda e: (e[1].weight, e[0]))
            for v in self.sequence}
        self._memo: Dict[DpKey, Tuple[float, Optional[Tuple[int, int]]]] = {}

    @property
    def num_classes(self) -> int:
        return len(self._classes)

    @property
    def memo_keys(self) -> int:
        r"""Number of distinct keys evaluated so far."""
        return len(self._memo)

    def _full(self) -> PrefixVector:
        return tuple(len(members) for members in self._classes)

    def _cost(self, p: PrefixVector, c: int) -> int:
        positions = 0
        for d, x in enumerate(p):
            positions |= self._position_prefix[d][x]
        z = self._classes[c][p[c] - 1]
        return popcount(positions >> (self._position[z] + 1))

    def _solve(self, p: PrefixVector, k: int, r: int) -> float:
        key = (p, k, r)
        hit = self._memo.get(key)
        if hit is not None:
            return hit[0]
        if not any(p):
            self._memo[key] = (0.0, None)
            return 0.0

        ids = positions = 0
        for d, x in enumerate(p):
            ids |= self._id_prefix[d][x]
            positions |= self._position_prefix[d][x]

        best, arg = -math.inf, None
        for c, x in enumerate(p):
            if x == 0:
                continue
            z = self._classes[c][x - 1]
            cost = popcount(positions >> (self._position[z] + 1))
            if cost > r:
                continue
            allowed = ids & ~(1 << z)
            smaller = p[:c] + (x - 1,) + p[c + 1:]
            for idx, t in self._candidates[z]:
                if t.weight > k:
                    break
                if t.parents & ~allowed:
                    continue
                value = t.score + self._solve(smaller, k - t.weight, r - cost)
                if value > best:
                    best, arg = value, (c, idx)

        self._memo[key] = (best, arg)
        return best

    def value(self, k: int) -> float:
        r"""The best color-restricted score with weight budget ``k``."""
        limit = 4 * len(self.sequence) + 200
        if sys.getrecursionlimit() < limit:
            sys.setrecursionlimit(limit)
        return self._solve(self._full(), k, self.r)

    def traceback(self, k: int) -> Tuple[List[VarId], Dict[VarId, int]]:
        r"""Reconstructs the solution of :meth:`value` for budget ``k``.

        Returns:
            The witness ordering of the variables, and the chosen triple
            index of each variable.
        """
        self.value(k)
        p, budget, radius = self._full(), k, self.r
        sinks: List[VarId] = []
        choices: Dict[VarId, int] = {}
        while any(p):
            _, arg = self._memo[(p, budget, radius)]
            assert arg is not None
            c, idx = arg
            z = self._classes[c][p[c] - 1]
            cost = self._cost(p, c)
            weight = next(t.weight for i, t in self._candidates[z]
                          if i == idx)
            sinks.append(z)
            choices[z] = idx
            p = p[:c] + (p[c] - 1,) + p[c + 1:]
            budget -= weight
            radius -= cost
        sinks.reverse()
        return sinks, choices


def _all_candidates(scores: MultiScores) -> Dict[VarId, List[Candidate]]:
    return {v: list(enumerate(scores.triples(v))) for v in range(scores.n)}


def color_restricted_solve(scores: MultiScores, ordering: Ordering, k: int,
                           r: int, coloring: Coloring) -> SearchResult:
    r"""The best arc set of weight at most ``k`` whose witness ordering is
    within Kendall tau distance ``r`` of ``ordering`` and keeps the order
    of every color class of ``coloring``.

    Args:
        scores: The multiscores.
        ordering: The start ordering.
        k (int): The weight budget.
        r (int): The inversion budget.
        coloring: A coloring of all variables.

    Returns:
        The best color-restricted solution. ``diagnostics`` holds the
        number of DP keys in ``memo_keys``.
    """
    if k < 0:
        raise SolverConfigError(f"The weight budget must be non-negative, "
                                f"got {k}.")
    dp = ColorRestrictedDP(ordering.sequence, _all_candidates(scores),
                           coloring, r)
    witness, chosen = dp.traceback(k)
    choices = [chosen[v] for v in range(scores.n)]
    dag = ScoredDag.from_choices(scores, choices, Ordering(witness))
    return SearchResult(dag, diagnostics={
        "memo_keys": dp.memo_keys,
        "colors": coloring.num_colors,
    })


def _run_repetition(task: Tuple[MultiScores, Ordering, int, int, Coloring]
                    ) -> SearchResult:
    scores, ordering, k, r, coloring = task
    return color_restricted_solve(scores, ordering, k, r, coloring)


def ls_inversions(scores: MultiScores, ordering: Ordering, k: int, r: int,
                  seed: int = 0, repetitions: Optional[int] = None,
                  exact: bool = False, workers: int = 1) -> SearchResult:
    r"""Inversions local search: the best of :func:`color_restricted_solve`
    over ``repetitions`` uniform random colorings with :func:`num_colors`
    colors. The result is always feasible, and optimal with probability at
    least ``1 - 1/e`` with the default repetitions.

    Args:
        scores: The multiscores.
        ordering: The start ordering.
        k (int): The weight budget.
        r (int): The inversion budget.
        seed (int): Coloring ``i`` is drawn from ``make_rng(seed, i)``.
        repetitions (int, optional): Number of colorings, by default
            :func:`default_repetitions`.
        exact (bool): Use the all-distinct coloring once instead, which is
            exact.
        workers (int): Number of worker processes for the repetitions.

    Returns:
        The best result; ties keep the lowest repetition.
    """
    if r < 0:
        raise SolverConfigError(f"The radius must be non-negative, got {r}.")
    if exact:
        colorings = [Coloring.all_distinct(ordering.sequence)]
    else:
        if repetitions is None:
            repetitions = default_repetitions(r)
        if repetitions < 1:
            raise SolverConfigError(
                f"At least one repetition is needed, got {repetitions}.")
        colors = num_colors(r)
        colorings = [
            Coloring.uniform(ordering.sequence, colors, make_rng(seed, i))
            for i in range(repetitions)]

    results = ordered_map(_run_repetition,
                          [(scores, ordering, k, r, coloring)
                           for coloring in colorings], workers)
    best_index = 0
    for i, result in enumerate(results):
        logger.debug("Coloring %d: score %r", i, result.score)
        if result.score > results[best_index].score:
            best_index = i

    best = results[best_index]
    return SearchResult(best.dag, seed=seed, repetitions=len(colorings),
                        diagnostics={
                            "colors": colorings[0].num_colors,
                            "best_repetition": best_index,
                            "memo_keys": sum(res.diagnostics["memo_keys"]
                                             for res in results),
                        })


class InversionsSolver(BaseSolver):
    r"""Searches the inversions neighborhood of the start ordering.
    """

    @staticmethod
    def default_configs() -> Dict[str, Any]:
        configs = BaseSolver.default_configs()
        configs.update({
            'radius': 1,
            'repetitions': None,
            'exact': False,
        })
        return configs

    def _check_configs(self):
        super()._check_configs()
        if self.configs.radius < 0:
            raise SolverConfigError(
                f"The radius must be non-negative, got "
                f"{self.configs.radius}.")

    def _solve(self, instance: SearchInstance) -> SearchResult:
        return ls_inversions(instance.scores, instance.ordering,
                             self.configs.k, self.configs.radius,
                             self.configs.seed, self.configs.repetitions,
                             self.configs.exact, self.configs.workers)
