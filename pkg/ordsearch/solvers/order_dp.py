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
The exact solver for a fixed topological ordering, and the engine every
neighborhood search scores its orderings with.
"""
import logging
from typing import Any, Dict, List, Tuple

import networkx as nx
import numpy as np

from ordsearch.common.exception import SolverConfigError
from ordsearch.common.types import Bitset, VarId
from ordsearch.data.instance import SearchInstance
from ordsearch.data.multiscores import MultiScores, ScoreTriple
from ordsearch.data.ordering import Ordering
from ordsearch.data.scored_dag import ScoredDag, SearchResult
from ordsearch.solvers.base import BaseSolver

__all__ = [
    "OrderingRestrictedScores",
    "PlainScorer",
    "restrict_to_ordering",
    "best_dag_for_ordering",
    "solve_acyclic_superstructure",
    "OrderingScoreSolver",
]

logger = logging.getLogger(__name__)

Entry = Tuple[int, ScoreTriple]


class OrderingRestrictedScores:
    r"""The triples whose parents all precede their owner in an ordering,
    with their original triple indices.
    """

    def __init__(self, ordering: Ordering, entries: List[List[Entry]]):
        self.ordering = ordering
        self._entries = entries

    def entries(self, v: VarId) -> List[Entry]:
        r"""The kept ``(triple index, triple)`` pairs of ``v``, by index."""
        return self._entries[v]

    def indices(self, v: VarId) -> List[int]:
        return [idx for idx, _ in self._entries[v]]


def restrict_to_ordering(scores: MultiScores, ordering: Ordering
                         ) -> OrderingRestrictedScores:
    r"""Keeps exactly the triples whose parents precede the owner in
    ``ordering``. The empty set is always kept, and ``ordering`` is a
    topological ordering of the superstructure of the result.
    """
    entries = []
    for v in range(scores.n):
        preceding = ordering.predecessors(v)
        entries.append([(idx, t) for idx, t in enumerate(scores.triples(v))
                        if t.parents & ~preceding == 0])
    return OrderingRestrictedScores(ordering, entries)


class PlainScorer:
    r"""Answers "best weight-zero triple of ``v`` with parents inside a
    given set" by scanning the weight-zero triples from the best score
    down. Ties go to the lowest triple index.
    """

    def __init__(self, scores: MultiScores):
        self.scores = scores
        self._ranked: List[List[Tuple[float, int, Bitset]]] = []
        for v in range(scores.n):
            ranked = sorted(
                ((t.score, idx, t.parents)
                 for idx, t in enumerate(scores.triples(v)) if t.weight == 0),
                key=lambda e: (-e[0], e[1]))
            self._ranked.append(ranked)

    def ranked(self, v: VarId) -> List[Tuple[float, int, Bitset]]:
        r"""The weight-zero ``(score, triple index, parents)`` of ``v``, best
        first."""
        return self._ranked[v]

    def best(self, v: VarId, allowed: Bitset) -> Tuple[float, int]:
        r"""Returns ``(score, triple index)`` of the best weight-zero triple
        of ``v`` whose parents are inside ``allowed``.
        """
        for score, idx, parents in self._ranked[v]:
            if parents & ~allowed == 0:
                return score, idx
        raise AssertionError("every variable has the empty parent set")

    def choices(self, ordering: Ordering) -> List[int]:
        r"""The best weight-zero triple of every variable in ``ordering``."""
        choices = [0] * self.scores.n
        preceding = 0
        for v in ordering:
            choices[v] = self.best(v, preceding)[1]
            preceding |= 1 << v
        return choices

    def dag(self, ordering: Ordering) -> ScoredDag:
        return ScoredDag.from_choices(self.scores, self.choices(ordering),
                                      ordering)


def best_dag_for_ordering(scores: MultiScores, ordering: Ordering,
                          k: int) -> ScoredDag:
    r"""The best arc set with ``ordering`` as a topological ordering and
    total weight at most ``k``.

    The table ``T[i, k']`` holds the best total score of the variables at
    positions ``i..n-1`` with budget ``k'``; it is filled from the last
    position backwards, and each entry takes one pass over the triples of
    the variable at position ``i``. Ties go to the lowest triple index.

    Args:
        scores: The multiscores.
        ordering: The topological ordering, also the witness of the result.
        k (int): The weight budget.

    Returns:
        The optimal scored DAG.
    """
    if k < 0:
        raise SolverConfigError(f"The weight budget must be non-negative, "
                                f"got {k}.")
    k = scores.clamp_budget(k)
    if k == 0:
        return PlainScorer(scores).dag(ordering)

    restricted = restrict_to_ordering(scores, ordering)
    n = scores.n
    table = np.zeros((n + 1, k + 1), dtype=np.float64)
    arg = np.full((n, k + 1), -1, dtype=np.int64)

    for i in range(n - 1, -1, -1):
        v = ordering[i]
        best = np.full(k + 1, -np.inf)
        for idx, t in restricted.entries(v):
            if t.weight > k:
                continue
            # Candidate values for the budgets k' = t.weight .. k.
            candidate = t.score + table[i + 1, :k + 1 - t.weight]
            better = candidate > best[t.weight:]
            best[t.weight:][better] = candidate[better]
            arg[i, t.weight:][better] = idx
        table[i] = best

    choices = [0] * n
    budget = k
    for i in range(n):
        v = ordering[i]
        idx = int(arg[i, budget])
        choices[v] = idx
        budget -= scores.triple(v, idx).weight
    return ScoredDag.from_choices(scores, choices, ordering)


def solve_acyclic_superstructure(scores: MultiScores, k: int) -> ScoredDag:
    r"""Solves the instance exactly when its superstructure is acyclic: any
    topological ordering of the superstructure admits every arc set, so the
    ordering solver finds the global optimum.

    Raises:
        SolverConfigError: If the superstructure has a cycle.
    """
    graph = scores.superstructure()
    if not nx.is_directed_acyclic_graph(graph):
        raise SolverConfigError("The superstructure has a cycle.")
    ordering = Ordering(nx.lexicographical_topological_sort(graph))
    return best_dag_for_ordering(scores, ordering, k)


class OrderingScoreSolver(BaseSolver):
    r"""Scores the start ordering of each instance, or the topological
    ordering of an acyclic superstructure.
    """

    @staticmethod
    def default_configs() -> Dict[str, Any]:
        configs = BaseSolver.default_configs()
        configs.update({
            'superstructure_order': False,
        })
        return configs

    def _solve(self, instance: SearchInstance) -> SearchResult:
        if self.configs.superstructure_order:
            dag = solve_acyclic_superstructure(instance.scores,
                                               self.configs.k)
        else:
            dag = best_dag_for_ordering(instance.scores, instance.ordering,
                                        self.configs.k)
        return SearchResult(dag, iterations=1)
