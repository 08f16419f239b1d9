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
Brute-force reference solvers for small instances. They share no code with
the dynamic programs they are used to check, apart from the ordering
distances and, for the local search, the ordering score.
"""
import itertools
import logging
import math
from typing import Any, Dict, List, Optional, Sequence

from ordsearch.common.const import ORACLE_MAX_ORDERINGS, ORACLE_MAX_VARIABLES
from ordsearch.common.exception import (
    OracleBudgetExceededError, SolverConfigError)
from ordsearch.common.types import VarId
from ordsearch.data.instance import SearchInstance
from ordsearch.data.multiscores import MultiScores
from ordsearch.data.ordering import DistanceKind, Ordering, distance
from ordsearch.data.scored_dag import ScoredDag, SearchResult
from ordsearch.solvers.base import BaseSolver
from ordsearch.solvers.order_dp import best_dag_for_ordering
from ordsearch.utils.bitset import is_subset

__all__ = [
    "OracleBudget",
    "brute_best_dag",
    "brute_best_dag_for_ordering",
    "brute_local_search",
    "BruteForceSolver",
]

logger = logging.getLogger(__name__)


class OracleBudget:
    r"""Hard caps on the instances the brute-force solvers accept.

    Args:
        max_variables (int): Largest number of variables.
        max_orderings (int): Largest number of orderings, or of triple
            assignments, to enumerate.
    """

    def __init__(self, max_variables: int = ORACLE_MAX_VARIABLES,
                 max_orderings: int = ORACLE_MAX_ORDERINGS):
        self.max_variables = max_variables
        self.max_orderings = max_orderings

    def check(self, n: int, enumerated: int):
        if n > self.max_variables:
            raise OracleBudgetExceededError(
                f"{n} variables are above the oracle limit of "
                f"{self.max_variables}.")
        if enumerated > self.max_orderings:
            raise OracleBudgetExceededError(
                f"{enumerated} candidates are above the oracle limit of "
                f"{self.max_orderings}.")


def _peel_order(parents: Sequence[int]) -> Optional[List[VarId]]:
    r"""A topological ordering of the parent sets, smallest ready variable
    first, or ``None`` on a cycle.
    """
    n = len(parents)
    placed = 0
    order: List[VarId] = []
    while len(order) < n:
        for v in range(n):
            if not placed >> v & 1 and parents[v] & ~placed == 0:
                order.append(v)
                placed |= 1 << v
                break
        else:
            return None
    return order


def _enumerate_best(scores: MultiScores, options: List[List[int]], k: int,
                    budget: OracleBudget, need_order: bool
                    ) -> Optional[ScoredDag]:
    budget.check(scores.n, math.prod(len(o) for o in options))
    best: Optional[ScoredDag] = None
    for choices in itertools.product(*options):
        chosen = [scores.triple(v, idx) for v, idx in enumerate(choices)]
        if sum(t.weight for t in chosen) > k:
            continue
        order = _peel_order([t.parents for t in chosen])
        if order is None:
            continue
        score = math.fsum(t.score for t in chosen)
        if best is None or score > best.score:
            best = ScoredDag.from_choices(
                scores, choices, Ordering(order) if need_order else None)
    return best


def brute_best_dag(scores: MultiScores, k: int,
                   budget: Optional[OracleBudget] = None) -> ScoredDag:
    r"""The best acyclic assignment of weight at most ``k``, found by trying
    every assignment of triples in lexicographic order of triple indices.
    The first of equal scores wins.

    Raises:
        OracleBudgetExceededError: If the instance is too large.
    """
    budget = budget or OracleBudget()
    options = [list(range(len(scores.triples(v)))) for v in range(scores.n)]
    best = _enumerate_best(scores, options, k, budget, need_order=True)
    # The all-empty assignment has weight 0 and no arcs.
    assert best is not None
    return best


def brute_best_dag_for_ordering(scores: MultiScores, ordering: Ordering,
                                k: int,
                                budget: Optional[OracleBudget] = None
                                ) -> ScoredDag:
    r"""The best assignment of weight at most ``k`` with ``ordering`` as a
    topological ordering, by exhaustion.
    """
    budget = budget or OracleBudget()
    options = []
    for v in range(scores.n):
        before = ordering.predecessors(v)
        options.append([idx for idx, t in enumerate(scores.triples(v))
                        if is_subset(t.parents, before)])
    best = _enumerate_best(scores, options, k, budget, need_order=False)
    assert best is not None
    return ScoredDag.from_choices(scores, best.choices, ordering)


def brute_local_search(scores: MultiScores, ordering: Ordering, k: int,
                       r: int, kind: DistanceKind,
                       budget: Optional[OracleBudget] = None
                       ) -> SearchResult:
    r"""The best ordering score over every ordering within distance ``r``
    of ``ordering``.

    All ``n!`` orderings are enumerated in lexicographic order of the
    variable ids and filtered by :func:`~ordsearch.data.ordering.distance`;
    the first of equal scores wins.

    Returns:
        The best result; ``iterations`` is the number of orderings within
        the distance.

    Raises:
        OracleBudgetExceededError: If the instance is too large.
    """
    budget = budget or OracleBudget()
    n = scores.n
    budget.check(n, math.factorial(n))
    best: Optional[ScoredDag] = None
    within = 0
    for sequence in itertools.permutations(range(n)):
        if distance(kind, ordering.sequence, sequence) > r:
            continue
        within += 1
        dag = best_dag_for_ordering(scores, Ordering(sequence), k)
        if best is None or dag.score > best.score:
            best = dag
    assert best is not None
    logger.debug("%d orderings within %s distance %d", within, kind.value, r)
    return SearchResult(best, iterations=within)


class BruteForceSolver(BaseSolver):
    r"""Solves small instances by exhaustion: the global optimum when no
    distance is configured, else the best ordering within ``radius`` of the
    start ordering.
    """

    @staticmethod
    def default_configs() -> Dict[str, Any]:
        configs = BaseSolver.default_configs()
        configs.update({
            'distance': None,
            'radius': 0,
            'max_variables': ORACLE_MAX_VARIABLES,
            'max_orderings': ORACLE_MAX_ORDERINGS,
        })
        return configs

    def _check_configs(self):
        super()._check_configs()
        self.kind: Optional[DistanceKind] = None
        if self.configs.distance is not None:
            try:
                self.kind = DistanceKind(self.configs.distance)
            except ValueError as e:
                raise SolverConfigError(
                    f"Unknown distance {self.configs.distance!r}.") from e
        if self.configs.radius < 0:
            raise SolverConfigError(
                f"The radius must be non-negative, got "
                f"{self.configs.radius}.")
        self.budget = OracleBudget(self.configs.max_variables,
                                   self.configs.max_orderings)

    def _solve(self, instance: SearchInstance) -> SearchResult:
        if self.kind is None:
            dag = brute_best_dag(instance.scores, self.configs.k, self.budget)
            return SearchResult(dag)
        return brute_local_search(instance.scores, instance.ordering,
                                  self.configs.k, self.configs.radius,
                                  self.kind, self.budget)
