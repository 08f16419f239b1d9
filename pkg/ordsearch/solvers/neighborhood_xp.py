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
Exhaustive search of the insert and swap neighborhoods. Both neighborhoods
have ``n^O(r)`` members, so the running time grows quickly with the radius;
callers bound the work with :func:`check_work_bound`.
"""
import itertools
import logging
import math
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from ordsearch.common.const import DEFAULT_WORK_BOUND
from ordsearch.common.exception import (
    SolverConfigError, WorkBoundExceededError)
from ordsearch.common.types import Choices, VarId
from ordsearch.data.instance import SearchInstance
from ordsearch.data.multiscores import MultiScores
from ordsearch.data.ordering import DistanceKind, Ordering
from ordsearch.data.scored_dag import ScoredDag, SearchResult
from ordsearch.solvers.base import BaseSolver
from ordsearch.solvers.order_dp import best_dag_for_ordering
from ordsearch.utils.parallel import ordered_map

__all__ = [
    "NeighborhoodSpec",
    "enumerate_insert_neighbors",
    "enumerate_swap_neighbors",
    "enumerate_neighbors",
    "estimate_neighborhood_size",
    "check_work_bound",
    "local_search_xp",
    "XPLocalSearchSolver",
]

logger = logging.getLogger(__name__)

_CHUNK_SIZE = 256


class NeighborhoodSpec:
    r"""The neighborhood of a start ordering: every ordering within
    ``radius`` of it under the insert or the swap distance.

    Raises:
        SolverConfigError: If the kind is not insert or swap, or the radius
            is negative.
    """

    def __init__(self, kind: DistanceKind, radius: int):
        if kind not in (DistanceKind.INSERT, DistanceKind.SWAP):
            raise SolverConfigError(
                f"Exhaustive neighborhoods are defined for insert and swap, "
                f"not {kind.value}.")
        if radius < 0:
            raise SolverConfigError(
                f"The radius must be non-negative, got {radius}.")
        self.kind = kind
        self.radius = radius

    def __repr__(self) -> str:
        return f"NeighborhoodSpec({self.kind.value}, r={self.radius})"


def enumerate_insert_neighbors(ordering: Ordering, r: int
                               ) -> Iterator[Ordering]:
    r"""Yields every ordering at insert distance at most ``r``, each once,
    starting with ``ordering`` itself.

    An ordering is within distance ``r`` iff removing some ``r`` variables
    leaves the same sequence in both, so for every set of ``r`` positions
    the removed variables are put back in every order at every set of
    target positions.
    """
    n = len(ordering)
    r = min(r, n)
    base = ordering.sequence
    seen = {base}
    yield ordering
    if r == 0:
        return

    for removed in itertools.combinations(range(n), r):
        removed_set = set(removed)
        rest = [v for i, v in enumerate(base) if i not in removed_set]
        moved = [base[i] for i in removed]
        for order in itertools.permutations(moved):
            for targets in itertools.combinations(range(n), r):
                sequence = _interleave(rest, order, targets, n)
                if sequence not in seen:
                    seen.add(sequence)
                    yield Ordering(sequence)


def _interleave(rest: Sequence[VarId], moved: Sequence[VarId],
                targets: Sequence[int], n: int) -> Tuple[VarId, ...]:
    result: List[VarId] = []
    rest_it, moved_it = iter(rest), iter(moved)
    target_set = set(targets)
    for i in range(n):
        result.append(next(moved_it) if i in target_set else next(rest_it))
    return tuple(result)


def enumerate_swap_neighbors(ordering: Ordering, r: int
                             ) -> Iterator[Ordering]:
    r"""Yields every ordering at swap distance at most ``r``, each once, in
    breadth-first order of distance.
    """
    base = ordering.sequence
    n = len(base)
    seen = {base}
    yield ordering
    frontier = [base]
    for _ in range(r):
        next_frontier = []
        for sequence in frontier:
            for i, j in itertools.combinations(range(n), 2):
                swapped = list(sequence)
                swapped[i], swapped[j] = swapped[j], swapped[i]
                candidate = tuple(swapped)
                if candidate not in seen:
                    seen.add(candidate)
                    next_frontier.append(candidate)
                    yield Ordering(candidate)
        if not next_frontier:
            break
        frontier = next_frontier


def enumerate_neighbors(ordering: Ordering, spec: NeighborhoodSpec
                        ) -> Iterator[Ordering]:
    if spec.kind == DistanceKind.INSERT:
        return enumerate_insert_neighbors(ordering, spec.radius)
    return enumerate_swap_neighbors(ordering, spec.radius)


def estimate_neighborhood_size(n: int, spec: NeighborhoodSpec) -> int:
    r"""The ``n ** r`` estimate of the neighborhood size, capped at the
    ``n!`` orderings there are.
    """
    return min(n ** spec.radius, math.factorial(n))


def check_work_bound(n: int, spec: NeighborhoodSpec,
                     work_bound: int = DEFAULT_WORK_BOUND,
                     force: bool = False):
    r"""Warns when the estimated neighborhood size exceeds ``work_bound``,
    and refuses to go on unless ``force`` is set.

    Raises:
        WorkBoundExceededError: If the bound is exceeded without ``force``.
    """
    estimate = estimate_neighborhood_size(n, spec)
    if estimate <= work_bound:
        return
    message = (f"The {spec.kind.value} neighborhood of radius {spec.radius} "
               f"on {n} variables has about {estimate} members, above the "
               f"work bound {work_bound}.")
    if not force:
        raise WorkBoundExceededError(message + " Use force to run anyway.")
    logger.warning("%s Running anyway.", message)


def _score_chunk(task: Tuple[MultiScores, List[Tuple[VarId, ...]], int]
                 ) -> List[Tuple[float, Choices]]:
    scores, sequences, k = task
    results = []
    for sequence in sequences:
        dag = best_dag_for_ordering(scores, Ordering(sequence), k)
        results.append((dag.score, dag.choices))
    return results


def _chunks(orderings: Iterator[Ordering], size: int
            ) -> Iterator[List[Tuple[VarId, ...]]]:
    while True:
        chunk = [o.sequence for o in itertools.islice(orderings, size)]
        if not chunk:
            return
        yield chunk


def local_search_xp(scores: MultiScores, ordering: Ordering, k: int,
                    spec: NeighborhoodSpec, workers: int = 1) -> SearchResult:
    r"""Scores every ordering of the neighborhood with
    :func:`~ordsearch.solvers.order_dp.best_dag_for_ordering` and returns
    the best, the first one in enumeration order among equal scores.

    Args:
        scores: The multiscores.
        ordering: The start ordering.
        k (int): The weight budget.
        spec: The neighborhood.
        workers (int): Number of worker processes scoring chunks of the
            neighborhood.

    Returns:
        The best result, whose ordering is the witness; ``iterations`` is
        the number of orderings scored.
    """
    best: Optional[Tuple[float, Choices, Tuple[VarId, ...]]] = None
    evaluated = 0
    neighbors = enumerate_neighbors(ordering, spec)
    # Chunks are scored in groups so that memory stays bounded.
    group_size = max(1, workers) * 4
    chunks = _chunks(neighbors, _CHUNK_SIZE)
    while True:
        group = list(itertools.islice(chunks, group_size))
        if not group:
            break
        scored = ordered_map(_score_chunk,
                             [(scores, chunk, k) for chunk in group], workers)
        for chunk, results in zip(group, scored):
            for sequence, (score, choices) in zip(chunk, results):
                evaluated += 1
                if best is None or score > best[0]:
                    best = (score, choices, sequence)

    assert best is not None
    logger.debug("Scored %d orderings in the %s", evaluated, spec)
    dag = ScoredDag.from_choices(scores, best[1], Ordering(best[2]))
    return SearchResult(dag, iterations=evaluated,
                        diagnostics={"neighbors": evaluated})


class XPLocalSearchSolver(BaseSolver):
    r"""Searches the insert or swap neighborhood of the start ordering.
    """

    @staticmethod
    def default_configs() -> Dict[str, Any]:
        configs = BaseSolver.default_configs()
        configs.update({
            'distance': 'insert',
            'radius': 1,
            'work_bound': DEFAULT_WORK_BOUND,
            'force': False,
        })
        return configs

    def _check_configs(self):
        super()._check_configs()
        try:
            kind = DistanceKind(self.configs.distance)
        except ValueError as e:
            raise SolverConfigError(
                f"Unknown distance {self.configs.distance!r}.") from e
        self.spec = NeighborhoodSpec(kind, self.configs.radius)

    def _solve(self, instance: SearchInstance) -> SearchResult:
        check_work_bound(instance.scores.n, self.spec,
                         self.configs.work_bound, self.configs.force)
        return local_search_xp(instance.scores, instance.ordering,
                               self.configs.k, self.spec,
                               self.configs.workers)
