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
Scored DAGs (one chosen triple per variable) and search results.
"""
import math
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from ordsearch.common.exception import InvalidScoredDagError
from ordsearch.common.types import Bitset, Choices, Diagnostics, VarId
from ordsearch.data.multiscores import MultiScores
from ordsearch.data.ordering import Ordering
from ordsearch.utils.bitset import iter_bits

__all__ = [
    "ScoredDag",
    "SearchResult",
    "is_valid_scored_dag",
    "is_topological_ordering",
]


class ScoredDag:
    r"""An arc set given by one chosen triple index per variable, with its
    total score and weight and a witness ordering.

    Build scored DAGs with :meth:`from_choices`, which computes the totals.
    The total score is the correctly rounded sum (``math.fsum``) of the
    chosen scores, so equal arc sets get equal scores whichever solver
    found them.
    """

    def __init__(self, choices: Sequence[int], score: float, weight: int,
                 ordering: Optional[Ordering] = None):
        self.choices: Choices = tuple(choices)
        self.score: float = score
        self.weight: int = weight
        self.ordering: Optional[Ordering] = ordering

    @classmethod
    def from_choices(cls, scores: MultiScores, choices: Sequence[int],
                     ordering: Optional[Ordering] = None) -> "ScoredDag":
        r"""Creates the scored DAG choosing triple ``choices[v]`` for every
        variable ``v``.

        Raises:
            InvalidScoredDagError: If a choice does not name a triple.
        """
        _check_choices(scores, choices)
        chosen = [scores.triple(v, idx) for v, idx in enumerate(choices)]
        return cls(choices,
                   math.fsum(t.score for t in chosen),
                   sum(t.weight for t in chosen),
                   ordering)

    def parents(self, scores: MultiScores, v: VarId) -> Bitset:
        return scores.triple(v, self.choices[v]).parents

    def arcs(self, scores: MultiScores) -> List[Tuple[VarId, VarId]]:
        r"""The arcs ``(parent, child)``, by child then parent id."""
        return [(u, v) for v in range(len(self.choices))
                for u in iter_bits(self.parents(scores, v))]

    def to_graph(self, scores: MultiScores) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self.choices)))
        graph.add_edges_from(self.arcs(scores))
        return graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ScoredDag):
            return NotImplemented
        return (self.choices == other.choices and self.score == other.score
                and self.weight == other.weight
                and self.ordering == other.ordering)

    def __repr__(self) -> str:
        return (f"ScoredDag(choices={list(self.choices)}, score={self.score}, "
                f"weight={self.weight}, ordering={self.ordering})")


class SearchResult:
    r"""The best arc set found by a solver, with its witness ordering and
    run diagnostics.

    Args:
        dag: The best scored DAG; its ``ordering`` is the witness.
        seed (optional): The seed the run used.
        repetitions (optional): Number of random colorings, or oracle
            repetitions per window.
        iterations (optional): Accepted moves, or orderings evaluated.
        diagnostics (optional): Solver specific counters.
    """

    def __init__(self, dag: ScoredDag, seed: Optional[int] = None,
                 repetitions: Optional[int] = None,
                 iterations: Optional[int] = None,
                 diagnostics: Optional[Diagnostics] = None):
        self.dag = dag
        self.seed = seed
        self.repetitions = repetitions
        self.iterations = iterations
        self.diagnostics: Diagnostics = dict(diagnostics or {})

    @property
    def score(self) -> float:
        return self.dag.score

    @property
    def weight(self) -> int:
        return self.dag.weight

    @property
    def ordering(self) -> Optional[Ordering]:
        return self.dag.ordering

    def reaches(self, threshold: float) -> bool:
        r"""Answers the decision question "is there a solution of score at
        least ``threshold``" positively when this result proves it.
        """
        return self.dag.score >= threshold

    def __repr__(self) -> str:
        return (f"SearchResult(score={self.score}, weight={self.weight}, "
                f"ordering={self.ordering}, seed={self.seed}, "
                f"repetitions={self.repetitions}, "
                f"iterations={self.iterations})")


def _check_choices(scores: MultiScores, choices: Sequence[int]):
    if len(choices) != scores.n:
        raise InvalidScoredDagError(
            f"{len(choices)} choices given for {scores.n} variables.")
    for v, idx in enumerate(choices):
        if not 0 <= idx < len(scores.triples(v)):
            raise InvalidScoredDagError(
                f"Variable {scores.name_of(v)!r} has no triple {idx}.")


def is_valid_scored_dag(scores: MultiScores, dag: ScoredDag, k: int) -> bool:
    r"""Checks that ``dag`` is a feasible solution: its arc set is acyclic
    and its total weight is at most ``k``.

    Returns:
        ``True`` if the arc set is acyclic and within the budget.

    Raises:
        InvalidScoredDagError: If ``dag`` references triples that do not
            exist, or its totals disagree with its choices.
    """
    _check_choices(scores, dag.choices)
    weight = sum(scores.triple(v, idx).weight
                 for v, idx in enumerate(dag.choices))
    if weight != dag.weight:
        raise InvalidScoredDagError(
            f"The recorded weight {dag.weight} is not the weight {weight} "
            f"of the chosen triples.")
    if weight > k:
        return False
    return nx.is_directed_acyclic_graph(dag.to_graph(scores))


def is_topological_ordering(scores: MultiScores, dag: ScoredDag,
                            ordering: Ordering) -> bool:
    r"""Whether every arc of ``dag`` points forward in ``ordering``."""
    return all(ordering.position(u) < ordering.position(v)
               for u, v in dag.arcs(scores))
