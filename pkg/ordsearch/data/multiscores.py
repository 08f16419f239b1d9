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
Multiscores: for every variable, the list of (parent set, score, weight)
triples it may choose from.
"""
import math
from typing import (
    Any, Callable, Dict, Iterable, List, Mapping, NamedTuple, Sequence, Tuple)

import networkx as nx

from ordsearch.common.exception import InvalidMultiScoresError
from ordsearch.common.types import Bitset, VarId
from ordsearch.utils.bitset import iter_bits, mask_of, popcount

__all__ = [
    "Variable",
    "ScoreTriple",
    "MultiScores",
]


class Variable(NamedTuple):
    id: VarId
    name: str


class ScoreTriple(NamedTuple):
    r"""A multiscore ``(P, s, w)``. The parent set ``P`` is a bitset over
    variable ids and never contains the owner.
    """
    parents: Bitset
    score: float
    weight: int

    @property
    def size(self) -> int:
        r"""Number of parents."""
        return popcount(self.parents)

    def parent_ids(self) -> List[VarId]:
        return list(iter_bits(self.parents))


TripleSpec = Tuple[Iterable[str], float, int]


class MultiScores:
    r"""The instance ``F`` of a weighted structure learning problem.

    Variables are dense ids ``0..n-1`` in declaration order. Each variable
    owns an ordered tuple of :class:`ScoreTriple`; the position of a triple
    in that tuple is its *triple index*, which scored DAGs refer to. The
    same parent set may appear several times with different score and
    weight.

    Args:
        names: Display names, indexed by variable id.
        triples: Per variable id, the triples of that variable.

    Raises:
        InvalidMultiScoresError: If a name is repeated, a triple lists its
            owner or an unknown id as a parent, a score is not finite, a
            weight is negative or not an integer, or a variable lacks a
            weight-zero triple for the empty parent set.
    """

    def __init__(self, names: Sequence[str],
                 triples: Sequence[Iterable[ScoreTriple]]):
        self._names: Tuple[str, ...] = tuple(names)
        self._triples: Tuple[Tuple[ScoreTriple, ...], ...] = tuple(
            tuple(ScoreTriple(int(t[0]), float(t[1]), t[2]) for t in ts)
            for ts in triples)
        self._ids: Dict[str, VarId] = {}
        self._validate()

    def _validate(self):
        if len(self._names) != len(self._triples):
            raise InvalidMultiScoresError(
                f"{len(self._names)} names given for "
                f"{len(self._triples)} triple lists.")

        for v, name in enumerate(self._names):
            if name in self._ids:
                raise InvalidMultiScoresError(
                    f"Variable name {name!r} is used twice.")
            self._ids[name] = v

        universe = (1 << self.n) - 1
        for v, triples in enumerate(self._triples):
            has_empty = False
            for idx, t in enumerate(triples):
                where = f"triple {idx} of variable {self._names[v]!r}"
                if t.parents < 0 or t.parents & ~universe:
                    raise InvalidMultiScoresError(
                        f"{where} has a parent outside the variable set.")
                if t.parents >> v & 1:
                    raise InvalidMultiScoresError(
                        f"{where} lists its owner as a parent.")
                if not math.isfinite(t.score):
                    raise InvalidMultiScoresError(
                        f"{where} has a non-finite score {t.score}.")
                if (isinstance(t.weight, bool) or not isinstance(t.weight, int)
                        or t.weight < 0):
                    raise InvalidMultiScoresError(
                        f"{where} has an invalid weight {t.weight!r}.")
                if t.parents == 0 and t.weight == 0:
                    has_empty = True
            if not has_empty:
                raise InvalidMultiScoresError(
                    f"Variable {self._names[v]!r} has no weight-zero triple "
                    f"for the empty parent set.")

    @classmethod
    def from_dict(cls, spec: Mapping[str, Sequence[TripleSpec]]
                  ) -> "MultiScores":
        r"""Builds multiscores from ``{name: [(parent names, score,
        weight), ...]}``. The variable ids follow the mapping order.

        Example:

        .. code-block:: python

            MultiScores.from_dict({
                'a': [((), 0, 0), (('b',), 5, 1)],
                'b': [((), 0, 0), (('a',), 3, 0)],
            })
        """
        names = list(spec.keys())
        ids = {name: v for v, name in enumerate(names)}
        triples = []
        for name in names:
            owned = []
            for parents, score, weight in spec[name]:
                try:
                    mask = mask_of(ids[p] for p in parents)
                except KeyError as e:
                    raise InvalidMultiScoresError(
                        f"Unknown parent {e.args[0]!r} of {name!r}.") from e
                owned.append(ScoreTriple(mask, float(score), weight))
            triples.append(owned)
        return cls(names, triples)

    @property
    def n(self) -> int:
        return len(self._names)

    @property
    def names(self) -> Tuple[str, ...]:
        return self._names

    @property
    def variables(self) -> List[Variable]:
        return [Variable(v, name) for v, name in enumerate(self._names)]

    def name_of(self, v: VarId) -> str:
        return self._names[v]

    def id_of(self, name: str) -> VarId:
        r"""Returns the id of the variable called ``name``.

        Raises:
            KeyError: If there is no such variable.
        """
        return self._ids[name]

    def has_variable(self, name: str) -> bool:
        return name in self._ids

    def triples(self, v: VarId) -> Tuple[ScoreTriple, ...]:
        return self._triples[v]

    def triple(self, v: VarId, idx: int) -> ScoreTriple:
        return self._triples[v][idx]

    @property
    def num_triples(self) -> int:
        r"""Total number of triples, the size of the instance."""
        return sum(len(ts) for ts in self._triples)

    @property
    def max_weight(self) -> int:
        return max((t.weight for ts in self._triples for t in ts), default=0)

    @property
    def weight_cap(self) -> int:
        r"""Sum over the variables of their largest triple weight; no arc
        set weighs more, so larger budgets all behave like this one.
        """
        return sum(max((t.weight for t in ts), default=0)
                   for ts in self._triples)

    def clamp_budget(self, k: int) -> int:
        return min(k, self.weight_cap)

    def empty_triple_index(self, v: VarId) -> int:
        r"""Index of the best scoring weight-zero empty-set triple of ``v``;
        ties go to the lowest index.
        """
        best = -1
        for idx, t in enumerate(self._triples[v]):
            if t.parents == 0 and t.weight == 0 and (
                    best < 0 or t.score > self._triples[v][best].score):
                best = idx
        return best

    def possible_parent_sets(self, v: VarId) -> List[Bitset]:
        r"""The distinct parent sets of ``v`` in first-occurrence order."""
        seen: Dict[Bitset, None] = {}
        for t in self._triples[v]:
            seen.setdefault(t.parents, None)
        return list(seen)

    def superstructure(self) -> nx.DiGraph:
        r"""The digraph with an arc ``(u, v)`` whenever ``u`` is in some
        possible parent set of ``v``. Nodes are variable ids.
        """
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        for v in range(self.n):
            union = 0
            for t in self._triples[v]:
                union |= t.parents
            graph.add_edges_from((u, v) for u in iter_bits(union))
        return graph

    def map_triples(self, func: Callable[[ScoreTriple], ScoreTriple]
                    ) -> "MultiScores":
        r"""Returns new multiscores with ``func`` applied to every triple,
        keeping variables and triple indices.
        """
        return MultiScores(
            self._names, [[func(t) for t in ts] for ts in self._triples])

    def __getstate__(self) -> Dict[str, Any]:
        return {
            "names": list(self._names),
            "triples": [[[t.parents, t.score, t.weight] for t in ts]
                        for ts in self._triples],
        }

    def __setstate__(self, state: Dict[str, Any]):
        self.__init__(  # type: ignore
            state["names"],
            [[ScoreTriple(p, s, w) for p, s, w in ts]
             for ts in state["triples"]])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiScores):
            return NotImplemented
        return (self._names == other._names
                and self._triples == other._triples)

    def __repr__(self) -> str:
        return (f"MultiScores(n={self.n}, "
                f"num_triples={self.num_triples})")
