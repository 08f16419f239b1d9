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
Weight encoders for the bounded-arcs and bounded-indegree constraints.
"""
import re

from ordsearch.data.multiscores import MultiScores

__all__ = [
    "encode_bounded_arcs",
    "encode_bounded_indegree",
    "encode_by_name",
]

_BOUND = re.compile(r"-?[0-9]+")


def encode_bounded_arcs(scores: MultiScores) -> MultiScores:
    r"""Sets every weight to the size of the parent set, so that a budget
    ``k`` bounds the number of arcs.
    """
    return scores.map_triples(lambda t: t._replace(weight=t.size))


def encode_bounded_indegree(scores: MultiScores, c: int) -> MultiScores:
    r"""Sets the weight of every parent set larger than ``c`` to 1 and all
    other weights to 0, so that a budget ``k`` bounds the number of
    variables with more than ``c`` parents.

    Raises:
        ValueError: If ``c`` is negative.
    """
    if c < 0:
        raise ValueError(f"The indegree bound must be non-negative, got {c}.")
    return scores.map_triples(
        lambda t: t._replace(weight=1 if t.size > c else 0))


def encode_by_name(scores: MultiScores, encoding: str) -> MultiScores:
    r"""Applies an encoder named on the command line: ``bounded-arcs`` or
    ``bounded-indegree:<c>``.

    Raises:
        ValueError: If the name is not recognized.
    """
    if encoding == "bounded-arcs":
        return encode_bounded_arcs(scores)
    name, _, bound = encoding.partition(":")
    if name == "bounded-indegree" and _BOUND.fullmatch(bound):
        return encode_bounded_indegree(scores, int(bound))
    raise ValueError(
        f"Unknown encoding {encoding!r}, expected 'bounded-arcs' or "
        f"'bounded-indegree:<c>'.")
