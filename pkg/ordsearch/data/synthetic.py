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
Random instance generators, used by the tests and for benchmarking.
"""
from typing import List

import numpy as np

from ordsearch.data.multiscores import MultiScores, ScoreTriple
from ordsearch.utils.random_utils import make_rng

__all__ = [
    "random_multiscores",
    "bic_like_multiscores",
]


def _names(n: int) -> List[str]:
    return [f"x{v}" for v in range(n)]


def _random_parents(rng: np.random.Generator, n: int, v: int,
                    max_parents: int) -> int:
    others = [u for u in range(n) if u != v]
    size = int(rng.integers(1, min(max_parents, len(others)) + 1))
    mask = 0
    for u in rng.choice(others, size=size, replace=False):
        mask |= 1 << int(u)
    return mask


def random_multiscores(n: int, seed: int, max_triples: int = 6,
                       max_parents: int = 2, max_weight: int = 2
                       ) -> MultiScores:
    r"""Small random weighted multiscores. Scores are multiples of 1/4 in
    ``[-8, 8]``, so that all sums are exact in floating point and solver
    results can be compared with ``==``. Every variable gets one
    weight-zero empty-set triple first, then up to ``max_triples - 1``
    random triples; parent sets may repeat.
    """
    rng = make_rng(seed)
    triples = []
    for v in range(n):
        owned = [ScoreTriple(0, float(rng.integers(-32, 33)) / 4, 0)]
        if n > 1:
            for _ in range(int(rng.integers(0, max_triples))):
                owned.append(ScoreTriple(
                    _random_parents(rng, n, v, max_parents),
                    float(rng.integers(-32, 33)) / 4,
                    int(rng.integers(0, max_weight + 1))))
        triples.append(owned)
    return MultiScores(_names(n), triples)


def bic_like_multiscores(n: int, seed: int, num_triples: int = 20,
                         max_parents: int = 3) -> MultiScores:
    r"""Unweighted multiscores shaped like BIC scores. A hidden random DAG
    decides which parents help: each true parent adds a gain, each parent
    pays a penalty, and the empty set keeps the baseline log-likelihood.
    """
    rng = make_rng(seed)
    hidden = [int(v) for v in rng.permutation(n)]
    rank = {v: i for i, v in enumerate(hidden)}
    triples = []
    for v in range(n):
        baseline = -float(rng.uniform(500.0, 1500.0))
        gains = {u: float(rng.uniform(5.0, 60.0)) if rank[u] < rank[v]
                 else float(rng.uniform(0.0, 15.0))
                 for u in range(n) if u != v}
        owned = [ScoreTriple(0, baseline, 0)]
        seen = {0}
        for _ in range(4 * num_triples):
            if len(owned) >= num_triples or n < 2:
                break
            parents = _random_parents(rng, n, v, max_parents)
            if parents in seen:
                continue
            seen.add(parents)
            members = [u for u in range(n) if parents >> u & 1]
            penalty = 12.0 * len(members) ** 1.5
            score = baseline + sum(gains[u] for u in members) - penalty
            owned.append(ScoreTriple(parents, score, 0))
        triples.append(owned)
    return MultiScores(_names(n), triples)
