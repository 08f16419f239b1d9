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
Unit tests for the color-coding inversions search.
"""
import math
import unittest

from ddt import ddt, data, unpack
from texar.torch import HParams

from ordsearch.common.exception import SolverConfigError
from ordsearch.common.resources import Resources
from ordsearch.data.instance import SearchInstance
from ordsearch.data.ordering import DistanceKind, Ordering, kendall_tau
from ordsearch.data.scored_dag import (
    is_topological_ordering, is_valid_scored_dag)
from ordsearch.data.synthetic import random_multiscores
from ordsearch.solvers.inversions import (
    Coloring, InversionsSolver, color_restricted_solve, default_repetitions,
    ls_inversions, memo_key_bound, num_colors)
from ordsearch.solvers.oracle import brute_local_search
from ordsearch.solvers.order_dp import best_dag_for_ordering
from ordsearch.utils.fixtures import fixture_f1, fixture_f2
from ordsearch.utils.random_utils import make_rng, random_permutation
from ordsearch.utils.test import performance_test, statistical_test


@ddt
class ColoringTest(unittest.TestCase):
    @data((0, 1), (1, 3), (2, 4), (8, 8), (9, 9))
    @unpack
    def test_num_colors(self, r, expected):
        self.assertEqual(num_colors(r), expected)

    @data((0, 1), (1, 2), (2, 3), (8, 6))
    @unpack
    def test_default_repetitions(self, r, expected):
        self.assertEqual(default_repetitions(r), expected)

    def test_classes(self):
        coloring = Coloring({0: 1, 1: 0, 2: 1}, 3)
        self.assertEqual(coloring.classes([2, 1, 0]), [[1], [2, 0], []])

    def test_uniform_is_seeded(self):
        first = Coloring.uniform(range(10), 4, make_rng(5, 0))
        second = Coloring.uniform(range(10), 4, make_rng(5, 0))
        self.assertEqual(first.colors, second.colors)
        self.assertTrue(all(0 <= c < 4 for c in first.colors.values()))

    @data(({0: 0}, 0), ({0: 2}, 2), ({0: -1}, 1))
    @unpack
    def test_invalid(self, colors, count):
        with self.assertRaises(SolverConfigError):
            Coloring(colors, count)


@ddt
class ColorRestrictedSolveTest(unittest.TestCase):
    def test_single_color_freezes_order(self):
        result = color_restricted_solve(fixture_f1(), Ordering([0, 1]), 1, 1,
                                        Coloring.single([0, 1]))
        self.assertEqual(result.score, 3.0)
        self.assertEqual(result.ordering, Ordering([0, 1]))

    def test_distinct_colors(self):
        result = color_restricted_solve(fixture_f1(), Ordering([0, 1]), 1, 1,
                                        Coloring({0: 0, 1: 1}, 2))
        self.assertEqual(result.score, 5.0)
        self.assertEqual(result.ordering, Ordering([1, 0]))
        self.assertEqual(result.weight, 1)

    @data((0, 1, 4.0, [0, 2, 1]), (1, 2, 5.0, None))
    @unpack
    def test_f2(self, k, r, expected, witness):
        start = Ordering([0, 1, 2])
        result = color_restricted_solve(fixture_f2(), start, k, r,
                                        Coloring.all_distinct([0, 1, 2]))
        self.assertEqual(result.score, expected)
        if witness is not None:
            self.assertEqual(result.ordering, Ordering(witness))
        self.assertLessEqual(kendall_tau(start, result.ordering), r)

    def check_against_oracle(self, n, seeds, radii):
        for seed in seeds:
            scores = random_multiscores(n, seed)
            start = Ordering(random_permutation(n, seed, 3))
            k = seed % 4
            for r in radii:
                result = color_restricted_solve(
                    scores, start, k, r, Coloring.all_distinct(start))
                expected = brute_local_search(scores, start, k, r,
                                              DistanceKind.INV)
                self.assertEqual(result.score, expected.score)
                self.assertTrue(is_valid_scored_dag(scores, result.dag, k))
                self.assertTrue(is_topological_ordering(
                    scores, result.dag, result.ordering))
                self.assertLessEqual(kendall_tau(start, result.ordering), r)
                self.assertLessEqual(
                    result.diagnostics["memo_keys"],
                    memo_key_bound(n, k, r, n))

    @data(2, 3, 4, 5)
    def test_against_oracle(self, n):
        self.check_against_oracle(n, range(100 + n * 10, 100 + n * 10 + 3),
                                  range(5))

    @performance_test
    def test_against_oracle_six(self):
        self.check_against_oracle(6, range(200), range(5))

    @data(1, 4, 9)
    def test_memo_keys_grow_with_length(self, n):
        result = color_restricted_solve(
            random_multiscores(n, n), Ordering.identity(n), 0, 0,
            Coloring.single(range(n)))
        self.assertEqual(result.diagnostics["memo_keys"], n + 1)
        self.assertLessEqual(n + 1, memo_key_bound(n, 0, 0, 1))
        if n > 1:
            # Above the bound without the prefix-length factor, which is 2.
            self.assertGreater(result.diagnostics["memo_keys"], 2)

    @data(*range(10))
    def test_memo_keys_with_random_colorings(self, seed):
        n, r, k = 7, 1 + seed % 4, seed % 3
        scores = random_multiscores(n, seed)
        colors = num_colors(r)
        coloring = Coloring.uniform(range(n), colors, make_rng(seed))
        result = color_restricted_solve(scores, Ordering.identity(n), k, r,
                                        coloring)
        self.assertLessEqual(result.diagnostics["memo_keys"],
                             memo_key_bound(n, k, r, colors))


@ddt
class LsInversionsTest(unittest.TestCase):
    def test_r_zero_is_the_ordering_score(self):
        scores = random_multiscores(6, 4)
        start = Ordering(random_permutation(6, 4))
        for k in range(3):
            result = ls_inversions(scores, start, k, 0, seed=1)
            self.assertEqual(result.score,
                             best_dag_for_ordering(scores, start, k).score)

    def test_exact(self):
        result = ls_inversions(fixture_f2(), Ordering([0, 1, 2]), 1, 2,
                               exact=True)
        self.assertEqual(result.score, 5.0)
        self.assertEqual(result.repetitions, 1)

    def test_deterministic(self):
        scores = random_multiscores(6, 9)
        start = Ordering(random_permutation(6, 9))
        first = ls_inversions(scores, start, 2, 3, seed=42)
        second = ls_inversions(scores, start, 2, 3, seed=42, workers=2)
        self.assertEqual(first.dag, second.dag)
        self.assertEqual(first.diagnostics, second.diagnostics)
        self.assertEqual(first.repetitions, default_repetitions(3))
        self.assertEqual(first.diagnostics["colors"], num_colors(3))

    def test_never_above_oracle(self):
        for seed in range(5):
            scores = random_multiscores(5, seed)
            start = Ordering(random_permutation(5, seed))
            result = ls_inversions(scores, start, 1, 2, seed=seed)
            expected = brute_local_search(scores, start, 1, 2,
                                          DistanceKind.INV)
            self.assertLessEqual(result.score, expected.score)
            self.assertLessEqual(kendall_tau(start, result.ordering), 2)

    def test_invalid(self):
        with self.assertRaises(SolverConfigError):
            ls_inversions(fixture_f1(), Ordering([0, 1]), 0, -1)
        with self.assertRaises(SolverConfigError):
            ls_inversions(fixture_f1(), Ordering([0, 1]), 0, 1,
                          repetitions=0)

    @statistical_test
    def test_f1_success_frequency(self):
        trials = 1000
        hits = sum(
            ls_inversions(fixture_f1(), Ordering([0, 1]), 1, 1,
                          seed=seed).score == 5.0
            for seed in range(trials))
        p = 1 - 1 / math.e
        margin = 3 * math.sqrt(p * (1 - p) / trials)
        self.assertGreaterEqual(hits / trials, p - margin)

    @statistical_test
    @data(2, 4, 8)
    def test_success_probability(self, r):
        trials = 200
        p = 1 - 1 / math.e
        margin = 3 * math.sqrt(p * (1 - p) / trials)
        for instance in range(10):
            n = 4 + instance % 3
            scores = random_multiscores(n, instance)
            start = Ordering(random_permutation(n, instance))
            best = brute_local_search(scores, start, 2, r,
                                      DistanceKind.INV).score
            hits = sum(ls_inversions(scores, start, 2, r, seed=seed).score
                       == best for seed in range(trials))
            self.assertGreaterEqual(hits / trials, p - margin)

    @statistical_test
    @data(2, 4, 8)
    def test_good_coloring_frequency(self, r):
        trials = 300
        colors = num_colors(r)
        p = (2 * math.e) ** -math.sqrt(r / 8)
        margin = 3 * math.sqrt(p * (1 - p) / trials)
        for instance in range(20):
            n = 4 + instance % 3
            scores = random_multiscores(n, instance)
            start = Ordering(random_permutation(n, instance))
            best = brute_local_search(scores, start, 2, r,
                                      DistanceKind.INV).score
            good = sum(color_restricted_solve(
                scores, start, 2, r,
                Coloring.uniform(start, colors, make_rng(instance, i))
            ).score == best for i in range(trials))
            self.assertGreaterEqual(good / trials, p - margin)


class InversionsSolverTest(unittest.TestCase):
    def test_solve(self):
        solver = InversionsSolver()
        solver.initialize(Resources(), HParams(
            {'k': 1, 'radius': 1, 'repetitions': 16},
            InversionsSolver.default_configs()))
        result = solver.solve(SearchInstance('f1', fixture_f1()))
        self.assertEqual(result.score, 5.0)
        self.assertEqual(result.repetitions, 16)

    def test_negative_radius(self):
        with self.assertRaises(SolverConfigError):
            InversionsSolver().initialize(Resources(), HParams(
                {'radius': -1}, InversionsSolver.default_configs()))


if __name__ == '__main__':
    unittest.main()
