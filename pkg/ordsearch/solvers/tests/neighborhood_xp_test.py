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
Unit tests for the exhaustive insert and swap neighborhoods.
"""
import itertools
import unittest

from ddt import ddt, data, unpack
from texar.torch import HParams

from ordsearch.common.exception import (
    SolverConfigError, WorkBoundExceededError)
from ordsearch.common.resources import Resources
from ordsearch.data.instance import SearchInstance
from ordsearch.data.ordering import (
    DistanceKind, Ordering, insert_distance, swap_distance)
from ordsearch.data.synthetic import random_multiscores
from ordsearch.solvers.neighborhood_xp import (
    NeighborhoodSpec, XPLocalSearchSolver, check_work_bound,
    enumerate_insert_neighbors, enumerate_swap_neighbors,
    estimate_neighborhood_size, local_search_xp)
from ordsearch.solvers.oracle import brute_local_search
from ordsearch.utils.fixtures import fixture_f1, fixture_f2
from ordsearch.utils.random_utils import random_permutation
from ordsearch.utils.test import performance_test

INSERT = NeighborhoodSpec(DistanceKind.INSERT, 1)


@ddt
class EnumerateNeighborsTest(unittest.TestCase):
    def test_insert_example(self):
        neighbors = [o.sequence for o in
                     enumerate_insert_neighbors(Ordering([0, 1, 2]), 1)]
        self.assertEqual(neighbors[0], (0, 1, 2))
        self.assertEqual(set(neighbors), {(0, 1, 2), (1, 0, 2), (1, 2, 0),
                                          (0, 2, 1), (2, 0, 1)})
        self.assertEqual(len(neighbors), 5)

    @data(*itertools.product(range(1, 7), range(4)))
    @unpack
    def test_against_filtering(self, n, r):
        start = Ordering(random_permutation(n, n, r))
        for enumerate_neighbors, measure in (
                (enumerate_insert_neighbors, insert_distance),
                (enumerate_swap_neighbors, swap_distance)):
            neighbors = [o.sequence
                         for o in enumerate_neighbors(start, r)]
            expected = {sigma for sigma in itertools.permutations(range(n))
                        if measure(start.sequence, sigma) <= r}
            self.assertEqual(len(neighbors), len(set(neighbors)))
            self.assertEqual(set(neighbors), expected)
            self.assertEqual(neighbors[0], start.sequence)

    def test_radius_above_n(self):
        neighbors = list(enumerate_insert_neighbors(Ordering([1, 0]), 5))
        self.assertEqual(len(neighbors), 2)


@ddt
class LocalSearchXPTest(unittest.TestCase):
    def test_f1_insert(self):
        result = local_search_xp(fixture_f1(), Ordering([0, 1]), 1, INSERT)
        self.assertEqual(result.score, 5.0)
        self.assertEqual(result.ordering, Ordering([1, 0]))
        self.assertEqual(result.iterations, 2)
        self.assertEqual(result.diagnostics["neighbors"], 2)

    @data(0, 1)
    def test_f2_swap(self, r):
        spec = NeighborhoodSpec(DistanceKind.SWAP, r)
        result = local_search_xp(fixture_f2(), Ordering([2, 0, 1]), 0, spec)
        self.assertEqual(result.score, 4.0)
        self.assertEqual(result.ordering, Ordering([2, 0, 1]))

    def check_against_oracle(self, n, seeds):
        for seed in seeds:
            scores = random_multiscores(n, seed)
            start = Ordering(random_permutation(n, seed, 7))
            k = seed % 4
            for kind in (DistanceKind.INSERT, DistanceKind.SWAP):
                for r in range(4):
                    result = local_search_xp(scores, start, k,
                                             NeighborhoodSpec(kind, r))
                    expected = brute_local_search(scores, start, k, r, kind)
                    self.assertEqual(result.score, expected.score)

    @data(2, 3, 4, 5)
    def test_against_oracle(self, n):
        self.check_against_oracle(n, range(n * 10, n * 10 + 3))

    @performance_test
    def test_against_oracle_six(self):
        self.check_against_oracle(6, range(200))

    def test_workers(self):
        scores = random_multiscores(5, 3)
        start = Ordering(random_permutation(5, 3))
        spec = NeighborhoodSpec(DistanceKind.INSERT, 2)
        sequential = local_search_xp(scores, start, 2, spec)
        parallel = local_search_xp(scores, start, 2, spec, workers=2)
        self.assertEqual(sequential.dag, parallel.dag)
        self.assertEqual(sequential.iterations, parallel.iterations)


@ddt
class WorkBoundTest(unittest.TestCase):
    @data((10, DistanceKind.SWAP, 3, 1000), (6, DistanceKind.SWAP, 10, 720),
          (6, DistanceKind.INSERT, 4, 720), (4, DistanceKind.INSERT, 2, 16),
          (3, DistanceKind.SWAP, 0, 1))
    @unpack
    def test_estimate(self, n, kind, radius, expected):
        self.assertEqual(
            estimate_neighborhood_size(n, NeighborhoodSpec(kind, radius)),
            expected)

    def test_check(self):
        spec = NeighborhoodSpec(DistanceKind.INSERT, 8)
        with self.assertRaises(WorkBoundExceededError):
            check_work_bound(12, spec, 10 ** 8)
        check_work_bound(12, spec, 10 ** 8, force=True)
        check_work_bound(12, NeighborhoodSpec(DistanceKind.INSERT, 7),
                         10 ** 8)

    def test_small_instance_is_not_refused(self):
        check_work_bound(6, NeighborhoodSpec(DistanceKind.SWAP, 10), 720)
        with self.assertRaises(WorkBoundExceededError):
            check_work_bound(6, NeighborhoodSpec(DistanceKind.SWAP, 10), 719)

    @data((DistanceKind.INV, 1), (DistanceKind.INSERT, -1))
    @unpack
    def test_invalid_spec(self, kind, radius):
        with self.assertRaises(SolverConfigError):
            NeighborhoodSpec(kind, radius)


@ddt
class XPLocalSearchSolverTest(unittest.TestCase):
    def make_solver(self, **configs):
        solver = XPLocalSearchSolver()
        solver.initialize(Resources(), HParams(
            configs, XPLocalSearchSolver.default_configs()))
        return solver

    def test_solve(self):
        solver = self.make_solver(k=1, distance='insert', radius=1)
        result = solver.solve(SearchInstance('f1', fixture_f1()))
        self.assertEqual(result.score, 5.0)

    def test_refuses_large_neighborhoods(self):
        solver = self.make_solver(distance='swap', radius=3, work_bound=5)
        with self.assertRaises(WorkBoundExceededError):
            solver.solve(SearchInstance('f2', fixture_f2()))
        solver = self.make_solver(distance='swap', radius=3, work_bound=5,
                                  force=True)
        self.assertEqual(
            solver.solve(SearchInstance('f2', fixture_f2())).score, 4.0)

    @data('inv', 'invwin', 'tau')
    def test_invalid_distance(self, name):
        with self.assertRaises(SolverConfigError):
            self.make_solver(distance=name)


if __name__ == '__main__':
    unittest.main()
