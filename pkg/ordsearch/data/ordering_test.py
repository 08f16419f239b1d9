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
Unit tests for orderings and the ordering distances.
"""
import itertools
import unittest

from ddt import ddt, data, unpack

from ordsearch.common.exception import OrderingMismatchError
from ordsearch.data.ordering import (
    DistanceKind, Ordering, distance, equal_content_blocks, insert_distance,
    invwin_distance, kendall_tau, swap_distance, win_distance)
from ordsearch.utils.fixtures import fixture_f2
from ordsearch.utils.test import performance_test

A, B, C, D = 0, 1, 2, 3


def discordant_pairs(tau, sigma):
    position = {v: i for i, v in enumerate(sigma)}
    return sum(1 for u, v in itertools.combinations(tau, 2)
               if position[u] > position[v])


def brute_invwin(tau, sigma):
    n = len(tau)
    best = None
    for cuts in itertools.product([False, True], repeat=n - 1):
        bounds = [0] + [i + 1 for i, cut in enumerate(cuts) if cut] + [n]
        width = 0
        for a, b in zip(bounds, bounds[1:]):
            if set(tau[a:b]) != set(sigma[a:b]):
                break
            width = max(width, discordant_pairs(tau[a:b], sigma[a:b]))
        else:
            if best is None or width < best:
                best = width
    return best


@ddt
class OrderingTest(unittest.TestCase):
    def test_positions(self):
        ordering = Ordering([2, 0, 1])
        self.assertEqual(ordering.position(2), 0)
        self.assertEqual(ordering.prefix_mask(2), 0b101)
        self.assertEqual(ordering.predecessors(1), 0b101)
        self.assertEqual(ordering.predecessors(2), 0)
        self.assertEqual(ordering[1:], (0, 1))

    def test_edits(self):
        ordering = Ordering([0, 1, 2, 3])
        self.assertEqual(ordering.insert(0, 3), Ordering([1, 2, 3, 0]))
        self.assertEqual(ordering.insert(3, 1), Ordering([0, 3, 1, 2]))
        self.assertEqual(ordering.swap(0, 3), Ordering([3, 1, 2, 0]))
        self.assertEqual(ordering.replace_window(1, [2, 1]),
                         Ordering([0, 2, 1, 3]))
        with self.assertRaises(OrderingMismatchError):
            ordering.replace_window(1, [3, 1])

    @data([0, 0, 1], [1, 2], [0, 2, 3])
    def test_not_a_permutation(self, sequence):
        with self.assertRaises(OrderingMismatchError):
            Ordering(sequence)

    def test_names(self):
        scores = fixture_f2()
        ordering = Ordering.from_names(['c', 'a', 'b'], scores)
        self.assertEqual(ordering.sequence, (2, 0, 1))
        self.assertEqual(ordering.names(scores), ['c', 'a', 'b'])
        with self.assertRaises(OrderingMismatchError):
            Ordering.from_names(['c', 'a'], scores)
        with self.assertRaises(OrderingMismatchError):
            Ordering.from_names(['c', 'a', 'z'], scores)

    @data(
        (kendall_tau, (A, B, C), (A, B, C), 0),
        (kendall_tau, (A, B, C), (B, A, C), 1),
        (kendall_tau, (A, B, C, D), (D, B, C, A), 5),
        (insert_distance, (A, B, C), (A, B, C), 0),
        (insert_distance, (A, B, C, D), (D, B, C, A), 2),
        (insert_distance, (A, B, C), (C, A, B), 1),
        (swap_distance, (A, B, C, D), (A, B, C, D), 0),
        (swap_distance, (A, B, C, D), (D, B, C, A), 1),
        (swap_distance, (A, B, C), (C, A, B), 2),
        (win_distance, (A, B, C, D), (A, B, C, D), 0),
        (win_distance, (A, B, C, D), (D, B, C, A), 3),
        (win_distance, (A, B, C, D), (A, C, B, D), 1),
        (invwin_distance, (A, B, C, D), (A, B, C, D), 0),
        (invwin_distance, (A, B, C, D), (B, A, D, C), 1),
        (invwin_distance, (A, B, C, D), (D, B, C, A), 5),
    )
    @unpack
    def test_distance_examples(self, func, tau, sigma, expected):
        self.assertEqual(func(tau, sigma), expected)

    def test_distance_by_kind(self):
        self.assertEqual(distance(DistanceKind.INV, (A, B, C, D),
                                  (D, B, C, A)), 5)
        self.assertEqual(distance(DistanceKind.WIN, Ordering([0, 1, 2]),
                                  Ordering([0, 2, 1])), 1)

    def test_equal_content_blocks(self):
        self.assertEqual(equal_content_blocks((A, B, C, D), (B, A, D, C)),
                         [(0, 1), (2, 3)])
        self.assertEqual(equal_content_blocks((A, B, C), (A, B, C)),
                         [(0, 0), (1, 1), (2, 2)])

    @data(kendall_tau, insert_distance, swap_distance, win_distance,
          invwin_distance)
    def test_mismatch(self, func):
        with self.assertRaises(OrderingMismatchError):
            func((A, B, C), (A, B))
        with self.assertRaises(OrderingMismatchError):
            func((A, B, C), (A, B, D))

    def check_distance_laws(self, n):
        for tau in itertools.permutations(range(n)):
            for sigma in itertools.permutations(range(n)):
                tau_distance = kendall_tau(tau, sigma)
                self.assertEqual(tau_distance, discordant_pairs(tau, sigma))
                self.assertLessEqual(invwin_distance(tau, sigma),
                                     tau_distance)
                self.assertLessEqual(swap_distance(tau, sigma), tau_distance)
                self.assertLessEqual(insert_distance(tau, sigma),
                                     max(0, n - 1))
                for kind in DistanceKind:
                    self.assertEqual(distance(kind, tau, sigma),
                                     distance(kind, sigma, tau))
                    if tau == sigma:
                        self.assertEqual(distance(kind, tau, sigma), 0)

    @data(1, 2, 3, 4, 5)
    def test_distance_laws(self, n):
        self.check_distance_laws(n)

    @performance_test
    def test_distance_laws_six(self):
        self.check_distance_laws(6)

    @data(3, 4, 5)
    def test_invwin_against_partitions(self, n):
        for tau in itertools.permutations(range(n)):
            sigma = tuple(range(n))
            self.assertEqual(invwin_distance(tau, sigma),
                             brute_invwin(tau, sigma))


if __name__ == '__main__':
    unittest.main()
