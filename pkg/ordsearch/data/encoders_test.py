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
Unit tests for the weight encoders.
"""
import unittest

from ddt import ddt, data, unpack

from ordsearch.data.encoders import (
    encode_bounded_arcs, encode_bounded_indegree, encode_by_name)
from ordsearch.utils.fixtures import fixture_f1, fixture_f2


def weights(scores):
    return [[t.weight for t in scores.triples(v)] for v in range(scores.n)]


def unweighted(scores):
    return [[(t.parents, t.score) for t in scores.triples(v)]
            for v in range(scores.n)]


@ddt
class EncodersTest(unittest.TestCase):
    def test_bounded_arcs(self):
        self.assertEqual(weights(encode_bounded_arcs(fixture_f1())),
                         [[0, 1], [0, 1]])
        self.assertEqual(weights(encode_bounded_arcs(fixture_f2())),
                         [[0], [0, 1, 1], [0, 2]])

    @data(
        (1, [[0], [0, 0, 0], [0, 1]]),
        (2, [[0], [0, 0, 0], [0, 0]]),
        (0, [[0], [0, 1, 1], [0, 1]]),
    )
    @unpack
    def test_bounded_indegree(self, c, expected):
        self.assertEqual(weights(encode_bounded_indegree(fixture_f2(), c)),
                         expected)

    def test_keeps_parents_and_scores(self):
        scores = fixture_f2()
        for encoded in (encode_bounded_arcs(scores),
                        encode_bounded_indegree(scores, 1)):
            self.assertEqual(unweighted(encoded), unweighted(scores))

    def test_negative_bound(self):
        with self.assertRaises(ValueError):
            encode_bounded_indegree(fixture_f1(), -1)

    def test_by_name(self):
        self.assertEqual(
            weights(encode_by_name(fixture_f1(), "bounded-indegree:0")),
            [[0, 1], [0, 1]])
        self.assertEqual(
            encode_by_name(fixture_f2(), "bounded-arcs"),
            encode_bounded_arcs(fixture_f2()))
        with self.assertRaises(ValueError):
            encode_by_name(fixture_f1(), "bounded-degree:1")
        with self.assertRaises(ValueError):
            encode_by_name(fixture_f1(), "bounded-indegree:\u0661")


if __name__ == '__main__':
    unittest.main()
