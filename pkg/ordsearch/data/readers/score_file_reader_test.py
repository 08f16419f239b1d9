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
Unit tests for the score file reader.
"""
import os
import shutil
import tempfile
import unittest

from ddt import ddt, data, unpack
from texar.torch import HParams

from ordsearch.common.exception import (
    DuplicateVariableError, MissingEmptyParentSetError, OrderingMismatchError,
    ScoreFileError, UnknownParentError)
from ordsearch.common.resources import Resources
from ordsearch.data.multiscores import ScoreTriple
from ordsearch.data.ordering import Ordering
from ordsearch.data.readers import (
    ScoreFileReader, parse_ordering, parse_scores)
from ordsearch.utils.fixtures import fixture_f1, fixture_f2

SAMPLES = os.path.abspath(os.path.join(
    os.path.dirname(__file__), *([os.pardir] * 3), 'data_samples', 'scores'))


@ddt
class ParseScoresTest(unittest.TestCase):
    def test_weighted(self):
        text = "2\na 2\n0 0 0\n5 1 1 b\nb 2\n0 0 0\n3 0 1 a\n"
        self.assertEqual(parse_scores(text, weighted=True), fixture_f1())

    def test_unweighted(self):
        scores = parse_scores(b"2\nx 1\n-10.5 0\ny 2\n-12 0\n-3.25 1 x\n")
        self.assertEqual(scores.names, ('x', 'y'))
        self.assertEqual(scores.triples(1),
                         (ScoreTriple(0, -12.0, 0), ScoreTriple(1, -3.25, 0)))

    def test_comments_tabs_and_crlf(self):
        text = "# comment\r\n2\r\n\r\na 1\r\n0\t0\r\nb  2\r\n0 0\r\n1 1 a\r\n"
        scores = parse_scores(text)
        self.assertEqual(scores.triple(1, 1), ScoreTriple(1, 1.0, 0))

    @data(("1e3", 1000.0), ("-.5", -0.5), ("+2.", 2.0), ("7E-1", 0.7))
    @unpack
    def test_score_forms(self, token, value):
        scores = parse_scores(f"1\na 2\n0 0\n{token} 0\n")
        self.assertEqual(scores.triple(0, 1).score, value)

    @data(
        ("2\na 1\n0 0\nb 2\n0 0\n1 1 z\n", UnknownParentError, 6),
        ("2\na 1\n0 0\na 1\n0 0\n", DuplicateVariableError, 4),
        ("2\na 1\n0 0\nb 1\n1 1 a\n", MissingEmptyParentSetError, 4),
        ("1\na 1\nx 0\n", ScoreFileError, 3),
        ("1\na 2\nnan 0\n0 0\n", ScoreFileError, 3),
        ("1\na 1\n0 1\n", ScoreFileError, 3),
        ("1\na 1\n0 0\nextra\n", ScoreFileError, 4),
        ("1\na 2\n0 0\n", ScoreFileError, 3),
        ("2\na 2\n0 0\n1 1 a\nb 1\n0 0\n", ScoreFileError, 4),
        ("3\na 1\n0 0\nb 1\n0 0\nc 2\n0 0\n1 2 a a\n", ScoreFileError, 8),
        ("2\na 1\n0 0\n", ScoreFileError, 3),
        ("1 2\n", ScoreFileError, 1),
        ("\u0661\na \u0661\n-\u0661.\u0665 \u0660\n", ScoreFileError, 1),
        ("1\na \u0662\n0 0\n\u0661 0\n", ScoreFileError, 2),
    )
    @unpack
    def test_errors(self, text, error, line):
        with self.assertRaises(error) as context:
            parse_scores(text)
        self.assertEqual(context.exception.line, line)
        self.assertTrue(str(context.exception).startswith(f"line {line}: "))

    def test_weight_must_be_integer(self):
        with self.assertRaises(ScoreFileError):
            parse_scores("1\na 1\n0 0.5 0\n", weighted=True)

    def test_assume_empty_score(self):
        scores = parse_scores("2\na 1\n0 0\nb 1\n1 1 a\n",
                              assume_empty_score=-7)
        self.assertEqual(scores.triples(1),
                         (ScoreTriple(1, 1.0, 0), ScoreTriple(0, -7.0, 0)))

    def test_parse_ordering(self):
        scores = fixture_f2()
        self.assertEqual(parse_ordering("c\n\nb\r\na\n", scores),
                         Ordering([2, 1, 0]))
        with self.assertRaises(OrderingMismatchError):
            parse_ordering("c\nb\n", scores)
        with self.assertRaises(OrderingMismatchError):
            parse_ordering("c b\na\n", scores)


class ScoreFileReaderTest(unittest.TestCase):
    def setUp(self):
        self.cache_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.cache_dir)

    def make_reader(self, **configs):
        reader = ScoreFileReader(cache_directory=self.cache_dir)
        reader.initialize(Resources(), HParams(
            {'weighted': True, **configs}, ScoreFileReader.default_configs()))
        return reader

    def test_directory(self):
        instances = list(self.make_reader().iter(SAMPLES))
        self.assertEqual([i.name for i in instances], ['f1', 'f2'])
        self.assertEqual(instances[0].scores, fixture_f1())
        self.assertEqual(instances[1].scores, fixture_f2())
        self.assertEqual(instances[1].ordering, Ordering([0, 1, 2]))

    def test_ordering_and_encoding(self):
        reader = self.make_reader(
            ordering_path=os.path.join(SAMPLES, 'f2.order'),
            encoding='bounded-arcs')
        instance, = reader.iter(os.path.join(SAMPLES, 'f2.scores'))
        self.assertEqual(instance.ordering, Ordering([2, 0, 1]))
        self.assertEqual(instance.scores.triple(1, 1).weight, 1)

    def test_cache(self):
        path = os.path.join(SAMPLES, 'f1.scores')
        parsed = list(self.make_reader().iter(path))
        self.assertTrue(os.path.exists(
            os.path.join(self.cache_dir, 'f1.scores.json')))

        reader = ScoreFileReader(from_cache=True,
                                 cache_directory=self.cache_dir)
        cached = list(reader.iter(path))
        self.assertEqual(len(cached), 1)
        self.assertEqual(cached[0].scores, parsed[0].scores)
        self.assertEqual(cached[0].ordering, parsed[0].ordering)


if __name__ == '__main__':
    unittest.main()
