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
Unit tests for the result and score file writers.
"""
import json
import os
import shutil
import tempfile
import unittest

import jsonschema
from ddt import ddt, data, unpack
from texar.torch import HParams

from ordsearch.common.resources import Resources
from ordsearch.data.instance import SearchInstance
from ordsearch.data.ordering import Ordering
from ordsearch.data.readers import parse_scores
from ordsearch.data.scored_dag import ScoredDag, SearchResult
from ordsearch.data.synthetic import bic_like_multiscores, random_multiscores
from ordsearch.data.writers import (
    ResultWriter, result_to_json, validate_result_json, write_restart_csv,
    write_result, write_scores)
from ordsearch.solvers.hillclimb import RestartStats
from ordsearch.utils.fixtures import fixture_f1, fixture_f2


@ddt
class WritersTest(unittest.TestCase):
    def setUp(self):
        self.f1 = fixture_f1()
        # The optimum of F1 at k=1: a takes {b}.
        self.result = SearchResult(
            ScoredDag.from_choices(self.f1, [1, 0], Ordering([1, 0])),
            seed=3, repetitions=2, iterations=7, diagnostics={"colors": 3})

    def test_text(self):
        self.assertEqual(write_result(self.f1, self.result, "text"),
                         "a <- b\nb <-\nscore 5.0\nweight 1\nordering b a\n")

    def test_dot(self):
        self.assertEqual(write_result(self.f1, self.result, "dot"),
                         "digraph {\n  a;\n  b;\n  b -> a;\n}\n")

    def test_dot_quotes_names(self):
        scores = parse_scores("2\nx-1 1\n0 0\ny 2\n0 0\n1 1 x-1\n")
        dag = ScoredDag.from_choices(scores, [0, 1])
        self.assertIn('"x-1" -> y;', write_result(scores, dag, "dot"))

    def test_json(self):
        document = json.loads(write_result(self.f1, self.result, "json"))
        self.assertEqual(document, result_to_json(self.f1, self.result))
        self.assertEqual(document["arcs"], [["b", "a"]])
        self.assertEqual(document["ordering"], ["b", "a"])
        self.assertEqual(document["score"], 5.0)
        validate_result_json(document)

    def test_json_bare_dag(self):
        dag = ScoredDag.from_choices(self.f1, [0, 1])
        document = result_to_json(self.f1, dag)
        self.assertIsNone(document["ordering"])
        self.assertIsNone(document["seed"])
        validate_result_json(document)

    @data("score", "arcs", "diagnostics")
    def test_schema_rejects_missing_keys(self, key):
        document = result_to_json(self.f1, self.result)
        del document[key]
        with self.assertRaises(jsonschema.exceptions.ValidationError):
            validate_result_json(document)

    def test_unknown_format(self):
        with self.assertRaises(ValueError):
            write_result(self.f1, self.result, "yaml")

    def test_write_scores(self):
        scores = fixture_f2()
        text = write_scores(scores, weighted=True)
        self.assertTrue(text.startswith("3\na 1\n0.0 0 0\nb 3\n"))
        self.assertEqual(parse_scores(text, weighted=True), scores)
        with self.assertRaises(ValueError):
            write_scores(scores)

    @data(*range(6))
    def test_random_round_trip(self, seed):
        scores = random_multiscores(2 + seed, seed)
        parsed = parse_scores(write_scores(scores, weighted=True),
                              weighted=True)
        self.assertEqual(parsed, scores)
        again = parse_scores(write_scores(parsed, weighted=True),
                             weighted=True)
        self.assertEqual(again, parsed)

    @data(*range(4))
    def test_bic_like_round_trip(self, seed):
        scores = bic_like_multiscores(5 + seed, seed)
        parsed = parse_scores(write_scores(scores))
        self.assertEqual(parsed, scores)
        for v in range(scores.n):
            self.assertEqual([t.score for t in parsed.triples(v)],
                             [t.score for t in scores.triples(v)])

    @data(
        ("2\na 3\n0 0\n1.5 1 b\n1.5 1 b\nb 1\n0 0\n", None),
        ("2\na 2\n0.1 1 b\n0.1 1 b\nb 1\n-0.3 0\n", -0.7),
        ("1\nx 1\n2.5 0\n", None),
    )
    @unpack
    def test_file_round_trip(self, text, empty):
        parsed = parse_scores(text, assume_empty_score=empty)
        self.assertEqual(parse_scores(write_scores(parsed)), parsed)

    def test_injected_empty_set_is_kept(self):
        parsed = parse_scores("1\nx 1\n-2.0 1 0\n", weighted=True,
                              assume_empty_score=-0.7)
        text = write_scores(parsed, weighted=True)
        self.assertEqual(text, "1\nx 2\n-2.0 1 0\n-0.7 0 0\n")
        self.assertEqual(parse_scores(text, weighted=True), parsed)

    def test_restart_csv(self):
        stats = RestartStats("f2", 2)
        stats.finals = [4.0, 2.0]
        stats.iterations = [1, 3]
        self.assertEqual(write_restart_csv([stats]).splitlines(), [
            "instance,r,restart,score,iterations",
            "f2,2,0,4.0,1",
            "f2,2,1,2.0,3",
            "f2,2,avg,3.0,4",
            "f2,2,max,4.0,3",
        ])


class ResultWriterTest(unittest.TestCase):
    def setUp(self):
        self.output_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.output_dir)

    def test_write(self):
        writer = ResultWriter()
        writer.initialize(Resources(), HParams(
            {'format': 'dot', 'output_dir': self.output_dir},
            ResultWriter.default_configs()))
        scores = fixture_f1()
        result = SearchResult(ScoredDag.from_choices(scores, [0, 1]))
        rendered = writer.write(SearchInstance("f1", scores), result)

        self.assertEqual(writer.outputs, [rendered])
        with open(os.path.join(self.output_dir, "f1.dot")) as f:
            self.assertEqual(f.read(), rendered)

    def test_unknown_format(self):
        with self.assertRaises(ValueError):
            ResultWriter().initialize(Resources(), HParams(
                {'format': 'csv'}, ResultWriter.default_configs()))


if __name__ == '__main__':
    unittest.main()
