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
Writers for search results and score files.
"""
import csv
import io
import json
import logging
import os
import re
from typing import Any, Dict, Iterable, List, Optional, Union

import jsonschema
from texar.torch import HParams

from ordsearch.common.resources import Resources
from ordsearch.data.instance import SearchInstance
from ordsearch.data.multiscores import MultiScores
from ordsearch.data.scored_dag import ScoredDag, SearchResult
from ordsearch.pipeline_component import PipelineComponent
from ordsearch.utils.utils_io import maybe_create_dir

__all__ = [
    "RESULT_FORMATS",
    "write_scores",
    "write_result",
    "result_to_json",
    "validate_result_json",
    "write_restart_csv",
    "ResultWriter",
]

logger = logging.getLogger(__name__)

RESULT_FORMATS = ("text", "json", "dot")

_SCHEMA_PATH = os.path.join(os.path.dirname(__file__), "result_schema.json")
_DOT_ID = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def write_scores(scores: MultiScores, weighted: bool = False) -> str:
    r"""Serializes ``scores`` in the score file grammar read by
    :func:`~ordsearch.data.readers.parse_scores`. Scores are written with
    ``repr`` so that they read back to the same floats.

    Raises:
        ValueError: If ``weighted`` is ``False`` and a weight is not 0.
    """
    if not weighted and scores.max_weight > 0:
        raise ValueError(
            "The unweighted format cannot store non-zero weights.")
    lines = [str(scores.n)]
    for v in range(scores.n):
        triples = scores.triples(v)
        lines.append(f"{scores.name_of(v)} {len(triples)}")
        for t in triples:
            parents = [scores.name_of(u) for u in t.parent_ids()]
            fields = [repr(t.score)]
            if weighted:
                fields.append(str(t.weight))
            fields.append(str(len(parents)))
            lines.append(" ".join(fields + parents))
    return "\n".join(lines) + "\n"


def _as_result(result: Union[SearchResult, ScoredDag]) -> SearchResult:
    return result if isinstance(result, SearchResult) else SearchResult(result)


def result_to_json(scores: MultiScores,
                   result: Union[SearchResult, ScoredDag]) -> Dict[str, Any]:
    r"""The JSON document of a result, see ``result_schema.json``."""
    result = _as_result(result)
    dag = result.dag
    return {
        "variables": list(scores.names),
        "arcs": [[scores.name_of(u), scores.name_of(v)]
                 for u, v in dag.arcs(scores)],
        "score": dag.score,
        "weight": dag.weight,
        "ordering": (dag.ordering.names(scores)
                     if dag.ordering is not None else None),
        "seed": result.seed,
        "repetitions": result.repetitions,
        "iterations": result.iterations,
        "diagnostics": result.diagnostics,
    }


def validate_result_json(document: Dict[str, Any]):
    r"""Validates a result document against ``result_schema.json``.

    Raises:
        jsonschema.exceptions.ValidationError: If the document is invalid.
    """
    with open(_SCHEMA_PATH, "r") as f:
        schema = json.load(f)
    jsonschema.Draft6Validator(schema).validate(document)


def _text(scores: MultiScores, result: SearchResult) -> str:
    dag = result.dag
    lines = []
    for v in range(scores.n):
        parents = ",".join(scores.name_of(u) for u in
                           scores.triple(v, dag.choices[v]).parent_ids())
        lines.append(f"{scores.name_of(v)} <- {parents}".rstrip())
    lines.append(f"score {dag.score!r}")
    lines.append(f"weight {dag.weight}")
    if dag.ordering is not None:
        lines.append("ordering " + " ".join(dag.ordering.names(scores)))
    return "\n".join(lines) + "\n"


def _dot_id(name: str) -> str:
    if _DOT_ID.fullmatch(name):
        return name
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _dot(scores: MultiScores, result: SearchResult) -> str:
    lines = ["digraph {"]
    lines.extend(f"  {_dot_id(name)};" for name in scores.names)
    lines.extend(
        f"  {_dot_id(scores.name_of(u))} -> {_dot_id(scores.name_of(v))};"
        for u, v in result.dag.arcs(scores))
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_result(scores: MultiScores, result: Union[SearchResult, ScoredDag],
                 fmt: str = "text") -> str:
    r"""Renders a result.

    Args:
        scores: The instance, for the variable names.
        result: A search result, or a bare scored DAG.
        fmt (str): ``text`` writes one ``child <- parent,parent`` line per
            variable and the totals; ``json`` writes the document of
            :func:`result_to_json`; ``dot`` writes a Graphviz digraph.

    Returns:
        The rendered result.
    """
    result = _as_result(result)
    if fmt == "text":
        return _text(scores, result)
    if fmt == "json":
        return json.dumps(result_to_json(scores, result), sort_keys=True,
                          indent=2) + "\n"
    if fmt == "dot":
        return _dot(scores, result)
    raise ValueError(f"Unknown result format {fmt!r}.")


def write_restart_csv(tables: Iterable[Any]) -> str:
    r"""Renders restart statistics as CSV with the columns ``instance, r,
    restart, score, iterations``: one row per restart, then an ``avg`` and
    a ``max`` row for every (instance, radius).

    Args:
        tables: :class:`~ordsearch.solvers.hillclimb.RestartStats` objects.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["instance", "r", "restart", "score", "iterations"])
    for stats in tables:
        for idx, (score, iterations) in enumerate(
                zip(stats.finals, stats.iterations)):
            writer.writerow([stats.instance, stats.radius, idx, repr(score),
                             iterations])
        writer.writerow([stats.instance, stats.radius, "avg",
                         repr(stats.average), sum(stats.iterations)])
        writer.writerow([stats.instance, stats.radius, "max",
                         repr(stats.maximum), max(stats.iterations)])
    return buffer.getvalue()


class ResultWriter(PipelineComponent):
    r"""Renders every result of the pipeline. With an ``output_dir`` the
    result of instance ``name`` is written to ``<output_dir>/<name>.<fmt>``;
    the rendered strings are always kept in :attr:`outputs`.
    """

    def __init__(self):
        self.configs: HParams = HParams(None, self.default_configs())
        self.outputs: List[str] = []

    @staticmethod
    def default_configs() -> Dict[str, Any]:
        return {
            'format': 'text',
            'output_dir': None,
        }

    def initialize(self, resource: Resources, configs: Optional[HParams]):
        if configs is not None:
            self.configs = configs
        if self.configs.format not in RESULT_FORMATS:
            raise ValueError(
                f"Unknown result format {self.configs.format!r}.")
        if self.configs.output_dir is not None:
            maybe_create_dir(self.configs.output_dir)

    def write(self, instance: SearchInstance, result: SearchResult) -> str:
        rendered = write_result(instance.scores, result, self.configs.format)
        self.outputs.append(rendered)
        if self.configs.output_dir is not None:
            path = os.path.join(self.configs.output_dir,
                                f"{instance.name}.{self.configs.format}")
            logger.info("Writing result to %s", path)
            with open(path, "w") as f:
                f.write(rendered)
        return rendered
