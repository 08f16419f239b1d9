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
The reader for parent score files, in the GOBNILP (Jaakkola) format and its
weighted extension.

Unweighted grammar::

    <n>
    <name> <count>
    <score> <p> <parent_1> ... <parent_p>      (count lines)
    ...

The weighted grammar has an integer weight after the score::

    <score> <weight> <p> <parent_1> ... <parent_p>

Tokens are separated by spaces or tabs, records by LF or CRLF, and lines
starting with ``#`` are skipped.
"""
import logging
import math
import os
import re
from typing import Any, Dict, Iterator, List, Optional, Tuple, Union

from ordsearch.common.exception import (
    DuplicateVariableError, MissingEmptyParentSetError, OrderingMismatchError,
    ScoreFileError, UnknownParentError)
from ordsearch.data.encoders import encode_by_name
from ordsearch.data.instance import SearchInstance
from ordsearch.data.multiscores import MultiScores, ScoreTriple
from ordsearch.data.ordering import Ordering
from ordsearch.data.readers.base_reader import BaseReader
from ordsearch.utils.utils_io import dataset_path_iterator

__all__ = [
    "parse_scores",
    "parse_ordering",
    "ScoreFileReader",
]

logger = logging.getLogger(__name__)

_REAL = re.compile(r"[+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+)([eE][+-]?[0-9]+)?")
_COUNT = re.compile(r"[0-9]+")
_SEPARATOR = re.compile(r"[ \t]+")

Record = Tuple[int, List[str]]


def _records(text: Union[bytes, str]) -> Iterator[Record]:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ScoreFileError(f"The input is not UTF-8: {e}") from e
    for number, line in enumerate(text.split("\n"), start=1):
        line = line.rstrip("\r").strip(" \t")
        if not line or line.startswith("#"):
            continue
        yield number, _SEPARATOR.split(line)


def _count(token: str, line: int, what: str) -> int:
    if not _COUNT.fullmatch(token):
        raise ScoreFileError(
            f"Expected a non-negative integer {what}, found {token!r}.", line)
    return int(token)


def _score(token: str, line: int) -> float:
    if not _REAL.fullmatch(token):
        raise ScoreFileError(f"Expected a decimal score, found {token!r}.",
                             line)
    value = float(token)
    if not math.isfinite(value):
        raise ScoreFileError(f"The score {token} is out of range.", line)
    return value


class _Block:
    def __init__(self, name: str, line: int):
        self.name = name
        self.line = line
        # (line, score, weight, parent names)
        self.entries: List[Tuple[int, float, int, List[str]]] = []


def _read_blocks(text: Union[bytes, str], weighted: bool) -> List[_Block]:
    records = _records(text)
    first = next(records, None)
    if first is None:
        raise ScoreFileError("The input is empty.", 1)
    line, tokens = first
    if len(tokens) != 1:
        raise ScoreFileError("The first line must hold the variable count.",
                             line)
    n = _count(tokens[0], line, "variable count")

    blocks: List[_Block] = []
    last_line = line
    for _ in range(n):
        header = next(records, None)
        if header is None:
            raise ScoreFileError(
                f"Expected {n} variable blocks, found {len(blocks)}.",
                last_line)
        line, tokens = header
        if len(tokens) != 2:
            raise ScoreFileError(
                "A variable block starts with '<name> <count>'.", line)
        block = _Block(tokens[0], line)
        count = _count(tokens[1], line, "parent set count")
        last_line = line
        for _ in range(count):
            entry = next(records, None)
            if entry is None:
                raise ScoreFileError(
                    f"Variable {block.name!r} declares {count} parent sets, "
                    f"found {len(block.entries)}.", last_line)
            line, tokens = entry
            last_line = line
            block.entries.append(_read_entry(tokens, line, weighted))
        blocks.append(block)

    extra = next(records, None)
    if extra is not None:
        raise ScoreFileError(
            "Unexpected content after the last variable block.", extra[0])
    return blocks


def _read_entry(tokens: List[str], line: int, weighted: bool
                ) -> Tuple[int, float, int, List[str]]:
    fixed = 3 if weighted else 2
    if len(tokens) < fixed:
        raise ScoreFileError(
            "Expected '<score> <weight> <p> <parents>'" if weighted else
            "Expected '<score> <p> <parents>'", line)
    score = _score(tokens[0], line)
    weight = _count(tokens[1], line, "weight") if weighted else 0
    size = _count(tokens[fixed - 1], line, "parent count")
    parents = tokens[fixed:]
    if len(parents) != size:
        raise ScoreFileError(
            f"The parent count is {size} but {len(parents)} parents are "
            f"listed.", line)
    return line, score, weight, parents


def parse_scores(text: Union[bytes, str], weighted: bool = False,
                 assume_empty_score: Optional[float] = None) -> MultiScores:
    r"""Parses a score file into :class:`MultiScores`. Variables get dense
    ids in file order.

    Args:
        text: The file content.
        weighted (bool): Whether every score is followed by a weight. In
            unweighted mode all weights are 0.
        assume_empty_score (float, optional): If given, a variable without a
            weight-zero empty parent set gets the triple ``(∅, value, 0)``
            appended instead of failing.

    Returns:
        The multiscores.

    Raises:
        ScoreFileError: On a syntax error, with the line number.
        UnknownParentError: If a parent name is not declared.
        DuplicateVariableError: If a variable is declared twice.
        MissingEmptyParentSetError: If a variable lacks the empty parent set
            and ``assume_empty_score`` is ``None``.
    """
    blocks = _read_blocks(text, weighted)

    ids: Dict[str, int] = {}
    for v, block in enumerate(blocks):
        if block.name in ids:
            raise DuplicateVariableError(
                f"Variable {block.name!r} is declared twice.", block.line)
        ids[block.name] = v

    triples: List[List[ScoreTriple]] = []
    for v, block in enumerate(blocks):
        owned = []
        for line, score, weight, parent_names in block.entries:
            mask = 0
            for name in parent_names:
                if name not in ids:
                    raise UnknownParentError(
                        f"Unknown parent {name!r} of {block.name!r}.", line)
                if ids[name] == v:
                    raise ScoreFileError(
                        f"Variable {block.name!r} lists itself as a parent.",
                        line)
                if mask >> ids[name] & 1:
                    raise ScoreFileError(
                        f"Parent {name!r} is listed twice.", line)
                mask |= 1 << ids[name]
            owned.append(ScoreTriple(mask, score, weight))

        if not any(t.parents == 0 and t.weight == 0 for t in owned):
            if assume_empty_score is None:
                raise MissingEmptyParentSetError(
                    f"Variable {block.name!r} has no weight-zero score for "
                    f"the empty parent set; pass an assumed empty score to "
                    f"add one.", block.line)
            logger.info("Adding the empty parent set with score %s to %s",
                        assume_empty_score, block.name)
            owned.append(ScoreTriple(0, float(assume_empty_score), 0))
        triples.append(owned)

    return MultiScores([b.name for b in blocks], triples)


def parse_ordering(text: Union[bytes, str], scores: MultiScores) -> Ordering:
    r"""Parses an ordering file, one variable name per line.

    Raises:
        OrderingMismatchError: If the names are not the instance variables.
    """
    records = list(_records(text))
    if any(len(tokens) != 1 for _, tokens in records):
        raise OrderingMismatchError(
            "An ordering file lists one variable name per line.")
    names = [tokens[0] for _, tokens in records]
    return Ordering.from_names(names, scores)


class ScoreFileReader(BaseReader):
    r""":class:`ScoreFileReader` reads one score file, or every score file of
    a directory, into :class:`SearchInstance` objects named after the file
    stem.
    """

    @staticmethod
    def default_configs() -> Dict[str, Any]:
        r"""Configurations of the reader.

        - ``weighted``: read the weighted grammar.
        - ``assume_empty_score``: score of an added empty parent set when a
          variable lacks one; missing empty sets are errors if ``None``.
        - ``encoding``: weight encoder applied after parsing,
          ``bounded-arcs`` or ``bounded-indegree:<c>``.
        - ``file_extension``: the suffix of score files in a directory.
        - ``ordering_path``: a file with the start ordering, one name per
          line; file order if ``None``.
        """
        return {
            'weighted': False,
            'assume_empty_score': None,
            'encoding': None,
            'file_extension': '.scores',
            'ordering_path': None,
        }

    def _collect(self, data_source: str) -> Iterator[str]:  # type: ignore
        if os.path.isdir(data_source):
            yield from dataset_path_iterator(
                data_source, self.configs.file_extension)
        else:
            yield data_source

    def _cache_key_function(self, file_path: str) -> str:
        return os.path.basename(file_path) + ".json"

    def _parse_instance(self, file_path: str) -> Iterator[SearchInstance]:
        with open(file_path, "rb") as f:
            text = f.read()
        scores = parse_scores(text, self.configs.weighted,
                              self.configs.assume_empty_score)
        if self.configs.encoding:
            scores = encode_by_name(scores, self.configs.encoding)

        name = os.path.splitext(os.path.basename(file_path))[0]
        logger.info("Read %s: %d variables, %d triples", name, scores.n,
                    scores.num_triples)
        ordering = None
        if self.configs.ordering_path is not None:
            with open(self.configs.ordering_path, "rb") as f:
                ordering = parse_ordering(f.read(), scores)
        yield SearchInstance(name, scores, ordering)
