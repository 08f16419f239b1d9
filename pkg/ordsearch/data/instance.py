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
The unit of work passed through the search pipeline.
"""
from typing import Optional

from ordsearch.data.multiscores import MultiScores
from ordsearch.data.ordering import Ordering

__all__ = [
    "SearchInstance",
]


class SearchInstance:
    r"""A named instance together with the ordering the search starts from.

    Args:
        name (str): The instance name, usually the score file stem.
        scores: The multiscores.
        ordering (optional): The start ordering. File order if ``None``.
    """

    def __init__(self, name: str, scores: MultiScores,
                 ordering: Optional[Ordering] = None):
        self.name = name
        self.scores = scores
        self.ordering = (ordering if ordering is not None
                         else Ordering.identity(scores.n))

    def __repr__(self) -> str:
        return f"SearchInstance(name={self.name!r}, scores={self.scores!r})"
