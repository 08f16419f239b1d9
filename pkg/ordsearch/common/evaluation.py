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
Defines the Evaluator interface, used to aggregate solver results.
"""
from abc import abstractmethod
from typing import Any, Optional

from texar.torch import HParams

from ordsearch.pipeline_component import PipelineComponent

__all__ = [
    "Evaluator",
]


class Evaluator(PipelineComponent):
    r"""The evaluator consumes search results one by one and summarizes
    them, for example the restart statistics of hill climbing.

    Args:
        config: The configuration of the evaluator.
    """
    def __init__(self, config: Optional[HParams] = None):
        self.config: Optional[HParams] = config

    @abstractmethod
    def consume_next(self, result: Any):
        r"""Consume the next result.

        Args:
            result: A result produced by a solver.
        """
        raise NotImplementedError

    @abstractmethod
    def get_result(self) -> Any:
        r"""The evaluator gathers the results and the summary can be obtained
        here.
        """
        raise NotImplementedError
