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
Base class for solvers.
"""
import logging
import time
from abc import abstractmethod, ABC
from typing import Any, Dict, Optional

from texar.torch import HParams

from ordsearch.common.exception import SolverConfigError
from ordsearch.common.resources import Resources
from ordsearch.data.instance import SearchInstance
from ordsearch.data.scored_dag import SearchResult
from ordsearch.pipeline_component import PipelineComponent
from ordsearch.utils.utils import get_full_module_name

__all__ = [
    "BaseSolver",
]

logger = logging.getLogger(__name__)


class BaseSolver(PipelineComponent, ABC):
    r"""Base class inherited by all solvers. A solver turns a
    :class:`SearchInstance` into a :class:`SearchResult`.
    """

    def __init__(self):
        self.component_name = get_full_module_name(self)
        self.configs: HParams = HParams(None, self.default_configs())
        self._check_configs()

    @staticmethod
    def default_configs() -> Dict[str, Any]:
        r"""Returns a `dict` of configurations of the solver with default
        values. Used to replace the missing values of input `configs` during
        pipeline construction.

        - ``k``: the weight budget.
        - ``seed``: the seed of all random choices.
        - ``workers``: the number of worker processes.
        """
        return {
            'k': 0,
            'seed': 0,
            'workers': 1,
        }

    def initialize(self, resource: Resources, configs: Optional[HParams]):
        if configs is not None:
            self.configs = configs
        self._check_configs()

    def _check_configs(self):
        if self.configs.k < 0:
            raise SolverConfigError(
                f"The weight budget must be non-negative, got "
                f"{self.configs.k}.")
        if self.configs.workers < 1:
            raise SolverConfigError(
                f"At least one worker is needed, got {self.configs.workers}.")

    def solve(self, instance: SearchInstance) -> SearchResult:
        logger.info("%s solving %s with %d variables", self.component_name,
                    instance.name, instance.scores.n)
        start = time.perf_counter()
        result = self._solve(instance)
        logger.info("%s finished %s in %.3fs, score %r", self.component_name,
                    instance.name, time.perf_counter() - start, result.score)
        return result

    @abstractmethod
    def _solve(self, instance: SearchInstance) -> SearchResult:
        r"""The main function of the solver.

        Args:
            instance: The instance with its start ordering.

        Returns:
            The best solution found.
        """
        raise NotImplementedError
