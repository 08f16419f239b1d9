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
The search pipeline: a reader produces instances, a solver solves each of
them, and an optional writer renders the results.
"""
import logging
from typing import Any, Dict, Iterator, Optional, Tuple, Union

import yaml
from texar.torch.hyperparams import HParams

from ordsearch.common.resources import Resources
from ordsearch.data.instance import SearchInstance
from ordsearch.data.readers.base_reader import BaseReader
from ordsearch.data.scored_dag import SearchResult
from ordsearch.data.writers import ResultWriter
from ordsearch.solvers.base import BaseSolver
from ordsearch.utils import create_class_with_kwargs

logger = logging.getLogger(__name__)

__all__ = [
    "SearchPipeline"
]

ConfigType = Optional[Union[HParams, Dict[str, Any]]]


class SearchPipeline:
    r"""This controls the main search flow. Each instance read by the reader
    is registered in :attr:`resource` under ``"instance_name"``, solved by
    the solver, and handed to the writer if there is one.
    """

    def __init__(self, resource: Optional[Resources] = None):
        self._reader: BaseReader
        self._reader_config: Optional[HParams] = None
        self._solver: BaseSolver
        self._solver_config: Optional[HParams] = None
        self._writer: Optional[ResultWriter] = None
        self._writer_config: Optional[HParams] = None

        if resource is None:
            self.resource = Resources()
        else:
            self.resource = resource

    def init_from_config_path(self, config_path: str):
        r"""Read the configurations from the YAML file ``config_path`` and
        build the pipeline with them.
        """
        with open(config_path) as f:
            configs = yaml.safe_load(f)
        self.init_from_config(configs)

    def init_from_config(self, configs: Dict):
        r"""Initialize the pipeline with the configurations. ``Reader`` and
        ``Solver`` are required, ``Writer`` is optional; each names the
        component ``type`` and may give ``kwargs`` for its constructor and
        ``hparams`` (``config_path`` and ``overwrite_configs``).

        Args:
            configs: The configurations used to create the pipeline.
        """
        for key in ("Reader", "Solver"):
            if key not in configs or configs[key] is None:
                raise KeyError(f"No {key.lower()} in the configuration")

        reader, reader_hparams = self._create(configs["Reader"])
        self.set_reader(reader, reader_hparams)  # type: ignore

        solver, solver_hparams = self._create(configs["Solver"])
        self.set_solver(solver, solver_hparams)  # type: ignore

        if configs.get("Writer") is not None:
            writer, writer_hparams = self._create(configs["Writer"])
            self.set_writer(writer, writer_hparams)  # type: ignore

        self.initialize()

    @staticmethod
    def _create(component_config: Dict) -> Tuple[object, HParams]:
        return create_class_with_kwargs(
            class_name=component_config["type"],
            class_args=component_config.get("kwargs", {}),
            h_params=component_config.get("hparams", {}))

    def set_reader(self, reader: BaseReader, config: ConfigType = None):
        self._reader = reader
        self._reader_config = HParams(config, reader.default_configs())

    def set_solver(self, solver: BaseSolver, config: ConfigType = None):
        self._solver = solver
        self._solver_config = HParams(config, solver.default_configs())

    def set_writer(self, writer: ResultWriter, config: ConfigType = None):
        self._writer = writer
        self._writer_config = HParams(config, writer.default_configs())

    @property
    def solver(self) -> BaseSolver:
        return self._solver

    @property
    def writer(self) -> Optional[ResultWriter]:
        return self._writer

    def initialize(self):
        self._reader.initialize(self.resource, self._reader_config)
        self._solver.initialize(self.resource, self._solver_config)
        if self._writer is not None:
            self._writer.initialize(self.resource, self._writer_config)

    def process_dataset(self, *args, **kwargs
                        ) -> Iterator[Tuple[SearchInstance, SearchResult]]:
        r"""Solves every instance of the data source; the arguments are
        passed to the reader. The components are notified through
        :meth:`finish` once the source is exhausted.
        """
        for instance in self._reader.iter(*args, **kwargs):
            self.resource.update(instance_name=instance.name)
            result = self._solver.solve(instance)
            if self._writer is not None:
                self._writer.write(instance, result)
            yield instance, result
        self.finish()

    def process(self, *args, **kwargs
                ) -> Tuple[SearchInstance, SearchResult]:
        r"""Solves only the first instance of the data source.
        """
        for instance in self._reader.iter(*args, **kwargs):
            self.resource.update(instance_name=instance.name)
            result = self._solver.solve(instance)
            if self._writer is not None:
                self._writer.write(instance, result)
            self.finish()
            return instance, result
        raise ValueError("Input data source contains no instances.")

    def run(self, *args, **kwargs):
        r"""Solves the whole data source, keeping only the side effects of
        the components, such as written results and registered resources.
        """
        for _ in self.process_dataset(*args, **kwargs):
            pass

    def finish(self):
        self._reader.finish(self.resource)
        self._solver.finish(self.resource)
        if self._writer is not None:
            self._writer.finish(self.resource)
