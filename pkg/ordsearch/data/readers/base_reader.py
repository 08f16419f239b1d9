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
Base reader type to be inherited by all readers.
"""
import logging
import os
from abc import abstractmethod, ABC
from pathlib import Path
from typing import Any, Dict, Iterator, Optional

import jsonpickle
from texar.torch import HParams

from ordsearch.common.resources import Resources
from ordsearch.data.instance import SearchInstance
from ordsearch.pipeline_component import PipelineComponent
from ordsearch.utils import get_full_module_name

__all__ = [
    "BaseReader",
]

logger = logging.getLogger(__name__)


class BaseReader(PipelineComponent, ABC):
    r"""The basic instance reader class, to be inherited by all readers.

    A reader first collects the data sources (:meth:`_collect`), then parses
    every collection into :class:`SearchInstance` objects
    (:meth:`_parse_instance`). Parsed instances can be cached as
    ``jsonpickle`` lines, one cache file per collection.

    Args:
        from_cache (bool, optional): Read the instances from the cache
            directory instead of parsing the original files.
        cache_directory (str, optional): The base directory of the cache
            files. Nothing is cached if ``None``. The file name of each
            collection is computed by :meth:`_cache_key_function`.
        append_to_cache (bool, optional): Append to an existing cache file
            instead of overwriting it.
    """

    def __init__(self,
                 from_cache: bool = False,
                 cache_directory: Optional[str] = None,
                 append_to_cache: bool = False):
        self.from_cache = from_cache
        self._cache_directory = cache_directory
        self.component_name = get_full_module_name(self)
        self.append_to_cache = append_to_cache
        self.configs: HParams = HParams(None, self.default_configs())

    @staticmethod
    def default_configs() -> Dict[str, Any]:
        return {}

    def initialize(self, resource: Resources, configs: HParams):
        if configs is not None:
            self.configs = configs

    @staticmethod
    def serialize_instance(instance: SearchInstance) -> str:
        r"""Serialize an instance to a single line."""
        return jsonpickle.encode(instance)

    @staticmethod
    def deserialize_instance(string: str) -> SearchInstance:
        return jsonpickle.decode(string)

    @abstractmethod
    def _collect(self, *args: Any, **kwargs: Any) -> Iterator[Any]:
        r"""Gives an iterator of collections, each holding enough
        information to locate one data source, for example a file path.
        """
        raise NotImplementedError

    def parse_instance(self, collection: Any) -> Iterator[SearchInstance]:
        r"""Parses the instances of one collection. Readers implement
        :meth:`_parse_instance`.
        """
        logger.debug("%s parsing %s", self.component_name, collection)
        yield from self._parse_instance(collection)

    @abstractmethod
    def _parse_instance(self, collection: Any) -> Iterator[SearchInstance]:
        raise NotImplementedError

    @abstractmethod
    def _cache_key_function(self, collection: Any) -> str:
        r"""Computes the cache file name of a collection."""
        raise NotImplementedError

    def _get_cache_location(self, collection: Any) -> Path:
        file_path = self._cache_key_function(collection)
        return Path(os.path.join(str(self._cache_directory), file_path))

    def iter(self, *args, **kwargs) -> Iterator[SearchInstance]:
        r"""An iterator over all instances of the data sources, read from
        the cache when ``from_cache`` is set.
        """
        for collection in self._collect(*args, **kwargs):
            if self.from_cache:
                yield from self.read_from_cache(
                    self._get_cache_location(collection))
                continue

            not_first = self.append_to_cache
            for instance in self.parse_instance(collection):
                if self._cache_directory is not None:
                    self.cache_data(collection, instance, not_first)
                if not isinstance(instance, SearchInstance):
                    raise ValueError(
                        f"No instance read from the given collection "
                        f"{collection}, returned {type(instance)}.")
                not_first = True
                yield instance

    def cache_data(self, collection: Any, instance: SearchInstance,
                   append: bool):
        r"""Writes ``instance`` to the cache file of ``collection``.

        Args:
            collection: The collection the instance was parsed from.
            instance: The instance to be cached.
            append: Whether to append to an existing cache file.
        """
        if not self._cache_directory:
            raise ValueError("Can not cache without a cache_directory!")

        os.makedirs(self._cache_directory, exist_ok=True)
        cache_filename = self._get_cache_location(collection)

        logger.info("Caching instance to %s", cache_filename)
        with open(cache_filename, 'a' if append else 'w') as cache:
            cache.write(self.serialize_instance(instance) + "\n")

    def read_from_cache(self, cache_filename: Path
                        ) -> Iterator[SearchInstance]:
        logger.info("Reading from cache file %s", cache_filename)
        with cache_filename.open("r") as cache_file:
            for line in cache_file:
                instance = self.deserialize_instance(line.strip())
                if not isinstance(instance, SearchInstance):
                    raise TypeError(
                        f"Instance deserialized from {cache_filename} is "
                        f"{type(instance)}, but expect SearchInstance")
                yield instance
