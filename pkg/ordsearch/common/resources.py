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
The shared registry passed to every pipeline component.
"""
from collections.abc import KeysView
from pathlib import Path
from typing import Any, Dict, List, Optional

import jsonpickle

__all__ = [
    "Resources"
]


class Resources:
    r"""The ``Resources`` object is a global registry used in the search
    pipeline. The pipeline registers the current instance here (for example
    under ``"instance_name"``), and components can share objects such as the
    start ordering or the restart statistics.
    """

    def __init__(self, **kwargs):
        self.resources: Dict[str, Any] = {}
        self.update(**kwargs)

    def save(self, keys: Optional[List[str]] = None,
             output_dir: str = "./"):
        r"""Save the resources specified by ``keys``, one ``jsonpickle`` file
        per key.

        Args:
            keys (optional): The keys to save. All keys are saved if ``None``.
            output_dir (str): The directory to write the files to.
        """
        if keys is None:
            keys = list(self.resources.keys())

        for key in keys:
            with open(Path(output_dir, f"{key}.json"), "w") as f:
                f.write(jsonpickle.encode(self.resources.get(key)))

    def load(self, keys: List[str], path: str = "./"):
        r"""Load the resources specified by ``keys`` from ``path``, as written
        by :meth:`save`.
        """
        for key in keys:
            with open(Path(path, f"{key}.json"), "r") as f:
                self.resources[key] = jsonpickle.decode(f.read())

    def keys(self) -> KeysView:
        r"""Return all keys of the resources.
        """
        return self.resources.keys()

    def get(self, key: str, default: Any = None):
        r"""Get the corresponding resource by specifying the key.
        """
        return self.resources.get(key, default)

    def update(self, **kwargs):
        r"""Update the resources.
        """
        self.resources.update(**kwargs)

    def remove(self, key: str):
        r"""Remove the corresponding resource by specifying the key.
        """
        del self.resources[key]
