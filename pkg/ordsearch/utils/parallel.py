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
Order preserving parallel map used for restarts, colorings and window
oracles.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, TypeVar

__all__ = [
    "ordered_map",
]

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')


def ordered_map(func: Callable[[T], R], items: Iterable[T],
                workers: int = 1) -> List[R]:
    r"""Applies ``func`` to every item and returns the results in input
    order. With ``workers > 1`` the calls are spread over a process pool,
    so ``func`` and the items must be picklable. Callers reduce the returned
    list sequentially, which keeps the outcome independent of ``workers``.

    Args:
        func: A module level function.
        items: The arguments, one call each.
        workers (int): Maximum number of worker processes.

    Returns:
        The list of results, aligned with ``items``.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    max_workers = min(workers, len(items))
    logger.debug("Running %d tasks on %d processes", len(items), max_workers)
    with ProcessPoolExecutor(max_workers=max_workers) as executor:
        return list(executor.map(func, items))
