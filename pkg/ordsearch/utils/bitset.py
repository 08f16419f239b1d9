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
Helpers for variable sets encoded as the bits of an ``int``.
"""
from typing import Iterable, Iterator

from ordsearch.common.types import Bitset

__all__ = [
    "bit",
    "mask_of",
    "iter_bits",
    "popcount",
    "is_subset",
]


def bit(v: int) -> Bitset:
    return 1 << v


def mask_of(ids: Iterable[int]) -> Bitset:
    r"""Returns the bitset containing ``ids``."""
    mask = 0
    for v in ids:
        mask |= 1 << v
    return mask


def iter_bits(mask: Bitset) -> Iterator[int]:
    r"""Yields the members of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: Bitset) -> int:
    return bin(mask).count("1")


def is_subset(sub: Bitset, sup: Bitset) -> bool:
    return sub & ~sup == 0
