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
Seed derivation. Every random stream in ordsearch is a
``numpy.random.Generator`` seeded from the user seed and a key path, so the
streams do not depend on scheduling or on unrelated parameters.
"""
from typing import List

import numpy as np

__all__ = [
    "derive_seed",
    "make_rng",
    "random_permutation",
]


def derive_seed(seed: int, *keys: int) -> int:
    r"""Hashes ``seed`` and ``keys`` (non-negative ints) into a new 63 bit
    seed.
    """
    sequence = np.random.SeedSequence([seed, *keys])
    return int(sequence.generate_state(1, dtype=np.uint64)[0] >> np.uint64(1))


def make_rng(seed: int, *keys: int) -> np.random.Generator:
    return np.random.default_rng(derive_seed(seed, *keys))


def random_permutation(n: int, seed: int, *keys: int) -> List[int]:
    r"""A uniformly random permutation of ``0..n-1``."""
    return [int(v) for v in make_rng(seed, *keys).permutation(n)]
