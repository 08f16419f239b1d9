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
Type annotation helpers for the search domain.
"""
from typing import Dict, Tuple

__all__ = [
    "VarId",
    "Bitset",
    "TripleIndex",
    "Choices",
    "Diagnostics",
]

VarId = int

# A set of variable ids encoded as the bits of an int.
Bitset = int

TripleIndex = int

# One chosen triple index per variable id.
Choices = Tuple[TripleIndex, ...]

Diagnostics = Dict[str, object]
