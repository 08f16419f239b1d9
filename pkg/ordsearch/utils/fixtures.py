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
Small instances shared by the unit tests.
"""
from ordsearch.data.multiscores import MultiScores

__all__ = [
    "fixture_f1",
    "fixture_f2",
]


def fixture_f1() -> MultiScores:
    r"""Two variables; ``a`` gains 5 from parent ``b`` at weight 1 and
    ``b`` gains 3 from parent ``a`` for free.
    """
    return MultiScores.from_dict({
        'a': [((), 0, 0), (('b',), 5, 1)],
        'b': [((), 0, 0), (('a',), 3, 0)],
    })


def fixture_f2() -> MultiScores:
    r"""Three variables; ``b`` prefers parent ``c`` over ``a``, and ``c``
    gains 3 from ``{a, b}`` at weight 1.
    """
    return MultiScores.from_dict({
        'a': [((), 0, 0)],
        'b': [((), 0, 0), (('a',), 2, 0), (('c',), 4, 0)],
        'c': [((), 0, 0), (('a', 'b'), 3, 1)],
    })
