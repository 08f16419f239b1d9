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
Default values shared by the solvers and the command line.
"""

__all__ = [
    "DEFAULT_EPSILON",
    "DEFAULT_RESTARTS",
    "DEFAULT_WORK_BOUND",
    "ORACLE_MAX_VARIABLES",
    "ORACLE_MAX_ORDERINGS",
]

# Minimum gain for a hill-climbing move to be accepted.
DEFAULT_EPSILON: float = 1e-9

DEFAULT_RESTARTS: int = 20

# Largest min(n ** r, n!) the exhaustive neighborhoods run without --force.
DEFAULT_WORK_BOUND: int = 10 ** 7

ORACLE_MAX_VARIABLES: int = 7

ORACLE_MAX_ORDERINGS: int = 10 ** 6
