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
Exceptions raised by ordsearch.
"""
from typing import Optional

__all__ = [
    "ScoreFileError",
    "UnknownParentError",
    "DuplicateVariableError",
    "MissingEmptyParentSetError",
    "InvalidMultiScoresError",
    "OrderingMismatchError",
    "OrderingRangeError",
    "InvalidScoredDagError",
    "SolverConfigError",
    "OracleBudgetExceededError",
    "WorkBoundExceededError",
]


class ScoreFileError(ValueError):
    r"""Raise this error when a score file cannot be parsed. The offending
    line number (1-based) is kept in ``line`` when it is known.
    """

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownParentError(ScoreFileError):
    r"""Raise this error when a parent set names a variable that is not
    declared in the score file.
    """
    pass


class DuplicateVariableError(ScoreFileError):
    r"""Raise this error when a variable block is declared twice.
    """
    pass


class MissingEmptyParentSetError(ScoreFileError):
    r"""Raise this error when a variable has no weight-zero triple for the
    empty parent set.
    """
    pass


class InvalidMultiScoresError(ValueError):
    r"""Raise this error when the multiscores violate their invariants, for
    example a self-parent or a non-finite score.
    """
    pass


class OrderingMismatchError(ValueError):
    r"""Raise this error when two orderings, or an ordering and an instance,
    are not over the same variable set.
    """
    pass


class OrderingRangeError(ValueError):
    r"""Raise this error when a position range does not fit the ordering.
    """
    pass


class InvalidScoredDagError(ValueError):
    r"""Raise this error when a scored DAG is structurally malformed, such as
    a triple index out of range.
    """
    pass


class SolverConfigError(ValueError):
    r"""Raise this error when the there is a problem with the solver config.
    """
    pass


class OracleBudgetExceededError(RuntimeError):
    r"""Raise this error when an instance is too large for brute force.
    """
    pass


class WorkBoundExceededError(RuntimeError):
    r"""Raise this error when the estimated neighborhood size is above the
    configured work bound.
    """
    pass
