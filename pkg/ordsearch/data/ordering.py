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
Orderings of the variable set and the distances between them.
"""
from bisect import bisect_left
from enum import Enum
from typing import (
    Callable, Dict, Iterable, Iterator, List, Sequence, Tuple, Union, overload)

from sortedcontainers import SortedList

from ordsearch.common.exception import OrderingMismatchError
from ordsearch.common.types import Bitset, VarId

__all__ = [
    "Ordering",
    "DistanceKind",
    "kendall_tau",
    "insert_distance",
    "swap_distance",
    "win_distance",
    "invwin_distance",
    "equal_content_blocks",
    "distance",
]


class Ordering:
    r"""A permutation of the variable ids ``0..n-1`` with a position index.

    Orderings are immutable; the editing methods return new orderings.
    Positions are 0-based.

    Args:
        sequence: The variable ids, first to last.

    Raises:
        OrderingMismatchError: If ``sequence`` is not a permutation of
            ``0..n-1``.
    """

    def __init__(self, sequence: Iterable[VarId]):
        self._sequence: Tuple[VarId, ...] = tuple(int(v) for v in sequence)
        n = len(self._sequence)
        self._positions: List[int] = [-1] * n
        for i, v in enumerate(self._sequence):
            if not 0 <= v < n or self._positions[v] != -1:
                raise OrderingMismatchError(
                    f"{list(self._sequence)} is not a permutation of "
                    f"0..{n - 1}.")
            self._positions[v] = i

    @classmethod
    def identity(cls, n: int) -> "Ordering":
        return cls(range(n))

    @classmethod
    def from_names(cls, names: Sequence[str], scores) -> "Ordering":
        r"""Builds the ordering of ``scores`` variables listed by name.

        Raises:
            OrderingMismatchError: If ``names`` does not list every variable
                of ``scores`` exactly once.
        """
        if len(names) != scores.n or len(set(names)) != len(names):
            raise OrderingMismatchError(
                f"The ordering lists {len(names)} names but the instance "
                f"has {scores.n} variables.")
        try:
            return cls(scores.id_of(name) for name in names)
        except KeyError as e:
            raise OrderingMismatchError(
                f"Unknown variable {e.args[0]!r} in the ordering.") from e

    @property
    def sequence(self) -> Tuple[VarId, ...]:
        return self._sequence

    @property
    def n(self) -> int:
        return len(self._sequence)

    def __len__(self) -> int:
        return len(self._sequence)

    def __iter__(self) -> Iterator[VarId]:
        return iter(self._sequence)

    @overload
    def __getitem__(self, i: int) -> VarId: ...

    @overload
    def __getitem__(self, i: slice) -> Tuple[VarId, ...]: ...

    def __getitem__(self, i: Union[int, slice]):
        return self._sequence[i]

    def position(self, v: VarId) -> int:
        return self._positions[v]

    def prefix_mask(self, length: int) -> Bitset:
        r"""The set of the first ``length`` variables."""
        mask = 0
        for v in self._sequence[:length]:
            mask |= 1 << v
        return mask

    def predecessors(self, v: VarId) -> Bitset:
        return self.prefix_mask(self._positions[v])

    def names(self, scores) -> List[str]:
        return [scores.name_of(v) for v in self._sequence]

    def insert(self, source: int, target: int) -> "Ordering":
        r"""Moves the variable at position ``source`` so that it ends up at
        position ``target``.
        """
        seq = list(self._sequence)
        v = seq.pop(source)
        seq.insert(target, v)
        return Ordering(seq)

    def swap(self, i: int, j: int) -> "Ordering":
        seq = list(self._sequence)
        seq[i], seq[j] = seq[j], seq[i]
        return Ordering(seq)

    def replace_window(self, start: int, window: Sequence[VarId]
                       ) -> "Ordering":
        r"""Returns the ordering with positions ``start..start+len(window)-1``
        replaced by ``window``, which must hold the same variables.
        """
        end = start + len(window)
        if sorted(window) != sorted(self._sequence[start:end]):
            raise OrderingMismatchError(
                "A window can only be rearranged, not changed.")
        return Ordering(self._sequence[:start] + tuple(window)
                        + self._sequence[end:])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ordering):
            return NotImplemented
        return self._sequence == other._sequence

    def __hash__(self) -> int:
        return hash(self._sequence)

    def __repr__(self) -> str:
        return f"Ordering({list(self._sequence)})"


class DistanceKind(Enum):
    INSERT = "insert"
    SWAP = "swap"
    INV = "inv"
    INVWIN = "invwin"
    WIN = "win"


def _relative(tau: Sequence[VarId], sigma: Sequence[VarId]) -> List[int]:
    r"""Returns, for every position of ``sigma``, the position of the same
    variable in ``tau``.
    """
    position: Dict[VarId, int] = {v: i for i, v in enumerate(tau)}
    if len(tau) != len(sigma) or len(position) != len(tau) or any(
            v not in position for v in sigma):
        raise OrderingMismatchError(
            "The orderings are not over the same variable set.")
    mapped = [position[v] for v in sigma]
    if len(set(mapped)) != len(mapped):
        raise OrderingMismatchError("An ordering repeats a variable.")
    return mapped


def _count_inversions(values: Sequence[int]) -> int:
    seen = SortedList()
    inversions = 0
    for x in values:
        inversions += len(seen) - seen.bisect_right(x)
        seen.add(x)
    return inversions


def kendall_tau(tau: Sequence[VarId], sigma: Sequence[VarId]) -> int:
    r"""The number of variable pairs ordered differently by ``tau`` and
    ``sigma``, in ``O(n log n)``.
    """
    return _count_inversions(_relative(tau, sigma))


def insert_distance(tau: Sequence[VarId], sigma: Sequence[VarId]) -> int:
    r"""``n`` minus the longest common subsequence of the orderings, the
    fewest single-variable moves turning one into the other.
    """
    mapped = _relative(tau, sigma)
    # For permutations the common subsequences are the increasing runs of
    # the relative positions.
    tails: List[int] = []
    for x in mapped:
        at = bisect_left(tails, x)
        if at == len(tails):
            tails.append(x)
        else:
            tails[at] = x
    return len(mapped) - len(tails)


def swap_distance(tau: Sequence[VarId], sigma: Sequence[VarId]) -> int:
    r"""The fewest transpositions turning one ordering into the other,
    ``n`` minus the number of cycles of the relative permutation.
    """
    mapped = _relative(tau, sigma)
    visited = [False] * len(mapped)
    cycles = 0
    for start in range(len(mapped)):
        if visited[start]:
            continue
        cycles += 1
        i = start
        while not visited[i]:
            visited[i] = True
            i = mapped[i]
    return len(mapped) - cycles


def win_distance(tau: Sequence[VarId], sigma: Sequence[VarId]) -> int:
    r"""The span between the first and the last position where the
    orderings differ, 0 for equal orderings.
    """
    _relative(tau, sigma)
    differ = [i for i, (u, v) in enumerate(zip(tau, sigma)) if u != v]
    return differ[-1] - differ[0] if differ else 0


def equal_content_blocks(tau: Sequence[VarId], sigma: Sequence[VarId]
                         ) -> List[Tuple[int, int]]:
    r"""The finest partition of the positions into intervals on which both
    orderings hold the same variables, as 0-based inclusive ``(start,
    end)`` pairs.
    """
    mapped = _relative(tau, sigma)
    blocks = []
    start, reach = 0, -1
    for i, x in enumerate(mapped):
        reach = max(reach, x)
        if reach == i:
            blocks.append((start, i))
            start = i + 1
    return blocks


def invwin_distance(tau: Sequence[VarId], sigma: Sequence[VarId]) -> int:
    r"""The inversion-window distance: the largest Kendall tau distance
    between corresponding blocks of :func:`equal_content_blocks`.

    A block of a coarser partition that splits into equal-content blocks
    has no inversions across them, so its count is the sum of theirs; the
    finest partition therefore attains the minimum over all partitions.
    """
    mapped = _relative(tau, sigma)
    return max((_count_inversions(mapped[a:b + 1])
                for a, b in equal_content_blocks(tau, sigma)), default=0)


_DISTANCES: Dict[DistanceKind, Callable[[Sequence[VarId], Sequence[VarId]],
                                        int]] = {
    DistanceKind.INSERT: insert_distance,
    DistanceKind.SWAP: swap_distance,
    DistanceKind.INV: kendall_tau,
    DistanceKind.INVWIN: invwin_distance,
    DistanceKind.WIN: win_distance,
}


def distance(kind: DistanceKind, tau: Sequence[VarId],
             sigma: Sequence[VarId]) -> int:
    return _DISTANCES[kind](tau, sigma)
