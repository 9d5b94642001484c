"""
Families of subsets of [n], Hall's marriage condition and transversals.

Members are identified by position, so duplicate sets stay distinct.
Elements are 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, Iterator, List, Optional, Sequence

from .errors import EmptyMemberError, InvalidInputError, OracleLimitError

DEFAULT_TRANSVERSAL_BOUND = 10


@dataclass(frozen=True)
class SetFamily:
    """Indexed multiset of subsets of [n]."""
    n: int
    members: tuple

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise InvalidInputError(f"n must be a positive integer, got {self.n!r}")
        normalized = []
        for index, member in enumerate(self.members, 1):
            items = frozenset(member)
            for element in items:
                if not isinstance(element, int) or isinstance(element, bool):
                    raise InvalidInputError(f"member {index} holds non-integer {element!r}")
                if not 1 <= element <= self.n:
                    raise InvalidInputError(f"member {index} holds {element}, outside [1, {self.n}]")
            normalized.append(items)
        object.__setattr__(self, 'members', tuple(normalized))

    @classmethod
    def of(cls, n: int, members: Sequence[Sequence[int]]) -> 'SetFamily':
        return cls(n, tuple(frozenset(m) for m in members))

    @property
    def size(self) -> int:
        """Number of members, counted with multiplicity."""
        return len(self.members)

    def sorted_member(self, index: int) -> List[int]:
        return sorted(self.members[index])

    def union(self, indices: Optional[Sequence[int]] = None) -> frozenset:
        chosen = range(self.size) if indices is None else indices
        result = set()
        for i in chosen:
            result |= self.members[i]
        return frozenset(result)

    def has_empty_member(self) -> bool:
        return any(not member for member in self.members)

    def require_nonempty(self) -> None:
        for index, member in enumerate(self.members, 1):
            if not member:
                raise EmptyMemberError(index)

    def subfamily(self, indices: Sequence[int]) -> 'SetFamily':
        return SetFamily(self.n, tuple(self.members[i] for i in indices))

    def to_dict(self) -> Dict[str, Any]:
        return {'n': self.n, 'members': [sorted(m) for m in self.members]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SetFamily':
        if not isinstance(data, dict) or 'n' not in data or 'members' not in data:
            raise InvalidInputError("family JSON needs 'n' and 'members'")
        members = data['members']
        if not isinstance(members, list) or not all(isinstance(m, list) for m in members):
            raise InvalidInputError("'members' must be a list of lists")
        return cls.of(data['n'], members)


@dataclass(frozen=True)
class Transversal:
    """Injective choice of one element per member; values[i] belongs to member i."""
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(self.values))

    def __len__(self) -> int:
        return len(self.values)

    def element(self, index: int) -> int:
        return self.values[index]

    def is_valid_for(self, fam: SetFamily) -> bool:
        if len(self.values) != fam.size:
            return False
        if len(set(self.values)) != len(self.values):
            return False
        return all(v in member for v, member in zip(self.values, fam.members))

    def check(self, fam: SetFamily) -> None:
        if not self.is_valid_for(fam):
            raise InvalidInputError(f"{list(self.values)} is not a transversal of the family")

    def is_surjective(self, fam: SetFamily) -> bool:
        return set(self.values) == set(range(1, fam.n + 1))

    def to_list(self) -> List[int]:
        return list(self.values)


class AugmentingMatcher:
    """Maximum bipartite matching between members and elements.

    Augmenting paths scan members in ascending index order and, inside a
    member, elements in ascending numeric order, so the matching found for a
    given family is always the same.
    """

    def __init__(self, fam: SetFamily):
        self._graph_left: Dict[int, List[int]] = {
            i: sorted(member) for i, member in enumerate(fam.members)
        }
        self._pair_left: Dict[int, int] = {}
        self._pair_right: Dict[int, int] = {}

    def _augment(self, left: int, visited: set) -> bool:
        for right in self._graph_left[left]:
            if right in visited:
                continue
            visited.add(right)
            other = self._pair_right.get(right)
            if other is None or self._augment(other, visited):
                self._pair_left[left] = right
                self._pair_right[right] = left
                return True
        return False

    def get_maximum_matching_num(self):
        self._pair_left.clear()
        self._pair_right.clear()
        matchings = 0
        for left in sorted(self._graph_left):
            if self._augment(left, set()):
                matchings += 1
        return matchings, dict(self._pair_left)


def satisfies_marriage_condition(fam: SetFamily) -> bool:
    """Hall's condition via matching: true iff a matching saturates every member."""
    if fam.has_empty_member():
        return False
    matchings, _ = AugmentingMatcher(fam).get_maximum_matching_num()
    return matchings == fam.size


def marriage_condition_by_subsets(fam: SetFamily) -> bool:
    """Hall's condition checked literally over all 2^m subfamilies."""
    indices = range(fam.size)
    for k in range(1, fam.size + 1):
        for chosen in combinations(indices, k):
            if len(fam.union(chosen)) < k:
                return False
    return True


def find_transversal(fam: SetFamily) -> Optional[Transversal]:
    fam.require_nonempty()
    matchings, pairs = AugmentingMatcher(fam).get_maximum_matching_num()
    if matchings != fam.size:
        return None
    return Transversal(tuple(pairs[i] for i in range(fam.size)))


def _iter_transversals(fam: SetFamily) -> Iterator[tuple]:
    """Depth-first over members in index order, elements ascending."""
    chosen: List[int] = []
    used = set()
    sorted_members = [sorted(m) for m in fam.members]

    def walk(index: int) -> Iterator[tuple]:
        if index == fam.size:
            yield tuple(chosen)
            return
        for element in sorted_members[index]:
            if element in used:
                continue
            used.add(element)
            chosen.append(element)
            yield from walk(index + 1)
            chosen.pop()
            used.discard(element)

    yield from walk(0)


def all_transversals(fam: SetFamily, bound: int = DEFAULT_TRANSVERSAL_BOUND) -> List[Transversal]:
    """Every transversal, in lexicographic order of the value tuple."""
    fam.require_nonempty()
    if fam.size > bound:
        raise OracleLimitError('member count', fam.size, bound)
    return [Transversal(values) for values in _iter_transversals(fam)]


def count_transversals(fam: SetFamily, limit: Optional[int] = None) -> int:
    """Count transversals, stopping once `limit` have been seen."""
    fam.require_nonempty()
    count = 0
    for _ in _iter_transversals(fam):
        count += 1
        if limit is not None and count >= limit:
            break
    return count


def is_critical_block(fam: SetFamily) -> bool:
    """|union| == |family| == n."""
    return fam.size == fam.n and len(fam.union()) == fam.n
