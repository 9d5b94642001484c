"""
Configurations, surjective words and the satisfaction relation.

A word w : [n] -> [m] satisfies a configuration f when, for every member F,
w(t(F)) is the f(F)-th smallest element of the set w(F).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Sequence

import numpy as np

from .errors import InvalidInputError
from .family import SetFamily, Transversal

BATCH_SIZE = 65536


@dataclass(frozen=True)
class Configuration:
    """Rank demand per member index."""
    demands: tuple

    def __post_init__(self):
        object.__setattr__(self, 'demands', tuple(self.demands))
        for k in self.demands:
            if not isinstance(k, int) or isinstance(k, bool) or k < 1:
                raise InvalidInputError(f"demands must be positive integers, got {k!r}")

    def is_valid_for(self, fam: SetFamily) -> bool:
        if len(self.demands) != fam.size:
            return False
        return all(k <= len(member) for k, member in zip(self.demands, fam.members))

    def check(self, fam: SetFamily) -> None:
        if len(self.demands) != fam.size:
            raise InvalidInputError(
                f"configuration has {len(self.demands)} demands for {fam.size} members"
            )
        for index, (k, member) in enumerate(zip(self.demands, fam.members), 1):
            if k > len(member):
                raise InvalidInputError(f"demand {k} at member {index} exceeds |F| = {len(member)}")

    def to_dict(self) -> Dict[str, Any]:
        return {'demands': list(self.demands)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Configuration':
        if not isinstance(data, dict) or not isinstance(data.get('demands'), list):
            raise InvalidInputError("configuration JSON needs a 'demands' list")
        return cls(tuple(data['demands']))


@dataclass(frozen=True)
class SurjectiveWord:
    """Surjective map [n] -> [m]; values[i - 1] is the image of i."""
    m: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(self.values))
        if not isinstance(self.m, int) or self.m < 1:
            raise InvalidInputError(f"m must be a positive integer, got {self.m!r}")
        if not self.values:
            raise InvalidInputError("a word needs at least one letter")
        for v in self.values:
            if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= self.m:
                raise InvalidInputError(f"word value {v!r} outside [1, {self.m}]")
        if len(set(self.values)) != self.m:
            raise InvalidInputError(f"word {list(self.values)} is not onto [{self.m}]")

    @property
    def n(self) -> int:
        return len(self.values)

    @classmethod
    def from_values(cls, values: Sequence[int]) -> 'SurjectiveWord':
        """Build a word whose codomain is [max(values)]."""
        return cls(max(values), tuple(values))

    def __call__(self, element: int) -> int:
        return self.values[element - 1]

    def to_dict(self) -> Dict[str, Any]:
        return {'m': self.m, 'values': list(self.values)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SurjectiveWord':
        if not isinstance(data, dict) or not isinstance(data.get('values'), list):
            raise InvalidInputError("word JSON needs 'values' (and optionally 'm')")
        values = data['values']
        if not values:
            raise InvalidInputError("a word needs at least one letter")
        return cls(data.get('m', max(values)), tuple(values))


def f0(fam: SetFamily) -> Configuration:
    """Every demand 1 (the standard-tableau configuration)."""
    return Configuration(tuple(1 for _ in fam.members))


def f1(fam: SetFamily) -> Configuration:
    """Every demand |F|."""
    return Configuration(tuple(len(member) for member in fam.members))


def _check_dimensions(w: SurjectiveWord, fam: SetFamily) -> None:
    if w.n != fam.n:
        raise InvalidInputError(f"word has length {w.n} but the family lives on [{fam.n}]")


def rank_in_image(w: SurjectiveWord, member: frozenset, element: int) -> int:
    """1-based rank of w(element) inside the set w(member)."""
    image = {w(x) for x in member}
    target = w(element)
    return 1 + sum(1 for v in image if v < target)


def satisfies(w: SurjectiveWord, fam: SetFamily, t: Transversal, f: Configuration) -> bool:
    _check_dimensions(w, fam)
    if len(t) != fam.size or len(f.demands) != fam.size:
        raise InvalidInputError("transversal and configuration must align with the members")
    for member, element, k in zip(fam.members, t.values, f.demands):
        image = {w(x) for x in member}
        if k > len(image):
            return False
        if sorted(image)[k - 1] != w(element):
            return False
    return True


def configuration_of(w: SurjectiveWord, fam: SetFamily, t: Transversal) -> Configuration:
    """The unique configuration of t that w satisfies."""
    _check_dimensions(w, fam)
    t.check(fam)
    return Configuration(tuple(
        rank_in_image(w, member, element) for member, element in zip(fam.members, t.values)
    ))


def reverse_word(w: SurjectiveWord) -> SurjectiveWord:
    """i -> m - w(i) + 1."""
    return SurjectiveWord(w.m, tuple(w.m - v + 1 for v in w.values))


def surjections(n: int, m: int) -> Iterator[tuple]:
    """All surjective words [n] -> [m] in lexicographic order."""
    if m < 1 or n < m:
        return
    word: List[int] = []
    counts = [0] * (m + 1)

    def walk(position: int, missing: int) -> Iterator[tuple]:
        if position == n:
            if missing == 0:
                yield tuple(word)
            return
        remaining = n - position
        for value in range(1, m + 1):
            new_missing = missing - (1 if counts[value] == 0 else 0)
            if new_missing > remaining - 1:
                continue
            counts[value] += 1
            word.append(value)
            yield from walk(position + 1, new_missing)
            word.pop()
            counts[value] -= 1

    yield from walk(0, m)


def word_batches(n: int, m: int, batch_size: int = BATCH_SIZE) -> Iterator[np.ndarray]:
    """Surjections packed into int16 arrays of shape (batch, n)."""
    batch: List[tuple] = []
    for word in surjections(n, m):
        batch.append(word)
        if len(batch) == batch_size:
            yield np.array(batch, dtype=np.int16)
            batch = []
    if batch:
        yield np.array(batch, dtype=np.int16)


def batch_ranks(words: np.ndarray, fam: SetFamily, t: Transversal, m: int) -> np.ndarray:
    """Configuration of every row of `words` at once; shape (rows, members)."""
    ranks = np.ones((words.shape[0], fam.size), dtype=np.int16)
    for index, (member, element) in enumerate(zip(fam.members, t.values)):
        columns = [x - 1 for x in sorted(member)]
        image = words[:, columns]
        target = words[:, element - 1]
        for value in range(1, m + 1):
            present = (image == value).any(axis=1)
            ranks[:, index] += present & (value < target)
    return ranks


def constant_configuration(fam: SetFamily, k: int) -> Configuration:
    """Demand k at every member; k may not exceed the smallest member."""
    demands = Configuration(tuple(k for _ in fam.members))
    demands.check(fam)
    return demands
