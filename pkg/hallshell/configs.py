"""
Configuration engine: enumeration, brute-force counting of A_{n,m}(f) and
the constructive solver for shellable families.
"""

from __future__ import annotations

from collections import Counter
from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from .errors import HypothesisError, InvalidInputError, OracleLimitError
from .family import SetFamily, Transversal
from .shelling import is_shellable, unique_element_set
from .words import (
    Configuration,
    SurjectiveWord,
    batch_ranks,
    f1,
    reverse_word,
    satisfies,
    word_batches,
)

DEFAULT_WORD_BOUND = 10
DEFAULT_SEARCH_BOUND = 10


def enumerate_configurations(
    fam: SetFamily,
    t: Transversal,
    bound: Optional[int] = None,
) -> Iterator[Configuration]:
    """Every configuration of t, lexicographic by member index.

    With a bound, refuses to start when prod |F| exceeds it.
    """
    t.check(fam)
    if bound is not None and configuration_count(fam) > bound:
        raise OracleLimitError('configurations', configuration_count(fam), bound)
    ranges = [range(1, len(member) + 1) for member in fam.members]
    for demands in product(*ranges):
        yield Configuration(demands)


def configuration_count(fam: SetFamily) -> int:
    """prod |F|."""
    total = 1
    for member in fam.members:
        total *= len(member)
    return total


def _check_word_space(fam: SetFamily, m: int, bound: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise InvalidInputError(f"m must be a positive integer, got {m!r}")
    if m > fam.n:
        raise InvalidInputError(f"m = {m} exceeds n = {fam.n}")
    if fam.n > bound:
        raise OracleLimitError('n', fam.n, bound)


def count_satisfying(
    fam: SetFamily,
    t: Transversal,
    f: Configuration,
    m: int,
    bound: int = DEFAULT_WORD_BOUND,
) -> int:
    """A_{n,m}(f) by exhaustive enumeration of the surjections [n] -> [m]."""
    t.check(fam)
    f.check(fam)
    _check_word_space(fam, m, bound)
    demands = np.array(f.demands, dtype=np.int16)
    total = 0
    for words in word_batches(fam.n, m):
        ranks = batch_ranks(words, fam, t, m)
        total += int(np.all(ranks == demands, axis=1).sum())
    return total


def count_by_configuration(
    fam: SetFamily,
    t: Transversal,
    m: int,
    bound: int = DEFAULT_WORD_BOUND,
) -> Dict[Tuple[int, ...], int]:
    """A_{n,m}(f) for every configuration met by at least one surjection."""
    t.check(fam)
    _check_word_space(fam, m, bound)
    counts: Counter = Counter()
    for words in word_batches(fam.n, m):
        ranks = batch_ranks(words, fam, t, m)
        rows, hits = np.unique(ranks, axis=0, return_counts=True)
        for row, hit in zip(rows, hits):
            counts[tuple(int(k) for k in row)] += int(hit)
    return dict(counts)


def m_range(fam: SetFamily) -> Tuple[int, int]:
    """(min(n, n - |S| + 1), n)."""
    if fam.size != fam.n:
        raise HypothesisError('|members| = n', f"{fam.size} members over [{fam.n}]")
    n = fam.n
    return min(n, n - len(unique_element_set(fam)) + 1), n


def search_word(
    fam: SetFamily,
    t: Transversal,
    f: Configuration,
    m: int,
    bound: int = DEFAULT_SEARCH_BOUND,
) -> Optional[SurjectiveWord]:
    """Backtracking search; values tried in ascending order per element."""
    fam.require_nonempty()
    t.check(fam)
    f.check(fam)
    _check_word_space(fam, m, bound)
    n = fam.n
    # members become checkable once their largest element is assigned
    closing: List[List[int]] = [[] for _ in range(n + 1)]
    for index, member in enumerate(fam.members):
        closing[max(member)].append(index)

    values = [0] * (n + 1)
    counts = [0] * (m + 1)

    def member_ok(index: int) -> bool:
        member = fam.members[index]
        image = sorted({values[x] for x in member})
        k = f.demands[index]
        return k <= len(image) and image[k - 1] == values[t.element(index)]

    def walk(element: int, missing: int) -> bool:
        if element > n:
            return missing == 0
        remaining = n - element + 1
        for value in range(1, m + 1):
            new_missing = missing - (1 if counts[value] == 0 else 0)
            if new_missing > remaining - 1:
                continue
            values[element] = value
            counts[value] += 1
            if all(member_ok(i) for i in closing[element]) and walk(element + 1, new_missing):
                return True
            counts[value] -= 1
        values[element] = 0
        return False

    if not walk(1, m):
        return None
    return SurjectiveWord(m, tuple(values[1:]))


def _construct(fam: SetFamily, t: Transversal, f: Configuration, m: int) -> SurjectiveWord:
    """Recursive construction for a shellable family with m in its range.

    The n - m + 1 largest unique elements form the top block T. Members whose
    representative lies in T own exactly one element of T; the rest form a
    shellable family on the m - 1 remaining elements, solved recursively with
    a permutation and then extended to the top block.
    """
    n = fam.n
    if n == 1:
        return SurjectiveWord(1, (1,))
    unique = sorted(unique_element_set(fam))
    if m == 1:
        # every member is a singleton and every demand is 1
        return SurjectiveWord(1, tuple(1 for _ in range(n)))

    top = unique[len(unique) - (n - m + 1):]
    top_set = set(top)
    rest = [x for x in range(1, n + 1) if x not in top_set]
    relabel = {x: k for k, x in enumerate(rest, 1)}

    lower_members = [i for i in range(fam.size) if t.element(i) not in top_set]
    upper_members = [i for i in range(fam.size) if t.element(i) in top_set]

    lower_fam = SetFamily(m - 1, tuple(
        frozenset(relabel[x] for x in fam.members[i]) for i in lower_members
    ))
    lower_t = Transversal(tuple(relabel[t.element(i)] for i in lower_members))
    lower_f = Configuration(tuple(f.demands[i] for i in lower_members))
    inner = _construct(lower_fam, lower_t, lower_f, m - 1)

    # sigma' as a map on original labels of the non-top elements
    base = {x: inner(relabel[x]) for x in rest}
    word: Dict[int, int] = {}

    full_demand = any(f.demands[i] == len(fam.members[i]) for i in upper_members)
    if full_demand:
        word.update(base)
        for i in upper_members:
            element = t.element(i)
            k = f.demands[i]
            if k == len(fam.members[i]):
                word[element] = m
            else:
                others = sorted(base[x] for x in fam.members[i] if x != element)
                word[element] = others[k - 1]
    else:
        last = max(top)
        last_member = next(i for i in upper_members if t.element(i) == last)
        k_last = f.demands[last_member]
        others = sorted(base[x] for x in fam.members[last_member] if x != last)
        gap = 1 if k_last == 1 else others[k_last - 2] + 1

        def shift(value: int) -> int:
            return value if value < gap else value + 1

        for x, v in base.items():
            word[x] = shift(v)
        word[last] = gap
        for i in upper_members:
            element = t.element(i)
            if element == last:
                continue
            image = sorted(word[x] for x in fam.members[i] if x != element)
            word[element] = image[f.demands[i] - 1]

    return SurjectiveWord(m, tuple(word[x] for x in range(1, n + 1)))


def solve(
    fam: SetFamily,
    t: Transversal,
    f: Configuration,
    m: int,
    search_bound: int = DEFAULT_SEARCH_BOUND,
) -> Optional[SurjectiveWord]:
    """A word satisfying f, built constructively when fam is shellable.

    Non-shellable families fall back to backtracking search and may have no
    solution.
    """
    fam.require_nonempty()
    t.check(fam)
    f.check(fam)
    lower, upper = m_range(fam)
    if not isinstance(m, int) or not lower <= m <= upper:
        raise HypothesisError(
            'min(n, n - |S| + 1) <= m <= n', f"m = {m}, allowed range [{lower}, {upper}]"
        )
    if is_shellable(fam):
        word = _construct(fam, t, f, m)
        if not satisfies(word, fam, t, f):
            raise RuntimeError(f"constructed word {list(word.values)} does not satisfy {list(f.demands)}")
        return word
    return search_word(fam, t, f, m, bound=search_bound)


def nice_permutation(fam: SetFamily, t: Transversal, bound: int = DEFAULT_SEARCH_BOUND) -> Optional[SurjectiveWord]:
    """A permutation satisfying f0, obtained by reversing a permutation that satisfies f1."""
    witness = search_word(fam, t, f1(fam), fam.n, bound=bound)
    if witness is None:
        return None
    return reverse_word(witness)


def has_nice_permutation(fam: SetFamily, t: Transversal, bound: int = DEFAULT_SEARCH_BOUND) -> bool:
    return nice_permutation(fam, t, bound=bound) is not None
