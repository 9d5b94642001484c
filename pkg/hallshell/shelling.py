"""
Shellable families: shelling orders, the unique-element set S and the
construction of a shelling order from a word satisfying f1.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import List, Optional, Sequence

from .errors import HypothesisError, InvalidInputError, OracleLimitError
from .family import SetFamily, Transversal, count_transversals
from .words import SurjectiveWord, f1, satisfies

DEFAULT_EXHAUSTIVE_BOUND = 8


@dataclass(frozen=True)
class ShellingOrder:
    """Permutation of 1-based member indices; position k holds the k-th member."""
    order: tuple

    def __post_init__(self):
        object.__setattr__(self, 'order', tuple(self.order))

    def __len__(self) -> int:
        return len(self.order)

    def is_permutation_of(self, size: int) -> bool:
        return sorted(self.order) == list(range(1, size + 1))

    def reversed(self) -> 'ShellingOrder':
        return ShellingOrder(tuple(reversed(self.order)))

    def to_list(self) -> List[int]:
        return list(self.order)


def reverse_order(ord_: ShellingOrder) -> ShellingOrder:
    """The opposite total order on the members."""
    return ord_.reversed()


def verify_shelling_order(fam: SetFamily, ord_: ShellingOrder) -> bool:
    if not ord_.is_permutation_of(fam.size):
        raise InvalidInputError(f"{list(ord_.order)} is not a permutation of 1..{fam.size}")
    seen = set()
    for k, index in enumerate(ord_.order, 1):
        seen |= fam.members[index - 1]
        if len(seen) != k:
            return False
    return True


def unique_element_set(fam: SetFamily) -> frozenset:
    """Elements lying in exactly one member (duplicates counted separately)."""
    counts = Counter(x for member in fam.members for x in member)
    return frozenset(x for x, c in counts.items() if c == 1)


def _peelable(fam: SetFamily, remaining: Sequence[int]) -> List[int]:
    """Members of `remaining` owning exactly one element no other remaining member has."""
    counts = Counter(x for i in remaining for x in fam.members[i])
    return [
        i for i in remaining
        if sum(1 for x in fam.members[i] if counts[x] == 1) == 1
    ]


def shelling_order(fam: SetFamily) -> Optional[ShellingOrder]:
    """Peel members from the back; backtrack over peelable choices if stuck."""
    fam.require_nonempty()
    if len(fam.union()) != fam.size:
        return None

    peeled: List[int] = []

    def peel(remaining: List[int]) -> bool:
        if not remaining:
            return True
        for i in _peelable(fam, remaining):
            peeled.append(i)
            if peel([j for j in remaining if j != i]):
                return True
            peeled.pop()
        return False

    if not peel(list(range(fam.size))):
        return None
    result = ShellingOrder(tuple(i + 1 for i in reversed(peeled)))
    if not verify_shelling_order(fam, result):
        return None
    return result


def shelling_order_exhaustive(fam: SetFamily, bound: int = DEFAULT_EXHAUSTIVE_BOUND) -> Optional[ShellingOrder]:
    """First valid order in lexicographic order over all m! permutations."""
    fam.require_nonempty()
    if fam.size > bound:
        raise OracleLimitError('member count', fam.size, bound)
    for candidate in permutations(range(1, fam.size + 1)):
        order = ShellingOrder(candidate)
        if verify_shelling_order(fam, order):
            return order
    return None


def is_shellable(fam: SetFamily) -> bool:
    return shelling_order(fam) is not None


def has_unique_transversal(fam: SetFamily) -> bool:
    """The other characterization: exactly one system of distinct representatives."""
    return count_transversals(fam, limit=2) == 1


def shelling_order_from_witness(fam: SetFamily, t: Transversal, w: SurjectiveWord) -> ShellingOrder:
    """Order members by w(t(F)) ascending; w must satisfy f1 (demands |F|).

    Repeatedly moving the member with the largest w(t(F)) to the last open
    slot is the same as a stable ascending sort.
    """
    if fam.size != fam.n:
        raise HypothesisError('|members| = n', f"{fam.size} members over [{fam.n}]")
    t.check(fam)
    if not satisfies(w, fam, t, f1(fam)):
        raise HypothesisError('witness satisfies f1', f"word {list(w.values)}")
    ranked = sorted(range(fam.size), key=lambda i: (w(t.element(i)), i))
    result = ShellingOrder(tuple(i + 1 for i in ranked))
    if not verify_shelling_order(fam, result):
        raise RuntimeError(f"order {result.to_list()} built from word {list(w.values)} is not a shelling")
    return result

