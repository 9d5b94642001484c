"""
Named property suites run by `cli.py verify <suite>`.

Every suite draws its instances from a seeded numpy Generator, compares a
fast path with an independent oracle and returns a summary dict:

    {"suite": name, "checked": int, "failures": [...], "seed": int, "bound": int}
"""

from __future__ import annotations

from itertools import permutations
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from .configs import count_by_configuration, count_satisfying, configuration_count, m_range, solve
from .counting import (
    average_bruteforce,
    average_formula,
    stirling2,
    stirling2_explicit,
    surjection_count,
    tail_bound_holds,
)
from .errors import InvalidInputError
from .family import (
    SetFamily,
    Transversal,
    find_transversal,
    marriage_condition_by_subsets,
    satisfies_marriage_condition,
)
from .shapes import (
    SkewShape,
    corner_peeling_order,
    count_balanced,
    count_standard,
    hook_family,
    hook_length_formula,
    outer_corner_cells,
)
from .shelling import (
    has_unique_transversal,
    is_shellable,
    shelling_order,
    shelling_order_exhaustive,
    shelling_order_from_witness,
    unique_element_set,
    verify_shelling_order,
)
from .words import Configuration, SurjectiveWord, f0, f1, reverse_word, satisfies, surjections

MAX_REPORTED_FAILURES = 20
EXHAUSTIVE_N = 5


def random_family(
    rng: np.random.Generator,
    n: int,
    size: Optional[int] = None,
    allow_empty: bool = False,
    density: float = 0.5,
) -> SetFamily:
    """Members are independent Bernoulli(density) subsets of [n]."""
    size = n if size is None else size
    members = []
    for _ in range(size):
        mask = rng.random(n) < density
        if not allow_empty and not mask.any():
            mask[rng.integers(n)] = True
        members.append(frozenset(int(x) + 1 for x in np.flatnonzero(mask)))
    return SetFamily(n, tuple(members))


def random_shellable(rng: np.random.Generator, n: int) -> SetFamily:
    """Member k is {k} plus a random subset of [k - 1], then relabelled and shuffled."""
    members = []
    for k in range(1, n + 1):
        below = np.flatnonzero(rng.random(k - 1) < 0.5) + 1
        members.append({k, *(int(x) for x in below)})
    relabel = rng.permutation(n) + 1
    members = [frozenset(int(relabel[x - 1]) for x in member) for member in members]
    order = rng.permutation(n)
    return SetFamily(n, tuple(members[i] for i in order))


def random_partition(rng: np.random.Generator, size: int) -> tuple:
    parts, left = [], size
    while left:
        part = int(rng.integers(1, min(left, parts[-1] if parts else left) + 1))
        parts.append(part)
        left -= part
    return tuple(parts)


def random_configuration(rng: np.random.Generator, fam: SetFamily) -> Configuration:
    return Configuration(tuple(int(rng.integers(1, len(member) + 1)) for member in fam.members))


def random_m(rng: np.random.Generator, fam: SetFamily) -> int:
    lower, upper = m_range(fam)
    return int(rng.integers(lower, upper + 1))


def _size(rng: np.random.Generator, bound: int, cap: int) -> int:
    return int(rng.integers(1, max(1, min(bound, cap)) + 1))


def _top_left_cells(shape: SkewShape) -> frozenset:
    """Cells of the shape with neither the cell above nor the cell to the left in it."""
    return frozenset(
        (i, j) for i, j in shape.cells
        if (i - 1, j) not in shape and (i, j - 1) not in shape
    )


class _Suite:
    """Collects checks and failures for one run."""

    def __init__(self, name: str, seed: int, bound: int):
        self.name = name
        self.seed = seed
        self.bound = bound
        self.checked = 0
        self.failures: List[Dict[str, Any]] = []

    def check(self, ok: bool, **details: Any) -> None:
        self.checked += 1
        if not ok and len(self.failures) < MAX_REPORTED_FAILURES:
            self.failures.append(details)

    def summary(self) -> Dict[str, Any]:
        return {
            'suite': self.name,
            'checked': self.checked,
            'failures': self.failures,
            'passed': not self.failures,
            'seed': self.seed,
            'bound': self.bound,
        }


def check_hall(suite: _Suite, rng: np.random.Generator, samples: int) -> None:
    """Matching route agrees with the subset oracle."""
    for _ in range(samples):
        n = _size(rng, suite.bound, 8)
        size = int(rng.integers(1, min(suite.bound, 8) + 1))
        fam = random_family(rng, n, size, allow_empty=True, density=float(rng.uniform(0.1, 0.7)))
        suite.check(
            satisfies_marriage_condition(fam) == marriage_condition_by_subsets(fam),
            family=fam.to_dict(),
        )


def check_chang(suite: _Suite, rng: np.random.Generator, samples: int) -> None:
    """Shellable exactly when there is one transversal."""
    for _ in range(samples):
        n = _size(rng, suite.bound, 7)
        fam = random_family(rng, n, density=float(rng.uniform(0.1, 0.6)))
        suite.check(is_shellable(fam) == has_unique_transversal(fam), family=fam.to_dict())


def check_greedy(suite: _Suite, rng: np.random.Generator, samples: int) -> None:
    """Greedy peeling finds an order whenever the exhaustive search does.

    A shellable family with as many members as elements has a unique element.
    """
    for _ in range(samples):
        n = _size(rng, suite.bound, 6)
        fam = random_shellable(rng, n) if rng.random() < 0.5 else random_family(rng, n, density=0.4)
        greedy = shelling_order(fam)
        exhaustive = shelling_order_exhaustive(fam, bound=max(6, n))
        ok = (greedy is None) == (exhaustive is None)
        if greedy is not None:
            ok = ok and verify_shelling_order(fam, greedy)
            ok = ok and bool(unique_element_set(fam))
        suite.check(ok, family=fam.to_dict())


def check_good_marriage(suite: _Suite, rng: np.random.Generator, samples: int) -> None:
    """solve always returns a satisfying word for shellable families."""
    for _ in range(samples):
        n = _size(rng, suite.bound, 12)
        fam = random_shellable(rng, n)
        t = find_transversal(fam)
        f = random_configuration(rng, fam)
        m = random_m(rng, fam)
        word = solve(fam, t, f, m)
        suite.check(
            word is not None and satisfies(word, fam, t, f),
            family=fam.to_dict(), demands=list(f.demands), m=m,
        )


def check_converse(suite: _Suite, rng: np.random.Generator, samples: int) -> None:
    """A non-shellable family with a transversal has no word satisfying f1."""
    for _ in range(samples):
        n = _size(rng, suite.bound, 6)
        fam = random_family(rng, n, density=0.6)
        t = find_transversal(fam)
        if t is None or is_shellable(fam):
            continue
        lower, upper = m_range(fam)
        for m in range(lower, upper + 1):
            suite.check(
                count_satisfying(fam, t, f1(fam), m) == 0,
                family=fam.to_dict(), m=m,
            )


def check_partition(suite: _Suite, rng: np.random.Generator, samples: int) -> None:
    """Each surjection lands in exactly one configuration, all of them achieved."""
    for _ in range(samples):
        n = _size(rng, suite.bound, 6)
        fam = random_shellable(rng, n)
        t = find_transversal(fam)
        m = random_m(rng, fam)
        counts = count_by_configuration(fam, t, m)
        suite.check(
            sum(counts.values()) == surjection_count(n, m)
            and len(counts) == configuration_count(fam)
            and average_bruteforce(fam, t, m) == average_formula(fam, m),
            family=fam.to_dict(), m=m,
        )


def check_duality(suite: _Suite, rng: np.random.Generator, samples: int) -> None:
    """A permutation satisfies f0 iff its reverse satisfies f1.

    Shellable families up to EXHAUSTIVE_N elements are checked on every
    permutation, larger ones on a single random permutation.
    """
    for _ in range(samples):
        n = _size(rng, suite.bound, 10)
        fam = random_shellable(rng, n)
        t = find_transversal(fam)
        if n <= EXHAUSTIVE_N:
            candidates = permutations(range(1, n + 1))
        else:
            candidates = [tuple(int(v) for v in rng.permutation(n) + 1)]
        for values in candidates:
            w = SurjectiveWord(n, values)
            suite.check(
                satisfies(w, fam, t, f0(fam)) == satisfies(reverse_word(w), fam, t, f1(fam)),
                family=fam.to_dict(), word=list(values),
            )


def check_tableaux(suite: _Suite, rng: np.random.Generator, samples: int) -> None:
    """Hook families are shellable and standard counts match the hook-length formula."""
    for _ in range(samples):
        size = _size(rng, suite.bound, 7)
        lam = random_partition(rng, size)
        shape = SkewShape(lam)
        fam, _ = hook_family(shape)
        peel = corner_peeling_order(shape)
        standard = count_standard(shape)
        suite.check(
            verify_shelling_order(fam, peel)
            and standard == hook_length_formula(shape)
            and standard == count_balanced(shape)
            and outer_corner_cells(shape) == _top_left_cells(shape),
            shape=shape.to_dict(),
        )
        inner = random_partition(rng, int(rng.integers(0, size)))
        if len(inner) <= len(lam) and all(a < b for a, b in zip(inner, lam)):
            skew = SkewShape(lam, inner)
            skew_fam, _ = hook_family(skew)
            suite.check(
                verify_shelling_order(skew_fam, corner_peeling_order(skew)),
                shape=skew.to_dict(),
            )


def check_stirling(suite: _Suite, rng: np.random.Generator, samples: int) -> None:
    """Recurrence against the alternating sum, and small n against raw enumeration."""
    for _ in range(samples):
        n = int(rng.integers(0, 26))
        m = int(rng.integers(0, n + 1))
        suite.check(stirling2(n, m) == stirling2_explicit(n, m), n=n, m=m)
    for n in range(1, min(suite.bound, 7) + 1):
        for m in range(1, n + 1):
            suite.check(
                sum(1 for _ in surjections(n, m)) == surjection_count(n, m),
                n=n, m=m,
            )


def check_tail_bound(suite: _Suite, rng: np.random.Generator, samples: int) -> None:
    for _ in range(samples):
        n = _size(rng, suite.bound, 5)
        fam = random_shellable(rng, n)
        t = find_transversal(fam)
        m = random_m(rng, fam)
        for k in (1, 2, 4):
            suite.check(tail_bound_holds(fam, t, m, k), family=fam.to_dict(), m=m, k=k)


def check_witness(suite: _Suite, rng: np.random.Generator, samples: int) -> None:
    """Any word satisfying f1 yields a valid shelling order.

    Up to EXHAUSTIVE_N elements every witness for every admissible m is
    tried; larger families use the word built by solve.
    """
    for _ in range(samples):
        n = _size(rng, suite.bound, 8)
        fam = random_shellable(rng, n)
        t = find_transversal(fam)
        top = f1(fam)
        if n <= EXHAUSTIVE_N:
            lower, upper = m_range(fam)
            witnesses = [
                w for m in range(lower, upper + 1)
                for w in (SurjectiveWord(m, values) for values in surjections(n, m))
                if satisfies(w, fam, t, top)
            ]
        else:
            witnesses = [solve(fam, t, top, random_m(rng, fam))]
        for word in witnesses:
            order = shelling_order_from_witness(fam, t, word)
            suite.check(verify_shelling_order(fam, order), family=fam.to_dict(), word=list(word.values))


SUITES: Dict[str, Callable[[_Suite, np.random.Generator, int], None]] = {
    'hall': check_hall,
    'chang': check_chang,
    'greedy': check_greedy,
    'good-marriage': check_good_marriage,
    'converse': check_converse,
    'partition': check_partition,
    'duality': check_duality,
    'tableaux': check_tableaux,
    'stirling': check_stirling,
    'tail-bound': check_tail_bound,
    'witness': check_witness,
}


def run_suite(name: str, seed: int = 0, samples: int = 200, bound: int = 5) -> Dict[str, Any]:
    if name not in SUITES:
        raise InvalidInputError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    if samples < 0 or bound < 1:
        raise InvalidInputError("samples must be >= 0 and bound >= 1")
    suite = _Suite(name, seed, bound)
    SUITES[name](suite, np.random.default_rng(seed), samples)
    return suite.summary()
