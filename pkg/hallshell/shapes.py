"""
Partitions, skew shapes, hooks and tableaux.

Cells are (row, column) pairs, 1-based, numbered row-major over lambda/mu;
every SetFamily view of a shape uses that numbering.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import permutations
from math import factorial
from operator import mul
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .configs import count_satisfying
from .errors import InvalidInputError, OracleLimitError
from .family import SetFamily, Transversal
from .shelling import ShellingOrder, unique_element_set
from .words import Configuration, SurjectiveWord, f0, satisfies

Cell = Tuple[int, int]

DEFAULT_TABLEAU_BOUND = 9


def _check_partition(parts: Sequence[int], name: str, allow_empty: bool) -> Tuple[int, ...]:
    parts = tuple(parts)
    if not parts and not allow_empty:
        raise InvalidInputError(f"{name} must be non-empty")
    for p in parts:
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise InvalidInputError(f"{name} parts must be positive integers, got {p!r}")
    for a, b in zip(parts, parts[1:]):
        if b > a:
            raise InvalidInputError(f"{name} = {list(parts)} is not weakly decreasing")
    return parts


@dataclass(frozen=True)
class SkewShape:
    """lambda / mu; `lam` and `mu` are partitions with mu inside lam."""
    lam: tuple
    mu: tuple = ()

    def __post_init__(self):
        lam = _check_partition(self.lam, 'lambda', allow_empty=False)
        mu = _check_partition(self.mu, 'mu', allow_empty=True)
        if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
            raise InvalidInputError(f"mu = {list(mu)} does not fit inside lambda = {list(lam)}")
        object.__setattr__(self, 'lam', lam)
        object.__setattr__(self, 'mu', mu)
        cells = tuple(
            (i, j)
            for i, length in enumerate(lam, 1)
            for j in range(self.mu_part(i) + 1, length + 1)
        )
        if not cells:
            raise InvalidInputError("lambda / mu has no cells")
        object.__setattr__(self, '_cells', cells)
        object.__setattr__(self, '_index', {c: k for k, c in enumerate(cells, 1)})

    def mu_part(self, row: int) -> int:
        return self.mu[row - 1] if row <= len(self.mu) else 0

    def lam_part(self, row: int) -> int:
        return self.lam[row - 1] if row <= len(self.lam) else 0

    @property
    def cells(self) -> Tuple[Cell, ...]:
        return self._cells

    @property
    def n(self) -> int:
        return len(self._cells)

    @property
    def is_normal(self) -> bool:
        return not self.mu

    def in_lambda(self, cell: Cell) -> bool:
        i, j = cell
        return i >= 1 and 1 <= j <= self.lam_part(i)

    def __contains__(self, cell: Cell) -> bool:
        return tuple(cell) in self._index

    def index_of(self, cell: Cell) -> int:
        try:
            return self._index[tuple(cell)]
        except KeyError:
            raise InvalidInputError(f"cell {tuple(cell)} is not in the shape") from None

    def cell_at(self, index: int) -> Cell:
        return self._cells[index - 1]

    def to_dict(self) -> Dict[str, Any]:
        return {'lambda': list(self.lam), 'mu': list(self.mu)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SkewShape':
        if not isinstance(data, dict) or not isinstance(data.get('lambda'), list):
            raise InvalidInputError("shape JSON needs a 'lambda' list")
        mu = data.get('mu') or []
        if not isinstance(mu, list):
            raise InvalidInputError("'mu' must be a list")
        return cls(tuple(data['lambda']), tuple(mu))


def conjugate(lam: Sequence[int]) -> Tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def partitions(n: int, largest: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of n in reverse lexicographic order."""
    if n == 0:
        yield ()
        return
    top = n if largest is None else min(n, largest)
    for first in range(top, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def skew_shapes(max_cells: int, max_size: Optional[int] = None) -> Iterator[SkewShape]:
    """Non-empty skew shapes with at most max_cells cells and |lambda| <= max_size.

    Shapes whose lambda has a row entirely inside mu are skipped, since they
    repeat a smaller shape translated.
    """
    max_size = max_cells + 2 if max_size is None else max_size
    for size in range(1, max_size + 1):
        for lam in partitions(size):
            for inner in range(0, size):
                if size - inner > max_cells:
                    continue
                for mu in partitions(inner):
                    if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
                        continue
                    if any(m == l for m, l in zip(mu, lam)):
                        continue
                    yield SkewShape(lam, mu)


def hook(shape: SkewShape, cell: Cell) -> frozenset:
    """Arm and leg of `cell` in lambda, restricted to the cells of lambda/mu."""
    i, j = cell
    if not shape.in_lambda(cell):
        raise InvalidInputError(f"cell {tuple(cell)} is outside lambda = {list(shape.lam)}")
    arm = {(i, c) for c in range(j, shape.lam_part(i) + 1)}
    leg = {(r, j) for r in range(i, len(shape.lam) + 1) if shape.lam_part(r) >= j}
    return frozenset(c for c in arm | leg if c in shape)


def hook_length(shape: SkewShape, cell: Cell) -> int:
    return len(hook(shape, cell))


def hook_family(shape: SkewShape) -> Tuple[SetFamily, Transversal]:
    """{H_r : r in lambda/mu} over the row-major cell numbering, with t(H_r) = r."""
    members = tuple(
        frozenset(shape.index_of(c) for c in hook(shape, cell))
        for cell in shape.cells
    )
    fam = SetFamily(shape.n, members)
    return fam, Transversal(tuple(range(1, shape.n + 1)))


def inner_corners(lam: Sequence[int]) -> frozenset:
    """Cells whose removal leaves a Young diagram."""
    lam = _check_partition(lam, 'lambda', allow_empty=False)
    return frozenset(
        (i, part) for i, part in enumerate(lam, 1)
        if i == len(lam) or lam[i] < part
    )


def outer_corner_cells(shape: SkewShape) -> frozenset:
    """Cells lying in exactly one hook of the hook family."""
    fam, _ = hook_family(shape)
    return frozenset(shape.cell_at(x) for x in unique_element_set(fam))


def corner_peeling_order(shape: SkewShape) -> ShellingOrder:
    """Delete inner corners of lambda one at a time until mu remains.

    The k-th deleted cell r_k gives the k-th member H_{r_k}; the topmost
    removable corner is taken first.
    """
    current = list(shape.lam)
    removed: List[int] = []
    while len(removed) < shape.n:
        for row in range(1, len(current) + 1):
            part = current[row - 1]
            below = current[row] if row < len(current) else 0
            if part > shape.mu_part(row) and below < part:
                removed.append(shape.index_of((row, part)))
                current[row - 1] -= 1
                break
    return ShellingOrder(tuple(removed))


def balanced_configuration(shape: SkewShape) -> Configuration:
    """Demand at (i, j) is the leg length i' - i + 1."""
    if not shape.is_normal:
        raise InvalidInputError("balanced tableaux are defined for normal shapes only")
    columns = conjugate(shape.lam)
    return Configuration(tuple(columns[j - 1] - i + 1 for i, j in shape.cells))


@dataclass(frozen=True)
class Tableau:
    """Filling of lambda/mu; entries[k - 1] sits in cell number k."""
    shape: SkewShape
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, 'entries', tuple(self.entries))
        if len(self.entries) != self.shape.n:
            raise InvalidInputError(
                f"{len(self.entries)} entries for a shape with {self.shape.n} cells"
            )
        for v in self.entries:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise InvalidInputError(f"tableau entries must be positive integers, got {v!r}")

    def __getitem__(self, cell: Cell) -> int:
        return self.entries[self.shape.index_of(cell) - 1]

    @classmethod
    def from_rows(cls, shape: SkewShape, rows: Sequence[Sequence[Optional[int]]]) -> 'Tableau':
        """Rows over lambda with None in the cells of mu."""
        if len(rows) != len(shape.lam):
            raise InvalidInputError(f"expected {len(shape.lam)} rows, got {len(rows)}")
        entries = []
        for i, row in enumerate(rows, 1):
            if len(row) != shape.lam_part(i):
                raise InvalidInputError(f"row {i} should have {shape.lam_part(i)} entries")
            for j, value in enumerate(row, 1):
                if j <= shape.mu_part(i):
                    if value is not None:
                        raise InvalidInputError(f"cell ({i}, {j}) belongs to mu and must be null")
                else:
                    entries.append(value)
        return cls(shape, tuple(entries))

    @classmethod
    def from_list(cls, shape: SkewShape, data: Sequence[Any]) -> 'Tableau':
        """Accepts nested rows or a flat row-major list over lambda."""
        if data and all(isinstance(row, list) for row in data):
            return cls.from_rows(shape, data)
        rows, position = [], 0
        for i in range(1, len(shape.lam) + 1):
            rows.append(list(data[position:position + shape.lam_part(i)]))
            position += shape.lam_part(i)
        if position != len(data):
            raise InvalidInputError(f"expected {position} row-major entries, got {len(data)}")
        return cls.from_rows(shape, rows)

    def to_rows(self) -> List[List[Optional[int]]]:
        return [
            [None if j <= self.shape.mu_part(i) else self[(i, j)] for j in range(1, part + 1)]
            for i, part in enumerate(self.shape.lam, 1)
        ]

    def word(self) -> SurjectiveWord:
        if not is_generalized_semistandard(self):
            raise InvalidInputError("tableau entries do not form an initial segment [m]")
        return SurjectiveWord.from_values(self.entries)


def is_generalized_semistandard(T: Tableau) -> bool:
    """The set of entries is [m] for some m <= n."""
    values = set(T.entries)
    return values == set(range(1, len(values) + 1))


def is_generalized_standard(T: Tableau) -> bool:
    return sorted(T.entries) == list(range(1, T.shape.n + 1))


def _neighbour_pairs(shape: SkewShape) -> List[Tuple[int, int]]:
    """(a, b) cell-index pairs with b directly right of or below a."""
    pairs = []
    for i, j in shape.cells:
        for other in ((i, j + 1), (i + 1, j)):
            if other in shape:
                pairs.append((shape.index_of((i, j)), shape.index_of(other)))
    return pairs


def is_standard(T: Tableau) -> bool:
    if not is_generalized_standard(T):
        return False
    return all(T.entries[a - 1] < T.entries[b - 1] for a, b in _neighbour_pairs(T.shape))


def tableau_satisfies(T: Tableau, f: Configuration) -> bool:
    """Each entry has rank f(r) among the distinct entries of its hook."""
    fam, t = hook_family(T.shape)
    f.check(fam)
    if not is_generalized_semistandard(T):
        return False
    return satisfies(T.word(), fam, t, f)


def is_balanced(T: Tableau) -> bool:
    if not is_generalized_standard(T):
        return False
    return tableau_satisfies(T, balanced_configuration(T.shape))


def is_standard_by_configuration(T: Tableau) -> bool:
    """Standardness read as satisfying f0 with a permutation."""
    fam, _ = hook_family(T.shape)
    return is_generalized_standard(T) and tableau_satisfies(T, f0(fam))


def _permutation_array(n: int) -> np.ndarray:
    return np.array(list(permutations(range(1, n + 1))), dtype=np.int8)


def count_standard(shape: SkewShape, bound: int = DEFAULT_TABLEAU_BOUND) -> int:
    """Standard fillings counted by filtering all n! bijective fillings."""
    if shape.n > bound:
        raise OracleLimitError('cells', shape.n, bound)
    fillings = _permutation_array(shape.n)
    keep = np.ones(fillings.shape[0], dtype=bool)
    for a, b in _neighbour_pairs(shape):
        keep &= fillings[:, a - 1] < fillings[:, b - 1]
    return int(keep.sum())


def count_balanced(shape: SkewShape, bound: int = DEFAULT_TABLEAU_BOUND) -> int:
    """Balanced tableaux, i.e. permutations satisfying the balanced configuration."""
    f = balanced_configuration(shape)
    fam, t = hook_family(shape)
    return count_satisfying(fam, t, f, shape.n, bound=bound)


def hook_product(shape: SkewShape) -> int:
    return reduce(mul, (hook_length(shape, c) for c in shape.cells), 1)


def hook_length_formula(shape: SkewShape) -> int:
    """n! / prod h_r for a normal shape."""
    if not shape.is_normal:
        raise InvalidInputError("the hook-length formula applies to normal shapes")
    total, product_ = factorial(shape.n), hook_product(shape)
    if total % product_:
        raise ArithmeticError(f"{total} is not divisible by {product_}")
    return total // product_
