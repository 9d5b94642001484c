"""
Exact counting: Stirling numbers of the second kind, surjections and the
average number of words per configuration.

Everything here is integer or Fraction arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict

from .configs import configuration_count, count_by_configuration, enumerate_configurations, m_range
from .errors import HypothesisError, InvalidInputError
from .family import SetFamily, Transversal
from .shelling import is_shellable

DEFAULT_AVERAGE_BOUND = 8


def _check_pair(n: int, m: int) -> None:
    for name, value in (('n', n), ('m', m)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise InvalidInputError(f"{name} must be a non-negative integer, got {value!r}")


@lru_cache(maxsize=None)
def stirling2(n: int, m: int) -> int:
    """S(n, m) by the row recurrence S(i, j) = j S(i - 1, j) + S(i - 1, j - 1).

    S(0, 0) = 1, S(n, 0) = 0 for n > 0 and zero when m > n.
    """
    _check_pair(n, m)
    if m > n:
        return 0
    if n == m:
        return 1
    if m == 0:
        return 0
    row = [0, 1] + [0] * (m - 1)
    for i in range(2, n + 1):
        for j in range(min(m, i), 0, -1):
            row[j] = j * row[j] + row[j - 1]
    return row[m]


def stirling2_explicit(n: int, m: int) -> int:
    """(1/m!) * sum_i (-1)^i C(m, i) (m - i)^n."""
    _check_pair(n, m)
    total = sum((-1) ** i * comb(m, i) * (m - i) ** n for i in range(m + 1))
    return total // factorial(m)


def surjection_count(n: int, m: int) -> int:
    """m! S(n, m)."""
    if m < 1 or n < m:
        raise InvalidInputError(f"need 1 <= m <= n, got n = {n}, m = {m}")
    return factorial(m) * stirling2(n, m)


def _check_average_hypotheses(fam: SetFamily, m: int) -> None:
    fam.require_nonempty()
    if fam.size != fam.n:
        raise HypothesisError('|members| = n', f"{fam.size} members over [{fam.n}]")
    if not is_shellable(fam):
        raise HypothesisError('family is shellable')
    lower, upper = m_range(fam)
    if not isinstance(m, int) or not lower <= m <= upper:
        raise HypothesisError(
            'min(n, n - |S| + 1) <= m <= n', f"m = {m}, allowed range [{lower}, {upper}]"
        )


def average_formula(fam: SetFamily, m: int) -> Fraction:
    """m! S(n, m) / prod |F| for a shellable family and m in range."""
    _check_average_hypotheses(fam, m)
    return Fraction(surjection_count(fam.n, m), configuration_count(fam))


def average_bruteforce(
    fam: SetFamily,
    t: Transversal,
    m: int,
    bound: int = DEFAULT_AVERAGE_BOUND,
) -> Fraction:
    """Mean of A_{n,m}(f) over the configurations with at least one word.

    Zero when no configuration is achieved.
    """
    counts = count_by_configuration(fam, t, m, bound=bound)
    if not counts:
        return Fraction(0)
    return Fraction(sum(counts.values()), len(counts))


def average_closed_form(fam: SetFamily, m: int) -> Fraction:
    """Closed forms for n - m in {0, 1, 2}."""
    _check_average_hypotheses(fam, m)
    base = Fraction(factorial(m), configuration_count(fam))
    pairs = comb(m + 1, 2)
    gap = fam.n - m
    if gap == 0:
        return base
    if gap == 1:
        return pairs * base
    if gap == 2:
        return Fraction(1, 2) * pairs * (pairs + Fraction(2 * m + 1, 3)) * base
    raise HypothesisError('n - m in {0, 1, 2}', f"n - m = {gap}")


def tail_bound_holds(
    fam: SetFamily,
    t: Transversal,
    m: int,
    k: int,
    bound: int = DEFAULT_AVERAGE_BOUND,
) -> bool:
    """#{f : A(f) <= k * average} >= (1 - 1/k) * prod |F| over every configuration."""
    if not isinstance(k, int) or k < 1:
        raise InvalidInputError(f"k must be a positive integer, got {k!r}")
    average = average_formula(fam, m)
    counts = count_by_configuration(fam, t, m, bound=bound)
    threshold = k * average
    small = sum(
        1 for f in enumerate_configurations(fam, t)
        if counts.get(f.demands, 0) <= threshold
    )
    return small >= (1 - Fraction(1, k)) * configuration_count(fam)


def fraction_to_dict(value: Fraction) -> Dict[str, str]:
    return {'num': str(value.numerator), 'den': str(value.denominator)}


def fraction_from_dict(data: Dict[str, str]) -> Fraction:
    try:
        return Fraction(int(data['num']), int(data['den']))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise InvalidInputError(f"bad rational {data!r}: {e}") from e
