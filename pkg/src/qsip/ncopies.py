"""Partitions with n copies of n: subscripted parts and weighted differences.

Parts are ordered pairs ``value_sub`` with 1 <= sub <= value, listed in
ascending lexicographic order.  The governing distance is the weighted
difference ((a - b)) = a.value - b.value - a.sub - b.sub between an upper
part a and a lower part b.  Classes constrain the weighted difference of
successive parts; the minimal members (smallest part diagonal, every
successive weighted difference exactly r) play the role the basis plays for
ordinary separable classes, and ordinary non-negative partitions attach to
them partwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple

from .partitions import powerset
from .qfactory import PochSpec, gaussian_binomial, poch_finite
from .series import QSeries


class ConstraintViolation(Exception):
    """Input violates the weighted-difference precondition."""


class CopyPart(NamedTuple):
    value: int
    sub: int

    def __str__(self) -> str:
        return f"{self.value}:{self.sub}"


def check_part(part: CopyPart) -> CopyPart:
    if not 1 <= part.sub <= part.value:
        raise ValueError(f"subscript must satisfy 1 <= sub <= value, got {part}")
    return part


def is_diagonal(part: CopyPart) -> bool:
    """True for parts of the form j_j (value equal to subscript)."""
    return part.value == part.sub


def weighted_difference(upper: CopyPart, lower: CopyPart) -> int:
    """((upper - lower)) = value difference minus both subscripts."""
    return upper.value - lower.value - upper.sub - lower.sub


def copy_total(parts: tuple[CopyPart, ...]) -> int:
    return sum(p.value for p in parts)


def enumerate_ncopies(total_max: int, min_diff: int | None = None,
                      predicate: Callable | None = None
                      ) -> Iterator[tuple[CopyPart, ...]]:
    """All n-copies partitions of totals 0..total_max, ascending lex order.

    With ``min_diff`` set, successive parts must have weighted difference at
    least min_diff (which forces strictly increasing parts for min_diff >=
    -1); without it arbitrary multisets are allowed.  An optional predicate
    filters the yield.
    """
    if total_max < 0:
        raise ValueError("total_max must be non-negative")

    def gen(prefix: tuple[CopyPart, ...], remaining: int) -> Iterator[tuple[CopyPart, ...]]:
        yield prefix
        last = prefix[-1] if prefix else None
        for value in range(1, remaining + 1):
            for sub in range(1, value + 1):
                cand = CopyPart(value, sub)
                if last is not None:
                    if min_diff is None:
                        if cand < last:
                            continue
                    elif weighted_difference(cand, last) < min_diff:
                        continue
                yield from gen(prefix + (cand,), remaining - value)

    for parts in gen((), total_max):
        if predicate is None or predicate(parts):
            yield parts


# -- minimal chains and the attach/detach bijection -------------------------

def enumerate_base(total_max: int, r: int) -> Iterator[tuple[CopyPart, ...]]:
    """Chains with diagonal smallest part and successive weighted difference
    exactly r, over all totals 0..total_max."""
    if r < -1:
        raise ValueError("weighted-difference constant must be at least -1")

    def extend(prefix: tuple[CopyPart, ...], remaining: int) -> Iterator[tuple[CopyPart, ...]]:
        yield prefix
        last = prefix[-1]
        for sub in range(1, remaining + 1):
            value = last.value + last.sub + sub + r
            if value > remaining:
                break
            yield from extend(prefix + (CopyPart(value, sub),), remaining - value)

    yield ()
    for i in range(1, total_max + 1):
        yield from extend((CopyPart(i, i),), total_max - i)


def base_decompose(parts: tuple[CopyPart, ...], r: int
                   ) -> tuple[tuple[CopyPart, ...], tuple[int, ...]]:
    """Split off the unique exact-difference-r chain with the same subscripts.

    Returns (base, attached) where attached is the non-decreasing tuple of
    non-negative values added partwise to the base.  Raises
    :class:`ConstraintViolation` unless every successive weighted difference
    of the input is at least r.
    """
    for p in parts:
        check_part(p)
    for lower, upper in zip(parts, parts[1:]):
        if weighted_difference(upper, lower) < r:
            raise ConstraintViolation(
                f"weighted difference of {upper} over {lower} is below {r}"
            )
    base: list[CopyPart] = []
    for idx, p in enumerate(parts):
        if idx == 0:
            value = p.sub
        else:
            prev = base[-1]
            value = prev.value + prev.sub + p.sub + r
        base.append(CopyPart(value, p.sub))
    attached = tuple(p.value - b.value for p, b in zip(parts, base))
    return tuple(base), attached


def base_recompose(base: tuple[CopyPart, ...], attached: tuple[int, ...]
                   ) -> tuple[CopyPart, ...]:
    """Add an attached partition to a base chain partwise."""
    if len(base) != len(attached):
        raise ValueError("base and attached lengths differ")
    return tuple(CopyPart(b.value + a, b.sub) for b, a in zip(base, attached))


# -- chain generating functions ---------------------------------------------

@dataclass(frozen=True)
class ExactDiffTable:
    """Generating functions g(n, m, j) of exact-difference-r chains.

    Indexed by part count n and largest part m_j; built from the recurrence
    g(n, m, j) = q^m * sum over i of g(n-1, m - j - i - r, i), seeded by the
    diagonal one-part chains g(1, m, m) = q^m.
    """

    r: int
    max_n: int
    max_m: int
    entries: dict[tuple[int, int, int], QSeries]

    def entry(self, n: int, m: int, j: int) -> QSeries:
        return self.entries.get((n, m, j), QSeries.zero())

    def level_gf(self, n: int) -> QSeries:
        """Sum over (m, j) of g(n, m, j): all n-part chains."""
        total = QSeries.zero()
        for (k, _, _), s in self.entries.items():
            if k == n:
                total = total + s
        return total


def exact_diff_table(r: int, max_n: int, max_m: int) -> ExactDiffTable:
    if r < -1:
        raise ValueError("weighted-difference constant must be at least -1")
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    entries: dict[tuple[int, int, int], QSeries] = {}
    for m in range(1, max_m + 1):
        entries[(1, m, m)] = QSeries.monomial(m)
    for n in range(2, max_n + 1):
        for m in range(1, max_m + 1):
            for j in range(1, m + 1):
                acc = QSeries.zero()
                hit = False
                for i in range(1, m + 1):
                    prev = entries.get((n - 1, m - j - i - r, i))
                    if prev is not None:
                        acc = acc + prev
                        hit = True
                if hit:
                    entries[(n, m, j)] = QSeries.monomial(m) * acc
    return ExactDiffTable(r=r, max_n=max_n, max_m=max_m, entries=entries)


def exact_diff_closed(r: int, n: int, m: int, j: int) -> QSeries:
    """Closed form for g_r(n, m, j): a monomial times a base-q^2 binomial.

    The support splits by parity: chains alternate between diagonal-parity
    parts (value and subscript congruent mod 2) and, for odd r, the
    opposite; every (m, j) parity pattern outside the four supported
    combinations is identically zero.  Validated entrywise against
    :func:`exact_diff_table` in the test suite.
    """
    if r < -1:
        raise ValueError("weighted-difference constant must be at least -1")
    if n < 1 or not 1 <= j <= m:
        return QSeries.zero()
    if n == 1:
        return QSeries.monomial(m) if m == j else QSeries.zero()

    def shifted(main_exp: int, arg: int, order: int, shift: int) -> QSeries:
        gb = gaussian_binomial(arg, order, base=2)
        if gb == 0:
            return QSeries.zero()
        return QSeries.monomial(main_exp - shift) * gb

    if r % 2:  # r = 2R - 1
        R = (r + 1) // 2
        if n % 2 == 0:
            N = n // 2
            base_n = (4 * R + 2) * N * N - (8 * R + 2) * N + 3 * R + 1
            if m % 2 == 0 and j % 2 == 1:
                M, J = m // 2, (j + 1) // 2
                return shifted(3 * M - J + base_n,
                               M - (2 * R - 1) * N - J + R - 1, 2 * N - 2, 0)
            if m % 2 == 1 and j % 2 == 0:
                # Equals the even-value entry one subscript step up, divided
                # by q; the naive same-index pairing overshoots the support.
                M, J = (m + 1) // 2, j // 2
                return shifted(3 * M - J + base_n,
                               M - (2 * R - 1) * N - J + R - 2, 2 * N - 2, 2)
            return QSeries.zero()
        N = (n + 1) // 2
        base_n = (4 * R + 2) * N * N - (12 * R + 4) * N + 8 * R + 2
        if m % 2 == 0 and j % 2 == 0:
            M, J = m // 2, j // 2
            return shifted(3 * M - J + base_n,
                           M - (2 * R - 1) * N - J + 2 * R - 2, 2 * N - 3, 0)
        if m % 2 == 1 and j % 2 == 1:
            M, J = (m + 1) // 2, (j + 1) // 2
            return shifted(3 * M - J + base_n,
                           M - (2 * R - 1) * N - J + 2 * R - 2, 2 * N - 3, 1)
        return QSeries.zero()

    R = r // 2
    if n % 2 == 0:
        N = n // 2
        base_n = (4 * R + 4) * N * N - (8 * R + 6) * N + 3 * R + 2
        order = 2 * N - 2
        arg_shift = R - 1
    else:
        N = (n + 1) // 2
        base_n = (4 * R + 4) * N * N - (12 * R + 10) * N + 8 * R + 6
        order = 2 * N - 3
        arg_shift = 2 * R - 1
    if m % 2 == 0 and j % 2 == 0:
        M, J = m // 2, j // 2
        return shifted(3 * M - J + base_n, M - 2 * R * N - J + arg_shift, order, 0)
    if m % 2 == 1 and j % 2 == 1:
        M, J = (m + 1) // 2, (j + 1) // 2
        return shifted(3 * M - J + base_n, M - 2 * R * N - J + arg_shift, order, 1)
    return QSeries.zero()


def base_gf(parts: int, r: int, trunc: int) -> QSeries:
    """Generating function of exact-difference-r chains with a given part count.

    Equals q^(parts^2 + r*C(parts,2)) / (q; q^2)_parts, the diagonal chain
    total in the numerator and odd-step growth in the denominator.
    """
    if parts < 0:
        raise ValueError("part count must be non-negative")
    if r < -1:
        raise ValueError("weighted-difference constant must be at least -1")
    if parts == 0:
        return QSeries.one(trunc)
    exp = parts * parts + r * (parts * (parts - 1) // 2)
    if exp > trunc:
        return QSeries.zero(trunc)
    odds = poch_finite(PochSpec(offset=1, step=2), parts, trunc=trunc)
    return QSeries.monomial(exp, trunc=trunc) * odds.inverse(trunc)


def ncopies_gf(r: int, trunc: int) -> QSeries:
    """Generating function of n-copies partitions with successive weighted
    differences at least r: attach an ordinary partition to each chain."""
    total = QSeries.zero(trunc)
    m = 0
    while True:
        exp = m * m + r * (m * (m - 1) // 2)
        if exp > trunc:
            break
        ones = poch_finite(PochSpec(offset=1, step=1), m, trunc=trunc)
        total = total + base_gf(m, r, trunc) * ones.inverse(trunc)
        m += 1
    return total


# -- overlined variants -------------------------------------------------------

@dataclass(frozen=True)
class OverCopyPartition:
    """n-copies partition with an optional overline per part species."""

    parts: tuple[CopyPart, ...]
    overlined: frozenset[CopyPart]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        object.__setattr__(self, "overlined", frozenset(self.overlined))
        if not self.overlined <= set(self.parts):
            raise ValueError("overlines must sit on parts that occur")

    @property
    def total(self) -> int:
        return copy_total(self.parts)

    def __str__(self) -> str:
        out = []
        for p in self.parts:
            mark = "~" if p in self.overlined else ""
            out.append(f"{p}{mark}")
        return "+".join(out) if out else "0"


def enumerate_ncopies_over(total_max: int) -> Iterator[OverCopyPartition]:
    """Overlined n-copies partitions under the chain-minimum overline rule.

    Successive weighted differences must be non-negative; within each
    maximal run of successive parts at weighted difference exactly zero,
    only the first (smallest) part may carry the overline.  Parts outside
    any run count as their own run, so they may always be overlined.
    """
    for parts in enumerate_ncopies(total_max, min_diff=0):
        carriers = [
            p for idx, p in enumerate(parts)
            if idx == 0 or weighted_difference(p, parts[idx - 1]) > 0
        ]
        for marked in powerset(carriers):
            yield OverCopyPartition(parts, frozenset(marked))


def enumerate_all_copy_overpartitions(total_max: int) -> Iterator[OverCopyPartition]:
    """Unrestricted overlined n-copies partitions (one overline per species)."""
    for parts in enumerate_ncopies(total_max):
        for marked in powerset(sorted(set(parts))):
            yield OverCopyPartition(parts, frozenset(marked))


def enumerate_even_subscript(total_max: int) -> Iterator[tuple[CopyPart, ...]]:
    """n-copies partitions with even subscripts, non-negative successive
    weighted differences, and no adjacent odd-value pair at difference zero."""
    def gen(prefix: tuple[CopyPart, ...], remaining: int) -> Iterator[tuple[CopyPart, ...]]:
        yield prefix
        last = prefix[-1] if prefix else None
        for value in range(1, remaining + 1):
            for sub in range(2, value + 1, 2):
                cand = CopyPart(value, sub)
                if last is not None:
                    wd = weighted_difference(cand, last)
                    if wd < 0:
                        continue
                    if wd == 0 and value % 2 and last.value % 2:
                        continue
                yield from gen(prefix + (cand,), remaining - value)

    yield from gen((), total_max)


def ncopies_overpartition_product(trunc: int) -> QSeries:
    """The species product: for every n, n factors (1 + q^n)/(1 - q^n)."""
    coeffs = [0] * (trunc + 1)
    coeffs[0] = 1
    for n in range(1, trunc + 1):
        for _ in range(n):
            for i in range(n, trunc + 1):
                coeffs[i] += coeffs[i - n]
            for i in range(trunc, n - 1, -1):
                coeffs[i] += coeffs[i - n]
    return QSeries(coeffs, trunc=trunc)
