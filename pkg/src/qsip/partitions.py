"""Brute-force enumeration oracles for partitions and overpartitions.

Partitions are ascending tuples of positive integers (non-decreasing,
smallest part first).  These generators are deliberately simple and
unoptimized for totals beyond desk scale; they exist to cross-check the
generating-function machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import chain, combinations
from typing import Callable, Iterable, Iterator

from .series import MarkerPoly, QSeries

Partition = tuple[int, ...]


def enumerate_partitions(total_max: int,
                         predicate: Callable[[Partition], bool] | None = None
                         ) -> Iterator[Partition]:
    """Yield every partition of every total 0..total_max, each exactly once.

    Parts are ascending; the empty partition (of 0) is always first.  An
    optional predicate filters the stream without affecting uniqueness.
    """
    if total_max < 0:
        raise ValueError("total_max must be non-negative")

    def gen(prefix: Partition, remaining: int, min_part: int) -> Iterator[Partition]:
        yield prefix
        for p in range(min_part, remaining + 1):
            yield from gen(prefix + (p,), remaining - p, p)

    for part in gen((), total_max, 1):
        if predicate is None or predicate(part):
            yield part


@lru_cache(maxsize=None)
def partition_count(total: int, max_part: int | None = None) -> int:
    """Independent recursive partition counter (for duplicate-free checks)."""
    if max_part is None:
        max_part = total
    if total == 0:
        return 0 if max_part < 0 else 1
    if total < 0 or max_part <= 0:
        return 0
    return partition_count(total - max_part, min(max_part, total - max_part)) \
        + partition_count(total, max_part - 1)


@dataclass(frozen=True)
class SipClassSpec:
    """Parameters of a separable partition class with modulus k.

    ``c[i]`` is the minimum value of a part congruent to i+1 (mod k) and
    ``d[i]`` the minimum gap below such a part; a class member must satisfy
    both for every part (gaps only from the second part on).  Optional
    residue-indexed marker weights refine the generating functions.
    """

    k: int
    c: tuple[int, ...]
    d: tuple[int, ...]
    markers: tuple[str, ...] = ()
    weights: tuple[MarkerPoly, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(self.c))
        object.__setattr__(self, "d", tuple(self.d))
        object.__setattr__(self, "markers", tuple(self.markers))
        if self.k < 1:
            raise ValueError("modulus k must be a positive integer")
        if len(self.c) != self.k or len(self.d) != self.k:
            raise ValueError("c and d must each have k entries")
        for i, cr in enumerate(self.c):
            if cr <= 0:
                raise ValueError(f"threshold c_{i + 1} = {cr} must be positive")
            if cr % self.k != (i + 1) % self.k:
                raise ValueError(
                    f"threshold c_{i + 1} = {cr} is not congruent to {i + 1} mod {self.k}"
                )
        if any(dr < 0 for dr in self.d):
            raise ValueError("gaps d must be non-negative")
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(self.weights))
            if len(self.weights) != self.k:
                raise ValueError("weights must have one entry per residue class")
            for w in self.weights:
                if w.markers != self.markers:
                    raise ValueError("weight registry does not match spec markers")

    def residue_index(self, value: int) -> int:
        """Index into c/d for the residue class of a part value."""
        return (value - 1) % self.k

    def min_value(self, value: int) -> int:
        return self.c[self.residue_index(value)]

    def min_gap(self, value: int) -> int:
        """Minimum gap below a part of this value (keyed by its residue)."""
        return self.d[self.residue_index(value)]

    def weight(self, value: int) -> MarkerPoly:
        if self.weights is None:
            return MarkerPoly.unit(self.markers)
        return self.weights[self.residue_index(value)]


def in_sip_class(parts: Partition, spec: SipClassSpec) -> bool:
    """True iff every part meets its residue threshold and gap condition."""
    prev = None
    for p in parts:
        if p < spec.min_value(p):
            return False
        if prev is not None and p - prev < spec.min_gap(p):
            return False
        prev = p
    return True


@dataclass(frozen=True)
class Overpartition:
    """Partition with at most one overlined summand per distinct part size."""

    parts: tuple[int, ...]
    overlined: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        object.__setattr__(self, "overlined", frozenset(self.overlined))
        if any(p <= 0 for p in self.parts):
            raise ValueError("parts must be positive")
        if tuple(sorted(self.parts)) != self.parts:
            raise ValueError("parts must be ascending")
        if not self.overlined <= set(self.parts):
            raise ValueError("overlines must sit on part sizes that occur")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        seen: set[int] = set()
        out = []
        for p in self.parts:
            if p in self.overlined and p not in seen:
                out.append(f"{p}~")
                seen.add(p)
            else:
                out.append(str(p))
        return "+".join(out) if out else "0"


def enumerate_overpartitions(total_max: int,
                             predicate: Callable[[Overpartition], bool] | None = None
                             ) -> Iterator[Overpartition]:
    """Yield all overpartitions of totals 0..total_max passing the predicate.

    The overline is a flag on a part size, not a position, so a plain
    partition with s distinct sizes produces 2^s overpartitions.
    """
    for parts in enumerate_partitions(total_max):
        sizes = sorted(set(parts))
        for r in range(len(sizes) + 1):
            for marked in combinations(sizes, r):
                over = Overpartition(parts, frozenset(marked))
                if predicate is None or predicate(over):
                    yield over


def _default_size(obj) -> int:
    total = getattr(obj, "total", None)
    if total is not None:
        return total
    if isinstance(obj, tuple):
        return sum(obj)
    raise TypeError(f"cannot infer a size for {obj!r}; pass size=")


def counting_series(stream: Iterable, trunc: int,
                    size: Callable | None = None,
                    weight: Callable | None = None,
                    markers: tuple[str, ...] = ()) -> QSeries:
    """Accumulate a stream of combinatorial objects into sum(count(n) q^n).

    ``size`` maps an object to its total (defaults to .total or tuple sum);
    ``weight`` optionally maps an object to a MarkerPoly, turning the count
    into a marker-refined generating function.
    """
    size = size or _default_size
    zero = MarkerPoly(markers)
    coeffs = [zero] * (trunc + 1)
    for obj in stream:
        n = size(obj)
        if n > trunc:
            continue
        w = MarkerPoly.unit(markers) if weight is None else weight(obj)
        coeffs[n] = coeffs[n] + w
    return QSeries(coeffs, trunc=trunc, markers=markers)


def powerset(items: Iterable) -> Iterator[tuple]:
    items = list(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))
