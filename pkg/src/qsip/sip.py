"""Separable-partition machinery: basis, decomposition, tables, assembly.

A SIP class of modulus k (see :class:`~qsip.partitions.SipClassSpec`) has a
basis of minimal members: the first part sits exactly at its residue
threshold and every later gap lies in the half-open window
[d_r, d_r + k) keyed by the residue of the upper part.  Every class member
with n parts splits uniquely as a basis element plus a non-decreasing
padding of n non-negative multiples of k, added partwise.  The split is
constructed left to right: each basis part is the unique value in the
window above its predecessor that matches the class-member part's residue.

The generating function of the whole class is then

    sum over n of  b(n) / ((q^k; q^k) sub n)

where b(n) is the generating function of the n-part basis elements,
tabulated here by largest part via a window recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .partitions import (Partition, SipClassSpec, enumerate_partitions,
                         in_sip_class)
from .qfactory import PochSpec, poch_finite
from .series import MarkerPoly, QSeries


class NotInClass(Exception):
    """Decomposition was asked for a partition outside the class."""


class InsufficientTableDepth(Exception):
    """A basis table is too shallow for the requested truncation."""


# The concrete classes studied here, by their usual names.  Weighted Schur
# marks parts congruent to 0 or 1 (mod 3) with u and 0 or 2 (mod 3) with v.
NATURAL = SipClassSpec(1, (1,), (0,))
DISTINCT = SipClassSpec(1, (1,), (1,))
ROGERS_RAMANUJAN = SipClassSpec(1, (1,), (2,))
GOLLNITZ_GORDON = SipClassSpec(2, (1, 2), (2, 3))
SCHUR = SipClassSpec(3, (1, 2, 3), (3, 3, 4))
GLASGOW = SipClassSpec(2, (3, 2), (3, 0))

_U, _V = MarkerPoly.gens(("u", "v"))
SCHUR_REFINED = SipClassSpec(3, (1, 2, 3), (3, 3, 4),
                             markers=("u", "v"), weights=(_U, _V, _U * _V))

SPEC_REGISTRY: dict[str, SipClassSpec] = {
    "natural": NATURAL,
    "distinct": DISTINCT,
    "rogers-ramanujan": ROGERS_RAMANUJAN,
    "gollnitz": GOLLNITZ_GORDON,
    "schur": SCHUR,
    "schur-refined": SCHUR_REFINED,
    "glasgow": GLASGOW,
}


def basis_successors(spec: SipClassSpec, value: int) -> list[int]:
    """The k possible next basis parts above ``value``, one per residue."""
    out = []
    for i in range(spec.k):
        r = i + 1
        lo = value + spec.d[i]
        nxt = lo + ((r - lo) % spec.k)
        out.append(nxt)
    return sorted(out)


def is_basis_element(parts: Partition, spec: SipClassSpec) -> bool:
    """True iff the partition is a basis member of the class."""
    if not parts:
        return True
    if parts[0] != spec.min_value(parts[0]):
        return False
    for prev, cur in zip(parts, parts[1:]):
        gap = cur - prev
        dr = spec.min_gap(cur)
        if not dr <= gap < dr + spec.k:
            return False
    return True


def enumerate_basis(spec: SipClassSpec, n_parts: int, h_max: int
                    ) -> Iterator[Partition]:
    """All basis elements with exactly n_parts parts and largest part <= h_max."""
    if n_parts < 1:
        raise ValueError("n_parts must be at least 1")

    def extend(prefix: Partition, depth: int) -> Iterator[Partition]:
        if depth == n_parts:
            yield prefix
            return
        for nxt in basis_successors(spec, prefix[-1]):
            if nxt <= h_max:
                yield from extend(prefix + (nxt,), depth + 1)

    for first in sorted(set(spec.c)):
        if first <= h_max:
            yield from extend((first,), 1)


def enumerate_class(spec: SipClassSpec, total_max: int) -> Iterator[Partition]:
    """Class members of total <= total_max, generated with residue pruning.

    The pruned generation (next part at least prev + its residue gap, and at
    least its residue threshold) is cross-checked against the unpruned
    filter of enumerate_partitions in the test suite.
    """
    def extend(prefix: Partition, remaining: int) -> Iterator[Partition]:
        yield prefix
        prev = prefix[-1] if prefix else None
        for p in range(1, remaining + 1):
            if p < spec.min_value(p):
                continue
            if prev is not None and p - prev < spec.min_gap(p):
                continue
            yield from extend(prefix + (p,), remaining - p)

    yield from extend((), total_max)


@dataclass(frozen=True)
class SipDecomposition:
    """A basis element plus a padding of non-negative multiples of k."""

    basis: Partition
    padding: tuple[int, ...]

    def __post_init__(self):
        if len(self.basis) != len(self.padding):
            raise ValueError("basis and padding lengths differ")

    def check(self, spec: SipClassSpec) -> None:
        """Raise unless this is a valid decomposition for the spec."""
        if not is_basis_element(self.basis, spec):
            raise ValueError(f"{self.basis} is not a basis element")
        if any(p < 0 or p % spec.k for p in self.padding):
            raise ValueError("padding entries must be non-negative multiples of k")
        if any(a > b for a, b in zip(self.padding, self.padding[1:])):
            raise ValueError("padding must be non-decreasing")


def decompose(parts: Partition, spec: SipClassSpec) -> SipDecomposition:
    """Split a class member into its unique basis element and padding.

    Built left to right: the first basis part is the threshold of the first
    part's residue; each later basis part is the unique value congruent to
    the member part in the window [prev + d_r, prev + d_r + k).
    """
    if not in_sip_class(parts, spec):
        raise NotInClass(f"{parts} is not in the class {spec.c}/{spec.d} mod {spec.k}")
    basis: list[int] = []
    for i, p in enumerate(parts):
        if i == 0:
            b = spec.min_value(p)
        else:
            lo = basis[-1] + spec.min_gap(p)
            b = lo + ((p - lo) % spec.k)
        basis.append(b)
    padding = tuple(p - b for p, b in zip(parts, basis))
    return SipDecomposition(tuple(basis), padding)


def recompose(decomp: SipDecomposition) -> Partition:
    """Add padding to basis partwise; always lands back in the class."""
    return tuple(b + p for b, p in zip(decomp.basis, decomp.padding))


def _paddings(n: int, k: int, budget: int) -> Iterator[tuple[int, ...]]:
    """Non-decreasing n-tuples of non-negative multiples of k summing <= budget."""
    def extend(prefix: tuple[int, ...], low: int, rest: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield prefix
            return
        slots = n - len(prefix)
        p = low
        while p * slots <= rest:
            yield from extend(prefix + (p,), p, rest - p)
            p += k
    yield from extend((), 0, budget)


@dataclass
class SipVerifyReport:
    """Outcome of the exhaustive existence-and-uniqueness check."""

    spec: SipClassSpec
    total_max: int
    class_count: int = 0
    recomposed_count: int = 0
    collisions: list = field(default_factory=list)
    omissions: list = field(default_factory=list)
    not_in_class: list = field(default_factory=list)
    constructive_mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.collisions or self.omissions or self.not_in_class
                    or self.constructive_mismatches)

    def summary(self) -> str:
        verdict = "pass" if self.ok else "FAIL"
        return (f"verify_sip k={self.spec.k} c={self.spec.c} d={self.spec.d} "
                f"total<={self.total_max}: {verdict} "
                f"({self.class_count} members, {self.recomposed_count} recompositions, "
                f"{len(self.collisions)} collisions, {len(self.omissions)} omissions)")


def verify_sip(spec: SipClassSpec, total_max: int) -> SipVerifyReport:
    """Exhaustively confirm unique decomposition for all members <= total_max.

    Walks the full basis x padding lattice, recomposes every pair, and
    reports collisions (two decompositions of one partition), omissions
    (members never produced), escapes from the class, and any disagreement
    with the constructive decompose().
    """
    report = SipVerifyReport(spec=spec, total_max=total_max)
    members = {p for p in enumerate_class(spec, total_max)}
    report.class_count = len(members)

    seen: dict[Partition, SipDecomposition] = {}
    n = 1
    while min_basis_total(spec, n) <= total_max:
        for basis in enumerate_basis(spec, n, total_max):
            btot = sum(basis)
            if btot > total_max:
                continue
            for pad in _paddings(n, spec.k, total_max - btot):
                decomp = SipDecomposition(basis, pad)
                parts = recompose(decomp)
                report.recomposed_count += 1
                if parts not in members:
                    report.not_in_class.append((decomp, parts))
                    continue
                if parts in seen:
                    report.collisions.append((seen[parts], decomp, parts))
                else:
                    seen[parts] = decomp
        n += 1

    for parts in members:
        if not parts:
            continue
        if parts not in seen:
            report.omissions.append(parts)
            continue
        built = decompose(parts, spec)
        if recompose(built) != parts or built != seen[parts]:
            report.constructive_mismatches.append((parts, built))
    return report


@dataclass(frozen=True)
class BasisTable:
    """Generating functions b(n, h) of basis elements by part count and largest part."""

    spec: SipClassSpec
    max_n: int
    max_h: int
    entries: dict[tuple[int, int], QSeries]

    def entry(self, n: int, h: int) -> QSeries:
        """b(n, h); entries off the table support are exactly zero."""
        got = self.entries.get((n, h))
        if got is not None:
            return got
        return QSeries.zero(markers=self.spec.markers)

    def row(self, n: int) -> dict[int, QSeries]:
        return {h: s for (m, h), s in sorted(self.entries.items()) if m == n}

    def row_gf(self, n: int) -> QSeries:
        """b(n) = sum over h of b(n, h), as an exact polynomial."""
        total = QSeries.zero(markers=self.spec.markers)
        for (m, _), s in self.entries.items():
            if m == n:
                total = total + s
        return total


def basis_table(spec: SipClassSpec, max_n: int, max_h: int) -> BasisTable:
    """Tabulate b(n, h) for n <= max_n, h <= max_h by the window recurrence.

    Seed: b(1, c_r) = weight(c_r) q^c_r.  Step: a new largest part h admits
    previous largest parts g with h - g in [d_r, d_r + k), r the residue of
    h, so b(n, h) = weight(h) q^h * sum of b(n-1, g) over that window.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    entries: dict[tuple[int, int], QSeries] = {}
    for cr in set(spec.c):
        if cr <= max_h:
            entries[(1, cr)] = QSeries.monomial(cr, spec.weight(cr),
                                                markers=spec.markers)
    for n in range(2, max_n + 1):
        for h in range(1, max_h + 1):
            dr = spec.min_gap(h)
            acc = QSeries.zero(markers=spec.markers)
            hit = False
            for gap in range(dr, dr + spec.k):
                prev = entries.get((n - 1, h - gap))
                if prev is not None:
                    acc = acc + prev
                    hit = True
            if hit:
                entries[(n, h)] = QSeries.monomial(h, spec.weight(h),
                                                   markers=spec.markers) * acc
    return BasisTable(spec=spec, max_n=max_n, max_h=max_h, entries=entries)


def min_basis_total(spec: SipClassSpec, n: int) -> int:
    """Exact minimal total of an n-part basis element.

    Tracks a Pareto frontier of (last part, total) per step, since the
    cheapest continuation may hang off a larger last part.
    """
    if n <= 0:
        return 0
    frontier: set[tuple[int, int]] = {(c, c) for c in set(spec.c)}
    for _ in range(n - 1):
        nxt: set[tuple[int, int]] = set()
        for last, total in frontier:
            for succ in basis_successors(spec, last):
                nxt.add((succ, total + succ))
        frontier = {
            (last, total) for last, total in nxt
            if not any(o_last <= last and o_total < total
                       or (o_last < last and o_total <= total)
                       for o_last, o_total in nxt)
        }
    return min(total for _, total in frontier)


def assemble_gf(spec: SipClassSpec, table: BasisTable, trunc: int) -> QSeries:
    """Class generating function to ``trunc`` from a basis table.

    Requires the table to be deep enough that every basis element ignored
    (more than max_n parts, or largest part beyond max_h) has total > trunc.
    """
    if table.max_h < trunc:
        raise InsufficientTableDepth(
            f"table covers largest part {table.max_h} < trunc {trunc}"
        )
    if min_basis_total(spec, table.max_n + 1) <= trunc:
        raise InsufficientTableDepth(
            f"basis elements with {table.max_n + 1} parts still reach total <= {trunc}"
        )
    total = QSeries.one(trunc, markers=spec.markers)
    denom_spec = PochSpec(offset=spec.k, step=spec.k)
    for n in range(1, table.max_n + 1):
        denom = poch_finite(denom_spec, n, trunc=trunc)
        total = total + table.row_gf(n) * denom.inverse(trunc)
    return total


def class_gf(spec: SipClassSpec, trunc: int) -> QSeries:
    """Class generating function to ``trunc``, sizing the table automatically."""
    max_n = 0
    while min_basis_total(spec, max_n + 1) <= trunc:
        max_n += 1
    if max_n == 0:
        return QSeries.one(trunc, markers=spec.markers)
    table = basis_table(spec, max_n, trunc)
    return assemble_gf(spec, table, trunc)
