"""Registry of series = product identities, verified coefficientwise.

Every entry carries an LHS builder, an RHS builder and, where the identity
has a combinatorial reading, a brute-force counting oracle; verification is
exact integer comparison up to a truncation order.  Registered identities:

    euler-any            sum q^n/(q;q)_n                = 1/(q;q)
    euler-distinct       sum q^(n(n+1)/2)/(q;q)_n       = (-q;q)
    rogers-ramanujan     sum q^(n^2)/(q;q)_n            = 1/((q;q^5)(q^4;q^5))
    gollnitz-gordon-1    sum (-q;q^2)_n q^(n^2)/(q^2;q^2)_n
                                                        = 1/((q;q^8)(q^4;q^8)(q^7;q^8))
    schur-refined        weighted-class sum             = (-uq;q^3)(-vq^2;q^3)
    glasgow-mod8         telescoping sum                = product over n != 1,5,6 mod 8
    slater-46            n-copies, differences > 0      = product over n != 0,4,6 mod 10
    slater-61            n-copies, differences >= 0     = product over n != 0,6,8 mod 14
    slater-81            n-copies, differences >= -1    = two-color mod-14 product
    slater-6-corrected   overlined n-copies sum         = product over 3-free parts
    slater-86            even-subscript n-copies        = product over +-2..+-5 mod 16
    mod7-sum             binomial double sum            = product over n != 0,3,4 mod 7

The slater-81 product is stored in its corrected form: parts not congruent
to 0 or +-6 mod 14, with parts congruent to +-3 mod 14 in two colors.  The
transcriptions of this identity in circulation drop the +-1 and +-5
residue classes, which already fails at q^1; the corrected product matches
the series (and the counting oracle) exactly, with the exponent pattern
confirmed periodic through q^120.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import ncopies as nc
from .partitions import (counting_series, enumerate_overpartitions,
                         enumerate_partitions, in_sip_class)
from .qfactory import (CongruenceProductSpec, PochSpec, congruence_product,
                       gaussian_binomial, poch_finite, poch_infinite)
from .series import MarkerPoly, QSeries
from .sip import GLASGOW, GOLLNITZ_GORDON, SCHUR_REFINED, class_gf


class UnknownIdentity(Exception):
    """The requested identity id is not registered."""


class NoOracle(Exception):
    """The identity has no combinatorial counting oracle attached."""


_ONES = PochSpec(1, 1)       # (q; q)
_EVENS = PochSpec(2, 2)      # (q^2; q^2)
_ODDS = PochSpec(1, 2)       # (q; q^2)


def _inv(series: QSeries, trunc: int) -> QSeries:
    return series.inverse(trunc)


def _sum_terms(term: Callable[[int], QSeries], min_exp: Callable[[int], int],
               trunc: int) -> QSeries:
    """Sum term(n) for n = 0, 1, ... while the term can still reach trunc."""
    total = QSeries.zero(trunc)
    n = 0
    while min_exp(n) <= trunc:
        total = total + term(n)
        n += 1
    return total


# -- LHS builders -------------------------------------------------------------

def _euler_any_lhs(t: int) -> QSeries:
    return _sum_terms(
        lambda n: QSeries.monomial(n, trunc=t) * _inv(poch_finite(_ONES, n, trunc=t), t),
        lambda n: n, t)


def _euler_distinct_lhs(t: int) -> QSeries:
    return _sum_terms(
        lambda n: QSeries.monomial(n * (n + 1) // 2, trunc=t)
        * _inv(poch_finite(_ONES, n, trunc=t), t),
        lambda n: n * (n + 1) // 2, t)


def _rogers_ramanujan_lhs(t: int) -> QSeries:
    return _sum_terms(
        lambda n: QSeries.monomial(n * n, trunc=t)
        * _inv(poch_finite(_ONES, n, trunc=t), t),
        lambda n: n * n, t)


def _gollnitz_gordon_lhs(t: int) -> QSeries:
    return _sum_terms(
        lambda n: poch_finite(PochSpec(1, 2, sign=-1), n, trunc=t)
        * QSeries.monomial(n * n, trunc=t)
        * _inv(poch_finite(_EVENS, n, trunc=t), t),
        lambda n: n * n, t)


def _glasgow_term(n: int, t: int) -> QSeries:
    """Summand n >= 2 of the telescoping mod-8 series."""
    return (poch_finite(PochSpec(3, 4, sign=-1), n - 1, trunc=t)
            * QSeries.monomial(2 * n, trunc=t)
            * (1 + QSeries.monomial(2 * n - 1, trunc=t))
            * _inv(poch_finite(_EVENS, n, trunc=t), t))


def _glasgow_lhs(t: int) -> QSeries:
    head = QSeries.one(t) + (QSeries.monomial(2, trunc=t) + QSeries.monomial(3, trunc=t)) \
        * _inv(poch_finite(_EVENS, 1, trunc=t), t)
    total = head
    n = 2
    while 2 * n <= t:
        total = total + _glasgow_term(n, t)
        n += 1
    return total


def _schur_refined_lhs(t: int) -> QSeries:
    return class_gf(SCHUR_REFINED, t)


def _ncopies_lhs(r: int) -> Callable[[int], QSeries]:
    return lambda t: nc.ncopies_gf(r, t)


def _slater6_lhs(t: int) -> QSeries:
    return _sum_terms(
        lambda n: poch_finite(PochSpec(0, 1, sign=-1), n, trunc=t)
        * QSeries.monomial(n * n, trunc=t)
        * _inv(poch_finite(_ONES, n, trunc=t), t)
        * _inv(poch_finite(_ODDS, n, trunc=t), t),
        lambda n: n * n, t)


def _slater86_lhs(t: int) -> QSeries:
    return _sum_terms(
        lambda n: QSeries.monomial(2 * n * n, trunc=t)
        * _inv(poch_finite(_ONES, 2 * n, trunc=t), t),
        lambda n: 2 * n * n, t)


def _mod7_lhs(t: int) -> QSeries:
    def term(n: int) -> QSeries:
        inner = QSeries.zero(t)
        for m in range(0, n + 1):
            inner = inner + QSeries.monomial(m * m, trunc=t) * gaussian_binomial(n, m)
        return QSeries.monomial(n * n, trunc=t) \
            * _inv(poch_finite(_ONES, n, trunc=t), t) * inner
    return _sum_terms(term, lambda n: n * n, t)


# -- RHS builders -------------------------------------------------------------

def _inv_poch_product(specs: list[PochSpec], t: int) -> QSeries:
    prod = QSeries.one(t)
    for spec in specs:
        prod = prod * poch_infinite(spec, t)
    return prod.inverse(t)


def _euler_any_rhs(t: int) -> QSeries:
    return _inv_poch_product([_ONES], t)


def _euler_distinct_rhs(t: int) -> QSeries:
    return poch_infinite(PochSpec(1, 1, sign=-1), t)


def _rogers_ramanujan_rhs(t: int) -> QSeries:
    return _inv_poch_product([PochSpec(1, 5), PochSpec(4, 5)], t)


def _gollnitz_gordon_rhs(t: int) -> QSeries:
    return _inv_poch_product([PochSpec(1, 8), PochSpec(4, 8), PochSpec(7, 8)], t)


def _schur_refined_rhs(t: int) -> QSeries:
    reg = ("u", "v")
    left = poch_infinite(PochSpec(1, 3, sign=-1, marker="u"), t, markers=reg)
    right = poch_infinite(PochSpec(2, 3, sign=-1, marker="v"), t, markers=reg)
    return left * right


def _congruence_rhs(modulus: int, residues: set[int], mode: str) -> Callable[[int], QSeries]:
    spec = CongruenceProductSpec(modulus, frozenset(residues), mode)
    return lambda t: congruence_product(spec, t)


def _slater81_rhs(t: int) -> QSeries:
    base = congruence_product(
        CongruenceProductSpec(14, frozenset({0, 6, 8}), "excluded"), t)
    second_color = _inv_poch_product([PochSpec(3, 14), PochSpec(11, 14)], t)
    return base * second_color


def _slater6_rhs(t: int) -> QSeries:
    numer = poch_infinite(PochSpec(1, 3, sign=-1), t) \
        * poch_infinite(PochSpec(2, 3, sign=-1), t)
    denom = congruence_product(
        CongruenceProductSpec(3, frozenset({0}), "excluded"), t)
    return numer * denom


# -- counting oracles ---------------------------------------------------------

def _partition_oracle(predicate) -> Callable[[int], QSeries]:
    return lambda total: counting_series(
        enumerate_partitions(total, predicate), total)


def _distinct(parts) -> bool:
    return len(set(parts)) == len(parts)


def _gaps_at_least_two(parts) -> bool:
    return all(b - a >= 2 for a, b in zip(parts, parts[1:]))


def _schur_refined_oracle(total: int) -> QSeries:
    spec = SCHUR_REFINED

    def weight(parts):
        w = MarkerPoly.unit(spec.markers)
        for p in parts:
            w = w * spec.weight(p)
        return w

    stream = enumerate_partitions(total, lambda p: in_sip_class(p, spec))
    return counting_series(stream, total, weight=weight, markers=spec.markers)


def _ncopies_oracle(r: int) -> Callable[[int], QSeries]:
    return lambda total: counting_series(
        nc.enumerate_ncopies(total, min_diff=r), total, size=nc.copy_total)


def _overlined_ncopies_oracle(total: int) -> QSeries:
    return counting_series(nc.enumerate_ncopies_over(total), total)


def _even_subscript_oracle(total: int) -> QSeries:
    return counting_series(nc.enumerate_even_subscript(total), total,
                           size=nc.copy_total)


# -- the registry -------------------------------------------------------------

@dataclass(frozen=True)
class IdentityEntry:
    id: str
    source: str
    lhs: Callable[[int], QSeries]
    rhs: Callable[[int], QSeries]
    oracle: Callable[[int], QSeries] | None = None
    trunc_cap: int | None = None


REGISTRY: dict[str, IdentityEntry] = {}


def _register(entry: IdentityEntry) -> None:
    REGISTRY[entry.id] = entry


_register(IdentityEntry(
    "euler-any", "Euler's series for unrestricted partitions",
    _euler_any_lhs, _euler_any_rhs,
    _partition_oracle(None)))
_register(IdentityEntry(
    "euler-distinct", "Euler's series for distinct parts",
    _euler_distinct_lhs, _euler_distinct_rhs,
    _partition_oracle(_distinct)))
_register(IdentityEntry(
    "rogers-ramanujan", "first Rogers-Ramanujan identity",
    _rogers_ramanujan_lhs, _rogers_ramanujan_rhs,
    _partition_oracle(_gaps_at_least_two)))
_register(IdentityEntry(
    "gollnitz-gordon-1", "first Gollnitz-Gordon identity",
    _gollnitz_gordon_lhs, _gollnitz_gordon_rhs,
    _partition_oracle(lambda p: in_sip_class(p, GOLLNITZ_GORDON))))
_register(IdentityEntry(
    "schur-refined", "refined Schur product with part-class markers",
    _schur_refined_lhs, _schur_refined_rhs,
    _schur_refined_oracle, trunc_cap=25))
_register(IdentityEntry(
    "glasgow-mod8", "Gollnitz mod-8 theorem (Glasgow Math. J. 1967)",
    _glasgow_lhs, _congruence_rhs(8, {1, 5, 6}, "excluded"),
    _partition_oracle(lambda p: in_sip_class(p, GLASGOW))))
_register(IdentityEntry(
    "slater-46", "Slater (46)",
    _ncopies_lhs(1), _congruence_rhs(10, {0, 4, 6}, "excluded"),
    _ncopies_oracle(1)))
_register(IdentityEntry(
    "slater-61", "Slater (61)",
    _ncopies_lhs(0), _congruence_rhs(14, {0, 6, 8}, "excluded"),
    _ncopies_oracle(0)))
_register(IdentityEntry(
    "slater-81", "Slater (81), product side corrected",
    _ncopies_lhs(-1), _slater81_rhs,
    _ncopies_oracle(-1)))
_register(IdentityEntry(
    "slater-6-corrected", "Slater (6), corrected",
    _slater6_lhs, _slater6_rhs,
    _overlined_ncopies_oracle))
_register(IdentityEntry(
    "slater-86", "Slater (86)",
    _slater86_lhs, _congruence_rhs(16, {2, 3, 4, 5, 11, 12, 13, 14}, "allowed"),
    _even_subscript_oracle))
_register(IdentityEntry(
    "mod7-sum", "mod-7 Rogers-Ramanujan analogue",
    _mod7_lhs, _congruence_rhs(7, {0, 3, 4}, "excluded")))


def identity_ids() -> list[str]:
    return list(REGISTRY)


def get(identity: str) -> IdentityEntry:
    try:
        return REGISTRY[identity]
    except KeyError:
        raise UnknownIdentity(f"no identity registered under {identity!r}") from None


# -- verification -------------------------------------------------------------

@dataclass(frozen=True)
class VerifyResult:
    identity: str
    trunc: int
    passed: bool
    first_mismatch: int | None

    def summary(self) -> str:
        verdict = "pass" if self.passed else f"FAIL at q^{self.first_mismatch}"
        return f"{self.identity} (trunc {self.trunc}): {verdict}"


def verify(identity: str, trunc: int) -> VerifyResult:
    """Compare both sides of one identity coefficientwise up to trunc.

    Entries with a truncation cap (the bivariate ones) are checked at the
    smaller of the cap and the request.
    """
    entry = get(identity)
    eff = trunc if entry.trunc_cap is None else min(trunc, entry.trunc_cap)
    mismatch = entry.lhs(eff).first_mismatch(entry.rhs(eff))
    return VerifyResult(identity, eff, mismatch is None, mismatch)


def verify_all(trunc: int) -> list[VerifyResult]:
    return [verify(identity, trunc) for identity in REGISTRY]


@dataclass(frozen=True)
class ConcordanceResult:
    identity: str
    total_max: int
    passed: bool
    oracle_vs_lhs: int | None
    oracle_vs_rhs: int | None

    def summary(self) -> str:
        if self.passed:
            return f"{self.identity} (totals <= {self.total_max}): oracle = lhs = rhs"
        return (f"{self.identity} (totals <= {self.total_max}): FAIL "
                f"(vs lhs at {self.oracle_vs_lhs}, vs rhs at {self.oracle_vs_rhs})")


def oracle_concordance(identity: str, total_max: int) -> ConcordanceResult:
    """Three-way check: enumeration counts, LHS and RHS coefficients."""
    entry = get(identity)
    if entry.oracle is None:
        raise NoOracle(f"{identity} has no counting oracle")
    eff = total_max if entry.trunc_cap is None else min(total_max, entry.trunc_cap)
    counted = entry.oracle(eff)
    vs_lhs = counted.first_mismatch(entry.lhs(eff))
    vs_rhs = counted.first_mismatch(entry.rhs(eff))
    return ConcordanceResult(entry.id, eff, vs_lhs is None and vs_rhs is None,
                             vs_lhs, vs_rhs)


# -- the telescoping proof of the mod-8 sum -----------------------------------

def _glasgow_partial_closed(n: int, t: int) -> QSeries:
    """(-q^3; q^4)_n / (q^2; q^2)_n."""
    return poch_finite(PochSpec(3, 4, sign=-1), n, trunc=t) \
        * _inv(poch_finite(_EVENS, n, trunc=t), t)


@dataclass(frozen=True)
class TelescopeResult:
    n_max: int
    trunc: int
    passed: bool
    failures: tuple[str, ...]

    def summary(self) -> str:
        if self.passed:
            return f"telescoping partial sums pass for N <= {self.n_max} (trunc {self.trunc})"
        return "telescoping FAIL: " + "; ".join(self.failures)


def telescope_check(n_max: int, trunc: int) -> TelescopeResult:
    """Partial sums of the mod-8 series against their closed form.

    For each N the partial sum through term N must equal
    (-q^3; q^4)_N / (q^2; q^2)_N, and consecutive closed forms must differ
    by exactly the N-th summand.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    failures: list[str] = []
    partial = QSeries.one(trunc) \
        + (QSeries.monomial(2, trunc=trunc) + QSeries.monomial(3, trunc=trunc)) \
        * _inv(poch_finite(_EVENS, 1, trunc=trunc), trunc)
    for n in range(1, n_max + 1):
        if n >= 2:
            partial = partial + _glasgow_term(n, trunc)
        closed = _glasgow_partial_closed(n, trunc)
        if not partial.agrees_through(closed):
            failures.append(f"partial sum N={n} differs from closed form")
        if n >= 2:
            step = closed - _glasgow_partial_closed(n - 1, trunc)
            if not step.agrees_through(_glasgow_term(n, trunc)):
                failures.append(f"closed-form difference at N={n} is not term {n}")
    return TelescopeResult(n_max, trunc, not failures, tuple(failures))


# -- proof-chain helpers for the Gollnitz-Gordon product ----------------------

def gollnitz_intermediate(trunc: int) -> QSeries:
    """The pivot form (-q; q^2)-prefactored even-square sum.

    Equals (-q; q^2)_infinity times the sum over j of
    q^(2 j^2) / ((-q; q^2)_j (q^2; q^2)_j); both of the registered
    Gollnitz-Gordon sides must agree with it.
    """
    prefactor = poch_infinite(PochSpec(1, 2, sign=-1), trunc)
    total = QSeries.zero(trunc)
    j = 0
    while 2 * j * j <= trunc:
        denom = poch_finite(PochSpec(1, 2, sign=-1), j, trunc=trunc) \
            * poch_finite(_EVENS, j, trunc=trunc)
        total = total + QSeries.monomial(2 * j * j, trunc=trunc) * denom.inverse(trunc)
        j += 1
    return prefactor * total


def substitute_neg_q_squared(series: QSeries) -> QSeries:
    """Map q to -q^2: exponents double, odd coefficients flip sign.

    A series exact to trunc t becomes exact to 2t + 1 (odd exponents all
    vanish).
    """
    if series.trunc is None:
        raise ValueError("substitution needs a truncated series")
    if series.markers:
        raise ValueError("substitution is defined for marker-free series")
    out = [0] * (2 * series.trunc + 2)
    for n in range(series.trunc + 1):
        c = series.coefficient(n).constant_value()
        out[2 * n] = -c if n % 2 else c
    return QSeries(out, trunc=2 * series.trunc + 1)
