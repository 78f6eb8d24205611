"""Constructors for standard q-objects.

Finite and infinite q-Pochhammer products, Gaussian (q-binomial)
polynomials, congruence-restricted partition products and two-sided theta
sums.  Everything is exact integer arithmetic on :class:`~qsip.series.QSeries`
values; infinite products are cut at the first factor whose minimal exponent
exceeds the requested truncation, which cannot affect any retained
coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .series import MarkerPoly, QSeries


class DivergentProduct(Exception):
    """An infinite product had a factor with q-exponent zero."""


@dataclass(frozen=True)
class PochSpec:
    """Description of a q-Pochhammer symbol (A; q^step) with A = sign-adjusted.

    Each factor is ``1 - sign * x * q^(offset + j*step)`` for j = 0, 1, ...,
    where ``x`` is the named marker if one is attached and 1 otherwise.  So
    ``sign=+1`` gives the standard (1 - .) factors and ``sign=-1`` gives
    (1 + .) factors, e.g. PochSpec(offset=1, step=2, sign=-1) is (-q; q^2).
    """

    offset: int
    step: int
    sign: int = 1
    marker: str | None = None

    def __post_init__(self):
        if self.step < 1:
            raise ValueError("step must be a positive integer")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def factor_exponent(self, j: int) -> int:
        return self.offset + j * self.step

    def _registry(self, markers: Iterable[str] | None) -> tuple[str, ...]:
        if markers is not None:
            reg = tuple(markers)
            if self.marker is not None and self.marker not in reg:
                raise ValueError(f"marker {self.marker!r} not in registry {reg}")
            return reg
        return (self.marker,) if self.marker is not None else ()

    def factor(self, j: int, markers: Iterable[str] | None = None,
               trunc: int | None = None) -> QSeries:
        """The single factor 1 - sign * x * q^(offset + j*step)."""
        reg = self._registry(markers)
        exp = self.factor_exponent(j)
        if exp < 0:
            raise ValueError(f"factor {j} has negative q-exponent {exp}")
        if self.marker is None:
            coeff = MarkerPoly.const(-self.sign, reg)
        else:
            gen = MarkerPoly.gens(reg)[reg.index(self.marker)]
            coeff = gen * (-self.sign)
        one = QSeries.one(trunc=trunc, markers=reg)
        return one + QSeries.monomial(exp, coeff, trunc=trunc, markers=reg)


def poch_finite(spec: PochSpec, n: int, trunc: int | None = None,
                markers: Iterable[str] | None = None) -> QSeries:
    """The n-factor Pochhammer product for ``spec``; n = 0 is the empty product.

    Without ``trunc`` the result is an exact polynomial.
    """
    if n < 0:
        raise ValueError("factor count must be non-negative")
    reg = spec._registry(markers)
    out = QSeries.one(trunc=trunc, markers=reg)
    for j in range(n):
        out = out * spec.factor(j, markers=reg, trunc=trunc)
    return out


def poch_infinite(spec: PochSpec, trunc: int, markers: Iterable[str] | None = None) -> QSeries:
    """The infinite Pochhammer product, exact to ``trunc``.

    Requires every factor's q-exponent to be at least 1; factors whose
    minimal exponent exceeds ``trunc`` are dropped (they cannot change any
    retained coefficient, since each contributes only exponents >= its own).
    """
    if spec.factor_exponent(0) <= 0:
        raise DivergentProduct(
            f"factor q-exponent {spec.factor_exponent(0)} <= 0 in an infinite product"
        )
    reg = spec._registry(markers)
    out = QSeries.one(trunc=trunc, markers=reg)
    j = 0
    while spec.factor_exponent(j) <= trunc:
        out = out * spec.factor(j, markers=reg, trunc=trunc)
        j += 1
    return out


@lru_cache(maxsize=None)
def gaussian_binomial(a: int, b: int, base: int = 1) -> QSeries:
    """Gaussian binomial [a, b] in base q^base as an exact polynomial.

    Zero-extended: the result is 0 whenever b < 0 or b > a.  Computed
    division-free by the Pascal recurrence
    [a, b] = [a-1, b-1] + q^(base*b) * [a-1, b].
    """
    if base < 1:
        raise ValueError("base step must be a positive integer")
    if b < 0 or b > a:
        return QSeries.zero()
    if b == 0:
        return QSeries.one()
    lower = gaussian_binomial(a - 1, b - 1, base)
    upper = gaussian_binomial(a - 1, b, base)
    return lower + QSeries.monomial(base * b) * upper


@dataclass(frozen=True)
class CongruenceProductSpec:
    """Product over 1/(1 - q^n) with n filtered by residue classes.

    ``mode`` is "allowed" (n must lie in one of the residue classes) or
    "excluded" (n must avoid all of them).
    """

    modulus: int
    residues: frozenset[int]
    mode: str = "allowed"

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be a positive integer")
        object.__setattr__(self, "residues", frozenset(self.residues))
        if not self.residues <= set(range(self.modulus)):
            raise ValueError(
                f"residues {set(self.residues)} not within 0..{self.modulus - 1}"
            )
        if self.mode not in ("allowed", "excluded"):
            raise ValueError("mode must be 'allowed' or 'excluded'")

    def admits(self, n: int) -> bool:
        hit = (n % self.modulus) in self.residues
        return hit if self.mode == "allowed" else not hit


def congruence_product(spec: CongruenceProductSpec, trunc: int) -> QSeries:
    """Product of 1/(1 - q^n) over admitted part sizes n <= trunc."""
    coeffs = [0] * (trunc + 1)
    coeffs[0] = 1
    for n in range(1, trunc + 1):
        if spec.admits(n):
            for i in range(n, trunc + 1):
                coeffs[i] += coeffs[i - n]
    return QSeries(coeffs, trunc=trunc)


def theta_sum(quad: int, lin: int, trunc: int, alternating: bool = False) -> QSeries:
    """Two-sided theta sum over n of (+-1)^n q^(quad*n^2 + lin*n), truncated.

    ``alternating`` selects the (-1)^n sign; the plain sum uses +1.  All
    exponents within the summation window must be non-negative (Laurent
    tails are out of scope).
    """
    if quad < 1:
        raise ValueError("quadratic coefficient must be at least 1")
    coeffs = [0] * (trunc + 1)
    bound = int(((lin * lin + 4 * quad * trunc) ** 0.5 + abs(lin)) // (2 * quad)) + 2
    for n in range(-bound, bound + 1):
        exp = quad * n * n + lin * n
        if exp > trunc:
            continue
        if exp < 0:
            raise ValueError(f"negative exponent {exp} at n={n}; not a power series")
        coeffs[exp] += -1 if (alternating and n % 2) else 1
    return QSeries(coeffs, trunc=trunc)
