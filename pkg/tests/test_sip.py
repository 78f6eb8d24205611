"""Basis enumeration, decomposition uniqueness and assembly contracts."""

import pytest

from qsip.partitions import counting_series, enumerate_partitions, in_sip_class
from qsip.qfactory import PochSpec, poch_finite, poch_infinite
from qsip.series import MarkerPoly, QSeries
from qsip.sip import (GLASGOW, GOLLNITZ_GORDON, DISTINCT, NATURAL,
                      ROGERS_RAMANUJAN, SCHUR, SCHUR_REFINED,
                      InsufficientTableDepth, NotInClass, SipDecomposition,
                      assemble_gf, basis_table, class_gf, decompose,
                      enumerate_basis, enumerate_class, is_basis_element,
                      min_basis_total, recompose, verify_sip)

ALL_SPECS = (NATURAL, DISTINCT, ROGERS_RAMANUJAN, GOLLNITZ_GORDON, SCHUR,
             GLASGOW)


class TestBasisEnumeration:
    def test_one_part_rows(self):
        assert set(enumerate_basis(GOLLNITZ_GORDON, 1, 30)) == {(1,), (2,)}
        assert set(enumerate_basis(SCHUR, 1, 30)) == {(1,), (2,), (3,)}

    def test_glasgow_two_part(self):
        assert set(enumerate_basis(GLASGOW, 2, 30)) == {
            (2, 2), (2, 5), (3, 4), (3, 7)}

    def test_single_chain_classes(self):
        assert list(enumerate_basis(NATURAL, 4, 30)) == [(1, 1, 1, 1)]
        assert list(enumerate_basis(DISTINCT, 4, 30)) == [(1, 2, 3, 4)]
        assert list(enumerate_basis(ROGERS_RAMANUJAN, 4, 30)) == [(1, 3, 5, 7)]

    def test_members_are_basis_elements(self):
        for spec in ALL_SPECS:
            for n in range(1, 5):
                for parts in enumerate_basis(spec, n, 25):
                    assert is_basis_element(parts, spec)
                    assert in_sip_class(parts, spec)


class TestPrunedEnumeration:
    def test_matches_unpruned_filter(self):
        for spec in ALL_SPECS:
            pruned = set(enumerate_class(spec, 15))
            plain = {p for p in enumerate_partitions(15)
                     if in_sip_class(p, spec)}
            assert pruned == plain


class TestDecompose:
    def test_one_part_minimal(self):
        d = decompose((1,), GOLLNITZ_GORDON)
        assert d.basis == (1,) and d.padding == (0,)

    def test_natural_class_shift(self):
        for parts in enumerate_partitions(12):
            if not parts:
                continue
            d = decompose(parts, NATURAL)
            assert d.basis == (1,) * len(parts)
            assert d.padding == tuple(p - 1 for p in parts)

    def test_matches_lattice_search(self):
        # the constructive split agrees with brute force over basis x padding
        spec = GOLLNITZ_GORDON
        for parts in enumerate_class(spec, 18):
            if not parts:
                continue
            d = decompose(parts, spec)
            hits = []
            for basis in enumerate_basis(spec, len(parts), 18):
                pad = tuple(p - b for p, b in zip(parts, basis))
                if all(x >= 0 and x % spec.k == 0 for x in pad) \
                        and list(pad) == sorted(pad):
                    hits.append(SipDecomposition(basis, pad))
            assert hits == [d]

    def test_not_in_class(self):
        with pytest.raises(NotInClass):
            decompose((1, 2), ROGERS_RAMANUJAN)

    def test_recompose(self):
        assert recompose(SipDecomposition((1, 3), (0, 2))) == (1, 5)
        assert in_sip_class((1, 5), ROGERS_RAMANUJAN)
        d = SipDecomposition((2, 5), (0, 0))
        assert recompose(d) == (2, 5)

    def test_round_trips(self):
        for spec in ALL_SPECS:
            for parts in enumerate_class(spec, 18):
                if parts:
                    assert recompose(decompose(parts, spec)) == parts


class TestVerifySip:
    @pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: f"k{s.k}c{s.c}")
    def test_exhaustive(self, spec):
        report = verify_sip(spec, 20)
        assert report.ok, report.summary()
        assert report.collisions == [] and report.omissions == []

    def test_rejects_bad_spec_before_verification(self):
        from qsip.partitions import SipClassSpec
        with pytest.raises(ValueError):
            SipClassSpec(3, (1, 2, 4), (1, 1, 1))


class TestBasisTable:
    def test_seed_rows(self):
        tbl = basis_table(GOLLNITZ_GORDON, 3, 20)
        assert tbl.entry(1, 1) == QSeries.monomial(1)
        assert tbl.entry(1, 2) == QSeries.monomial(2)
        schur = basis_table(SCHUR_REFINED, 2, 20)
        u, v = MarkerPoly.gens(("u", "v"))
        assert schur.entry(1, 3) == QSeries.monomial(3, u * v, markers=("u", "v"))

    def test_glasgow_two_part_row(self):
        tbl = basis_table(GLASGOW, 2, 20)
        assert {h: str(s) for h, s in tbl.row(2).items()} == {
            2: "q^4", 4: "q^7", 5: "q^7", 7: "q^10"}

    def test_doubling_relation(self):
        tbl = basis_table(GOLLNITZ_GORDON, 6, 40)
        for n in range(1, 7):
            for m in range(1, 21):
                assert tbl.entry(n, 2 * m) == QSeries.monomial(1) * tbl.entry(n, 2 * m - 1)

    @pytest.mark.parametrize("spec", ALL_SPECS + (SCHUR_REFINED,),
                             ids=lambda s: f"k{s.k}c{s.c}w{bool(s.weights)}")
    def test_matches_enumeration(self, spec):
        h_max = 30
        tbl = basis_table(spec, 8, h_max)
        for n in range(1, 9):
            grouped: dict[int, QSeries] = {}
            for parts in enumerate_basis(spec, n, h_max):
                w = MarkerPoly.unit(spec.markers)
                for p in parts:
                    w = w * spec.weight(p)
                mono = QSeries.monomial(sum(parts), w, markers=spec.markers)
                h = parts[-1]
                grouped[h] = grouped.get(h, QSeries.zero(markers=spec.markers)) + mono
            for h in range(1, h_max + 1):
                want = grouped.get(h, QSeries.zero(markers=spec.markers))
                assert tbl.entry(n, h) == want, (spec.c, n, h)

    def test_row_gf_sums_rows(self):
        tbl = basis_table(GLASGOW, 4, 30)
        total = QSeries.zero()
        for h in range(1, 31):
            total = total + tbl.entry(4, h)
        assert tbl.row_gf(4) == total


class TestMinBasisTotal:
    def test_known_growth(self):
        for n in range(1, 9):
            assert min_basis_total(NATURAL, n) == n
            assert min_basis_total(DISTINCT, n) == n * (n + 1) // 2
            assert min_basis_total(ROGERS_RAMANUJAN, n) == n * n
            assert min_basis_total(GLASGOW, n) == 2 * n

    def test_matches_enumeration(self):
        for spec in ALL_SPECS:
            for n in range(1, 6):
                best = min(sum(b) for b in enumerate_basis(spec, n, 60))
                assert min_basis_total(spec, n) == best


class TestAssembleGf:
    def test_natural_recovers_euler_product(self):
        t = 30
        assert class_gf(NATURAL, t) == poch_infinite(PochSpec(1, 1), t).inverse(t)

    def test_rogers_ramanujan_sum(self):
        t = 30
        direct = QSeries.zero(t)
        n = 0
        while n * n <= t:
            direct = direct + QSeries.monomial(n * n, trunc=t) \
                * poch_finite(PochSpec(1, 1), n, trunc=t).inverse(t)
            n += 1
        assert class_gf(ROGERS_RAMANUJAN, t) == direct

    def test_gollnitz_product(self):
        t = 30
        rhs = (poch_infinite(PochSpec(1, 8), t) * poch_infinite(PochSpec(4, 8), t)
               * poch_infinite(PochSpec(7, 8), t)).inverse(t)
        assert class_gf(GOLLNITZ_GORDON, t) == rhs

    @pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: f"k{s.k}c{s.c}")
    def test_matches_member_counts(self, spec):
        t = 30
        oracle = counting_series(enumerate_class(spec, t), t)
        assert class_gf(spec, t) == oracle

    def test_shallow_table_rejected(self):
        tbl = basis_table(ROGERS_RAMANUJAN, 2, 30)
        with pytest.raises(InsufficientTableDepth):
            assemble_gf(ROGERS_RAMANUJAN, tbl, 30)  # 3-part elements reach 9
        tbl2 = basis_table(ROGERS_RAMANUJAN, 6, 20)
        with pytest.raises(InsufficientTableDepth):
            assemble_gf(ROGERS_RAMANUJAN, tbl2, 30)  # largest-part bound short
