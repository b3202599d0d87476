import json
import random
from collections import Counter

import pytest

from ar_spectra.spectrum import (
    IntPolynomial,
    blockform_radicands,
    char_poly_blockform,
    char_poly_formula_a,
    char_poly_formula_b,
    radicands_a,
    radicands_b,
    report_plain,
    report_structured,
    spectrum,
)


def poly(*ascending):
    return IntPolynomial(ascending)


class TestIntPolynomial:
    def test_normalization(self):
        assert poly(1, 2, 0, 0).coeffs == (1, 2)
        assert poly(0, 0).coeffs == ()
        assert poly().degree == -1
        assert poly(5).degree == 0

    def test_eval(self):
        p = poly(-2, 0, 1)  # t^2 - 2
        assert p(3) == 7
        assert p(-3) == 7
        assert poly()(10) == 0

    def test_mul(self):
        assert (poly(-1, 1) * poly(1, 1)).coeffs == (-1, 0, 1)
        assert (poly(-4, 0, 1) * poly(-3, 0, 1)).coeffs == (12, 0, -7, 0, 1)
        assert (poly() * poly(1, 2)).coeffs == ()

    def test_eq_hash(self):
        assert poly(1, 2) == poly(1, 2, 0)
        assert hash(poly(1, 2)) == hash(poly(1, 2, 0))
        assert poly(1) != poly(2)


class TestCharPolyFormula:
    def test_n0(self):
        assert char_poly_formula_a(0) == poly(-1, 1)
        assert char_poly_formula_b(0) == poly(-1, 1)

    def test_n1(self):
        assert char_poly_formula_a(1) == poly(-2, 0, 1)
        assert char_poly_formula_b(1) == poly(-1, 0, 1)

    def test_n3_a_expanded(self):
        expect = poly(-4, 0, 1) * poly(-6, 0, 1) * poly(-6, 0, 1) * poly(-8, 0, 1)
        assert char_poly_formula_a(3) == expect

    def test_monic_degree(self):
        for n in range(1, 9):
            p = char_poly_formula_a(n)
            assert p.degree == 1 << n
            assert p.coeffs[-1] == 1
            q = char_poly_formula_b(n)
            assert q.degree == 1 << n
            assert q.coeffs[-1] == 1

    def test_odd_coefficients_vanish(self):
        for n in range(1, 8):
            assert all(c == 0 for c in char_poly_formula_a(n).coeffs[1::2])

    def test_negative_n(self):
        with pytest.raises(ValueError):
            char_poly_formula_a(-1)


class TestBlockform:
    def test_n2_examples(self):
        assert char_poly_blockform(2, "A") == poly(-4, 0, 1) * poly(-3, 0, 1)
        assert char_poly_blockform(2, "B") == poly(-2, 0, 1) * poly(-1, 0, 1)

    def test_equals_formula_expanded(self):
        for n in range(1, 10):
            assert char_poly_blockform(n, "A") == char_poly_formula_a(n)
            assert char_poly_blockform(n, "B") == char_poly_formula_b(n)

    def test_radicand_multisets_match(self):
        # same factor multiset = same polynomial, checked to the larger bound
        for n in range(1, 13):
            assert Counter(blockform_radicands(n, "A")) == Counter(radicands_a(n))
            assert Counter(blockform_radicands(n, "B")) == Counter(radicands_b(n))

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            char_poly_blockform(0, "A")
        with pytest.raises(ValueError):
            char_poly_blockform(2, "C")


class TestSpectrumReport:
    def test_n3_radicands(self):
        rep_a = spectrum(3, "A")
        assert sorted(r.radicand for r in rep_a.records) == [4, 6, 6, 8]
        rep_b = spectrum(3, "B")
        assert sorted(r.radicand for r in rep_b.records) == [1, 2, 3, 4]

    def test_record_counts(self):
        for n in range(1, 10):
            rep = spectrum(n, "A")
            assert len(rep.records) == 1 << (n - 1)

    def test_ordering(self):
        rep = spectrum(4, "A")
        keys = [(-r.radicand, r.composition) for r in rep.records]
        assert keys == sorted(keys)
        # descending radicands with lexicographic tie-break
        rads = [r.radicand for r in rep.records]
        assert rads == sorted(rads, reverse=True)

    def test_n3_a_order_explicit(self):
        rep = spectrum(3, "A")
        assert [(r.composition, r.radicand) for r in rep.records] == [
            ((1, 1, 1), 8),
            ((1, 2), 6),
            ((2, 1), 6),
            ((3,), 4),
        ]

    def test_approx_values(self):
        rep = spectrum(3, "A")
        by_comp = {r.composition: r.approx for r in rep.records}
        assert by_comp[(3,)] == "2"
        assert by_comp[(1, 2)] == "2.44948974278"
        assert by_comp[(1, 1, 1)] == "2.82842712475"

    def test_digits_override(self):
        rep = spectrum(1, "A", digits=20)
        assert rep.records[0].approx == "1.4142135623730950488"

    def test_n0(self):
        rep = spectrum(0, "A")
        assert len(rep.records) == 1
        rec = rep.records[0]
        assert rec.radicand == 1 and rec.approx == "1" and not rec.pair
        assert rep.charpoly == poly(-1, 1)

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            spectrum(3, "X")
        with pytest.raises(ValueError):
            spectrum(-1, "A")
        with pytest.raises(ValueError):
            spectrum(3, "A", digits=0)

    def test_charpoly_attached(self):
        rep = spectrum(5, "B")
        assert rep.charpoly == char_poly_formula_b(5)


class TestSerialization:
    def test_plain_n1(self):
        assert report_plain(spectrum(1, "A")) == (
            "n=1 matrix=A records=1\n"
            "mu=(1) radicand=2 approx=1.41421356237\n"
        )

    def test_plain_n0(self):
        assert report_plain(spectrum(0, "B")) == (
            "n=0 matrix=B records=1\n"
            "eigenvalue=1\n"
        )

    def test_structured_roundtrip(self):
        doc = json.loads(report_structured(spectrum(3, "A")))
        assert doc["n"] == 3 and doc["matrix"] == "A"
        assert [r["radicand"] for r in doc["records"]] == [8, 6, 6, 4]
        assert doc["records"][0]["composition"] == [1, 1, 1]
        assert all(r["pair"] for r in doc["records"])
        assert doc["charpoly"][0] == "1152"  # product of the radicands
        assert doc["charpoly"][-1] == "1"
        assert len(doc["charpoly"]) == 9

    def test_structured_coeffs_are_strings(self):
        doc = json.loads(report_structured(spectrum(2, "B")))
        assert all(isinstance(c, str) for c in doc["charpoly"])


class TestEvaluationAgainstOracle:
    def test_random_points(self):
        from ar_spectra.matrices import build_a_recursive, build_b_recursive
        from ar_spectra.oracle import shifted_det

        rng = random.Random(5)
        for n in range(1, 6):
            a, b = build_a_recursive(n), build_b_recursive(n)
            pa, pb = char_poly_formula_a(n), char_poly_formula_b(n)
            for _ in range(5):
                x = rng.randint(-(1 << 32), 1 << 32)
                assert pa(x) == shifted_det(a, x)
                assert pb(x) == shifted_det(b, x)
