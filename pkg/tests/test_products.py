"""Both h-products against the literal re-statements in ``ghr.oracles``."""

from fractions import Fraction
from itertools import islice

import pytest

from ghr import fixtures, oracles
from ghr.enumeration import enumerate_hemirings
from ghr.fuzzy import (
    DEFAULT_GRID,
    balanced_sums,
    characteristic,
    constant,
    fuzzy,
    generalized_h_product,
    grid_subsets,
    h_product,
)

HALF = Fraction(1, 2)


def pairs(H, grid=DEFAULT_GRID):
    subs = list(grid_subsets(H, grid))
    for mu in subs:
        for theta in subs:
            yield mu, theta


class TestSingleTerm:
    def test_even_residues(self, Z4):
        lam = characteristic(Z4, {0, 2})
        assert h_product(lam, lam).grades == (1, 0, 0, 0)

    def test_boolean_full(self, B2):
        one = constant(B2, 1)
        assert h_product(one, one).grades == (1, 1)

    def test_trivial(self, T1):
        assert h_product(fuzzy(T1, [HALF]), fuzzy(T1, [Fraction(1, 3)])).grades == (Fraction(1, 3),)

    def test_structure_mismatch(self, Z4, B2):
        with pytest.raises(ValueError):
            h_product(constant(Z4, 1), constant(B2, 1))

    def test_oracle_agreement(self):
        for H in [*enumerate_hemirings(2, 2), fixtures.boolean()]:
            for mu, theta in pairs(H):
                assert h_product(mu, theta).grades == oracles.single_h_product(H, mu.grades, theta.grades)

    def test_oracle_agreement_z4_sample(self, Z4):
        for mu, theta in islice(pairs(Z4), 0, 6561, 97):
            assert h_product(mu, theta).grades == oracles.single_h_product(Z4, mu.grades, theta.grades)


class TestGeneralized:
    def test_even_residues(self, Z4):
        lam = characteristic(Z4, {0, 2})
        assert generalized_h_product(lam, lam).grades == (1, 0, 0, 0)
        assert oracles.generalized_h_product(Z4, lam.grades, lam.grades, max_terms=4) == (1, 0, 0, 0)

    def test_boolean_full(self, B2):
        one = constant(B2, 1)
        assert generalized_h_product(one, one).grades == (1, 1)
        assert oracles.generalized_h_product_literal(B2, one.grades, one.grades, 2) == (1, 1)

    def test_trivial(self, T1):
        mu, theta = fuzzy(T1, [HALF]), fuzzy(T1, [Fraction(1, 3)])
        assert generalized_h_product(mu, theta).grades == (Fraction(1, 3),)

    def test_structure_mismatch(self, Z4, B2):
        with pytest.raises(ValueError):
            generalized_h_product(constant(Z4, 1), constant(B2, 1))

    def test_literal_enumeration_on_small_structures(self):
        for H in enumerate_hemirings(2, 1):
            for mu, theta in pairs(H):
                want = oracles.generalized_h_product_literal(H, mu.grades, theta.grades, 3)
                assert generalized_h_product(mu, theta).grades == want

    def test_layered_oracle_matches_literal_prefix(self):
        for H in enumerate_hemirings(2, 2):
            for mu, theta in islice(pairs(H), 0, 81, 7):
                for k in (1, 2):
                    assert oracles.generalized_h_product(H, mu.grades, theta.grades, k) == \
                        oracles.generalized_h_product_literal(H, mu.grades, theta.grades, k)

    def test_truncations_bounded_then_equal(self):
        for H in [*enumerate_hemirings(2, 2), *list(enumerate_hemirings(3, 1))[-4:]]:
            n = H.s_size ** 2
            for mu, theta in pairs(H):
                full = generalized_h_product(mu, theta).grades
                for k in range(1, n + 1):
                    part = oracles.generalized_h_product(H, mu.grades, theta.grades, k)
                    assert all(p <= f for p, f in zip(part, full))
                assert oracles.generalized_h_product(H, mu.grades, theta.grades, n) == full

    def test_single_term_below_generalized(self):
        for H in [*enumerate_hemirings(2, 2), *list(enumerate_hemirings(3, 2))[-10:]]:
            for mu, theta in pairs(H):
                assert h_product(mu, theta) <= generalized_h_product(mu, theta)

    def test_monotone(self):
        for H in enumerate_hemirings(2, 2):
            subs = list(grid_subsets(H, DEFAULT_GRID))
            for mu in subs:
                for mu2 in subs:
                    if not mu <= mu2:
                        continue
                    for theta in subs[::3]:
                        for op in (h_product, generalized_h_product):
                            assert op(mu, theta) <= op(mu2, theta)
                            assert op(theta, mu) <= op(theta, mu2)


class TestLongSums:
    """A structure where one product term per side does not reach every element."""

    def test_products_differ(self, X3):
        mu, one = characteristic(X3, {0, 1, 2, 4}), constant(X3, 1)
        single = h_product(mu, one)
        general = generalized_h_product(mu, one)
        assert single.grades == (1, 1, 1, 1, 1, 1, 1, 0)
        assert general.grades == (1,) * 8

    def test_oracles_agree(self, X3):
        mu, one = characteristic(X3, {0, 1, 2, 4}), constant(X3, 1)
        assert oracles.single_h_product(X3, mu.grades, one.grades) == h_product(mu, one).grades
        assert oracles.generalized_h_product(X3, mu.grades, one.grades) == \
            generalized_h_product(mu, one).grades
        # one term per side cannot reach 7; two can (e1+e2 against e3)
        assert oracles.generalized_h_product(X3, mu.grades, one.grades, 1)[7] == 0
        assert oracles.generalized_h_product(X3, mu.grades, one.grades, 2)[7] == 1

    def test_graded_thresholds(self, X3):
        # the two-term sums carry grade 1/2, the third generator only 1/4
        mu = fuzzy(X3, [1, 1, "1/2", 0, "1/4", 0, 0, 0])
        one = constant(X3, 1)
        assert generalized_h_product(mu, one).grades == \
            oracles.generalized_h_product(X3, mu.grades, one.grades)
        assert generalized_h_product(mu, one)(7) == Fraction(1, 4)


def test_balanced_sums_fixed_point(Z4):
    # equal term counts on both sides: a lone term 2 only ever balances itself
    assert balanced_sums(Z4, {2}) == {(0, 0), (2, 2)}
    assert balanced_sums(Z4, {0, 2}) == {(0, 0), (2, 2), (0, 2), (2, 0)}
    assert len(balanced_sums(Z4, {1})) == 4
