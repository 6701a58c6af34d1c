from itertools import combinations

import pytest

from ghr import fixtures, oracles
from ghr.crisp import (
    IdealError,
    crisp_extension,
    enumerate_h_ideals,
    generated_h_ideal,
    h_closure,
    h_witness,
    is_h_ideal,
    is_left_ideal,
    is_prime_h_ideal,
    is_right_ideal,
)
from ghr.enumeration import enumerate_hemirings


def all_subsets(H):
    items = list(H.elements)
    for k in range(1, len(items) + 1):
        for c in combinations(items, k):
            yield frozenset(c)


@pytest.fixture(scope="module")
def small_family():
    return list(enumerate_hemirings(3, 2))


class TestIdeals:
    def test_even_residues(self, Z4):
        assert is_left_ideal(Z4, {0, 2}) and is_right_ideal(Z4, {0, 2})

    def test_zero_ideal(self, B2):
        assert is_left_ideal(B2, {0}) and is_right_ideal(B2, {0})

    def test_not_closed_under_addition(self, Z4):
        assert not is_left_ideal(Z4, {0, 1})

    def test_empty_rejected(self, Z4):
        with pytest.raises(IdealError):
            is_left_ideal(Z4, set())
        with pytest.raises(IdealError):
            is_h_ideal(Z4, ())

    def test_bad_side(self, Z4):
        with pytest.raises(ValueError):
            is_h_ideal(Z4, {0}, side="middle")


class TestHIdeals:
    def test_even_residues(self, Z4):
        assert is_h_ideal(Z4, {0, 2})

    def test_zero_in_boolean_fails(self, B2):
        assert not is_h_ideal(B2, {0})
        assert h_witness(B2, {0}) == {"x": 1, "a": 0, "b": 0, "z": 1}

    def test_whole_carrier(self, small_family):
        for H in small_family:
            assert is_h_ideal(H, H.elements)

    def test_matches_literal_definition(self, small_family):
        for H in small_family:
            for A in all_subsets(H):
                assert is_h_ideal(H, A) == oracles.is_h_ideal(H, A), (H.name, A)

    def test_h_ideals_are_ideals_on_both_sides(self, small_family):
        for H in small_family:
            for A in enumerate_h_ideals(H):
                assert 0 in A and is_left_ideal(H, A) and is_right_ideal(H, A)


class TestClosure:
    def test_boolean_zero_saturates(self, B2):
        assert h_closure(B2, {0}) == {0, 1}

    def test_already_closed(self, Z4):
        assert h_closure(Z4, {0, 2}) == {0, 2}
        assert h_closure(Z4, {0}) == {0}

    def test_non_ideal_rejected(self, Z4):
        with pytest.raises(IdealError):
            h_closure(Z4, {0, 1})

    def test_closure_laws(self, small_family):
        for H in small_family:
            ideals = [A for A in all_subsets(H) if is_left_ideal(H, A) and is_right_ideal(H, A)]
            for A in ideals:
                C = h_closure(H, A)
                assert A <= C and h_closure(H, C) == C and is_h_ideal(H, C)
                # least: every h-ideal above A contains C
                assert all(C <= J for J in enumerate_h_ideals(H) if A <= J)
            for A in ideals:
                for B in ideals:
                    if A <= B:
                        assert h_closure(H, A) <= h_closure(H, B)

    def test_generated_is_least_h_ideal_containing(self, small_family):
        for H in small_family:
            hs = enumerate_h_ideals(H)
            for A in all_subsets(H):
                G = generated_h_ideal(H, A)
                assert G == min((J for J in hs if A <= J), key=len)


class TestEnumeration:
    def test_z4(self, Z4):
        assert enumerate_h_ideals(Z4) == [{0}, {0, 2}, {0, 1, 2, 3}]

    def test_boolean(self, B2):
        assert enumerate_h_ideals(B2) == [{0, 1}]

    def test_trivial(self, T1):
        assert enumerate_h_ideals(T1) == [{0}]

    def test_order(self, small_family):
        for H in small_family:
            keys = [(len(A), sum(1 << i for i in A)) for A in enumerate_h_ideals(H)]
            assert keys == sorted(keys)


class TestPrime:
    def test_even_residues_prime(self, Z4):
        for method in ("definition", "definition-raw", "elements"):
            assert is_prime_h_ideal(Z4, {0, 2}, method=method)

    def test_zero_not_prime(self, Z4):
        for method in ("definition", "definition-raw", "elements"):
            assert not is_prime_h_ideal(Z4, {0}, method=method)

    def test_whole_carrier_not_prime(self, small_family):
        for H in small_family:
            assert not is_prime_h_ideal(H, H.elements)

    def test_requires_h_ideal(self, B2):
        with pytest.raises(IdealError):
            is_prime_h_ideal(B2, {0})

    def test_unknown_method(self, Z4):
        with pytest.raises(ValueError):
            is_prime_h_ideal(Z4, {0}, method="vibes")

    def test_methods_agree(self, small_family):
        for H in small_family:
            for I in enumerate_h_ideals(H):
                verdicts = {m: is_prime_h_ideal(H, I, method=m) for m in ("definition", "definition-raw", "elements")}
                assert len(set(verdicts.values())) == 1, (H.name, I, verdicts)

    def test_some_primes_exist(self, small_family):
        assert any(is_prime_h_ideal(H, I) for H in small_family for I in enumerate_h_ideals(H))


class TestCrispExtension:
    def test_z4(self, Z4):
        assert crisp_extension(Z4, 2, {0, 2}) == {0, 1, 2, 3}
        assert crisp_extension(Z4, 1, {0, 2}) == {0, 2}

    def test_whole_carrier(self, small_family):
        for H in small_family:
            for x in H.elements:
                assert crisp_extension(H, x, H.elements) == frozenset(H.elements)

    def test_monotone(self, small_family):
        for H in small_family[:30]:
            subsets = list(all_subsets(H))
            for A in subsets:
                for B in subsets:
                    if A <= B:
                        for x in H.elements:
                            assert crisp_extension(H, x, A) <= crisp_extension(H, x, B)

    def test_extension_of_h_ideal_is_right_h_ideal(self, small_family):
        for H in small_family:
            for I in enumerate_h_ideals(H):
                for x in H.elements:
                    E = crisp_extension(H, x, I)
                    assert is_h_ideal(H, E, side="right")
                    if H.is_commutative:
                        assert is_h_ideal(H, E)


def test_literal_prime_elements_on_fixtures():
    # aΓSΓb ⊆ I with a, b ∉ I, evaluated from the raw tables
    for H in fixtures.all_fixtures():
        P = H.product
        for I in enumerate_h_ideals(H):
            out = [a for a in H.elements if a not in I]
            bad = any(
                all(P[a][al][P[s][g][b]] in I for al in H.gammas for s in H.elements for g in H.gammas)
                for a in out for b in out
            )
            assert is_prime_h_ideal(H, I, method="elements") == (bool(out) and not bad)
