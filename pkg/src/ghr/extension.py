"""Extension of a fuzzy subset by an element, and the identities it satisfies for prime ideals."""

from __future__ import annotations

from fractions import Fraction

from . import mutations
from .core import GammaHemiring, gamma_power
from .crisp import IdealError
from .fuzzy import FuzzySubset, _require_h_ideal, prime_characterization


def sandwich(H: GammaHemiring, x: int, y: int) -> set[int]:
    """The set ``x Gamma S Gamma y`` of all ``x a (s g y)``."""
    P = H.product
    return {P[x][a][P[s][g][y]] for a in H.gammas for s in H.elements for g in H.gammas}


def fuzzy_extension(x: int, mu: FuzzySubset) -> FuzzySubset:
    """``y -> min over a, g in Gamma, s in S of mu(x a s g y)``."""
    H = mu.hemiring
    if not 0 <= x < H.s_size:
        raise IndexError(f"element {x} outside the carrier")
    pick = max if mutations.active("inf-sup") else min
    m = mu.grades
    return FuzzySubset(
        H, tuple(pick(m[v] for v in sandwich(H, x, y)) for y in H.elements)
    )


def sandwich_inf(mu: FuzzySubset, x: int, y: int) -> Fraction:
    return min(mu.grades[v] for v in sandwich(mu.hemiring, x, y))


def inf_max_witness(mu: FuzzySubset) -> tuple[int, int] | None:
    m = mu.grades
    for x in mu.hemiring.elements:
        for y in mu.hemiring.elements:
            if sandwich_inf(mu, x, y) != max(m[x], m[y]):
                return x, y
    return None


def inf_max_criterion(mu: FuzzySubset) -> bool:
    """Whether ``min mu(x a s g y) == max(mu(x), mu(y))`` for all ``x, y``."""
    _require_h_ideal(mu)
    return inf_max_witness(mu) is None


def extension_inf_identity_check(x: int, mu: FuzzySubset) -> bool:
    """For prime ``mu``: ``<x,mu>(y) == min over s1, h, d of <x h s1 d x, mu>(y)`` at every y."""
    if not prime_characterization(mu):
        raise IdealError("the identity is stated for prime fuzzy h-ideals")
    H = mu.hemiring
    lhs = fuzzy_extension(x, mu)
    inner = [fuzzy_extension(w, mu) for w in sorted(sandwich(H, x, x))]
    return all(lhs.grades[y] == min(e.grades[y] for e in inner) for y in H.elements)


def iterated_extension_chain(x: int, g: int, mu: FuzzySubset, n_max: int) -> list[FuzzySubset]:
    """``[<(x g)^k x, mu> for k in 0..n_max]``."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    H = mu.hemiring
    return [fuzzy_extension(gamma_power(H, x, g, k), mu) for k in range(n_max + 1)]
