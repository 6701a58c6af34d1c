"""Crisp subsets of a Gamma-hemiring and the h-ideal hierarchy.

Subsets are plain ``frozenset`` objects of element indices; the structure is
always passed explicitly.
"""

from __future__ import annotations

from typing import Iterable

from .core import GammaHemiring

SIDES = ("left", "right", "two-sided")
PRIME_METHODS = ("definition", "definition-raw", "elements")


class IdealError(ValueError):
    """Raised when an operation's precondition on a subset does not hold."""


def subset(members: Iterable[int]) -> frozenset[int]:
    return frozenset(int(m) for m in members)


def _check_side(side: str) -> None:
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")


def ideal_witness(H: GammaHemiring, A: Iterable[int], side: str = "two-sided") -> dict | None:
    """First reason ``A`` fails to be an ideal on ``side``, or ``None``."""
    _check_side(side)
    A = frozenset(A)
    if not A:
        raise IdealError("ideals are nonempty")
    if 0 not in A:
        return {"missing": 0}
    for a in sorted(A):
        for b in sorted(A):
            if H.add(a, b) not in A:
                return {"a": a, "b": b, "a+b": H.add(a, b)}
    for s in H.elements:
        for g in H.gammas:
            for a in sorted(A):
                if side != "right" and H.mul(s, g, a) not in A:
                    return {"s": s, "γ": g, "a": a, "sγa": H.mul(s, g, a)}
                if side != "left" and H.mul(a, g, s) not in A:
                    return {"a": a, "γ": g, "s": s, "aγs": H.mul(a, g, s)}
    return None


def is_left_ideal(H: GammaHemiring, A: Iterable[int]) -> bool:
    return ideal_witness(H, A, "left") is None


def is_right_ideal(H: GammaHemiring, A: Iterable[int]) -> bool:
    return ideal_witness(H, A, "right") is None


def h_witness(H: GammaHemiring, A: Iterable[int]) -> dict | None:
    """A tuple ``x not in A, a, b in A, z`` with ``x + a + z == b + z``, or ``None``."""
    A = frozenset(A)
    reach = H.reach_table()
    for x in H.elements:
        if x in A:
            continue
        for a in sorted(A):
            for b in sorted(A):
                if reach[x][a][b]:
                    z = next(
                        (z for z in H.elements if H.add(H.add(x, a), z) == H.add(b, z)), 0
                    )
                    return {"x": x, "a": a, "b": b, "z": z}
    return None


def is_h_ideal(H: GammaHemiring, A: Iterable[int], side: str = "two-sided") -> bool:
    A = frozenset(A)
    return ideal_witness(H, A, side) is None and h_witness(H, A) is None


def _h_saturate(H: GammaHemiring, A: frozenset[int]) -> frozenset[int]:
    reach = H.reach_table()
    return A | {
        x
        for x in H.elements
        if x not in A and any(reach[x][a][b] for a in A for b in A)
    }


def h_closure(H: GammaHemiring, A: Iterable[int], side: str = "two-sided") -> frozenset[int]:
    """Least h-ideal containing the ideal ``A``, by saturation to a fixed point."""
    A = frozenset(A)
    if ideal_witness(H, A, side) is not None:
        raise IdealError(f"{sorted(A)} is not a {side} ideal")
    current = A
    while True:
        nxt = _h_saturate(H, current)
        if nxt == current:
            return current
        current = nxt


def generated_h_ideal(H: GammaHemiring, generators: Iterable[int]) -> frozenset[int]:
    """Smallest two-sided h-ideal containing ``generators``."""
    current = frozenset(generators) | {0}
    while True:
        nxt = set(current)
        nxt.update(H.add(a, b) for a in current for b in current)
        for s in H.elements:
            for g in H.gammas:
                for a in current:
                    nxt.add(H.mul(s, g, a))
                    nxt.add(H.mul(a, g, s))
        nxt = _h_saturate(H, frozenset(nxt))
        if nxt == current:
            return current
        current = nxt


def gamma_set_product(H: GammaHemiring, A: Iterable[int], B: Iterable[int]) -> frozenset[int]:
    """The raw product set ``{a g b : a in A, g in Gamma, b in B}``."""
    B = tuple(B)
    return frozenset(H.mul(a, g, b) for a in A for g in H.gammas for b in B)


def enumerate_h_ideals(H: GammaHemiring) -> list[frozenset[int]]:
    """All two-sided h-ideals, sorted by (cardinality, bitmask)."""
    found = []
    for mask in range(1, 1 << H.s_size):
        if not mask & 1:
            continue
        A = frozenset(i for i in H.elements if mask >> i & 1)
        if is_h_ideal(H, A):
            found.append((len(A), mask, A))
    return [A for _, _, A in sorted(found, key=lambda t: t[:2])]


def prime_element_witness(H: GammaHemiring, I: frozenset[int]) -> tuple[int, int] | None:
    """A pair ``a, b`` outside ``I`` with ``a Gamma S Gamma b`` inside ``I``."""
    outside = [a for a in H.elements if a not in I]
    for a in outside:
        for b in outside:
            if all(
                H.mul(a, al, H.mul(s, g, b)) in I
                for al in H.gammas
                for s in H.elements
                for g in H.gammas
            ):
                return a, b
    return None


def prime_definition_witness(
    H: GammaHemiring, I: frozenset[int], raw: bool = False
) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two h-ideals ``H1, K`` with ``H1 Gamma K`` inside ``I`` but neither inside ``I``."""
    ideals = [J for J in enumerate_h_ideals(H) if not J <= I]
    for J in ideals:
        for K in ideals:
            prod = gamma_set_product(H, J, K)
            if not raw:
                prod = generated_h_ideal(H, prod)
            if prod <= I:
                return J, K
    return None


def is_prime_h_ideal(H: GammaHemiring, I: Iterable[int], method: str = "definition") -> bool:
    """Primeness of a two-sided h-ideal.

    ``definition`` quantifies over all pairs of h-ideals, reading ``H Gamma K``
    as the h-ideal generated by the products; ``definition-raw`` uses the bare
    product set; ``elements`` tests ``a Gamma S Gamma b`` inside ``I`` forcing
    ``a`` or ``b`` into ``I``.
    """
    I = frozenset(I)
    if method not in PRIME_METHODS:
        raise ValueError(f"method must be one of {PRIME_METHODS}")
    if not I or not is_h_ideal(H, I):
        raise IdealError(f"{sorted(I)} is not an h-ideal")
    if len(I) == H.s_size:
        return False
    if method == "elements":
        return prime_element_witness(H, I) is None
    return prime_definition_witness(H, I, raw=method == "definition-raw") is None


def crisp_extension(H: GammaHemiring, x: int, A: Iterable[int]) -> frozenset[int]:
    """``{y : x a s g y in A for all a, g in Gamma and s in S}``."""
    A = frozenset(A)
    P = H.product
    return frozenset(
        y
        for y in H.elements
        if all(P[x][a][P[s][g][y]] in A for a in H.gammas for s in H.elements for g in H.gammas)
    )
