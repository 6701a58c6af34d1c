"""Small hand-built structures used throughout the tests and the CLI examples."""

from __future__ import annotations

from fractions import Fraction

from .core import GammaHemiring


def trivial() -> GammaHemiring:
    """T1: one element, one parameter."""
    return GammaHemiring("T1", 1, 1, [[0]], [[0]], [[[0]]])


def boolean(product: str = "and") -> GammaHemiring:
    """B2: S = Gamma = {0, 1} with logical-or addition.

    ``product="and"`` gives ``a g b = a and g and b``; ``"or"`` gives an
    invalid structure (zeros are no longer absorbing).
    """
    op = {"and": lambda a, g, b: a & g & b, "or": lambda a, g, b: a | g | b}[product]
    name = "B2" if product == "and" else f"B2-{product}"
    orr = [[0, 1], [1, 1]]
    return GammaHemiring(
        name, 2, 2, orr, orr, [[[op(a, g, b) for b in (0, 1)] for g in (0, 1)] for a in (0, 1)]
    )


def cyclic(n: int, g: int | None = None) -> GammaHemiring:
    """Z_n with Gamma = Z_g (default g = n), ``a c b = a*c*b mod n``.

    Valid whenever n divides g (so that addition on Gamma is compatible).
    """
    g = n if g is None else g
    name = f"Z{n}" if g == n else f"Z{n}/Z{g}"
    return GammaHemiring(
        name,
        n,
        g,
        [[(a + b) % n for b in range(n)] for a in range(n)],
        [[(a + b) % g for b in range(g)] for a in range(g)],
        [[[(a * c * b) % n for b in range(n)] for c in range(g)] for a in range(n)],
    )


def z4() -> GammaHemiring:
    return cyclic(4)


def z2_over_z4() -> GammaHemiring:
    """Z2 acted on by Gamma = Z4; target of the reduction-mod-2 homomorphism from Z4."""
    H = cyclic(2, 4)
    return GammaHemiring("Z2", H.s_size, H.g_size, H.s_add, H.g_add, H.product)


#: the two-valued prime fuzzy h-ideal of Z4 with level set {0, 2}
MU_P_GRADES = (Fraction(1), Fraction(1, 2), Fraction(1), Fraction(1, 2))


def all_fixtures() -> list[GammaHemiring]:
    return [trivial(), boolean(), z4(), z2_over_z4()]


def xor_cube(k: int = 3) -> GammaHemiring:
    """Bit vectors of length k under xor, Gamma = Z2, ``a 1 b = a & b`` and ``a 0 b = 0``.

    Sums of single products fall short of the whole carrier here: with
    generators restricted to the unit vectors, ``2**k - 1`` needs ``k`` terms.
    """
    n = 1 << k
    return GammaHemiring(
        f"X{k}",
        n,
        2,
        [[a ^ b for b in range(n)] for a in range(n)],
        [[0, 1], [1, 0]],
        [[[0] * n, [a & b for b in range(n)]] for a in range(n)],
    )
