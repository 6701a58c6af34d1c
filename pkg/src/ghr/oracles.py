"""Literal, slow re-statements of the definitions.

Nothing here touches the cached reachability table, the threshold algorithm,
or any other fast path of the library, so agreement between the two is
meaningful evidence. Everything is plain loops over the tables.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct

from .core import GammaHemiring

ZERO = Fraction(0)


def h_holds(H: GammaHemiring, x: int, u: int, v: int) -> bool:
    A = H.s_add
    return any(A[A[x][u]][z] == A[v][z] for z in range(H.s_size))


def is_h_ideal(H: GammaHemiring, A: frozenset[int]) -> bool:
    S, G, P, add = range(H.s_size), range(H.g_size), H.product, H.s_add
    if 0 not in A:
        return False
    if any(add[a][b] not in A for a in A for b in A):
        return False
    if any(P[s][g][a] not in A or P[a][g][s] not in A for s in S for g in G for a in A):
        return False
    return not any(h_holds(H, x, a, b) for x in S if x not in A for a in A for b in A)


def single_h_product(H: GammaHemiring, mu, theta) -> tuple[Fraction, ...]:
    """Scan every ``(a1, g, b1, a2, d, b2)`` and every z directly."""
    S, G, P = range(H.s_size), range(H.g_size), H.product
    out = []
    for x in S:
        best = ZERO
        for a1, g, b1, a2, d, b2 in iproduct(S, G, S, S, G, S):
            v = min(mu[a1], mu[a2], theta[b1], theta[b2])
            if v > best and h_holds(H, x, P[a1][g][b1], P[a2][d][b2]):
                best = v
        out.append(best)
    return tuple(out)


def _term_triples(H: GammaHemiring, mu, theta) -> set[tuple[int, int, Fraction]]:
    S, G, P = range(H.s_size), range(H.g_size), H.product
    return {
        (P[a][g][b], P[c][d][e], min(mu[a], mu[c], theta[b], theta[e]))
        for a, g, b, c, d, e in iproduct(S, G, S, S, G, S)
    }


def generalized_h_product(H: GammaHemiring, mu, theta, max_terms: int | None = None) -> tuple[Fraction, ...]:
    """Sup over sums of exactly ``n`` terms per side, every ``n <= max_terms``.

    The ``n``-th layer holds every reachable ``(left sum, right sum, grade)``
    triple; grades are never merged across triples, so nothing is assumed
    about how the minimum interacts with the sums. ``max_terms`` defaults to
    ``s_size ** 2``.
    """
    n_max = H.s_size ** 2 if max_terms is None else max_terms
    add = H.s_add
    terms = _term_triples(H, mu, theta)
    layer = frozenset(terms)
    seen = set()
    best: dict[tuple[int, int], Fraction] = {}
    for n in range(1, n_max + 1):
        for u, v, val in layer:
            if val > best.get((u, v), -1):
                best[(u, v)] = val
        # each layer is a function of the previous one: a repeat means nothing new follows
        seen.add(layer)
        if n == n_max:
            break
        layer = frozenset(
            (add[u][p], add[v][q], min(val, w)) for u, v, val in layer for p, q, w in terms
        )
        if layer in seen:
            break
    out = []
    for x in range(H.s_size):
        out.append(max((val for (u, v), val in best.items() if h_holds(H, x, u, v)), default=ZERO))
    return tuple(max(o, ZERO) for o in out)


def generalized_h_product_literal(H: GammaHemiring, mu, theta, max_terms: int) -> tuple[Fraction, ...]:
    """Enumerates every length-n decomposition outright; only usable for tiny inputs."""
    S, G, P, add = range(H.s_size), range(H.g_size), H.product, H.s_add
    single = list(iproduct(S, G, S, S, G, S))
    out = [ZERO] * H.s_size
    for n in range(1, max_terms + 1):
        for combo in iproduct(single, repeat=n):
            u = v = 0
            val = Fraction(1)
            for a, g, b, c, d, e in combo:
                u, v = add[u][P[a][g][b]], add[v][P[c][d][e]]
                val = min(val, mu[a], mu[c], theta[b], theta[e])
            for x in S:
                if val > out[x] and h_holds(H, x, u, v):
                    out[x] = val
    return tuple(out)


def extension(H: GammaHemiring, x: int, mu) -> tuple[Fraction, ...]:
    S, G, P = range(H.s_size), range(H.g_size), H.product
    return tuple(
        min(mu[P[x][a][P[s][g][y]]] for a in G for s in S for g in G) for y in S
    )


def fuzzy_flags(H: GammaHemiring, mu) -> dict[str, bool]:
    """Every class of fuzzy ideal decided by direct quantifier scans."""
    S, G, P, add = range(H.s_size), range(H.g_size), H.product, H.s_add
    nonempty = any(g > 0 for g in mu)
    i = all(mu[add[x][y]] >= min(mu[x], mu[y]) for x in S for y in S)
    iii = all(
        mu[x] >= min(mu[a], mu[b]) for x in S for a in S for b in S if h_holds(H, x, a, b)
    )
    left = all(mu[P[x][g][y]] >= mu[y] for x in S for g in G for y in S)
    right = all(mu[P[x][g][y]] >= mu[x] for x in S for g in G for y in S)
    sub = all(mu[P[x][g][y]] >= min(mu[x], mu[y]) for x in S for g in G for y in S)
    five = list(iproduct(S, G, S, G, S))
    bi = all(mu[P[P[x][a][y]][b][z]] >= min(mu[x], mu[z]) for x, a, y, b, z in five)
    interior = all(mu[P[P[x][a][y]][b][z]] >= mu[y] for x, a, y, b, z in five)
    one = (Fraction(1),) * H.s_size
    lhs = map(min, generalized_h_product(H, mu, one), generalized_h_product(H, one, mu))
    quasi = all(l <= r for l, r in zip(lhs, mu))
    base = nonempty and i and iii
    return {
        "nonempty": nonempty,
        "left_h_ideal": base and left,
        "right_h_ideal": base and right,
        "h_ideal": base and left and right,
        "h_bi_ideal": base and sub and bi,
        "h_interior_ideal": base and sub and interior,
        "h_quasi_ideal": base and quasi,
    }
