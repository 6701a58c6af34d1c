"""Exhaustive enumeration of small Gamma-hemirings.

Structures come out in a fixed order: by ``(s_size, g_size)``, then by the
S-addition table, the Gamma-addition table and the product table, each
compared row-major. No isomorphism reduction is applied; ``canonical_form``
is offered separately for callers that want it.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product as iproduct
from typing import Iterator, Sequence

from .core import GammaHemiring, validate_hemiring
from .fuzzy import FuzzySubset, grade, grid_subsets


@lru_cache(maxsize=None)
def commutative_monoids(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All commutative monoid tables on ``range(n)`` with identity 0, sorted."""
    free = [(i, j) for i in range(1, n) for j in range(i, n)]
    found = []
    for values in iproduct(range(n), repeat=len(free)):
        t = [[0] * n for _ in range(n)]
        for i in range(n):
            t[0][i] = t[i][0] = i
        for (i, j), v in zip(free, values):
            t[i][j] = t[j][i] = v
        if all(
            t[t[a][b]][c] == t[a][t[b][c]]
            for a in range(1, n) for b in range(1, n) for c in range(1, n)
        ):
            found.append(tuple(map(tuple, t)))
    return tuple(sorted(found))


def _consistent(A, G, P, s: int, g: int) -> bool:
    """Axioms (i)-(iv) on every instance whose entries are all assigned (None = unknown)."""
    S, Gm = range(s), range(g)
    for a in S:
        for gm in Gm:
            for c in S:
                ac = P[a][gm][c]
                if ac is None:
                    continue
                for b in S:
                    # (i) (a+b) g c = a g c + b g c
                    lhs, bc = P[A[a][b]][gm][c], P[b][gm][c]
                    if lhs is not None and bc is not None and lhs != A[ac][bc]:
                        return False
                    # (ii) a g (c+b) = a g c + a g b
                    lhs, ab = P[a][gm][A[c][b]], P[a][gm][b]
                    if lhs is not None and ab is not None and lhs != A[ac][ab]:
                        return False
                for de in Gm:
                    # (iii) a (g+d) c = a g c + a d c
                    lhs, adc = P[a][G[gm][de]][c], P[a][de][c]
                    if lhs is not None and adc is not None and lhs != A[ac][adc]:
                        return False
                    # (iv) a g (c d e) = (a g c) d e, with ac = a g c known
                    for e in S:
                        cde = P[c][de][e]
                        if cde is None:
                            continue
                        lhs, rhs = P[a][gm][cde], P[ac][de][e]
                        if lhs is not None and rhs is not None and lhs != rhs:
                            return False
    return True


def _products(A, G, s: int, g: int) -> Iterator[tuple]:
    P = [[[None] * s for _ in range(g)] for _ in range(s)]
    for a in range(s):
        for gm in range(g):
            for b in range(s):
                if a == 0 or b == 0 or gm == 0:
                    P[a][gm][b] = 0
    free = [(a, gm, b) for a in range(1, s) for gm in range(1, g) for b in range(1, s)]

    def fill(k: int):
        if k == len(free):
            yield tuple(tuple(tuple(r) for r in plane) for plane in P)
            return
        a, gm, b = free[k]
        for v in range(s):
            P[a][gm][b] = v
            if _consistent(A, G, P, s, g):
                yield from fill(k + 1)
        P[a][gm][b] = None

    if _consistent(A, G, P, s, g):
        yield from fill(0)


def enumerate_hemirings(s_max: int, g_max: int) -> Iterator[GammaHemiring]:
    if s_max < 1 or g_max < 1:
        raise ValueError("size bounds must be at least 1")
    for s in range(1, s_max + 1):
        for g in range(1, g_max + 1):
            k = 0
            for A in commutative_monoids(s):
                for G in commutative_monoids(g):
                    for P in _products(A, G, s, g):
                        H = GammaHemiring(f"s{s}g{g}#{k}", s, g, A, G, P)
                        assert validate_hemiring(H).valid, H
                        k += 1
                        yield H


def canonical_form(H: GammaHemiring) -> tuple:
    """Least relabelled table tuple over zero-fixing permutations of S and Gamma."""
    best = None
    for ps in permutations(range(1, H.s_size)):
        p = (0, *ps)
        inv_p = {v: i for i, v in enumerate(p)}
        for pg in permutations(range(1, H.g_size)):
            q = (0, *pg)
            inv_q = {v: i for i, v in enumerate(q)}
            A = tuple(tuple(inv_p[H.add(p[a], p[b])] for b in H.elements) for a in H.elements)
            G = tuple(tuple(inv_q[H.gadd(q[a], q[b])] for b in H.gammas) for a in H.gammas)
            P = tuple(
                tuple(tuple(inv_p[H.mul(p[a], q[c], p[b])] for b in H.elements) for c in H.gammas)
                for a in H.elements
            )
            key = (H.s_size, H.g_size, A, G, P)
            if best is None or key < best:
                best = key
    return best


def up_to_isomorphism(structures) -> Iterator[GammaHemiring]:
    seen = set()
    for H in structures:
        key = canonical_form(H)
        if key not in seen:
            seen.add(key)
            yield H


def enumerate_grid_fuzzy(H: GammaHemiring, grid: Sequence) -> Iterator[FuzzySubset]:
    """Every grid-valued fuzzy subset of ``H``; the grid must contain 0 and 1."""
    values = {grade(g) for g in grid}
    if 0 not in values or 1 not in values:
        raise ValueError("grid must contain 0 and 1")
    return grid_subsets(H, sorted(values))
