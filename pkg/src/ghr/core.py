"""Finite Gamma-hemirings as operation tables.

A Gamma-hemiring is stored as three tables over index sets ``range(s_size)``
(the carrier S) and ``range(g_size)`` (the parameter monoid Gamma):

* ``s_add[a][b]``      -- addition on S
* ``g_add[g][h]``      -- addition on Gamma
* ``product[a][g][b]`` -- the ternary product ``a g b``

Index 0 is the additive zero of both carriers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import mutations


class StructureError(ValueError):
    """Malformed tables: wrong shape, entries out of range, mismatched Gamma."""


class Violation(NamedTuple):
    axiom: str
    witness: dict

    def __str__(self) -> str:
        w = ", ".join(f"{k}={v}" for k, v in self.witness.items())
        return f"axiom {self.axiom}: {w}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid

    def axioms(self) -> list[str]:
        return [v.axiom for v in self.violations]


def _square(table: Sequence[Sequence[int]], n: int, what: str) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(v) for v in row) for row in table)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise StructureError(f"{what} must be a {n}x{n} table")
    if any(not 0 <= v < n for r in rows for v in r):
        raise StructureError(f"{what} has an entry outside range({n})")
    return rows


@dataclass(frozen=True)
class GammaHemiring:
    name: str = field(compare=False)
    s_size: int
    g_size: int
    s_add: tuple[tuple[int, ...], ...]
    g_add: tuple[tuple[int, ...], ...]
    product: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self) -> None:
        if self.s_size < 1 or self.g_size < 1:
            raise StructureError("carrier sizes must be positive")
        object.__setattr__(self, "s_add", _square(self.s_add, self.s_size, "s_add"))
        object.__setattr__(self, "g_add", _square(self.g_add, self.g_size, "g_add"))
        try:
            prod = tuple(
                tuple(tuple(int(v) for v in row) for row in plane) for plane in self.product
            )
        except TypeError as exc:
            raise StructureError("product must be a three-dimensional table") from exc
        s, g = self.s_size, self.g_size
        if len(prod) != s or any(len(p) != g or any(len(r) != s for r in p) for p in prod):
            raise StructureError(f"product must have shape [{s}][{g}][{s}]")
        if any(not 0 <= v < s for p in prod for r in p for v in r):
            raise StructureError(f"product has an entry outside range({s})")
        object.__setattr__(self, "product", prod)

    # -- table access ---------------------------------------------------
    @property
    def elements(self) -> range:
        return range(self.s_size)

    @property
    def gammas(self) -> range:
        return range(self.g_size)

    def add(self, a: int, b: int) -> int:
        return self.s_add[a][b]

    def gadd(self, g: int, h: int) -> int:
        return self.g_add[g][h]

    def mul(self, a: int, g: int, b: int) -> int:
        return self.product[a][g][b]

    def sum(self, items: Iterable[int]) -> int:
        total = 0
        for item in items:
            total = self.s_add[total][item]
        return total

    @cached_property
    def is_commutative(self) -> bool:
        P = self.product
        return all(
            P[a][g][b] == P[b][g][a] for a in self.elements for g in self.gammas for b in self.elements
        )

    @cached_property
    def _reach_cache(self) -> dict:
        return {}

    def reach_table(self) -> tuple[tuple[tuple[bool, ...], ...], ...]:
        """``table[x][u][v]`` is true iff ``x + u + z == v + z`` for some z."""
        drop_z = mutations.active("drop-z")
        cache = self._reach_cache
        if drop_z not in cache:
            A, S = self.s_add, self.elements
            if drop_z:
                table = tuple(
                    tuple(tuple(A[x][u] == v for v in S) for u in S) for x in S
                )
            else:
                table = tuple(
                    tuple(
                        tuple(any(A[A[x][u]][z] == A[v][z] for z in S) for v in S)
                        for u in S
                    )
                    for x in S
                )
            cache[drop_z] = table
        return cache[drop_z]

    def reach_pairs(self, x: int) -> tuple[tuple[int, int], ...]:
        row = self.reach_table()[x]
        return tuple((u, v) for u in self.elements for v in self.elements if row[u][v])

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "s_size": self.s_size,
            "g_size": self.g_size,
            "s_add": [list(r) for r in self.s_add],
            "g_add": [list(r) for r in self.g_add],
            "product": [[list(r) for r in p] for p in self.product],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "GammaHemiring":
        try:
            return cls(
                name=str(data.get("name", "")),
                s_size=int(data["s_size"]),
                g_size=int(data["g_size"]),
                s_add=data["s_add"],
                g_add=data["g_add"],
                product=data["product"],
            )
        except (KeyError, TypeError) as exc:
            raise StructureError(f"malformed structure description: {exc}") from exc

    def __repr__(self) -> str:
        return f"GammaHemiring({self.name!r}, s_size={self.s_size}, g_size={self.g_size})"


def h_reachable(H: GammaHemiring, x: int, u: int, v: int) -> bool:
    return H.reach_table()[x][u][v]


def _first(axiom: str, cases: Iterable[dict], holds) -> Violation | None:
    for case in cases:
        if not holds(**case):
            return Violation(axiom, case)
    return None


def _every(axiom: str, cases: Iterable[dict], holds) -> list[Violation]:
    return [Violation(axiom, case) for case in cases if not holds(**case)]


def _monoid_violations(
    table, n: int, prefix: str, names: tuple[str, str, str], exhaustive: bool = False
) -> list[Violation]:
    a_, b_, c_ = names
    rng = range(n)
    checks = [
        (
            f"{prefix}-commutativity",
            ({a_: a, b_: b} for a in rng for b in rng),
            lambda **k: table[k[a_]][k[b_]] == table[k[b_]][k[a_]],
        ),
        (
            f"{prefix}-associativity",
            ({a_: a, b_: b, c_: c} for a in rng for b in rng for c in rng),
            lambda **k: table[table[k[a_]][k[b_]]][k[c_]] == table[k[a_]][table[k[b_]][k[c_]]],
        ),
        (
            f"{prefix}-zero",
            ({a_: a} for a in rng),
            lambda **k: table[0][k[a_]] == k[a_] and table[k[a_]][0] == k[a_],
        ),
    ]
    out = []
    for axiom, cases, holds in checks:
        if exhaustive:
            out += _every(axiom, cases, holds)
            continue
        v = _first(axiom, cases, holds)
        if v is not None:
            out.append(v)
    return out


def validate_hemiring(H: GammaHemiring | Mapping, exhaustive: bool = False) -> ValidationReport:
    """Check both monoid structures and axioms (i)-(vi); one witness per violated axiom.

    A mapping of raw fields is accepted and converted first, so malformed
    tables surface as :class:`StructureError` rather than as violations.
    ``exhaustive=True`` lists every violating instance instead.
    """
    if not isinstance(H, GammaHemiring):
        H = GammaHemiring.from_dict(H)
    A, G, P = H.s_add, H.g_add, H.product
    S, Gm = H.elements, H.gammas
    violations = _monoid_violations(A, H.s_size, "S", ("a", "b", "c"), exhaustive)
    violations += _monoid_violations(G, H.g_size, "Γ", ("α", "β", "γ"), exhaustive)

    checks = [
        (
            "(i)",
            ({"a": a, "b": b, "γ": g, "c": c} for a in S for b in S for g in Gm for c in S),
            lambda a, b, γ, c: P[A[a][b]][γ][c] == A[P[a][γ][c]][P[b][γ][c]],
        ),
        (
            "(ii)",
            ({"a": a, "γ": g, "b": b, "c": c} for a in S for g in Gm for b in S for c in S),
            lambda a, γ, b, c: P[a][γ][A[b][c]] == A[P[a][γ][b]][P[a][γ][c]],
        ),
        (
            "(iii)",
            ({"a": a, "α": al, "β": be, "b": b} for a in S for al in Gm for be in Gm for b in S),
            lambda a, α, β, b: P[a][G[α][β]][b] == A[P[a][α][b]][P[a][β][b]],
        ),
        (
            "(iv)",
            (
                {"a": a, "α": al, "b": b, "β": be, "c": c}
                for a in S for al in Gm for b in S for be in Gm for c in S
            ),
            lambda a, α, b, β, c: P[a][α][P[b][β][c]] == P[P[a][α][b]][β][c],
        ),
        (
            "(v)",
            ({"α": al, "a": a} for al in Gm for a in S),
            lambda α, a: P[0][α][a] == 0 and P[a][α][0] == 0,
        ),
        (
            "(vi)",
            ({"a": a, "γ": 0, "b": b} for a in S for b in S),
            lambda a, γ, b: P[a][γ][b] == 0,
        ),
    ]
    for axiom, cases, holds in checks:
        if exhaustive:
            violations += _every(axiom, cases, holds)
            continue
        v = _first(axiom, cases, holds)
        if v is not None:
            violations.append(v)
    return ValidationReport(tuple(violations))


def gamma_power(H: GammaHemiring, x: int, g: int, n: int) -> int:
    """``(x g)^n x``: ``x`` for ``n == 0``, otherwise ``x g ((x g)^(n-1) x)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = x
    for _ in range(n):
        out = H.mul(x, g, out)
    return out


def product_hemiring(H: GammaHemiring) -> GammaHemiring:
    """The structure on S x S with componentwise addition and ``(a,b) g (c,d) = (a g c, b g d)``.

    The pair ``(a, b)`` has index ``a * s_size + b``; ``(0, 0)`` stays at index 0.
    """
    n = H.s_size
    pairs = [(a, b) for a in H.elements for b in H.elements]
    idx = {p: i for i, p in enumerate(pairs)}
    s_add = [[idx[(H.add(a, c), H.add(b, d))] for (c, d) in pairs] for (a, b) in pairs]
    prod = [
        [[idx[(H.mul(a, g, c), H.mul(b, g, d))] for (c, d) in pairs] for g in H.gammas]
        for (a, b) in pairs
    ]
    return GammaHemiring(
        name=f"{H.name}^2", s_size=n * n, g_size=H.g_size, s_add=s_add, g_add=H.g_add, product=prod
    )


def pair_index(H: GammaHemiring, a: int, b: int) -> int:
    return a * H.s_size + b


@dataclass(frozen=True)
class Homomorphism:
    source: GammaHemiring
    target: GammaHemiring
    map: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.source.g_size != self.target.g_size or self.source.g_add != self.target.g_add:
            raise StructureError("source and target must share the same Gamma-component")
        m = tuple(int(v) for v in self.map)
        if len(m) != self.source.s_size:
            raise StructureError("map must assign an image to every source element")
        if any(not 0 <= v < self.target.s_size for v in m):
            raise StructureError("map has an image outside the target carrier")
        object.__setattr__(self, "map", m)

    def __call__(self, a: int) -> int:
        return self.map[a]

    @property
    def is_surjective(self) -> bool:
        return set(self.map) == set(self.target.elements)


def check_homomorphism(f: Homomorphism | Mapping) -> ValidationReport:
    if not isinstance(f, Homomorphism):
        try:
            f = Homomorphism(f["source"], f["target"], f["map"])
        except KeyError as exc:
            raise StructureError(f"missing homomorphism field {exc}") from exc
    R, S, m = f.source, f.target, f.map
    out = []
    v = _first(
        "additive",
        ({"a": a, "b": b} for a in R.elements for b in R.elements),
        lambda a, b: m[R.add(a, b)] == S.add(m[a], m[b]),
    )
    if v:
        out.append(v)
    v = _first(
        "multiplicative",
        ({"a": a, "α": g, "b": b} for a in R.elements for g in R.gammas for b in R.elements),
        lambda a, α, b: m[R.mul(a, α, b)] == S.mul(m[a], α, m[b]),
    )
    if v:
        out.append(v)
    if m[0] != 0:
        out.append(Violation("zero", {"f(0)": m[0]}))
    return ValidationReport(tuple(out))


def projections(H: GammaHemiring, P: GammaHemiring | None = None) -> tuple[Homomorphism, Homomorphism]:
    P = P if P is not None else product_hemiring(H)
    n = H.s_size
    return (
        Homomorphism(P, H, tuple(i // n for i in P.elements)),
        Homomorphism(P, H, tuple(i % n for i in P.elements)),
    )
