"""Fuzzy subsets with exact rational grades and the fuzzy h-ideal classes."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from typing import Iterable, Iterator, Sequence

from . import mutations
from .core import GammaHemiring, Homomorphism, pair_index, product_hemiring
from .crisp import IdealError, is_prime_h_ideal

ZERO = Fraction(0)
ONE = Fraction(1)
DEFAULT_GRID = (ZERO, Fraction(1, 2), ONE)


def grade(value) -> Fraction:
    """Coerce ``value`` (int, Fraction, or a string like ``"1/2"``) into an exact grade in [0, 1]."""
    if isinstance(value, float):
        raise TypeError("grades must be exact; pass a Fraction or a fraction string")
    g = Fraction(value)
    if not ZERO <= g <= ONE:
        raise ValueError(f"grade {g} outside [0, 1]")
    return g


def format_grade(g: Fraction) -> str:
    return str(g)


@dataclass(frozen=True)
class FuzzySubset:
    hemiring: GammaHemiring = field(repr=False)
    grades: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        gs = tuple(grade(g) for g in self.grades)
        if len(gs) != self.hemiring.s_size:
            raise ValueError(
                f"expected {self.hemiring.s_size} grades, got {len(gs)}"
            )
        object.__setattr__(self, "grades", gs)

    def __call__(self, x: int) -> Fraction:
        return self.grades[x]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.grades)

    def __len__(self) -> int:
        return len(self.grades)

    def __le__(self, other: "FuzzySubset") -> bool:
        _same(self, other)
        return all(a <= b for a, b in zip(self.grades, other.grades))

    def __and__(self, other: "FuzzySubset") -> "FuzzySubset":
        _same(self, other)
        return FuzzySubset(self.hemiring, tuple(map(min, self.grades, other.grades)))

    def __str__(self) -> str:
        return " ".join(format_grade(g) for g in self.grades)

    @property
    def image(self) -> frozenset[Fraction]:
        return frozenset(self.grades)

    @property
    def is_constant(self) -> bool:
        return len(self.image) == 1


def _same(mu: FuzzySubset, theta: FuzzySubset) -> None:
    if mu.hemiring is not theta.hemiring and mu.hemiring != theta.hemiring:
        raise ValueError("fuzzy subsets live on different structures")


def fuzzy(H: GammaHemiring, grades: Iterable) -> FuzzySubset:
    return FuzzySubset(H, tuple(grades))


def characteristic(H: GammaHemiring, A: Iterable[int]) -> FuzzySubset:
    A = frozenset(A)
    return FuzzySubset(H, tuple(ONE if y in A else ZERO for y in H.elements))


def constant(H: GammaHemiring, c) -> FuzzySubset:
    return FuzzySubset(H, (grade(c),) * H.s_size)


def level_zero(mu: FuzzySubset) -> frozenset[int]:
    return frozenset(x for x, g in enumerate(mu.grades) if g == mu.grades[0])


def support(mu: FuzzySubset) -> frozenset[int]:
    return frozenset(x for x, g in enumerate(mu.grades) if g > 0)


def intersection(family: Sequence[FuzzySubset]) -> FuzzySubset:
    if not family:
        raise ValueError("intersection of an empty family")
    out = family[0]
    for mu in family[1:]:
        out = out & mu
    return out


# -- defining conditions, each returning the first violating tuple ----------

def _w_additive(mu: FuzzySubset) -> dict | None:
    H, m = mu.hemiring, mu.grades
    for x in H.elements:
        for y in H.elements:
            if m[H.add(x, y)] < min(m[x], m[y]):
                return {"x": x, "y": y}
    return None


def _w_left(mu: FuzzySubset) -> dict | None:
    H, m, P = mu.hemiring, mu.grades, mu.hemiring.product
    for x in H.elements:
        for g in H.gammas:
            for y in H.elements:
                if m[P[x][g][y]] < m[y]:
                    return {"x": x, "γ": g, "y": y}
    return None


def _w_right(mu: FuzzySubset) -> dict | None:
    H, m, P = mu.hemiring, mu.grades, mu.hemiring.product
    for x in H.elements:
        for g in H.gammas:
            for y in H.elements:
                if m[P[x][g][y]] < m[x]:
                    return {"x": x, "γ": g, "y": y}
    return None


def _w_h(mu: FuzzySubset) -> dict | None:
    H, m = mu.hemiring, mu.grades
    reach = H.reach_table()
    for x in H.elements:
        for a in H.elements:
            for b in H.elements:
                if reach[x][a][b] and m[x] < min(m[a], m[b]):
                    z = next(
                        (z for z in H.elements if H.add(H.add(x, a), z) == H.add(b, z)), 0
                    )
                    return {"x": x, "a": a, "b": b, "z": z}
    return None


def _w_subsemiring(mu: FuzzySubset) -> dict | None:
    H, m, P = mu.hemiring, mu.grades, mu.hemiring.product
    for x in H.elements:
        for g in H.gammas:
            for y in H.elements:
                if m[P[x][g][y]] < min(m[x], m[y]):
                    return {"x": x, "γ": g, "y": y}
    return None


def _triples(H: GammaHemiring):
    P = H.product
    for x in H.elements:
        for a in H.gammas:
            for y in H.elements:
                xay = P[x][a][y]
                for b in H.gammas:
                    for z in H.elements:
                        yield x, a, y, b, z, P[xay][b][z]


def _w_bi(mu: FuzzySubset) -> dict | None:
    m = mu.grades
    for x, a, y, b, z, v in _triples(mu.hemiring):
        if m[v] < min(m[x], m[z]):
            return {"x": x, "α": a, "y": y, "β": b, "z": z}
    return None


def _w_interior(mu: FuzzySubset) -> dict | None:
    m = mu.grades
    for x, a, y, b, z, v in _triples(mu.hemiring):
        if m[v] < m[y]:
            return {"x": x, "α": a, "y": y, "β": b, "z": z}
    return None


def _w_quasi(mu: FuzzySubset) -> dict | None:
    chi = constant(mu.hemiring, ONE)
    prod = h_product if mutations.active("gamma-h-quasi") else generalized_h_product
    lhs = prod(mu, chi) & prod(chi, mu)
    for x, (l, r) in enumerate(zip(lhs.grades, mu.grades)):
        if l > r:
            return {"x": x, "lhs": str(l), "μ(x)": str(r)}
    return None


def is_nonempty(mu: FuzzySubset) -> bool:
    return any(g > 0 for g in mu.grades)


def fuzzy_h_ideal_witness(mu: FuzzySubset, side: str = "two-sided") -> tuple[str, dict] | None:
    """First failed clause for a fuzzy ``side`` h-ideal as ``(clause, witness)``."""
    if not is_nonempty(mu):
        return "nonempty", {}
    checks = [("(i)", _w_additive)]
    if side in ("left", "two-sided"):
        checks.append(("(ii-left)", _w_left))
    if side in ("right", "two-sided"):
        checks.append(("(ii-right)", _w_right))
    checks.append(("(iii)", _w_h))
    for clause, check in checks:
        w = check(mu)
        if w is not None:
            return clause, w
    return None


def is_fuzzy_h_ideal(mu: FuzzySubset, side: str = "two-sided") -> bool:
    return fuzzy_h_ideal_witness(mu, side) is None


def _class_witness(mu: FuzzySubset, extra) -> tuple[str, dict] | None:
    if not is_nonempty(mu):
        return "nonempty", {}
    for clause, check in [("(i)", _w_additive), ("(iii)", _w_h), *extra]:
        w = check(mu)
        if w is not None:
            return clause, w
    return None


def bi_witness(mu: FuzzySubset):
    return _class_witness(mu, [("subhemiring", _w_subsemiring), ("bi", _w_bi)])


def interior_witness(mu: FuzzySubset):
    return _class_witness(mu, [("subhemiring", _w_subsemiring), ("interior", _w_interior)])


def quasi_witness(mu: FuzzySubset):
    return _class_witness(mu, [("quasi", _w_quasi)])


def is_fuzzy_h_bi_ideal(mu: FuzzySubset) -> bool:
    return bi_witness(mu) is None


def is_fuzzy_h_interior_ideal(mu: FuzzySubset) -> bool:
    return interior_witness(mu) is None


def is_fuzzy_h_quasi_ideal(mu: FuzzySubset) -> bool:
    return quasi_witness(mu) is None


@dataclass(frozen=True)
class FuzzyClassification:
    nonempty: bool
    left_h_ideal: bool
    right_h_ideal: bool
    h_ideal: bool
    h_bi_ideal: bool
    h_interior_ideal: bool
    h_quasi_ideal: bool
    witnesses: dict = field(default_factory=dict, compare=False)

    FLAGS = (
        "nonempty",
        "left_h_ideal",
        "right_h_ideal",
        "h_ideal",
        "h_bi_ideal",
        "h_interior_ideal",
        "h_quasi_ideal",
    )

    def as_dict(self) -> dict[str, bool]:
        return {f: getattr(self, f) for f in self.FLAGS}


def classify_fuzzy(mu: FuzzySubset) -> FuzzyClassification:
    found = {
        "left_h_ideal": fuzzy_h_ideal_witness(mu, "left"),
        "right_h_ideal": fuzzy_h_ideal_witness(mu, "right"),
        "h_bi_ideal": bi_witness(mu),
        "h_interior_ideal": interior_witness(mu),
        "h_quasi_ideal": quasi_witness(mu),
    }
    found["h_ideal"] = found["left_h_ideal"] or found["right_h_ideal"]
    witnesses = {k: v for k, v in found.items() if v is not None}
    return FuzzyClassification(
        nonempty=is_nonempty(mu),
        witnesses=witnesses,
        **{k: v is None for k, v in found.items()},
    )


# -- h-products --------------------------------------------------------------

def _best_per_product(mu: FuzzySubset, theta: FuzzySubset) -> list[Fraction | None]:
    """For each element p, the largest ``min(mu(a), theta(b))`` over ``a g b = p``."""
    H, P = mu.hemiring, mu.hemiring.product
    best: list[Fraction | None] = [None] * H.s_size
    for a in H.elements:
        for b in H.elements:
            v = min(mu.grades[a], theta.grades[b])
            for g in H.gammas:
                p = P[a][g][b]
                if best[p] is None or v > best[p]:
                    best[p] = v
    return best


def h_product(mu: FuzzySubset, theta: FuzzySubset) -> FuzzySubset:
    """Single-term h-product: sup over ``x + a1 g b1 + z = a2 d b2 + z``."""
    _same(mu, theta)
    H = mu.hemiring
    best = _best_per_product(mu, theta)
    reach = H.reach_table()
    out = []
    for x in H.elements:
        v = ZERO
        for p in H.elements:
            if best[p] is None:
                continue
            for q in H.elements:
                if best[q] is not None and reach[x][p][q]:
                    v = max(v, min(best[p], best[q]))
        out.append(v)
    return FuzzySubset(H, tuple(out))


def balanced_sums(H: GammaHemiring, terms: Iterable[int]) -> frozenset[tuple[int, int]]:
    """Pairs ``(sum of n terms, sum of n terms)`` for every ``n >= 1``, as a least fixed point."""
    L = tuple(sorted(set(terms)))
    A = H.s_add
    seen = {(p, q) for p in L for q in L}
    frontier = list(seen)
    while frontier:
        nxt = []
        for u, v in frontier:
            for p in L:
                up = A[u][p]
                for q in L:
                    pair = (up, A[v][q])
                    if pair not in seen:
                        seen.add(pair)
                        nxt.append(pair)
        frontier = nxt
    return frozenset(seen)


def generalized_h_product(mu: FuzzySubset, theta: FuzzySubset) -> FuzzySubset:
    """Generalized h-product with sums of any length, computed exactly.

    Every grade a decomposition can achieve is some threshold
    ``t = min(mu(a), theta(b))``. For each such ``t`` (descending) the
    products ``a g b`` with ``mu(a) >= t`` and ``theta(b) >= t`` are summed in
    equal numbers on both sides until no new pair of sums appears; ``x`` gets
    the first ``t`` at which some pair ``(u, v)`` satisfies
    ``x + u + z = v + z``.
    """
    _same(mu, theta)
    H, P = mu.hemiring, mu.hemiring.product
    reach = H.reach_table()
    thresholds = sorted(
        {min(mu.grades[a], theta.grades[b]) for a in H.elements for b in H.elements},
        reverse=True,
    )
    out: list[Fraction | None] = [None] * H.s_size
    for t in thresholds:
        if t == 0 or all(v is not None for v in out):
            break
        left = [a for a in H.elements if mu.grades[a] >= t]
        right = [b for b in H.elements if theta.grades[b] >= t]
        terms = {P[a][g][b] for a in left for g in H.gammas for b in right}
        pairs = balanced_sums(H, terms)
        for x in H.elements:
            if out[x] is None and any(reach[x][u][v] for u, v in pairs):
                out[x] = t
    return FuzzySubset(H, tuple(ZERO if v is None else v for v in out))


# -- primeness ----------------------------------------------------------------

def _require_h_ideal(mu: FuzzySubset) -> None:
    w = fuzzy_h_ideal_witness(mu)
    if w is not None:
        raise IdealError(f"not a fuzzy h-ideal: clause {w[0]} fails at {w[1]}")


def prime_characterization(mu: FuzzySubset) -> bool:
    """``mu(0) = 1``, image ``{1, t}`` with ``t < 1``, and a prime level set."""
    _require_h_ideal(mu)
    if mu.grades[0] != ONE or len(mu.image) != 2:
        return False
    return is_prime_h_ideal(mu.hemiring, level_zero(mu), method="elements")


def grid_subsets(H: GammaHemiring, grid: Sequence) -> Iterator[FuzzySubset]:
    """All ``|grid| ** s_size`` grade assignments, odometer order with the last element fastest."""
    grid = tuple(sorted({grade(g) for g in grid}))
    for grades in iproduct(grid, repeat=H.s_size):
        yield FuzzySubset(H, grades)


@lru_cache(maxsize=256)
def _grid_h_ideals(H: GammaHemiring, grid: tuple[Fraction, ...], state: frozenset) -> tuple:
    return tuple(mu for mu in grid_subsets(H, grid) if is_fuzzy_h_ideal(mu))


def grid_h_ideals(H: GammaHemiring, grid: Sequence = DEFAULT_GRID) -> tuple[FuzzySubset, ...]:
    grid = tuple(sorted({grade(g) for g in grid}))
    return _grid_h_ideals(H, grid, mutations.current())


def prime_grid_counterexample(mu: FuzzySubset, grid: Sequence = DEFAULT_GRID):
    """Grid-valued fuzzy h-ideals ``sigma, theta`` with ``sigma Gamma_h theta`` inside ``mu``
    but neither inside ``mu``; ``None`` when the grid offers no such pair."""
    _require_h_ideal(mu)
    H = mu.hemiring
    ideals = [s for s in grid_h_ideals(H, grid) if not s <= mu]
    for sigma in ideals:
        for theta in ideals:
            if h_product(sigma, theta) <= mu:
                return sigma, theta
    return None


def semiprime_grid_counterexample(mu: FuzzySubset, grid: Sequence = DEFAULT_GRID):
    _require_h_ideal(mu)
    for theta in grid_h_ideals(mu.hemiring, grid):
        if not theta <= mu and h_product(theta, theta) <= mu:
            return theta
    return None


def is_prime_fuzzy(mu: FuzzySubset, method: str = "characterization", grid: Sequence = DEFAULT_GRID) -> bool:
    if method == "characterization":
        return prime_characterization(mu)
    if method == "grid-definition":
        _require_h_ideal(mu)
        return not mu.is_constant and prime_grid_counterexample(mu, grid) is None
    raise ValueError("method must be 'characterization' or 'grid-definition'")


def is_semiprime_fuzzy_grid(mu: FuzzySubset, grid: Sequence = DEFAULT_GRID) -> bool:
    _require_h_ideal(mu)
    return not mu.is_constant and semiprime_grid_counterexample(mu, grid) is None


# -- transforms -----------------------------------------------------------------

def plus_transform(mu: FuzzySubset) -> FuzzySubset:
    shift = ONE - mu.grades[0]
    return FuzzySubset(mu.hemiring, tuple(g + shift for g in mu.grades))


def affine_transform(mu: FuzzySubset, beta, alpha, check_range: bool = True) -> FuzzySubset:
    """``y -> beta * mu(y) + alpha`` for ``beta in (0, 1]``, ``alpha in [0, 1 - max mu]``.

    With ``check_range=False`` only the result is required to stay in [0, 1].
    """
    beta, alpha = Fraction(beta), Fraction(alpha)
    if not ZERO < beta <= ONE:
        raise ValueError(f"beta={beta} outside (0, 1]")
    if check_range and not ZERO <= alpha <= ONE - max(mu.grades):
        raise ValueError(f"alpha={alpha} outside [0, 1 - sup mu]")
    return FuzzySubset(mu.hemiring, tuple(beta * g + alpha for g in mu.grades))


def cartesian(mu: FuzzySubset, nu: FuzzySubset, target: GammaHemiring | None = None) -> FuzzySubset:
    """``(a, b) -> min(mu(a), nu(b))`` on the product structure."""
    _same(mu, nu)
    H = mu.hemiring
    P = target if target is not None else product_hemiring(H)
    grades = [ZERO] * P.s_size
    for a in H.elements:
        for b in H.elements:
            grades[pair_index(H, a, b)] = min(mu.grades[a], nu.grades[b])
    return FuzzySubset(P, tuple(grades))


def image(f: Homomorphism, mu: FuzzySubset) -> FuzzySubset:
    grades = [ZERO] * f.target.s_size
    for x, y in enumerate(f.map):
        grades[y] = max(grades[y], mu.grades[x])
    return FuzzySubset(f.target, tuple(grades))


def preimage(f: Homomorphism, sigma: FuzzySubset) -> FuzzySubset:
    return FuzzySubset(f.source, tuple(sigma.grades[y] for y in f.map))
