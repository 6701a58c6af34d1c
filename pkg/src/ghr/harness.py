"""Claim registry and runner.

Every registered claim is a generator over the instances of one structure
that satisfy its hypotheses; each yielded item is ``(ok, witness)``. The
runner walks structures in family order, counts hypothesis-satisfying
instances, and stops a claim at its first counterexample.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product as iproduct
from typing import Callable, Iterator, Sequence

from . import mutations, oracles
from .core import (
    GammaHemiring,
    Homomorphism,
    check_homomorphism,
    product_hemiring,
    projections,
    validate_hemiring,
)
from .crisp import (
    crisp_extension,
    enumerate_h_ideals,
    is_h_ideal,
    is_prime_h_ideal,
)
from .enumeration import enumerate_hemirings
from .extension import (
    extension_inf_identity_check,
    fuzzy_extension,
    inf_max_witness,
    iterated_extension_chain,
)
from .fuzzy import (
    DEFAULT_GRID,
    ONE,
    FuzzySubset,
    affine_transform,
    cartesian,
    characteristic,
    classify_fuzzy,
    constant,
    generalized_h_product,
    grade,
    grid_subsets,
    h_product,
    image,
    is_fuzzy_h_bi_ideal,
    is_fuzzy_h_ideal,
    is_fuzzy_h_interior_ideal,
    is_fuzzy_h_quasi_ideal,
    level_zero,
    plus_transform,
    preimage,
    prime_characterization,
    prime_grid_counterexample,
    support,
)

Outcome = tuple[bool, dict]


class UnknownClaim(KeyError):
    pass


@dataclass(frozen=True)
class InstanceFamily:
    s_max: int = 2
    g_max: int = 2
    grid: tuple[Fraction, ...] = DEFAULT_GRID
    fixtures: tuple[GammaHemiring, ...] | None = None

    def __post_init__(self) -> None:
        g = tuple(sorted({grade(v) for v in self.grid}))
        if Fraction(0) not in g or ONE not in g:
            raise ValueError("grid must contain 0 and 1")
        object.__setattr__(self, "grid", g)

    def structures(self) -> list[GammaHemiring]:
        if self.fixtures is not None:
            return list(self.fixtures)
        return list(enumerate_hemirings(self.s_max, self.g_max))


@dataclass
class TheoremReport:
    claim: str
    instances_checked: int
    verdict: str  # "pass" | "fail" | "vacuous"
    witness: dict | None = None
    exploratory: dict | None = None

    def line(self) -> str:
        return f"{self.claim}\t{self.instances_checked}\t{self.verdict}"

    def as_dict(self) -> dict:
        return {
            "claim": self.claim,
            "instances_checked": self.instances_checked,
            "verdict": self.verdict,
            "witness": self.witness,
            "exploratory": self.exploratory,
        }


def _fs(mu: FuzzySubset) -> str:
    return str(mu)


class Context:
    """Per-run caches shared by all claims: grid subsets, ideals, homomorphisms."""

    def __init__(self, family: InstanceFamily, structures: Sequence[GammaHemiring]):
        self.family = family
        self.structures = list(structures)
        self._cache: dict = {}

    def _memo(self, key, make):
        if key not in self._cache:
            self._cache[key] = make()
        return self._cache[key]

    @property
    def grid(self):
        return self.family.grid

    def subsets(self, H) -> list[FuzzySubset]:
        return self._memo(("subsets", H), lambda: list(grid_subsets(H, self.grid)))

    def h_ideals(self, H) -> list[FuzzySubset]:
        return self._memo(("h", H), lambda: [m for m in self.subsets(H) if is_fuzzy_h_ideal(m)])

    def right_h_ideals(self, H) -> list[FuzzySubset]:
        return self._memo(
            ("rh", H), lambda: [m for m in self.subsets(H) if is_fuzzy_h_ideal(m, "right")]
        )

    def primes(self, H) -> list[FuzzySubset]:
        return self._memo(("p", H), lambda: [m for m in self.h_ideals(H) if prime_characterization(m)])

    def product(self, H) -> GammaHemiring:
        return self._memo(("prod", H), lambda: product_hemiring(H))

    def crisp_h_ideals(self, H) -> list[frozenset[int]]:
        return self._memo(("ch", H), lambda: enumerate_h_ideals(H))

    def homs_from(self, R) -> list[Homomorphism]:
        """Every homomorphism from ``R`` into a family structure with the same Gamma."""

        def make():
            out = []
            for S in self.structures:
                if S.g_size != R.g_size or S.g_add != R.g_add:
                    continue
                for tail in iproduct(S.elements, repeat=R.s_size - 1):
                    f = Homomorphism(R, S, (0, *tail))
                    if check_homomorphism(f).valid:
                        out.append(f)
            return out

        return self._memo(("homs", R), make)


def _ext_ok(mu: FuzzySubset, commutative: bool) -> bool:
    """What the extension theorem delivers: right h-ideal always, two-sided on commutative H."""
    return is_fuzzy_h_ideal(mu, "two-sided" if commutative else "right")


# -- claim bodies ------------------------------------------------------------------

def c_hemiring(H, ctx) -> Iterator[Outcome]:
    ok = validate_hemiring(H).valid
    yield ok, {}
    P = ctx.product(H)
    ok = validate_hemiring(P).valid and all(check_homomorphism(p).valid for p in projections(H, P))
    yield ok, {"product": P.name}


def c_h_ideal_def(H, ctx) -> Iterator[Outcome]:
    for mask in range(1, 1 << H.s_size):
        A = frozenset(i for i in H.elements if mask >> i & 1)
        mine = is_h_ideal(H, A)
        ok = mine == oracles.is_h_ideal(H, A)
        ok = ok and classify_fuzzy(characteristic(H, A)).h_ideal == mine
        yield ok, {"A": sorted(A)}


def c_fuzzy_classes_def(H, ctx) -> Iterator[Outcome]:
    for mu in ctx.subsets(H):
        mine = classify_fuzzy(mu).as_dict()
        ref = oracles.fuzzy_flags(H, mu.grades)
        diff = sorted(k for k in mine if mine[k] != ref[k])
        yield not diff, {"μ": _fs(mu), "disagree": diff}


def c_gen_product_def(H, ctx) -> Iterator[Outcome]:
    for mu in ctx.subsets(H):
        for theta in ctx.subsets(H):
            fast = generalized_h_product(mu, theta)
            ref = oracles.generalized_h_product(H, mu.grades, theta.grades)
            single = h_product(mu, theta)
            ok = fast.grades == ref and single <= fast
            yield ok, {"μ": _fs(mu), "θ": _fs(theta)}


def c_single_product_def(H, ctx) -> Iterator[Outcome]:
    for mu in ctx.subsets(H):
        for theta in ctx.subsets(H):
            ok = h_product(mu, theta).grades == oracles.single_h_product(H, mu.grades, theta.grades)
            yield ok, {"μ": _fs(mu), "θ": _fs(theta)}


def c_extension_def(H, ctx) -> Iterator[Outcome]:
    for mu in ctx.subsets(H):
        for x in H.elements:
            yield fuzzy_extension(x, mu).grades == oracles.extension(H, x, mu.grades), {
                "μ": _fs(mu),
                "x": x,
            }


def c_prime_elements(H, ctx) -> Iterator[Outcome]:
    for I in ctx.crisp_h_ideals(H):
        a = is_prime_h_ideal(H, I, "definition")
        b = is_prime_h_ideal(H, I, "elements")
        yield a == b, {"I": sorted(I), "definition": a, "elements": b}


def c_prime_fuzzy_char(H, ctx) -> Iterator[Outcome]:
    for mu in ctx.primes(H):
        cex = prime_grid_counterexample(mu, ctx.grid)
        w = {"μ": _fs(mu)}
        if cex:
            w.update(σ=_fs(cex[0]), θ=_fs(cex[1]))
        yield cex is None and not mu.is_constant, w


def c_ext_right(H, ctx) -> Iterator[Outcome]:
    for mu in ctx.right_h_ideals(H):
        for x in H.elements:
            yield is_fuzzy_h_ideal(fuzzy_extension(x, mu), "right"), {"μ": _fs(mu), "x": x}


def c_ext_two_sided(H, ctx) -> Iterator[Outcome]:
    for mu in ctx.h_ideals(H):
        for x in H.elements:
            yield is_fuzzy_h_ideal(fuzzy_extension(x, mu)), {"μ": _fs(mu), "x": x}


def c_ext_intersection(H, ctx) -> Iterator[Outcome]:
    ideals = ctx.h_ideals(H)
    for i, m1 in enumerate(ideals):
        for m2 in ideals[i:]:
            meet = m1 & m2
            for x in H.elements:
                ok = is_fuzzy_h_ideal(fuzzy_extension(x, meet))
                yield ok, {"μ1": _fs(m1), "μ2": _fs(m2), "x": x}


def c_ext_preimage(H, ctx) -> Iterator[Outcome]:
    for f in ctx.homs_from(H):
        for phi in ctx.right_h_ideals(f.target):
            pre = preimage(f, phi)
            for z in H.elements:
                ok = is_fuzzy_h_ideal(fuzzy_extension(z, pre), "right")
                yield ok, {"target": f.target.name, "f": list(f.map), "φ": _fs(phi), "z": z}


def c_ext_image(H, ctx) -> Iterator[Outcome]:
    for f in ctx.homs_from(H):
        if not f.is_surjective:
            continue
        for mu in ctx.right_h_ideals(H):
            img = image(f, mu)
            for z in f.target.elements:
                ok = is_fuzzy_h_ideal(fuzzy_extension(z, img), "right")
                yield ok, {"target": f.target.name, "f": list(f.map), "μ": _fs(mu), "z": z}


def c_ext_contains(H, ctx) -> Iterator[Outcome]:
    for mu in ctx.h_ideals(H):
        for x in H.elements:
            yield mu <= fuzzy_extension(x, mu), {"μ": _fs(mu), "x": x}


def c_ext_chain(H, ctx) -> Iterator[Outcome]:
    n_max = max(2, H.s_size)
    for mu in ctx.h_ideals(H):
        for x in H.elements:
            for g in H.gammas:
                chain = iterated_extension_chain(x, g, mu, n_max)
                ok = all(a <= b for a, b in zip(chain, chain[1:]))
                yield ok, {"μ": _fs(mu), "x": x, "γ": g}


def c_ext_support(H, ctx) -> Iterator[Outcome]:
    S = frozenset(H.elements)
    for mu in ctx.h_ideals(H):
        for x in H.elements:
            if mu(x) > 0:
                yield support(fuzzy_extension(x, mu)) == S, {"μ": _fs(mu), "x": x}


def _preserves(pred: Callable[[FuzzySubset], bool]):
    def body(H, ctx) -> Iterator[Outcome]:
        for mu in ctx.subsets(H):
            if not pred(mu):
                continue
            for x in H.elements:
                yield pred(fuzzy_extension(x, mu)), {"μ": _fs(mu), "x": x}

    return body


def c_quasi_bi(H, ctx) -> Iterator[Outcome]:
    for mu in ctx.subsets(H):
        if not is_fuzzy_h_quasi_ideal(mu):
            continue
        base = is_fuzzy_h_bi_ideal(mu)
        for x in H.elements:
            ext = fuzzy_extension(x, mu)
            ok = base and is_fuzzy_h_quasi_ideal(ext) and is_fuzzy_h_bi_ideal(ext)
            yield ok, {"μ": _fs(mu), "x": x}


def c_ext_plus(H, ctx) -> Iterator[Outcome]:
    comm = H.is_commutative
    for mu in ctx.h_ideals(H):
        plus = plus_transform(mu)
        for x in H.elements:
            ok = is_fuzzy_h_ideal(plus) and _ext_ok(fuzzy_extension(x, plus), comm)
            yield ok, {"μ": _fs(mu), "x": x}


def c_ext_affine(H, ctx) -> Iterator[Outcome]:
    comm = H.is_commutative
    for mu in ctx.h_ideals(H):
        top = max(mu.grades)
        for beta in ctx.grid:
            if beta == 0:
                continue
            for alpha in ctx.grid:
                if alpha > ONE - top:
                    continue
                aff = affine_transform(mu, beta, alpha)
                for x in H.elements:
                    ok = is_fuzzy_h_ideal(aff) and _ext_ok(fuzzy_extension(x, aff), comm)
                    yield ok, {"μ": _fs(mu), "β": str(beta), "α": str(alpha), "x": x}


def c_ext_cartesian(H, ctx) -> Iterator[Outcome]:
    P = ctx.product(H)
    comm = P.is_commutative
    for mu in ctx.h_ideals(H):
        for nu in ctx.h_ideals(H):
            prod = cartesian(mu, nu, P)
            if not is_fuzzy_h_ideal(prod):
                yield False, {"μ": _fs(mu), "ν": _fs(nu), "x": None}
                continue
            for x in P.elements:
                ok = _ext_ok(fuzzy_extension(x, prod), comm)
                yield ok, {"μ": _fs(mu), "ν": _fs(nu), "x": x}


def c_thm_cartesian(H, ctx) -> Iterator[Outcome]:
    P = ctx.product(H)
    comm = H.is_commutative
    ideals = ctx.h_ideals(H)
    exts = {(i, x): fuzzy_extension(x, mu) for i, mu in enumerate(ideals) for x in H.elements}
    for (i, x), ex in exts.items():
        for (j, y), ey in exts.items():
            ok = _ext_ok(cartesian(ex, ey, P), comm)
            yield ok, {"μ": _fs(ideals[i]), "x": x, "ν": _fs(ideals[j]), "y": y}


def _two_valued(mu: FuzzySubset) -> bool:
    return len(mu.image) == 2 and ONE in mu.image


def c_inf_max(H, ctx) -> Iterator[Outcome]:
    for mu in ctx.h_ideals(H):
        prime = prime_characterization(mu)
        crit = inf_max_witness(mu) is None
        if prime:
            yield crit, {"direction": "prime ⇒ criterion", "μ": _fs(mu)}
        if _two_valued(mu) and crit:
            yield prime, {"direction": "criterion ⇒ prime", "μ": _fs(mu)}


def c_ext_prime(H, ctx) -> Iterator[Outcome]:
    for mu in ctx.primes(H):
        for x in H.elements:
            ext = fuzzy_extension(x, mu)
            ok = (
                is_fuzzy_h_ideal(ext)
                and ext.image <= mu.image
                and inf_max_witness(ext) is None
            )
            yield ok, {"μ": _fs(mu), "x": x}


def c_inf_identity(H, ctx) -> Iterator[Outcome]:
    for mu in ctx.primes(H):
        for x in H.elements:
            yield extension_inf_identity_check(x, mu), {"μ": _fs(mu), "x": x}


def c_lambda(H, ctx) -> Iterator[Outcome]:
    for mask in range(1, 1 << H.s_size):
        A = frozenset(i for i in H.elements if mask >> i & 1)
        lam = characteristic(H, A)
        for x in H.elements:
            ok = fuzzy_extension(x, lam) == characteristic(H, crisp_extension(H, x, A))
            yield ok, {"A": sorted(A), "x": x}


def c_ext_fixed(H, ctx) -> Iterator[Outcome]:
    for mu in ctx.h_ideals(H):
        prime = prime_characterization(mu)
        zero = level_zero(mu)
        exts = {x: fuzzy_extension(x, mu) for x in H.elements}
        if prime:
            for x in H.elements:
                if x not in zero:
                    yield exts[x] == mu, {"direction": "prime ⇒ fixed", "μ": _fs(mu), "x": x}
        if _two_valued(mu):
            t = min(mu.image)
            if all(exts[x] == mu for x in H.elements if mu(x) == t):
                yield prime, {"direction": "fixed ⇒ prime", "μ": _fs(mu)}


def c_ext_one(H, ctx) -> Iterator[Outcome]:
    one = constant(H, ONE)
    for mu in ctx.primes(H):
        for x in sorted(level_zero(mu)):
            yield fuzzy_extension(x, mu) == one, {"μ": _fs(mu), "x": x}


def c_lambda_prime(H, ctx) -> Iterator[Outcome]:
    for I in ctx.crisp_h_ideals(H):
        if not is_prime_h_ideal(H, I, "elements"):
            continue
        lam = characteristic(H, I)
        if not prime_characterization(lam):
            yield False, {"I": sorted(I), "reason": "λ_I not prime"}
            continue
        for x in H.elements:
            if x not in I:
                yield fuzzy_extension(x, lam) == lam, {"I": sorted(I), "x": x}


def c_constant(H, ctx) -> Iterator[Outcome]:
    for mu in ctx.subsets(H):
        if all(fuzzy_extension(x, mu) == mu for x in H.elements):
            yield mu.is_constant, {"μ": _fs(mu)}


@dataclass(frozen=True)
class Claim:
    id: str
    summary: str
    body: Callable[[GammaHemiring, Context], Iterator[Outcome]]
    commutative_only: bool = False


CLAIMS: dict[str, Claim] = {
    c.id: c
    for c in [
        Claim("DEF-HEMIRING", "structures, their squares and the projections validate", c_hemiring),
        Claim("DEF-H-IDEAL", "h-ideal decision matches the literal quantifier scan and χ_A", c_h_ideal_def),
        Claim("DEF-FUZZY-CLASSES", "every fuzzy class flag matches a literal scan", c_fuzzy_classes_def),
        Claim("DEF-GEN-HPRODUCT", "fixed-point generalized product matches term enumeration", c_gen_product_def),
        Claim("DEF-HPRODUCT", "single-term h-product matches the literal tuple scan", c_single_product_def),
        Claim("DEF-EXTENSION", "extension matches the literal three-index minimum", c_extension_def),
        Claim("THM-PRIME-ELEMENTS", "prime h-ideal by definition ⇔ by elements", c_prime_elements),
        Claim("THM-PRIME-FUZZY-CHAR", "characterised prime fuzzy h-ideals admit no grid counterexample", c_prime_fuzzy_char),
        Claim("THM-EXT-RIGHT-HIDEAL", "extension of a fuzzy right h-ideal is one", c_ext_right),
        Claim("NOTE-EXT-TWO-SIDED", "extension of a fuzzy h-ideal is two-sided (commutative)", c_ext_two_sided, True),
        Claim("PROP-EXT-INTERSECTION", "extension of an intersection is a fuzzy h-ideal (commutative)", c_ext_intersection, True),
        Claim("PROP-EXT-PREIMAGE", "extension of a preimage is a fuzzy right h-ideal", c_ext_preimage),
        Claim("PROP-EXT-IMAGE", "extension of a surjective image is a fuzzy right h-ideal", c_ext_image),
        Claim("PROP-EXT-CONTAINS", "μ ⊆ <x,μ>", c_ext_contains),
        Claim("PROP-EXT-CHAIN", "<(xγ)^(n-1)x,μ> ⊆ <(xγ)^n x,μ>", c_ext_chain),
        Claim("PROP-EXT-SUPPORT", "μ(x) > 0 ⇒ supp <x,μ> = S", c_ext_support),
        Claim("PROP-EXT-BI", "extension preserves fuzzy h-bi-ideals (commutative)", _preserves(is_fuzzy_h_bi_ideal), True),
        Claim("PROP-EXT-INTERIOR", "extension preserves fuzzy h-interior ideals (commutative)", _preserves(is_fuzzy_h_interior_ideal), True),
        Claim("PROP-EXT-QUASI", "extension preserves fuzzy h-quasi-ideals", _preserves(is_fuzzy_h_quasi_ideal)),
        Claim("REMARK-EXT-QUASI-BI", "quasi ⇒ bi, for μ and for <x,μ> (commutative)", c_quasi_bi, True),
        Claim("PROP-EXT-PLUS", "μ⁺ and <x,μ⁺> are fuzzy h-ideals", c_ext_plus),
        Claim("PROP-EXT-AFFINE", "μ_{β,α} and <x,μ_{β,α}> are fuzzy h-ideals", c_ext_affine),
        Claim("PROP-EXT-CARTESIAN", "μ×ν and <w,μ×ν> are fuzzy h-ideals of S×S", c_ext_cartesian),
        Claim("THM-EXT-CARTESIAN", "<x,μ>×<y,ν> is a fuzzy h-ideal of S×S", c_thm_cartesian),
        Claim("PROP-INF-MAX", "prime ⇔ inf μ(xαsγy) = max(μ(x), μ(y)) for two-valued μ", c_inf_max),
        Claim("PROP-EXT-PRIME", "extension of a prime satisfies the inf-max criterion", c_ext_prime),
        Claim("PROP-EXT-INF-IDENTITY", "<x,μ> = inf over <xηs₁δx,μ> for prime μ", c_inf_identity),
        Claim("PROP-LAMBDA-TRANSLATION", "<x,λ_A> = λ_<x,A>", c_lambda),
        Claim("THM-EXT-FIXED", "prime μ, x ∉ μ₀ ⇒ <x,μ> = μ, and the converse", c_ext_fixed),
        Claim("THM-EXT-ONE", "prime μ, x ∈ μ₀ ⇒ <x,μ> = 1_S", c_ext_one),
        Claim("COR-LAMBDA-PRIME", "prime h-ideal I, x ∉ I ⇒ <x,λ_I> = λ_I", c_lambda_prime),
        Claim("THM-EXT-CONSTANT", "<x,μ> = μ for all x ⇒ μ constant (commutative)", c_constant, True),
    ]
}

CLAIM_GROUPS = {
    "ALL": tuple(CLAIMS),
    "DICHOTOMY": ("THM-EXT-FIXED", "THM-EXT-ONE"),
    "DEFINITIONS": tuple(c for c in CLAIMS if c.startswith("DEF-")),
}


def resolve_claims(names: Sequence[str] | None) -> list[str]:
    if not names:
        return list(CLAIMS)
    out: list[str] = []
    for name in names:
        expanded = CLAIM_GROUPS.get(name, (name,))
        for c in expanded:
            if c not in CLAIMS:
                raise UnknownClaim(c)
            if c not in out:
                out.append(c)
    return out


def _scan(claim: Claim, structures, ctx) -> tuple[int, dict | None]:
    n = 0
    for H in structures:
        for ok, witness in claim.body(H, ctx):
            n += 1
            if not ok:
                return n, {"structure": H.name, **witness}
    return n, None


def run_claim(claim_id: str, family: InstanceFamily, ctx: Context | None = None) -> TheoremReport:
    claim = CLAIMS[claim_id]
    if ctx is None:
        ctx = Context(family, family.structures())
    if claim.commutative_only:
        targets = [H for H in ctx.structures if H.is_commutative]
        others = [H for H in ctx.structures if not H.is_commutative]
    else:
        targets, others = ctx.structures, []
    n, witness = _scan(claim, targets, ctx)
    if witness is not None:
        verdict = "fail"
    elif n == 0:
        verdict = "vacuous"
    else:
        verdict = "pass"
    exploratory = None
    if claim.commutative_only:
        m, w = _scan(claim, others, ctx)
        exploratory = {"noncommutative_instances": m, "noncommutative_witness": w}
    return TheoremReport(claim_id, n, verdict, witness, exploratory)


def _worker(args) -> dict:
    claim_id, family, active = args
    with mutations.mutated(*active):
        return run_claim(claim_id, family).as_dict()


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("GHR_THREADS", "1")))
    except ValueError:
        return 1


def run_claims(
    family: InstanceFamily,
    claims: Sequence[str] | None = None,
    workers: int | None = None,
) -> list[TheoremReport]:
    """Run ``claims`` (default: all) over ``family``; reports come back in request order."""
    ids = resolve_claims(claims)
    workers = _threads() if workers is None else workers
    if workers > 1 and len(ids) > 1:
        jobs = [(c, family, tuple(mutations.current())) for c in ids]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return [TheoremReport(**d) for d in pool.map(_worker, jobs)]
    ctx = Context(family, family.structures())
    return [run_claim(c, family, ctx) for c in ids]


def report_json(reports: Sequence[TheoremReport], family: InstanceFamily) -> str:
    payload = {
        "family": {
            "s_max": family.s_max,
            "g_max": family.g_max,
            "grid": [str(g) for g in family.grid],
            "fixtures": [H.name for H in family.fixtures] if family.fixtures is not None else None,
        },
        "mutations": sorted(mutations.current()),
        "reports": [r.as_dict() for r in reports],
    }
    return json.dumps(payload, indent=2, ensure_ascii=False, default=str)
