"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) for just the summary lines.
"""

from __future__ import annotations

import json
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

from ghr import fixtures, oracles
from ghr.cli import main
from ghr.crisp import crisp_extension, enumerate_h_ideals, is_prime_h_ideal
from ghr.enumeration import enumerate_hemirings
from ghr.extension import fuzzy_extension
from ghr.fuzzy import (
    DEFAULT_GRID,
    characteristic,
    constant,
    fuzzy,
    generalized_h_product,
    grid_h_ideals,
    grid_subsets,
    is_prime_fuzzy,
    prime_grid_counterexample,
)
from ghr.harness import InstanceFamily, run_claims
from ghr.io import dump, parse_fuzzy, parse_structure, parse_subset
from ghr.mutations import MUTATIONS, mutated

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"
GRID = (Fraction(0), Fraction(1, 2), Fraction(1))
TIME_LIMIT = 600.0


def report(label: str, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'}  {label}: {detail}"
    capture = getattr(report, "capsys", None)
    if capture is not None:
        with capture.disabled():
            print("\n" + line)
    else:
        print(line)


@pytest.fixture(autouse=True)
def _uncaptured(capsys):
    report.capsys = capsys
    yield
    report.capsys = None


# -- 1 ----------------------------------------------------------------------

def check_central_run():
    start = time.perf_counter()
    reports = run_claims(InstanceFamily(2, 2, GRID))
    elapsed = time.perf_counter() - start
    bad = [r.claim for r in reports if r.verdict != "pass"]
    ok = not bad and elapsed < TIME_LIMIT
    return ok, f"{len(reports) - len(bad)}/{len(reports)} claims pass, not vacuous, {elapsed:.1f}s" + (
        f"; failing or vacuous: {bad}" if bad else ""
    )


def test_1_central_verification_run():
    ok, detail = check_central_run()
    report("1 central run", ok, detail)
    assert ok, detail


# -- 2 ----------------------------------------------------------------------

def check_dichotomy():
    Z4 = fixtures.z4()
    mu = fuzzy(Z4, fixtures.MU_P_GRADES)
    fixed = fuzzy_extension(1, mu)
    one = fuzzy_extension(2, mu)
    ok = (
        fixed == mu
        and one == constant(Z4, 1)
        and fixed.grades == oracles.extension(Z4, 1, mu.grades)
        and one.grades == oracles.extension(Z4, 2, mu.grades)
    )
    return ok, f"<1,mu_P> = {fixed}, <2,mu_P> = {one}"


def test_2_z4_dichotomy():
    ok, detail = check_dichotomy()
    report("2 Z4 dichotomy", ok, detail)
    assert ok, detail


# -- 3 ----------------------------------------------------------------------

def check_product_oracle():
    pairs = mismatches = 0
    first = None
    for H in enumerate_hemirings(3, 2):
        subs = list(grid_subsets(H, DEFAULT_GRID))
        for mu in subs:
            for theta in subs:
                pairs += 1
                fast = generalized_h_product(mu, theta).grades
                slow = oracles.generalized_h_product(H, mu.grades, theta.grades, H.s_size ** 2)
                if fast != slow:
                    mismatches += 1
                    first = first or (H.name, str(mu), str(theta))
    return mismatches == 0, f"{pairs} grid pairs, {mismatches} mismatches" + (f", first {first}" if first else "")


def test_3_generalized_product_oracle():
    ok, detail = check_product_oracle()
    report("3 fixed point vs oracle", ok, detail)
    assert ok, detail


# -- 4 ----------------------------------------------------------------------

def check_prime_equivalence():
    ideals = disagreements = primes = 0
    for H in enumerate_hemirings(3, 2):
        for I in enumerate_h_ideals(H):
            ideals += 1
            by_def = is_prime_h_ideal(H, I, method="definition")
            primes += by_def
            disagreements += by_def != is_prime_h_ideal(H, I, method="elements")
    return disagreements == 0 and primes > 0, f"{ideals} h-ideals, {primes} prime, {disagreements} disagreements"


def test_4_prime_definition_equivalence():
    ok, detail = check_prime_equivalence()
    report("4 prime h-ideal equivalence", ok, detail)
    assert ok, detail


# -- 5 ----------------------------------------------------------------------

def check_prime_characterization():
    Z4 = fixtures.z4()
    structures = [*enumerate_hemirings(3, 2), Z4]
    primes = counterexamples = 0
    for H in structures:
        for mu in grid_h_ideals(H, GRID):
            if is_prime_fuzzy(mu):
                primes += 1
                counterexamples += prime_grid_counterexample(mu, GRID) is not None
    rejects = not is_prime_fuzzy(characteristic(Z4, {0}))
    accepts = is_prime_fuzzy(fuzzy(Z4, fixtures.MU_P_GRADES))
    ok = counterexamples == 0 and primes > 0 and rejects and accepts
    return ok, (
        f"{primes} prime fuzzy h-ideals, {counterexamples} grid counterexamples; "
        f"chi_{{0}} rejected={rejects}, mu_P accepted={accepts}"
    )


def test_5_prime_fuzzy_characterization():
    ok, detail = check_prime_characterization()
    report("5 prime characterization", ok, detail)
    assert ok, detail


# -- 6 ----------------------------------------------------------------------

def check_translation():
    cases = failures = 0
    for H in [fixtures.z4(), *enumerate_hemirings(2, 2)]:
        for mask in range(1 << H.s_size):
            A = {i for i in H.elements if mask >> i & 1}
            for x in H.elements:
                cases += 1
                lhs = fuzzy_extension(x, characteristic(H, A))
                failures += lhs != characteristic(H, crisp_extension(H, x, A))
    return failures == 0, f"{cases} (structure, subset, x) cases, {failures} failures"


def test_6_characteristic_translation():
    ok, detail = check_translation()
    report("6 characteristic translation", ok, detail)
    assert ok, detail


# -- 7 ----------------------------------------------------------------------

def check_mutation(name: str):
    with mutated(name):
        reports = run_claims(InstanceFamily(2, 2, GRID))
    failed = [r.claim for r in reports if r.verdict == "fail"]
    return bool(failed), f"{name}: {len(failed)} claim(s) fail" + (f" {failed}" if failed else "")


@pytest.mark.parametrize("name", MUTATIONS)
def test_7_mutation_sensitivity(name):
    ok, detail = check_mutation(name)
    report(f"7 mutation {name}", ok, detail)
    assert ok, detail


# -- 8 ----------------------------------------------------------------------

INVOCATIONS = [
    (["validate", "z4.json"], 0),
    (["validate", "b2_or.json"], 1),
    (["validate", "{truncated}"], 2),
    (["classify", "z4.json", "z4_mu_p.json"], 0),
    (["extend", "z4.json", "z4_mu_p.json", "--by", "2"], 0),
    (["product", "z4.json", "z4_chi_02.json", "z4_chi_02.json", "--mode", "gamma-h"], 0),
    (["verify", "--s-max", "2", "--g-max", "2", "--grid", "0,1/2,1"], 0),
    (["verify", "--fixtures", "z4.json", "--claims", "DICHOTOMY"], 0),
    (["verify", "--grid", "1/2"], 2),
]


def _round_trips():
    count = 0
    for path in sorted(FIXTURE_DIR.glob("*.json")):
        data = json.loads(path.read_text())
        if "s_add" in data:
            H = parse_structure(data, validate=False)
            again = parse_structure(json.loads(dump(H)), validate=False)
            ok = again == H and dump(again) == dump(H) == path.read_text()
        else:
            H = parse_structure(FIXTURE_DIR / f"{data['hemiring'].lower().replace('-', '_')}.json", validate=False)
            obj = parse_fuzzy(data, H) if "grades" in data else parse_subset(data, H)
            reparse = parse_fuzzy if "grades" in data else parse_subset
            ok = reparse(json.loads(dump(obj)), H) == obj and dump(obj) == path.read_text()
        if not ok:
            return False, f"round trip broke on {path.name}"
        count += 1
    return True, f"{count} fixture files round-trip"


def check_cli(tmp: Path):
    ok, detail = _round_trips()
    if not ok:
        return ok, detail
    truncated = tmp / "truncated.json"
    truncated.write_text((FIXTURE_DIR / "z4.json").read_text()[:50])
    wrong = []
    for argv, expected in INVOCATIONS:
        resolved = []
        for a in argv:
            if a == "{truncated}":
                resolved.append(str(truncated))
            elif a.endswith(".json"):
                resolved.append(str(FIXTURE_DIR / a))
            else:
                resolved.append(a)
        try:
            code = main(resolved)
        except SystemExit as exc:
            code = exc.code
        if code != expected:
            wrong.append((" ".join(argv), code, expected))
    return not wrong, f"{detail}; {len(INVOCATIONS) - len(wrong)}/{len(INVOCATIONS)} invocations exit as specified" + (
        f"; wrong: {wrong}" if wrong else ""
    )


def test_8_cli_contract(tmp_path, capsys):
    ok, detail = check_cli(tmp_path)
    capsys.readouterr()
    report("8 CLI contract", ok, detail)
    assert ok, detail


if __name__ == "__main__":
    import tempfile

    checks = [
        ("1 central run", check_central_run),
        ("2 Z4 dichotomy", check_dichotomy),
        ("3 fixed point vs oracle", check_product_oracle),
        ("4 prime h-ideal equivalence", check_prime_equivalence),
        ("5 prime characterization", check_prime_characterization),
        ("6 characteristic translation", check_translation),
        *[(f"7 mutation {m}", lambda m=m: check_mutation(m)) for m in MUTATIONS],
    ]
    failed = 0
    for label, fn in checks:
        ok, detail = fn()
        failed += not ok
        report(label, ok, detail)
    with tempfile.TemporaryDirectory() as tmp:
        import contextlib, io as _io

        with contextlib.redirect_stdout(_io.StringIO()), contextlib.redirect_stderr(_io.StringIO()):
            ok, detail = check_cli(Path(tmp))
    failed += not ok
    report("8 CLI contract", ok, detail)
    sys.exit(1 if failed else 0)
