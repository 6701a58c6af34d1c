"""Command-line front end.

Exit codes: 0 success, 1 a negative finding (invalid structure, failing
claim), 2 anything the tool could not process (bad file, bad argument).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import crisp, harness, io, mutations
from .core import StructureError, validate_hemiring
from .crisp import IdealError
from .enumeration import enumerate_hemirings, up_to_isomorphism
from .extension import fuzzy_extension, iterated_extension_chain
from .fuzzy import (
    classify_fuzzy,
    fuzzy_h_ideal_witness,
    generalized_h_product,
    h_product,
    prime_characterization,
)

OK, FINDING, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # keep argparse failures on exit code 2 with one-line output
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _witness(w: dict) -> str:
    return ",".join(f"{k}={v}" for k, v in w.items())


def _load(args):
    return io.parse_structure(args.structure, validate=not args.no_validate)


def cmd_validate(args) -> int:
    H = io.parse_structure(args.structure, validate=False)
    report = validate_hemiring(H, exhaustive=args.verbose)
    if report.valid:
        print(f"{H.name or args.structure}: valid")
        return OK
    print(f"{H.name or args.structure}: {len(report.violations)} violation(s)")
    for v in report.violations:
        print(f"  {v}")
    return FINDING


_LABELS = {
    "nonempty": "nonempty",
    "left_h_ideal": "left h-ideal",
    "right_h_ideal": "right h-ideal",
    "h_ideal": "h-ideal",
    "h_bi_ideal": "h-bi-ideal",
    "h_interior_ideal": "h-interior ideal",
    "h_quasi_ideal": "h-quasi-ideal",
}


def _classify_fuzzy(mu) -> list[str]:
    found = fuzzy_h_ideal_witness(mu)
    if found is None:
        head = f"h-ideal: yes; prime (characterization): {_yes(prime_characterization(mu))}"
    else:
        cond, w = found
        head = f"h-ideal: no (condition {cond}, witness {_witness(w)}); prime (characterization): n/a"
    c = classify_fuzzy(mu)
    lines = [head]
    for flag, value in c.as_dict().items():
        line = f"  {_LABELS[flag]}: {_yes(value)}"
        if not value and flag in c.witnesses and c.witnesses[flag]:
            line += f" ({_describe(c.witnesses[flag])})"
        lines.append(line)
    return lines


def _describe(w) -> str:
    if isinstance(w, tuple) and len(w) == 2 and isinstance(w[1], dict):
        return f"condition {w[0]}, witness {_witness(w[1])}"
    if isinstance(w, dict):
        return f"witness {_witness(w)}"
    return str(w)


def _classify_subset(H, A: frozenset[int], method: str) -> str:
    if not A:
        raise UsageError("ideals are nonempty; the subset has no members")
    bad = crisp.ideal_witness(H, A)
    if bad is not None:
        return f"ideal: no (witness {_witness(bad)}); h-ideal: no; prime: n/a"
    hw = crisp.h_witness(H, A)
    if hw is not None:
        order = ("x", "z", "a", "b")
        w = ",".join(f"{k}={hw[k]}" for k in order if k in hw)
        return f"ideal: yes; h-ideal: no (witness {w}); prime: n/a"
    return f"ideal: yes; h-ideal: yes; prime: {_yes(crisp.is_prime_h_ideal(H, A, method=method))}"


def cmd_classify(args) -> int:
    H = _load(args)
    subject = io.parse_subject(args.subject, H)
    if isinstance(subject, io.CrispSubset):
        print(_classify_subset(H, subject.members, args.prime_method))
    else:
        print("\n".join(_classify_fuzzy(subject)))
    return OK


def cmd_extend(args) -> int:
    H = _load(args)
    mu = io.parse_fuzzy(args.fuzzy, H)
    if not 0 <= args.by < H.s_size:
        raise UsageError(f"--by {args.by} is outside range({H.s_size})")
    if args.iterate is None:
        print(fuzzy_extension(args.by, mu))
        return OK
    g, n = args.iterate
    if not 0 <= g < H.g_size:
        raise UsageError(f"gamma {g} is outside range({H.g_size})")
    if n < 1:
        raise UsageError("the iteration count must be at least 1")
    for k, ext in enumerate(iterated_extension_chain(args.by, g, mu, n)):
        print(f"{k}: {ext}")
    return OK


def cmd_product(args) -> int:
    H = _load(args)
    mu, theta = io.parse_fuzzy(args.left, H), io.parse_fuzzy(args.right, H)
    op = h_product if args.mode == "gamma-h" else generalized_h_product
    print(op(mu, theta))
    return OK


def cmd_closure(args) -> int:
    H = _load(args)
    A = io.parse_subset(args.subset, H).members
    if not A:
        raise UsageError("the subset has no members")
    result = crisp.generated_h_ideal(H, A) if args.generated else crisp.h_closure(H, A)
    print(" ".join(map(str, sorted(result))))
    return OK


def cmd_enumerate(args) -> int:
    if args.s_max < 1 or args.g_max < 1:
        raise UsageError("size bounds must be at least 1")
    found = enumerate_hemirings(args.s_max, args.g_max)
    if args.up_to_iso:
        found = up_to_isomorphism(found)
    found = list(found)
    if args.out:
        Path(args.out).write_text(
            json.dumps([H.to_dict() for H in found], ensure_ascii=False) + "\n", encoding="utf-8"
        )
    for H in found:
        print(f"{H.name}\t{H.s_size}\t{H.g_size}\t{'commutative' if H.is_commutative else 'noncommutative'}")
    print(f"total: {len(found)}")
    return OK


def _grid(text: str):
    try:
        return tuple(io.parse_grade(p.strip()) for p in text.split(",") if p.strip())
    except io.FormatError as exc:
        raise UsageError(str(exc)) from exc


def cmd_verify(args) -> int:
    grid = _grid(args.grid)
    fixtures = None
    if args.fixtures:
        fixtures = tuple(io.parse_structure(p) for p in args.fixtures)
    try:
        family = harness.InstanceFamily(args.s_max, args.g_max, grid, fixtures)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.s_max < 1 or args.g_max < 1:
        raise UsageError("size bounds must be at least 1")
    claims = [c.strip() for c in args.claims.split(",") if c.strip()] if args.claims else None
    try:
        ids = harness.resolve_claims(claims)
    except harness.UnknownClaim as exc:
        raise UsageError(f"unknown claim {exc.args[0]}") from exc
    with mutations.mutated(*args.mutation):
        reports = harness.run_claims(family, ids)
        if args.report:
            Path(args.report).write_text(harness.report_json(reports, family) + "\n", encoding="utf-8")
    for r in reports:
        print(r.line())
        if r.witness is not None:
            print(f"  counterexample: {json.dumps(r.witness, ensure_ascii=False, default=str)}")
    bad = [r for r in reports if r.verdict != "pass"]
    print(f"{len(reports) - len(bad)}/{len(reports)} claims pass")
    return FINDING if bad else OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ghr", description="Finite Gamma-hemiring workbench.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_structure(cmd):
        cmd.add_argument("structure", help="structure JSON file")
        cmd.add_argument("--no-validate", action="store_true", help="skip the axiom check on load")
        return cmd

    v = sub.add_parser("validate", help="check the axioms of a structure file")
    v.add_argument("structure")
    v.add_argument("--verbose", action="store_true", help="list every violating instance")
    v.set_defaults(run=cmd_validate)

    c = with_structure(sub.add_parser("classify", help="classify a fuzzy subset or a crisp subset"))
    c.add_argument("subject", help="fuzzy subset or subset JSON file")
    c.add_argument("--prime-method", choices=crisp.PRIME_METHODS, default="definition")
    c.set_defaults(run=cmd_classify)

    e = with_structure(sub.add_parser("extend", help="extension of a fuzzy subset by an element"))
    e.add_argument("fuzzy")
    e.add_argument("--by", type=int, required=True, metavar="X")
    e.add_argument("--iterate", type=int, nargs=2, metavar=("GAMMA", "N"))
    e.set_defaults(run=cmd_extend)

    pr = with_structure(sub.add_parser("product", help="h-product of two fuzzy subsets"))
    pr.add_argument("left")
    pr.add_argument("right")
    pr.add_argument("--mode", choices=("gamma-h", "generalized"), default="generalized")
    pr.set_defaults(run=cmd_product)

    cl = with_structure(sub.add_parser("closure", help="h-closure of an ideal"))
    cl.add_argument("subset")
    cl.add_argument("--generated", action="store_true", help="close an arbitrary subset to the h-ideal it generates")
    cl.set_defaults(run=cmd_closure)

    en = sub.add_parser("enumerate", help="list every structure within the size bounds")
    en.add_argument("--s-max", type=int, required=True)
    en.add_argument("--g-max", type=int, required=True)
    en.add_argument("--out", help="write the structures to this JSON file")
    en.add_argument("--up-to-iso", action="store_true")
    en.set_defaults(run=cmd_enumerate)

    ve = sub.add_parser("verify", help="run the claim suite")
    ve.add_argument("--s-max", type=int, default=2)
    ve.add_argument("--g-max", type=int, default=2)
    ve.add_argument("--grid", default="0,1/2,1")
    ve.add_argument("--claims", help="comma-separated claim ids or groups (ALL, DICHOTOMY, DEFINITIONS)")
    ve.add_argument("--fixtures", nargs="+", help="structure files to use instead of the enumeration")
    ve.add_argument("--report", help="write a JSON report here")
    ve.add_argument("--mutation", action="append", default=[], choices=mutations.MUTATIONS)
    ve.add_argument("--seed", type=int, help="reserved; every mode is deterministic")
    ve.set_defaults(run=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (UsageError, io.FormatError, StructureError, IdealError, IndexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
