"""JSON file formats for structures, fuzzy subsets and crisp subsets.

Structures and subsets live in separate files. A subset names the structure
it belongs to, so one structure file can serve any number of subset files.
Grades are always written as reduced fraction strings such as ``"1/2"``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping

from .core import GammaHemiring, StructureError, validate_hemiring
from .fuzzy import FuzzySubset, format_grade

_FRACTION = re.compile(r"\s*(\d+)\s*(?:/\s*(\d+)\s*)?")


class FormatError(ValueError):
    """A file that cannot be parsed into the requested object."""


@dataclass(frozen=True)
class CrispSubset:
    hemiring: GammaHemiring
    members: frozenset[int]


def _load_json(source: str | Path | Mapping) -> Any:
    if isinstance(source, Mapping):
        return source
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {source}: {exc.strerror or exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{source}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def _int_table(value, depth: int, what: str):
    if depth == 0:
        if type(value) is not int:
            raise FormatError(f"{what}: expected an integer, got {value!r}")
        return value
    if not isinstance(value, list):
        raise FormatError(f"{what}: expected a nested list")
    return [_int_table(v, depth - 1, what) for v in value]


def parse_structure(source: str | Path | Mapping, validate: bool = True) -> GammaHemiring:
    """Read a structure; unless ``validate`` is false, reject anything failing the axioms."""
    data = _load_json(source)
    if not isinstance(data, Mapping):
        raise FormatError("a structure file holds a JSON object")
    missing = [k for k in ("s_size", "g_size", "s_add", "g_add", "product") if k not in data]
    if missing:
        raise FormatError(f"structure is missing {', '.join(missing)}")
    for key in ("s_size", "g_size"):
        if type(data[key]) is not int or data[key] < 1:
            raise FormatError(f"{key} must be a positive integer")
    name = data.get("name", "")
    if not isinstance(name, str):
        raise FormatError("name must be a string")
    try:
        H = GammaHemiring(
            name,
            data["s_size"],
            data["g_size"],
            _int_table(data["s_add"], 2, "s_add"),
            _int_table(data["g_add"], 2, "g_add"),
            _int_table(data["product"], 3, "product"),
        )
    except StructureError as exc:
        raise FormatError(str(exc)) from exc
    if validate:
        report = validate_hemiring(H)
        if not report.valid:
            raise FormatError("; ".join(str(v) for v in report.violations))
    return H


def structure_to_json(H: GammaHemiring) -> dict:
    return H.to_dict()


def parse_grade(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into a reduced grade in [0, 1]. Decimals are refused."""
    if not isinstance(text, str):
        raise FormatError(f"grade {text!r} must be a fraction string")
    m = _FRACTION.fullmatch(text)
    if not m:
        raise FormatError(f"grade {text!r} is not of the form p or p/q")
    num, den = int(m[1]), int(m[2] or 1)
    if den == 0:
        raise FormatError(f"grade {text!r} has a zero denominator")
    g = Fraction(num, den)
    if g > 1:
        raise FormatError(f"grade {text!r} exceeds 1")
    return g


def _check_link(data: Mapping, H: GammaHemiring, kind: str) -> None:
    if not isinstance(data, Mapping):
        raise FormatError(f"a {kind} file holds a JSON object")
    ref = data.get("hemiring")
    if not isinstance(ref, str):
        raise FormatError(f"{kind} file must name its hemiring")
    if H.name and ref != H.name:
        raise FormatError(f"{kind} belongs to {ref!r}, not {H.name!r}")


def parse_fuzzy(source: str | Path | Mapping, H: GammaHemiring) -> FuzzySubset:
    data = _load_json(source)
    _check_link(data, H, "fuzzy subset")
    grades = data.get("grades")
    if not isinstance(grades, list):
        raise FormatError("grades must be a list of fraction strings")
    if len(grades) != H.s_size:
        raise FormatError(f"{len(grades)} grades given for a carrier of size {H.s_size}")
    return FuzzySubset(H, tuple(parse_grade(g) for g in grades))


def fuzzy_to_json(mu: FuzzySubset) -> dict:
    return {"hemiring": mu.hemiring.name, "grades": [format_grade(g) for g in mu.grades]}


def parse_subset(source: str | Path | Mapping, H: GammaHemiring) -> CrispSubset:
    data = _load_json(source)
    _check_link(data, H, "subset")
    members = data.get("members")
    if not isinstance(members, list):
        raise FormatError("members must be a list of element indices")
    for m in members:
        if type(m) is not int or not 0 <= m < H.s_size:
            raise FormatError(f"member {m!r} outside range({H.s_size})")
    return CrispSubset(H, frozenset(members))


def subset_to_json(A: CrispSubset) -> dict:
    return {"hemiring": A.hemiring.name, "members": sorted(A.members)}


def parse_subject(source: str | Path | Mapping, H: GammaHemiring) -> FuzzySubset | CrispSubset:
    """A fuzzy subset if the file has ``grades``, a crisp one if it has ``members``."""
    data = _load_json(source)
    if isinstance(data, Mapping) and "grades" in data:
        return parse_fuzzy(data, H)
    if isinstance(data, Mapping) and "members" in data:
        return parse_subset(data, H)
    raise FormatError("expected a fuzzy subset (grades) or a subset (members)")


def dump(obj: GammaHemiring | FuzzySubset | CrispSubset) -> str:
    if isinstance(obj, GammaHemiring):
        payload = structure_to_json(obj)
    elif isinstance(obj, FuzzySubset):
        payload = fuzzy_to_json(obj)
    elif isinstance(obj, CrispSubset):
        payload = subset_to_json(obj)
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return json.dumps(payload, ensure_ascii=False) + "\n"


def write(path: str | Path, obj) -> None:
    Path(path).write_text(dump(obj), encoding="utf-8")
