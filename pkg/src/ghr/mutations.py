"""Deliberate implementation faults used to test the sensitivity of the claim harness.

Each mutation is a named switch consulted by exactly one site in the library:

``inf-sup``
    the extension takes the maximum over ``x a s g y`` instead of the minimum.
``drop-z``
    h-reachability ignores the slack element: ``x + u == v`` instead of
    ``exists z: x + u + z == v + z``.
``gamma-h-quasi``
    the quasi-ideal check uses the single-term h-product instead of the
    generalized one.
"""

from __future__ import annotations

from contextlib import contextmanager
from typing import Iterator

MUTATIONS = ("inf-sup", "drop-z", "gamma-h-quasi")

_active: frozenset[str] = frozenset()


def active(name: str) -> bool:
    return name in _active


def current() -> frozenset[str]:
    return _active


@contextmanager
def mutated(*names: str) -> Iterator[None]:
    global _active
    unknown = set(names) - set(MUTATIONS)
    if unknown:
        raise KeyError(f"unknown mutation(s): {sorted(unknown)}")
    saved = _active
    _active = saved | frozenset(names)
    try:
        yield
    finally:
        _active = saved
