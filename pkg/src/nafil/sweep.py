"""Exhaustive sweeps over tuple spaces with first-failure reporting.

An identity of arity ``a`` over an order-``n`` structure is checked on all
``n**a`` tuples in lexicographic (row-major) order.  The space is cut into
slabs along the first coordinate; slabs can be evaluated by a thread pool,
and the earliest failing slab wins, so the reported witness never depends
on the number of workers.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

__all__ = ["CheckResult", "first_failure", "sweep"]

# Upper bound on the number of tuples evaluated per slab.
SLAB_SIZE = 1 << 20


@dataclass(frozen=True)
class CheckResult:
    """Outcome of checking one identity.

    ``witness`` is a tuple of 1-based elements that falsifies the identity,
    present exactly when ``holds`` is false.  ``checked_count`` is the number
    of tuples examined: everything when the identity holds, otherwise the
    lexicographic rank of the witness plus one.
    """

    property: str
    holds: bool
    witness: tuple[int, ...] | None = None
    checked_count: int = 0
    identity: str = ""
    detail: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("holds must be true exactly when no witness is given")

    def __bool__(self):
        return self.holds


def _slabs(n: int, arity: int) -> list[tuple[int, int]]:
    per_row = n ** (arity - 1)
    step = max(1, SLAB_SIZE // max(per_row, 1))
    return [(lo, min(lo + step, n)) for lo in range(0, n, step)]


def _scan(ok_fn: Callable, n: int, arity: int, lo: int, hi: int):
    axes = [np.arange(lo, hi)] + [np.arange(n)] * (arity - 1)
    grids = np.ix_(*axes)
    shape = (hi - lo,) + (n,) * (arity - 1)
    bad = ~np.broadcast_to(np.asarray(ok_fn(*grids), dtype=bool), shape)
    flat = bad.ravel()
    i = int(flat.argmax())
    if not flat[i]:
        return None
    local = np.unravel_index(i, shape)
    return (lo + int(local[0]),) + tuple(int(v) for v in local[1:])


def first_failure(ok_fn: Callable, n: int, arity: int, workers: int = 1):
    """Return the lexicographically first 0-based tuple where ``ok_fn`` is false.

    ``ok_fn`` receives ``arity`` broadcastable index arrays (as produced by
    ``np.ix_``) and returns a boolean array.  Returns None if it is true
    everywhere.
    """
    if arity < 1:
        raise ValueError("arity must be positive")
    slabs = _slabs(n, arity)
    if workers <= 1 or len(slabs) == 1:
        for lo, hi in slabs:
            hit = _scan(ok_fn, n, arity, lo, hi)
            if hit is not None:
                return hit
        return None
    with ThreadPoolExecutor(max_workers=workers) as pool:
        hits = list(pool.map(lambda s: _scan(ok_fn, n, arity, *s), slabs))
    return next((h for h in hits if h is not None), None)


def _rank(t: tuple[int, ...], n: int) -> int:
    r = 0
    for v in t:
        r = r * n + v
    return r


def sweep(name: str, identity: str, ok_fn: Callable, n: int, arity: int, workers: int = 1) -> CheckResult:
    """Run :func:`first_failure` and package the result with 1-based labels."""
    hit = first_failure(ok_fn, n, arity, workers=workers)
    if hit is None:
        return CheckResult(name, True, None, n ** arity, identity)
    return CheckResult(name, False, tuple(v + 1 for v in hit), _rank(hit, n) + 1, identity)
