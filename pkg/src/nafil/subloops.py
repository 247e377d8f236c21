"""Subloop enumeration, subgroup census, normality and simplicity."""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .loops import Loop, associativity_witness, closure_mask

__all__ = [
    "DEFAULT_MAX_ORDER",
    "Subloop",
    "SubloopSet",
    "enumerate_subloops",
    "subgroup_census",
    "nonassociative_census",
    "is_subloop",
    "is_normal",
    "is_simple",
    "lagrange_violations",
]

DEFAULT_MAX_ORDER = 64


@dataclass(frozen=True)
class Subloop:
    elements: frozenset[int]
    is_group: bool

    @property
    def order(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class SubloopSet:
    n: int
    subloops: tuple[Subloop, ...]

    def __iter__(self):
        return iter(self.subloops)

    def __len__(self):
        return len(self.subloops)

    def element_sets(self) -> set[frozenset[int]]:
        return {s.elements for s in self.subloops}

    def proper_nontrivial(self) -> list[Subloop]:
        return [s for s in self.subloops if 1 < s.order < self.n]


def _mask(n: int, elements: Iterable[int]) -> np.ndarray:
    m = np.zeros(n, dtype=bool)
    m[[x - 1 for x in elements]] = True
    return m


def _induced_is_group(l: Loop, mask: np.ndarray) -> bool:
    idx = np.flatnonzero(mask)
    pos = np.full(l.n, -1)
    pos[idx] = np.arange(idx.size)
    local = pos[l.mul_table[np.ix_(idx, idx)]]
    # a subloop of a loop is itself a loop, so the induced table is Latin with an identity
    return associativity_witness(Loop(local + 1)).holds


def enumerate_subloops(l: Loop, max_order: int = DEFAULT_MAX_ORDER) -> SubloopSet:
    """Every subloop of ``l``, smallest first.

    Breadth-first over closures: start from ``{e}`` and, for each closed set
    found, close it again with each outside element adjoined.  Every subloop
    is reached because it is the closure of its own elements.
    """
    if l.n > max_order:
        raise ValueError(f"loop order {l.n} exceeds the enumeration cap {max_order}")
    start = closure_mask(l, _mask(l.n, [l.identity]))
    found = {start.tobytes(): start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for g in np.flatnonzero(~cur):
            nxt = cur.copy()
            nxt[g] = True
            nxt = closure_mask(l, nxt)
            key = nxt.tobytes()
            if key not in found:
                found[key] = nxt
                queue.append(nxt)
    masks = sorted(found.values(), key=lambda m: (int(m.sum()), tuple(np.flatnonzero(m))))
    subs = tuple(
        Subloop(frozenset((np.flatnonzero(m) + 1).tolist()), _induced_is_group(l, m)) for m in masks
    )
    return SubloopSet(l.n, subs)


def subgroup_census(s: SubloopSet) -> dict[int, int]:
    """Proper nontrivial subgroups (associative subloops) counted by order."""
    counts = Counter(sub.order for sub in s.proper_nontrivial() if sub.is_group)
    return dict(sorted(counts.items()))


def nonassociative_census(s: SubloopSet) -> dict[int, int]:
    counts = Counter(sub.order for sub in s.proper_nontrivial() if not sub.is_group)
    return dict(sorted(counts.items()))


def is_subloop(l: Loop, nset: Iterable[int]) -> bool:
    m = _mask(l.n, nset)
    return bool(m[l.e0]) and np.array_equal(closure_mask(l, m), m)


def is_normal(l: Loop, nset: Iterable[int]) -> bool:
    """Test ``xN = Nx``, ``(Nx)y = N(xy)`` and ``y(xN) = (yx)N`` as sets, for all x, y."""
    nset = frozenset(nset)
    if not is_subloop(l, nset):
        raise ValueError(f"{sorted(nset)} is not a subloop")
    mul = l.mul_table
    N = np.array(sorted(nset)) - 1
    X = np.arange(l.n)

    def same_sets(a, b):
        # axis 0 runs over N; translations are bijections so sorted columns compare as sets
        return np.array_equal(np.sort(a, axis=0), np.sort(b, axis=0))

    xN = mul[X[None, :], N[:, None]]
    Nx = mul[N[:, None], X[None, :]]
    if not same_sets(xN, Nx):
        return False
    n_, x_, y_ = N[:, None, None], X[None, :, None], X[None, None, :]
    if not same_sets(mul[mul[n_, x_], y_], mul[n_, mul[x_, y_]]):
        return False
    # y(xN) vs (yx)N, indexed [n, x, y]
    return same_sets(mul[y_, mul[x_, n_]], mul[mul[y_, x_], n_])


def is_simple(l: Loop, subloops: SubloopSet | None = None, max_order: int = DEFAULT_MAX_ORDER) -> bool:
    s = subloops if subloops is not None else enumerate_subloops(l, max_order)
    return not any(is_normal(l, sub.elements) for sub in s.proper_nontrivial())


def lagrange_violations(l: Loop, s: SubloopSet) -> list[tuple[int, int]]:
    """``(order, n)`` for each subloop whose order does not divide ``n``."""
    return [(sub.order, l.n) for sub in s if l.n % sub.order]
