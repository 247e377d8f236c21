"""Quasigroups and loops defined by certified Cayley tables.

Public functions speak 1-based element labels.  Each structure also keeps
0-based lookup arrays (``mul_table``, ``ldiv_table``, ``rdiv_table``) that
the sweep code indexes directly.
"""
from __future__ import annotations

from typing import Iterable

import numpy as np

from .latin import Table, latin_violation
from .sweep import CheckResult, sweep

__all__ = [
    "Quasigroup",
    "Loop",
    "InverseMap",
    "NotLatin",
    "NotALoop",
    "NotInvertible",
    "certify_quasigroup",
    "certify_loop",
    "multiply",
    "left_divide",
    "right_divide",
    "inverse_map",
    "generated_subloop",
    "closure_mask",
    "associativity_witness",
    "ASSOC_IDENTITY",
]

ASSOC_IDENTITY = "(x*y)*z = x*(y*z)"


class NotLatin(ValueError):
    def __init__(self, kind: str, index: int, label: int):
        self.kind, self.index, self.label = kind, index, label
        super().__init__(f"not a Latin square: {kind} {index} repeats label {label}")


class NotALoop(ValueError):
    pass


class NotInvertible(ValueError):
    def __init__(self, x: int, left_inv: int, right_inv: int):
        self.x, self.left_inv, self.right_inv = x, left_inv, right_inv
        super().__init__(
            f"element {x} has left inverse {left_inv} but right inverse {right_inv}"
        )


class Quasigroup:
    """A Latin Cayley table together with its two division tables."""

    def __init__(self, table: Table):
        if not isinstance(table, Table):
            table = Table(table)
        bad = latin_violation(table)
        if bad is not None:
            raise NotLatin(*bad)
        n = table.n
        mul = table.entries - 1
        idx = np.arange(n)
        ldiv = np.empty_like(mul)
        rdiv = np.empty_like(mul)
        ldiv[idx[:, None], mul] = idx[None, :]  # a*x = b  ->  ldiv[a, b] = x
        rdiv[idx[None, :], mul] = idx[:, None]  # x*a = b  ->  rdiv[a, b] = x
        for a in (mul, ldiv, rdiv):
            a.setflags(write=False)
        self.table = table
        self.mul_table = mul
        self.ldiv_table = ldiv
        self.rdiv_table = rdiv

    @property
    def n(self) -> int:
        return self.table.n

    @property
    def elements(self) -> range:
        return range(1, self.n + 1)

    def __eq__(self, other):
        return type(self) is type(other) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n})"


class Loop(Quasigroup):
    """A quasigroup with a two-sided identity ``identity`` (1-based)."""

    def __init__(self, table: Table, identity: int | None = None):
        super().__init__(table)
        e = _find_identity(self.mul_table)
        if e is None:
            raise NotALoop("no two-sided identity element")
        if identity is not None and identity - 1 != e:
            raise NotALoop(f"{identity} is not a two-sided identity (found {e + 1})")
        self.identity = e + 1

    @property
    def e0(self) -> int:
        return self.identity - 1


def _find_identity(mul: np.ndarray) -> int | None:
    idx = np.arange(mul.shape[0])
    for e in idx:
        if np.array_equal(mul[e], idx) and np.array_equal(mul[:, e], idx):
            return int(e)
    return None


def certify_quasigroup(t: Table) -> Quasigroup:
    return Quasigroup(t)


def certify_loop(q: Quasigroup | Table) -> Loop:
    """Promote a quasigroup to a loop, or raise :class:`NotALoop`."""
    table = q.table if isinstance(q, Quasigroup) else q
    return Loop(table)


def _check(q: Quasigroup, *xs: int) -> None:
    for x in xs:
        if not 1 <= x <= q.n:
            raise IndexError(f"element {x} outside 1..{q.n}")


def multiply(q: Quasigroup, x: int, y: int) -> int:
    _check(q, x, y)
    return int(q.mul_table[x - 1, y - 1]) + 1


def left_divide(q: Quasigroup, a: int, b: int) -> int:
    """The unique ``x`` with ``a*x = b``."""
    _check(q, a, b)
    return int(q.ldiv_table[a - 1, b - 1]) + 1


def right_divide(q: Quasigroup, a: int, b: int) -> int:
    """The unique ``x`` with ``x*a = b``."""
    _check(q, a, b)
    return int(q.rdiv_table[a - 1, b - 1]) + 1


class InverseMap:
    """Two-sided inverses of a loop, indexed by 1-based element."""

    def __init__(self, inv0: np.ndarray):
        arr = np.array(inv0, dtype=np.int64)
        arr.setflags(write=False)
        self.array = arr  # 0-based

    def __getitem__(self, x: int) -> int:
        if not 1 <= x <= len(self.array):
            raise IndexError(x)
        return int(self.array[x - 1]) + 1

    def __len__(self):
        return len(self.array)

    def as_dict(self) -> dict[int, int]:
        return {i + 1: int(v) + 1 for i, v in enumerate(self.array)}

    def __eq__(self, other):
        if isinstance(other, dict):
            return self.as_dict() == other
        return isinstance(other, InverseMap) and np.array_equal(self.array, other.array)

    def __repr__(self):
        return f"InverseMap({self.as_dict()})"


def inverse_map(l: Loop) -> InverseMap:
    """Two-sided inverses; raises :class:`NotInvertible` at the first mismatch."""
    e = l.e0
    left = l.rdiv_table[:, e]   # y*x = e
    right = l.ldiv_table[:, e]  # x*y = e
    diff = np.flatnonzero(left != right)
    if diff.size:
        x = int(diff[0])
        raise NotInvertible(x + 1, int(left[x]) + 1, int(right[x]) + 1)
    return InverseMap(right)


def closure_mask(q: Quasigroup, mask: np.ndarray) -> np.ndarray:
    """Smallest superset of ``mask`` closed under product and both divisions."""
    mask = np.array(mask, dtype=bool)
    while True:
        idx = np.flatnonzero(mask)
        sub = np.ix_(idx, idx)
        grown = mask.copy()
        for tab in (q.mul_table, q.ldiv_table, q.rdiv_table):
            grown[tab[sub].ravel()] = True
        if np.array_equal(grown, mask):
            return mask
        mask = grown


def generated_subloop(l: Loop, seed: Iterable[int]) -> frozenset[int]:
    mask = np.zeros(l.n, dtype=bool)
    mask[l.e0] = True
    for x in seed:
        _check(l, x)
        mask[x - 1] = True
    return frozenset((np.flatnonzero(closure_mask(l, mask)) + 1).tolist())


def associativity_witness(q: Quasigroup, workers: int = 1) -> CheckResult:
    """Sweep all triples; report the lexicographically first non-associative one."""
    mul = q.mul_table
    return sweep(
        "ASSOC",
        ASSOC_IDENTITY,
        lambda x, y, z: mul[mul[x, y], z] == mul[x, mul[y, z]],
        q.n,
        3,
        workers=workers,
    )
