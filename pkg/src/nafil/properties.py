"""Exhaustive checks of named loop and quasigroup identities.

Each identity is written once as a vectorised predicate over 0-based index
arrays and swept over every tuple by :mod:`nafil.sweep`.  Inverse-based
identities use the loop's unique two-sided inverse.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .loops import ASSOC_IDENTITY, Loop, NotInvertible, Quasigroup, closure_mask, generated_subloop, inverse_map
from .sweep import CheckResult, sweep

__all__ = [
    "PropertyId",
    "PropertyReport",
    "IDENTITIES",
    "INVERSE_FREE",
    "INVERSE_BASED",
    "NOT_EVALUATED",
    "check",
    "check_identity_on_quasigroup",
    "full_report",
    "recheck_witness",
]


class PropertyId(str, enum.Enum):
    ASSOC = "ASSOC"
    COMM = "COMM"
    FLEX = "FLEX"
    LIP = "LIP"
    RIP = "RIP"
    IP = "IP"
    AIP = "AIP"
    CIP = "CIP"
    WIP = "WIP"
    LBOL = "LBOL"
    RBOL = "RBOL"
    MOUFANG = "MOUFANG"
    PAP = "PAP"

    def __str__(self):
        return self.value


P = PropertyId

IDENTITIES: dict[PropertyId, str] = {
    P.ASSOC: ASSOC_IDENTITY,
    P.COMM: "x*y = y*x",
    P.FLEX: "x*(y*x) = (x*y)*x",
    P.LIP: "x^-1*(x*y) = y",
    P.RIP: "(y*x)*x^-1 = y",
    P.IP: "x^-1*(x*y) = y and (y*x)*x^-1 = y",
    P.AIP: "(x*y)^-1 = x^-1*y^-1",
    P.CIP: "(x*y)*x^-1 = y",
    P.WIP: "x*(y*x)^-1 = y^-1",
    P.LBOL: "x*(y*(x*z)) = (x*(y*x))*z",
    P.RBOL: "((z*x)*y)*x = z*((x*y)*x)",
    P.MOUFANG: "(x*y)*(z*x) = (x*(y*z))*x",
    P.PAP: "for every x, the subloop generated by x is associative",
}

INVERSE_FREE = frozenset({P.ASSOC, P.COMM, P.FLEX, P.LBOL, P.RBOL, P.MOUFANG})
INVERSE_BASED = frozenset({P.LIP, P.RIP, P.IP, P.AIP, P.CIP, P.WIP})

# Named alongside the others but never defined; recorded, not evaluated.
NOT_EVALUATED = {
    "A_m": "not evaluated (undefined in source)",
    "RIF": "not evaluated (undefined in source)",
}


def _predicates(mul: np.ndarray, inv: np.ndarray | None) -> dict[PropertyId, tuple[int, Callable]]:
    preds = {
        P.ASSOC: (3, lambda x, y, z: mul[mul[x, y], z] == mul[x, mul[y, z]]),
        P.COMM: (2, lambda x, y: mul[x, y] == mul[y, x]),
        P.FLEX: (2, lambda x, y: mul[x, mul[y, x]] == mul[mul[x, y], x]),
        P.LBOL: (3, lambda x, y, z: mul[x, mul[y, mul[x, z]]] == mul[mul[x, mul[y, x]], z]),
        P.RBOL: (3, lambda x, y, z: mul[mul[mul[z, x], y], x] == mul[z, mul[mul[x, y], x]]),
        P.MOUFANG: (3, lambda x, y, z: mul[mul[x, y], mul[z, x]] == mul[mul[x, mul[y, z]], x]),
    }
    if inv is not None:
        preds.update({
            P.LIP: (2, lambda x, y: mul[inv[x], mul[x, y]] == y),
            P.RIP: (2, lambda x, y: mul[mul[y, x], inv[x]] == y),
            P.AIP: (2, lambda x, y: inv[mul[x, y]] == mul[inv[x], inv[y]]),
            P.CIP: (2, lambda x, y: mul[mul[x, y], inv[x]] == y),
            P.WIP: (2, lambda x, y: mul[x, inv[mul[y, x]]] == inv[y]),
        })
    return preds


def _sweep_identity(q: Quasigroup, p: PropertyId, inv, workers: int) -> CheckResult:
    arity, ok = _predicates(q.mul_table, inv)[p]
    return sweep(p.value, IDENTITIES[p], ok, q.n, arity, workers=workers)


def _check_pap(l: Loop, workers: int) -> CheckResult:
    # One associativity sweep per distinct monogenic subloop.
    seen: dict[bytes, tuple[int, int, int] | None] = {}
    mul = l.mul_table
    checked = 0
    for x in range(l.n):
        mask = np.zeros(l.n, dtype=bool)
        mask[[l.e0, x]] = True
        mask = closure_mask(l, mask)
        key = mask.tobytes()
        if key not in seen:
            idx = np.flatnonzero(mask)
            sub = mul[np.ix_(idx, idx)]
            # relabel the sub-table onto 0..s-1
            pos = np.full(l.n, -1)
            pos[idx] = np.arange(idx.size)
            local = pos[sub]
            r = sweep("ASSOC", ASSOC_IDENTITY,
                      lambda a, b, c: local[local[a, b], c] == local[a, local[b, c]],
                      idx.size, 3, workers=workers)
            checked += r.checked_count
            seen[key] = None if r.holds else tuple(int(idx[v - 1]) + 1 for v in r.witness)
        bad = seen[key]
        if bad is not None:
            return CheckResult(P.PAP.value, False, (x + 1,) + bad, checked, IDENTITIES[P.PAP])
    return CheckResult(P.PAP.value, True, None, checked, IDENTITIES[P.PAP])


def check(l: Loop, p: PropertyId | str, workers: int = 1, inverses=None) -> CheckResult:
    """Check property ``p`` on every tuple of ``l``.

    Inverse-based properties raise :class:`NotInvertible` when the loop has
    no unique two-sided inverses.  For ``PAP`` the witness is
    ``(x, a, b, c)``: ``x`` generates a subloop containing the
    non-associative triple ``(a, b, c)``.
    """
    p = PropertyId(p)
    if p is P.PAP:
        return _check_pap(l, workers)
    inv = None
    if p in INVERSE_BASED:
        inv = (inverses if inverses is not None else inverse_map(l)).array
    if p is P.IP:
        left = _sweep_identity(l, P.LIP, inv, workers)
        right = _sweep_identity(l, P.RIP, inv, workers)
        total = left.checked_count + right.checked_count
        if not left.holds:
            return CheckResult(p.value, False, left.witness, left.checked_count, IDENTITIES[p], {"failed": "LIP"})
        if not right.holds:
            return CheckResult(p.value, False, right.witness, total, IDENTITIES[p], {"failed": "RIP"})
        return CheckResult(p.value, True, None, total, IDENTITIES[p])
    return _sweep_identity(l, p, inv, workers)


def check_identity_on_quasigroup(q: Quasigroup, p: PropertyId | str, workers: int = 1) -> CheckResult:
    """Check an identity that mentions neither inverses nor the identity element."""
    p = PropertyId(p)
    if p not in INVERSE_FREE:
        allowed = ", ".join(sorted(x.value for x in INVERSE_FREE))
        raise ValueError(f"{p.value} is not an inverse-free identity (allowed: {allowed})")
    return _sweep_identity(q, p, None, workers)


def recheck_witness(q: Quasigroup, result: CheckResult) -> bool:
    """True when ``result.witness`` really falsifies its identity.

    Evaluated element by element, independently of the sweep.
    """
    if result.witness is None:
        return False
    p = PropertyId(result.property)
    m = lambda a, b: int(q.mul_table[a - 1, b - 1]) + 1
    if p is P.PAP:
        x, a, b, c = result.witness
        sub = generated_subloop(q, [x])
        return {a, b, c} <= sub and m(m(a, b), c) != m(a, m(b, c))
    inv = None
    if p in INVERSE_BASED:
        iv = inverse_map(q)
        inv = lambda a: iv[a]
    if p is P.IP:
        sub = P.LIP if result.detail.get("failed") == "LIP" else P.RIP
        return recheck_witness(q, CheckResult(sub.value, False, result.witness, 0, "", {}))
    w = result.witness
    if p is P.ASSOC:
        x, y, z = w
        return m(m(x, y), z) != m(x, m(y, z))
    if p is P.COMM:
        x, y = w
        return m(x, y) != m(y, x)
    if p is P.FLEX:
        x, y = w
        return m(x, m(y, x)) != m(m(x, y), x)
    if p is P.LBOL:
        x, y, z = w
        return m(x, m(y, m(x, z))) != m(m(x, m(y, x)), z)
    if p is P.RBOL:
        x, y, z = w
        return m(m(m(z, x), y), x) != m(z, m(m(x, y), x))
    if p is P.MOUFANG:
        x, y, z = w
        return m(m(x, y), m(z, x)) != m(m(x, m(y, z)), x)
    x, y = w
    if p is P.LIP:
        return m(inv(x), m(x, y)) != y
    if p is P.RIP:
        return m(m(y, x), inv(x)) != y
    if p is P.AIP:
        return inv(m(x, y)) != m(inv(x), inv(y))
    if p is P.CIP:
        return m(m(x, y), inv(x)) != y
    if p is P.WIP:
        return m(x, inv(m(y, x))) != inv(y)
    raise AssertionError(p)


@dataclass
class PropertyReport:
    order: int
    identity: int
    results: dict[PropertyId, CheckResult] = field(default_factory=dict)
    skipped: dict[PropertyId, str] = field(default_factory=dict)
    not_evaluated: dict[str, str] = field(default_factory=lambda: dict(NOT_EVALUATED))

    def __getitem__(self, p: PropertyId | str) -> CheckResult:
        return self.results[PropertyId(p)]

    def holds(self, p: PropertyId | str) -> bool | None:
        p = PropertyId(p)
        return self.results[p].holds if p in self.results else None


def full_report(l: Loop, workers: int = 1) -> PropertyReport:
    report = PropertyReport(order=l.n, identity=l.identity)
    try:
        inverses = inverse_map(l)
    except NotInvertible as exc:
        inverses = None
        reason = f"loop is not invertible: {exc}"
    for p in PropertyId:
        if p in INVERSE_BASED and inverses is None:
            report.skipped[p] = reason
            continue
        report.results[p] = check(l, p, workers=workers, inverses=inverses)
    return report
