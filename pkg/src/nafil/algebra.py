"""Integer loop algebras, their commutator brackets and the Jacobi identity.

Basis vectors ``e_1..e_n`` multiply as ``e_i e_j = e_{i*j}``.  Tensors are
stored 0-based as ``(n, n, n)`` int64 arrays: ``c[i, j, k]`` is the
coefficient of ``e_k`` in ``e_i e_j``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .loops import Quasigroup
from .sweep import CheckResult

__all__ = [
    "StructureTensor",
    "structure_constants",
    "commutator_constants",
    "jacobi_tensor",
    "jacobi_holds",
    "format_commutator_table",
    "JACOBI_IDENTITY",
]

JACOBI_IDENTITY = "[[e_i,e_j],e_l] + [[e_j,e_l],e_i] + [[e_l,e_i],e_j] = 0"


@dataclass(frozen=True)
class StructureTensor:
    c: np.ndarray
    kind: str = "product"  # or "commutator"

    @property
    def n(self) -> int:
        return self.c.shape[0]

    def __getitem__(self, ijk: tuple[int, int, int]) -> int:
        """1-based coefficient lookup."""
        i, j, k = ijk
        return int(self.c[i - 1, j - 1, k - 1])


def structure_constants(l: Quasigroup) -> StructureTensor:
    n = l.n
    c = np.zeros((n, n, n), dtype=np.int64)
    i, j = np.indices((n, n))
    c[i, j, l.mul_table] = 1
    c.setflags(write=False)
    return StructureTensor(c, "product")


def commutator_constants(t: StructureTensor) -> StructureTensor:
    if t.kind != "product":
        raise ValueError("expected a product tensor")
    d = t.c - t.c.transpose(1, 0, 2)
    d.setflags(write=False)
    return StructureTensor(d, "commutator")


def jacobi_tensor(d: StructureTensor) -> np.ndarray:
    """``J[i, j, l, p]``: coefficient of ``e_p`` in the Jacobi sum for ``(i, j, l)``."""
    c = d.c
    return (
        np.einsum("ijk,klp->ijlp", c, c)
        + np.einsum("jlk,kip->ijlp", c, c)
        + np.einsum("lik,kjp->ijlp", c, c)
    )


def jacobi_holds(d: StructureTensor) -> CheckResult:
    """Exact integer Jacobi check over all basis triples.

    Bilinearity makes basis triples sufficient.  On failure the witness is
    the first triple (1-based) and ``detail["coefficients"]`` holds its full
    coefficient vector.
    """
    if d.kind != "commutator":
        raise ValueError("expected a commutator tensor")
    n = d.n
    J = jacobi_tensor(d)
    bad = J.any(axis=3)
    if not bad.any():
        return CheckResult("JACOBI", True, None, n ** 3, JACOBI_IDENTITY)
    flat = int(bad.ravel().argmax())
    i, j, l = (int(v) for v in np.unravel_index(flat, bad.shape))
    return CheckResult(
        "JACOBI",
        False,
        (i + 1, j + 1, l + 1),
        flat + 1,
        JACOBI_IDENTITY,
        {"coefficients": J[i, j, l].tolist()},
    )


def _term(coef: int, k: int) -> str:
    sign = "-" if coef < 0 else "+"
    mag = "" if abs(coef) == 1 else f"{abs(coef)}"
    return f"{sign} {mag}e_{k}"


def format_commutator_table(d: StructureTensor) -> str:
    """One line per pair ``i < j``: ``[e_i, e_j] = <signed basis terms>``."""
    lines = []
    n = d.n
    for i in range(n):
        for j in range(i + 1, n):
            terms = [_term(int(v), k + 1) for k, v in enumerate(d.c[i, j]) if v]
            if terms:
                rhs = " ".join(terms)
                rhs = rhs[2:] if rhs.startswith("+ ") else "-" + rhs[2:]
            else:
                rhs = "0"
            lines.append(f"[e_{i + 1}, e_{j + 1}] = {rhs}")
    return "\n".join(lines) + "\n"
