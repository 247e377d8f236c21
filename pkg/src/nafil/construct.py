"""Block generators and assembly for the odd-order NAFIL family.

For ``m >= 2``, ``k = m + 1`` and ``n = 2m + 1`` the Cayley table is::

    | L(m)    | L(k)'  |
    | L(k)''  | C*     |

where ``L(m)`` is a group table on ``1..m`` (cyclic by default), ``L(k)``
is the cyclic table on ``m+1..n``, ``L(k)'`` drops its row ``k-1``,
``L(k)''`` drops its column ``k``, and ``C*`` is the transposed
counter-cyclic square on ``1..k`` whose ``k`` entries are replaced by the
last column of ``L(k)``.

Every block comes from a closed-form index formula.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .latin import Block, Table, assemble, delete_column, delete_row, format_block, format_table, is_latin, is_standard_form, latin_violation, substitute
from .loops import Loop, NotALoop, NotInvertible, NotLatin, associativity_witness, inverse_map

__all__ = [
    "ConstructionParams",
    "ConstructionTrace",
    "ConstructionInvalid",
    "cyclic_block",
    "counter_cyclic_transpose",
    "starred_block",
    "starred_positions",
    "lk_prime",
    "lk_double_prime",
    "construct_nafil",
    "format_trace",
]


class ConstructionInvalid(Exception):
    """A constructed table failed one of its certification stages."""

    def __init__(self, stage: str, witness=None, message: str = ""):
        self.stage = stage
        self.witness = witness
        text = f"construction failed at stage {stage!r}"
        if message:
            text += f": {message}"
        super().__init__(text)


def cyclic_block(size: int, offset: int = 0) -> Block:
    """Cyclic Latin square with ``entry(i, j) = offset + ((i + j - 2) mod size) + 1``."""
    if size < 1:
        raise ValueError("size must be at least 1")
    if offset < 0:
        raise ValueError("offset must be non-negative")
    i, j = np.indices((size, size))
    return Block(offset + (i + j) % size + 1, range(offset + 1, offset + size + 1))


def counter_cyclic_transpose(k: int) -> Block:
    """``entry(i, j) = ((i - j) mod k) + 1``: ones on the diagonal, ``k`` just above it."""
    if k < 2:
        raise ValueError("k must be at least 2")
    i, j = np.indices((k, k))
    return Block((i - j) % k + 1, range(1, k + 1))


def starred_positions(k: int) -> list[tuple[int, int]]:
    """Positions holding ``k`` in the counter-cyclic transpose, in replacement order."""
    return [(i, i + 1) for i in range(1, k)] + [(k, 1)]


def _check_m(m: int) -> None:
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 2:
        raise ValueError(f"m must be an integer >= 2, got {m!r}")


def starred_block(m: int) -> Block:
    _check_m(m)
    k = m + 1
    last_column = cyclic_block(k, m).column(k)
    swaps = [(r, c, v) for (r, c), v in zip(starred_positions(k), last_column)]
    return substitute(counter_cyclic_transpose(k), swaps)


def lk_prime(m: int) -> Block:
    _check_m(m)
    return delete_row(cyclic_block(m + 1, m), m)


def lk_double_prime(m: int) -> Block:
    _check_m(m)
    return delete_column(cyclic_block(m + 1, m), m + 1)


@dataclass(frozen=True)
class ConstructionParams:
    """``m`` and an optional group table for the top-left block.

    ``lm_table`` must be a standard-form, associative Latin square on
    ``1..m``; when omitted the cyclic group of order ``m`` is used.
    """

    m: int
    lm_table: Table | None = None

    def __post_init__(self):
        _check_m(self.m)
        t = self.lm_table
        if t is None:
            return
        if not isinstance(t, Table):
            t = Table(t)
            object.__setattr__(self, "lm_table", t)
        if t.n != self.m:
            raise ValueError(f"lm_table has order {t.n}, expected {self.m}")
        if not is_latin(t):
            raise ValueError("lm_table is not a Latin square")
        if not is_standard_form(t):
            raise ValueError("lm_table is not in standard form")
        res = associativity_witness(Loop(t))
        if not res.holds:
            raise ValueError(f"lm_table is not associative, witness {res.witness}")

    @property
    def k(self) -> int:
        return self.m + 1

    @property
    def n(self) -> int:
        return 2 * self.m + 1

    @classmethod
    def from_order(cls, n: int, lm_table: Table | None = None) -> "ConstructionParams":
        if n < 5 or n % 2 == 0:
            raise ValueError("order must be odd and >= 5")
        return cls((n - 1) // 2, lm_table)


@dataclass(frozen=True)
class ConstructionTrace:
    lm: Block
    lk: Block
    lk_prime: Block
    lk_double_prime: Block
    starred: Block
    table: Table

    def blocks(self) -> dict[str, Block]:
        return {
            "L(m)": self.lm,
            "L(k)": self.lk,
            "L(k)'": self.lk_prime,
            "L(k)''": self.lk_double_prime,
            "C_k^T*": self.starred,
        }


def format_trace(trace: ConstructionTrace) -> str:
    """Multi-block text document, each part headed by ``# block: <name>``."""
    parts = [format_block(b, name) for name, b in trace.blocks().items()]
    parts.append("# block: table\n" + format_table(trace.table))
    return "".join(parts)


def construct_nafil(params: ConstructionParams | int, workers: int = 1) -> tuple[Loop, ConstructionTrace]:
    """Build and certify the order ``2m+1`` loop.

    The result is checked to be Latin, in standard form, to have identity
    1, to have unique two-sided inverses and to be non-associative.  Any
    failure raises :class:`ConstructionInvalid` naming the stage.
    """
    if not isinstance(params, ConstructionParams):
        params = ConstructionParams(params)
    m, k = params.m, params.k
    lm = cyclic_block(m) if params.lm_table is None else Block(params.lm_table.entries, range(1, m + 1))
    lk = cyclic_block(k, m)
    trace_blocks = dict(
        lm=lm,
        lk=lk,
        lk_prime=delete_row(lk, k - 1),
        lk_double_prime=delete_column(lk, k),
        starred=starred_block(m),
    )
    table = assemble(
        trace_blocks["lm"], trace_blocks["lk_prime"], trace_blocks["lk_double_prime"], trace_blocks["starred"]
    )
    trace = ConstructionTrace(table=table, **trace_blocks)

    bad = latin_violation(table)
    if bad is not None:
        raise ConstructionInvalid("latin", bad, str(NotLatin(*bad)))
    if not is_standard_form(table):
        raise ConstructionInvalid("standard_form", None, "first row/column not in natural order")
    try:
        loop = Loop(table, identity=1)
    except NotALoop as exc:
        raise ConstructionInvalid("identity", None, str(exc)) from exc
    try:
        inverse_map(loop)
    except NotInvertible as exc:
        raise ConstructionInvalid("invertible", (exc.x, exc.left_inv, exc.right_inv), str(exc)) from exc
    assoc = associativity_witness(loop, workers=workers)
    if assoc.holds:
        raise ConstructionInvalid("non_associative", None, "table is associative")
    return loop, trace
