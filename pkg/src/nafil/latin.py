"""Rectangular label arrays, Latin-square checks and block surgery.

Labels are positive integers and every index taken or returned by this
module is 1-based, the way Cayley tables are written by hand.  Arrays are
stored read-only; every operation returns a fresh value.
"""
from __future__ import annotations

import io
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Block",
    "Table",
    "is_latin",
    "is_standard_form",
    "transpose",
    "delete_row",
    "delete_column",
    "substitute",
    "assemble",
    "latin_violation",
    "parse_table",
    "read_table",
    "format_table",
    "format_block",
    "write_table",
    "TableFormatError",
]


class TableFormatError(ValueError):
    """Raised when table text cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Block:
    """An ``rows x cols`` array of labels drawn from a declared universe.

    The universe is declared rather than inferred: a cyclic block with one
    row removed still draws from all of its symbols.  Zero-extent blocks
    are allowed so that deletion stays total.
    """

    __slots__ = ("_entries", "_universe")

    def __init__(self, entries, universe: Iterable[int] | None = None):
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError(f"block entries must be 2-dimensional, got shape {arr.shape}")
        if universe is None:
            universe = np.unique(arr).tolist()
        uni = frozenset(int(u) for u in universe)
        if any(u < 1 for u in uni):
            raise ValueError("labels must be positive integers")
        if arr.size and not np.isin(arr, list(uni)).all():
            bad = sorted(set(arr.ravel().tolist()) - uni)
            raise ValueError(f"entries {bad} are outside the declared universe")
        arr.setflags(write=False)
        self._entries = arr
        self._universe = uni

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def universe(self) -> frozenset[int]:
        return self._universe

    @property
    def rows(self) -> int:
        return self._entries.shape[0]

    @property
    def cols(self) -> int:
        return self._entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, pos: tuple[int, int]) -> int:
        i, j = pos
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"position {pos} outside {self.rows}x{self.cols} block")
        return int(self._entries[i - 1, j - 1])

    def row(self, i: int) -> tuple[int, ...]:
        if not 1 <= i <= self.rows:
            raise IndexError(f"row {i} outside 1..{self.rows}")
        return tuple(self._entries[i - 1].tolist())

    def column(self, j: int) -> tuple[int, ...]:
        if not 1 <= j <= self.cols:
            raise IndexError(f"column {j} outside 1..{self.cols}")
        return tuple(self._entries[:, j - 1].tolist())

    def tolist(self) -> list[list[int]]:
        return self._entries.tolist()

    def __eq__(self, other):
        if not isinstance(other, Block):
            return NotImplemented
        return (
            self.shape == other.shape
            and self._universe == other._universe
            and bool(np.array_equal(self._entries, other._entries))
        )

    def __hash__(self):
        return hash((self.shape, self._entries.tobytes(), self._universe))

    def __repr__(self):
        return f"{type(self).__name__}({self.tolist()!r})"


class Table(Block):
    """A square ``n x n`` block over the labels ``1..n``."""

    __slots__ = ()

    def __init__(self, entries):
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise ValueError(f"a table must be square and non-empty, got shape {arr.shape}")
        n = arr.shape[0]
        if arr.min() < 1 or arr.max() > n:
            raise ValueError(f"table entries must lie in 1..{n}")
        super().__init__(arr, range(1, n + 1))

    @property
    def n(self) -> int:
        return self.rows

    @classmethod
    def from_block(cls, b: Block) -> "Table":
        return cls(b.entries)


def latin_violation(b: Block) -> tuple[str, int, int] | None:
    """Return the first repeated label as ``(kind, index, label)``, or None.

    Rows are scanned before columns, each in increasing index order.
    """
    for kind, arr in (("row", b.entries), ("column", b.entries.T)):
        for idx, line in enumerate(arr, start=1):
            seen = set()
            for label in line.tolist():
                if label in seen:
                    return kind, idx, label
                seen.add(label)
    return None


def is_latin(b: Block) -> bool:
    """True when no row and no column of ``b`` repeats a label."""
    a = b.entries
    if a.size == 0:
        return True
    rows_ok = all(np.unique(r).size == a.shape[1] for r in a)
    return rows_ok and all(np.unique(c).size == a.shape[0] for c in a.T)


def is_standard_form(t: Table) -> bool:
    natural = np.arange(1, t.n + 1)
    return bool(np.array_equal(t.entries[0], natural) and np.array_equal(t.entries[:, 0], natural))


def transpose(b: Block) -> Block:
    if isinstance(b, Table):
        return Table(b.entries.T)
    return Block(b.entries.T, b.universe)


def delete_row(b: Block, r: int) -> Block:
    """Drop row ``r`` (1-based).  Deleting the last remaining row is allowed."""
    if not 1 <= r <= b.rows:
        raise IndexError(f"row {r} outside 1..{b.rows}")
    return Block(np.delete(b.entries, r - 1, axis=0), b.universe)


def delete_column(b: Block, c: int) -> Block:
    if not 1 <= c <= b.cols:
        raise IndexError(f"column {c} outside 1..{b.cols}")
    return Block(np.delete(b.entries, c - 1, axis=1), b.universe)


def substitute(b: Block, assignments: Sequence[tuple[int, int, int]]) -> Block:
    """Overwrite the given ``(row, col, label)`` positions.

    The result is not checked for Latin-ness; the universe becomes the old
    universe plus any newly introduced labels.
    """
    out = b.entries.copy()
    seen = set()
    new_labels = set()
    for r, c, label in assignments:
        if not (1 <= r <= b.rows and 1 <= c <= b.cols):
            raise IndexError(f"position ({r}, {c}) outside {b.rows}x{b.cols} block")
        if (r, c) in seen:
            raise ValueError(f"position ({r}, {c}) assigned twice")
        seen.add((r, c))
        out[r - 1, c - 1] = label
        new_labels.add(int(label))
    return Block(out, b.universe | new_labels)


def assemble(top_left: Block, top_right: Block, bottom_left: Block, bottom_right: Block) -> Table:
    """Place four blocks as ``[[TL, TR], [BL, BR]]`` and return the square table.

    TL must be m x m, TR m x k, BL k x m and BR k x k.  Latin-ness of the
    result is not checked here.
    """
    blocks = {
        "top_left": top_left,
        "top_right": top_right,
        "bottom_left": bottom_left,
        "bottom_right": bottom_right,
    }
    for name, blk in blocks.items():
        if blk.rows == 0 or blk.cols == 0:
            raise ValueError(f"{name} block is empty ({blk.rows}x{blk.cols})")
    m, k = top_left.rows, bottom_right.rows
    if top_left.cols != m:
        raise ValueError(f"top_left must be square, got {top_left.rows}x{top_left.cols}")
    if bottom_right.cols != k:
        raise ValueError(f"bottom_right must be square, got {bottom_right.rows}x{bottom_right.cols}")
    expect = {"top_right": (m, k), "bottom_left": (k, m)}
    for name, shape in expect.items():
        if blocks[name].shape != shape:
            raise ValueError(
                f"{name} is {blocks[name].rows}x{blocks[name].cols} but top_left ({m}x{m}) "
                f"and bottom_right ({k}x{k}) require {shape[0]}x{shape[1]}"
            )
    body = np.block([[top_left.entries, top_right.entries], [bottom_left.entries, bottom_right.entries]])
    n = m + k
    if body.min() < 1 or body.max() > n:
        bad = sorted(set(body[(body < 1) | (body > n)].tolist()))
        raise ValueError(f"labels {bad} fall outside 1..{n}")
    return Table(body)


# -- plain-text format -----------------------------------------------------

def format_table(t: Table) -> str:
    """Serialize to the text format: ``n`` then ``n`` rows, trailing newline."""
    lines = [str(t.n)]
    lines.extend(" ".join(str(v) for v in row) for row in t.entries.tolist())
    return "\n".join(lines) + "\n"


def format_block(b: Block, name: str | None = None) -> str:
    """Serialize a possibly non-square block: ``rows cols`` then the rows."""
    lines = [] if name is None else [f"# block: {name}"]
    lines.append(f"{b.rows} {b.cols}")
    lines.extend(" ".join(str(v) for v in row) for row in b.entries.tolist())
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> Table:
    """Parse the text table format.

    Comment lines starting with ``#`` are only allowed before the size line.
    """
    if not text.endswith("\n"):
        raise TableFormatError("missing trailing newline")
    try:
        text.encode("ascii")
    except UnicodeEncodeError as exc:
        raise TableFormatError(f"non-ASCII character at offset {exc.start}") from None
    lines = text.split("\n")[:-1]
    pos = 0
    while pos < len(lines) and lines[pos].startswith("#"):
        pos += 1
    if pos == len(lines):
        raise TableFormatError("no size line found")
    try:
        n = int(lines[pos].strip())
    except ValueError:
        raise TableFormatError(f"expected the table order, got {lines[pos]!r}", pos + 1) from None
    if n < 1:
        raise TableFormatError(f"order must be positive, got {n}", pos + 1)
    body = lines[pos + 1:]
    if len(body) != n:
        raise TableFormatError(f"expected {n} rows after the size line, found {len(body)}")
    rows = []
    for offset, line in enumerate(body):
        lineno = pos + 2 + offset
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise TableFormatError(f"non-integer entry in {line!r}", lineno) from None
        if len(row) != n:
            raise TableFormatError(f"expected {n} entries, found {len(row)}", lineno)
        for col, v in enumerate(row, start=1):
            if not 1 <= v <= n:
                raise TableFormatError(f"entry {v} at column {col} outside 1..{n}", lineno)
        rows.append(row)
    return Table(rows)


def read_table(path) -> Table:
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        text = raw.decode("ascii")
    except UnicodeDecodeError as exc:
        raise TableFormatError(f"non-ASCII byte at offset {exc.start}") from None
    return parse_table(text)


def write_table(t: Table, path) -> None:
    with io.open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_table(t))
