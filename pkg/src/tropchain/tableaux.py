"""Rectangular standard Young tableaux."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator, NamedTuple, Sequence

DEFAULT_CEILING = 16


@dataclass(frozen=True)
class RectTableau:
    """An ``m x n`` grid of entries, stored row by row.

    Construction only checks that the grid is rectangular; use
    :func:`validate` for the standard-tableau conditions.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise ValueError("tableau must have at least one row and one column")
        width = len(self.rows[0])
        if any(len(row) != width for row in self.rows):
            raise ValueError("tableau rows must all have the same length")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "RectTableau":
        return cls(tuple(tuple(int(a) for a in row) for row in rows))

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def size(self) -> int:
        return self.m * self.n

    def __getitem__(self, cell: tuple[int, int]) -> int:
        """Entry at 1-based ``(row, column)``."""
        i, j = cell
        return self.rows[i - 1][j - 1]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j - 1] for row in self.rows)

    def position(self, value: int) -> tuple[int, int]:
        for i, row in enumerate(self.rows, start=1):
            for j, a in enumerate(row, start=1):
                if a == value:
                    return i, j
        raise ValueError(f"{value} is not an entry of the tableau")

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __str__(self) -> str:
        width = len(str(self.size))
        return "\n".join(" ".join(f"{a:>{width}}" for a in row) for row in self.rows)


def validate(tableau: RectTableau) -> bool:
    m, n = tableau.m, tableau.n
    entries = sorted(a for row in tableau.rows for a in row)
    if entries != list(range(1, m * n + 1)):
        return False
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            if j < n and tableau[i, j + 1] <= tableau[i, j]:
                return False
            if i < m and tableau[i + 1, j] <= tableau[i, j]:
                return False
    return True


def hook_count(m: int, n: int) -> int:
    """Number of ``m x n`` standard tableaux by the hook length formula."""
    hooks = prod((m - i) + (n - j) + 1 for i in range(1, m + 1) for j in range(1, n + 1))
    return factorial(m * n) // hooks


def _fillings(m: int, n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    # Place 1, 2, ... in turn at the leftmost free cell of some row; a row can
    # take the next value only while it is shorter than the row above it.
    rows: list[list[int]] = [[] for _ in range(m)]
    total = m * n

    def place(value: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if value > total:
            yield tuple(tuple(row) for row in rows)
            return
        for i in range(m):
            if len(rows[i]) < n and (i == 0 or len(rows[i]) < len(rows[i - 1])):
                rows[i].append(value)
                yield from place(value + 1)
                rows[i].pop()

    yield from place(1)


def enumerate_tableaux(m: int, n: int, ceiling: int = DEFAULT_CEILING) -> Iterator[RectTableau]:
    """Every ``m x n`` standard tableau, once each, in lexicographic order of
    the row-major entry sequence.

    Raises ``ValueError`` up front (not on first ``next``) when ``m * n``
    exceeds ``ceiling``.
    """
    if m < 1 or n < 1:
        raise ValueError(f"shape must be positive, got {m}x{n}")
    if m * n > ceiling:
        raise ValueError(f"shape {m}x{n} has {m * n} cells, above the ceiling {ceiling}")
    grids = sorted(_fillings(m, n), key=lambda rows: tuple(a for row in rows for a in row))
    return (RectTableau(rows) for rows in grids)


def evacuate(tableau: RectTableau) -> RectTableau:
    """Rotate by 180 degrees and complement entries, ``a -> mn + 1 - a``."""
    top = tableau.size + 1
    return RectTableau(tuple(tuple(top - a for a in reversed(row)) for row in reversed(tableau.rows)))


def transpose(tableau: RectTableau) -> RectTableau:
    return RectTableau(tuple(zip(*tableau.rows)))


class CellStats(NamedTuple):
    row: int
    col: int
    less_in_first: int
    less_in_last: int


def cell_stats(tableau: RectTableau, value: int) -> CellStats:
    if not 1 <= value <= tableau.size:
        raise ValueError(f"entry {value} outside 1..{tableau.size}")
    row, col = tableau.position(value)
    first = sum(1 for a in tableau.column(1) if a < value)
    last = sum(1 for a in tableau.column(tableau.n) if a < value)
    return CellStats(row, col, first, last)


def count_at_most_in_col(tableau: RectTableau, value: int, col: int) -> int:
    """Cells of column ``col`` (1-based) holding an entry ``<= value``."""
    if not 1 <= col <= tableau.n:
        raise ValueError(f"column {col} outside 1..{tableau.n}")
    if not 0 <= value <= tableau.size:
        raise ValueError(f"entry bound {value} outside 0..{tableau.size}")
    return sum(1 for a in tableau.column(col) if a <= value)
