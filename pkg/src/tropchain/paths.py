"""Lingering and non-lingering lattice paths in the Weyl chamber.

A path in dimension ``r`` is a list of ``g + 1`` integer vectors.  Each step
is a unit increase of one coordinate (``Up(j)``), a decrease of every
coordinate by one (``DownAll``), or nothing (``Linger``).  For ``r = 0`` the
points are empty vectors and every step is classified as ``Linger``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .tableaux import RectTableau, count_at_most_in_col, validate

Point = tuple[int, ...]


@dataclass(frozen=True)
class Up:
    j: int


@dataclass(frozen=True)
class DownAll:
    pass


@dataclass(frozen=True)
class Linger:
    pass


StepKind = Union[Up, DownAll, Linger]


@dataclass(frozen=True)
class LatticePath:
    r: int
    points: tuple[Point, ...]

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("dimension must be nonnegative")
        if not self.points:
            raise ValueError("a path has at least the point p_0")
        for p in self.points:
            if len(p) != self.r:
                raise ValueError(f"point {p} does not have dimension {self.r}")

    @classmethod
    def from_points(cls, points: Sequence[Sequence[int]], r: int | None = None) -> "LatticePath":
        pts = tuple(tuple(int(a) for a in p) for p in points)
        if r is None:
            r = len(pts[0]) if pts else 0
        return cls(r, pts)

    @property
    def g(self) -> int:
        return len(self.points) - 1

    def coordinate(self, j: int) -> tuple[int, ...]:
        """Trace ``p_0(j), ..., p_g(j)`` of the 1-based coordinate ``j``."""
        return tuple(p[j - 1] for p in self.points)


def staircase(top: int, r: int) -> Point:
    return tuple(top - k for k in range(r))


def _step_kind(before: Point, after: Point) -> StepKind | None:
    diff = [b - a for a, b in zip(before, after)]
    if all(d == 0 for d in diff):
        return Linger()
    if all(d == -1 for d in diff):
        return DownAll()
    ones = [k for k, d in enumerate(diff, start=1) if d == 1]
    if len(ones) == 1 and sum(1 for d in diff if d != 0) == 1:
        return Up(ones[0])
    return None


def classify_steps(path: LatticePath) -> list[StepKind]:
    kinds = []
    for i in range(1, len(path.points)):
        kind = _step_kind(path.points[i - 1], path.points[i])
        if kind is None:
            raise ValueError(f"step {i} from {path.points[i - 1]} to {path.points[i]} is not a lattice-path step")
        kinds.append(kind)
    return kinds


def is_in_weyl(point: Sequence[int]) -> bool:
    if not point:
        return True
    return all(a > b for a, b in zip(point, point[1:])) and point[-1] > 0


def is_lingering_path(path: LatticePath) -> bool:
    if path.r > 0:
        top = path.points[0][0]
        if top <= 0 or path.points[0] != staircase(top, path.r):
            return False
    if not all(is_in_weyl(p) for p in path.points):
        return False
    try:
        classify_steps(path)
    except ValueError:
        return False
    return True


def is_non_lingering(path: LatticePath) -> bool:
    if path.r == 0:
        # the empty path of the zero divisor
        return True
    if not is_lingering_path(path):
        return False
    if path.points[0] != staircase(path.r, path.r):
        return False
    kinds = classify_steps(path)
    if any(isinstance(k, Linger) for k in kinds):
        return False
    downs = sum(1 for k in kinds if isinstance(k, DownAll))
    return downs == sum(1 for k in kinds if k == Up(1))


def _column_of(kind: StepKind, r: int) -> int:
    if isinstance(kind, Up):
        return kind.j
    if isinstance(kind, DownAll):
        return r + 1
    raise ValueError("lingering step has no tableau column")


def path_to_tableau(path: LatticePath) -> RectTableau:
    """Place entry ``i`` at the topmost free cell of the column named by step ``i``."""
    if not is_non_lingering(path):
        raise ValueError("path_to_tableau needs a non-lingering lattice path")
    g, r = path.g, path.r
    if r == 0:
        if g == 0:
            raise ValueError("the empty path with g = 0 has no tableau")
        return RectTableau(tuple((i,) for i in range(1, g + 1)))
    columns: list[list[int]] = [[] for _ in range(r + 1)]
    for i, kind in enumerate(classify_steps(path), start=1):
        columns[_column_of(kind, r) - 1].append(i)
    height = len(columns[0])
    if any(len(col) != height for col in columns):
        raise ValueError("step counts do not fill a rectangle")
    tableau = RectTableau(tuple(zip(*columns)))
    if not validate(tableau):
        raise ValueError("placement did not produce a standard tableau")
    return tableau


def tableau_to_path(tableau: RectTableau) -> LatticePath:
    """Closed form ``p_i(j) = (r + 1 - j) + l_j - l_{r+1}`` with ``l_s`` the
    number of entries ``<= i`` in column ``s``."""
    if not validate(tableau):
        raise ValueError("not a standard tableau")
    r = tableau.n - 1
    points = []
    for i in range(tableau.size + 1):
        last = count_at_most_in_col(tableau, i, r + 1)
        points.append(tuple(r + 1 - j + count_at_most_in_col(tableau, i, j) - last for j in range(1, r + 1)))
    return LatticePath(r, tuple(points))
