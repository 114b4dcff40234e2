"""Chain-of-loops metric graphs with exact rational edge lengths.

Vertex ``v_i`` is addressed by its integer index ``0 <= i <= g``; loop ``i``
(1-based) joins ``v_{i-1}`` and ``v_i`` by two arcs of lengths ``ell_i`` and
``m_i``.  Travelling counter-clockwise from ``v_{i-1}`` along the ``m_i`` arc
reaches ``v_i`` after distance ``m_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

RationalLike = Union[int, str, Fraction]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, ``"p/q"`` string or Fraction to a Fraction.

    Floats are refused: they would smuggle binary rounding into lengths that
    must be exact.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact rational expected, got {value!r}")
    return Fraction(value)


@dataclass(frozen=True)
class Loop:
    ell: Fraction
    m: Fraction

    @property
    def circumference(self) -> Fraction:
        return self.ell + self.m


@dataclass(frozen=True)
class ChainOfLoops:
    loops: tuple[Loop, ...]

    def __post_init__(self):
        if not self.loops:
            raise ValueError("a chain of loops needs at least one loop")
        for i, loop in enumerate(self.loops, start=1):
            if loop.ell <= 0 or loop.m <= 0:
                raise ValueError(f"loop {i}: lengths must be positive, got ({loop.ell}, {loop.m})")

    @property
    def genus(self) -> int:
        return len(self.loops)

    @property
    def g(self) -> int:
        return len(self.loops)

    def loop(self, i: int) -> Loop:
        """Loop ``i`` with the 1-based indexing used throughout the package."""
        if not 1 <= i <= self.genus:
            raise IndexError(f"loop index {i} outside 1..{self.genus}")
        return self.loops[i - 1]

    def lengths(self) -> list[tuple[Fraction, Fraction]]:
        return [(loop.ell, loop.m) for loop in self.loops]


def make_chain(lengths: Iterable[tuple[RationalLike, RationalLike]]) -> ChainOfLoops:
    loops = []
    for pair in lengths:
        ell, m = pair
        loops.append(Loop(as_rational(ell), as_rational(m)))
    return ChainOfLoops(tuple(loops))


def uniform_chain(g: int, ell: RationalLike, m: RationalLike = 1) -> ChainOfLoops:
    return make_chain([(ell, m)] * g)


def default_chain(g: int) -> ChainOfLoops:
    """``ell_i = 2g, m_i = 1``: generic for every genus since ``2g + 1 > 2g - 2``."""
    return uniform_chain(g, 2 * g, 1)


def is_generic(graph: ChainOfLoops) -> bool:
    # Fraction keeps lowest terms, and any other representation a/b of the
    # same ratio has a larger a + b, so checking the reduced form suffices.
    bound = 2 * graph.genus - 2
    for loop in graph.loops:
        ratio = loop.ell / loop.m
        if ratio.numerator + ratio.denominator <= bound:
            return False
    return True


def reflect_graph(graph: ChainOfLoops) -> ChainOfLoops:
    return ChainOfLoops(tuple(reversed(graph.loops)))


def canonical_divisor(graph: ChainOfLoops) -> dict[int, int]:
    """Two chips on each interior vertex ``v_1 .. v_{g-1}``."""
    return {i: 2 for i in range(1, graph.genus)}
