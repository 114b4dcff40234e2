"""v0-reduced divisors on chain-of-loops graphs.

Two encodings are used.  ``DivisorSeq`` stores ``(d0; x_1..x_g)`` where
``x_i`` is the counter-clockwise distance of the single chip on loop ``i``
from its left vertex ``v_{i-1}`` (``0`` meaning no chip).  ``UnderlineSeq``
stores integers ``xu_i`` where ``xu_i * m_i`` is the counter-clockwise
distance from the right vertex ``v_i``; for ``m_i = 1`` this is ``x_i - 1``.

On top of these sit the rank algorithm (``rho`` / ``rank``), the maps from
lattice paths and tableaux to divisors, reflection of the chain (by
chip-firing simulation and by closed form) and the reduction of ``K - c``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InvariantViolation, NonGenericGraphError, ShapeMismatchError
from .graph_core import ChainOfLoops, RationalLike, as_rational, is_generic, reflect_graph
from .paths import LatticePath, Up, classify_steps, is_lingering_path, is_non_lingering, is_in_weyl, staircase
from .tableaux import RectTableau, cell_stats, count_at_most_in_col, validate


@dataclass(frozen=True)
class DivisorSeq:
    graph: ChainOfLoops
    d0: int
    x: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.x) != self.graph.genus:
            raise ShapeMismatchError(f"{len(self.x)} positions given for genus {self.graph.genus}")
        normalized = tuple(
            as_rational(xi) % loop.circumference for xi, loop in zip(self.x, self.graph.loops)
        )
        object.__setattr__(self, "x", normalized)


@dataclass(frozen=True)
class UnderlineSeq:
    graph: ChainOfLoops
    head: int
    xu: tuple[int, ...]

    def __post_init__(self):
        if len(self.xu) != self.graph.genus:
            raise ShapeMismatchError(f"{len(self.xu)} entries given for genus {self.graph.genus}")
        if any(v < 0 for v in self.xu):
            raise ValueError(f"underline distances must be nonnegative, got {self.xu}")

    @property
    def g(self) -> int:
        return self.graph.genus


def make_divisor(graph: ChainOfLoops, d0: int, x: Sequence[RationalLike]) -> DivisorSeq:
    return DivisorSeq(graph, int(d0), tuple(as_rational(v) for v in x))


def make_underline(graph: ChainOfLoops, head: int, xu: Sequence[int]) -> UnderlineSeq:
    return UnderlineSeq(graph, int(head), tuple(int(v) for v in xu))


def degree(c: DivisorSeq | UnderlineSeq) -> int:
    if isinstance(c, DivisorSeq):
        return c.d0 + sum(1 for v in c.x if v != 0)
    return c.head + sum(1 for v in c.xu if v != 0)


def _multiple_of(distance: Fraction, m: Fraction, circumference: Fraction) -> Optional[int]:
    """Smallest ``u >= 0`` with ``u * m == distance`` modulo the circumference.

    Solutions are ``u0 + k * P`` where ``circumference / m = P / Q`` in lowest
    terms, so trying ``t + k * P / Q`` for ``k`` below the joint denominator
    finds ``u0`` if it exists.  On a generic chain two solutions never both
    lie in ``0..2g-2``, which makes the smallest one the intended distance.
    """
    t = Fraction(distance) / m
    period = circumference / m
    for k in range(t.denominator * period.denominator):
        candidate = t + k * period
        if candidate.denominator == 1:
            return int(candidate) % period.numerator
    return None


def underline_to_raw(c: UnderlineSeq) -> DivisorSeq:
    x = []
    for i, (u, loop) in enumerate(zip(c.xu, c.graph.loops), start=1):
        if u == 0:
            x.append(Fraction(0))
            continue
        pos = ((u + 1) * loop.m) % loop.circumference
        if pos == 0:
            raise ValueError(f"loop {i}: underline {u} puts the chip on v_{i - 1}, which the encoding cannot express")
        x.append(pos)
    return DivisorSeq(c.graph, c.head, tuple(x))


def raw_to_underline(c: DivisorSeq) -> UnderlineSeq:
    xu = []
    for i, (x, loop) in enumerate(zip(c.x, c.graph.loops), start=1):
        if x == 0:
            xu.append(0)
            continue
        u = _multiple_of(x - loop.m, loop.m, loop.circumference)
        if u is None:
            raise ValueError(f"loop {i}: position {x} is not a multiple of m_{i} = {loop.m}")
        if u == 0:
            raise ValueError(f"loop {i}: chip sits on v_{i}, which has no underline encoding")
        xu.append(u)
    return UnderlineSeq(c.graph, c.d0, tuple(xu))


# ---------------------------------------------------------------------------
# rank


def rho(c: DivisorSeq, r: int) -> LatticePath:
    """Run the lattice-path algorithm in dimension ``r``.

    The full ``g + 1`` points are returned even when the path leaves the
    Weyl chamber; callers decide membership with ``is_lingering_path``.
    """
    g = c.graph.genus
    if r < 0:
        raise ValueError("dimension must be nonnegative")
    if degree(c) > 2 * g - 2:
        raise ValueError(f"degree {degree(c)} exceeds 2g - 2 = {2 * g - 2}")
    p = staircase(c.d0, r)
    points = [p]
    for i, (x, loop) in enumerate(zip(c.x, c.graph.loops), start=1):
        if x == 0:
            p = tuple(a - 1 for a in p)
        else:
            matches = []
            if is_in_weyl(p):
                for j in range(1, r + 1):
                    if (x - (p[j - 1] + 1) * loop.m) % loop.circumference != 0:
                        continue
                    bumped = p[: j - 1] + (p[j - 1] + 1,) + p[j:]
                    if is_in_weyl(bumped):
                        matches.append(bumped)
            if len(matches) > 1:
                raise InvariantViolation(
                    f"step {i}: {len(matches)} coordinates match position {x}; the graph is not generic"
                )
            if matches:
                p = matches[0]
        points.append(p)
    return LatticePath(r, tuple(points))


def rank(c: DivisorSeq) -> int:
    g = c.graph.genus
    if not is_generic(c.graph):
        raise NonGenericGraphError("rank is only determined by this algorithm on generic chains")
    d = degree(c)
    if d > 2 * g - 2:
        return d - g
    if c.d0 < 0:
        return -1
    best = 0
    for r in range(1, c.d0 + 1):
        if is_lingering_path(rho(c, r)):
            best = r
    return best


def witness_path(c: DivisorSeq) -> Optional[LatticePath]:
    """``rho`` at the computed rank, or ``None`` when the rank is below 1 or
    was read off from the degree."""
    r = rank(c)
    if r < 1 or degree(c) > 2 * c.graph.genus - 2:
        return None
    return rho(c, r)


# ---------------------------------------------------------------------------
# paths and tableaux to divisors


def alpha(path: LatticePath, graph: ChainOfLoops) -> UnderlineSeq:
    if not is_non_lingering(path):
        raise ValueError("alpha is defined on non-lingering lattice paths only")
    if path.g != graph.genus:
        raise ShapeMismatchError(f"path has {path.g} steps but the graph has genus {graph.genus}")
    if path.r == 0:
        return UnderlineSeq(graph, 0, (0,) * graph.genus)
    xu = []
    for i, kind in enumerate(classify_steps(path), start=1):
        xu.append(path.points[i - 1][kind.j - 1] if isinstance(kind, Up) else 0)
    return UnderlineSeq(graph, path.r, tuple(xu))


def _check_shape(tableau: RectTableau, graph: ChainOfLoops) -> None:
    if not validate(tableau):
        raise ValueError("not a standard tableau")
    if tableau.size != graph.genus:
        raise ShapeMismatchError(
            f"{tableau.m}x{tableau.n} tableau has {tableau.size} cells but the graph has genus {graph.genus}"
        )


def phi(tableau: RectTableau, graph: ChainOfLoops) -> UnderlineSeq:
    _check_shape(tableau, graph)
    r = tableau.n - 1
    xu = []
    for i in range(1, tableau.size + 1):
        s = cell_stats(tableau, i)
        xu.append(r + s.row - s.col - s.less_in_last)
    return UnderlineSeq(graph, r, tuple(xu))


def phi_prime_ev(tableau: RectTableau, graph: ChainOfLoops) -> UnderlineSeq:
    """Image of the evacuated tableau on the reflected chain, by closed form.

    ``graph`` is the original chain; the result lives on its reflection.
    """
    _check_shape(tableau, graph)
    g = tableau.size
    xu = [0] * g
    for i in range(1, g + 1):
        j = cell_stats(tableau, i).col
        xu[g - i] = j - 1 + count_at_most_in_col(tableau, i, 1) - count_at_most_in_col(tableau, i, j)
    return UnderlineSeq(reflect_graph(graph), tableau.n - 1, tuple(xu))


# ---------------------------------------------------------------------------
# reflection


def recenter_step(k: int, x: Fraction, ell: Fraction, m: Fraction) -> tuple[int, Optional[Fraction]]:
    """Move a ``v_{i-1}``-reduced configuration on one loop to ``v_i``.

    ``k`` chips sit on ``v_{i-1}`` and one chip at counter-clockwise distance
    ``x`` from it (``x = 0``: no chip).  Returns the chip count on ``v_i`` and
    the clockwise distance from ``v_{i-1}`` of the chip left on the loop, or
    ``None`` if the loop ends up empty.
    """
    circumference = ell + m
    x = Fraction(x) % circumference
    if x == 0:
        if k == 0:
            return 0, None
        return k - 1, ((k - 1) * m) % circumference
    if (x - (k + 1) * m) % circumference == 0:
        return k + 1, None
    return k, (k * m - x) % circumference


@dataclass
class ReductionState:
    """A ``v_i``-reduced configuration reached while sweeping left to right.

    ``loop_chip[j - 1]`` is the counter-clockwise distance of the chip on
    loop ``j`` from its left vertex, or ``None``.
    """

    graph: ChainOfLoops
    basepoint: int
    chips_at_basepoint: int
    loop_chip: list[Optional[Fraction]] = field(default_factory=list)

    @property
    def degree(self) -> int:
        return self.chips_at_basepoint + sum(1 for pos in self.loop_chip if pos is not None)

    def check(self) -> None:
        for j, (pos, loop) in enumerate(zip(self.loop_chip, self.graph.loops), start=1):
            if pos is None:
                continue
            if not 0 <= pos < loop.circumference:
                raise InvariantViolation(f"loop {j}: position {pos} not normalized")
            # left of the basepoint the cut loop excludes v_j, right of it v_{j-1}
            forbidden = loop.m if j <= self.basepoint else Fraction(0)
            if pos == forbidden:
                raise InvariantViolation(f"loop {j}: chip lies on a vertex excluded from its cut loop")


@dataclass(frozen=True)
class Reflection:
    divisor: UnderlineSeq
    k_trace: tuple[int, ...]
    clockwise: tuple[Optional[Fraction], ...]
    states: tuple[ReductionState, ...]


def simulate_reflection(c: UnderlineSeq) -> Reflection:
    graph = c.graph
    raw = underline_to_raw(c)
    state = ReductionState(graph, 0, raw.d0, [x if x != 0 else None for x in raw.x])
    state.check()
    start_degree = state.degree
    states = [state]
    trace = [state.chips_at_basepoint]
    clockwise: list[Optional[Fraction]] = []
    k = raw.d0
    for i, loop in enumerate(graph.loops, start=1):
        if k < 0:
            raise InvariantViolation(f"negative chip count {k} on v_{i - 1}")
        k, cw = recenter_step(k, raw.x[i - 1], loop.ell, loop.m)
        clockwise.append(cw)
        chips = list(state.loop_chip)
        chips[i - 1] = None if cw is None else (-cw) % loop.circumference
        state = ReductionState(graph, i, k, chips)
        state.check()
        if state.degree != start_degree:
            raise InvariantViolation(f"degree changed from {start_degree} to {state.degree} at v_{i}")
        states.append(state)
        trace.append(k)

    g = graph.genus
    xu = [0] * g
    for i, (cw, loop) in enumerate(zip(clockwise, graph.loops), start=1):
        if cw is None:
            continue
        u = _multiple_of(cw, loop.m, loop.circumference)
        if u is None or u == 0:
            raise InvariantViolation(f"loop {i}: clockwise position {cw} has no underline encoding")
        xu[g - i] = u
    divisor = UnderlineSeq(reflect_graph(graph), k, tuple(xu))
    return Reflection(divisor, tuple(trace), tuple(clockwise), tuple(states))


def reflect_divisor(c: UnderlineSeq) -> UnderlineSeq:
    return simulate_reflection(c).divisor


def sigma_formula(c: UnderlineSeq, path: LatticePath) -> UnderlineSeq:
    if alpha(path, c.graph) != c:
        raise ValueError("path and divisor do not correspond")
    g = c.g
    top = path.coordinate(1) if path.r > 0 else (0,) * (g + 1)
    xu = [0] * g
    for i in range(1, g + 1):
        xu[g - i] = max(top[i - 1] - c.xu[i - 1] - 1, 0)
    return UnderlineSeq(reflect_graph(c.graph), c.head, tuple(xu))


# ---------------------------------------------------------------------------
# Riemann-Roch dual


def z_sequence(tableau: RectTableau) -> tuple[int, ...]:
    """``z_i``: entries above ``i`` in the last row or last column (corner
    counted once), plus one, for ``i = 0 .. g-1``."""
    border = set(tableau.rows[-1]) | set(tableau.column(tableau.n))
    return tuple(sum(1 for a in border if a > i) + 1 for i in range(tableau.size))


def dual_via_tableau(tableau: RectTableau, graph: ChainOfLoops) -> UnderlineSeq:
    x = phi(tableau, graph)
    z = z_sequence(tableau)
    y = tuple(z[i - 1] - x.xu[i - 1] - 2 for i in range(1, tableau.size + 1))
    return UnderlineSeq(graph, tableau.m - 1, y)


def dual_reduce(c: UnderlineSeq) -> UnderlineSeq:
    """v0-reduce ``K - c`` by firing ever larger right-hand tails of the chain.

    ``Z`` is the chip count on the vertex just left of the fired tail (two of
    which come from ``K``), ``Y`` the leftover chip's underline distance.
    """
    g, xu = c.g, c.xu
    if xu[g - 1] != 0:
        raise InvariantViolation(f"last loop carries a chip ({xu[g - 1]}); not a tableau image")
    y = [0] * g
    z = 2
    for idx in range(g - 1, 0, -1):
        x = xu[idx - 1]
        if x == 0:
            y[idx - 1] = z - 1
            z += 1
        elif x == z - 1:
            y[idx - 1] = 0
            z += 1
        elif 0 < x < z - 2:
            y[idx - 1] = z - x - 2
        else:
            raise InvariantViolation(f"loop {idx}: distance {x} against {z} chips is outside the three cases")
    # v_0 holds -head chips of K - c rather than the 2 assumed by the recurrence
    head = z - 2 - c.head
    expected = g - degree(c) + c.head - 1
    if head != expected:
        raise InvariantViolation(f"reduced head {head} differs from g - d + r - 1 = {expected}")
    return UnderlineSeq(c.graph, head, tuple(y))


def path_of(c: UnderlineSeq) -> LatticePath:
    """The non-lingering path ``P`` with ``alpha(P) = c``.

    Raises ``ValueError`` when ``c`` is not in the image of the tableau map.
    """
    g = c.g
    if c.head == 0 and not any(c.xu):
        return LatticePath(0, ((),) * (g + 1))
    if c.head < 1:
        raise ValueError(f"head {c.head} is not the rank of a tableau image")
    try:
        path = rho(underline_to_raw(c), c.head)
    except (ValueError, InvariantViolation) as exc:
        raise ValueError(f"not a tableau image: {exc}") from exc
    if not is_non_lingering(path) or alpha(path, c.graph) != c:
        raise ValueError("not a tableau image: the rank path is not non-lingering")
    return path


def is_phi_image(c: UnderlineSeq) -> bool:
    try:
        path_of(c)
    except ValueError:
        return False
    return True
