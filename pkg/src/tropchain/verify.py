"""Exhaustive checks of the tableau/divisor correspondences over small shapes."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import divisors as dv
from .errors import InvariantViolation
from .graph_core import ChainOfLoops, reflect_graph
from .paths import is_non_lingering, path_to_tableau, tableau_to_path
from .tableaux import RectTableau, enumerate_tableaux, evacuate, transpose

CHECKS = (
    "reflection",        # reflect_divisor(phi(T)) == phi_prime_ev(T)
    "evacuation",        # phi_prime_ev(T) == phi(ev(T)) on the reflected chain
    "sigma_formula",     # closed form == simulation
    "k_trace",           # chips on v_i during the sweep == p_i(1)
    "duality",           # dual_reduce(phi(T)) == phi(T^t)
    "dual_formula",      # dual_via_tableau(T) == dual_reduce(phi(T))
    "path_roundtrip",    # path_to_tableau(beta(T)) == T
    "rho_alpha",         # rho(alpha(P)) == P
    "rank",              # rank(phi(T)) == n - 1
    "dual_rank",         # rank(K - c) == m - 1
    "riemann_roch",      # r(c) - r(K - c) == deg(c) + 1 - g
)


def check_tableau(tableau: RectTableau, graph: ChainOfLoops) -> list[str]:
    """Names of the checks that fail for ``tableau`` on ``graph``."""
    failed = []

    def expect(name: str, condition: Callable[[], bool]) -> None:
        try:
            ok = condition()
        except (ValueError, InvariantViolation):
            ok = False
        if not ok:
            failed.append(name)

    g = graph.genus
    m, n = tableau.m, tableau.n
    try:
        c = dv.phi(tableau, graph)
        path = tableau_to_path(tableau)
        raw = dv.underline_to_raw(c)
        sim = dv.simulate_reflection(c)
        dual = dv.dual_reduce(c)
        rank_c = dv.rank(raw)
        rank_dual = dv.rank(dv.underline_to_raw(dual))
    except (ValueError, InvariantViolation) as exc:
        return [f"setup ({exc})"]

    expect("reflection", lambda: sim.divisor == dv.phi_prime_ev(tableau, graph))
    expect("evacuation", lambda: dv.phi_prime_ev(tableau, graph) == dv.phi(evacuate(tableau), reflect_graph(graph)))
    expect("sigma_formula", lambda: dv.sigma_formula(c, path) == sim.divisor)
    expect("k_trace", lambda: sim.k_trace == (path.coordinate(1) if path.r else (0,) * (g + 1)))
    expect("duality", lambda: dual == dv.phi(transpose(tableau), graph))
    expect("dual_formula", lambda: dv.dual_via_tableau(tableau, graph) == dual)
    expect("path_roundtrip", lambda: is_non_lingering(path) and path_to_tableau(path) == tableau)
    expect("rho_alpha", lambda: dv.rho(dv.underline_to_raw(dv.alpha(path, graph)), path.r) == path)
    expect("rank", lambda: rank_c == n - 1)
    expect("dual_rank", lambda: rank_dual == m - 1)
    expect("riemann_roch", lambda: rank_c - rank_dual == dv.degree(c) + 1 - g)
    return failed


@dataclass
class ShapeReport:
    m: int
    n: int
    count: int = 0
    failures: list[str] = field(default_factory=list)


@dataclass
class SweepReport:
    shapes: list[ShapeReport]

    @property
    def total(self) -> int:
        return sum(s.count for s in self.shapes)

    @property
    def failure_count(self) -> int:
        return sum(len(s.failures) for s in self.shapes)


def shapes_up_to(ceiling: int) -> list[tuple[int, int]]:
    """Rectangles ``m x n`` with ``m * n <= ceiling``, by genus then rows."""
    return [(m, g // m) for g in range(1, ceiling + 1) for m in range(1, g + 1) if g % m == 0]


def check_shape(m: int, n: int, graph: ChainOfLoops) -> ShapeReport:
    report = ShapeReport(m, n)
    for tableau in enumerate_tableaux(m, n, ceiling=m * n):
        report.count += 1
        for name in check_tableau(tableau, graph):
            report.failures.append(f"{name}: {tableau.to_lists()}")
    return report


def verify_sweep(ceiling: int, make_graph: Callable[[int], ChainOfLoops], workers: int = 1) -> SweepReport:
    jobs = [(m, n, make_graph(m * n)) for m, n in shapes_up_to(ceiling)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            shapes = list(pool.map(check_shape, *zip(*jobs)))
    else:
        shapes = [check_shape(*job) for job in jobs]
    return SweepReport(shapes)
