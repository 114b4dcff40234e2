"""Acceptance gate.  Run with ``pytest tests/test_acceptance.py -s`` to see
one PASS/FAIL line per criterion."""

import json
import time

import pytest

from tropchain import (
    RectTableau,
    default_chain,
    dual_reduce,
    enumerate_tableaux,
    hook_count,
    is_generic,
    make_chain,
    phi,
    reflect_divisor,
    rho,
    underline_to_raw,
    uniform_chain,
)
from tropchain.cli import main
from tropchain.verify import check_tableau, shapes_up_to

SWEEP_GENUS = 10


def report(number, title, ok, detail=""):
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}"
    print(line + (f" ({detail})" if detail else ""))
    assert ok, line


@pytest.fixture(scope="module")
def sweep():
    """Every check from ``tropchain.verify`` on every tableau with mn <= 10."""
    start = time.perf_counter()
    counts, failures = {}, {}
    for m, n in shapes_up_to(SWEEP_GENUS):
        graph = default_chain(m * n)
        counts[(m, n)] = 0
        for tableau in enumerate_tableaux(m, n):
            counts[(m, n)] += 1
            for name in check_tableau(tableau, graph):
                failures.setdefault(name, []).append(tableau.to_lists())
    return counts, failures, time.perf_counter() - start


def failed(failures, *names):
    return sum(len(failures.get(name, [])) for name in names) + len(
        [k for k in failures if k.startswith("setup")]
    )


def test_criterion_1_running_example():
    start = time.perf_counter()
    graph = uniform_chain(6, 10, 1)
    c = phi(RectTableau.from_rows([[1, 3, 4], [2, 5, 6]]), graph)
    raw = underline_to_raw(c)
    checks = [
        (c.head, c.xu) == (2, (2, 3, 1, 0, 1, 0)),
        (raw.d0, raw.x) == (2, (3, 4, 2, 0, 2, 0)),
        rho(raw, 2).coordinate(1) == (2, 3, 4, 4, 3, 3, 2),
        (lambda s: (s.head, s.xu))(reflect_divisor(c)) == (2, (2, 1, 3, 2, 0, 0)),
        (lambda d: (d.head, d.xu))(dual_reduce(c)) == (1, (1, 0, 1, 2, 0, 0)),
    ]
    elapsed = time.perf_counter() - start
    report(1, "running example", all(checks) and elapsed < 1, f"{elapsed:.3f}s")


def test_criterion_2_reflection_sweep(sweep):
    counts, failures, elapsed = sweep
    hooks_ok = all(counts[s] == hook_count(*s) for s in counts)
    bad = failed(failures, "reflection", "evacuation")
    ok = bad == 0 and hooks_ok and counts[(2, 5)] == counts[(5, 2)] == 42 and elapsed < 30
    report(2, "reflection matches evacuation for g <= 10",
           ok, f"{sum(counts.values())} tableaux, {bad} failures, {elapsed:.1f}s")


def test_criterion_3_duality_sweep(sweep):
    _, failures, _ = sweep
    bad = failed(failures, "duality", "dual_formula")
    report(3, "dual matches transpose for g <= 10", bad == 0, f"{bad} failures")


def test_criterion_4_round_trips(sweep):
    _, failures, _ = sweep
    bad = failed(failures, "path_roundtrip", "rho_alpha")
    report(4, "path and divisor round trips", bad == 0, f"{bad} failures")


def test_criterion_5_rank(sweep):
    _, failures, _ = sweep
    bad = failed(failures, "rank", "dual_rank", "riemann_roch")
    report(5, "rank n-1, dual rank m-1, Riemann-Roch", bad == 0, f"{bad} failures")


def test_criterion_6_enumeration():
    start = time.perf_counter()
    mismatches = []
    for m, n in shapes_up_to(12):
        count = sum(1 for _ in enumerate_tableaux(m, n))
        if count != hook_count(m, n):
            mismatches.append((m, n, count))
    small = sum(1 for _ in enumerate_tableaux(2, 3)), sum(1 for _ in enumerate_tableaux(3, 4))
    elapsed = time.perf_counter() - start
    ok = not mismatches and small == (5, 462) and elapsed < 60
    report(6, "enumeration matches hook lengths for mn <= 12", ok, f"{elapsed:.1f}s")


def test_criterion_7_genericity(tmp_path, capsys):
    accepted = is_generic(uniform_chain(6, 10, 1))
    bad_graph = make_chain([(10, 1)] * 5 + [(3, 2)])
    doc = {
        "kind": "divisor",
        "graph": {"kind": "graph", "loops": [[str(l.ell), str(l.m)] for l in bad_graph.loops]},
        "head": 2,
        "raw": ["3", "4", "2", "0", "2", "0"],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code = main(["rank", str(path)])
    capsys.readouterr()
    with capsys.disabled():
        report(7, "genericity check", accepted and not is_generic(bad_graph) and code == 3, f"exit {code}")


def test_criterion_8_oracle_cross_checks(sweep):
    _, failures, _ = sweep
    bad = failed(failures, "sigma_formula", "k_trace")
    report(8, "closed-form reflection and k-trace", bad == 0, f"{bad} failures")
