import pytest
from hypothesis import given

from conftest import tableaux
from tropchain import (
    DownAll,
    LatticePath,
    Linger,
    RectTableau,
    Up,
    classify_steps,
    enumerate_tableaux,
    is_in_weyl,
    is_lingering_path,
    is_non_lingering,
    path_to_tableau,
    tableau_to_path,
)

RUNNING_POINTS = [(2, 1), (3, 1), (4, 1), (4, 2), (3, 1), (3, 2), (2, 1)]
RUNNING = LatticePath.from_points(RUNNING_POINTS)


def incremental_path(tableau):
    """Walk 1..g: entry in column j < n is a step e_j, in the last column a
    step down every coordinate."""
    r = tableau.n - 1
    p = tuple(range(r, 0, -1))
    points = [p]
    for i in range(1, tableau.size + 1):
        _, col = tableau.position(i)
        if col == tableau.n:
            p = tuple(a - 1 for a in p)
        else:
            p = tuple(a + (1 if k == col else 0) for k, a in enumerate(p, start=1))
        points.append(p)
    return LatticePath(r, tuple(points))


def all_tableaux(ceiling=12):
    for g in range(1, ceiling + 1):
        for m in range(1, g + 1):
            if g % m == 0:
                yield from enumerate_tableaux(m, g // m)


def test_classify_running():
    assert classify_steps(RUNNING) == [Up(1), Up(1), Up(2), DownAll(), Up(2), DownAll()]


def test_classify_constant_path():
    path = LatticePath.from_points([(3, 1)] * 4)
    assert classify_steps(path) == [Linger()] * 3


def test_classify_r0():
    assert classify_steps(LatticePath(0, ((),) * 4)) == [Linger()] * 3


def test_classify_rejects_bad_step():
    with pytest.raises(ValueError):
        classify_steps(LatticePath.from_points([(3, 1), (4, 2)]))


@pytest.mark.parametrize("point, expected", [((2, 1), True), ((2, 2), False), ((1, 0), False), ((), True), ((5,), True)])
def test_weyl(point, expected):
    assert is_in_weyl(point) is expected


def test_lingering_examples():
    assert is_lingering_path(RUNNING)
    assert not is_lingering_path(LatticePath.from_points([(2, 1), (1, 1)]))
    assert is_lingering_path(LatticePath.from_points([(3, 2, 1)]))
    assert not is_lingering_path(LatticePath.from_points([(3, 1)]))  # not a staircase


def test_non_lingering_examples():
    assert is_non_lingering(RUNNING)
    # third step lingers at (4, 1) instead of rising to (4, 2)
    lingered = LatticePath.from_points(RUNNING_POINTS[:3] + [(4, 1)] + RUNNING_POINTS[4:])
    assert not is_non_lingering(lingered)
    assert not is_non_lingering(LatticePath.from_points([(3, 1), (4, 1), (3, 0)]))
    assert not is_non_lingering(LatticePath.from_points([(3, 2), (4, 2), (3, 1)]))
    assert is_non_lingering(LatticePath(0, ((),) * 5))


def test_path_to_tableau_examples():
    assert path_to_tableau(RUNNING) == RectTableau.from_rows([[1, 3, 4], [2, 5, 6]])
    assert path_to_tableau(LatticePath(0, ((),) * 5)) == RectTableau.from_rows([[1], [2], [3], [4]])
    assert path_to_tableau(LatticePath.from_points([(1,), (2,), (1,)])) == RectTableau.from_rows([[1, 2]])


def test_path_to_tableau_rejects_lingering():
    with pytest.raises(ValueError):
        path_to_tableau(LatticePath.from_points([(2, 1), (2, 1)]))


def test_tableau_to_path_examples():
    assert tableau_to_path(RectTableau.from_rows([[1, 3, 4], [2, 5, 6]])) == RUNNING
    evacuated = RectTableau.from_rows([[1, 2, 5], [3, 4, 6]])
    # frozen from incremental_path
    expected = LatticePath.from_points([(2, 1), (3, 1), (3, 2), (4, 2), (4, 3), (3, 2), (2, 1)])
    assert incremental_path(evacuated) == expected
    assert tableau_to_path(evacuated) == expected
    assert tableau_to_path(RectTableau.from_rows([[1], [2], [3]])) == LatticePath(0, ((),) * 4)


@pytest.mark.parametrize("tableau", list(all_tableaux()), ids=lambda t: str(t.to_lists()))
def test_bijection_exhaustive(tableau):
    path = tableau_to_path(tableau)
    assert path == incremental_path(tableau)
    assert is_non_lingering(path)
    assert path_to_tableau(path) == tableau
    assert tableau_to_path(path_to_tableau(path)) == path
    # step kind names the tableau column of each entry
    for i, kind in enumerate(classify_steps(path), start=1):
        col = tableau.position(i)[1]
        if path.r:
            assert kind == (DownAll() if col == path.r + 1 else Up(col))


@given(tableaux())
def test_paths_never_cross(tableau):
    path = tableau_to_path(tableau)
    for p in path.points:
        assert all(p[j] > p[k] for j in range(path.r) for k in range(j + 1, path.r))
