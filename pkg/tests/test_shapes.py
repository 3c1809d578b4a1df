import itertools

import pytest
from hypothesis import given, strategies as st

from squareice.shapes import (
    GTPattern,
    Partition,
    SSYT,
    ShapeError,
    Staircase,
    conjugate,
    enumerate_gt,
    enumerate_ssyt,
    enumerate_staircases,
    gt_from_json,
    gt_to_json,
    gt_to_staircase,
    partitions_in_box,
    partitions_up_to,
    render_gt,
    render_staircase,
    ssyt_from_json,
    ssyt_to_json,
    staircase_from_json,
    staircase_to_gt,
    staircase_to_json,
    top_row,
)

FIGURE_GT = GTPattern(((2, 6, 8), (4, 7), (4,)))
FIGURE_STAIRCASE_COLUMNS = (
    tuple(range(1, 9)),
    (1, 2, 3, 5, 6, 7, 8),
    (1, 2, 3, 5, 6, 8),
    (1, 3, 4, 5, 7),
)
SMALL = [lam for n in (1, 2, 3) for lam in partitions_in_box(n, 2)]

partitions = st.integers(1, 3).flatmap(
    lambda n: st.lists(st.integers(0, 3), min_size=n, max_size=n).map(lambda ps: Partition(tuple(sorted(ps, reverse=True))))
)


def brute_force_gt(lam):
    """Every triangular array with entries in 1..m, filtered by the definition."""
    n, m = lam.n, lam.first + lam.n
    rows_by_len = {k: list(itertools.combinations(range(1, m + 1), k)) for k in range(1, n + 1)}
    found = []
    for rest in itertools.product(*[rows_by_len[n - i] for i in range(1, n)]):
        rows = (top_row(lam),) + rest
        ok = all(
            rows[i][j] <= rows[i + 1][j] <= rows[i][j + 1] for i in range(n - 1) for j in range(n - 1 - i)
        )
        if ok:
            found.append(rows)
    return found


def brute_force_ssyt(lam, n):
    shape = [p for p in lam.parts if p]
    cells = [(i, j) for i, p in enumerate(shape) for j in range(p)]
    count = 0
    for values in itertools.product(range(1, n + 1), repeat=len(cells)):
        t = dict(zip(cells, values))
        rows_ok = all(t[(i, j)] <= t[(i, j + 1)] for (i, j) in cells if (i, j + 1) in t)
        cols_ok = all(t[(i, j)] < t[(i + 1, j)] for (i, j) in cells if (i + 1, j) in t)
        count += rows_ok and cols_ok
    return count


def test_partition_derived_vectors():
    lam = Partition((5, 4, 1))
    assert lam.n == 3
    assert lam.rho == (2, 1, 0)
    assert lam.delta == (0, 1, 2)
    assert lam.plus_rho().parts == (7, 5, 1)
    assert lam.size == 10


def test_partition_validation():
    with pytest.raises(ShapeError):
        Partition((1, 2))
    with pytest.raises(ShapeError):
        Partition((1, -1))
    with pytest.raises(ShapeError):
        Partition.of((1, 1, 1), 2)
    assert Partition.of((1,), 3).parts == (1, 0, 0)
    assert Partition((1,)) != Partition((1, 0))


def test_contains():
    assert Partition((2, 1)).contains(Partition((1, 1, 0)))
    assert not Partition((2, 0)).contains(Partition((1, 1)))
    assert Partition((0, 0)).contains(Partition((0,)))


@pytest.mark.parametrize(
    "parts, expected",
    [((5, 4, 1), (2, 6, 8)), ((0,), (1,)), ((1, 0), (1, 3))],
)
def test_top_row(parts, expected):
    assert top_row(Partition(parts)) == expected


@pytest.mark.parametrize(
    "parts, expected",
    [((0,), ()), ((2, 1), (2, 1)), ((3, 1), (2, 1, 1)), ((5, 4, 1), (3, 2, 2, 2, 1))],
)
def test_conjugate(parts, expected):
    assert conjugate(Partition(parts)).parts == expected


@given(partitions)
def test_conjugate_involution(lam):
    assert Partition.of(conjugate(conjugate(lam)).parts, lam.n) == lam


def test_enumerate_gt_examples():
    assert [g.rows for g in enumerate_gt(Partition((0,)))] == [((1,),)]
    assert [g.rows for g in enumerate_gt(Partition((1, 0)))] == [((1, 3), (1,)), ((1, 3), (2,)), ((1, 3), (3,))]
    assert len(enumerate_gt(Partition((0, 0, 0)))) == 7


@pytest.mark.parametrize("lam", SMALL, ids=str)
def test_enumerate_gt_matches_brute_force(lam):
    got = [g.rows for g in enumerate_gt(lam)]
    assert got == sorted(got, key=lambda rows: sum(rows, ()))
    assert sorted(got) == sorted(brute_force_gt(lam))


def test_gt_validation_and_accessor():
    assert FIGURE_GT.k(1) == 8 and FIGURE_GT.k(2) == 7 and FIGURE_GT.k(3) == 4
    with pytest.raises(ShapeError):
        GTPattern(((1, 3), (4,)))  # interlacing
    with pytest.raises(ShapeError):
        GTPattern(((2, 2), (2,)))  # strictness
    with pytest.raises(ShapeError):
        GTPattern(((1, 3), (1, 2)))  # row length


def test_figure_staircase():
    s = gt_to_staircase(FIGURE_GT)
    assert s.columns == FIGURE_STAIRCASE_COLUMNS
    assert s.missing() == (2, 6, 8)
    assert staircase_to_gt(Staircase(FIGURE_STAIRCASE_COLUMNS)) == FIGURE_GT
    # French rows of the drawing, bottom first
    assert s.rows()[:5] == [[1, 1, 1, 1], [2, 2, 2, 3], [3, 3, 3, 4], [4, 5, 5, 5], [5, 6, 6, 7]]


def test_small_staircases():
    s = gt_to_staircase(GTPattern(((1,),)))
    assert s.columns == ((1,), ())
    assert staircase_to_gt(s) == GTPattern(((1,),))
    s = gt_to_staircase(GTPattern(((1, 3), (2,))))
    assert s.columns == ((1, 2, 3), (1, 3), (2,))
    assert staircase_to_gt(s) == GTPattern(((1, 3), (2,)))


def test_staircase_rejects_bad_fillings():
    with pytest.raises(ShapeError):
        Staircase(((1, 2, 3), (2, 3), (1,)))  # bottom row decreases 2 -> 1
    with pytest.raises(ShapeError):
        Staircase(((1, 2, 3), (1, 2), (3,)))  # diagonal 2 -> 3 increases
    with pytest.raises(ShapeError):
        Staircase(((1, 2, 3), (1, 2, 3)))  # column size
    with pytest.raises(ShapeError):
        Staircase(((1, 2, 3), (1, 4)))  # out of range
    with pytest.raises(ShapeError):
        gt_to_staircase(FIGURE_GT, m=7)


@pytest.mark.parametrize("lam", SMALL + [Partition((5, 4, 1))], ids=str)
def test_bijection_round_trips_and_counts(lam):
    gts = enumerate_gt(lam)
    stairs = enumerate_staircases(lam)
    assert len(gts) == len(stairs)
    images = [gt_to_staircase(g) for g in gts]
    assert set(images) == set(stairs)
    for g, s in zip(gts, images):
        assert s.missing() == top_row(lam)
        assert staircase_to_gt(s) == g
    for s in stairs:
        assert gt_to_staircase(staircase_to_gt(s)) == s


def test_enumerate_ssyt_examples():
    assert [t.rows for t in enumerate_ssyt(Partition((0,)), 4)] == [()]
    assert [t.rows for t in enumerate_ssyt(Partition((1,)), 1)] == [((1,),)]
    assert [t.rows for t in enumerate_ssyt(Partition((1,)), 2)] == [((1,),), ((2,),)]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ssyt_single_box_count(n):
    assert len(enumerate_ssyt(Partition((1,)), n)) == n


@pytest.mark.parametrize("parts", [(2, 1), (2, 2), (3, 1, 0), (2, 1, 1), (3,)])
@pytest.mark.parametrize("n", [2, 3])
def test_ssyt_count_matches_brute_force(parts, n):
    lam = Partition(parts)
    tabs = enumerate_ssyt(lam, n)
    assert len(tabs) == brute_force_ssyt(lam, n)
    flat = [sum(t.rows, ()) for t in tabs]
    assert flat == sorted(flat)


def test_ssyt_validation():
    lam = Partition((2, 1))
    with pytest.raises(ShapeError):
        SSYT(lam, ((2, 1), (3,)))
    with pytest.raises(ShapeError):
        SSYT(lam, ((1, 1), (1,)))


def test_partition_enumerators():
    assert len(partitions_in_box(3, 3)) == 20
    ups = partitions_up_to(2, 2)
    assert [p.parts for p in ups] == [(0, 0), (1, 0), (1, 1), (2, 0)]


def test_json_round_trips():
    assert gt_from_json(gt_to_json(FIGURE_GT)) == FIGURE_GT
    s = gt_to_staircase(FIGURE_GT)
    assert staircase_from_json(staircase_to_json(s)) == s
    t = enumerate_ssyt(Partition((2, 1)), 3)[4]
    assert ssyt_from_json(ssyt_to_json(t), t.shape) == t


def test_rendering():
    assert render_gt(FIGURE_GT).splitlines()[0].split() == ["2", "6", "8"]
    assert render_gt(FIGURE_GT).splitlines()[2].strip() == "4"
    lines = render_staircase(gt_to_staircase(FIGURE_GT)).splitlines()
    assert lines[0].split() == ["8"]
    assert lines[-1].split() == ["1", "1", "1", "1"]
