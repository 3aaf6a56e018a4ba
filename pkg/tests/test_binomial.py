import pytest

from chandas.binomial import bhaskara_ncr, bhaskara_steps, lagakriya, lagakriya_table, meru
from chandas.errors import InvalidArgs
from chandas.oracle import ncr_factorial, pow2_doubling


def test_lagakriya_examples():
    assert lagakriya(6) == [1, 6, 15, 20, 15, 6, 1]
    assert lagakriya(1) == [1, 1]
    assert lagakriya(10) == [ncr_factorial(10, r) for r in range(11)]
    assert lagakriya(10) == [1, 10, 45, 120, 210, 252, 210, 120, 45, 10, 1]


def test_lagakriya_table_14_shape():
    rows = lagakriya_table(6).rows
    assert [len(r) for r in rows] == [7, 6, 5, 4, 3, 2, 1]
    assert rows[1] == (1, 2, 3, 4, 5, 6)
    assert rows[2] == (1, 3, 6, 10, 15)
    assert rows[3] == (1, 4, 10, 20)


@pytest.mark.parametrize("n", range(1, 26))
def test_lagakriya_table_recurrence(n):
    rows = lagakriya_table(n).rows
    assert all(v == 1 for v in rows[0])
    assert all(r[0] == 1 for r in rows)
    for i in range(1, len(rows)):
        for j in range(1, len(rows[i])):
            assert rows[i][j] == rows[i - 1][j] + rows[i][j - 1]


def test_meru_examples():
    assert meru(1).rows == ((1,),)
    assert meru(8).rows[7] == (1, 7, 21, 35, 35, 21, 7, 1)
    assert meru(6).rows[5] == (1, 5, 10, 10, 5, 1)


def test_meru_table_17_cells():
    rows = meru(8).rows
    # cells filled in the final construction step
    assert rows[4][2] == 6
    assert rows[5][2:4] == (10, 10)
    assert rows[6][2] == rows[6][4] == 15
    assert rows[7][2] == rows[7][5] == 21


@pytest.mark.parametrize("n, r, value", [(6, 2, 15), (6, 0, 1), (30, 15, 155117520)])
def test_bhaskara(n, r, value):
    assert bhaskara_ncr(n, r) == value


def test_bhaskara_table_18():
    assert bhaskara_steps(6, 6) == [1, 6, 15, 20, 15, 6, 1]


def test_bhaskara_rejects():
    with pytest.raises(InvalidArgs):
        bhaskara_ncr(3, 4)
    with pytest.raises(InvalidArgs):
        bhaskara_ncr(3, -1)
    with pytest.raises(InvalidArgs):
        lagakriya(0)
    with pytest.raises(InvalidArgs):
        meru(0)


def test_three_constructions_agree():
    pyramid = meru(26)
    for n in range(1, 26):
        coeffs = lagakriya(n)
        for r in range(n + 1):
            assert coeffs[r] == pyramid.rows[n][r] == bhaskara_ncr(n, r) == ncr_factorial(n, r)
            assert bhaskara_ncr(n, r) == bhaskara_ncr(n, n - r)
        assert sum(coeffs) == pow2_doubling(n)


def test_bhaskara_large_exact():
    assert bhaskara_ncr(500, 250) == ncr_factorial(500, 250)
