import random

import pytest
from hypothesis import given, strategies as st

from chandas.core import G, L, GlSequence, parse_sequence, to_row_index
from chandas.errors import DigitOutOfRange, IndexOutOfRange, InvalidBase
from chandas.indexing import (
    BaseBNumeral,
    nashtam,
    rank_base_b,
    rank_prefixes,
    uddishtam_kedara,
    uddishtam_pingala,
)
from chandas.prastara import pingala_prastara


@pytest.mark.parametrize("k, n, text", [(5, 3, "GGL"), (1, 3, "GGG"), (8, 3, "LLL")])
def test_nashtam(k, n, text):
    assert str(nashtam(k, n)) == text


@pytest.mark.parametrize("k, n", [(0, 3), (9, 3), (-1, 1), (3, 1)])
def test_nashtam_range(k, n):
    with pytest.raises(IndexOutOfRange):
        nashtam(k, n)


def test_lgl_position_by_scan():
    # LGL found by scanning the 3-syllable prastara
    scan = [str(r) for r in pingala_prastara(3)].index("LGL") + 1
    assert scan == 6
    assert uddishtam_pingala(parse_sequence("LGL")) == 6


@pytest.mark.parametrize("text, k", [("GLG", 3), ("GGG", 1), ("LGL", 6), ("G", 1), ("L", 2)])
def test_uddishtam_pingala(text, k):
    assert uddishtam_pingala(parse_sequence(text)) == k


@pytest.mark.parametrize("text, k", [("GLL", 7), ("GGG", 1), ("GGGGGGG", 1), ("LLL", 8)])
def test_uddishtam_kedara(text, k):
    assert uddishtam_kedara(parse_sequence(text)) == k


@pytest.mark.parametrize("n", range(1, 13))
def test_round_trip_and_agreement(n):
    for k in range(1, 2 ** n + 1):
        seq = nashtam(k, n)
        assert uddishtam_pingala(seq) == k
        assert uddishtam_kedara(seq) == k
        assert to_row_index(seq) == k


@pytest.mark.parametrize("base, digits, rank", [(10, [7, 8, 9], 790), (10, [0], 1), (2, [1, 0, 0], 5)])
def test_rank_base_b(base, digits, rank):
    assert rank_base_b(BaseBNumeral(base, digits)) == rank


def test_rank_table_12_prefixes():
    # S1 = 10*1 - 2 = 8, S2 = 8*10 - 1 = 79, S3 = 79*10 = 790
    assert list(rank_prefixes(BaseBNumeral(10, [7, 8, 9]))) == [8, 79, 790]


def test_rank_binary_matches_mirrored_uddishtam():
    assert rank_base_b(BaseBNumeral(2, [1, 0, 0])) == uddishtam_pingala(parse_sequence("GGL"))
    for n in range(1, 11):
        for k in range(1, 2 ** n + 1):
            seq = nashtam(k, n)
            mirrored = [int(s) for s in reversed(seq.syllables)]
            assert rank_base_b(BaseBNumeral(2, mirrored)) == uddishtam_pingala(seq)


def test_rank_random_numerals():
    rng = random.Random(20261019)
    for _ in range(1000):
        base = rng.choice([2, 3, 10, 16])
        digits = [rng.randrange(base) for _ in range(rng.randint(1, 50))]
        value = 0
        for d in digits:
            value = value * base + d
        assert rank_base_b(BaseBNumeral(base, digits)) == value + 1


@given(st.integers(2, 40).flatmap(
    lambda b: st.tuples(st.just(b), st.lists(st.integers(0, b - 1), min_size=1, max_size=30))))
def test_prefix_property(case):
    base, digits = case
    prefixes = list(rank_prefixes(BaseBNumeral(base, digits)))
    for m in range(1, len(digits) + 1):
        assert prefixes[m - 1] == rank_base_b(BaseBNumeral(base, digits[:m]))
        value = 0
        for d in digits[:m]:
            value = value * base + d
        assert prefixes[m - 1] == value + 1


def test_leading_zeros_accepted():
    assert rank_base_b(BaseBNumeral(10, [0, 0, 7])) == 8


def test_parse_numeral():
    assert rank_base_b(BaseBNumeral.parse("789", 10)) == 790
    assert rank_base_b(BaseBNumeral.parse("ff", 16)) == 256
    assert rank_base_b(BaseBNumeral.parse("FF", 16)) == 256


def test_numeral_errors():
    with pytest.raises(InvalidBase):
        BaseBNumeral(1, [0])
    with pytest.raises(DigitOutOfRange) as exc:
        BaseBNumeral(10, [1, 10])
    assert exc.value.index == 1
    with pytest.raises(DigitOutOfRange):
        BaseBNumeral.parse("12", 2)
    with pytest.raises(DigitOutOfRange):
        BaseBNumeral.parse("1-", 10)
