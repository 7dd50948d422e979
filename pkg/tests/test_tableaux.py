import pytest
from hypothesis import given

from lrpictures import (
    Cell,
    Partition,
    SkewShape,
    SkewTableau,
    enumerate_ssyt,
    highest_tableau,
    j_order_cells,
    leq_j,
    level_set,
    me_reading,
    p_index,
    skew_word,
    validate_semistandard,
)
from conftest import skew_shapes

HOOK = SkewShape(Partition((2, 1)), Partition((1,)))


def small_family():
    """Skew shapes of at most 6 cells inside a 3x3 box, with all fillings up to entry 4."""
    from lrpictures import partitions_in_box, subpartitions

    for nu in partitions_in_box(9, 3, 3):
        for lam in subpartitions(nu):
            shape = SkewShape(nu, lam)
            if shape.size <= 6:
                for t in enumerate_ssyt(shape, 4):
                    yield t


def test_validate_semistandard_examples():
    assert validate_semistandard(SkewTableau.straight(((1, 2), (2,))))
    assert not validate_semistandard(SkewTableau.straight(((1, 1), (1,))))
    assert validate_semistandard(SkewTableau(HOOK, ((1,), (2,))))


def test_tableau_structure_validation():
    with pytest.raises(ValueError):
        SkewTableau(HOOK, ((1, 2), (2,)))  # row 1 too long for the skew shape
    with pytest.raises(ValueError):
        SkewTableau.from_entries(HOOK, {Cell(1, 2): 1})  # missing a cell


def test_me_reading_examples():
    assert me_reading(SkewTableau.straight(((1, 2),))).letters == (2, 1)
    assert me_reading(highest_tableau(Partition((2, 1)))).letters == (1, 1, 2)
    assert me_reading(SkewTableau(HOOK, ((1,), (2,)))).letters == (1, 2)


def test_me_reading_rejects_non_semistandard():
    with pytest.raises(ValueError):
        me_reading(SkewTableau.straight(((2, 1),)))


def test_skew_word_examples():
    assert skew_word(SkewTableau.straight(((1, 2), (2,)))).letters == (2, 1, 2)
    assert skew_word(SkewTableau(HOOK, ((1,), (2,)))).letters == (2, 1)
    assert skew_word(SkewTableau.straight(((5,),))).letters == (5,)


def test_highest_tableau_examples():
    assert highest_tableau(Partition((2, 1))).rows == ((1, 1), (2,))
    assert highest_tableau(Partition(())).rows == ()
    assert highest_tableau(Partition((3,))).rows == ((1, 1, 1),)


def test_p_index_examples():
    t = SkewTableau(SkewShape(Partition((3,)), Partition((1,))), ((1, 1),))
    assert p_index(t, Cell(1, 3)) == 1
    assert p_index(t, Cell(1, 2)) == 2
    assert p_index(SkewTableau.straight(((5,),)), Cell(1, 1)) == 1
    y = highest_tableau(Partition((2, 1)))
    assert p_index(y, Cell(1, 1)) == 2
    with pytest.raises(ValueError):
        p_index(y, Cell(3, 3))


def test_enumerate_ssyt_examples():
    assert len(list(enumerate_ssyt(SkewShape(Partition((1,))), 2))) == 2
    assert len(list(enumerate_ssyt(SkewShape(Partition((1, 1))), 2))) == 1
    rows = [t.rows for t in enumerate_ssyt(SkewShape(Partition((2,))), 2)]
    assert rows == [((1, 1),), ((1, 2),), ((2, 2),)]


def test_enumerate_ssyt_bound():
    with pytest.raises(ValueError):
        list(enumerate_ssyt(SkewShape(Partition((5, 5, 3))), 3))
    assert list(enumerate_ssyt(SkewShape(Partition((5, 5, 3))), 1, max_cells=13)) == []


def test_enumerate_ssyt_is_j_reading_lexicographic():
    shape = SkewShape(Partition((2, 2)), Partition((1,)))
    readings = [me_reading(t).letters for t in enumerate_ssyt(shape, 3)]
    assert readings == sorted(readings)
    assert len(set(readings)) == len(readings)


def test_enumerated_family_properties():
    count = 0
    for t in small_family():
        count += 1
        assert validate_semistandard(t)
        seen_letters = set(t.content())
        for k in seen_letters:
            cells = level_set(t, k)
            # one cell per column, ordered compatibly with the J order
            assert len({c.col for c in cells}) == len(cells)
            assert all(leq_j(cells[i], cells[i + 1]) for i in range(len(cells) - 1))
            for idx, c in enumerate(cells, start=1):
                assert p_index(t, c) == idx
        reading = me_reading(t)
        word = skew_word(t)
        assert len(reading.letters) == len(word.letters) == t.size
        assert sorted(reading.letters) == sorted(word.letters)
    assert count > 100


@given(skew_shapes(max_rows=3, max_part=3))
def test_me_reading_of_highest_tableau_weakly_increases(shape):
    y = highest_tableau(shape.outer)
    letters = me_reading(y).letters
    assert all(letters[i] <= letters[i + 1] for i in range(len(letters) - 1))


def test_entries_map_matches_j_order():
    t = SkewTableau(HOOK, ((1,), (2,)))
    assert t.entries() == {Cell(1, 2): 1, Cell(2, 1): 2}
    assert [t.entry(c) for c in j_order_cells(HOOK)] == [1, 2]


def test_json_round_trip():
    t = SkewTableau(HOOK, ((1,), (2,)))
    assert SkewTableau.from_json(t.to_json()) == t
    assert t.to_json() == {"outer": [2, 1], "inner": [1], "rows": [[1], [2]]}
