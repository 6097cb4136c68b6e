import json
import random
from collections import Counter

import pytest
from hypothesis import given, strategies as st

import oracles
from graphstirling.dyck import (
    DyckWord,
    FerrersBoard,
    board_above,
    board_to_json,
    dyck_words,
    parse_word,
    path_vertices,
    random_dyck_word,
    render,
    squares_below,
    turning_squares,
)
from graphstirling.errors import BadCharacter, PrefixViolation, UnbalancedWord, WordError

EX = "xxDxxDxDDD"
CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]


@st.composite
def words(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    return random_dyck_word(n, draw(st.integers(0, 2**32)))


def test_parse_examples():
    assert parse_word("xD").n == 1
    assert parse_word(EX).n == 5
    with pytest.raises(PrefixViolation) as err:
        parse_word("xDDx")
    assert err.value.position == 3
    assert "prefix violation at position 3" in str(err.value)


@pytest.mark.parametrize(
    "text, exc",
    [("", UnbalancedWord), ("xxD", UnbalancedWord), ("xaD", BadCharacter), ("x D", BadCharacter), ("D", PrefixViolation)],
)
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_word(text)


def test_errors_are_value_errors():
    assert issubclass(WordError, ValueError)


@pytest.mark.parametrize("alias", ["UURR", "(())"])
def test_aliases_render_canonical(alias):
    assert render(parse_word(alias)) == "xxDD"


def test_path_vertices():
    assert path_vertices(DyckWord(EX)) == [
        (0, 0), (0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 4), (2, 5), (3, 5), (4, 5), (5, 5),
    ]
    assert path_vertices(DyckWord("xD")) == [(0, 0), (0, 1), (1, 1)]
    assert path_vertices(DyckWord("xDxD")) == [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2)]


def test_running_example_geometry():
    w = DyckWord(EX)
    assert board_above(w).squares() == {(1, 3), (1, 4), (1, 5), (2, 5)}
    assert squares_below(w) == {(1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)}
    assert turning_squares(w) == {(1, 2), (2, 4), (3, 5)}


def test_small_geometry():
    assert len(board_above(DyckWord("xD"))) == 0
    assert len(board_above(DyckWord("xxxxDDDD"))) == 0
    assert squares_below(DyckWord("xD")) == set()
    assert squares_below(DyckWord("xxDD")) == {(1, 2)}
    assert turning_squares(DyckWord("xD")) == {(1, 1)}
    assert turning_squares(DyckWord("xDxD")) == {(1, 1), (2, 2)}


def test_square_label_text():
    (sq,) = turning_squares(DyckWord("xD"))
    assert str(sq) == "(1,1)" and sq.col == 1 and sq.row == 1


@pytest.mark.parametrize("n", range(1, 11))
def test_upper_triangle_partition(n):
    count = 0
    for w in dyck_words(n):
        count += 1
        above, below = len(board_above(w)), len(squares_below(w))
        assert above + below + n == n * (n + 1) // 2
        assert len(turning_squares(w)) == w.symbols.count("xD")
    assert count == CATALAN[n]


@pytest.mark.parametrize("n", range(1, 8))
def test_geometry_matches_oracle(n):
    for w in dyck_words(n):
        assert board_above(w).squares() == oracles.above(w.symbols)
        assert squares_below(w) == oracles.below(w.symbols)
        assert turning_squares(w) == oracles.turns(w.symbols)


@given(words())
def test_board_is_ferrers(w):
    board = board_above(w)
    assert list(board.heights) == sorted(board.heights, reverse=True)
    for c in range(1, board.n):
        col = {r for cc, r in board.squares() if cc == c}
        nxt = {r for cc, r in board.squares() if cc == c + 1}
        assert nxt <= col


@given(words(12))
def test_render_parse_round_trip(w):
    assert parse_word(render(w)) == w


@given(words(12))
def test_path_stays_above_diagonal(w):
    pts = path_vertices(w)
    assert len(pts) == 2 * w.n + 1 and pts[-1] == (w.n, w.n)
    assert all(r >= c for c, r in pts)


def test_ferrers_board_validation():
    FerrersBoard(3, (2, 1, 0))
    with pytest.raises(ValueError):
        FerrersBoard(3, (1, 2, 0))
    with pytest.raises(ValueError):
        FerrersBoard(2, (1,))


def test_board_json():
    data = json.loads(board_to_json(board_above(DyckWord(EX))))
    assert data == {"n": 5, "heights": [3, 1, 0, 0, 0], "squares": [[1, 3], [1, 4], [1, 5], [2, 5]]}


def test_dyck_words_sorted_and_distinct():
    ws = [w.symbols for w in dyck_words(6)]
    assert len(set(ws)) == len(ws) == 132


def test_random_word_uniform():
    # 5 words of semilength 3; 10000 draws, each cell expected 2000
    rng = random.Random(3)
    counts = Counter(random_dyck_word(3, rng).symbols for _ in range(10000))
    assert len(counts) == 5
    chi2 = sum((c - 2000) ** 2 / 2000 for c in counts.values())
    assert chi2 < 18.47  # 0.999 quantile, 4 degrees of freedom


def test_random_word_seeded():
    assert random_dyck_word(20, 5) == random_dyck_word(20, 5)
