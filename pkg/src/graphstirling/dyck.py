"""Dyck words and the lattice geometry of their staircase paths.

A word over ``{x, D}`` is read as a path from ``(0, 0)``: ``x`` is a unit step
up, ``D`` a unit step right.  Unit squares are labelled by their top-right
corner ``(col, row)``.  For a Dyck word of semilength ``n`` the upper triangle
of the ``n x n`` box splits into three pieces:

* the board above the path (a Ferrers board),
* the squares below the path but strictly above the diagonal,
* the ``n`` diagonal squares.
"""

from __future__ import annotations

import json
import random
from collections.abc import Iterator
from dataclasses import dataclass
from typing import NamedTuple

from .errors import BadCharacter, PrefixViolation, UnbalancedWord, WordError

__all__ = [
    "DyckWord",
    "SquareLabel",
    "FerrersBoard",
    "parse_word",
    "render",
    "path_vertices",
    "crossing_heights",
    "board_above",
    "squares_below",
    "turning_squares",
    "dyck_words",
    "random_dyck_word",
    "board_to_json",
]

UP, RIGHT = "x", "D"

_ALIASES = {"x": UP, "D": RIGHT, "U": UP, "R": RIGHT, "(": UP, ")": RIGHT}


class SquareLabel(NamedTuple):
    col: int
    row: int

    def __str__(self) -> str:
        return f"({self.col},{self.row})"


@dataclass(frozen=True)
class DyckWord:
    """A validated Dyck word, stored in the canonical ``x``/``D`` alphabet."""

    symbols: str

    def __post_init__(self):
        _validate(self.symbols)

    @property
    def n(self) -> int:
        return len(self.symbols) // 2

    def __str__(self) -> str:
        return self.symbols

    def __len__(self) -> int:
        return len(self.symbols)


def _validate(symbols: str) -> None:
    if not symbols:
        raise UnbalancedWord("empty word", 0)
    depth = 0
    for i, ch in enumerate(symbols, start=1):
        if ch == UP:
            depth += 1
        elif ch == RIGHT:
            depth -= 1
            if depth < 0:
                raise PrefixViolation(f"prefix violation at position {i}", i)
        else:
            raise BadCharacter(f"bad character {ch!r} at position {i}", i)
    if depth != 0:
        ups = symbols.count(UP)
        raise UnbalancedWord(f"unbalanced word: {ups} x's but {len(symbols) - ups} D's")


def parse_word(text: str) -> DyckWord:
    """Parse ``text`` into a :class:`DyckWord`.

    Accepts ``x``/``D`` (canonical), ``U``/``R`` and ``(``/``)``.  Surrounding
    whitespace is stripped; interior whitespace is an error.
    """
    text = text.strip()
    out = []
    for i, ch in enumerate(text, start=1):
        try:
            out.append(_ALIASES[ch])
        except KeyError:
            raise BadCharacter(f"bad character {ch!r} at position {i}", i) from None
    return DyckWord("".join(out))


def render(w: DyckWord) -> str:
    return w.symbols


def path_vertices(w: DyckWord) -> list[tuple[int, int]]:
    """The ``2n + 1`` lattice points visited by the staircase path of ``w``."""
    c = r = 0
    pts = [(0, 0)]
    for ch in w.symbols:
        if ch == UP:
            r += 1
        else:
            c += 1
        pts.append((c, r))
    return pts


def crossing_heights(w: DyckWord) -> list[int]:
    """Height of the path while it crosses each column ``1..n``.

    Entry ``c - 1`` is the number of ``x``'s preceding the ``c``-th ``D``.
    """
    heights = []
    ups = 0
    for ch in w.symbols:
        if ch == UP:
            ups += 1
        else:
            heights.append(ups)
    return heights


@dataclass(frozen=True)
class FerrersBoard:
    """A board of top-aligned columns inside the ``n x n`` box.

    Column ``c`` holds the squares ``(c, n - h + 1), ..., (c, n)`` where
    ``h = heights[c - 1]``.  Heights must be non-increasing, so the columns are
    nested and the shape is a Ferrers board.
    """

    n: int
    heights: tuple[int, ...]

    def __post_init__(self):
        if len(self.heights) != self.n:
            raise ValueError(f"expected {self.n} column heights, got {len(self.heights)}")
        prev = self.n
        for h in self.heights:
            if not 0 <= h <= prev:
                raise ValueError(f"column heights {self.heights} are not a Ferrers shape in a {self.n}-box")
            prev = h

    def squares(self) -> frozenset[SquareLabel]:
        return frozenset(
            SquareLabel(c, r)
            for c, h in enumerate(self.heights, start=1)
            for r in range(self.n - h + 1, self.n + 1)
        )

    def __len__(self) -> int:
        return sum(self.heights)


def board_above(w: DyckWord) -> FerrersBoard:
    n = w.n
    return FerrersBoard(n, tuple(n - h for h in crossing_heights(w)))


def squares_below(w: DyckWord) -> frozenset[SquareLabel]:
    """Squares under the path and strictly above the diagonal."""
    return frozenset(
        SquareLabel(c, r)
        for c, h in enumerate(crossing_heights(w), start=1)
        for r in range(c + 1, h + 1)
    )


def turning_squares(w: DyckWord) -> frozenset[SquareLabel]:
    """One square per ``xD`` factor: where an up step is followed by a right step."""
    out = set()
    ups = rights = 0
    prev = None
    for ch in w.symbols:
        if ch == UP:
            ups += 1
        else:
            rights += 1
            if prev == UP:
                out.add(SquareLabel(rights, ups))
        prev = ch
    return frozenset(out)


def dyck_words(n: int) -> Iterator[DyckWord]:
    """All Dyck words of semilength ``n`` in lexicographic order (``D`` < ``x``)."""
    if n < 1:
        return

    def rec(prefix: list[str], ups: int, downs: int):
        if ups == n and downs == n:
            yield "".join(prefix)
            return
        if downs < ups:
            prefix.append(RIGHT)
            yield from rec(prefix, ups, downs + 1)
            prefix.pop()
        if ups < n:
            prefix.append(UP)
            yield from rec(prefix, ups + 1, downs)
            prefix.pop()

    for s in rec([], 0, 0):
        yield DyckWord(s)


def random_dyck_word(n: int, rng: random.Random | int | None = None) -> DyckWord:
    """Uniform random Dyck word of semilength ``n`` (cycle lemma).

    A uniform arrangement of ``n`` up steps and ``n + 1`` right steps has
    exactly one rotation whose proper prefixes never dip below zero; that
    rotation minus its final right step is a uniform Dyck word.
    """
    if n < 1:
        raise WordError("semilength must be positive")
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    steps = [UP] * n + [RIGHT] * (n + 1)
    rng.shuffle(steps)
    level = lowest = 0
    cut = 0
    for i, ch in enumerate(steps, start=1):
        level += 1 if ch == UP else -1
        if level < lowest:
            lowest, cut = level, i
    rotated = steps[cut:] + steps[:cut]
    return DyckWord("".join(rotated[:-1]))


def board_to_json(board: FerrersBoard) -> str:
    return json.dumps(
        {
            "n": board.n,
            "heights": list(board.heights),
            "squares": [list(sq) for sq in sorted(board.squares())],
        }
    )
