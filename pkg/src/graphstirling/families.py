"""Named graph families used by the command line sweeps.

``kind[:n]`` strings select a family: ``empty``, ``path``, ``star``,
``forest``, ``randomqt`` or ``complete``.  Forests (paths included) are not
quasi-threshold in general; they are handled through the quasi-threshold
graph with the same chromatic polynomial, a star on ``n - k + 1`` vertices
plus ``k - 1`` isolated vertices.
"""

from __future__ import annotations

import enum
import heapq
import math
import random
from dataclasses import dataclass

from .counting import CountSeq, stirling_from_chromatic, stirling_rook
from .dyck import DyckWord, random_dyck_word
from .graphs import Graph, forest_chromatic_polynomial, graph_to_word, word_to_graph

__all__ = [
    "Kind",
    "FamilySpec",
    "parse_family",
    "family_graph",
    "family_word",
    "family_stirling",
    "random_forest",
    "forest_surrogate_word",
]


class Kind(str, enum.Enum):
    EMPTY = "empty"
    PATH = "path"
    STAR = "star"
    FOREST = "forest"
    RANDOM_QT = "randomqt"
    COMPLETE = "complete"


_KIND_ALIASES = {"random-qt": Kind.RANDOM_QT, "random_qt": Kind.RANDOM_QT, "randomqt": Kind.RANDOM_QT}


@dataclass(frozen=True)
class FamilySpec:
    kind: Kind
    n: int
    components: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("family size must be at least 1")
        if self.components is not None and not 1 <= self.components <= self.n:
            raise ValueError(f"components must lie in [1, {self.n}]")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")

    @property
    def is_forest(self) -> bool:
        return self.kind in (Kind.FOREST, Kind.PATH)

    @property
    def forest_components(self) -> int:
        if self.kind is Kind.PATH:
            return 1
        return self.components if self.components is not None else 1


def parse_family(text: str, n: int | None = None, components: int | str | None = None, seed: int = 0) -> FamilySpec:
    """Build a spec from ``kind[:n]``; ``n`` overrides a size given in the text.

    ``components`` may be ``"sqrt"`` for ``ceil(sqrt(n))``.
    """
    name, _, size = text.strip().partition(":")
    name = name.lower()
    kind = _KIND_ALIASES.get(name) or Kind(name)
    if n is None:
        if not size:
            raise ValueError(f"family {text!r} needs a size, as in {name}:10")
        n = int(size)
    if components == "sqrt":
        components = math.isqrt(n - 1) + 1
    elif components is not None:
        components = int(components)
    return FamilySpec(kind, n, components, seed)


def random_forest(n: int, components: int, rng: random.Random | int | None = None) -> Graph:
    """Random labelled forest on ``1..n`` with exactly ``components`` trees.

    A Pruefer sequence of length ``n - 1`` over ``0..n`` with exactly
    ``components - 1`` zeros is drawn uniformly and decoded; deleting vertex
    ``0`` from the tree leaves a forest whose roots are the former neighbours
    of ``0``.  This is uniform over rooted forests with ``components`` trees;
    unrooted forests are weighted by the product of their tree sizes.
    """
    if not 1 <= components <= n:
        raise ValueError(f"components must lie in [1, {n}]")
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    length = n - 1
    zeros = set(rng.sample(range(length), components - 1))
    seq = [0 if i in zeros else rng.randint(1, n) for i in range(length)]

    degree = [1] * (n + 1)
    for a in seq:
        degree[a] += 1
    leaves = [v for v in range(n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for a in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, a))
        degree[a] -= 1
        if degree[a] == 1:
            heapq.heappush(leaves, a)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return Graph.from_edges(n, [(a, b) for a, b in edges if a and b])


def forest_surrogate_word(n: int, components: int) -> DyckWord:
    """Word of the star-plus-isolated-vertices graph co-chromatic with a forest."""
    star = n - components  # leaves of the star
    edges = [(1, j) for j in range(2, star + 2)]
    return graph_to_word(Graph.from_edges(n, edges))


def family_graph(spec: FamilySpec) -> Graph:
    n = spec.n
    if spec.kind is Kind.PATH:
        return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])
    if spec.kind is Kind.FOREST:
        return random_forest(n, spec.forest_components, spec.seed)
    return word_to_graph(family_word(spec))[0]


def family_word(spec: FamilySpec) -> DyckWord:
    """Dyck word of the family member, or of its co-chromatic surrogate for forests."""
    n = spec.n
    if spec.kind is Kind.EMPTY:
        return DyckWord("xD" * n)
    if spec.kind is Kind.STAR:
        return DyckWord("x" + "xD" * (n - 1) + "D")
    if spec.kind is Kind.COMPLETE:
        return DyckWord("x" * n + "D" * n)
    if spec.kind is Kind.RANDOM_QT:
        return random_dyck_word(n, spec.seed)
    return forest_surrogate_word(n, spec.forest_components)


def family_stirling(spec: FamilySpec) -> CountSeq:
    """Stirling sequence by the polynomial-time route for the family."""
    if spec.is_forest:
        return stirling_from_chromatic(forest_chromatic_polynomial(spec.n, spec.forest_components), spec.n)
    return stirling_rook(family_word(spec))
