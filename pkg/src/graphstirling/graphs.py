"""Graphs, quasi-threshold decompositions, and the graphs attached to a Dyck word.

Quasi-threshold graphs are built from single vertices by adding a dominating
vertex and by taking disjoint unions.  A decomposition records that build as
a tree of :class:`Leaf`, :class:`Dom` and :class:`Union` terms, each carrying
vertex labels, and maps one-to-one onto a Dyck word (``xD``, ``x...D`` and
concatenation respectively).
"""

from __future__ import annotations

import json
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Union as _U

from .caps import active_caps
from .dyck import (
    UP,
    DyckWord,
    board_above,
    squares_below,
    turning_squares,
)
from .errors import NotQuasiThreshold, TooLarge
from .polynomial import Polynomial

__all__ = [
    "Graph",
    "BipartiteGraph",
    "Leaf",
    "Dom",
    "Union",
    "QtNode",
    "word_to_graph",
    "graph_to_word",
    "recognize_qt",
    "is_quasi_threshold",
    "qt_to_word",
    "qt_evaluate",
    "qt_to_json",
    "word_to_clique_union",
    "clique_cover_from_turns",
    "word_to_bipartite",
    "strip_isolated",
    "chromatic_polynomial",
    "chromatic_number",
    "co_chromatic",
    "forest_chromatic_polynomial",
    "component_count",
    "is_forest",
    "is_isomorphic",
    "read_graph",
    "format_graph",
]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``1..n_vertices``.

    Edges are stored as ``(u, v)`` pairs with ``u < v``.
    """

    n_vertices: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n_vertices < 1:
            raise ValueError("a graph needs at least one vertex")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 1 or v > self.n_vertices:
                raise ValueError(f"edge {e} outside vertex range 1..{self.n_vertices}")
            norm.add((u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n_vertices + 1)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    def neighbor_masks(self) -> list[int]:
        """Adjacency as bitmasks, vertex ``v`` at bit ``v - 1``."""
        masks = [0] * self.n_vertices
        for u, v in self.edges:
            masks[u - 1] |= 1 << (v - 1)
            masks[v - 1] |= 1 << (u - 1)
        return masks

    def __str__(self) -> str:
        return f"Graph(n={self.n_vertices}, edges={sorted(self.edges)})"


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with labelled classes; edge ``(i, j)`` joins ``x_i`` and ``y_j``."""

    left: tuple[int, ...]
    right: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        ls, rs = set(self.left), set(self.right)
        for i, j in self.edges:
            if i not in ls or j not in rs:
                raise ValueError(f"edge x{i}y{j} has an endpoint outside the vertex classes")

    @property
    def order(self) -> int:
        return len(self.left) + len(self.right)


# -- quasi-threshold terms ---------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    vertex: int


@dataclass(frozen=True)
class Dom:
    vertex: int
    child: QtNode


@dataclass(frozen=True)
class Union:
    children: tuple[QtNode, ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("a union needs at least two parts")
        if any(isinstance(c, Union) for c in self.children):
            raise ValueError("unions must not be nested directly")


QtNode = _U[Leaf, Dom, Union]


def qt_vertices(t: QtNode) -> list[int]:
    out = []
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            out.append(node.vertex)
        elif isinstance(node, Dom):
            out.append(node.vertex)
            stack.append(node.child)
        else:
            stack.extend(node.children)
    return out


def qt_evaluate(t: QtNode) -> Graph:
    """Rebuild the graph a decomposition describes."""
    edges = set()
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Dom):
            v = node.vertex
            for u in qt_vertices(node.child):
                edges.add((min(u, v), max(u, v)))
            stack.append(node.child)
        elif isinstance(node, Union):
            stack.extend(node.children)
    verts = qt_vertices(t)
    return Graph(max(verts), frozenset(edges))


def _render(t: QtNode) -> tuple[int, str]:
    # returns (vertex count, canonical word)
    if isinstance(t, Leaf):
        return 1, "xD"
    if isinstance(t, Dom):
        # unroll chains of dominating vertices to keep recursion shallow
        depth = 0
        while isinstance(t, Dom):
            depth += 1
            t = t.child
        size, word = _render(t)
        return size + depth, "x" * depth + word + "D" * depth
    parts = sorted(_render(c) for c in t.children)
    return sum(s for s, _ in parts), "".join(w for _, w in parts)


def qt_to_word(t: QtNode) -> DyckWord:
    """Canonical word: union parts ordered by (vertex count, word) ascending."""
    return DyckWord(_render(t)[1])


def _to_obj(t: QtNode):
    if isinstance(t, Leaf):
        return {"leaf": t.vertex}
    if isinstance(t, Dom):
        return {"dom": _to_obj(t.child), "vertex": t.vertex}
    return {"union": [_to_obj(c) for c in t.children]}


def qt_to_json(t: QtNode) -> str:
    return json.dumps(_to_obj(t))


def qt_chromatic_number(t: QtNode) -> int:
    if isinstance(t, Leaf):
        return 1
    if isinstance(t, Dom):
        depth = 0
        while isinstance(t, Dom):
            depth += 1
            t = t.child
        return depth + qt_chromatic_number(t)
    return max(qt_chromatic_number(c) for c in t.children)


def qt_chromatic_polynomial(t: QtNode) -> Polynomial:
    """Adding a dominating vertex maps chi(q) to q chi(q - 1); unions multiply."""
    if isinstance(t, Leaf):
        return Polynomial([0, 1])
    if isinstance(t, Dom):
        chain = 0
        while isinstance(t, Dom):
            chain += 1
            t = t.child
        p = qt_chromatic_polynomial(t)
        for _ in range(chain):
            p = Polynomial([0, 1]) * p.shift(-1)
        return p
    out = Polynomial([1])
    for c in t.children:
        out = out * qt_chromatic_polynomial(c)
    return out


# -- word <-> graph ------------------------------------------------------------


def word_to_graph(w: DyckWord) -> tuple[Graph, QtNode]:
    """The quasi-threshold graph of ``w``; the ``i``-th ``x`` becomes vertex ``i``.

    Each vertex is adjacent exactly to the vertices whose ``x`` lies strictly
    between its own ``x`` and the matching ``D``.
    """
    frames: list[tuple[int, list[QtNode], list[int]]] = []
    top: list[QtNode] = []
    top_verts: list[int] = []
    edges = set()
    label = 0
    for ch in w.symbols:
        if ch == UP:
            label += 1
            frames.append((label, [], []))
            continue
        v, kids, inside = frames.pop()
        for u in inside:
            edges.add((v, u))
        if not kids:
            node: QtNode = Leaf(v)
        elif len(kids) == 1:
            node = Dom(v, kids[0])
        else:
            node = Dom(v, Union(tuple(kids)))
        if frames:
            frames[-1][1].append(node)
            frames[-1][2].extend(inside)
            frames[-1][2].append(v)
        else:
            top.append(node)
    decomposition = top[0] if len(top) == 1 else Union(tuple(top))
    return Graph(w.n, frozenset(edges)), decomposition


def _components(adj: dict[int, frozenset[int]], vs: frozenset[int]) -> list[frozenset[int]]:
    seen: set[int] = set()
    comps = []
    for s in sorted(vs):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for x in adj[u]:
                if x in vs and x not in comp:
                    comp.add(x)
                    stack.append(x)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def recognize_qt(g: Graph) -> QtNode:
    """Decompose ``g`` as a quasi-threshold graph or raise :class:`NotQuasiThreshold`.

    Components become union parts.  In a connected piece every universal
    vertex is peeled (lowest label outermost); whatever remains must be a
    single vertex or disconnected, otherwise the piece is the witness.
    """
    adj = g.adjacency

    def connected(vs: frozenset[int]) -> QtNode:
        if len(vs) == 1:
            return Leaf(next(iter(vs)))
        universal = sorted(v for v in vs if len(adj[v] & vs) == len(vs) - 1)
        if not universal:
            raise NotQuasiThreshold(tuple(sorted(vs)))
        rest = vs.difference(universal)
        if not rest:
            inner: QtNode = Leaf(universal.pop())
        else:
            comps = _components(adj, rest)
            if len(comps) == 1:
                # a universal vertex of the remainder would already be universal in vs
                raise NotQuasiThreshold(tuple(sorted(rest)))
            inner = Union(tuple(connected(c) for c in comps))
        for v in reversed(universal):
            inner = Dom(v, inner)
        return inner

    comps = _components(adj, frozenset(g.vertices))
    if len(comps) == 1:
        return connected(comps[0])
    return Union(tuple(connected(c) for c in comps))


def is_quasi_threshold(g: Graph) -> bool:
    try:
        recognize_qt(g)
    except NotQuasiThreshold:
        return False
    return True


def graph_to_word(g: Graph) -> DyckWord:
    return qt_to_word(recognize_qt(g))


def word_to_clique_union(w: DyckWord) -> Graph:
    return Graph(w.n, frozenset((sq.col, sq.row) for sq in squares_below(w)))


def clique_cover_from_turns(w: DyckWord) -> list[tuple[int, ...]]:
    return [tuple(range(sq.col, sq.row + 1)) for sq in sorted(turning_squares(w))]


def word_to_bipartite(w: DyckWord) -> BipartiteGraph:
    labels = tuple(range(1, w.n + 1))
    return BipartiteGraph(labels, labels, frozenset(tuple(sq) for sq in board_above(w).squares()))


def strip_isolated(g: BipartiteGraph) -> tuple[BipartiteGraph, int, int]:
    """Drop isolated vertices; returns ``(stripped, isolated_right, isolated_left)``.

    For the bipartite graph of a Dyck word these counts are the length of the
    leading run of ``x`` and of the trailing run of ``D``.
    """
    used_left = {i for i, _ in g.edges}
    used_right = {j for _, j in g.edges}
    left = tuple(i for i in g.left if i in used_left)
    right = tuple(j for j in g.right if j in used_right)
    stripped = BipartiteGraph(left, right, g.edges)
    return stripped, len(g.right) - len(right), len(g.left) - len(left)


# -- chromatic polynomials -----------------------------------------------------


def component_count(g: Graph) -> int:
    parent = list(range(g.n_vertices + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    count = g.n_vertices
    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            count -= 1
    return count


def is_forest(g: Graph) -> bool:
    return len(g.edges) == g.n_vertices - component_count(g)


def forest_chromatic_polynomial(n: int, components: int) -> Polynomial:
    """``q^k (q - 1)^(n - k)`` for a forest on ``n`` vertices with ``k`` components."""
    return Polynomial.monomial(components) * Polynomial([-1, 1]) ** (n - components)


def _relabel(edges: Iterable[tuple[int, int]]) -> tuple[int, frozenset[tuple[int, int]]]:
    verts = sorted({u for e in edges for u in e})
    idx = {v: i for i, v in enumerate(verts)}
    return len(verts), frozenset((min(idx[u], idx[v]), max(idx[u], idx[v])) for u, v in edges)


def _dc_chromatic(n: int, edges: frozenset, memo: dict) -> Polynomial:
    """Deletion-contraction on ``n`` vertices labelled ``0..n-1``."""
    key = (n, edges)
    hit = memo.get(key)
    if hit is not None:
        return hit
    q = Polynomial([0, 1])
    if not edges:
        out = Polynomial.monomial(n)
    else:
        adj: dict[int, set[int]] = {}
        for u, v in edges:
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        isolated = n - len(adj)
        comps = _components({v: frozenset(s) for v, s in adj.items()}, frozenset(adj))
        if len(comps) > 1:
            out = Polynomial.monomial(isolated)
            for comp in comps:
                sub = [e for e in edges if e[0] in comp]
                k, rel = _relabel(sub)
                out = out * _dc_chromatic(k, rel, memo)
        else:
            k = len(adj)
            m = len(edges)
            if m == k * (k - 1) // 2:
                out = Polynomial.falling_factorial(k)
            elif m == k - 1:
                out = q * Polynomial([-1, 1]) ** (k - 1)
            else:
                u = min(adj, key=lambda a: (len(adj[a]), a))
                v = min(adj[u])
                deleted = edges - {(min(u, v), max(u, v))}
                merged = set()
                for a, b in deleted:
                    a = u if a == v else a
                    b = u if b == v else b
                    if a != b:
                        merged.add((min(a, b), max(a, b)))
                kd, rd = _relabel(deleted)
                kc, rc = _relabel(merged)
                out = _dc_chromatic(kd, rd, memo) * Polynomial.monomial(k - kd) - _dc_chromatic(
                    kc, rc, memo
                ) * Polynomial.monomial(k - 1 - kc)
            out = out * Polynomial.monomial(isolated)
    memo[key] = out
    return out


def chromatic_polynomial(g: Graph | QtNode, cap: int | None = None) -> Polynomial:
    """Chromatic polynomial of a graph or of a quasi-threshold decomposition.

    Decompositions use the structural rule and have no size limit.  General
    graphs go through memoised deletion-contraction and are capped at ``cap``
    vertices (active cap profile by default).
    """
    if not isinstance(g, Graph):
        return qt_chromatic_polynomial(g)
    if cap is None:
        cap = active_caps().chromatic_vertices
    if is_forest(g):
        return forest_chromatic_polynomial(g.n_vertices, component_count(g))
    if g.n_vertices > cap:
        raise TooLarge(f"chromatic polynomial of a general {g.n_vertices}-vertex graph exceeds cap {cap}")
    k, rel = _relabel(g.edges)
    return _dc_chromatic(k, rel, {}) * Polynomial.monomial(g.n_vertices - k)


def chromatic_number(g: Graph | QtNode, cap: int | None = None) -> int:
    if not isinstance(g, Graph):
        return qt_chromatic_number(g)
    if not g.edges:
        return 1
    p = chromatic_polynomial(g, cap)
    q = 1
    while p(q) <= 0:
        q += 1
    return q


def co_chromatic(g: Graph, h: Graph, cap: int | None = None) -> bool:
    return chromatic_polynomial(g, cap) == chromatic_polynomial(h, cap)


# -- isomorphism (brute force, small graphs only) -------------------------------


def is_isomorphic(g: Graph, h: Graph, cap: int = 8) -> bool:
    """Backtracking permutation search; refuses graphs above ``cap`` vertices."""
    if g.n_vertices != h.n_vertices or len(g.edges) != len(h.edges):
        return False
    n = g.n_vertices
    if n > cap:
        raise TooLarge(f"brute-force isomorphism is capped at {cap} vertices")
    ga, ha = g.adjacency, h.adjacency
    if sorted(len(s) for s in ga.values()) != sorted(len(s) for s in ha.values()):
        return False
    order = sorted(g.vertices, key=lambda v: -len(ga[v]))
    image: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for cand in h.vertices:
            if cand in used or len(ha[cand]) != len(ga[v]):
                continue
            if all((image[u] in ha[cand]) == (u in ga[v]) for u in order[:i]):
                image[v] = cand
                used.add(cand)
                if extend(i + 1):
                    return True
                used.discard(cand)
                del image[v]
        return False

    return extend(0)


# -- file format -------------------------------------------------------------------


def read_graph(text: str) -> Graph:
    """Parse the edge-list format: ``n <count>`` header, then ``u v`` per line."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ValueError(f"line {lineno}: expected header 'n <count>'")
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v'")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise ValueError("missing 'n <count>' header")
    return Graph.from_edges(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"n {g.n_vertices}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def all_labelled_graphs(n: int):
    """Every labelled graph on ``n`` vertices (``2^(n choose 2)`` of them)."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))
