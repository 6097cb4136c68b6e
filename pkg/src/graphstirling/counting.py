"""Graph Stirling sequences by five independent routes.

For a Dyck word ``w`` with graph ``G_w`` the sequence ``S(k)`` (number of
partitions of ``V(G_w)`` into ``k`` non-empty independent sets) equals

* the diagonal normal-order coefficients of ``w`` in the Weyl algebra,
* ``r_{n-k}`` of the Ferrers board above the path of ``w``,
* ``m_{n-k}`` of the bipartite graph of that board,
* the same partition count on the clique-union graph ``H_w``,
* the inclusion-exclusion inversion of the chromatic polynomial of ``G_w``.

Everything here is exact integer arithmetic.  Only the rook route is
polynomial time; the rest are oracles with size caps.
"""

from __future__ import annotations

import enum
import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from math import comb, factorial

from ._kernels import count_independent_partitions
from .caps import active_caps
from .dyck import UP, RIGHT, DyckWord, FerrersBoard, board_above
from .errors import (
    BadCharacter,
    InternalInconsistency,
    NegativeResult,
    NonIntegralResult,
    TooLarge,
)
from .graphs import (
    BipartiteGraph,
    Graph,
    chromatic_polynomial,
    strip_isolated,
    word_to_bipartite,
    word_to_clique_union,
    word_to_graph,
)
from .polynomial import Polynomial

__all__ = [
    "Method",
    "CountSeq",
    "WeylState",
    "stirling_enumerate",
    "normal_order",
    "stirling_weyl",
    "rook_numbers",
    "stirling_rook",
    "matching_numbers",
    "stirling_matching",
    "stirling_from_chromatic",
    "chromatic_from_stirling",
    "CrossCheckReport",
    "cross_check",
]


class Method(str, enum.Enum):
    ENUMERATE = "enumerate"
    WEYL = "weyl"
    ROOK = "rook"
    MATCHING = "matching"
    CHROMATIC = "chromatic"


@dataclass(frozen=True)
class CountSeq:
    """Nonnegative integer sequence on ``k = 0..n``; zero outside that range."""

    values: tuple[int, ...]
    method: Method
    n: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        object.__setattr__(self, "method", Method(self.method))
        if len(self.values) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} values for n={self.n}, got {len(self.values)}")
        if any(v < 0 for v in self.values):
            raise NegativeResult(f"negative entry in {self.values}")
        if not any(self.values):
            raise ValueError("a count sequence needs a positive entry")

    def __getitem__(self, k: int) -> int:
        if 0 <= k <= self.n:
            return self.values[k]
        return 0

    def __len__(self) -> int:
        return len(self.values)

    def support(self) -> tuple[int, int]:
        nz = [k for k, v in enumerate(self.values) if v]
        return nz[0], nz[-1]

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "method": self.method.value, "values": [str(v) for v in self.values]})

    @classmethod
    def from_json(cls, text: str) -> CountSeq:
        obj = json.loads(text)
        return cls(tuple(int(v) for v in obj["values"]), Method(obj["method"]), int(obj["n"]))


# -- route 1: set partitions ------------------------------------------------------


def stirling_enumerate(g: Graph, cap: int | None = None) -> CountSeq:
    """Count partitions into independent sets by walking restricted growth strings."""
    if cap is None:
        cap = active_caps().enumerate_vertices
    if g.n_vertices > cap:
        raise TooLarge(f"partition enumeration on {g.n_vertices} vertices exceeds cap {cap}")
    counts = count_independent_partitions(g.neighbor_masks())
    return CountSeq(tuple(counts), Method.ENUMERATE, g.n_vertices)


# -- route 2: Weyl algebra ---------------------------------------------------------


@dataclass(frozen=True)
class WeylState:
    """``sum c[a, b] x^a D^b`` in normal order; zero coefficients are never stored."""

    terms: dict[tuple[int, int], int] = field(default_factory=dict)

    def coefficient(self, a: int, b: int) -> int:
        return self.terms.get((a, b), 0)


def normal_order(word: str | DyckWord | Sequence[str]) -> WeylState:
    """Normal-order a word in ``x`` and ``D`` using ``Dx = xD + 1``.

    The word is applied right to left: ``x`` sends ``x^a D^b`` to
    ``x^(a+1) D^b``; ``D`` sends it to ``x^a D^(b+1) + a x^(a-1) D^b``.
    """
    symbols = word.symbols if isinstance(word, DyckWord) else word
    state: dict[tuple[int, int], int] = {(0, 0): 1}
    for i in range(len(symbols) - 1, -1, -1):
        ch = symbols[i]
        nxt: dict[tuple[int, int], int] = {}
        if ch == UP:
            for (a, b), c in state.items():
                nxt[a + 1, b] = c
        elif ch == RIGHT:
            for (a, b), c in state.items():
                nxt[a, b + 1] = nxt.get((a, b + 1), 0) + c
                if a:
                    nxt[a - 1, b] = nxt.get((a - 1, b), 0) + a * c
        else:
            raise BadCharacter(f"bad character {ch!r} at position {i + 1}", i + 1)
        state = {k: v for k, v in nxt.items() if v}
    return WeylState(state)


def stirling_weyl(w: DyckWord) -> CountSeq:
    state = normal_order(w)
    off = {k: v for k, v in state.terms.items() if k[0] != k[1]}
    if off:
        raise InternalInconsistency(f"off-diagonal normal-order terms for a Dyck word: {off}")
    return CountSeq(tuple(state.coefficient(k, k) for k in range(w.n + 1)), Method.WEYL, w.n)


# -- route 3: rooks ------------------------------------------------------------------


def rook_numbers(b: FerrersBoard) -> CountSeq:
    """Rook numbers ``r_0..r_n`` of a Ferrers board.

    Columns are taken shortest first.  Since shorter columns sit inside taller
    ones, ``k - 1`` rooks already placed block exactly ``k - 1`` rows of the
    current column, which leaves ``h - (k - 1)`` free squares.
    """
    r = [1] + [0] * b.n
    placed = 0
    for h in sorted(b.heights):
        placed += 1
        for k in range(min(placed, h), 0, -1):
            r[k] += (h - k + 1) * r[k - 1]
    return CountSeq(tuple(r), Method.ROOK, b.n)


def stirling_rook(w: DyckWord) -> CountSeq:
    r = rook_numbers(board_above(w)).values
    return CountSeq(tuple(reversed(r)), Method.ROOK, w.n)


# -- route 4: matchings ----------------------------------------------------------------


def _poly_add_shifted(acc: list[int], p: list[int], shift: int) -> None:
    need = len(p) + shift
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for i, c in enumerate(p):
        acc[i + shift] += c


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _adjacency(edges: Iterable[tuple[int, int]]) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return adj


def _components(adj: dict[int, set[int]]) -> list[set[int]]:
    seen: set[int] = set()
    out = []
    for s in adj:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            for x in adj[stack.pop()]:
                if x not in comp:
                    comp.add(x)
                    stack.append(x)
        seen |= comp
        out.append(comp)
    return out


def _chain_key(adj: dict[int, set[int]], left: set[int]):
    # left neighbourhoods nested => graph determined up to isomorphism by their sizes
    hoods = sorted((adj[u] for u in left), key=len)
    for small, big in zip(hoods, hoods[1:]):
        if not small <= big:
            return None
    return ("chain", tuple(len(h) for h in hoods))


class _Matcher:
    """Matching generating polynomial by the edge recursion, memoised.

    ``m(G) = m(G - e) + t m(G - u - v)`` is applied to every edge at a
    minimum-degree vertex ``u`` in turn; the deletion branch ends at ``G - u``.
    On a chain graph the shortest column meets every row of every other
    column, so all ``G - u - v`` branches coincide up to isomorphism.  Components are multiplied.  Results
    are cached on the exact edge set, or for bipartite chain graphs (every
    Ferrers-board graph) on their sorted degree sequence.
    """

    def __init__(self, left: set[int] | None):
        self.left = left
        self.memo: dict = {}

    def key(self, edges: frozenset, adj: dict[int, set[int]]):
        if self.left is not None:
            ck = _chain_key(adj, {u for u in adj if u in self.left})
            if ck is not None:
                return ck
        return edges

    def poly(self, edges: frozenset) -> list[int]:
        if not edges:
            return [1]
        adj = _adjacency(edges)
        comps = _components(adj)
        if len(comps) > 1:
            out = [1]
            for comp in comps:
                out = _poly_mul(out, self.poly(frozenset(e for e in edges if e[0] in comp)))
            return out
        key = self.key(edges, adj)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if len(edges) == 1:
            out = [1, 1]
        else:
            u = min(adj, key=lambda a: (len(adj[a]), a))
            out = list(self.poly(frozenset(e for e in edges if u not in e)))
            for v in sorted(adj[u], key=lambda b: (len(adj[b]), b)):
                rest = frozenset(e for e in edges if u not in e and v not in e)
                _poly_add_shifted(out, self.poly(rest), 1)
        self.memo[key] = out
        return out


def matching_numbers(g: BipartiteGraph | Graph, cap: int | None = None) -> CountSeq:
    """Matching counts ``m_0, m_1, ...`` of ``g``.

    For a bipartite graph the sequence runs to ``min(|X|, |Y|)``; for a
    general graph to ``floor(|V| / 2)``.
    """
    if cap is None:
        cap = active_caps().matching_edges
    if isinstance(g, BipartiteGraph):
        # left vertex i -> 2i, right vertex j -> 2j + 1
        edges = frozenset((2 * i, 2 * j + 1) for i, j in g.edges)
        left = {2 * i for i in g.left}
        size = min(len(g.left), len(g.right))
    else:
        edges = g.edges
        left = None
        size = g.n_vertices // 2
    if len(edges) > cap:
        raise TooLarge(f"matching recursion on {len(edges)} edges exceeds cap {cap}")
    p = _Matcher(left).poly(edges)
    p = p + [0] * (size + 1 - len(p))
    if len(p) > size + 1:
        raise InternalInconsistency(f"matching of size {len(p) - 1} in a graph allowing {size}")
    return CountSeq(tuple(p), Method.MATCHING, size)


def stirling_matching(w: DyckWord, cap: int | None = None) -> CountSeq:
    stripped, _, _ = strip_isolated(word_to_bipartite(w))
    m = matching_numbers(stripped, cap)
    n = w.n
    return CountSeq(tuple(m[n - k] for k in range(n + 1)), Method.MATCHING, n)


# -- route 5: chromatic polynomial ------------------------------------------------------


def stirling_from_chromatic(p: Polynomial, n: int) -> CountSeq:
    """Invert a chromatic polynomial by inclusion-exclusion over colour sets.

    ``S(k) = (1/k!) sum_i (-1)^i C(k, i) p(k - i)``; the division must be exact.
    """
    vals = [p(j) for j in range(n + 1)]
    out = []
    for k in range(n + 1):
        acc = 0
        for i in range(k + 1):
            term = comb(k, i) * vals[k - i]
            acc += -term if i & 1 else term
        q, r = divmod(acc, factorial(k))
        if r:
            raise NonIntegralResult(f"inclusion-exclusion sum at k={k} is not divisible by {k}!")
        if q < 0:
            raise NegativeResult(f"negative count {q} at k={k}")
        out.append(q)
    return CountSeq(tuple(out), Method.CHROMATIC, n)


def chromatic_from_stirling(s: CountSeq | Sequence[int]) -> Polynomial:
    """``sum_k s[k] q (q - 1) ... (q - k + 1)``."""
    values = s.values if isinstance(s, CountSeq) else tuple(s)
    acc = [0] * len(values)
    falling = [1]
    for k, a in enumerate(values):
        if a:
            for i, c in enumerate(falling):
                acc[i] += a * c
        # falling *= (q - k)
        nxt = [0] * (len(falling) + 1)
        for i, c in enumerate(falling):
            nxt[i + 1] += c
            nxt[i] -= k * c
        falling = nxt
    return Polynomial(acc)


# -- cross-checking -------------------------------------------------------------------------

ROUTES = ("enumerate", "enumerate_clique_union", "weyl", "rook", "matching", "chromatic")


@dataclass
class CrossCheckReport:
    word: str
    sequences: dict[str, CountSeq]
    skipped: dict[str, str]
    divergence: tuple[str, int] | None

    @property
    def agree(self) -> bool:
        return self.divergence is None

    @property
    def reference(self) -> CountSeq:
        return self.sequences["rook"]

    def to_dict(self) -> dict:
        return {
            "word": self.word,
            "agree": self.agree,
            "values": [str(v) for v in self.reference.values],
            "methods": sorted(self.sequences),
            "skipped": dict(self.skipped),
            "divergence": list(self.divergence) if self.divergence else None,
        }


def cross_check(w: DyckWord) -> CrossCheckReport:
    """Run every route on ``w`` and report the first ``(route, k)`` disagreement.

    Routes over their size cap are skipped and listed in ``skipped``.  The rook
    route is the reference and is never skipped.
    """
    g, decomposition = word_to_graph(w)
    runners = {
        "enumerate": lambda: stirling_enumerate(g),
        "enumerate_clique_union": lambda: stirling_enumerate(word_to_clique_union(w)),
        "weyl": lambda: stirling_weyl(w),
        "rook": lambda: stirling_rook(w),
        "matching": lambda: stirling_matching(w),
        "chromatic": lambda: stirling_from_chromatic(chromatic_polynomial(decomposition), w.n),
    }
    sequences: dict[str, CountSeq] = {}
    skipped: dict[str, str] = {}
    for name in ROUTES:
        try:
            sequences[name] = runners[name]()
        except TooLarge as exc:
            skipped[name] = str(exc)
    ref = sequences["rook"].values
    divergence = None
    for name in ROUTES:
        seq = sequences.get(name)
        if seq is None:
            continue
        if seq.values != ref:
            k = next(i for i, (a, b) in enumerate(zip(seq.values, ref)) if a != b)
            divergence = (name, k)
            break
    return CrossCheckReport(w.symbols, sequences, skipped, divergence)
