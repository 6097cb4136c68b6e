"""Finite-scale normality diagnostics for count sequences.

A nonnegative sequence ``a_k`` is read as the law ``P(X = k) = a_k / sum a``.
The module reports its exact mean and variance, the Kolmogorov distance from
the standardised law to the standard normal, an exact real-rootedness verdict
for ``sum a_k x^k`` (Sturm sequences over the integers), Newton's
inequalities, and the order / matching-number data of the stripped bipartite
graph of a Dyck word.
"""

from __future__ import annotations

import enum
import json
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .caps import active_caps
from .counting import CountSeq, matching_numbers
from .dyck import DyckWord
from .errors import DegenerateDistribution, EmptySequence, InternalInconsistency, TooLarge
from .graphs import chromatic_number, strip_isolated, word_to_bipartite, word_to_graph

__all__ = [
    "HistogramStats",
    "RootStatus",
    "RootVerdict",
    "NormalityReport",
    "KahnCheck",
    "histogram_stats",
    "kolmogorov_distance",
    "real_rooted",
    "sturm_real_root_count",
    "newton_inequalities",
    "kahn_check",
    "normality_report",
    "WORKING_DPS",
]

# decimal digits carried by the Kolmogorov computation
WORKING_DPS = 40


def _values(s: CountSeq | Sequence[int]) -> tuple[int, ...]:
    vals = s.values if isinstance(s, CountSeq) else tuple(int(v) for v in s)
    if any(v < 0 for v in vals):
        raise ValueError("count sequences are nonnegative")
    if not any(vals):
        raise EmptySequence("sequence has no positive entry")
    return vals


def _fraction_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True)
class HistogramStats:
    total: int
    mean: Fraction
    variance: Fraction

    def to_dict(self) -> dict:
        return {"total": str(self.total), "mean": _fraction_str(self.mean), "variance": _fraction_str(self.variance)}


def histogram_stats(s: CountSeq | Sequence[int]) -> HistogramStats:
    vals = _values(s)
    total = sum(vals)
    first = sum(k * a for k, a in enumerate(vals))
    second = sum(k * k * a for k, a in enumerate(vals))
    mean = Fraction(first, total)
    return HistogramStats(total, mean, Fraction(second, total) - mean * mean)


def kolmogorov_distance(s: CountSeq | Sequence[int]) -> mpmath.mpf:
    """Sup distance between the standardised CDF of ``s`` and the normal CDF.

    A step CDF against a continuous one peaks at a jump, so it suffices to
    compare both one-sided limits at every atom.  Masses are formed from exact
    integer partial sums and the whole computation runs at ``WORKING_DPS``
    decimal digits; the normal CDF is ``erfc(-x / sqrt 2) / 2`` from mpmath.
    """
    vals = _values(s)
    stats = histogram_stats(vals)
    if stats.variance == 0:
        raise DegenerateDistribution("point mass: standard deviation is zero")
    mu = stats.mean
    total = stats.total
    with mpmath.workdps(WORKING_DPS):
        sigma = mpmath.sqrt(mpmath.mpf(stats.variance.numerator) / stats.variance.denominator)
        best = mpmath.mpf(0)
        cum = 0
        for k, a in enumerate(vals):
            if not a:
                continue
            z = k - mu
            x = mpmath.mpf(z.numerator) / z.denominator / sigma
            phi = mpmath.ncdf(x)
            before = mpmath.mpf(cum) / total
            cum += a
            after = mpmath.mpf(cum) / total
            best = max(best, abs(before - phi), abs(after - phi))
        return +best


# -- exact real-rootedness --------------------------------------------------------


try:
    from gmpy2 import gcd, mpz as _big
except ImportError:  # pragma: no cover - gmpy2 only speeds up the big-integer work
    from math import gcd

    _big = int


def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _primitive(p: list[int]) -> list[int]:
    g = 0
    for c in p:
        g = gcd(g, c)
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def _prem(a: list[int], b: list[int]) -> list[int]:
    """``lc(b)^(deg a - deg b + 1) * (a mod b)``, all in integers."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    steps = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        r.pop()
        steps -= 1
        _trim(r)
    if steps:
        r = [c * lb**steps for c in r]
    return r


def _derivative(p: list[int]) -> list[int]:
    return [i * c for i, c in enumerate(p)][1:]


def _exact_div(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for shift in range(len(q) - 1, -1, -1):
        c, rem = divmod(a[shift + len(b) - 1], b[-1])
        if rem:
            raise InternalInconsistency("inexact polynomial division")
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
    if any(a):
        raise InternalInconsistency("inexact polynomial division")
    return q


def _sign_changes(signs: list[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for x, y in zip(nz, nz[1:]) if x != y)


def _sign(c: int) -> int:
    return (c > 0) - (c < 0)


def _sturm_chain(p: list[int]) -> list[list[int]]:
    """Sturm chain of ``p`` up to positive scalings of its members.

    Members come from the subresultant remainder sequence, whose exact
    divisors keep coefficient growth linear; each member's sign is then
    fixed so that it is a positive multiple of minus the true remainder.
    The last member is ``gcd(p, p')`` up to a positive constant.
    """
    chain = [p, _derivative(p)]
    prev_delta = None
    psi = -1
    while True:
        a, b = chain[-2], chain[-1]
        delta = len(a) - len(b)
        if prev_delta is None:
            beta = (-1) ** (delta + 1)
        else:
            if prev_delta > 0:
                psi = (-a[-1]) ** prev_delta // psi ** (prev_delta - 1)
            beta = -a[-1] * psi**delta
        r = _prem(a, b)
        if not r:
            return chain
        q = []
        for c in r:
            c, rem = divmod(c, beta)
            if rem:
                raise InternalInconsistency("subresultant division left a remainder")
            q.append(c)
        # r is lc(b)^(delta+1) times (a mod b); pick the sign making q a positive multiple of -(a mod b)
        if _sign(b[-1]) ** (delta + 1) * _sign(beta) > 0:
            q = [-c for c in q]
        chain.append(q)
        prev_delta = delta


def _count_from_chain(chain: list[list[int]], upper_zero: bool) -> int:
    at_minus_inf = [_sign(q[-1]) * (-1) ** (len(q) - 1) for q in chain]
    if upper_zero:
        at_end = [_sign(q[0]) for q in chain]
    else:
        at_end = [_sign(q[-1]) for q in chain]
    return _sign_changes(at_minus_inf) - _sign_changes(at_end)


def sturm_real_root_count(p: Sequence[int], upper_zero: bool = False) -> int:
    """Distinct real roots of the integer polynomial ``p`` (low to high coefficients).

    Counts over the whole line, or over ``(-inf, 0]`` when ``upper_zero``.
    """
    p = _trim([_big(c) for c in p])
    if len(p) <= 1:
        return 0
    lo = next(i for i, c in enumerate(p) if c)
    p = p[lo:]  # a root at 0 would vanish along the whole chain when repeated
    at_zero = 1 if lo else 0
    if len(p) == 1:
        return at_zero
    return _count_from_chain(_sturm_chain(p), upper_zero) + at_zero


class RootStatus(str, enum.Enum):
    VERIFIED = "verified"
    REFUTED = "refuted"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class RootVerdict:
    status: RootStatus
    distinct_real_roots: int | None
    squarefree_degree: int | None


def real_rooted(s: CountSeq | Sequence[int], cap: int | None = None) -> RootVerdict:
    """Exact check that ``sum s[k] x^k`` has only real zeros.

    Powers of ``x`` are divided out and a Sturm chain is built by integer
    pseudo-division; its last member is ``gcd(p, p')``.  If that gcd is not
    constant the chain is rebuilt for the squarefree part ``p / gcd``.  Roots
    on ``(-inf, 0]`` are then counted by Sturm's theorem.  Nonnegative coefficients rule out positive
    roots, so the polynomial is real-rooted exactly when that count equals
    the squarefree degree.  Degrees above ``cap`` are skipped.
    """
    vals = list(_values(s))
    if cap is None:
        cap = active_caps().real_root_degree
    lo = next(i for i, v in enumerate(vals) if v)
    p = _trim(vals[lo:])
    if len(p) - 1 > cap:
        return RootVerdict(RootStatus.SKIPPED, None, None)
    if len(p) == 1:
        return RootVerdict(RootStatus.VERIFIED, 0, 0)
    p = [_big(c) for c in p]
    chain = _sturm_chain(p)
    g = chain[-1]
    if len(g) > 1:
        # repeated roots: restart on the squarefree part p / gcd(p, p')
        p = _exact_div(p, _primitive(g))
        chain = _sturm_chain(p) if len(p) > 1 else [p]
    count = _count_from_chain(chain, upper_zero=True)
    deg = len(p) - 1
    status = RootStatus.VERIFIED if count == deg else RootStatus.REFUTED
    return RootVerdict(status, count, deg)


def newton_inequalities(s: CountSeq | Sequence[int]) -> bool:
    """Newton's inequalities on the support of ``s``.

    With the support shifted to ``0..d``, checks
    ``a_j^2 >= a_{j-1} a_{j+1} (1 + 1/j)(1 + 1/(d - j))`` for ``0 < j < d``,
    which every real-rooted nonnegative sequence satisfies.
    """
    vals = _values(s)
    nz = [k for k, v in enumerate(vals) if v]
    a = vals[nz[0] : nz[-1] + 1]
    d = len(a) - 1
    for j in range(1, d):
        if a[j] * a[j] * j * (d - j) < a[j - 1] * a[j + 1] * (j + 1) * (d - j + 1):
            return False
    return True


# -- matching data of the stripped bipartite graph ------------------------------------


@dataclass(frozen=True)
class KahnCheck:
    """Order and matching number of the bipartite graph of a Dyck word, isolated vertices removed.

    ``nu`` is derived as ``f - chi``; ``nu_matching`` is the largest ``k`` with
    ``m_k > 0`` from the matching recursion, or ``None`` when it was not run.
    ``ratio`` is ``2 nu / v`` and ``None`` when ``v = 0``.
    """

    f: int
    ell: int
    m: int
    chi: int
    v: int
    nu: int
    ratio: Fraction | None
    g: Fraction
    nu_matching: int | None = None

    @property
    def degenerate(self) -> bool:
        return self.v == 0

    def to_dict(self) -> dict:
        return {
            "f": self.f,
            "ell": self.ell,
            "m": self.m,
            "chi": self.chi,
            "v": self.v,
            "nu": self.nu,
            "ratio": None if self.ratio is None else _fraction_str(self.ratio),
            "g": _fraction_str(self.g),
            "nu_matching": self.nu_matching,
        }


def kahn_check(w: DyckWord, matching_oracle_max_n: int = 20) -> KahnCheck:
    """Compute ``v = 2f - ell - m`` and ``nu = f - chi`` and verify their bounds.

    Raises :class:`InternalInconsistency` when ``2f - 2chi <= v <= 2f`` or
    ``ell, m <= chi`` fails, when the stripped graph does not have order
    ``v``, or when the matching recursion (run for ``w.n <=
    matching_oracle_max_n``) disagrees with ``nu``.
    """
    f = w.n
    _, decomposition = word_to_graph(w)
    chi = chromatic_number(decomposition)
    stripped, ell, m = strip_isolated(word_to_bipartite(w))
    v = 2 * f - ell - m
    nu = f - chi
    if stripped.order != v:
        raise InternalInconsistency(f"stripped graph has order {stripped.order}, expected {v}")
    if not 2 * f - 2 * chi <= v <= 2 * f:
        raise InternalInconsistency(f"order {v} outside [{2 * f - 2 * chi}, {2 * f}]")
    if ell > chi or m > chi:
        raise InternalInconsistency(f"isolated runs ell={ell}, m={m} exceed chromatic number {chi}")
    nu_matching = None
    if f <= matching_oracle_max_n:
        try:
            seq = matching_numbers(stripped)
        except TooLarge:
            seq = None
        if seq is not None:
            nu_matching = max(k for k, c in enumerate(seq.values) if c)
            if nu_matching != nu:
                raise InternalInconsistency(f"matching number {nu_matching} but f - chi = {nu}")
    ratio = Fraction(2 * nu, v) if v else None
    return KahnCheck(f, ell, m, chi, v, nu, ratio, Fraction(chi, f), nu_matching)


@dataclass(frozen=True)
class NormalityReport:
    stats: HistogramStats
    kolmogorov: mpmath.mpf | None
    real_rooted: RootVerdict
    newton_ok: bool

    @property
    def degenerate(self) -> bool:
        return self.kolmogorov is None

    def to_dict(self) -> dict:
        out = self.stats.to_dict()
        out.update(
            {
                "kolmogorov": None if self.kolmogorov is None else float(self.kolmogorov),
                "degenerate": self.degenerate,
                "real_rooted": self.real_rooted.status.value,
                "distinct_real_roots": self.real_rooted.distinct_real_roots,
                "newton_ok": self.newton_ok,
            }
        )
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def normality_report(s: CountSeq | Sequence[int], root_cap: int | None = None) -> NormalityReport:
    stats = histogram_stats(s)
    try:
        dist = kolmogorov_distance(s)
    except DegenerateDistribution:
        dist = None
    return NormalityReport(stats, dist, real_rooted(s, root_cap), newton_inequalities(s))
