"""Dense integer polynomials in one variable."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial; ``coeffs[i]`` is the coefficient of ``q**i``.

    Trailing zero coefficients are dropped on construction, so the zero
    polynomial has ``coeffs == ()``.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> Polynomial:
        return cls([0] * power + [coeff])

    @classmethod
    def falling_factorial(cls, k: int) -> Polynomial:
        """``q (q - 1) ... (q - k + 1)``."""
        p = cls([1])
        for j in range(k):
            p = p * cls([-j, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, q):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * q + a
        return acc

    def __add__(self, other: Polynomial) -> Polynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> Polynomial:
        return Polynomial([-a for a in self.coeffs])

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial([a * other for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        out = Polynomial([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, a: int) -> Polynomial:
        """Return ``p(q + a)``."""
        c = self.coeffs
        out = [0] * len(c)
        for i, ci in enumerate(c):
            if ci:
                # (q + a)^i
                for j in range(i + 1):
                    out[j] += ci * comb(i, j) * a ** (i - j)
        return Polynomial(out)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if not a:
                continue
            mag = abs(a)
            if i == 0:
                body = str(mag)
            else:
                var = "q" if i == 1 else f"q^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            sign = "-" if a < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s
