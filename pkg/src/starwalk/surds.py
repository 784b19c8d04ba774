"""Exact integer and quadratic-surd arithmetic for the transfer criteria.

The state-transfer dichotomies reduce to questions about integers (is 4k+1 a
perfect square?) and about quadratic irrationals (is an eigenvalue ratio
rational? how well is it approximated by odd fractions?).  Everything here is
exact: surds are kept in the normal form a + b*sqrt(d) with rational a, b and
squarefree d, and continued fractions of surds run the classical integer
state machine, so convergent denominators can grow far beyond float range
without drift.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
import math

__all__ = [
    "QuadraticSurd",
    "is_perfect_square",
    "pendant_ratio_is_rational",
    "continued_fraction_convergents",
    "double_star_params",
]

MAX_CONVERGENTS = 64


def is_perfect_square(m: int) -> tuple[bool, int | None]:
    """Exact perfect-square test; returns (True, root) or (False, None)."""
    if m < 0:
        raise ValueError(f"expected a nonnegative integer, got {m}")
    r = isqrt(m)
    return (True, r) if r * r == m else (False, None)


def _squarefree_split(d: int) -> tuple[int, int]:
    """d = s*s*d0 with d0 squarefree; returns (s, d0)."""
    s, d0 = 1, 1
    m = d
    f = 2
    while f * f <= m:
        if m % f == 0:
            e = 0
            while m % f == 0:
                m //= f
                e += 1
            s *= f ** (e // 2)
            d0 *= f ** (e % 2)
        f += 1
    return s, d0 * m


@dataclass(frozen=True)
class QuadraticSurd:
    """Exact value a + b*sqrt(d) with rational a, b and squarefree (or zero) d."""

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        a, b, d = Fraction(self.a), Fraction(self.b), int(self.d)
        if d < 0:
            raise ValueError(f"radicand must be nonnegative, got {d}")
        if d == 0 or b == 0:
            # sqrt(0) = 0, and b = 0 kills the radical either way
            b, d = Fraction(0), 0
        else:
            s, d0 = _squarefree_split(d)
            if d0 == 1:
                a, b, d = a + b * s, Fraction(0), 0
            else:
                b, d = b * s, d0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    @property
    def is_rational(self) -> bool:
        return self.d == 0

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.a, -self.b, self.d)

    def _coerce(self, other):
        if isinstance(other, QuadraticSurd):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticSurd(Fraction(other), Fraction(0), 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.d and o.d and self.d != o.d:
            raise ValueError(f"incompatible radicands {self.d} and {o.d}")
        return QuadraticSurd(self.a + o.a, self.b + o.b, self.d or o.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.d and o.d and self.d != o.d:
            raise ValueError(f"incompatible radicands {self.d} and {o.d}")
        d = self.d or o.d
        a = self.a * o.a + self.b * o.b * d
        b = self.a * o.b + self.b * o.a
        return QuadraticSurd(a, b, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        norm = o.a * o.a - o.b * o.b * (o.d or 0)
        if norm == 0:
            raise ZeroDivisionError("division by zero surd")
        return self * QuadraticSurd(o.a / norm, -o.b / norm, o.d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o / self

    def _sign(self) -> int:
        if self.b == 0:
            return (self.a > 0) - (self.a < 0)
        if self.a == 0:
            return 1 if self.b > 0 else -1
        if self.a > 0 and self.b > 0:
            return 1
        if self.a < 0 and self.b < 0:
            return -1
        # opposite signs: |a| vs |b| sqrt(d), exact via squaring
        if self.a * self.a > self.b * self.b * self.d:
            return 1 if self.a > 0 else -1
        return 1 if self.b > 0 else -1

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.a, self.b, self.d) == (o.a, o.b, o.d)

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o)._sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o)._sign() <= 0

    def __gt__(self, other):
        return not self <= other

    def __ge__(self, other):
        return not self < other

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def floor(self) -> int:
        n = math.floor(float(self))
        while self < n:
            n -= 1
        while self >= n + 1:
            n += 1
        return n

    def __repr__(self):
        if self.d == 0:
            return f"QuadraticSurd({self.a})"
        return f"QuadraticSurd({self.a} + {self.b}*sqrt({self.d}))"


def _rational_convergents(x: Fraction, count: int) -> list[tuple[int, int]]:
    p, q = x.numerator, x.denominator
    hm1, hm2, km1, km2 = 1, 0, 0, 1
    out = []
    while q != 0 and len(out) < count:
        a, r = divmod(p, q)
        h, k = a * hm1 + hm2, a * km1 + km2
        out.append((h, k))
        hm2, hm1, km2, km1 = hm1, h, km1, k
        p, q = q, r
    return out


def _le_surd_int(n: int, P: int, D: int, Q: int) -> bool:
    """n <= (P + sqrt(D)) / Q, exactly (D positive non-square)."""
    t = n * Q - P
    if Q > 0:
        return t <= 0 or t * t <= D
    return t >= 0 and t * t >= D


def _floor_quadratic(P: int, D: int, Q: int) -> int:
    s = isqrt(D)
    if Q > 0:
        return (P + s) // Q
    n = (P + s) // Q
    while not _le_surd_int(n, P, D, Q):
        n -= 1
    while _le_surd_int(n + 1, P, D, Q):
        n += 1
    return n


def _surd_convergents(x: QuadraticSurd, count: int) -> list[tuple[int, int]]:
    # represent x = (P + sqrt(D)) / Q with integer state, Q | D - P^2
    pa, qa = x.a.numerator, x.a.denominator
    pb, qb = x.b.numerator, x.b.denominator
    P = pa * qb
    Q = qa * qb
    S = pb * qa
    D = S * S * x.d
    if S < 0:
        P, Q = -P, -Q
    if (D - P * P) % Q != 0:
        P *= abs(Q)
        D *= Q * Q
        Q *= abs(Q)
    hm1, hm2, km1, km2 = 1, 0, 0, 1
    out = []
    for _ in range(count):
        a = _floor_quadratic(P, D, Q)
        h, k = a * hm1 + hm2, a * km1 + km2
        out.append((h, k))
        hm2, hm1, km2, km1 = hm1, h, km1, k
        P = a * Q - P
        Q = (D - P * P) // Q
    return out


def continued_fraction_convergents(x, count: int) -> list[tuple[int, int]]:
    """First ``count`` continued-fraction convergents (p, q) of x > 0.

    x may be a QuadraticSurd, a Fraction, an int, or a float (floats expand
    their exact binary value, so the expansion terminates).  For rational x
    the list stops early at the exact value.  Every convergent satisfies
    |x - p/q| < 1/q^2.
    """
    if not (1 <= count <= MAX_CONVERGENTS):
        raise ValueError(f"count must be in 1..{MAX_CONVERGENTS}, got {count}")
    if isinstance(x, QuadraticSurd) and not x.is_rational:
        if x._sign() <= 0:
            raise ValueError("x must be positive")
        return _surd_convergents(x, count)
    if isinstance(x, QuadraticSurd):
        x = x.a
    frac = Fraction(x)
    if frac <= 0:
        raise ValueError("x must be positive")
    return _rational_convergents(frac, count)


def pendant_ratio_is_rational(l: int) -> bool:
    """Whether the two nonzero eigenvalue magnitudes of the 5-cell quotient of
    double_star(2, l) have a rational ratio.

    The squared ratio lies in Q(sqrt(l^2 - 2l + 9)), so the ratio is rational
    exactly when l^2 - 2l + 9 is a perfect square, which happens only at l=2.
    """
    if l < 1:
        raise ValueError(f"expected l >= 1, got {l}")
    ok, _ = is_perfect_square(l * l - 2 * l + 9)
    return ok


def double_star_params(k: int) -> tuple[QuadraticSurd, QuadraticSurd]:
    """Exact closed-form parameters (alpha, beta) for double_star(k, k).

    alpha = (1 + sqrt(4k+1))/2 is the top quotient eigenvalue and beta the
    spectral weight in the center-to-center amplitude
    (1 - 2 beta) sin(alpha t) + 2 beta sin((1 - alpha) t).  When 4k+1 is a
    perfect square both collapse to rationals.
    """
    if k < 1:
        raise ValueError(f"expected k >= 1, got {k}")
    delta = 4 * k + 1
    alpha = QuadraticSurd(Fraction(1, 2), Fraction(1, 2), delta)
    # k / (delta + sqrt(delta)) rationalized
    beta = QuadraticSurd(Fraction(1, 4), Fraction(-1, 4 * delta), delta)
    return alpha, beta
