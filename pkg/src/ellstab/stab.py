"""The quaternionic order W<T>/(T^2 = -2, aT = T a^sigma) and its unit group.

Elements are pairs a + bT with Witt-vector coordinates.  T-adic digits use
the left-coefficient convention gamma = sum tau(d_i) T^i; each division by
T costs half a 2-adic digit of precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .coeff import Mod2k, NonUnit, WittElem, sqrt_minus7, ZETA
from .fgl import curve_c, solve_w, neg_series
from .wseries import F4Series, F4Series2, f4series_from_trunc, f4series2_from_trunc
from . import series as _series


class InsufficientPrecision(ValueError):
    pass


class NotDivisible(ArithmeticError):
    pass


@dataclass(frozen=True)
class StabElem:
    a: WittElem
    b: WittElem

    def __post_init__(self):
        if self.a.n != self.b.n:
            raise ValueError("coordinate precisions differ")

    @property
    def n(self):
        return self.a.n

    @staticmethod
    def from_witt(w: WittElem) -> "StabElem":
        return StabElem(w, WittElem(0, 0, w.n))

    @staticmethod
    def one(n: int) -> "StabElem":
        return StabElem(WittElem(1, 0, n), WittElem(0, 0, n))

    def __mul__(self, other: "StabElem") -> "StabElem":
        # (a + bT)(c + dT) = (ac - 2 b d^sigma) + (ad + b c^sigma) T
        a, b, c, d = self.a, self.b, other.a, other.b
        return StabElem(a * c - (b * d.frobenius()).times2(),
                        a * d + b * c.frobenius())

    def __add__(self, other):
        return StabElem(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return StabElem(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return StabElem(-self.a, -self.b)

    def galois(self) -> "StabElem":
        """The Galois twist a + bT -> a^sigma + b^sigma T."""
        return StabElem(self.a.frobenius(), self.b.frobenius())

    def conjugate(self) -> "StabElem":
        """a^sigma - bT; x * conjugate(x) = det(x)."""
        return StabElem(self.a.frobenius(), -self.b)

    def det(self) -> Mod2k:
        d = self.a.det_form()
        e = self.b.det_form()
        return Mod2k(d.value + 2 * e.value, self.n)

    def is_unit(self) -> bool:
        return self.a.is_unit()

    def inv(self) -> "StabElem":
        if not self.is_unit():
            raise NonUnit("a-coordinate reduces to zero mod 2")
        s = self.det().inv().value
        c = self.conjugate()
        def sc(w):
            return WittElem(w.a * s, w.b * s, w.n)
        return StabElem(sc(c.a), sc(c.b))

    def is_norm_one(self) -> bool:
        d = self.det().value
        return d == 1 or d == (1 << self.n) - 1

    def __pow__(self, k: int) -> "StabElem":
        if k < 0:
            return self.inv() ** (-k)
        out = StabElem.one(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def truncate(self, n: int) -> "StabElem":
        return StabElem(self.a.truncate(n), self.b.truncate(n))


def t_digits(gamma: StabElem, count: int) -> list:
    """First `count` left T-digits of gamma, as F4 elements."""
    n = gamma.n
    if n < (count + 1) // 2 + 1:
        raise InsufficientPrecision(
            f"need 2-adic precision >= {(count + 1) // 2 + 1} for {count} digits")
    # coordinate precisions shrink as T divisions accumulate
    a, b = gamma.a, gamma.b
    pa, pb = n, n
    digits = []
    for _ in range(count):
        if pa < 1:
            raise InsufficientPrecision("ran out of 2-adic precision")
        d = a.reduce_mod2()
        digits.append(d)
        t = WittElem.teichmuller(d, a.n)
        c = a - t
        if (c.a & 1) or (c.b & 1):
            raise NotDivisible("digit subtraction left an odd coordinate")
        # right division: gamma - tau(d) = gamma' * T with gamma' = b + (-c/2) T,
        # which keeps the left-coefficient expansion gamma = sum tau(d_i) T^i
        new_a = b
        new_b = WittElem((-c.a) // 2, (-c.b) // 2, a.n)
        a, b = new_a, new_b
        pa, pb = pb, pa - 1
    return digits


def from_t_digits(digits, n: int) -> StabElem:
    """sum tau(d_i) T^i at precision n."""
    a = WittElem(0, 0, n)
    b = WittElem(0, 0, n)
    p = WittElem(1, 0, n)  # (-2)^k
    for k in range(0, len(digits), 2):
        a = a + WittElem.teichmuller(digits[k], n) * p
        if k + 1 < len(digits):
            b = b + WittElem.teichmuller(digits[k + 1], n) * p
        p = p.times2()
        p = -p
    return StabElem(a, b)


def filtration_level(gamma: StabElem, max_digits: int | None = None) -> Fraction:
    """Largest n/2 with gamma = 1 mod T^n; 0 for units with a0 != 1."""
    count = max_digits if max_digits is not None else 2 * gamma.n - 3
    digits = t_digits(gamma, count)
    if digits[0] != 1:
        return Fraction(0)
    for i in range(1, count):
        if digits[i] != 0:
            return Fraction(i, 2)
    raise InsufficientPrecision("all computable digits vanish")


# ---------------------------------------------------------------------------
# Named elements
# ---------------------------------------------------------------------------

def omega(n: int) -> StabElem:
    return StabElem.from_witt(WittElem.zeta(n))


def pi_elem(n: int) -> StabElem:
    """pi = 1 + 2*omega, of determinant 3."""
    z = WittElem.zeta(n)
    return StabElem.from_witt(WittElem(1, 0, n) + z.times2())


@lru_cache(maxsize=None)
def alpha_pin() -> int:
    """The branch of sqrt(-7) making alpha = (1 - 2 omega)/sqrt(-7) start (1, 0, omega)."""
    n = 12
    for pin in (3, 5):
        z = WittElem.zeta(n)
        cand = (WittElem(1, 0, n) - z.times2()) * sqrt_minus7(n, pin).inv()
        d = t_digits(StabElem.from_witt(cand), 5)
        if d[0] == 1 and d[1] == 0 and d[2] == ZETA:
            return pin
    raise AssertionError("no branch of sqrt(-7) gives the expected digit expansion")


def alpha(n: int) -> StabElem:
    z = WittElem.zeta(n)
    w = (WittElem(1, 0, n) - z.times2()) * sqrt_minus7(n, alpha_pin()).inv()
    return StabElem.from_witt(w)


# ---------------------------------------------------------------------------
# Endomorphism power series of F_C mod 2
# ---------------------------------------------------------------------------

@lru_cache(maxsize=8)
def fc_fgl_numpy(cap: int):
    """(w, neg, F) of the supersingular curve over F4 at total-degree cap, array-backed.

    Built two degrees past the cap so the degree-lowering steps stay exact.
    """
    capx = cap + 2
    curve = curve_c()
    w = solve_w(curve, capx)
    neg = neg_series(curve, capx)
    lam = _series.divided_difference(w)
    lam_np = f4series2_from_trunc(lam)
    lam2 = lam_np * lam_np
    negsum = lam2  # a1 = 0, a3 = 1, and signs vanish mod 2
    negsum.set(1, 0, negsum.get(1, 0) ^ 1)
    negsum.set(0, 1, negsum.get(0, 1) ^ 1)
    F = negsum.compose_outer_sparse(f4series_from_trunc(neg))
    Ft = F4Series2(F.a[:cap, :cap].copy())._trim()
    wt = F4Series(f4series_from_trunc(w).a[:cap].copy())
    negt = F4Series(f4series_from_trunc(neg).a[:cap].copy())
    return wt, negt, Ft


def fc_formal_sum(terms, cap: int) -> F4Series:
    """Left fold of F_C over (f4_coeff, F4Series) pairs."""
    _, _, F = fc_fgl_numpy(cap)
    out = None
    for coeff, s in terms:
        t = s.scale(coeff)
        out = t if out is None else F.substitute(out, t)
    return out if out is not None else F4Series.zero(cap)


def to_power_series(gamma: StabElem, cap: int, digits=None) -> F4Series:
    """gamma as an endomorphism of F_C mod 2: sum_F tau(d_i) x^(2^i)."""
    count = 1
    while (1 << count) < cap:
        count += 1
    if digits is None:
        need = count + 1
        g = gamma
        if gamma.n < (need + 1) // 2 + 1:
            raise InsufficientPrecision(
                f"need precision {(need + 1) // 2 + 1} to expand {need} digits")
        digits = t_digits(g, need)
    terms = []
    for i, d in enumerate(digits):
        if (1 << i) >= cap:
            break
        if d:
            terms.append((d, F4Series.monomial(cap, 1 << i)))
    return fc_formal_sum(terms, cap)


def digit_series(digits, cap: int) -> F4Series:
    """Endomorphism series from explicit digits (index i scales x^(2^i))."""
    terms = []
    for i, d in enumerate(digits):
        if (1 << i) >= cap:
            break
        if d:
            terms.append((d, F4Series.monomial(cap, 1 << i)))
    return fc_formal_sum(terms, cap)
