"""Base coefficient rings: Z/2^N, the field F4, and truncated Witt vectors W(F4)/2^N.

W(F4) is realized as Z_2[zeta] on the basis {1, zeta} with zeta^2 = -1 - zeta,
so every element is a pair of 2-adic integers held at a fixed precision N.
Precision is value-level: mixing precisions in a binary operation raises
instead of silently truncating.
"""

from __future__ import annotations

from dataclasses import dataclass


class PrecisionMismatch(ValueError):
    pass


class NonUnit(ValueError):
    pass


class NoSquareRoot(ValueError):
    pass


class BadPin(ValueError):
    pass


# ---------------------------------------------------------------------------
# F4
# ---------------------------------------------------------------------------

# Elements are ints 0..3: bit 0 is the 1-component, bit 1 the zeta-component,
# with zeta^2 = 1 + zeta.  0, 1, ZETA=2, ZETA2=3.
ZETA = 2
ZETA2 = 3

_F4_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)


def f4_add(a: int, b: int) -> int:
    return a ^ b


def f4_mul(a: int, b: int) -> int:
    return _F4_MUL[a][b]


def f4_inv(a: int) -> int:
    if a == 0:
        raise NonUnit("0 has no inverse in F4")
    return (0, 1, 3, 2)[a]


def f4_pow(a: int, k: int) -> int:
    if a == 0:
        return 0 if k > 0 else 1
    if a == 1:
        return 1
    k %= 3
    if k < 0:
        k += 3
    r = 1
    for _ in range(k):
        r = f4_mul(r, a)
    return r


F4_ELEMENTS = (0, 1, 2, 3)


# ---------------------------------------------------------------------------
# Z/2^N
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Mod2k:
    """Residue modulo 2^n with the precision carried on the value."""

    value: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value & ((1 << self.n) - 1))

    def _check(self, other: "Mod2k"):
        if self.n != other.n:
            raise PrecisionMismatch(f"2-adic precision {self.n} vs {other.n}")

    def __add__(self, other):
        self._check(other)
        return Mod2k(self.value + other.value, self.n)

    def __sub__(self, other):
        self._check(other)
        return Mod2k(self.value - other.value, self.n)

    def __neg__(self):
        return Mod2k(-self.value, self.n)

    def __mul__(self, other):
        self._check(other)
        return Mod2k(self.value * other.value, self.n)

    def is_unit(self) -> bool:
        return self.value & 1 == 1

    def inv(self) -> "Mod2k":
        if not self.is_unit():
            raise NonUnit(f"{self.value} is even, not invertible mod 2^{self.n}")
        return Mod2k(pow(self.value, -1, 1 << self.n), self.n)

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        return Mod2k(pow(self.value, k, 1 << self.n), self.n)

    def v2(self) -> int:
        """2-adic valuation; the full precision n for zero."""
        if self.value == 0:
            return self.n
        return (self.value & -self.value).bit_length() - 1


def hensel_sqrt(u: Mod2k, pin: int) -> Mod2k:
    """Digit-by-digit square root of a unit u = 1 mod 8, on the branch r = pin mod 8.

    The result is the truncation of the 2-adic square root, so values at
    different precisions are compatible.  pin must be the mod-8 residue of an
    actual square root; a pin whose square does not match u mod 16 names a
    branch that does not exist, which also raises BadPin.
    """
    n = u.n
    if u.value % 8 != 1:
        raise NoSquareRoot(f"{u.value} is not 1 mod 8")
    pin &= 7
    if (pin * pin - u.value) % 8 != 0:
        raise BadPin(f"pin {pin} squares to {pin*pin % 8}, not {u.value % 8}, mod 8")
    # The root's top bit depends on u beyond the stored precision; the
    # convention here is the 2-adic root of the zero-padded residue.
    # Callers holding u exactly should pass it at extra precision and
    # truncate (see sqrt_minus7).
    m = n + 2
    uval = u.value & ((1 << n) - 1)
    r = pin
    if n >= 4 or m >= 4:
        if (r * r - uval) % 16 != 0:
            raise BadPin(f"no square root of {uval} is {pin} mod 8")
    for k in range(4, m):
        # r*r = u mod 2^k; fix bit k-1 to lift to mod 2^(k+1)
        if ((r * r - uval) >> k) & 1:
            r += 1 << (k - 1)
    return Mod2k(r, n)


# ---------------------------------------------------------------------------
# W(F4)/2^N
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WittElem:
    """a + b*zeta with a, b in Z/2^n and zeta^2 = -1 - zeta."""

    a: int
    b: int
    n: int

    def __post_init__(self):
        mask = (1 << self.n) - 1
        object.__setattr__(self, "a", self.a & mask)
        object.__setattr__(self, "b", self.b & mask)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_int(v: int, n: int) -> "WittElem":
        return WittElem(v, 0, n)

    @staticmethod
    def zeta(n: int) -> "WittElem":
        return WittElem(0, 1, n)

    @staticmethod
    def teichmuller(d: int, n: int) -> "WittElem":
        """Multiplicative lift F4 -> W/2^n: 0, 1, zeta, -1-zeta."""
        if d == 0:
            return WittElem(0, 0, n)
        if d == 1:
            return WittElem(1, 0, n)
        if d == ZETA:
            return WittElem(0, 1, n)
        return WittElem(-1, -1, n)

    # -- ring ops ----------------------------------------------------------

    def _check(self, other: "WittElem"):
        if self.n != other.n:
            raise PrecisionMismatch(f"2-adic precision {self.n} vs {other.n}")

    def __add__(self, other):
        self._check(other)
        return WittElem(self.a + other.a, self.b + other.b, self.n)

    def __sub__(self, other):
        self._check(other)
        return WittElem(self.a - other.a, self.b - other.b, self.n)

    def __neg__(self):
        return WittElem(-self.a, -self.b, self.n)

    def __mul__(self, other):
        self._check(other)
        # (a1 + b1 z)(a2 + b2 z), z^2 = -1 - z
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return WittElem(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2 - b1 * b2, self.n)

    def frobenius(self) -> "WittElem":
        """The ring involution sending zeta to zeta^2."""
        return WittElem(self.a - self.b, -self.b, self.n)

    def det_form(self) -> Mod2k:
        """x * sigma(x); always zeta-free."""
        return Mod2k(self.a * self.a - self.a * self.b + self.b * self.b, self.n)

    def is_unit(self) -> bool:
        return (self.a & 1) | (self.b & 1) == 1

    def inv(self) -> "WittElem":
        if not self.is_unit():
            raise NonUnit("reduction mod 2 is zero")
        s = self.det_form().inv().value
        c = self.frobenius()
        return WittElem(c.a * s, c.b * s, self.n)

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        r = WittElem(1, 0, self.n)
        base = self
        while k:
            if k & 1:
                r = r * base
            base = base * base
            k >>= 1
        return r

    # -- reductions --------------------------------------------------------

    def reduce_mod2(self) -> int:
        """Image in F4."""
        return (self.a & 1) | ((self.b & 1) << 1)

    def truncate(self, n: int) -> "WittElem":
        if n > self.n:
            raise PrecisionMismatch(f"cannot extend precision {self.n} to {n}")
        return WittElem(self.a, self.b, n)

    def times2(self) -> "WittElem":
        return WittElem(2 * self.a, 2 * self.b, self.n)

    def half(self) -> "WittElem":
        """Exact division by 2, dropping one bit of precision."""
        if (self.a & 1) or (self.b & 1):
            raise NonUnit("not divisible by 2")
        return WittElem(self.a >> 1, self.b >> 1, self.n - 1)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def v2(self) -> int:
        if self.is_zero():
            return self.n
        w = self.a | self.b
        return (w & -w).bit_length() - 1


def sqrt_minus7(n: int, pin: int) -> WittElem:
    # -7 is exact, so lift wide and truncate; results at different
    # precisions are then truncations of one 2-adic root.
    r = hensel_sqrt(Mod2k(-7, n + 3), pin)
    return WittElem.from_int(r.value, n)
