"""Truncated polynomial / power-series arithmetic over a pluggable coefficient ring.

Rings are small descriptor objects so that coefficients can be plain values
(F4 elements are ints, Witt coefficients are WittElem pairs).  One-variable
series live in R[z]/(z^cap); two-variable series use a total-degree cap,
which keeps "mod degree X" statements uniform.
"""

from __future__ import annotations

from .coeff import (Mod2k, NonUnit, WittElem, f4_add, f4_inv, f4_mul)


class NonzeroConstantTerm(ValueError):
    pass


class NonUnitConstant(ValueError):
    pass


class NonUnitLinearCoefficient(ValueError):
    pass


# ---------------------------------------------------------------------------
# Ring descriptors
# ---------------------------------------------------------------------------

def _mul_int(ring, a, k: int):
    """a added to itself k times, via the ring's integer image."""
    return ring.mul(ring.from_int(k), a)

class F4Ring:
    name = "F4"

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return f4_add(a, b)

    def sub(self, a, b):
        return f4_add(a, b)

    def neg(self, a):
        return a

    def mul(self, a, b):
        return f4_mul(a, b)

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        return f4_inv(a)

    def is_zero(self, a):
        return a == 0

    def from_int(self, v):
        return v & 1

    def random(self, rng):
        return rng.randrange(4)


class Mod2kRing:
    def __init__(self, n: int):
        self.n = n
        self.name = f"Z/2^{n}"

    def zero(self):
        return Mod2k(0, self.n)

    def one(self):
        return Mod2k(1, self.n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_unit(self, a):
        return a.is_unit()

    def inv(self, a):
        return a.inv()

    def is_zero(self, a):
        return a.value == 0

    def from_int(self, v):
        return Mod2k(v, self.n)

    def random(self, rng):
        return Mod2k(rng.getrandbits(self.n), self.n)


class WittRing:
    def __init__(self, n: int):
        self.n = n
        self.name = f"W/2^{n}"

    def zero(self):
        return WittElem(0, 0, self.n)

    def one(self):
        return WittElem(1, 0, self.n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_unit(self, a):
        return a.is_unit()

    def inv(self, a):
        return a.inv()

    def is_zero(self, a):
        return a.is_zero()

    def from_int(self, v):
        return WittElem(v, 0, self.n)

    def random(self, rng):
        return WittElem(rng.getrandbits(self.n), rng.getrandbits(self.n), self.n)


class U1Ring:
    """base[[u1]] / u1^cap with dense tuple storage."""

    def __init__(self, base, cap: int):
        self.base = base
        self.cap = cap
        self.name = f"{base.name}[[u1]]/u1^{cap}"

    def of(self, coeffs) -> tuple:
        cs = list(coeffs)[: self.cap]
        cs += [self.base.zero()] * (self.cap - len(cs))
        return tuple(cs)

    def u1(self, k: int = 1) -> tuple:
        cs = [self.base.zero()] * self.cap
        if k < self.cap:
            cs[k] = self.base.one()
        return tuple(cs)

    def zero(self):
        return self.of([])

    def one(self):
        return self.of([self.base.one()])

    def add(self, a, b):
        return tuple(self.base.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(self.base.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        out = [self.base.zero()] * self.cap
        for i, x in enumerate(a):
            if self.base.is_zero(x):
                continue
            for j in range(self.cap - i):
                y = b[j]
                if self.base.is_zero(y):
                    continue
                out[i + j] = self.base.add(out[i + j], self.base.mul(x, y))
        return tuple(out)

    def is_unit(self, a):
        return self.base.is_unit(a[0])

    def inv(self, a):
        c0 = self.base.inv(a[0])
        out = [self.base.zero()] * self.cap
        out[0] = c0
        for k in range(1, self.cap):
            acc = self.base.zero()
            for i in range(1, k + 1):
                acc = self.base.add(acc, self.base.mul(a[i], out[k - i]))
            out[k] = self.base.neg(self.base.mul(c0, acc))
        return tuple(out)

    def is_zero(self, a):
        return all(self.base.is_zero(x) for x in a)

    def from_int(self, v):
        return self.of([self.base.from_int(v)])

    def random(self, rng):
        return tuple(self.base.random(rng) for _ in range(self.cap))


# ---------------------------------------------------------------------------
# One variable
# ---------------------------------------------------------------------------

class TruncSeries:
    """Sum of c_i z^i for i < cap."""

    __slots__ = ("ring", "cap", "c")

    def __init__(self, ring, cap: int, coeffs=()):
        self.ring = ring
        self.cap = cap
        cs = list(coeffs)[:cap]
        cs += [ring.zero()] * (cap - len(cs))
        self.c = cs

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(ring, cap):
        return TruncSeries(ring, cap)

    @staticmethod
    def identity(ring, cap):
        z = TruncSeries(ring, cap)
        if cap > 1:
            z.c[1] = ring.one()
        return z

    @staticmethod
    def monomial(ring, cap, k, coeff=None):
        s = TruncSeries(ring, cap)
        if k < cap:
            s.c[k] = ring.one() if coeff is None else coeff
        return s

    def copy(self):
        return TruncSeries(self.ring, self.cap, list(self.c))

    # -- ring ops ----------------------------------------------------------

    def _check(self, other):
        if self.cap != other.cap:
            raise ValueError(f"series cap {self.cap} vs {other.cap}")

    def __add__(self, other):
        self._check(other)
        r = self.ring
        return TruncSeries(r, self.cap, [r.add(x, y) for x, y in zip(self.c, other.c)])

    def __sub__(self, other):
        self._check(other)
        r = self.ring
        return TruncSeries(r, self.cap, [r.sub(x, y) for x, y in zip(self.c, other.c)])

    def __neg__(self):
        r = self.ring
        return TruncSeries(r, self.cap, [r.neg(x) for x in self.c])

    def __mul__(self, other):
        self._check(other)
        r = self.ring
        out = [r.zero()] * self.cap
        for i, x in enumerate(self.c):
            if r.is_zero(x):
                continue
            for j in range(self.cap - i):
                y = other.c[j]
                if r.is_zero(y):
                    continue
                out[i + j] = r.add(out[i + j], r.mul(x, y))
        return TruncSeries(r, self.cap, out)

    def scale(self, coeff):
        r = self.ring
        return TruncSeries(r, self.cap, [r.mul(coeff, x) for x in self.c])

    def shift(self, k: int):
        """Multiply by z^k (k may be negative; low coefficients must vanish)."""
        r = self.ring
        if k >= 0:
            return TruncSeries(r, self.cap, [r.zero()] * k + self.c[: self.cap - k])
        if any(not r.is_zero(x) for x in self.c[:-k]):
            raise NonUnit(f"series not divisible by z^{-k}")
        return TruncSeries(r, self.cap, self.c[-k:])

    def __pow__(self, k: int):
        out = TruncSeries.monomial(self.ring, self.cap, 0)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if self.cap != other.cap:
            return False
        return all(self.ring.is_zero(self.ring.sub(x, y))
                   for x, y in zip(self.c, other.c))

    def is_zero(self):
        return all(self.ring.is_zero(x) for x in self.c)

    def valuation(self):
        for i, x in enumerate(self.c):
            if not self.ring.is_zero(x):
                return i
        return self.cap

    # -- series ops --------------------------------------------------------

    def compose(self, g: "TruncSeries") -> "TruncSeries":
        """self(g(z)); g must have zero constant term."""
        self._check(g)
        r = self.ring
        if not r.is_zero(g.c[0]):
            raise NonzeroConstantTerm("inner series has nonzero constant term")
        out = TruncSeries(r, self.cap)
        for i in range(self.cap - 1, -1, -1):
            out = out * g
            out.c[0] = r.add(out.c[0], self.c[i])
        return out

    def reciprocal(self) -> "TruncSeries":
        r = self.ring
        if not r.is_unit(self.c[0]):
            raise NonUnitConstant("constant term is not a unit")
        c0 = r.inv(self.c[0])
        out = [r.zero()] * self.cap
        out[0] = c0
        for k in range(1, self.cap):
            acc = r.zero()
            for i in range(1, k + 1):
                acc = r.add(acc, r.mul(self.c[i], out[k - i]))
            out[k] = r.neg(r.mul(c0, acc))
        return TruncSeries(r, self.cap, out)

    def functional_inverse(self) -> "TruncSeries":
        """g with self(g(z)) = z = g(self(z))."""
        r = self.ring
        if not r.is_zero(self.c[0]):
            raise NonzeroConstantTerm("series has nonzero constant term")
        if not r.is_unit(self.c[1] if self.cap > 1 else r.zero()):
            raise NonUnitLinearCoefficient("linear coefficient is not a unit")
        c1inv = r.inv(self.c[1])
        g = TruncSeries(r, self.cap)
        g.c[1] = c1inv
        # Newton-style degree-by-degree correction.
        for _ in range(self.cap):
            err = self.compose(g)
            err.c[1] = r.sub(err.c[1], r.one())
            if err.is_zero():
                break
            k = err.valuation()
            g.c[k] = r.sub(g.c[k], r.mul(c1inv, err.c[k]))
        return g

    def derivative(self) -> "TruncSeries":
        r = self.ring
        out = [r.zero()] * self.cap
        for i in range(1, self.cap):
            m = self.c[i]
            acc = r.zero()
            for _ in range(i):
                acc = r.add(acc, m)
            out[i - 1] = acc
        return TruncSeries(r, self.cap, out)

    def truncate(self, cap: int) -> "TruncSeries":
        return TruncSeries(self.ring, cap, self.c[:cap])

    def map_coeffs(self, ring, fn) -> "TruncSeries":
        return TruncSeries(ring, self.cap, [fn(x) for x in self.c])

    def __repr__(self):
        terms = [f"({x})z^{i}" for i, x in enumerate(self.c) if not self.ring.is_zero(x)]
        return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# Two variables, total-degree cap
# ---------------------------------------------------------------------------

class TruncSeries2:
    """Sum of c[i][j] z1^i z2^j over i + j < cap."""

    __slots__ = ("ring", "cap", "c")

    def __init__(self, ring, cap: int):
        self.ring = ring
        self.cap = cap
        self.c = {}

    def get(self, i, j):
        return self.c.get((i, j), self.ring.zero())

    def set(self, i, j, v):
        if self.ring.is_zero(v):
            self.c.pop((i, j), None)
        else:
            self.c[(i, j)] = v

    def copy(self):
        out = TruncSeries2(self.ring, self.cap)
        out.c = dict(self.c)
        return out

    def __add__(self, other):
        r = self.ring
        out = self.copy()
        for (i, j), v in other.c.items():
            out.set(i, j, r.add(out.get(i, j), v))
        return out

    def __sub__(self, other):
        r = self.ring
        out = self.copy()
        for (i, j), v in other.c.items():
            out.set(i, j, r.sub(out.get(i, j), v))
        return out

    def __neg__(self):
        r = self.ring
        out = TruncSeries2(self.ring, self.cap)
        for k, v in self.c.items():
            out.c[k] = r.neg(v)
        return out

    def __mul__(self, other):
        r = self.ring
        out = TruncSeries2(self.ring, self.cap)
        for (i1, j1), v1 in self.c.items():
            d1 = i1 + j1
            for (i2, j2), v2 in other.c.items():
                if d1 + i2 + j2 >= self.cap:
                    continue
                k = (i1 + i2, j1 + j2)
                cur = out.c.get(k)
                p = r.mul(v1, v2)
                out.c[k] = p if cur is None else r.add(cur, p)
        for k in [k for k, v in out.c.items() if r.is_zero(v)]:
            del out.c[k]
        return out

    def __pow__(self, k: int):
        out = TruncSeries2(self.ring, self.cap)
        out.set(0, 0, self.ring.one())
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, coeff):
        r = self.ring
        out = TruncSeries2(self.ring, self.cap)
        for k, v in self.c.items():
            out.set(k[0], k[1], r.mul(coeff, v))
        return out

    def swap(self) -> "TruncSeries2":
        out = TruncSeries2(self.ring, self.cap)
        for (i, j), v in self.c.items():
            out.c[(j, i)] = v
        return out

    def is_zero(self):
        return not self.c

    def __eq__(self, other):
        return (self - other).is_zero()

    def diagonal(self) -> TruncSeries:
        """Evaluate at z1 = z2 = z."""
        r = self.ring
        out = TruncSeries(r, self.cap)
        for (i, j), v in self.c.items():
            out.c[i + j] = r.add(out.c[i + j], v)
        return out

    def substitute(self, g: TruncSeries, h: TruncSeries) -> TruncSeries:
        """Evaluate at (z1, z2) = (g(z), h(z)); both must kill the constant term."""
        r = self.ring
        cap = self.cap
        if not r.is_zero(g.c[0]) or not r.is_zero(h.c[0]):
            raise NonzeroConstantTerm("substitution needs zero constant terms")
        gp = [TruncSeries.monomial(r, cap, 0)]
        hp = [TruncSeries.monomial(r, cap, 0)]
        for _ in range(cap):
            gp.append(gp[-1] * g)
            hp.append(hp[-1] * h)
        out = TruncSeries(r, cap)
        for (i, j), v in self.c.items():
            out = out + (gp[i] * hp[j]).scale(v)
        return out

    def eval_outer(self, f: TruncSeries) -> "TruncSeries2":
        """f(self) for a one-variable f; self must have zero constant term."""
        r = self.ring
        if not r.is_zero(self.get(0, 0)):
            raise NonzeroConstantTerm("outer substitution needs zero constant term")
        out = TruncSeries2(r, self.cap)
        for i in range(f.cap - 1, -1, -1):
            out = out * self
            out.set(0, 0, r.add(out.get(0, 0), f.c[i]))
        return out

    def divide_exact_z2_minus_z1(self, power: int) -> "TruncSeries2":
        """Exact division by (z2 - z1)^power; raises if any remainder survives.

        Works in the basis (z1, h) with h = z2 - z1, where division is a
        shift; the change of basis preserves total degree.
        """
        r = self.ring
        cap = self.cap
        # to (z1, h): z2^j = (z1 + h)^j
        binom = [[1]]
        for d in range(1, cap + 1):
            row = [1]
            for k in range(1, d):
                row.append(binom[-1][k - 1] + binom[-1][k])
            row.append(1)
            binom.append(row)
        conv = {}
        for (i, j), v in self.c.items():
            for k in range(j + 1):
                key = (i + j - k, k)
                cur = conv.get(key, r.zero())
                conv[key] = r.add(cur, _mul_int(r, v, binom[j][k]))
        out = TruncSeries2(r, cap)
        for (i, k), v in conv.items():
            if r.is_zero(v):
                continue
            if k < power:
                raise NonUnit(f"division by (z2-z1)^{power} leaves remainder at h^{k}")
            kk = k - power
            # back to (z1, z2): h^kk = (z2 - z1)^kk
            for t in range(kk + 1):
                term = _mul_int(r, v, binom[kk][t])
                if (kk - t) % 2 == 1:
                    term = r.neg(term)
                ii, jj = i + kk - t, t
                out.set(ii, jj, r.add(out.get(ii, jj), term))
        return out

    def __repr__(self):
        terms = [f"({v})z1^{i}z2^{j}" for (i, j), v in sorted(self.c.items())]
        return " + ".join(terms) if terms else "0"


def divided_difference(w: TruncSeries) -> TruncSeries2:
    """(w(z2) - w(z1)) / (z2 - z1) as an exact polynomial."""
    r = w.ring
    out = TruncSeries2(r, w.cap)
    for k in range(1, w.cap):
        v = w.c[k]
        if r.is_zero(v):
            continue
        for i in range(k):
            out.set(i, k - 1 - i, r.add(out.get(i, k - 1 - i), v))
    return out
