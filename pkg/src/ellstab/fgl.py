"""Formal group laws of elliptic curves y^2 + a1*xy + a3*y = x^3.

The coordinate at the origin is z = -x/y with w = -1/y, so that
w(z) = z^3 + a1*z*w + a2*z^2*w + a3*w^2 + a4*z*w^2 + a6*w^3.  For the
restricted form (a2 = a4 = a6 = 0) the chord construction gives closed
formulas for the inverse series and the addition law, and the minus-two
series both directly (through w') and through the doubling chain.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import (Mod2kRing, F4Ring, TruncSeries, TruncSeries2, U1Ring,
                     WittRing, divided_difference, _mul_int)


class NoConvergence(RuntimeError):
    pass


class RestrictedFormViolation(ValueError):
    pass


@dataclass
class WeierstrassCurve:
    ring: object
    a1: object
    a2: object
    a3: object
    a4: object
    a6: object

    @staticmethod
    def restricted(ring, a1, a3):
        z = ring.zero()
        return WeierstrassCurve(ring, a1, z, a3, z, z)

    def is_restricted(self):
        r = self.ring
        return r.is_zero(self.a2) and r.is_zero(self.a4) and r.is_zero(self.a6)


def curve_c(cap_unused: int = 0) -> WeierstrassCurve:
    """y^2 + y = x^3 over F4."""
    r = F4Ring()
    return WeierstrassCurve.restricted(r, 0, 1)


def curve_cz(n: int) -> WeierstrassCurve:
    """y^2 - y = x^3 over Z/2^n."""
    r = Mod2kRing(n)
    return WeierstrassCurve.restricted(r, r.zero(), r.neg(r.one()))


def curve_cu(n: int, b: int) -> WeierstrassCurve:
    """y^2 + 3*u1*xy + (u1^3 - 1)*y = x^3 over W/2^n[[u1]]/u1^b."""
    ring = U1Ring(WittRing(n), b)
    a1 = tuple(ring.base.from_int(v) for v in ([0, 3] + [0] * (b - 2))[:b])
    a3 = list(ring.zero())
    a3[0] = ring.base.from_int(-1)
    if b > 3:
        a3[3] = ring.base.one()
    return WeierstrassCurve.restricted(ring, ring.of(a1), tuple(a3))


def curve_cu_mod2(b: int) -> WeierstrassCurve:
    """The mod-2 reduction of curve_cu over F4[[u1]]/u1^b."""
    ring = U1Ring(F4Ring(), b)
    a1 = ring.u1(1)
    a3 = list(ring.u1(3))
    a3[0] = 1
    return WeierstrassCurve.restricted(ring, a1, tuple(a3))


def solve_w(curve: WeierstrassCurve, cap: int) -> TruncSeries:
    """The unique w = z^3 + ... solving the Weierstrass coordinate equation."""
    r = curve.ring
    z3 = TruncSeries.monomial(r, cap, 3)
    z1 = TruncSeries.identity(r, cap)
    z2 = TruncSeries.monomial(r, cap, 2)
    w = z3.copy()
    for _ in range(cap + 1):
        w2 = w * w
        nxt = z3 + z1.scale(curve.a1) * w + z2.scale(curve.a2) * w \
            + w2.scale(curve.a3) + (z1 * w2).scale(curve.a4) + (w2 * w).scale(curve.a6)
        if nxt == w:
            return w
        w = nxt
    raise NoConvergence("w(z) iteration did not stabilize")


def neg_series(curve: WeierstrassCurve, cap: int, w: TruncSeries | None = None) -> TruncSeries:
    """[-1](z) = -z - a1*w/z - a3*w^2/z^2.

    The divisions by z and z^2 need w two degrees past the cap, so the
    computation runs at cap + 2 and truncates.
    """
    if not curve.is_restricted():
        raise RestrictedFormViolation("inverse series needs a2 = a4 = a6 = 0")
    w = solve_w(curve, cap + 2)
    z = TruncSeries.identity(curve.ring, cap + 2)
    full = -z - w.shift(-1).scale(curve.a1) - (w * w).shift(-2).scale(curve.a3)
    return full.truncate(cap)


def addition_law(curve: WeierstrassCurve, cap: int,
                 w: TruncSeries | None = None,
                 neg: TruncSeries | None = None) -> TruncSeries2:
    """F(z1, z2), from the chord construction composed with the inverse.

    Runs two degrees past the cap for the same reason as neg_series.
    """
    if not curve.is_restricted():
        raise RestrictedFormViolation("addition law needs a2 = a4 = a6 = 0")
    r = curve.ring
    capx = cap + 2
    w = solve_w(curve, capx)
    neg = neg_series(curve, capx)
    lam = divided_difference(w)
    s = TruncSeries2(r, capx)
    s.set(1, 0, r.neg(r.one()))
    s.set(0, 1, r.neg(r.one()))
    negsum = s - lam.scale(curve.a1) - (lam * lam).scale(curve.a3)
    full = negsum.eval_outer(neg)
    out = TruncSeries2(r, cap)
    for (i, j), v in full.c.items():
        if i + j < cap:
            out.set(i, j, v)
    return out


@dataclass
class EllipticFGL:
    curve: WeierstrassCurve
    cap: int
    w: TruncSeries
    F: TruncSeries2
    neg: TruncSeries

    @staticmethod
    def of(curve: WeierstrassCurve, cap: int) -> "EllipticFGL":
        w = solve_w(curve, cap)
        neg = neg_series(curve, cap, w)
        F = addition_law(curve, cap, w, neg)
        return EllipticFGL(curve, cap, w, F, neg)

    def add(self, f: TruncSeries, g: TruncSeries) -> TruncSeries:
        return self.F.substitute(f, g)

    def m_series(self, m: int) -> TruncSeries:
        z = TruncSeries.identity(self.curve.ring, self.cap)
        if m == 0:
            return TruncSeries.zero(self.curve.ring, self.cap)
        out = z
        for _ in range(abs(m) - 1):
            out = self.add(out, z)
        if m < 0:
            out = self.neg.compose(out)
        return out

    def minus_two_direct(self) -> TruncSeries:
        """-2z - a1*w'(z) - a3*w'(z)^2; w' lowers degree, so w runs one past the cap."""
        r = self.curve.ring
        wp = solve_w(self.curve, self.cap + 1).derivative().truncate(self.cap)
        z = TruncSeries.identity(r, self.cap)
        return z.scale(r.from_int(-2)) - wp.scale(self.curve.a1) - (wp * wp).scale(self.curve.a3)

    def formal_sum(self, terms) -> TruncSeries:
        """Left fold of F over (coefficient, series) pairs."""
        out = None
        for coeff, s in terms:
            t = s.scale(coeff)
            out = t if out is None else self.add(out, t)
        if out is None:
            out = TruncSeries.zero(self.curve.ring, self.cap)
        return out


def catalan_numbers(count: int) -> list:
    """C_0..C_{count-1} by the convolution recurrence."""
    c = [1]
    for k in range(count - 1):
        c.append(sum(c[i] * c[k - i] for i in range(k + 1)))
    return c


def cz_w_closed_form(n: int, cap: int) -> TruncSeries:
    """w(z) for y^2 - y = x^3 over Z: alternating Catalan numbers on z^{3(k+1)}."""
    r = Mod2kRing(n)
    cats = catalan_numbers(cap // 3 + 1)
    out = TruncSeries(r, cap)
    for k, ck in enumerate(cats):
        d = 3 * (k + 1)
        if d < cap:
            out.c[d] = r.from_int(ck if k % 2 == 0 else -ck)
    return out


def cz_minus_two_closed_form(n: int, cap: int) -> TruncSeries:
    """-2z + 9 z^4 sum (-1)^k 4^k z^{3k} over Z/2^n."""
    r = Mod2kRing(n)
    out = TruncSeries(r, cap)
    out.c[1] = r.from_int(-2)
    k = 0
    while 4 + 3 * k < cap:
        out.c[4 + 3 * k] = r.from_int(9 * ((-4) ** k))
        k += 1
    return out


def cz_negsum_closed_form(n: int, cap: int) -> TruncSeries2:
    """[-1](F(z1,z2)) for y^2 - y = x^3: -z1 - z2 + ((z1^3+z2^3) + D(-(z1^3+z2^3+4 z1^3 z2^3)))/(z2-z1)^2."""
    r = Mod2kRing(n)
    cats = catalan_numbers(cap + 1)
    arg = TruncSeries2(r, cap + 2)
    arg.set(3, 0, r.from_int(-1))
    arg.set(0, 3, r.from_int(-1))
    arg.set(3, 3, r.from_int(-4))
    # D(y) = sum C_k y^{k+1}
    num = TruncSeries2(r, cap + 2)
    num.set(3, 0, r.one())
    num.set(0, 3, r.one())
    p = arg.copy()
    k = 0
    while not p.is_zero() and 3 * (k + 1) <= cap + 1:
        num = num + p.scale(r.from_int(cats[k]))
        p = p * arg
        k += 1
    quot = num.divide_exact_z2_minus_z1(2)
    out = TruncSeries2(r, cap + 2)
    out.set(1, 0, r.from_int(-1))
    out.set(0, 1, r.from_int(-1))
    out = out + quot
    trimmed = TruncSeries2(r, cap)
    for (i, j), v in out.c.items():
        if i + j < cap:
            trimmed.set(i, j, v)
    return trimmed


def fc_w_closed_form(cap: int) -> TruncSeries:
    """w(z) = sum z^{3*2^k} for the supersingular curve over F4."""
    r = F4Ring()
    out = TruncSeries(r, cap)
    d = 3
    while d < cap:
        out.c[d] = 1
        d *= 2
    return out


def fc_neg_closed_form(cap: int) -> TruncSeries:
    """[-1](z) = sum z^{3*2^k - 2} over F4."""
    r = F4Ring()
    out = TruncSeries(r, cap)
    d = 3
    while d - 2 < cap:
        out.c[d - 2] = 1
        d *= 2
    return out


def fc_printed_monomials() -> list:
    """The sixteen monomials of F(z1,z2) for y^2 + y = x^3 through degree 28."""
    return [(1, 0), (0, 1), (2, 2), (6, 4), (4, 6), (8, 8), (12, 4), (4, 12),
            (12, 10), (10, 12), (14, 8), (8, 14), (16, 12), (12, 16), (24, 4), (4, 24)]


def cu_minus_two_closed_form(n: int, b: int, cap: int) -> TruncSeries:
    """[-2](z) = -2z - 9z (z u1 - 2 z^2 u1^2 + z^3 (u1^3 - 1)) / (1 - 6 z u1 + 9 z^2 u1^2 - 4 z^3 (u1^3 - 1))."""
    ring = U1Ring(WittRing(n), b)
    u1 = ring.u1(1)
    u1sq = ring.mul(u1, u1)
    u1cubm1 = ring.add(ring.u1(3), ring.from_int(-1))
    num = TruncSeries(ring, cap)
    num.c[1] = u1
    num.c[2] = _mul_int(ring, u1sq, -2)
    num.c[3] = u1cubm1
    den = TruncSeries(ring, cap)
    den.c[0] = ring.one()
    den.c[1] = _mul_int(ring, u1, -6)
    den.c[2] = _mul_int(ring, u1sq, 9)
    den.c[3] = _mul_int(ring, u1cubm1, -4)
    z = TruncSeries.identity(ring, cap)
    frac = num * den.reciprocal()
    return z.scale(ring.from_int(-2)) - (z * frac).scale(ring.from_int(9))


def cu_minus_two_mod2_closed_form(b: int, cap: int) -> TruncSeries:
    """u1 x^2 + sum_k u1^{2k} x^{2k+4} over F4[[u1]]/u1^b."""
    ring = U1Ring(F4Ring(), b)
    out = TruncSeries(ring, cap)
    if cap > 2:
        out.c[2] = ring.u1(1)
    k = 0
    while 2 * k + 4 < cap:
        out.c[2 * k + 4] = ring.u1(2 * k)
        k += 1
    return out
