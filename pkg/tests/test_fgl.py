import random

import numpy as np
import pytest

from ellstab.fgl import (EllipticFGL, RestrictedFormViolation,
                         WeierstrassCurve, addition_law, catalan_numbers, curve_c,
                         curve_cz, curve_cu, curve_cu_mod2, cu_minus_two_closed_form,
                         cu_minus_two_mod2_closed_form, cz_minus_two_closed_form,
                         cz_negsum_closed_form, cz_w_closed_form, fc_neg_closed_form,
                         fc_printed_monomials, fc_w_closed_form, neg_series, solve_w)
from ellstab.series import Mod2kRing, TruncSeries
from ellstab.stab import fc_fgl_numpy
from ellstab.wseries import cu_fgl_numpy, wseries_from_trunc


def test_solve_w_leading_term():
    for curve, cap in ((curve_c(), 20), (curve_cz(6), 20)):
        w = solve_w(curve, cap)
        assert w.valuation() == 3
        r = curve.ring
        assert r.is_zero(r.sub(w.c[3], r.one()))


def test_fc_w_series():
    w = solve_w(curve_c(), 50)
    assert w == fc_w_closed_form(50)


def test_cz_w_series_catalan():
    w = solve_w(curve_cz(6), 31)
    assert w == cz_w_closed_form(6, 31)


def test_catalan_recurrence_values():
    assert catalan_numbers(8) == [1, 1, 2, 5, 14, 42, 132, 429]


def test_fc_neg_series():
    cap = 40
    neg = neg_series(curve_c(), cap)
    assert neg == fc_neg_closed_form(cap)
    # involution under F: F(z, neg(z)) = 0
    _, negnp, F = fc_fgl_numpy(24)
    from ellstab.wseries import F4Series
    z = F4Series.monomial(24, 1)
    assert F.substitute(z, negnp).is_zero()


def test_neg_rational_curve():
    r = Mod2kRing(6)
    curve = WeierstrassCurve.restricted(r, r.zero(), r.zero())
    # no a1, a3: [-1](z) = -z  (degenerate but exercises the formula)
    neg = neg_series(curve, 8)
    z = TruncSeries.identity(r, 8)
    assert neg == -z


def test_restricted_form_violation():
    r = Mod2kRing(6)
    curve = WeierstrassCurve(r, r.zero(), r.one(), r.one(), r.zero(), r.zero())
    with pytest.raises(RestrictedFormViolation):
        neg_series(curve, 8)


def test_fc_addition_law_printed_monomials():
    cap = 34
    _, _, F = fc_fgl_numpy(cap)
    expected = set(fc_printed_monomials())
    nonzero = {(i, j) for i in range(cap) for j in range(cap) if F.get(i, j)}
    assert nonzero == expected
    for i, j in expected:
        assert F.get(i, j) == 1


def test_fc_unital_symmetric():
    cap = 20
    _, _, F = fc_fgl_numpy(cap)
    from ellstab.wseries import F4Series
    z = F4Series.monomial(cap, 1)
    zero = F4Series.zero(cap)
    assert F.substitute(z, zero) == z
    assert np.array_equal(F.a, F.a.transpose(1, 0, 2))


def test_fc_associativity_full():
    # full three-variable check over F4 at total degree 32, exploiting
    # the sparsity of F itself
    cap = 32
    from ellstab.wseries import F4Series2
    _, _, F = fc_fgl_numpy(cap)
    monos = [(i, j) for i in range(cap) for j in range(cap) if F.get(i, j)]

    def powers(base, exps):
        out = {1: base}
        def power(k):
            if k in out:
                return out[k]
            p = power(k // 2)
            p = p * p
            if k & 1:
                p = p * base
            out[k] = p
            return p
        for e in exps:
            if e:
                power(e)
        return out

    f12 = F  # F(z1, z2) on the (z1, z2)-plane
    f23 = F  # same array read on the (z2, z3)-plane
    exps = sorted({e for m in monos for e in m if e})
    p12 = powers(f12, exps)
    p23 = powers(f23, exps)

    # lhs = F(F12, z3): dict z3-degree -> plane in (z1, z2)
    lhs = {}
    rhs = {}
    for i, j in monos:
        c = F.get(i, j)
        planes = lhs.setdefault(j, F4Series2.zero(cap))
        lhs[j] = planes + (p12[i].scale(c) if i else _const_plane(cap, c))
        planer = rhs.setdefault(i, F4Series2.zero(cap))
        rhs[i] = planer + (p23[j].scale(c) if j else _const_plane(cap, c))
    # compare cubes, honoring the total-degree cap
    degv = set()
    for d, plane in lhs.items():
        for i in range(cap):
            for j in range(cap):
                if i + j + d < cap and plane.get(i, j):
                    degv.add((i, j, d))
    degw = set()
    for i, plane in rhs.items():
        for j in range(cap):
            for d in range(cap):
                if i + j + d < cap and plane.get(j, d):
                    degw.add((i, j, d))
    assert degv == degw
    for (i, j, d) in degv:
        assert lhs[d].get(i, j) == rhs[i].get(j, d)


def _const_plane(cap, c):
    from ellstab.wseries import F4Series2
    p = F4Series2.zero(cap)
    p.set(0, 0, c)
    return p


def test_fc_minus_two_is_x4():
    cap = 33
    _, negnp, F = fc_fgl_numpy(cap)
    from ellstab.wseries import F4Series
    z = F4Series.monomial(cap, 1)
    double = F.substitute(z, z)
    m2 = _compose_f4(negnp, double)
    expect = F4Series.monomial(cap, 4)
    assert m2 == expect


def _compose_f4(f, g):
    from ellstab.wseries import F4Series
    out = F4Series.zero(f.x)
    for k in range(f.x - 1, -1, -1):
        out = out * g
        c = f.coeff(k)
        if c:
            add = F4Series.monomial(f.x, 0, c)
            out = out + add
    return out


def test_cz_minus_two_series():
    cap = 31
    n = 6
    fgl = EllipticFGL.of(curve_cz(n), cap)
    m2_chain = fgl.m_series(-2)
    m2_direct = fgl.minus_two_direct()
    assert m2_chain == m2_direct
    assert m2_chain == cz_minus_two_closed_form(n, cap)


def test_cz_negsum_closed_form():
    cap = 16
    n = 6
    curve = curve_cz(n)
    w = solve_w(curve, cap)
    lam_based = addition_law(curve, cap)
    # [-1](F(z1,z2)) computed from the closed form must match neg o F
    neg = neg_series(curve, cap, w)
    lhs = lam_based.eval_outer(neg)
    assert lhs == cz_negsum_closed_form(n, cap)


def test_m_series_trivial():
    fgl = EllipticFGL.of(curve_cz(5), 10)
    z = TruncSeries.identity(fgl.curve.ring, 10)
    assert fgl.m_series(1) == z
    assert fgl.m_series(0).is_zero()


def test_m_series_composition_laws():
    # [m] o [n] = [mn] on all three curves
    cases = [(curve_c(), 17), (curve_cz(5), 14), (curve_cu(4, 3), 9)]
    for curve, cap in cases:
        fgl = EllipticFGL.of(curve, cap)
        ms = {m: fgl.m_series(m) for m in (-2, -1, 2, 3, -4, 4, -6, 6)}
        for m in (-2, -1, 2, 3):
            for k in (-2, 2):
                if m * k in ms:
                    assert ms[m].compose(ms[k]) == ms[m * k], (m, k)


def test_formal_sum():
    fgl = EllipticFGL.of(curve_c(), 18)
    r = fgl.curve.ring
    z = TruncSeries.identity(r, 18)
    assert fgl.formal_sum([(1, z)]) == z
    assert fgl.formal_sum([]).is_zero()
    x2 = TruncSeries.monomial(r, 18, 2)
    got = fgl.formal_sum([(1, z), (1, x2)])
    assert got == fgl.add(z, x2)


def test_cu_minus_two_closed_form_matches_chain():
    # generic path at small caps; the array path covers the full caps
    n, b, cap = 5, 5, 10
    fgl = EllipticFGL.of(curve_cu(n, b), cap)
    m2 = fgl.m_series(-2)
    closed = cu_minus_two_closed_form(n, b, cap)
    assert m2 == closed
    assert fgl.minus_two_direct() == closed


def test_cu_minus_two_closed_form_full_caps_numpy():
    from ellstab.wseries import WSeries, cu_minus_two_numpy
    n, b, cap = 6, 8, 12
    w, neg, F = cu_fgl_numpy(n, b, cap)
    z = WSeries.identity(cap, b, n)
    closed = wseries_from_trunc(cu_minus_two_closed_form(n, b, cap), n, b)
    assert neg.compose(F.substitute(z, z)) == closed
    assert cu_minus_two_numpy(n, b, cap) == closed


def test_cu_minus_two_taylor_head():
    n, b, cap = 6, 8, 6
    closed = cu_minus_two_closed_form(n, b, cap)
    ring = closed.ring
    # -2z - 9 u1 z^2 - 36 u1^2 z^3 + (9 - 144 u1^3) z^4
    assert closed.c[1] == ring.from_int(-2)
    assert closed.c[2] == ring.neg(ring.of([ring.base.zero(), ring.base.from_int(9)]))
    assert closed.c[3] == ring.neg(ring.of([ring.base.zero()] * 2 + [ring.base.from_int(36)]))
    expect4 = list(ring.zero())
    expect4[0] = ring.base.from_int(9)
    expect4[3] = ring.base.from_int(-144)
    assert closed.c[4] == tuple(expect4)


def test_cu_minus_two_mod2():
    b, cap = 10, 17
    fgl = EllipticFGL.of(curve_cu_mod2(b), cap)
    m2 = fgl.m_series(-2)
    assert m2 == cu_minus_two_mod2_closed_form(b, cap)


def test_cu_numpy_matches_generic():
    n, b, cap = 5, 6, 10
    w, neg, F = cu_fgl_numpy(n, b, cap)
    gen = EllipticFGL.of(curve_cu(n, b), cap)
    assert w == wseries_from_trunc(gen.w, n, b)
    assert neg == wseries_from_trunc(gen.neg, n, b)
    for i in range(cap):
        for j in range(cap - i):
            v = gen.F.get(i, j)
            arr = np.zeros((b, 2), dtype=np.int64)
            for d, we in enumerate(v[:b]):
                arr[d, 0] = we.a
                arr[d, 1] = we.b
            assert np.array_equal(F.get(i, j), arr), (i, j)


def test_cu_fgl_unital_symmetric_assoc_sampled():
    n, b, cap = 5, 6, 16
    _, _, F = cu_fgl_numpy(n, b, cap)
    from ellstab.wseries import WSeries
    z = WSeries.identity(cap, b, n)
    zero = WSeries.zero(cap, b, n)
    assert F.substitute(z, zero) == z
    assert F == F.swap()
    rng = random.Random(21)
    for _ in range(6):
        def rnd():
            s = WSeries.zero(cap, b, n)
            s.a[1:] = rng.randrange(0, 2)
            arr = np.array([[[rng.getrandbits(n), rng.getrandbits(n)]
                             for _ in range(b)] for _ in range(cap)], dtype=np.int64)
            arr[0] = 0
            return WSeries(arr & ((1 << n) - 1), n)
        a_s, b_s, c_s = rnd(), rnd(), rnd()
        lhs = F.substitute(F.substitute(a_s, b_s), c_s)
        rhs = F.substitute(a_s, F.substitute(b_s, c_s))
        assert lhs == rhs


def test_cu_numpy_generic_small():
    n, b, cap = 4, 3, 8
    fgl = EllipticFGL.of(curve_cu(n, b), cap)
    assert fgl.m_series(-2) == cu_minus_two_closed_form(n, b, cap)
