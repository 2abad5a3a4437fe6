import random

import numpy as np
import pytest

from ellstab.action import (appendix_congruences, curve_cu_u1,
                            derive_iso, f_i_iso, f_omega_iso, g24_action,
                            identity_action, phi_i, phi_j, phi_k, phi_minus1,
                            phi_omega, solve_action, verify_appendix,
                            weierstrass_transform, x0_sum_mod2, InsufficientLedger)
from ellstab.coeff import WittElem, ZETA, ZETA2
from ellstab.deform import GradedElem, IdealSpec, named_constants
from ellstab.stab import StabElem, alpha, omega, pi_elem
from ellstab.wseries import wu_int, wu_mul, wu_pow, wu_u1, wu_inv, wu_zero


IDE = IdealSpec.parse


def test_g24_relations():
    n, b = 6, 12
    w = phi_omega(n, b)
    i = phi_i(n, b)
    m1 = phi_minus1(n, b)
    ident = identity_action(n, b)
    www = w.compose(w).compose(w)
    assert np.array_equal(www.t0, ident.t0) and np.array_equal(www.phi_u1, ident.phi_u1)
    ii = g24_action("i i", n, b)
    m1b = g24_action("-1", n, b)
    assert np.array_equal(ii.t0, m1b.t0) and np.array_equal(ii.phi_u1, m1b.phi_u1)
    # phi_j = phi_w phi_i phi_w^2
    j = phi_j(n, b)
    j2 = g24_action("w i w w", n, b)
    assert np.array_equal(j.t0, j2.t0) and np.array_equal(j.phi_u1, j2.phi_u1)


def test_t0_values_mod2():
    n, b = 6, 12
    one_u1 = wu_u1(1, n, b)
    # t0(i)^-1 = 1 + u1, t0(j)^-1 = 1 + zeta u1, t0(k)^-1 = 1 + zeta^2 u1 mod 2
    for mp, zexp in ((phi_i(n, b), 0), (phi_j(n, b), 1), (phi_k(n, b), 2)):
        inv = wu_inv(mp.t0, n) & 1
        want = wu_int(1, n, b) + wu_mul(wu_pow(wu_int(0, n, b) +
                                               _zeta_const(n, b, zexp), 1, n), one_u1, n)
        assert np.array_equal(inv, want & 1), zexp


def _zeta_const(n, b, e):
    z = WittElem.zeta(n) ** e if e else WittElem(1, 0, n)
    out = wu_zero(b)
    out[0, 0], out[0, 1] = z.a, z.b
    return out


def test_phi_omega_on_v2():
    n, b = 6, 10
    c = named_constants(n, b)
    w = phi_omega(n, b)
    assert w.apply(c["v2"]).eq_mod(c["v2"], IDE("()"))
    assert np.array_equal(w.apply(c["v2"]).coeff, c["v2"].coeff)


def test_phi_i_on_v2_mod2():
    n, b = 6, 10
    c = named_constants(n, b)
    i = phi_i(n, b)
    got = i.apply(c["v2"])
    # (1 + u1)^3 v2 mod 2
    want = c["v2"].coeff.copy()
    onep = wu_pow(wu_int(1, n, b) + wu_u1(1, n, b), 3, n)
    want = wu_mul(want, onep, n)
    assert GradedElem(6, got.coeff, n, b).eq_mod(GradedElem(6, want, n, b), IDE("(2)"))


def test_delta_c4_fixed_by_exact_action():
    n, b = 6, 14
    c = named_constants(n, b)
    for word in ("w", "i", "-1", "w i", "w w i w"):
        mp = g24_action(word, n, b)
        for name in ("Delta", "c4"):
            got = mp.apply(c[name])
            assert np.array_equal(got.coeff, c[name].coeff), (word, name)


def test_weierstrass_transform_identity():
    n, b = 6, 10
    cu = curve_cu_u1(n, b)
    from ellstab.action import CurveIso
    ident = CurveIso(wu_int(1, n, b), wu_zero(b), wu_zero(b), wu_zero(b))
    assert weierstrass_transform(cu, ident).eq(cu)


def test_f_omega_transforms_pullback():
    n, b = 6, 10
    cu = curve_cu_u1(n, b)
    src = cu.apply_map(phi_omega(n, b))
    got = weierstrass_transform(src, f_omega_iso(n, b))
    assert got.eq(cu)


def test_f_i_transforms_pullback_exactly():
    # all five relations over W/2^8 [[u1]]/u1^12
    n, b = 8, 12
    cu = curve_cu_u1(n, b)
    src = cu.apply_map(phi_i(n, b))
    got = weierstrass_transform(src, f_i_iso(n, b))
    assert got.eq(cu)


def test_f_i_matches_derived_tuple():
    n, b = 8, 12
    cu = curve_cu_u1(n, b)
    src = cu.apply_map(phi_i(n, b))
    printed = f_i_iso(n, b)
    derived = derive_iso(src, cu, phi_i(n, b).t0)
    mask = (1 << (n - 2)) - 1
    for a, c in ((printed.r, derived.r), (printed.s, derived.s), (printed.t, derived.t)):
        assert np.array_equal(a & mask, c & mask)


def test_x0_sum():
    n, b = 6, 10
    got = x0_sum_mod2(n, b)
    want = wu_u1(3, n, b) & 1
    assert np.array_equal(got, want)


def test_solver_identity():
    n, b = 6, 10
    amap = solve_action(StabElem.one(24), n, b, label="id-test")
    assert np.array_equal(amap.t0, wu_int(1, n, b))
    assert np.array_equal(amap.phi_u1, wu_u1(1, n, b))
    for i in range(1, 8):
        assert not amap.t_list[i].any()


def test_solver_scalar_minus1():
    n, b = 6, 10
    amap = solve_action(StabElem.from_witt(WittElem(-1, 0, 24)), n, b, label="m1-test")
    spec = IDE("(8, u1^10)")
    assert GradedElem(0, amap.t0, n, b).eq_mod(GradedElem(0, wu_int(-1, n, b), n, b), spec)
    assert GradedElem(0, amap.phi_u1, n, b).eq_mod(GradedElem(0, wu_u1(1, n, b), n, b), spec)


def test_solver_scalar_minus3_vs_pi_squared():
    n, b = 6, 10
    m3 = solve_action(StabElem.from_witt(WittElem(-3, 0, 24)), n, b, label="m3-test")
    spec = IDE("(8, 4u1^3, 2u1^5, u1^10)")
    assert GradedElem(0, m3.t0, n, b).eq_mod(GradedElem(0, wu_int(-3, n, b), n, b), spec)
    # functoriality: phi_pi o phi_pi = phi_(pi^2), at the shared certified level
    pi = solve_action(pi_elem(24), n, b, label="pi-test")
    pp = pi.compose(pi)
    spec2 = IDE("(4, 2u1^2, u1^8)")
    assert GradedElem(0, pp.t0, n, b).eq_mod(GradedElem(0, m3.t0, n, b), spec2)
    assert GradedElem(0, pp.phi_u1, n, b).eq_mod(GradedElem(0, m3.phi_u1, n, b), spec2)


def test_solver_omega_factoring():
    # a unit with a0 = zeta: gamma = omega * pi
    n, b = 6, 10
    g = omega(24) * pi_elem(24)
    amap = solve_action(g, n, b, label="wpi-test")
    w = phi_omega(n, b)
    pi = solve_action(pi_elem(24), n, b, label="pi-test")
    expect = w.compose(pi)
    spec = IDE("(4, 2u1^2, u1^8)")
    assert amap.eq_mod(expect, spec)


def test_pi_action_is_identity_mod_2_u13():
    n, b = 6, 10
    pi = solve_action(pi_elem(24), n, b, label="pi-test")
    spec = IDE("(2, u1^3)")
    assert GradedElem(0, pi.t0, n, b).eq_mod(GradedElem(0, wu_int(1, n, b), n, b), spec)
    assert GradedElem(0, pi.phi_u1, n, b).eq_mod(GradedElem(0, wu_u1(1, n, b), n, b), spec)


def test_alpha_t0_structure():
    n, b = 6, 12
    am = solve_action(alpha(24), n, b, label="alpha-test")
    t0 = am.t_list[0] & 1
    # in F4[[u1^3]]: no coefficients away from exponent multiples of 3
    for d in range(b):
        if d % 3:
            assert not t0[d].any(), d
    assert t0[0, 0] == 1 and t0[3, 0] == 1 and not t0[3, 1]
    assert t0[9].any()  # u1^9 coefficient = 1 for the alpha digits


def test_alpha_inverse_composition():
    n, b = 6, 12
    a = solve_action(alpha(24), n, b, label="alpha-test")
    ai = solve_action(alpha(24).inv(), n, b, label="alphainv-test")
    comp = a.compose(ai)
    ident = identity_action(n, b)
    spec = IDE("(2, u1^9)")
    assert comp.eq_mod(ident, spec)
    # phi_alpha = phi_alpha^-1 mod (2, v1^9)
    assert a.eq_mod(ai, spec)


def test_alpha_squared_trivial_mod_v19():
    n, b = 6, 12
    a2 = solve_action(alpha(24) ** 2, n, b, label="alphasq-test")
    ident = identity_action(n, b)
    assert a2.eq_mod(ident, IDE("(2, u1^9)"))


def test_appendix_suite_alpha_digits():
    res = verify_appendix((ZETA, 0, 1))
    bad = [r for r in res if not r[4]]
    assert not bad, bad[:4]


def test_appendix_suite_random_triples():
    rng = random.Random(41)
    for _ in range(6):
        digs = (rng.randrange(4), rng.randrange(4), rng.randrange(4))
        res = verify_appendix(digs)
        bad = [(r[0], r[1]) for r in res if not r[4]]
        assert not bad, (digs, bad)


def test_appendix_suite_with_tail_digits():
    # congruences only depend on a2, a3, a4 even with nonzero tail digits
    rng = random.Random(42)
    digs = (ZETA2, 1, ZETA)
    tail = [rng.randrange(4) for _ in range(3)]
    amap = solve_action(None, 6, 10, 65, digits=[1, 0, *digs, *tail],
                        label=f"tail{tail}")
    res = appendix_congruences(digs, amap)
    bad = [(r[0], r[1]) for r in res if not r[4]]
    assert not bad, bad


def test_ledger_covers():
    n, b = 6, 10
    a = solve_action(alpha(24), n, b, label="alpha-test10")
    assert a.covers(IDE("(2, u1^8)"))
    assert a.covers(IDE("(4, 2u1^2, u1^10)"))
    assert not a.covers(IDE("(32)"))
    c = named_constants(n, b)
    with pytest.raises(InsufficientLedger):
        a.apply(c["v2"], require=IDE("(64)"))
