"""The check registry: every verifiable statement, keyed and suite-tagged.

Each check returns (status, computed, expected, ideal) strings; the registry
maps check ids to callables so the service and the acceptance tests share
one implementation.  Adding a check here requires no service or CLI change.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .schemas import CheckRecord, RunConfig, RunReport, RunSummary

SUITES = ("fgl", "stabilizer", "action", "cohomology", "bockstein", "adrss")


@dataclass
class CheckDef:
    check_id: str
    suite: str
    ref: str
    fn: callable


REGISTRY: list[CheckDef] = []


def check(check_id, suite, ref):
    def wrap(fn):
        REGISTRY.append(CheckDef(check_id, suite, ref, fn))
        return fn
    return wrap


def _ok(computed="", expected="", ideal=""):
    return ("pass", str(computed), str(expected), ideal)


def _fail(computed="", expected="", ideal=""):
    return ("fail", str(computed), str(expected), ideal)


def _bool(flag, computed="", expected="", ideal=""):
    return ("pass" if flag else "fail", str(computed), str(expected), ideal)


# ---------------------------------------------------------------------------
# fgl suite
# ---------------------------------------------------------------------------

@check("fgl.fc.w_series", "fgl",
       "coordinate series of y^2+y=x^3 over F4 is the sum of z^(3*2^k)")
def _fc_w(cfg):
    from .fgl import curve_c, fc_w_closed_form, solve_w
    got = solve_w(curve_c(), 50)
    return _bool(got == fc_w_closed_form(50), "w(z) to z^49", "sum z^(3*2^k)")


@check("fgl.fc.neg_series", "fgl",
       "inverse series of the supersingular curve is the sum of z^(3*2^k-2)")
def _fc_neg(cfg):
    from .fgl import curve_c, fc_neg_closed_form, neg_series
    got = neg_series(curve_c(), 40)
    return _bool(got == fc_neg_closed_form(40), "neg(z) to z^39", "sum z^(3*2^k-2)")


@check("fgl.fc.minus_two_x4", "fgl",
       "the minus-two series of the supersingular curve is exactly x^4")
def _fc_m2(cfg):
    from .stab import fc_fgl_numpy
    from .wseries import F4Series
    cap = 33
    _, neg, F = fc_fgl_numpy(cap)
    z = F4Series.monomial(cap, 1)
    dbl = F.substitute(z, z)
    out = F4Series.zero(cap)
    for k in range(cap - 1, -1, -1):
        out = out * dbl
        c = neg.coeff(k)
        if c:
            out = out + F4Series.monomial(cap, 0, c)
    return _bool(out == F4Series.monomial(cap, 4), "[-2](z) to z^32", "z^4", "exact")


@check("fgl.fc.addition_monomials", "fgl",
       "the supersingular addition law has the sixteen stated monomials "
       "through degree 28 and nothing else below degree 34")
def _fc_add(cfg):
    from .fgl import fc_printed_monomials
    from .stab import fc_fgl_numpy
    cap = 34
    _, _, F = fc_fgl_numpy(cap)
    nonzero = {(i, j) for i in range(cap) for j in range(cap) if F.get(i, j)}
    expect = set(fc_printed_monomials())
    ok = nonzero == expect and all(F.get(i, j) == 1 for (i, j) in expect)
    return _bool(ok, f"{len(nonzero)} monomials", "16 monomials", "exact")


@check("fgl.fc.unit_symmetric", "fgl",
       "the addition law is unital and symmetric")
def _fc_unit(cfg):
    from .stab import fc_fgl_numpy
    from .wseries import F4Series
    cap = 20
    _, _, F = fc_fgl_numpy(cap)
    z = F4Series.monomial(cap, 1)
    ok = F.substitute(z, F4Series.zero(cap)) == z
    ok = ok and bool(np.array_equal(F.a, F.a.transpose(1, 0, 2)))
    return _bool(ok)


@check("fgl.cz.w_catalan", "fgl",
       "the integral lift's coordinate series has alternating Catalan coefficients")
def _cz_w(cfg):
    from .fgl import catalan_numbers, curve_cz, cz_w_closed_form, solve_w
    n = cfg.two_adic_prec
    got = solve_w(curve_cz(n), 31)
    cats = catalan_numbers(10)
    ok = got == cz_w_closed_form(n, 31) and cats == [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]
    return _bool(ok, "w(z) to z^30", "Catalan convolution recurrence", "exact")


@check("fgl.cz.minus_two", "fgl",
       "integral lift: [-2](z) = -2z + 9 z^4 sum (-4)^n z^(3n)")
def _cz_m2(cfg):
    from .fgl import EllipticFGL, curve_cz, cz_minus_two_closed_form
    n = cfg.two_adic_prec
    fgl = EllipticFGL.of(curve_cz(n), 31)
    chain = fgl.m_series(-2)
    ok = chain == cz_minus_two_closed_form(n, 31) and chain == fgl.minus_two_direct()
    return _bool(ok, "chain and direct route", "closed form", f"mod 2^{n}, z^31")


@check("fgl.cz.negsum_closed_form", "fgl",
       "integral chord formula with the Catalan generating series")
def _cz_negsum(cfg):
    from .fgl import addition_law, curve_cz, cz_negsum_closed_form, neg_series, solve_w
    n, cap = cfg.two_adic_prec, 16
    curve = curve_cz(n)
    lhs = addition_law(curve, cap).eval_outer(neg_series(curve, cap))
    return _bool(lhs == cz_negsum_closed_form(n, cap), "neg o F", "closed form")


@check("fgl.cu.closed_vs_chain", "fgl",
       "universal-curve [-2]: rational closed form equals the doubling chain")
def _cu_closed(cfg):
    from .fgl import cu_minus_two_closed_form
    from .wseries import WSeries, cu_fgl_numpy, cu_minus_two_numpy, wseries_from_trunc
    n, b, cap = 6, 8, 12
    w, neg, F = cu_fgl_numpy(n, b, cap)
    z = WSeries.identity(cap, b, n)
    chain = neg.compose(F.substitute(z, z))
    closed = wseries_from_trunc(cu_minus_two_closed_form(n, b, cap), n, b)
    ok = chain == closed and cu_minus_two_numpy(n, b, cap) == closed
    return _bool(ok, "chain", "closed form", "(2^6, u1^8, z^12)")


@check("fgl.cu.taylor_head", "fgl",
       "universal-curve [-2] head: -2z - 9u1 z^2 - 36u1^2 z^3 + (9 - 144u1^3) z^4")
def _cu_head(cfg):
    from .fgl import cu_minus_two_closed_form
    n, b = 6, 8
    closed = cu_minus_two_closed_form(n, b, 6)
    ring = closed.ring
    heads = [(-2, 0, 1), (-9, 1, 2), (-36, 2, 3), (9, 0, 4), (-144, 3, 4)]
    ok = True
    for coeff, u1deg, zdeg in heads:
        want = [ring.base.zero()] * b
        got = list(closed.c[zdeg])
        if zdeg == 4:
            want[0] = ring.base.from_int(9)
            want[3] = ring.base.from_int(-144)
        else:
            want[u1deg] = ring.base.from_int(coeff)
        ok = ok and got == want if zdeg != 4 else ok and got == want
    return _bool(ok, "Taylor head", "(-2, -9, -36, 9, -144)", "exact")


@check("fgl.cu.mod2_form", "fgl",
       "universal-curve [-2] mod 2 is u1 x^2 + sum u1^(2k) x^(2k+4)")
def _cu_mod2(cfg):
    from .fgl import EllipticFGL, curve_cu_mod2, cu_minus_two_mod2_closed_form
    b, cap = 10, 17
    fgl = EllipticFGL.of(curve_cu_mod2(b), cap)
    return _bool(fgl.m_series(-2) == cu_minus_two_mod2_closed_form(b, cap),
                 "[-2] mod 2 to z^16", "u1 x^2 + sum u1^(2k) x^(2k+4)", "(2, z^17)")


@check("fgl.m_series_laws", "fgl", "[m] o [n] = [mn] on all three curves")
def _m_laws(cfg):
    from .fgl import EllipticFGL, curve_c, curve_cu, curve_cz
    ok = True
    for curve, cap in ((curve_c(), 17), (curve_cz(5), 14), (curve_cu(4, 3), 9)):
        fgl = EllipticFGL.of(curve, cap)
        ms = {m: fgl.m_series(m) for m in (-2, -1, 2, 3, -4, 4, -6, 6)}
        for m in (-2, -1, 2, 3):
            for k in (-2, 2):
                if m * k in ms:
                    ok = ok and ms[m].compose(ms[k]) == ms[m * k]
    return _bool(ok)


# ---------------------------------------------------------------------------
# stabilizer suite
# ---------------------------------------------------------------------------

@check("stab.omega_alpha_pi", "stabilizer",
       "omega^3 = 1; alpha sigma(alpha) = -1 with digits (1,0,w,0,1); det(pi) = 3")
def _stab_named(cfg):
    from .coeff import Mod2k, ZETA
    from .stab import StabElem, alpha, omega, pi_elem, t_digits
    n = 14
    ok = omega(n) ** 3 == StabElem.one(n)
    a = alpha(n)
    ok = ok and a * a.galois() == -StabElem.one(n)
    ok = ok and t_digits(a, 5) == [1, 0, ZETA, 0, 1]
    ok = ok and pi_elem(n).det() == Mod2k(3, n)
    ok = ok and t_digits(pi_elem(n), 3)[2] == ZETA
    return _bool(ok, "digit expansions", "(1,0,w,0,1) and a2 = w", "exact")


@check("stab.digit_round_trip", "stabilizer",
       "digit extraction and reconstruction agree mod T^L, 1000 samples")
def _stab_round(cfg):
    from .coeff import WittElem
    from .stab import StabElem, from_t_digits, t_digits
    rng = random.Random(101)
    n, L = 10, 6
    m = (1 << (L // 2)) - 1
    for _ in range(1000):
        g = StabElem(WittElem(rng.getrandbits(n), rng.getrandbits(n), n),
                     WittElem(rng.getrandbits(n), rng.getrandbits(n), n))
        diff = g - from_t_digits(t_digits(g, L), n)
        if any(v & m for v in (diff.a.a, diff.a.b, diff.b.a, diff.b.b)):
            return _fail("mismatch", "agreement mod T^6")
    return _ok("1000 samples", "agreement mod T^6")


@check("stab.det_norm", "stabilizer",
       "determinant is multiplicative; norm-one membership for the named elements")
def _stab_det(cfg):
    from .coeff import WittElem
    from .stab import StabElem, alpha, omega, pi_elem
    rng = random.Random(102)
    n = 8
    for _ in range(300):
        x = StabElem(WittElem(rng.getrandbits(n), rng.getrandbits(n), n),
                     WittElem(rng.getrandbits(n), rng.getrandbits(n), n))
        y = StabElem(WittElem(rng.getrandbits(n), rng.getrandbits(n), n),
                     WittElem(rng.getrandbits(n), rng.getrandbits(n), n))
        if (x * y).det() != x.det() * y.det():
            return _fail("det not multiplicative")
    ok = omega(10).is_norm_one() and alpha(10).is_norm_one() and \
        not pi_elem(10).is_norm_one()
    return _bool(ok, "300 samples + named elements")


@check("stab.filtration", "stabilizer",
       "filtration levels: pi and alpha at 2/2, alpha^2 at >= 4/2; "
       "level(xy) >= min(level x, level y)")
def _stab_filt(cfg):
    from fractions import Fraction
    from .coeff import WittElem
    from .stab import StabElem, alpha, filtration_level, pi_elem, t_digits
    n = 14
    ok = filtration_level(pi_elem(n)) == Fraction(1) == filtration_level(alpha(n))
    ok = ok and filtration_level(alpha(n) ** 2) >= Fraction(2)
    rng = random.Random(103)
    pool = []
    while len(pool) < 10:
        g = StabElem(WittElem(rng.getrandbits(n), rng.getrandbits(n), n),
                     WittElem(rng.getrandbits(n), rng.getrandbits(n), n))
        if g.is_unit() and t_digits(g, 1)[0] == 1:
            pool.append(g)
    for _ in range(30):
        x, y = rng.choice(pool), rng.choice(pool)
        if filtration_level(x * y) < min(filtration_level(x), filtration_level(y)):
            return _fail("submultiplicativity violated")
    return _bool(ok)


@check("stab.series_head", "stabilizer",
       "endomorphism series head x + a1 x^2 + a2 x^4 + a1^2 x^6 + a3 x^8 + "
       "a2^2 x^10 + a1^2 a2^2 x^12 + a1 x^14 + (a1^3 + a4) x^16")
def _stab_head(cfg):
    from .coeff import f4_add, f4_mul, f4_pow
    from .stab import digit_series
    rng = random.Random(104)
    cap = 18
    for _ in range(12):
        a1, a2, a3, a4 = (rng.randrange(4) for _ in range(4))
        s = digit_series([1, a1, a2, a3, a4], cap)
        expect = {1: 1, 2: a1, 4: a2, 6: f4_pow(a1, 2), 8: a3, 10: f4_pow(a2, 2),
                  12: f4_mul(f4_pow(a1, 2), f4_pow(a2, 2)), 14: a1,
                  16: f4_add(f4_pow(a1, 3), a4)}
        for k in range(cap):
            if s.coeff(k) != expect.get(k, 0):
                return _fail(f"x^{k} coefficient", "printed head", "mod x^18")
    return _ok("12 digit samples", "printed head", "mod x^18")


@check("stab.series_homomorphism", "stabilizer",
       "the endomorphism series of a product is the composite of the series")
def _stab_hom(cfg):
    from .coeff import WittElem
    from .stab import StabElem, to_power_series
    from .wseries import F4Series
    rng = random.Random(105)
    n, cap = 12, 17
    for _ in range(6):
        def rnd():
            while True:
                g = StabElem(WittElem(rng.getrandbits(n), rng.getrandbits(n), n),
                             WittElem(rng.getrandbits(n), rng.getrandbits(n), n))
                if g.is_unit():
                    return g
        x, y = rnd(), rnd()
        sx, sy = to_power_series(x, cap), to_power_series(y, cap)
        out = F4Series.zero(cap)
        for k in range(cap - 1, -1, -1):
            out = out * sy
            if sx.coeff(k):
                out = out + F4Series.monomial(cap, 0, sx.coeff(k))
        if not out == to_power_series(x * y, cap):
            return _fail("composite mismatch", "", "mod (2, x^17)")
    return _ok("6 sampled pairs", "", "mod (2, x^17)")


# ---------------------------------------------------------------------------
# action suite
# ---------------------------------------------------------------------------

@check("action.g24_relations", "action",
       "exact action: i^2 = -1, w^3 = 1, j = w i w^2, k = w^2 i w")
def _act_rel(cfg):
    from .action import g24_action, phi_j, phi_k
    n, b = 6, 12
    ii = g24_action("i i", n, b)
    m1 = g24_action("-1", n, b)
    ok = np.array_equal(ii.t0, m1.t0) and np.array_equal(ii.phi_u1, m1.phi_u1)
    www = g24_action("w w w", n, b)
    ident = g24_action("", n, b)
    ok = ok and np.array_equal(www.t0, ident.t0) and np.array_equal(www.phi_u1, ident.phi_u1)
    j1, j2 = phi_j(n, b), g24_action("w i w w", n, b)
    ok = ok and np.array_equal(j1.t0, j2.t0)
    return _bool(ok, "group relations", "", "exact")


@check("action.t0_inverses_mod2", "action",
       "t0(i)^-1 = 1 + u1, t0(j)^-1 = 1 + z u1, t0(k)^-1 = 1 + z^2 u1 mod 2")
def _act_t0(cfg):
    from .action import phi_i, phi_j, phi_k
    from .wseries import wu_inv, wu_u1, wu_zero
    from .coeff import WittElem
    n, b = 6, 12
    ok = True
    for mp, e in ((phi_i(n, b), 0), (phi_j(n, b), 1), (phi_k(n, b), 2)):
        z = WittElem.zeta(n) ** e if e else WittElem(1, 0, n)
        want = wu_zero(b)
        want[0, 0] = 1
        want[1, 0], want[1, 1] = z.a, z.b
        ok = ok and np.array_equal(wu_inv(mp.t0, n) & 1, want & 1)
    return _bool(ok, "", "", "(2)")


@check("action.phi_i_v2", "action", "phi_i(v2) = (1 + u1)^3 v2 mod 2")
def _act_iv2(cfg):
    from .action import phi_i
    from .deform import GradedElem, ideal, named_constants
    from .wseries import wu_int, wu_mul, wu_pow, wu_u1
    n, b = 6, 10
    c = named_constants(n, b)
    got = phi_i(n, b).apply(c["v2"])
    want = wu_mul(c["v2"].coeff, wu_pow(wu_int(1, n, b) + wu_u1(1, n, b), 3, n), n)
    return _bool(got.eq_mod(GradedElem(6, want, n, b), ideal("(2)")),
                 "phi_i(v2)", "(1+u1)^3 v2", "(2)")


@check("action.delta_c4_fixed", "action",
       "the discriminant and the weight-8 form are fixed by the exact action")
def _act_fix(cfg):
    from .action import g24_action
    from .deform import named_constants
    n, b = 6, 14
    c = named_constants(n, b)
    for word in ("w", "i", "-1", "w i", "w w i w"):
        mp = g24_action(word, n, b)
        for name in ("Delta", "c4"):
            if not np.array_equal(mp.apply(c[name]).coeff, c[name].coeff):
                return _fail(f"{name} moved by {word}", "fixed", "exact")
    return _ok("5 words x 2 forms", "fixed", "exact")


@check("action.weier_f_i", "action",
       "the printed tuple for the lift of i transforms the pulled-back curve "
       "to the universal curve, all five relations, exactly")
def _act_fi(cfg):
    from .action import curve_cu_u1, f_i_iso, phi_i, weierstrass_transform
    n, b = 8, 12
    cu = curve_cu_u1(n, b)
    src = cu.apply_map(phi_i(n, b))
    got = weierstrass_transform(src, f_i_iso(n, b))
    return _bool(got.eq(cu), "transformed curve", "universal curve",
                 f"exact over W/2^{n}[[u1]]/u1^{b}")


@check("action.weier_f_omega", "action",
       "the tangent-compatible tuple for the order-3 lift transforms the "
       "pulled-back curve back")
def _act_fw(cfg):
    from .action import curve_cu_u1, f_omega_iso, phi_omega, weierstrass_transform
    n, b = 6, 10
    cu = curve_cu_u1(n, b)
    got = weierstrass_transform(cu.apply_map(phi_omega(n, b)), f_omega_iso(n, b))
    return _bool(got.eq(cu), "", "", "exact")


@check("action.x0_sum", "action",
       "1 + t0(i)^-3 + t0(j)^-3 + t0(k)^-3 = u1^3 mod 2")
def _act_x0(cfg):
    from .action import x0_sum_mod2
    from .wseries import wu_u1
    n, b = 6, 10
    return _bool(bool(np.array_equal(x0_sum_mod2(n, b), wu_u1(3, n, b) & 1)),
                 "x0 sum", "u1^3", "(2)")


@check("action.solver_scalars", "action",
       "solved actions of 2-adic scalars match the exact scalar action "
       "within the certified ideals")
def _act_scalar(cfg):
    from .action import solve_action
    from .coeff import WittElem
    from .deform import GradedElem, ideal
    from .stab import StabElem
    from .wseries import wu_int, wu_u1
    n, b = 6, 10
    spec = ideal("(8, 4u1^3, 2u1^5, u1^10)")
    for v in (-1, 3, -3, 5):
        amap = solve_action(StabElem.from_witt(WittElem(v, 0, 24)), n, b,
                            label=f"scalar{v}")
        ok = GradedElem(0, amap.t0, n, b).eq_mod(
            GradedElem(0, wu_int(v, n, b), n, b), spec)
        ok = ok and GradedElem(0, amap.phi_u1, n, b).eq_mod(
            GradedElem(0, wu_u1(1, n, b), n, b), spec)
        if not ok:
            return _fail(f"scalar {v}", "l u and u1", spec.render())
    return _ok("scalars -1, 3, -3, 5", "phi(u) = l u, phi(u1) = u1", spec.render())


@check("action.solver_functorial_pi", "action",
       "composing the solved pi-action with itself matches the solved pi^2")
def _act_pipi(cfg):
    from .action import solve_action
    from .coeff import WittElem
    from .deform import ideal
    from .stab import StabElem, pi_elem
    n, b = 6, 10
    pi = solve_action(pi_elem(24), n, b, label="pi-f")
    m3 = solve_action(StabElem.from_witt(WittElem(-3, 0, 24)), n, b, label="m3-f")
    return _bool(pi.compose(pi).eq_mod(m3, ideal("(4, 2u1^2, u1^8)")),
                 "pi o pi", "pi^2 = -3", "(4, 2u1^2, u1^8)")


@check("action.appendix_alpha_digits", "action",
       "the full t_i congruence suite on the alpha digit triple (w, 0, 1)")
def _act_app_alpha(cfg):
    from .action import verify_appendix
    from .coeff import ZETA
    res = verify_appendix((ZETA, 0, 1))
    bad = [(r[0], r[1]) for r in res if not r[4]]
    return _bool(not bad, f"{len(res)} congruences, failed: {bad}",
                 "all congruences", "stated ideals")


@check("action.appendix_random_triples", "action",
       "the t_i congruence suite on 20 random digit triples")
def _act_app_rand(cfg):
    from .action import verify_appendix
    rng = random.Random(106)
    total = 0
    for _ in range(20):
        digs = (rng.randrange(4), rng.randrange(4), rng.randrange(4))
        res = verify_appendix(digs)
        total += len(res)
        bad = [(r[0], r[1]) for r in res if not r[4]]
        if bad:
            return _fail(f"{digs}: {bad[:3]}", "all congruences", "stated ideals")
    return _ok(f"20 triples, {total} congruences", "all pass", "stated ideals")


@check("action.appendix_tail_digits", "action",
       "congruences depend only on the three leading digits: random tails")
def _act_app_tail(cfg):
    from .action import appendix_congruences, solve_action
    rng = random.Random(107)
    for _ in range(2):
        digs = (rng.randrange(4), rng.randrange(4), rng.randrange(4))
        tail = [rng.randrange(4) for _ in range(3)]
        amap = solve_action(None, 6, 10, 65, digits=[1, 0, *digs, *tail],
                            label=f"tail-{digs}-{tail}")
        res = appendix_congruences(digs, amap)
        if [r for r in res if not r[4]]:
            return _fail(f"{digs} + tail {tail}")
    return _ok("2 tailed samples")


@check("action.alpha_c3fix", "action",
       "t0(alpha) has coefficients only on powers of u1^3")
def _act_c3fix(cfg):
    from .action import solve_action
    from .stab import alpha
    n, b = 6, 12
    am = solve_action(alpha(24), n, b, label="alpha-a")
    t0 = am.t_list[0] & 1
    for d in range(b):
        if d % 3 and t0[d].any():
            return _fail(f"u1^{d} coefficient nonzero", "supported on u1^(3k)", "(2)")
    return _ok("t0(alpha) mod 2", "supported on u1^(3k)", "(2)")


@check("action.alpha_t0_shape", "action",
       "t0(alpha) = 1 + u1^3 + e0 u1^6 mod 2 with zero u1^1, u1^2, u1^4, u1^5 "
       "coefficients, and coefficient 1 at u1^9")
def _act_alpha_shape(cfg):
    from .action import solve_action
    from .stab import alpha
    n, b = 6, 12
    am = solve_action(alpha(24), n, b, label="alpha-a")
    t0 = am.t_list[0] & 1
    ok = t0[0, 0] == 1 and not t0[0, 1]
    ok = ok and t0[3, 0] == 1 and not t0[3, 1]
    for d in (1, 2, 4, 5):
        ok = ok and not t0[d].any()
    ok = ok and t0[9, 0] == 1 and not t0[9, 1]
    return _bool(ok, "1 + u1^3 + (e0) u1^6 + u1^9", "stated shape", "(2, u1^10)")


@check("action.pi_trivial_mod_2u13", "action",
       "the pi action is the identity mod (2, u1^3)")
def _act_pi_triv(cfg):
    from .action import g24_action, solve_action
    from .deform import ideal
    from .stab import pi_elem
    n, b = 6, 10
    pi = solve_action(pi_elem(24), n, b, label="pi-f")
    return _bool(pi.eq_mod(g24_action("", n, b), ideal("(2, u1^3)")),
                 "phi_pi", "id", "(2, u1^3)")


@check("action.alpha_sq_trivial", "action",
       "the action of alpha^2 is the identity mod (2, v1^9)")
def _act_asq(cfg):
    from .action import g24_action, solve_action
    from .deform import ideal
    from .stab import alpha
    n, b = 6, 12
    am = solve_action(alpha(24) ** 2, n, b, label="alphasq-a")
    return _bool(am.eq_mod(g24_action("", n, b), ideal("(2, u1^9)")),
                 "phi_(alpha^2)", "id", "(2, v1^9)")


@check("action.alpha_vs_inverse", "action",
       "phi_alpha = phi_(alpha^-1) mod (2, v1^9); the composite is the identity")
def _act_ainv(cfg):
    from .action import g24_action, solve_action
    from .deform import ideal
    from .stab import alpha
    n, b = 6, 12
    a = solve_action(alpha(24), n, b, label="alpha-a")
    ai = solve_action(alpha(24).inv(), n, b, label="alphainv-a")
    spec = ideal("(2, u1^9)")
    ok = a.eq_mod(ai, spec) and a.compose(ai).eq_mod(g24_action("", n, b), spec)
    return _bool(ok, "", "", "(2, v1^9)")


@check("action.v1_fixed_mod2", "action",
       "v1 is fixed mod 2 by the exact generators and by solved actions")
def _act_v1fix(cfg):
    from .action import g24_action, solve_action
    from .deform import ideal, named_constants
    from .stab import alpha, pi_elem, from_t_digits
    n, b = 6, 10
    c = named_constants(n, b)
    spec = ideal("(2, u1^9)")
    for word in ("w", "i", "-1", "w i w w", "w w i w"):
        mp = g24_action(word, n, b)
        if not mp.apply(c["v1"]).eq_mod(c["v1"], ideal("(2)")):
            return _fail(f"exact {word}")
    rng = random.Random(108)
    gammas = [("alpha", solve_action(alpha(24), n, b, label="alpha-f10"))]
    gammas.append(("pi", solve_action(pi_elem(24), n, b, label="pi-f")))
    for idx in range(4):
        digs = [1, 0] + [rng.randrange(4) for _ in range(3)]
        gammas.append((f"rand{idx}", solve_action(None, n, b, digits=digs,
                                                  label=f"v1fix-{digs}")))
    for name, mp in gammas:
        if not mp.apply(c["v1"]).eq_mod(c["v1"], spec):
            return _fail(f"solved {name}", "v1 fixed", spec.render())
    return _ok("5 exact words + 6 solved maps", "v1 fixed", "(2, v1-window)")


@check("action.sylow_trivial_mod_2v1", "action",
       "2-Sylow elements act trivially mod (2, v1), including odd first digits")
def _act_sylow(cfg):
    from .action import solve_action
    from .deform import GradedElem, ideal
    from .wseries import wu_int, wu_u1
    rng = random.Random(111)
    n, b = 6, 10
    spec = ideal("(2, u1)")
    for idx in range(4):
        digs = [1, rng.randrange(1, 4)] + [rng.randrange(4) for _ in range(2)]
        mp = solve_action(None, n, b, digits=digs, label=f"sylow-{digs}")
        if not GradedElem(0, mp.t0, n, b).eq_mod(
                GradedElem(0, wu_int(1, n, b), n, b), spec):
            return _fail(f"digits {digs}: t0", "1", "(2, v1)")
        if not GradedElem(0, mp.phi_u1, n, b).eq_mod(
                GradedElem(0, wu_u1(1, n, b), n, b), spec):
            return _fail(f"digits {digs}: phi(u1)", "u1", "(2, v1)")
    return _ok("4 samples with nonzero first digit", "identity", "(2, v1)")


@check("action.graded_two_series", "action",
       "the graded doubling series has homogeneous coefficients with head "
       "v1 x^2 + v2 (u1^3 + 1) x^4")
def _act_graded(cfg):
    from .deform import graded_two_series
    from .wseries import wu_u1
    b = 8
    series = graded_two_series(b, 8)
    deg2, c2 = series[2]
    deg4, c4_ = series[4]
    ok = deg2 == 2 and np.array_equal(c2, wu_u1(1, 1, b))
    want4 = wu_u1(3, 1, b)
    want4[0, 0] = 1
    ok = ok and deg4 == 6 and np.array_equal(c4_, want4)
    return _bool(ok, "x^2, x^4 coefficients", "u1 and u1^3 + 1", "(2)")


# ---------------------------------------------------------------------------
# cohomology suite
# ---------------------------------------------------------------------------

@check("coh.resolutions_d_squared", "cohomology",
       "d o d = 0 exactly for all three resolutions, integrally and mod 2")
def _coh_d2(cfg):
    from .grpcoh import (a4_resolution, c6_resolution, q8_resolution,
                         verify_d_squared)
    ok = verify_d_squared(q8_resolution(6)) and verify_d_squared(q8_resolution(0))
    ok = ok and verify_d_squared(c6_resolution(6)) and verify_d_squared(a4_resolution())
    return _bool(ok, "degrees 2..9", "zero composites", "exact")


@check("coh.resolutions_equivariant", "cohomology",
       "differential entries are compatible with the cube-root twist")
def _coh_eq(cfg):
    from .grpcoh import (a4_resolution, c6_resolution, q8_resolution,
                         verify_equivariance)
    ok = verify_equivariance(q8_resolution(6)) and \
        verify_equivariance(c6_resolution(6)) and verify_equivariance(a4_resolution())
    return _bool(ok)


@check("coh.resolutions_acyclic", "cohomology",
       "augmented mod-2 complexes are exact in degrees 1..8 by rank count")
def _coh_acyc(cfg):
    from .grpcoh import resolution_acyclic
    ok = resolution_acyclic("q8", 8) and resolution_acyclic("c6", 8) and \
        resolution_acyclic("a4", 8)
    return _bool(ok, "rank sums", "dimension sums", "degrees 1..8")


@check("coh.chain_map_commutes", "cohomology",
       "the printed lift of the quotient map commutes with d in degrees 0..3")
def _coh_cmap(cfg):
    from .grpcoh import chain_map_commutes
    return _bool(chain_map_commutes(3), "degrees 0..3", "commutes", "(2)")


@check("coh.c6_window", "cohomology",
       "order-6 cohomology matches the closed-form count, s <= 6, |t| <= 24")
def _coh_c6(cfg):
    from .grpcoh import cohomology_dims, hc6_count
    b = max(16, cfg.u1_cap)
    w = cohomology_dims("c6", s_max=6, t_min=-24, t_max=24, b=b)
    bad = [(s, t) for (s, t), d in w.dims.items() if d != hc6_count(t, b)]
    return _bool(not bad, f"{len(w.dims)} slots", "closed-form counts", "exact")


@check("coh.g24_window", "cohomology",
       "order-24 cohomology matches the independent enumeration, s <= 4, |t| <= 24")
def _coh_g24(cfg):
    from .grpcoh import cohomology_dims, q8_einf_entries
    b = max(16, cfg.u1_cap)
    g = cohomology_dims("g24", s_max=4, t_min=-24, t_max=24, b=b)
    bad = [(s, t, d, q8_einf_entries(s, t, b, True))
           for (s, t), d in g.dims.items() if d != q8_einf_entries(s, t, b, True)]
    return _bool(not bad, f"{len(g.dims)} slots, mismatches {bad[:3]}",
                 "enumeration", "exact")


@check("coh.a4_window", "cohomology",
       "order-12 cohomology matches the enumeration, s <= 3, |t| <= 24")
def _coh_a4(cfg):
    from .grpcoh import cohomology_dims, v_einf_entries
    b = max(12, cfg.u1_cap)
    a = cohomology_dims("a4", s_max=3, t_min=-24, t_max=24, b=b)
    bad = [(s, t) for (s, t), d in a.dims.items() if d != v_einf_entries(s, t, b, True)]
    return _bool(not bad, f"{len(a.dims)} slots", "enumeration", "exact")


@check("coh.q8_v_windows", "cohomology",
       "2-Sylow and elementary-quotient windows match, s <= 8 resp. 3")
def _coh_q8v(cfg):
    from .grpcoh import cohomology_dims, q8_einf_entries, v_einf_entries
    q = cohomology_dims("q8", s_max=8, t_min=-16, t_max=16, b=12)
    ok = all(d == q8_einf_entries(s, t, 12, False) for (s, t), d in q.dims.items())
    v = cohomology_dims("v", s_max=3, t_min=-16, t_max=16, b=12)
    ok = ok and all(d == v_einf_entries(s, t, 12, False) for (s, t), d in v.dims.items())
    return _bool(ok)


@check("coh.g24_h0_j_powers", "cohomology",
       "degree-0 invariants are spanned by truncated powers of the invariant j")
def _coh_h0(cfg):
    from .grpcoh import cohomology_dims, g24_h0_jcount
    g = cohomology_dims("g24", s_max=0, t_min=-24, t_max=24, b=16)
    ok = all(g.dim(0, t) == g24_h0_jcount(t, 16) for t in range(-24, 25, 2))
    return _bool(ok, "H^0 window", "j-power count", "exact")


@check("coh.eigenspace_split", "cohomology",
       "the three eigenspaces split the module; u^-3 has weight 0, u^-1 weight 2")
def _coh_eig(cfg):
    from .grpcoh import eigenspace_decompose
    b = 16
    ok = all(sum(len(v) for v in eigenspace_decompose(t, b).values()) == b
             for t in (-6, -2, 0, 2, 8))
    ok = ok and 0 in eigenspace_decompose(6, b)[0] and 0 in eigenspace_decompose(2, b)[2]
    return _bool(ok)


@check("coh.frobenius_reciprocity", "cohomology",
       "hom out of an induced module has the dimension of one eigenspace")
def _coh_frob(cfg):
    from .grpcoh import eigenspace_indices
    b = 14
    for t in (-4, 0, 6, 10):
        for w in (0, 1, 2):
            if len(eigenspace_indices(w, t, b)) != \
                    len([e for e in range(b) if (e - t // 2 - w) % 3 == 0]):
                return _fail()
    return _ok()


@check("coh.periodicity_dims", "cohomology",
       "dimension agreement at (s, t) vs (s+4, t+24) across the window")
def _coh_per(cfg):
    from .grpcoh import cohomology_dims
    g = cohomology_dims("g24", s_max=8, t_min=-24, t_max=24, b=16)
    for s in range(0, 5):
        for t in range(-24, 1, 2):
            if (s + 4, t + 24) in g.dims and g.dims[(s + 4, t + 24)] != g.dims[(s, t)]:
                return _fail(f"({s},{t})")
    return _ok("window spot grid", "periodic pairs equal")


@check("coh.induced_map_h0_iso", "cohomology",
       "the quotient-map comparison is an isomorphism on degree-0 cohomology")
def _coh_ind0(cfg):
    from .grpcoh import induced_map_dims
    for t in (-24, -12, 0, 8, 24):
        da4, dg24, rank = induced_map_dims(0, t, 16)
        if not (da4 == dg24 == rank):
            return _fail(f"t={t}: {da4},{dg24},{rank}")
    return _ok("five degrees", "isomorphism")


@check("coh.induced_map_hits_classes", "cohomology",
       "the listed degree <= 3 classes and their degree-24 translates are hit")
def _coh_indhit(cfg):
    from .grpcoh import induced_map_dims
    listed = [(1, 4), (1, 8), (1, 10), (1, 16), (2, 8), (2, 16), (2, 18),
              (2, 20), (3, 12), (3, 24)]
    for (s, t) in listed:
        for shift in (0, -24):
            tt = t + shift
            if -24 <= tt <= 24:
                if induced_map_dims(s, tt, 16)[2] < 1:
                    return _fail(f"({s},{tt}) not hit")
    return _ok("listed classes", "in the image")


@check("coh.integral_c6", "cohomology",
       "integral order-6 window matches the closed-form free/torsion counts")
def _coh_intc6(cfg):
    from .grpcoh import (c6_integral_closed_form_count, c6_integral_dims,
                         c6_integral_matrix_divisors)
    for s in range(0, 7):
        for t in range(-24, 25, 2):
            if c6_integral_dims(s, t, 16) != c6_integral_closed_form_count(s, t, 16):
                return _fail(f"({s},{t})")
    ok = c6_integral_matrix_divisors(0, 18, 6, 16) == [1] * 6 and \
        c6_integral_matrix_divisors(0, 4, 6, 16) == []
    return _bool(ok, "window + divisors", "closed form", "W/2^6")


@check("coh.integral_g24_h0", "cohomology",
       "integral degree-0 kernels reduce onto the mod-2 invariants")
def _coh_intg24(cfg):
    from .grpcoh import g24_integral_h0_reduces
    for t in (0, 8, -12, 24):
        if not g24_integral_h0_reduces(t, 5, 10):
            return _fail(f"t={t}")
    return _ok("four degrees", "reduction surjective", "W/2^5")


# ---------------------------------------------------------------------------
# bockstein suite
# ---------------------------------------------------------------------------

@check("bss.key_differentials", "bockstein",
       "d1(u^-1) = v1 h11, d1(u^-3) = u^-2 v1 h11, d2(u^-2) = v1^2 h10, "
       "d2(u^-3 h10) = u^-1 v1^2 h10^2")
def _bss_keys(cfg):
    from .bockstein import _Column, base_class_vector, bss_differential
    cases = [  # (t, s, slot, expected r, target slot, target degree)
        (2, 0, 0, 1, 1, 1), (6, 0, 0, 1, 1, 1), (4, 0, 0, 2, 0, 2), (6, 1, 0, 2, 0, 2)]
    for (t, s, slot, rexp, tslot, tdeg) in cases:
        col = _Column("q8", t, 14, 4)
        r, tgt = bss_differential(col, s, base_class_vector(col, s, slot))
        if r != rexp:
            return _fail(f"t={t}: r={r}", f"r={rexp}")
        off = sum(len(ix) for ix in col.slots[s + 1][:tslot])
        idx = [i for i, v in enumerate(tgt) if v]
        if idx != [off + tdeg]:
            return _fail(f"t={t}: target {idx}", f"[{off + tdeg}]")
    return _ok("four differentials", "printed values", "exact")


@check("bss.dr_well_defined", "bockstein",
       "the lift-and-divide differential is independent of the chosen lift")
def _bss_lift(cfg):
    from .bockstein import (_Column, base_class_vector, bss_differential,
                            targets_agree)
    rng = random.Random(109)
    col = _Column("q8", 4, 14, 4)
    base = base_class_vector(col, 0, 0)
    r0, t0_ = bss_differential(col, 0, base)
    for _ in range(8):
        pert = [0] * col.dim(0)
        for i, e in enumerate(col.degs[0]):
            if e >= 1 and rng.random() < 0.4:
                pert[i] = rng.randrange(4)
        r, t = bss_differential(col, 0, base, perturb=pert)
        if r != r0 or not targets_agree(col, 0, r0, t0_, t):
            return _fail("lift dependence detected")
    return _ok("8 perturbed lifts", "same page-level class")


@check("bss.einf_q8", "bockstein",
       "the E-infinity table of the 2-Sylow subgroup matches the stated "
       "decomposition, s <= 8, |t| <= 16")
def _bss_q8(cfg):
    from .bockstein import compare_einf, run_bss
    st = run_bss("q8", s_max=8, t_min=-16, t_max=16, b=12)
    bad = compare_einf(st)
    return _bool(not bad, f"mismatches {bad[:3]}", "stated table", "w < 12")


@check("bss.einf_v", "bockstein",
       "the E-infinity table of the elementary quotient matches, s <= 3")
def _bss_v(cfg):
    from .bockstein import compare_einf, run_bss
    st = run_bss("v", s_max=3, t_min=-16, t_max=16, b=12)
    bad = compare_einf(st)
    return _bool(not bad, f"mismatches {bad[:3]}", "stated table", "w < 12")


@check("bss.column_sums", "bockstein",
       "filtration column sums equal the directly computed cohomology")
def _bss_sums(cfg):
    from .bockstein import run_bss
    from .grpcoh import cohomology_dims
    st = run_bss("q8", s_max=8, t_min=-16, t_max=16, b=12)
    q = cohomology_dims("q8", s_max=8, t_min=-16, t_max=16, b=12)
    for t in range(-16, 17, 2):
        for s in range(9):
            if st.column_sum(s, t) != q.dim(s, t):
                return _fail(f"({s},{t})")
    return _ok("full window", "column sums equal")


@check("bss.delta_periodicity", "bockstein",
       "tables at t and t + 8 coincide (the invariant 8-periodicity class)")
def _bss_delta(cfg):
    from .bockstein import run_bss
    st = run_bss("q8", s_max=6, t_min=-16, t_max=16, b=12)
    ok = all(st.einf.get((s, t, w), 0) == st.einf.get((s, t + 8, w), 0)
             for s in range(7) for t in range(-16, 9, 2) for w in range(12))
    return _bool(ok)


@check("bss.delta_invariant", "bockstein",
       "u^-4 (1 + u1^3) is invariant under the 2-Sylow generators and cubes "
       "to the discriminant mod 2")
def _bss_dinv(cfg):
    from .action import phi_i, phi_j, phi_k
    from .deform import GradedElem, ideal, named_constants
    from .wseries import wu_add, wu_int, wu_u1
    n, b = 6, 14
    c = named_constants(n, b)
    delta = GradedElem(8, wu_add(wu_int(1, n, b), wu_u1(3, n, b), n), n, b)
    for mp in (phi_i(n, b), phi_j(n, b), phi_k(n, b)):
        if not mp.apply(delta).eq_mod(delta, ideal("(2)")):
            return _fail("not invariant")
    return _bool((delta ** 3).eq_mod(c["Delta"], ideal("(2)")),
                 "delta^3", "discriminant", "(2)")


@check("bss.phix_values", "bockstein",
       "exact mod-2 values of the eigenvector operators on small u-powers: "
       "x1 gives (0, 0, v1^2, u^-1 v1^2) and x2 gives (0, v1, 0, u^-2 v1)")
def _bss_phix(cfg):
    from .action import phi_i, phi_j, phi_k
    from .coeff import WittElem, ZETA, f4_pow
    from .wseries import wu_const, wu_mul, wu_pow, wu_u1, wu_zero
    n, b = 1, 10
    t0s = [phi_i(n, b).t0, phi_j(n, b).t0, phi_k(n, b).t0]
    expect = {("x1", 2): 2, ("x1", 3): 2, ("x2", 1): 1, ("x2", 3): 1}
    for kind, wexp in (("x1", (0, 1, 2)), ("x2", (0, 2, 1))):
        for r in range(4):
            acc = wu_zero(b)
            for t0, we in zip(t0s, wexp):
                coeff = wu_const(WittElem.teichmuller(f4_pow(ZETA, we), n), b)
                acc = (acc + wu_mul(coeff, wu_pow(t0, -r, n), n)) & 1
            u1e = expect.get((kind, r))
            want = wu_u1(u1e, n, b) if u1e is not None else wu_zero(b)
            if not np.array_equal(acc & 1, want & 1):
                return _fail(f"{kind}(u^-{r})", f"u1^{u1e}" if u1e else "0", "(2)")
    return _ok("eight values", "printed table", "(2)")


@check("bss.pages_monotone", "bockstein",
       "page dimensions are non-increasing in r at sampled columns")
def _bss_pages(cfg):
    from .bockstein import _Column
    for t in (0, 2, 4, 6):
        col = _Column("q8", t, 12, 4)
        for s in (0, 1, 2):
            for w in (0, 1, 2, 3):
                dims = [col.page_dim(s, w, r) for r in range(1, 5)]
                if any(dims[i] < dims[i + 1] for i in range(len(dims) - 1)):
                    return _fail(f"({s},{t},{w}): {dims}")
    return _ok("sampled columns", "non-increasing")


@check("bss.phi_graded", "bockstein",
       "the induced comparison map: identity on the unit, full rank in "
       "degree zero, and the degree-one torsion generator maps across")
def _bss_phi(cfg):
    from .bockstein import phi_on_associated_graded
    out = phi_on_associated_graded(3, -8, 8, 12)
    da4, dg24, rank = out[(0, 0)]
    if not (da4 == dg24 == rank):
        return _fail("degree 0 not iso")
    # the (1, 0) torsion class h10 maps to h10 (nonzero rank)
    if out[(1, 0)][2] < 1:
        return _fail("(1,0) class lost")
    return _ok("(0,*) iso, (1,0) hit")


# ---------------------------------------------------------------------------
# adrss suite
# ---------------------------------------------------------------------------

_ADRSS_CACHE = {}


def _adrss_maps(kind):
    from .adrss import _deep, _integral
    if kind not in _ADRSS_CACHE:
        if kind == "deep":
            _ADRSS_CACHE[kind] = _deep(4, 16, 97)
        elif kind == "deep22":
            _ADRSS_CACHE[kind] = _deep(4, 22, 97)
        else:
            _ADRSS_CACHE[kind] = _integral(6, 10, 65)
    return _ADRSS_CACHE[kind]


@check("adrss.partial0_family", "adrss",
       "edge differential on discriminant powers n = 1, 2, 3, -1: leading "
       "term v1^(6 2^k) v2^(2^(k+1)(4t+1)) mod (2, v1^(9 2^k))")
def _ad_p0(cfg):
    from .adrss import partial0_case
    for nexp in (1, 3, -1):
        got, want, ok, spec = partial0_case(nexp, _adrss_maps("deep"))
        if not ok:
            return _fail(f"n={nexp}: {got.render()}", want.render(), spec.render())
    got, want, ok, spec = partial0_case(2, _adrss_maps("deep22"))
    if not ok:
        return _fail(f"n=2: {got.render()}", want.render(), spec.render())
    return _ok("n in {1, 2, 3, -1}", "stated leading terms", "(2, v1^(9*2^k))")


@check("adrss.edge_c6_invariant", "adrss",
       "edge images are invariant under the order-6 subgroup")
def _ad_inv(cfg):
    from .adrss import edge_invariance
    ok = edge_invariance(1, _adrss_maps("deep")) and \
        edge_invariance(3, _adrss_maps("deep"))
    return _bool(ok, "", "", "(2, u1^12)")


@check("adrss.c4_16_divisibility", "adrss",
       "16 divides c4 - phi_alpha(c4); the quotient is v1 v2 mod (2, v1^2); "
       "the normalized bracket is 2 u1 mod (4, u1^2)")
def _ad_c4(cfg):
    from .adrss import c4_bracket_identity_holds, c4_divisibility
    if not c4_bracket_identity_holds(6, 8, random.Random(110)):
        return _fail("bracket identity", "8 A = 9[...]", "random t0, t1")
    res = c4_divisibility(_adrss_maps("int"))
    ok = all(res.values())
    return _bool(ok, str(res), "all divisibility facts", "(32) and (2, v1^2)")


@check("adrss.corv1_for_alpha", "adrss",
       "t0 = t0^4 + u1 t1^2 + u1^2 t1 t0^2 mod 2 for the solved alpha")
def _ad_corv1(cfg):
    from .wseries import wu_add, wu_mul, wu_pow, wu_u1
    am = _adrss_maps("int")["alpha"]
    n, b = am.n, am.b
    t0, t1 = am.t_list[0], am.t_list[1]
    rhs = wu_add(wu_pow(t0, 4, n),
                 wu_add(wu_mul(wu_u1(1, n, b), wu_pow(t1, 2, n), n),
                        wu_mul(wu_u1(2, n, b), wu_mul(t1, wu_pow(t0, 2, n), n), n), n), n)
    return _bool(bool(np.array_equal(t0 & 1, rhs & 1)), "t0", "recursion value", "(2)")


@check("adrss.delta_alpha", "adrss",
       "phi_alpha(Delta) Delta^-1 = 1 + v2^-2 v1^6 mod (2, v1^9)")
def _ad_da(cfg):
    from .adrss import delta_alpha_check
    return _bool(delta_alpha_check(_adrss_maps("deep")), "", "", "(2, v1^9)")


@check("adrss.g24_fixes_alpha_delta", "adrss",
       "phi_i fixes phi_alpha(Delta) mod (2, v1^8)")
def _ad_g24id(cfg):
    from .adrss import g24id_check
    return _bool(g24id_check(_adrss_maps("deep")), "", "", "(2, v1^8)")


@check("adrss.alpha_inverse_agree", "adrss",
       "phi_alpha and phi_(alpha^-1) agree mod (2, v1^9)")
def _ad_ai(cfg):
    from .adrss import alpha_vs_inverse_check
    return _bool(alpha_vs_inverse_check(_adrss_maps("deep")), "", "", "(2, v1^9)")


@check("adrss.lig2_sampled", "adrss",
       "approximate discriminant-linearity of second-order differences on "
       "sampled norm-one pairs, k = 0 and k = 1")
def _ad_lig2(cfg):
    from .adrss import lig2_delta_check, lig2_element_check, sample_maps
    from .deform import named_constants
    maps = _adrss_maps("deep")
    c = named_constants(4, 16)
    samples = sample_maps(maps)
    pairs = [("alpha", "alpha"), ("alpha", "alpha_inv"), ("i_alpha_iinv", "alpha"),
             ("j_alpha_jinv", "alpha_sq"), ("alpha_sq", "i_alpha_iinv")]
    for na, nb in pairs:
        if not lig2_delta_check(samples[na], samples[nb], c):
            return _fail(f"{na},{nb} second difference of the discriminant",
                         "0", "(2, v1^8)")
        for k, t in ((0, 0), (0, 1), (1, 0)):
            if not lig2_element_check(samples[na], samples[nb], k, t, c["v2"], c):
                return _fail(f"{na},{nb} k={k} t={t}", "", "(2, v1^(1+3*2^(k+1)))")
    return _ok("5 pairs, spot-checks of the universally quantified claim",
               "congruences hold", "(2, v1^(1+3*2^(k+1)))")


@check("adrss.d123_v13_divisible", "adrss",
       "images of the third operator are v1^3-divisible and invariant under "
       "the conjugated subgroup, 10 samples")
def _ad_v13(cfg):
    from .adrss import d1_23, g24p_invariant, v13_divisible
    from .deform import monomial, named_constants
    maps = _adrss_maps("deep")
    c = named_constants(4, 16)
    samples = [(1, 0), (2, 0), (3, 0), (-1, 0), (1, 1), (2, 1), (4, 0), (5, 0),
               (-2, 0), (3, 1)]
    for (v2e, de) in samples:
        x = maps["pi"].apply(monomial(c, 0, v2e, de))
        ok, out = v13_divisible(x, maps)
        if not ok:
            return _fail(f"v2^{v2e} Delta^{de}", "v1^3 | image", "(2)")
        if not g24p_invariant(out, maps, depth=8):
            return _fail(f"v2^{v2e} Delta^{de} image not invariant", "", "(2, u1^8)")
    return _ok("10 samples", "divisible and invariant", "(2)")


@check("adrss.x0_sum", "adrss",
       "1 + t0(i)^-3 + t0(j)^-3 + t0(k)^-3 = u1^3 mod 2")
def _ad_x0(cfg):
    from .action import x0_sum_mod2
    from .wseries import wu_u1
    return _bool(bool(np.array_equal(x0_sum_mod2(6, 10), wu_u1(3, 6, 10) & 1)),
                 "x0 sum", "u1^3", "(2)")


@check("adrss.tp2_leading_term", "adrss",
       "third operator on the pi-image of v2^3 Delta: leading term "
       "v1^9 Delta' mod (2, v1^12)")
def _ad_tp2(cfg):
    from .adrss import tp2_leading_term
    got, want, ok = tp2_leading_term(_adrss_maps("deep"))
    return _bool(ok, got.render()[:90], want.render()[:90], "(2, v1^12)")


@check("adrss.v23_sampling", "adrss",
       "phi_g(v2^(3+4t)) = phi_g(v2^3) v2^(4t) mod (2, v1^4), sampled g, t = 1, 2")
def _ad_v23(cfg):
    from .adrss import v23_sampling
    res = v23_sampling(_adrss_maps("deep"))
    bad = [r for r in res if not r[2]]
    return _bool(not bad, f"{len(res)} samples", "congruence holds", "(2, v1^4)")


@check("adrss.e1_page_dims", "adrss",
       "page columns match the finite-subgroup windows; the degree-one "
       "relation h1 = v1 h holds integrally")
def _ad_page(cfg):
    from .adrss import build_e1_page, h1_equals_v1_h_check
    page = build_e1_page(s_max=3, t_min=-12, t_max=12, b=16, n=4)
    ok = page.column_dims_consistent() and h1_equals_v1_h_check()
    ok = ok and page.generators["Delta'[3]"] is not None
    return _bool(ok, "columns 0..3", "window dims", "exact")


# ---------------------------------------------------------------------------
# runner
# ---------------------------------------------------------------------------

def run_suites(suites, cfg: RunConfig, workers: int = 4) -> RunReport:
    selected = set(SUITES) if "all" in suites else set(suites)
    defs = [d for d in REGISTRY if d.suite in selected]
    records = {}

    def run_one(d: CheckDef):
        t0 = time.monotonic()
        try:
            status, computed, expected, idl = d.fn(cfg)
        except Exception as exc:  # noqa: BLE001 - report, never crash the run
            status, computed, expected, idl = "fail", f"error: {exc}", "", ""
        return CheckRecord(check_id=d.check_id, ref=d.ref, status=status,
                           computed=computed, expected=expected, ideal=idl,
                           elapsed=round(time.monotonic() - t0, 3))

    with ThreadPoolExecutor(max_workers=workers) as pool:
        for rec in pool.map(run_one, defs):
            records[rec.check_id] = rec
    ordered = [records[k] for k in sorted(records)]
    summary = RunSummary(total=len(ordered),
                         passed=sum(r.status == "pass" for r in ordered),
                         failed=sum(r.status == "fail" for r in ordered),
                         skipped=sum(r.status == "skipped" for r in ordered))
    return RunReport(config=cfg, checks=ordered, summary=summary)


def run_digit_checks(digits_text: str, cfg: RunConfig) -> RunReport:
    """verify the congruence suite for one digit triple like "w,0,1"."""
    from .action import verify_appendix
    tokens = {"0": 0, "1": 1, "w": 2, "z": 2, "w2": 3, "z2": 3}
    digs = tuple(tokens[tok.strip()] for tok in digits_text.split(","))
    res = verify_appendix(digs, n=cfg.two_adic_prec, b=max(10, cfg.u1_cap),
                          x=max(65, cfg.z_cap + 1))
    records = []
    for (name, idl, got, want, ok) in res:
        records.append(CheckRecord(
            check_id=f"action.digits.{name}", ref="lift-coefficient congruence",
            status="pass" if ok else "fail", computed=got.render()[:120],
            expected=want.render()[:120], ideal=idl))
    records.sort(key=lambda r: r.check_id)
    summary = RunSummary(total=len(records),
                         passed=sum(r.status == "pass" for r in records),
                         failed=sum(r.status == "fail" for r in records), skipped=0)
    return RunReport(config=cfg, checks=records, summary=summary)
