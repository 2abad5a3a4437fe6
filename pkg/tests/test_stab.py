import random
from fractions import Fraction

import pytest

from ellstab.coeff import Mod2k, NonUnit, WittElem, ZETA, f4_add, f4_mul, f4_pow
from ellstab.stab import (InsufficientPrecision, StabElem, alpha, digit_series,
                          filtration_level, from_t_digits, omega, pi_elem,
                          t_digits, to_power_series)
from ellstab.wseries import F4Series


def rand_stab(rng, n, unit=True):
    while True:
        g = StabElem(WittElem(rng.getrandbits(n), rng.getrandbits(n), n),
                     WittElem(rng.getrandbits(n), rng.getrandbits(n), n))
        if not unit or g.is_unit():
            return g


def test_omega_order_three():
    w = omega(8)
    assert w * w * w == StabElem.one(8)
    assert w.inv() == w * w


def test_alpha_identities():
    n = 12
    a = alpha(n)
    # alpha * sigma(alpha) = -1
    assert a * a.galois() == -StabElem.one(n)
    assert a.det() == Mod2k(-1, n)
    assert a.is_norm_one()
    assert t_digits(a, 5) == [1, 0, ZETA, 0, 1]


def test_pi_identities():
    n = 10
    p = pi_elem(n)
    assert p.det() == Mod2k(3, n)
    assert not p.is_norm_one()
    d = t_digits(p, 4)
    assert d[0] == 1 and d[1] == 0 and d[2] == ZETA
    # pi^2 = -3
    assert p * p == StabElem.from_witt(WittElem(-3, 0, n))


def test_det_multiplicative():
    rng = random.Random(31)
    n = 8
    for _ in range(300):
        x = rand_stab(rng, n, unit=False)
        y = rand_stab(rng, n, unit=False)
        assert (x * y).det() == x.det() * y.det()


def test_inverse():
    rng = random.Random(32)
    n = 8
    one = StabElem.one(n)
    for _ in range(100):
        x = rand_stab(rng, n)
        assert x * x.inv() == one
        assert x.inv() * x == one
    with pytest.raises(NonUnit):
        StabElem(WittElem(2, 0, n), WittElem(1, 1, n)).inv()


def test_t_digits_round_trip():
    rng = random.Random(33)
    n = 10
    for _ in range(1000):
        g = rand_stab(rng, n, unit=False)
        L = 6
        d = t_digits(g, L)
        back = from_t_digits(d, n)
        diff = g - back
        # agreement mod T^L means both coordinates vanish mod 2^(L//2)
        m = (1 << (L // 2)) - 1
        assert diff.a.a & m == 0 and diff.a.b & m == 0
        assert diff.b.a & m == 0 and diff.b.b & m == 0


def test_t_digits_one():
    n = 8
    assert t_digits(StabElem.one(n), 8) == [1] + [0] * 7


def test_t_digits_precision_guard():
    with pytest.raises(InsufficientPrecision):
        t_digits(StabElem.one(3), 8)


def test_filtration_levels():
    n = 12
    assert filtration_level(pi_elem(n)) == Fraction(2, 2)
    a = alpha(n)
    assert filtration_level(a) == Fraction(2, 2)
    assert filtration_level(a * a) >= Fraction(4, 2)
    assert filtration_level(omega(n)) == 0


def test_filtration_submultiplicative():
    rng = random.Random(34)
    n = 12
    pool = []
    while len(pool) < 12:
        g = rand_stab(rng, n)
        d = t_digits(g, 3)
        if d[0] == 1:
            pool.append(g)
    for _ in range(40):
        x = rng.choice(pool)
        y = rng.choice(pool)
        lx, ly = filtration_level(x), filtration_level(y)
        assert filtration_level(x * y) >= min(lx, ly)


def test_norm_one_examples():
    n = 10
    assert omega(n).is_norm_one()
    assert alpha(n).is_norm_one()
    assert not pi_elem(n).is_norm_one()


def test_to_power_series_simple():
    n = 10
    cap = 9
    x = F4Series.monomial(cap, 1)
    assert to_power_series(StabElem.one(n), cap) == x
    w = to_power_series(omega(n), cap)
    assert w == x.scale(ZETA)


def test_to_power_series_head():
    # generic 2-Sylow element: printed head through x^17
    rng = random.Random(35)
    cap = 18
    for _ in range(12):
        a1, a2, a3, a4 = (rng.randrange(4) for _ in range(4))
        s = digit_series([1, a1, a2, a3, a4], cap)
        expect = {1: 1, 2: a1, 4: a2, 6: f4_pow(a1, 2), 8: a3, 10: f4_pow(a2, 2),
                  12: f4_mul(f4_pow(a1, 2), f4_pow(a2, 2)), 14: a1,
                  16: f4_add(f4_pow(a1, 3), a4)}
        for k in range(cap):
            assert s.coeff(k) == expect.get(k, 0), (k, a1, a2, a3, a4)


def test_to_power_series_homomorphism():
    # series of a product is the composite of the series
    rng = random.Random(36)
    n = 12
    cap = 17
    for _ in range(6):
        x = rand_stab(rng, n)
        y = rand_stab(rng, n)
        sx = to_power_series(x, cap)
        sy = to_power_series(y, cap)
        sxy = to_power_series(x * y, cap)
        assert sxy == _compose(sx, sy)


def _compose(f, g):
    out = F4Series.zero(f.x)
    for k in range(f.x - 1, -1, -1):
        out = out * g
        c = f.coeff(k)
        if c:
            out = out + F4Series.monomial(f.x, 0, c)
    return out


def test_alpha_pin_stability():
    # digits computed at different precisions agree
    d12 = t_digits(alpha(12), 6)
    d20 = t_digits(alpha(20), 6)
    assert d12 == d20
