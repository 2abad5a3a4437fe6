import random

import pytest

from ellstab.coeff import (BadPin, Mod2k, NonUnit, NoSquareRoot, PrecisionMismatch,
                           WittElem, ZETA, ZETA2, f4_inv, f4_mul,
                           hensel_sqrt, sqrt_minus7, F4_ELEMENTS)


def test_f4_defining_relation():
    # zeta^2 = 1 + zeta, zeta^3 = 1
    assert f4_mul(ZETA, ZETA) == ZETA2
    assert f4_mul(f4_mul(ZETA, ZETA), ZETA) == 1
    for a in (1, ZETA, ZETA2):
        assert f4_mul(a, f4_inv(a)) == 1


def test_f4_cyclic_group():
    seen = set()
    x = ZETA
    for _ in range(3):
        seen.add(x)
        x = f4_mul(x, ZETA)
    assert seen == {1, ZETA, ZETA2} and x == ZETA


def test_witt_zeta_relations():
    n = 10
    z = WittElem.zeta(n)
    assert z * z == WittElem(-1, -1, n)
    assert z * z * z == WittElem(1, 0, n)


def test_witt_mul_example():
    # (1 - 2 zeta) * sigma(1 - 2 zeta) = 7
    n = 12
    x = WittElem(1, -2, n)
    assert x * x.frobenius() == WittElem(7, 0, n)
    assert x.det_form() == Mod2k(7, n)


def test_witt_ring_axioms_randomized():
    rng = random.Random(1)
    n = 8
    for _ in range(1000):
        x = WittElem(rng.getrandbits(n), rng.getrandbits(n), n)
        y = WittElem(rng.getrandbits(n), rng.getrandbits(n), n)
        z = WittElem(rng.getrandbits(n), rng.getrandbits(n), n)
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


def test_frobenius_properties():
    rng = random.Random(2)
    n = 9
    assert WittElem.zeta(n).frobenius() == WittElem(-1, -1, n)
    assert WittElem(5, 0, n).frobenius() == WittElem(5, 0, n)
    for _ in range(200):
        x = WittElem(rng.getrandbits(n), rng.getrandbits(n), n)
        y = WittElem(rng.getrandbits(n), rng.getrandbits(n), n)
        assert x.frobenius().frobenius() == x
        assert (x * y).frobenius() == x.frobenius() * y.frobenius()
        assert (x + y).frobenius() == x.frobenius() + y.frobenius()
        assert (x * x.frobenius()).b == 0


def test_precision_mismatch_raises():
    with pytest.raises(PrecisionMismatch):
        WittElem(1, 0, 5) * WittElem(1, 0, 6)
    with pytest.raises(PrecisionMismatch):
        Mod2k(1, 5) + Mod2k(1, 6)


def test_teichmuller():
    n = 10
    assert WittElem.teichmuller(ZETA, n) == WittElem.zeta(n)
    for d in F4_ELEMENTS:
        t = WittElem.teichmuller(d, n)
        assert (t ** 4 - t).is_zero()
        assert t.reduce_mod2() == d
    for d in F4_ELEMENTS:
        for e in F4_ELEMENTS:
            lhs = WittElem.teichmuller(f4_mul(d, e), n)
            assert lhs == WittElem.teichmuller(d, n) * WittElem.teichmuller(e, n)


def test_witt_invert():
    n = 5
    assert WittElem(1, 0, n).inv() == WittElem(1, 0, n)
    z = WittElem.zeta(n)
    assert z.inv() == z * z
    assert WittElem(3, 0, n).inv() == WittElem(11, 0, n)  # 3 * 11 = 33 = 1 mod 32
    with pytest.raises(NonUnit):
        WittElem(2, 0, n).inv()


def test_hensel_sqrt_basics():
    assert hensel_sqrt(Mod2k(1, 8), 1) == Mod2k(1, 8)
    assert hensel_sqrt(Mod2k(9, 8), 3) == Mod2k(3, 8)
    with pytest.raises(NoSquareRoot):
        hensel_sqrt(Mod2k(3, 8), 1)
    with pytest.raises(BadPin):
        hensel_sqrt(Mod2k(17, 8), 3)  # 17 = 1 mod 16; roots are 1, 7 mod 8


def test_hensel_sqrt_minus7():
    # brute force: residues mod 32 squaring to 25 with the pin-5 branch
    roots = [r for r in range(32) if (r * r - 25) % 32 == 0 and r % 8 == 5]
    got = hensel_sqrt(Mod2k(-7, 5), 5)
    assert got.value in roots
    assert (got * got).value == 25
    hi = hensel_sqrt(Mod2k(-7, 20), 5)
    assert (hi * hi) == Mod2k(-7, 20)
    # sqrt_minus7 holds -7 exactly, so its values are precision-compatible
    lo = sqrt_minus7(5, 5)
    hi2 = sqrt_minus7(20, 5)
    assert hi2.a % 32 == lo.a
    assert hi2 * hi2 == WittElem(-7, 0, 20)


def test_hensel_sqrt_random():
    rng = random.Random(3)
    n = 12
    for _ in range(100):
        u = Mod2k(8 * rng.getrandbits(n - 3) + 1, n)
        for pin in (1, 3, 5, 7):
            if (pin * pin - u.value) % 16 == 0:
                r = hensel_sqrt(u, pin)
                assert (r * r) == u
                assert r.value % 8 == pin
                break


def test_sqrt_minus7_both_branches():
    n = 10
    for pin in (3, 5):
        r = sqrt_minus7(n, pin)
        assert r * r == WittElem(-7, 0, n)
