import numpy as np
import pytest

from ellstab.deform import (DegreeMismatch, IdealNotExpressible,
                            IdealSpec, ideal, monomial, named_constants)
from ellstab.fgl import EllipticFGL, curve_cu_mod2


def test_ideal_parsing():
    s = IdealSpec.parse("(4, 2u1^2, u1^10)")
    assert s.gens == ((0, 10), (1, 2), (2, 0))
    assert s.two_exponent(0, 6) == 2
    assert s.two_exponent(2, 6) == 1
    assert s.two_exponent(9, 6) == 1
    assert s.two_exponent(10, 6) == 0
    v = IdealSpec.parse("(2, v1^9)")
    assert v.gens == ((0, 9), (1, 0))
    with pytest.raises(IdealNotExpressible):
        IdealSpec.parse("(3)")
    with pytest.raises(IdealNotExpressible):
        IdealSpec.parse("(2, v2^4)")


def test_reduce_mod_one_and_v13():
    n, b = 6, 10
    c = named_constants(n, b)
    everything = IdealSpec.parse("(1)")
    assert c["Delta"].reduce(everything).coeff.sum() == 0
    v13 = c["v1"] ** 3
    assert v13.is_zero_mod(ideal("(2, v1^3)"))
    assert not v13.is_zero_mod(ideal("(2, v1^4)"))


def test_degree_bookkeeping():
    n, b = 6, 8
    c = named_constants(n, b)
    assert c["v1"].t == 2 and c["v2"].t == 6 and c["Delta"].t == 24
    assert c["c4"].t == 8 and c["j"].t == 0 and c["u"].t == -2
    assert (c["v1"] * c["v2"]).t == 8
    with pytest.raises(DegreeMismatch):
        c["v1"] + c["v2"]


def test_delta_mod2_closed_form():
    n, b = 6, 16
    c = named_constants(n, b)
    # Delta = v2 (v2 + v1^3)^3 mod 2
    v1, v2 = c["v1"], c["v2"]
    rhs = v2 * ((v2 + v1 ** 3) ** 3)
    assert c["Delta"].eq_mod(rhs, ideal("(2)"))
    # Delta mod (2, v1^9) in degree 24: v2^4 + v2^3 v1^3 + v2^2 v1^6
    want = monomial(c, 0, 4) + monomial(c, 3, 3) + monomial(c, 6, 2)
    assert c["Delta"].eq_mod(want, ideal("(2, v1^9)"))


def test_j_delta_relation():
    n, b = 6, 14
    c = named_constants(n, b)
    lhs = c["j"] * c["Delta"]
    assert lhs.eq_mod(c["v1"] ** 12, ideal("(2)"))


def test_c4_closed_form():
    # c4 = 9(v1^4 + 8 v1 v2)
    n, b = 6, 10
    c = named_constants(n, b)
    rhs = ((c["v1"] ** 4) + (c["v1"] * c["v2"]).scale_int(8)).scale_int(9)
    assert np.array_equal(c["c4"].coeff, rhs.coeff) and c["c4"].t == rhs.t


def test_graded_two_series_head():
    # [2]-series of the universal curve mod 2: v1 x^2 + v2 (u1^3 + 1) x^4 + ...
    b, cap = 8, 8
    fgl = EllipticFGL.of(curve_cu_mod2(b), cap)
    two = fgl.m_series(2)
    ring = two.ring
    assert two.c[2] == ring.u1(1)
    want4 = list(ring.u1(3))
    want4[0] = 1
    assert two.c[4] == tuple(want4)
    # graded homogeneity: the x^k coefficient pairs with u^(k-1); nothing to
    # compute, but the [-2] = [2] o [-1] identity ties the chain together
    m2 = fgl.m_series(-2)
    assert fgl.m_series(-1).compose(two) == m2


def test_divide_v1():
    n, b = 6, 10
    c = named_constants(n, b)
    x = (c["v1"] ** 4) * c["v2"]
    y = x.divide_v1(4)
    assert y.t == c["v2"].t and np.array_equal(y.coeff, c["v2"].coeff)
    with pytest.raises(IdealNotExpressible):
        c["v2"].divide_v1(1)


def test_inhomogeneous_valid_tag_join():
    n, b = 6, 8
    c = named_constants(n, b)
    x = c["v2"].reduce(ideal("(2, u1^4)"))
    y = c["v2"].reduce(ideal("(4, u1^6)"))
    z = x * y
    assert z.valid is not None
    assert z.valid.two_exponent(4, n) <= 1
