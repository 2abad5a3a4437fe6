import random

import pytest

from ellstab.adrss import (_deep, _integral, alpha_sq_trivial_check,
                           alpha_vs_inverse_check, build_e1_page, c4_bracket_identity_holds,
                           c4_divisibility, d1_23, delta_alpha_check, edge_invariance,
                           g24id_check, g24p_invariant, h1_equals_v1_h_check,
                           lig2_delta_check, lig2_element_check, partial0_case,
                           sample_maps, tp2_leading_term, v13_divisible, v23_sampling)
from ellstab.deform import ideal, monomial, named_constants


@pytest.fixture(scope="module")
def maps():
    return _deep(4, 16, 97)


@pytest.fixture(scope="module")
def maps_int():
    return _integral(6, 10, 65)


def test_partial0_family(maps):
    for nexp in (1, 3, -1):
        got, want, ok, spec = partial0_case(nexp, maps)
        assert ok, (nexp, got.render(), want.render())


def test_partial0_even_power():
    maps22 = _deep(4, 22, 97)
    got, want, ok, spec = partial0_case(2, maps22)
    assert ok and spec.render() == "(2, v1^18)"


def test_edge_unit_killed(maps):
    n, b = maps["alpha"].n, maps["alpha"].b
    one = named_constants(n, b)["Delta"] ** 0
    out = one - maps["alpha"].apply(one)
    assert out.is_zero_mod(ideal("(2, u1^12)"))


def test_edge_lands_in_invariants(maps):
    assert edge_invariance(1, maps)
    assert edge_invariance(-1, maps)


def test_c4_bracket_identity():
    assert c4_bracket_identity_holds(6, 8, random.Random(71))


def test_c4_divisibility(maps_int):
    res = c4_divisibility(maps_int)
    assert all(res.values()), res


def test_delta_alpha(maps):
    assert delta_alpha_check(maps)


def test_g24id(maps):
    assert g24id_check(maps)


def test_alpha_inverse(maps):
    assert alpha_vs_inverse_check(maps)
    assert alpha_sq_trivial_check(maps)


def test_lig2(maps):
    c = named_constants(4, 16)
    samples = sample_maps(maps)
    for (na, nb) in [("alpha", "alpha"), ("alpha", "alpha_inv"),
                     ("i_alpha_iinv", "alpha"), ("alpha_sq", "j_alpha_jinv")]:
        assert lig2_delta_check(samples[na], samples[nb], c), (na, nb)
        assert lig2_element_check(samples[na], samples[nb], 0, 0, c["v2"], c)
        assert lig2_element_check(samples[na], samples[nb], 1, 0, c["v2"], c)


def test_d123_v13_divisible_and_invariant(maps):
    c = named_constants(4, 16)
    for (v2e, de) in [(1, 0), (3, 0), (-1, 0), (2, 1)]:
        x = maps["pi"].apply(monomial(c, 0, v2e, de))
        ok, out = v13_divisible(x, maps)
        assert ok, (v2e, de)
        assert g24p_invariant(out, maps, depth=8), (v2e, de)


def test_d123_kills_alpha_fixed_unit(maps):
    c = named_constants(4, 16)
    one = monomial(c, 0, 0, 0)
    out = d1_23(one, maps)
    assert out.is_zero_mod(ideal("(2, u1^10)"))


def test_tp2_leading_term(maps):
    got, want, ok = tp2_leading_term(maps)
    assert ok, (got.render(), want.render())


def test_v23_sampling(maps):
    assert all(r[2] for r in v23_sampling(maps))


def test_e1_page():
    page = build_e1_page(s_max=3, t_min=-12, t_max=12, b=16, n=4)
    assert page.column_dims_consistent()
    assert page.generators["Delta[0]"].t == 24
    assert page.generators["Delta'[3]"] is not None


def test_h1_is_v1_h():
    assert h1_equals_v1_h_check()
