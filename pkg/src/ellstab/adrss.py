"""First-page differential checks for the duality resolution.

The edge operator is id - phi_alpha on invariants of the order-24 group; the
last operator is phi_pi (id + phi_i + phi_j + phi_k)(id - phi_alpha^{-1})
phi_pi^{-1} on invariants of the order-6 group.  Every congruence is checked
against solver output whose certification covers the stated ideal; squares
are taken through the ring map itself, which doubles mod-2 depth.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .action import ActionMap, g24_action, phi_i, phi_j, phi_k, phi_minus1, \
    phi_omega, solve_action
from .deform import GradedElem, ideal, monomial, named_constants
from .grpcoh import cohomology_dims, hc6_count
from .stab import alpha, pi_elem
from . import wseries as ws


class DivisibilityFailure(AssertionError):
    pass


# ---------------------------------------------------------------------------
# Solver handles at the two working precisions
# ---------------------------------------------------------------------------

def _deep(n=4, b=16, x=97):
    """Mod-2-oriented maps, certified through u1^12."""
    a = alpha(40)
    return {
        "alpha": solve_action(a, n, b, x, label="alpha"),
        "alpha_inv": solve_action(a.inv(), n, b, x, label="alpha-inv"),
        "alpha_sq": solve_action(a * a, n, b, x, label="alpha-sq"),
        "pi": solve_action(pi_elem(40), n, b, x, label="pi"),
        "pi_inv": solve_action(pi_elem(40).inv(), n, b, x, label="pi-inv"),
    }


def _integral(n=6, b=10, x=65):
    a = alpha(40)
    return {
        "alpha": solve_action(a, n, b, x, label="alpha"),
    }


def d1_edge(x: GradedElem, phi_alpha: ActionMap) -> GradedElem:
    return x - phi_alpha.apply(x)


def d1_23(x: GradedElem, maps: dict) -> GradedElem:
    """phi_pi (id + phi_i + phi_j + phi_k)(id - phi_alpha^{-1}) phi_pi^{-1}."""
    n, b = maps["pi"].n, maps["pi"].b
    y = maps["pi_inv"].apply(x)
    y = y - maps["alpha_inv"].apply(y)
    acc = y
    for mp in (phi_i(n, b), phi_j(n, b), phi_k(n, b)):
        acc = acc + mp.apply(y)
    return maps["pi"].apply(acc)


# ---------------------------------------------------------------------------
# Edge differential family
# ---------------------------------------------------------------------------

def partial0_case(nexp: int, maps: dict) -> tuple:
    """d1(Delta^n) against the leading term v1^{6 2^k} v2^{2^{k+1}(4t+1)}
    mod (2, v1^{9 2^k}) for n = 2^k (2t+1).

    For even n the map is applied to Delta^{n/2} and squared, which is the
    same ring element and doubles the certified mod-2 depth.
    """
    n_map, b = maps["alpha"].n, maps["alpha"].b
    c = named_constants(n_map, b)
    k = 0
    m = nexp
    while m % 2 == 0:
        k += 1
        m //= 2
    t = (m - 1) // 2
    spec = ideal(f"(2, v1^{9 * (2 ** k)})")
    half = c["Delta"] ** (nexp // (2 ** k))
    img = maps["alpha"].apply(half)
    for _ in range(k):
        img = img * img
        half = half * half
    got = half - img
    want = monomial(c, 6 * 2 ** k, 2 ** (k + 1) * (4 * t + 1))
    return got.reduce(spec), want.reduce(spec), got.eq_mod(want, spec), spec


def edge_invariance(nexp: int, maps: dict) -> bool:
    """The edge image lands in the order-6 invariants at mod-2 depth."""
    n_map, b = maps["alpha"].n, maps["alpha"].b
    c = named_constants(n_map, b)
    out = d1_edge(c["Delta"] ** nexp, maps["alpha"])
    w = phi_omega(n_map, b)
    m1 = phi_minus1(n_map, b)
    spec = ideal("(2, u1^12)")
    return out.eq_mod(w.apply(out), spec) and out.eq_mod(m1.apply(out), spec)


# ---------------------------------------------------------------------------
# The 16-divisibility of the edge on the weight-8 modular form
# ---------------------------------------------------------------------------

def c4_bracket(t0, t1, n: int, b: int):
    """A with c4 - phi(c4) = 8 u^{-4} A, exact in (t0, t1):

    A = 9 u1 - 9 u1/t0^3 - 3 t1 u1^3/t0^2 - 3 t1^2 u1^2/t0^4
        - (4/3) t1^3 u1/t0^6 - (2/9) t1^4/t0^8 - 6 t1/t0^5.
    """
    inv3 = ws.wu_inv(ws.wu_int(3, n, b), n)
    t0i = ws.wu_inv(t0, n)
    m = lambda p, q: ws.wu_mul(p, q, n)
    u1 = ws.wu_u1(1, n, b)
    u12 = ws.wu_u1(2, n, b)
    u13 = ws.wu_u1(3, n, b)
    t0i2 = m(t0i, t0i)
    t0i3 = m(t0i2, t0i)
    t0i4 = m(t0i2, t0i2)
    t0i5 = m(t0i4, t0i)
    t0i6 = m(t0i4, t0i2)
    t0i8 = m(t0i4, t0i4)
    t1sq = m(t1, t1)
    terms = [
        m(u1, ws.wu_int(9, n, b)),
        m(m(u1, t0i3), ws.wu_int(-9, n, b)),
        m(m(m(t1, u13), t0i2), ws.wu_int(-3, n, b)),
        m(m(m(t1sq, u12), t0i4), ws.wu_int(-3, n, b)),
        m(m(m(m(t1sq, t1), u1), t0i6), m(ws.wu_int(-4, n, b), inv3)),
        m(m(m(t1sq, t1sq), t0i8), m(m(ws.wu_int(-2, n, b), inv3), inv3)),
        m(m(t1, t0i5), ws.wu_int(-6, n, b)),
    ]
    out = terms[0]
    for t_ in terms[1:]:
        out = ws.wu_add(out, t_, n)
    return out


def c4_bracket_identity_holds(n: int, b: int, rng) -> bool:
    """9[u1(u1^3+8) - t0^{-4} phi(u1)(phi(u1)^3+8)] = 8 A for random unit t0, t1."""
    nx = n + 3
    for _ in range(12):
        t0 = np.array([[rng.getrandbits(nx) | (1 if d == 0 else 0), rng.getrandbits(nx)]
                       for d in range(b)], dtype=np.int64) & ((1 << nx) - 1)
        t0[0, 0] |= 1
        t1 = np.array([[rng.getrandbits(nx), rng.getrandbits(nx)] for _ in range(b)],
                      dtype=np.int64) & ((1 << nx) - 1)
        m = lambda p, q: ws.wu_mul(p, q, nx)
        inv3 = ws.wu_inv(ws.wu_int(3, nx, b), nx)
        t0i = ws.wu_inv(t0, nx)
        phi_u1 = ws.wu_add(m(t0, ws.wu_u1(1, nx, b)),
                           m(m(ws.wu_int(2, nx, b), inv3), m(t1, t0i)), nx)
        u1 = ws.wu_u1(1, nx, b)
        lhs = m(ws.wu_int(9, nx, b),
                ws.wu_add(m(u1, ws.wu_add(ws.wu_u1(3, nx, b), ws.wu_int(8, nx, b), nx)),
                          ws.wu_neg(m(ws.wu_pow(t0i, 4, nx),
                                      m(phi_u1, ws.wu_add(ws.wu_pow(phi_u1, 3, nx),
                                                          ws.wu_int(8, nx, b), nx))), nx), nx))
        rhs = np.bitwise_and(c4_bracket(t0, t1, nx, b) * 8, (1 << nx) - 1)
        if not np.array_equal(lhs, rhs):
            return False
    return True


def c4_divisibility(maps_int: dict) -> dict:
    """16 | c4 - phi_alpha(c4); B1 = quotient/16 = v1 v2 mod (2, v1^2);
    b1 = B1/v1 = v2 mod (2, v1^3); A = 2 u1 mod (4, u1^2)."""
    am = maps_int["alpha"]
    n, b = am.n, am.b
    A = c4_bracket(am.t0, am.t_list[1], n, b)
    out = {}
    out["A_even"] = not (A & 1).any()
    if not out["A_even"]:
        raise DivisibilityFailure("the c4 edge image is not divisible by 16")
    spec42 = ideal("(4, u1^2)")
    got = GradedElem(0, A, n, b).reduce(spec42)
    want = GradedElem(0, ws.wu_u1(1, n, b) * 2, n, b).reduce(spec42)
    out["A_eq_2u1"] = bool(np.array_equal(got.coeff, want.coeff))
    # B1 = u^{-4} A/2, so B1/(v1 v2) = (A/2)/u1 mod 2
    half = (A >> 1) & ((1 << (n - 1)) - 1)
    b1 = GradedElem(8, half, n - 1, b)
    c = named_constants(n - 1, b)
    out["B1_eq_v1v2"] = b1.eq_mod(c["v1"] * c["v2"], ideal("(2, v1^2)"))
    shifted = np.zeros_like(half)
    shifted[: b - 1] = half[1:]
    b1v = GradedElem(6, shifted, n - 1, b)
    out["b1_eq_v2"] = b1v.eq_mod(c["v2"], ideal("(2, v1^3)"))
    return out


# ---------------------------------------------------------------------------
# Delta linearity
# ---------------------------------------------------------------------------

def delta_alpha_check(maps: dict) -> bool:
    """phi_alpha(Delta) Delta^{-1} = 1 + v2^{-2} v1^6 mod (2, v1^9)."""
    am = maps["alpha"]
    n, b = am.n, am.b
    c = named_constants(n, b)
    lhs = am.apply(c["Delta"]) * c["Delta"].inv()
    want = GradedElem.one(n, b) + monomial(c, 6, -2)
    return lhs.eq_mod(want, ideal("(2, v1^9)"))


def g24id_check(maps: dict) -> bool:
    """phi_i fixes phi_alpha(Delta) mod (2, v1^8)."""
    am = maps["alpha"]
    n, b = am.n, am.b
    c = named_constants(n, b)
    x = am.apply(c["Delta"])
    return phi_i(n, b).apply(x).eq_mod(x, ideal("(2, v1^8)"))


def alpha_vs_inverse_check(maps: dict) -> bool:
    """phi_alpha = phi_alpha^{-1} mod (2, v1^9), and the composite is the
    identity at the certified level."""
    spec = ideal("(2, u1^9)")
    a, ai = maps["alpha"], maps["alpha_inv"]
    if not a.eq_mod(ai, spec):
        return False
    comp = a.compose(ai)
    n, b = a.n, a.b
    idm = g24_action("", n, b)
    return comp.eq_mod(idm, spec)


def alpha_sq_trivial_check(maps: dict) -> bool:
    spec = ideal("(2, u1^9)")
    n, b = maps["alpha_sq"].n, maps["alpha_sq"].b
    return maps["alpha_sq"].eq_mod(g24_action("", n, b), spec)


def sample_maps(maps: dict) -> dict:
    """Norm-one sampled actions: alpha-family and its quaternion conjugates."""
    n, b = maps["alpha"].n, maps["alpha"].b
    i = phi_i(n, b)
    i_inv = g24_action("-1 i", n, b)   # i^3 = -i
    j = phi_j(n, b)
    j_inv = g24_action("-1 w i w w", n, b)
    out = {
        "alpha": maps["alpha"],
        "alpha_inv": maps["alpha_inv"],
        "alpha_sq": maps["alpha_sq"],
        "i_alpha_iinv": i.compose(maps["alpha"]).compose(i_inv, label="iai'"),
        "j_alpha_jinv": j.compose(maps["alpha"]).compose(j_inv, label="jaj'"),
    }
    return out


def lig2_element_check(g: ActionMap, h: ActionMap, k: int, t: int, x: GradedElem,
                       consts: dict) -> bool:
    """(id-phi_g)(id-phi_h)(x Delta^{2^k(1+2t)}) =
       [(id-phi_g)(id-phi_h)(x)] Delta^{2^k(1+2t)} mod (2, v1^{1+3*2^{k+1}})."""
    e = 2 ** k * (1 + 2 * t)
    dpow = consts["Delta"] ** e
    def op(y):
        z = y - h.apply(y)
        return z - g.apply(z)
    lhs = op(x * dpow)
    rhs = op(x) * dpow
    return lhs.eq_mod(rhs, ideal(f"(2, v1^{1 + 3 * 2 ** (k + 1)})"))


def lig2_delta_check(g: ActionMap, h: ActionMap, consts: dict) -> bool:
    """(id-phi_g)(id-phi_h)(Delta) = 0 mod (2, v1^8)."""
    y = consts["Delta"] - h.apply(consts["Delta"])
    out = y - g.apply(y)
    return out.is_zero_mod(ideal("(2, v1^8)"))


# ---------------------------------------------------------------------------
# The third operator
# ---------------------------------------------------------------------------

def v13_divisible(x: GradedElem, maps: dict) -> tuple:
    out = d1_23(x, maps)
    red = out.reduce(ideal("(2)"))
    return red.u1_valuation() >= 3 or red.coeff.any() == False, out


def g24p_invariant(x: GradedElem, maps: dict, depth: int = 10) -> bool:
    """Conjugated generators pi g pi^{-1} fix x at mod-2 depth."""
    n, b = maps["pi"].n, maps["pi"].b
    spec = ideal(f"(2, u1^{depth})")
    for word in ("w", "i"):
        g = g24_action(word, n, b)
        conj = maps["pi"].compose(g).compose(maps["pi_inv"])
        if not conj.apply(x).eq_mod(x, spec):
            return False
    return True


def tp2_leading_term(maps: dict) -> tuple:
    """d1'(phi_pi(v2^3 Delta)) = v1^9 Delta' mod (2, v1^12)."""
    n, b = maps["pi"].n, maps["pi"].b
    c = named_constants(n, b)
    x = maps["pi"].apply((c["v2"] ** 3) * c["Delta"])
    out = d1_23(x, maps)
    dprime = maps["pi"].apply(c["Delta"])
    want = (c["v1"] ** 9) * dprime
    spec = ideal("(2, v1^12)")
    return out.reduce(spec), want.reduce(spec), out.eq_mod(want, spec)


def v23_sampling(maps: dict) -> list:
    """phi_g(v2^{3+4t}) = phi_g(v2^3) v2^{4t} mod (2, v1^4)."""
    n, b = maps["alpha"].n, maps["alpha"].b
    c = named_constants(n, b)
    spec = ideal("(2, v1^4)")
    out = []
    for name, mp in sample_maps(maps).items():
        for t in (1, 2):
            lhs = mp.apply(c["v2"] ** (3 + 4 * t))
            rhs = mp.apply(c["v2"] ** 3) * (c["v2"] ** (4 * t))
            out.append((name, t, lhs.eq_mod(rhs, spec)))
    return out


# ---------------------------------------------------------------------------
# Page assembly
# ---------------------------------------------------------------------------

@dataclass
class E1Page:
    s_max: int
    t_min: int
    t_max: int
    b: int
    columns: dict = field(default_factory=dict)   # p -> CohWindow
    generators: dict = field(default_factory=dict)

    def column_dims_consistent(self) -> bool:
        g = self.columns[0]
        for t in range(self.t_min, self.t_max + 1, 2):
            for s in range(self.s_max + 1):
                if self.columns[3].dim(s, t) != g.dim(s, t):
                    return False
                if self.columns[1].dim(s, t) != hc6_count(t, self.b):
                    return False
                if self.columns[2].dim(s, t) != self.columns[1].dim(s, t):
                    return False
        return True


def build_e1_page(s_max=4, t_min=-24, t_max=24, b=16, n=4) -> E1Page:
    g24 = cohomology_dims("g24", s_max=s_max, t_min=t_min, t_max=t_max, b=b)
    c6 = cohomology_dims("c6", s_max=s_max, t_min=t_min, t_max=t_max, b=b)
    page = E1Page(s_max, t_min, t_max, b,
                  columns={0: g24, 1: c6, 2: c6, 3: g24})
    c = named_constants(n, b)
    maps = _deep(n, b if b >= 16 else 16, 97)
    dprime = maps["pi"].apply(c["Delta"]) if maps["pi"].b == b else None
    page.generators = {
        "Delta[0]": c["Delta"],
        "v2[1]": c["v2"],
        "v2[2]": c["v2"],
        "Delta'[3]": dprime,
    }
    return page


def h1_equals_v1_h_check(n: int = 6, b: int = 12) -> bool:
    """The integral coboundary of the v1-lift is 2 v1 * (unit cocycle): the
    mod-2 connecting class is v1 times the degree-one generator."""
    # order-6 complex in internal degree 2: d-dual at step 0 is 1 - phi_{-1},
    # and phi_{-1} negates u^{-1}
    v1_lift = named_constants(n, b)["v1"]
    image = v1_lift - v1_lift.scale_int(-1)
    assert image.coeff[1, 0] == 2 and not (image.coeff[0].any())
    half = GradedElem(2, (image.coeff >> 1) & ((1 << (n - 1)) - 1), n - 1, b)
    v1m = named_constants(n - 1, b)["v1"]
    return half.eq_mod(v1m, ideal("(2)"))
