"""The deformation ring W[[u1]][u^{+-1}] at finite precision.

A homogeneous element of internal degree t is stored as its u-free
coefficient, a u1-poly c with the element being c * u^(-t/2).  Validity
ideals are finite generator lists {2^a * u1^b}; a "mod (2, v1^k)" statement
about a homogeneous element is the same as "mod (2, u1^k)" on its
coefficient, since v1 is a unit multiple of u1 in each fixed degree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import wseries as ws


class IdealNotExpressible(ValueError):
    pass


class DegreeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class IdealSpec:
    """Ideal generated by 2^a * u1^b for (a, b) in gens, inside W/2^n[[u1]]/u1^cap."""

    gens: tuple
    label: str = ""

    @staticmethod
    def parse(text: str) -> "IdealSpec":
        """Accepts forms like "(2, u1^9)", "(4, 2u1^2, u1^10)", "(2, v1^8)".

        v1-powers are normalized to u1-powers (homogeneous context).
        """
        body = text.strip().strip("()")
        gens = []
        for part in body.split(","):
            part = part.strip().replace(" ", "")
            if not part:
                continue
            a = 0
            if part and part[0].isdigit():
                num = ""
                while part and part[0].isdigit():
                    num += part[0]
                    part = part[1:]
                v = int(num)
                if v & (v - 1):
                    raise IdealNotExpressible(f"{v} is not a 2-power")
                a = v.bit_length() - 1
            b = 0
            if part.startswith("*"):
                part = part[1:]
            if part:
                if not (part.startswith("u1") or part.startswith("v1")):
                    raise IdealNotExpressible(f"cannot express generator {part!r}")
                rest = part[2:]
                b = 1
                if rest.startswith("^"):
                    b = int(rest[1:])
                elif rest:
                    raise IdealNotExpressible(f"cannot parse generator {part!r}")
            gens.append((a, b))
        return IdealSpec(tuple(sorted(set(gens))), text.strip())

    def two_exponent(self, u1_degree: int, ambient_n: int) -> int:
        """Bits retained at the given u1-degree after reduction."""
        e = ambient_n
        for a, b in self.gens:
            if b <= u1_degree:
                e = min(e, a)
        return e

    def render(self) -> str:
        return self.label or "(" + ", ".join(
            (f"2^{a}" if a else "1") + (f"*u1^{b}" if b else "") for a, b in self.gens) + ")"


def ideal(text: str) -> IdealSpec:
    return IdealSpec.parse(text)


@dataclass
class GradedElem:
    """coeff * u^(-t/2); coeff is a (B, 2) int64 array over W/2^n."""

    t: int
    coeff: np.ndarray
    n: int
    b: int
    valid: IdealSpec | None = None

    def __post_init__(self):
        if self.t % 2:
            raise DegreeMismatch("internal degree must be even")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_u1poly(t: int, p, n: int, b: int, valid=None) -> "GradedElem":
        return GradedElem(t, ws.wu_resize(p, b), n, b, valid)

    @staticmethod
    def one(n: int, b: int) -> "GradedElem":
        return GradedElem(0, ws.wu_int(1, n, b), n, b)

    # -- ring ops ----------------------------------------------------------

    def _join(self, other) -> IdealSpec | None:
        if self.valid is None:
            return other.valid
        if other.valid is None:
            return self.valid
        return IdealSpec(tuple(sorted(set(self.valid.gens) | set(other.valid.gens))),
                         f"{self.valid.render()} + {other.valid.render()}")

    def __mul__(self, other: "GradedElem") -> "GradedElem":
        assert self.n == other.n and self.b == other.b
        return GradedElem(self.t + other.t, ws.wu_mul(self.coeff, other.coeff, self.n),
                          self.n, self.b, self._join(other))

    def __add__(self, other: "GradedElem") -> "GradedElem":
        if self.t != other.t:
            raise DegreeMismatch(f"degree {self.t} vs {other.t}")
        return GradedElem(self.t, ws.wu_add(self.coeff, other.coeff, self.n),
                          self.n, self.b, self._join(other))

    def __sub__(self, other: "GradedElem") -> "GradedElem":
        if self.t != other.t:
            raise DegreeMismatch(f"degree {self.t} vs {other.t}")
        return GradedElem(self.t, ws.wu_add(self.coeff, ws.wu_neg(other.coeff, self.n), self.n),
                          self.n, self.b, self._join(other))

    def __neg__(self):
        return GradedElem(self.t, ws.wu_neg(self.coeff, self.n), self.n, self.b, self.valid)

    def inv(self) -> "GradedElem":
        return GradedElem(-self.t, ws.wu_inv(self.coeff, self.n), self.n, self.b, self.valid)

    def __pow__(self, k: int) -> "GradedElem":
        if k < 0:
            return self.inv() ** (-k)
        return GradedElem(self.t * k, ws.wu_pow(self.coeff, k, self.n), self.n, self.b, self.valid)

    def scale_int(self, v: int) -> "GradedElem":
        p = ws.wu_mul(self.coeff, ws.wu_int(v, self.n, self.b), self.n)
        return GradedElem(self.t, p, self.n, self.b, self.valid)

    # -- reductions --------------------------------------------------------

    def reduce(self, spec: IdealSpec) -> "GradedElem":
        out = self.coeff.copy()
        for d in range(self.b):
            e = spec.two_exponent(d, self.n)
            out[d] &= (1 << e) - 1
        return GradedElem(self.t, out, self.n, self.b, spec)

    def eq_mod(self, other: "GradedElem", spec: IdealSpec) -> bool:
        if self.t != other.t:
            return False
        return bool(np.array_equal(self.reduce(spec).coeff, other.reduce(spec).coeff))

    def is_zero_mod(self, spec: IdealSpec) -> bool:
        return not self.reduce(spec).coeff.any()

    def u1_valuation(self) -> int:
        for d in range(self.b):
            if self.coeff[d].any():
                return d
        return self.b

    def divide_v1(self, k: int) -> "GradedElem":
        """Exact division by v1^k = u1^k u^{-k}."""
        if self.u1_valuation() < k:
            raise IdealNotExpressible(f"not divisible by v1^{k}")
        p = ws.wu_zero(self.b)
        p[: self.b - k] = self.coeff[k:]
        return GradedElem(self.t - 2 * k, p, self.n, self.b, self.valid)

    def render(self) -> str:
        terms = []
        for d in range(self.b):
            a, z = int(self.coeff[d, 0]), int(self.coeff[d, 1])
            if a or z:
                c = f"{a}" if z == 0 else f"{a}+{z}z"
                terms.append(f"({c})u1^{d}")
        body = " + ".join(terms) if terms else "0"
        return f"[deg {self.t}] {body}"


def named_constants(n: int, b: int) -> dict:
    """u, u1, v1, v2, Delta, c4, j at the given precision."""
    u = GradedElem(-2, ws.wu_int(1, n, b), n, b)
    u1 = GradedElem(0, ws.wu_u1(1, n, b), n, b)
    v1 = GradedElem(2, ws.wu_u1(1, n, b), n, b)
    v2 = GradedElem(6, ws.wu_int(1, n, b), n, b)
    core = ws.wu_add(ws.wu_u1(3, n, b), ws.wu_int(-1, n, b), n)  # u1^3 - 1
    delta = GradedElem(24, ws.wu_mul(ws.wu_pow(core, 3, n), ws.wu_int(27, n, b), n), n, b)
    c4p = ws.wu_mul(ws.wu_u1(1, n, b),
                    ws.wu_add(ws.wu_u1(3, n, b), ws.wu_int(8, n, b), n), n)
    c4 = GradedElem(8, ws.wu_mul(c4p, ws.wu_int(9, n, b), n), n, b)
    j = (v1 ** 12) * delta.inv()
    return {"u": u, "u1": u1, "v1": v1, "v2": v2, "Delta": delta, "c4": c4, "j": j}


def graded_two_series(b: int, cap: int) -> list:
    """The doubling series of the graded formal group law, mod 2, as
    homogeneous coefficients: entry k is (degree, u1-poly) for the x^k term,
    the coefficient of x^k living in degree 2(k - 1).

    Head: v1 x^2 + v2 (u1^3 + 1) x^4 + ...
    """
    from .fgl import EllipticFGL, curve_cu_mod2
    fgl = EllipticFGL.of(curve_cu_mod2(b), cap)
    two = fgl.m_series(2)
    out = []
    for k in range(cap):
        p = np.zeros((b, 2), dtype=np.int64)
        for d, c in enumerate(two.c[k][:b]):
            p[d, 0] = c & 1
            p[d, 1] = (c >> 1) & 1
        out.append((2 * (k - 1), p))
    return out


def monomial(consts: dict, v1_exp: int = 0, v2_exp: int = 0, delta_exp: int = 0) -> GradedElem:
    out = GradedElem.one(consts["v1"].n, consts["v1"].b)
    if v1_exp:
        out = out * (consts["v1"] ** v1_exp)
    if v2_exp:
        out = out * (consts["v2"] ** v2_exp)
    if delta_exp:
        out = out * (consts["Delta"] ** delta_exp)
    return out
