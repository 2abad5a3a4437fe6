"""Array-backed series arithmetic used by the heavy computations.

Two data layouts:

* u1-polys: shape (B, 2) int64 arrays over W/2^n[[u1]]/u1^B, the last axis
  holding the 1- and zeta-components (zeta^2 = -1 - zeta).
* z-series: shape (X, B, 2) arrays, coefficients in the u1-poly ring.

W/2 is F4, so the same routines at n = 1 give the mod-2 world.  All
convolutions are exact integer convolutions; entries stay far below 2^63.
"""

from __future__ import annotations

import math

import numpy as np

from .coeff import WittElem


def _mask(arr, n: int):
    return np.bitwise_and(arr, (1 << n) - 1)


# Kronecker-substitution convolutions: coefficient grids are packed into
# python big integers on 32-bit slots (values stay far below 2^32 for the
# precisions used here) and multiplied natively, which beats generic
# integer convolution by a wide margin.

def _pack(arr, width: int) -> int:
    buf = np.zeros((arr.shape[0], width), dtype="<u4")
    buf[:, : arr.shape[1]] = arr
    return int.from_bytes(buf.tobytes(), "little")


def _unpack(val: int, rows: int, width: int):
    raw = val.to_bytes(rows * width * 4, "little")
    return np.frombuffer(raw, dtype="<u4").reshape(rows, width).astype(np.int64)


def _conv2(a, b):
    """Exact integer 2-D convolution of non-negative int64 grids."""
    xa, ba = a.shape
    xb, bb = b.shape
    width = ba + bb - 1
    rows = xa + xb - 1
    p = _pack(a, width) * _pack(b, width)
    return _unpack(p, rows, width)


def _convnd(a, b):
    """Exact integer N-D convolution via nested Kronecker packing."""
    sa, sb = a.shape, b.shape
    out_shape = tuple(x + y - 1 for x, y in zip(sa, sb))
    widths = list(out_shape[1:]) + [1]
    for i in range(len(widths) - 2, -1, -1):
        widths[i] *= widths[i + 1]
    fa = np.zeros((sa[0], widths[0]), dtype=np.int64)
    fb = np.zeros((sb[0], widths[0]), dtype=np.int64)
    _scatter(fa, a, widths)
    _scatter(fb, b, widths)
    p = _pack(fa, widths[0]) * _pack(fb, widths[0])
    flat = _unpack(p, out_shape[0], widths[0])
    out = np.zeros(out_shape, dtype=np.int64)
    _gather(out, flat, widths)
    return out


def _scatter(flat, arr, widths):
    idx = np.indices(arr.shape[1:]).reshape(len(arr.shape) - 1, -1)
    pos = sum(idx[k] * widths[k + 1] for k in range(len(widths) - 1))
    flat[:, pos] = arr.reshape(arr.shape[0], -1)


def _gather(out, flat, widths):
    idx = np.indices(out.shape[1:]).reshape(len(out.shape) - 1, -1)
    pos = sum(idx[k] * widths[k + 1] for k in range(len(widths) - 1))
    out.reshape(out.shape[0], -1)[:] = flat[:, pos]


# ---------------------------------------------------------------------------
# u1-polys: (B, 2) int64
# ---------------------------------------------------------------------------

def wu_zero(b: int):
    return np.zeros((b, 2), dtype=np.int64)

def wu_const(w: WittElem, b: int):
    out = wu_zero(b)
    out[0, 0] = w.a
    out[0, 1] = w.b
    return out

def wu_int(v: int, n: int, b: int):
    return wu_const(WittElem(v, 0, n), b)

def wu_u1(k: int, n: int, b: int):
    out = wu_zero(b)
    if k < b:
        out[k, 0] = 1
    return out

def wu_mul(p, q, n: int):
    b = p.shape[0]
    aa = np.convolve(p[:, 0], q[:, 0])[:b]
    bb = np.convolve(p[:, 1], q[:, 1])[:b]
    ab = np.convolve(p[:, 0], q[:, 1])[:b]
    ba = np.convolve(p[:, 1], q[:, 0])[:b]
    return _mask(np.stack([aa - bb, ab + ba - bb], axis=-1), n)

def wu_add(p, q, n: int):
    return _mask(p + q, n)

def wu_neg(p, n: int):
    return _mask(-p, n)

def wu_is_unit(p) -> bool:
    return bool((p[0, 0] | p[0, 1]) & 1)

def wu_inv(p, n: int):
    """Series inverse; the constant term must be a unit of W/2^n."""
    b = p.shape[0]
    c0 = WittElem(int(p[0, 0]), int(p[0, 1]), n).inv()
    out = wu_const(c0, b)
    # Newton doubling on the u1-truncation.
    prec = 1
    while prec < b:
        prec *= 2
        e = wu_mul(p, out, n)
        e[0, 0] -= 2
        out = _mask(-wu_mul(out, e, n), n)
    return out

def wu_pow(p, k: int, n: int):
    b = p.shape[0]
    if k < 0:
        return wu_pow(wu_inv(p, n), -k, n)
    out = wu_int(1, n, b)
    base = p
    while k:
        if k & 1:
            out = wu_mul(out, base, n)
        base = wu_mul(base, base, n)
        k >>= 1
    return out

def wu_subst(p, s, n: int):
    """p(s(u1)); s may have an even constant term (2-adically convergent)."""
    b = p.shape[0]
    out = wu_zero(b)
    for k in range(b - 1, -1, -1):
        out = wu_mul(out, s, n)
        out[0] += p[k]
    return _mask(out, n)

def wu_powers(s, n: int):
    """[s^0, s^1, ..., s^(B-1)] for substitution matrices."""
    b = s.shape[0]
    out = [wu_int(1, n, b)]
    for _ in range(b - 1):
        out.append(wu_mul(out[-1], s, n))
    return out

def wu_eq(p, q) -> bool:
    return bool(np.array_equal(p, q))

def wu_v2u(p, n: int, b: int) -> int:
    """(2, u1)-adic valuation: min over d of v2(coeff_d) + d; n + b if zero."""
    best = n + b
    for d in range(min(p.shape[0], b)):
        w = int(p[d, 0]) | int(p[d, 1])
        if w:
            v = (w & -w).bit_length() - 1 + d
            if v < best:
                best = v
    return best

def wu_resize(p, b: int):
    out = wu_zero(b)
    m = min(b, p.shape[0])
    out[:m] = p[:m]
    return out

def wu_from_tuple(t, n: int, b: int):
    """From a U1Ring tuple of WittElem."""
    out = wu_zero(b)
    for i, w in enumerate(t[:b]):
        out[i, 0] = w.a
        out[i, 1] = w.b
    return out

def wu_to_tuple(p, ring):
    return ring.of([WittElem(int(p[i, 0]), int(p[i, 1]), ring.base.n)
                    for i in range(p.shape[0])])


# ---------------------------------------------------------------------------
# z-series: (X, B, 2) int64
# ---------------------------------------------------------------------------

class WSeries:
    """Truncated series in z over W/2^n[[u1]]/u1^B."""

    __slots__ = ("a", "n", "x", "b")

    def __init__(self, a, n: int):
        self.a = a
        self.n = n
        self.x = a.shape[0]
        self.b = a.shape[1]

    @staticmethod
    def zero(x: int, b: int, n: int) -> "WSeries":
        return WSeries(np.zeros((x, b, 2), dtype=np.int64), n)

    @staticmethod
    def identity(x: int, b: int, n: int) -> "WSeries":
        s = WSeries.zero(x, b, n)
        if x > 1:
            s.a[1, 0, 0] = 1
        return s

    def copy(self):
        return WSeries(self.a.copy(), self.n)

    def __add__(self, o):
        return WSeries(_mask(self.a + o.a, self.n), self.n)

    def __sub__(self, o):
        return WSeries(_mask(self.a - o.a, self.n), self.n)

    def __neg__(self):
        return WSeries(_mask(-self.a, self.n), self.n)

    def __mul__(self, o):
        # three Karatsuba-style convolutions handle the zeta-component rule
        x, b = self.x, self.b
        A, B = self.a, o.a
        aa = _conv2(A[:, :, 0], B[:, :, 0])[:x, :b]
        bb = _conv2(A[:, :, 1], B[:, :, 1])[:x, :b]
        k = _conv2(A[:, :, 0] + A[:, :, 1], B[:, :, 0] + B[:, :, 1])[:x, :b]
        return WSeries(_mask(np.stack([aa - bb, k - aa - 2 * bb], axis=-1), self.n), self.n)

    def scale_u1(self, p) -> "WSeries":
        """Multiply every z-coefficient by the u1-poly p."""
        x, b = self.x, self.b
        A = self.a
        pa, pb = p[None, :, 0], p[None, :, 1]
        out_a = np.zeros((x, b), dtype=np.int64)
        out_b = np.zeros((x, b), dtype=np.int64)
        for d in range(b):
            if not (p[d, 0] or p[d, 1]):
                continue
            w = b - d
            out_a[:, d:] += A[:, :w, 0] * p[d, 0] - A[:, :w, 1] * p[d, 1]
            out_b[:, d:] += A[:, :w, 0] * p[d, 1] + A[:, :w, 1] * p[d, 0] - A[:, :w, 1] * p[d, 1]
        return WSeries(_mask(np.stack([out_a, out_b], axis=-1), self.n), self.n)

    def scale_int(self, v: int) -> "WSeries":
        return WSeries(_mask(self.a * v, self.n), self.n)

    def shift(self, k: int) -> "WSeries":
        out = np.zeros_like(self.a)
        if k >= 0:
            out[k:] = self.a[: self.x - k]
        else:
            assert not self.a[: -k].any(), "series not divisible by z^%d" % (-k,)
            out[: self.x + k] = self.a[-k:]
        return WSeries(out, self.n)

    def coeff(self, k: int):
        return self.a[k].copy()

    def set_coeff(self, k: int, p):
        self.a[k] = _mask(p, self.n)

    def __pow__(self, k: int):
        out = WSeries.zero(self.x, self.b, self.n)
        out.a[0, 0, 0] = 1
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def compose(self, g: "WSeries") -> "WSeries":
        """self(g(z)) by Brent-Kung block evaluation; g(0) must vanish."""
        assert not g.a[0].any(), "inner series has nonzero constant term"
        x = self.x
        m = max(2, math.isqrt(x) + 1)
        gp = [WSeries.zero(x, self.b, self.n)]
        gp[0].a[0, 0, 0] = 1
        for _ in range(m - 1):
            gp.append(gp[-1] * g)
        gm = gp[-1] * g  # g^m
        nblocks = (x + m - 1) // m
        out = WSeries.zero(x, self.b, self.n)
        for blk in range(nblocks - 1, -1, -1):
            out = out * gm
            # block polynomial sum_j self[blk*m + j] g^j
            for j in range(m):
                k = blk * m + j
                if k >= x:
                    break
                if not self.a[k].any():
                    continue
                out = out + gp[j].scale_u1(self.a[k])
        return out

    def reciprocal(self) -> "WSeries":
        c0 = self.a[0]
        r = WSeries.zero(self.x, self.b, self.n)
        r.a[0] = wu_inv(c0, self.n)
        prec = 1
        while prec < self.x:
            prec *= 2
            e = self * r
            e.a[0, 0, 0] -= 2
            r = -(r * e)
        return r

    def derivative(self) -> "WSeries":
        out = np.zeros_like(self.a)
        ks = np.arange(1, self.x, dtype=np.int64)
        out[: self.x - 1] = self.a[1:] * ks[:, None, None]
        return WSeries(_mask(out, self.n), self.n)

    def map_u1(self, phi_powers) -> "WSeries":
        """Apply the ring map u1 -> s to every z-coefficient, given wu_powers(s)."""
        b = self.b
        P = np.stack(phi_powers[:b], axis=0)  # (B, B, 2)
        A = self.a
        # (a + b zeta)(pa + pb zeta) summed over the u1-exponent j
        out_a = A[:, :, 0] @ P[:, :, 0] - A[:, :, 1] @ P[:, :, 1]
        out_b = A[:, :, 0] @ P[:, :, 1] + A[:, :, 1] @ P[:, :, 0] - A[:, :, 1] @ P[:, :, 1]
        return WSeries(_mask(np.stack([out_a, out_b], axis=-1), self.n), self.n)

    def val2u1(self) -> int:
        best = self.n + self.b
        for k in range(self.x):
            v = wu_v2u(self.a[k], self.n, self.b)
            if v < best:
                best = v
        return best

    def reduce_bits(self, n: int) -> "WSeries":
        return WSeries(_mask(self.a, n), n)

    def resize(self, x: int, b: int) -> "WSeries":
        out = np.zeros((x, b, 2), dtype=np.int64)
        out[: min(x, self.x), : min(b, self.b)] = self.a[: min(x, self.x), : min(b, self.b)]
        return WSeries(out, self.n)

    def __eq__(self, o):
        return self.n == o.n and np.array_equal(self.a, o.a)

    def is_zero(self):
        return not self.a.any()


def wseries_from_trunc(ts, n: int, b: int) -> WSeries:
    """Convert a pure-python TruncSeries over U1Ring(WittRing(n), b)."""
    out = WSeries.zero(ts.cap, b, n)
    for k, coeff in enumerate(ts.c):
        for i, w in enumerate(coeff[:b]):
            out.a[k, i, 0] = w.a
            out.a[k, i, 1] = w.b
    return out


# ---------------------------------------------------------------------------
# Two variables over W/2^n[[u1]]: (X, X, B, 2) with total-degree cap X
# ---------------------------------------------------------------------------

class WSeries2:
    __slots__ = ("a", "n", "x", "b")

    def __init__(self, a, n: int):
        self.a = a
        self.n = n
        self.x = a.shape[0]
        self.b = a.shape[2]

    @staticmethod
    def zero(x: int, b: int, n: int) -> "WSeries2":
        return WSeries2(np.zeros((x, x, b, 2), dtype=np.int64), n)

    def _trim(self):
        x = self.x
        i, j = np.ogrid[:x, :x]
        self.a[(i + j) >= x] = 0
        return self

    def copy(self):
        return WSeries2(self.a.copy(), self.n)

    def __add__(self, o):
        return WSeries2(_mask(self.a + o.a, self.n), self.n)

    def __sub__(self, o):
        return WSeries2(_mask(self.a - o.a, self.n), self.n)

    def __neg__(self):
        return WSeries2(_mask(-self.a, self.n), self.n)

    def __mul__(self, o):
        x, b = self.x, self.b
        A, B = self.a, o.a
        aa = _convnd(A[..., 0], B[..., 0])[:x, :x, :b]
        bb = _convnd(A[..., 1], B[..., 1])[:x, :x, :b]
        k = _convnd(A[..., 0] + A[..., 1], B[..., 0] + B[..., 1])[:x, :x, :b]
        out = WSeries2(_mask(np.stack([aa - bb, k - aa - 2 * bb], axis=-1), self.n), self.n)
        return out._trim()

    def scale_u1(self, p) -> "WSeries2":
        x, b = self.x, self.b
        A = self.a
        out_a = np.zeros((x, x, b), dtype=np.int64)
        out_b = np.zeros((x, x, b), dtype=np.int64)
        for d in range(b):
            if not (p[d, 0] or p[d, 1]):
                continue
            w = b - d
            out_a[:, :, d:] += A[:, :, :w, 0] * p[d, 0] - A[:, :, :w, 1] * p[d, 1]
            out_b[:, :, d:] += A[:, :, :w, 0] * p[d, 1] + A[:, :, :w, 1] * p[d, 0] - A[:, :, :w, 1] * p[d, 1]
        return WSeries2(_mask(np.stack([out_a, out_b], axis=-1), self.n), self.n)

    def scale_int(self, v: int) -> "WSeries2":
        return WSeries2(_mask(self.a * v, self.n), self.n)

    def get(self, i: int, j: int):
        return self.a[i, j].copy()

    def set(self, i: int, j: int, p):
        self.a[i, j] = _mask(p, self.n)

    def swap(self) -> "WSeries2":
        return WSeries2(self.a.transpose(1, 0, 2, 3).copy(), self.n)

    def is_zero(self):
        return not self.a.any()

    def __eq__(self, o):
        return self.n == o.n and np.array_equal(self.a, o.a)

    def diagonal(self) -> WSeries:
        x = self.x
        out = WSeries.zero(x, self.b, self.n)
        for i in range(x):
            for j in range(x - i):
                out.a[i + j] += self.a[i, j]
        out.a = _mask(out.a, self.n)
        return out

    def eval_outer(self, f: WSeries) -> "WSeries2":
        """f(self) for one-variable f; self(0,0) must vanish."""
        assert not self.a[0, 0].any()
        out = WSeries2.zero(self.x, self.b, self.n)
        for k in range(f.x - 1, -1, -1):
            out = out * self
            out.a[0, 0] = _mask(out.a[0, 0] + f.a[k], self.n)
        return out

    def substitute(self, g: WSeries, h: WSeries) -> WSeries:
        """Evaluate at (z1, z2) = (g, h); both with zero constant term."""
        assert not g.a[0].any() and not h.a[0].any()
        x = self.x
        gp = [WSeries.zero(x, self.b, self.n)]
        gp[0].a[0, 0, 0] = 1
        hp = [gp[0].copy()]
        for _ in range(x - 1):
            gp.append(gp[-1] * g)
            hp.append(hp[-1] * h)
        out = WSeries.zero(x, self.b, self.n)
        for i in range(x):
            row = None
            for j in range(x - i):
                if not self.a[i, j].any():
                    continue
                term = hp[j].scale_u1(self.a[i, j])
                row = term if row is None else row + term
            if row is not None:
                out = out + row * gp[i]
        return out


def wseries2_divided_difference(w: WSeries) -> WSeries2:
    """(w(z2) - w(z1)) / (z2 - z1)."""
    out = WSeries2.zero(w.x, w.b, w.n)
    for k in range(1, w.x):
        if not w.a[k].any():
            continue
        for i in range(k):
            out.a[i, k - 1 - i] += w.a[k]
    out.a = _mask(out.a, w.n)
    return out


def cu_w_numpy(n: int, b: int, cap: int) -> WSeries:
    a1 = wu_add(wu_zero(b), wu_u1(1, n, b) * 3, n)
    a3 = wu_add(wu_u1(3, n, b), wu_int(-1, n, b), n)
    z3 = WSeries.zero(cap, b, n)
    if cap > 3:
        z3.a[3, 0, 0] = 1
    w = z3.copy()
    for _ in range(cap + 1):
        w2 = w * w
        nxt = z3 + w.scale_u1(a1).shift(1) + w2.scale_u1(a3)
        if nxt == w:
            return w
        w = nxt
    raise RuntimeError("w(z) iteration did not stabilize")


def cu_minus_two_numpy(n: int, b: int, cap: int) -> WSeries:
    """[-2](z) = -2z - a1 w'(z) - a3 w'(z)^2 for the universal curve."""
    a1 = wu_add(wu_zero(b), wu_u1(1, n, b) * 3, n)
    a3 = wu_add(wu_u1(3, n, b), wu_int(-1, n, b), n)
    wp = WSeries(cu_w_numpy(n, b, cap + 1).derivative().a[:cap].copy(), n)
    return WSeries.identity(cap, b, n).scale_int(-2) - wp.scale_u1(a1) - (wp * wp).scale_u1(a3)


def cu_fgl_numpy(n: int, b: int, cap: int):
    """(w, neg, F) for y^2 + 3u1*xy + (u1^3 - 1)y = x^3 over W/2^n[[u1]]/u1^b.

    Internal work runs two degrees past the cap (degree-lowering divisions).
    """
    capx = cap + 2
    a1 = wu_add(wu_zero(b), wu_u1(1, n, b) * 3, n)
    a3 = wu_add(wu_u1(3, n, b), wu_int(-1, n, b), n)
    w = cu_w_numpy(n, b, capx)
    neg = -(WSeries.identity(capx, b, n) + w.scale_u1(a1).shift(-1) + (w * w).scale_u1(a3).shift(-2))
    lam = wseries2_divided_difference(w)
    lam2 = lam * lam
    negsum = -(lam.scale_u1(a1) + lam2.scale_u1(a3))
    negsum.a[1, 0, 0, 0] = _mask(negsum.a[1, 0, 0, 0] - 1, n)
    negsum.a[0, 1, 0, 0] = _mask(negsum.a[0, 1, 0, 0] - 1, n)
    F = negsum.eval_outer(neg)
    Ft = WSeries2(F.a[:cap, :cap].copy(), n)._trim()
    return w.resize(cap, b), WSeries(neg.a[:cap].copy(), n), Ft


# ---------------------------------------------------------------------------
# F4 series, one and two variables, bit-plane layout
# ---------------------------------------------------------------------------

class F4Series:
    """One-variable series over F4; data (X, 2) uint8 bit-planes."""

    __slots__ = ("a", "x")

    def __init__(self, a):
        self.a = a.astype(np.int64)
        self.x = a.shape[0]

    @staticmethod
    def zero(x: int):
        return F4Series(np.zeros((x, 2), dtype=np.int64))

    @staticmethod
    def monomial(x: int, k: int, coeff: int = 1):
        s = F4Series.zero(x)
        if k < x:
            s.a[k, 0] = coeff & 1
            s.a[k, 1] = (coeff >> 1) & 1
        return s

    def __add__(self, o):
        return F4Series((self.a + o.a) & 1)

    def __mul__(self, o):
        x = self.x
        p00 = np.convolve(self.a[:, 0], o.a[:, 0])[:x]
        p11 = np.convolve(self.a[:, 1], o.a[:, 1])[:x]
        k = np.convolve(self.a[:, 0] + self.a[:, 1], o.a[:, 0] + o.a[:, 1])[:x]
        return F4Series(np.stack([(p00 + p11) & 1, (k + p00) & 1], axis=-1))

    def scale(self, coeff: int):
        if coeff == 0:
            return F4Series.zero(self.x)
        if coeff == 1:
            return F4Series(self.a.copy())
        c0, c1 = coeff & 1, (coeff >> 1) & 1
        a0, a1 = self.a[:, 0], self.a[:, 1]
        return F4Series(np.stack([(a0 * c0 + a1 * c1) & 1,
                                  (a0 * c1 + a1 * c0 + a1 * c1) & 1], axis=-1))

    def coeff(self, k: int) -> int:
        return int(self.a[k, 0]) | (int(self.a[k, 1]) << 1)

    def nonzero_degrees(self):
        return [k for k in range(self.x) if self.a[k].any()]

    def is_zero(self):
        return not self.a.any()

    def __eq__(self, o):
        return np.array_equal(self.a & 1, o.a & 1)


class F4Series2:
    """Two-variable series over F4 with total-degree cap; (X, X, 2) bit-planes."""

    __slots__ = ("a", "x")

    def __init__(self, a):
        self.a = a.astype(np.int64)
        self.x = a.shape[0]

    @staticmethod
    def zero(x: int):
        return F4Series2(np.zeros((x, x, 2), dtype=np.int64))

    def _trim(self):
        x = self.x
        i, j = np.ogrid[:x, :x]
        self.a[(i + j) >= x] = 0
        return self

    def __add__(self, o):
        return F4Series2((self.a + o.a) & 1)

    def __mul__(self, o):
        x = self.x
        a0, a1 = self.a[:, :, 0], self.a[:, :, 1]
        b0, b1 = o.a[:, :, 0], o.a[:, :, 1]
        p00 = _conv2(a0, b0)[:x, :x]
        p11 = _conv2(a1, b1)[:x, :x]
        k = _conv2(a0 + a1, b0 + b1)[:x, :x]
        out = F4Series2(np.stack([(p00 + p11) & 1, (k + p00) & 1], axis=-1))
        return out._trim()

    def scale(self, coeff: int):
        if coeff == 0:
            return F4Series2.zero(self.x)
        if coeff == 1:
            return F4Series2(self.a.copy())
        c0, c1 = coeff & 1, (coeff >> 1) & 1
        a0, a1 = self.a[:, :, 0], self.a[:, :, 1]
        return F4Series2(np.stack([(a0 * c0 + a1 * c1) & 1,
                                   (a0 * c1 + a1 * c0 + a1 * c1) & 1], axis=-1))

    def get(self, i: int, j: int) -> int:
        return int(self.a[i, j, 0]) | (int(self.a[i, j, 1]) << 1)

    def set(self, i: int, j: int, coeff: int):
        self.a[i, j, 0] = coeff & 1
        self.a[i, j, 1] = (coeff >> 1) & 1

    def is_zero(self):
        return not self.a.any()

    def __eq__(self, o):
        return np.array_equal(self.a & 1, o.a & 1)

    def compose_outer_sparse(self, f: F4Series) -> "F4Series2":
        """f(self) where f has few nonzero terms; self(0,0) must vanish."""
        assert not self.a[0, 0].any()
        degs = f.nonzero_degrees()
        powers = {1: self}
        def power(k):
            if k in powers:
                return powers[k]
            half = power(k // 2)
            p = half * half
            if k & 1:
                p = p * self
            powers[k] = p
            return p
        out = F4Series2.zero(self.x)
        for k in degs:
            if k == 0:
                c = f.coeff(0)
                out.set(0, 0, c ^ out.get(0, 0))
                continue
            out = out + power(k).scale(f.coeff(k))
        return out

    def substitute(self, g: F4Series, h: F4Series) -> F4Series:
        """Evaluate at (z1, z2) = (g, h), both with zero constant term."""
        x = self.x
        assert g.coeff(0) == 0 and h.coeff(0) == 0
        hp = [F4Series.monomial(x, 0)]
        for _ in range(x - 1):
            hp.append(hp[-1] * h)
        out = F4Series.zero(x)
        for i in range(x - 1, -1, -1):
            out = out * g
            row = F4Series.zero(x)
            nz = np.nonzero(self.a[i, :, 0] | self.a[i, :, 1])[0]
            for j in nz:
                row = row + hp[j].scale(self.get(i, int(j)))
            out = out + row
        return out


def f4series_from_trunc(ts) -> F4Series:
    out = F4Series.zero(ts.cap)
    for k, c in enumerate(ts.c):
        out.a[k, 0] = c & 1
        out.a[k, 1] = (c >> 1) & 1
    return out


def f4series2_from_trunc(ts2) -> F4Series2:
    out = F4Series2.zero(ts2.cap)
    for (i, j), v in ts2.c.items():
        out.set(i, j, v)
    return out
