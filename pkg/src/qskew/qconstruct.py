"""Term-by-term construction of q-commuting partners and conjugators.

Works in the skew Laurent series ring where x*r = alpha(r)*x, alpha(y) = q*y.
Given g = lam*y^s + g_1*x + g_2*x^2 + ... with s = +1, there is a unique
f = f_1*x + f_2*x^2 + ... with prescribed f_1 satisfying f*g = q*g*f; the
coefficients follow from extracting x^m in the commutation relation:

    f_m = (sum_{k=1}^{m-1} (q*g_k*alpha^k(f_{m-k}) - f_k*alpha^k(g_{m-k})))
          * lam^-1 * (q^m - q)^-1 * y^-1.

Similarly, G = y^s + g_1*x + ... is conjugate to its leading term: z*G = y^s*z
has a unique solution z = 1 + z_1*x + ... given by

    z_n = y^-s * (1 - q^(n*s))^-1 * (g_n + sum_{i+j=n, i,j>0} z_j*alpha^j(g_i)).

Both recurrences require the leading scalar q-power q^m - q resp. 1 - q^(ns)
to be nonzero, which holds because q is transcendental.
"""

from __future__ import annotations

from .scalars import (
    DomainError, PrecisionError, RATF_ONE, RatFunc, qpow, twist, ypow,
)
from .series import INF, SkewSeries


class StandardFormElement:
    """g = lam * y^s + tail with s in {+1, -1} and tail supported on x^(>=1)."""

    __slots__ = ("s", "lam", "tail")

    def __init__(self, s, lam, tail=None):
        if s not in (1, -1):
            raise DomainError("exponent s must be +1 or -1, got %r" % (s,))
        lam = RatFunc.coerce(lam)
        if lam.is_zero():
            raise DomainError("leading coefficient must be nonzero")
        if not lam.is_y_free():
            raise DomainError("leading coefficient must be constant in y")
        if tail is None:
            tail = SkewSeries.zero(INF)
        if not isinstance(tail, SkewSeries):
            raise DomainError("tail must be a SkewSeries")
        if not tail.is_zero() and tail.lowest < 1:
            raise DomainError("tail must be supported on x^1 and higher")
        self.s = s
        self.lam = lam
        self.tail = tail

    def coeff(self, k):
        """Tail coefficient g_k (k >= 1)."""
        return self.tail.coeff(k)

    @property
    def order(self):
        return self.tail.order

    def to_series(self, order=None):
        """lam*y^s + tail as a plain series, truncated to order if given."""
        head = SkewSeries.const(self.lam * ypow(self.s), self.tail.order)
        out = head + self.tail
        if order is not None:
            out = out.truncate(order)
        return out

    def __repr__(self):
        return "StandardFormElement(s=%d, lam=%s, tail=%r)" % (
            self.s, self.lam.render(), self.tail)


def standard_form(series):
    """Split a series lam*y^s + (terms in x^1, x^2, ...) into standard form.

    The x^0 coefficient must be lam*y or lam*y^-1 with lam free of y, and no
    negative x-exponents may appear.
    """
    if series.is_zero():
        raise DomainError("zero series has no standard form")
    if series.lowest < 0:
        raise DomainError("standard form admits no negative x-exponents")
    if series.lowest > 0:
        raise DomainError("x^0 coefficient must be a nonzero multiple of y^s")
    c0 = series.coeff(0)
    lam = None
    s = None
    for cand in (1, -1):
        ratio = c0 * ypow(-cand)
        if ratio.is_y_free():
            s = cand
            lam = ratio
            break
    if s is None:
        raise DomainError("x^0 coefficient %s is not lam * y^(+-1)"
                          % c0.render())
    tail = series - SkewSeries.const(c0, series.order)
    return StandardFormElement(s, lam, tail)


def qelement(g, f1, order):
    """The series f = f_1*x + ... with f*g = q*g*f, for g in standard form.

    Only s = +1 is supported; f_1 is free and must be nonzero.  The tail of g
    must be known at least to the requested order.
    """
    if not isinstance(g, StandardFormElement):
        g = standard_form(g)
    if g.s != 1:
        raise DomainError("qelement requires leading term lam*y (s = +1)")
    f1 = RatFunc.coerce(f1)
    if f1.is_zero():
        raise DomainError("f_1 must be nonzero")
    if order <= 1:
        raise PrecisionError("order must exceed 1, got %r" % (order,))
    if g.order < order:
        raise PrecisionError(
            "tail of g known to order %s < requested order %d"
            % (g.order, order))
    lam_inv = g.lam.inv()
    yinv = ypow(-1)
    q1 = qpow(1)
    f = [None, f1]
    for m in range(2, order):
        acc = RatFunc.coerce(0)
        for k in range(1, m):
            gk = g.coeff(k)
            if not gk.is_zero():
                acc = acc + q1 * gk * twist(f[m - k], k)
            gmk = g.coeff(m - k)
            if not gmk.is_zero():
                acc = acc - f[k] * twist(gmk, k)
        scale = lam_inv * (qpow(m) - q1).inv() * yinv
        f.append(acc * scale)
    return SkewSeries(1, f[1:], order)


def findz(G, order):
    """The conjugator z = 1 + z_1*x + ... with z*G = y^s*z.

    G must be in standard form with lam = 1 (no silent rescaling), tail known
    to the requested order.
    """
    if not isinstance(G, StandardFormElement):
        G = standard_form(G)
    if not G.lam.is_one():
        raise DomainError("findz requires leading coefficient 1, got %s"
                          % G.lam.render())
    if order < 1:
        raise PrecisionError("order must be at least 1, got %r" % (order,))
    if G.order < order:
        raise PrecisionError(
            "tail of G known to order %s < requested order %d"
            % (G.order, order))
    s = G.s
    ys_inv = ypow(-s)
    z = [RATF_ONE]
    for n in range(1, order):
        acc = G.coeff(n)
        for j in range(1, n):
            gi = G.coeff(n - j)
            if not gi.is_zero() and not z[j].is_zero():
                acc = acc + z[j] * twist(gi, j)
        scale = (RATF_ONE - qpow(n * s)).inv()
        z.append(ys_inv * scale * acc)
    return SkewSeries(0, z, order)


def conjugate(z, w, order):
    """z * w * z^-1 truncated to the given order."""
    if z.is_zero():
        raise DomainError("cannot conjugate by the zero series")
    if w.is_zero():
        return SkewSeries.zero(order)
    need = order - z.lowest - w.lowest
    zi = z.inverse(need)
    out = z * w * zi
    if out.order > order:
        out = out.truncate(order)
    return out


# ---------------------------------------------------------------------------
# Running example: the automorphism x -> x + q*y*(1+y)^-1*(1+q*y)^-1*x^2,
# y -> y + q*y*(1+y)^-1*x.  Both images are finite, hence exact.


def psi_images():
    """Images (psi(x), psi(y)) of the running automorphism, exact."""
    y = ypow(1)
    q1 = qpow(1)
    inv1y = (RATF_ONE + y).inv()
    fx = SkewSeries.from_terms(
        {1: RATF_ONE, 2: q1 * y * inv1y * (RATF_ONE + q1 * y).inv()}, INF)
    fy = SkewSeries.from_terms({0: y, 1: q1 * y * inv1y}, INF)
    return fx, fy
