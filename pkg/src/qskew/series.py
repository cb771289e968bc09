"""Skew Laurent arithmetic in x over K = Q(w)(s, y), with x*r = alpha(r)*x.

Three shapes of value:
  SkewSeries   - truncated Laurent series; coefficients known for all
                 exponents < order (order may be math.inf for exact values)
  SkewPoly     - exact Laurent polynomial
  LeftFraction - Q^-1 * P with Q an exact polynomial, lowest exponent 0 and
                 constant coefficient 1

Precision is a property of each value: every operation computes the exact
order to which its output is known and never reports coefficients beyond it.
"""

from __future__ import annotations

import math

from .scalars import (
    DomainError, PrecisionError, RATF_ONE, RATF_ZERO, RatFunc, twist,
)

INF = math.inf


def _low(f):
    """First possibly-nonzero exponent: lowest for nonzero, order for zero."""
    return f.lowest if f.lowest is not None else f.order


class SkewSeries:
    """Sum of a_i x^i for lowest <= i < order, a_i in K."""

    __slots__ = ("lowest", "coeffs", "order")

    def __init__(self, lowest, coeffs, order=INF):
        coeffs = list(coeffs)
        while coeffs and coeffs[0].is_zero():
            coeffs.pop(0)
            lowest += 1
        if order == INF:
            while coeffs and coeffs[-1].is_zero():
                coeffs.pop()
        else:
            want = order - lowest
            if want <= 0:
                coeffs = []
            elif len(coeffs) > want:
                coeffs = coeffs[:want]
                while coeffs and coeffs[0].is_zero():
                    coeffs.pop(0)
                    lowest += 1
                want = order - lowest
            if coeffs:
                coeffs.extend([RATF_ZERO] * (want - len(coeffs)))
        if not coeffs:
            self.lowest = None
            self.coeffs = ()
            self.order = order
        else:
            self.lowest = lowest
            self.coeffs = tuple(coeffs)
            self.order = order

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, order=INF):
        return cls(0, (), order)

    @classmethod
    def one(cls, order=INF):
        return cls(0, (RATF_ONE,), order)

    @classmethod
    def const(cls, r, order=INF):
        return cls(0, (RatFunc.coerce(r),), order)

    @classmethod
    def x_power(cls, n, coef=None, order=INF):
        return cls(n, (RATF_ONE if coef is None else RatFunc.coerce(coef),), order)

    @classmethod
    def from_terms(cls, terms, order=INF):
        if not terms:
            return cls.zero(order)
        lo = min(terms)
        hi = max(terms)
        coeffs = [RatFunc.coerce(terms.get(k, RATF_ZERO)) for k in range(lo, hi + 1)]
        return cls(lo, coeffs, order)

    # -- basic structure ---------------------------------------------------

    def is_zero(self):
        return self.lowest is None

    def coeff(self, k):
        """Coefficient at x^k; PrecisionError beyond the known order."""
        if k >= self.order:
            raise PrecisionError("coefficient at x^%d is beyond known order %s" % (k, self.order))
        if self.lowest is None or k < self.lowest:
            return RATF_ZERO
        i = k - self.lowest
        if i >= len(self.coeffs):
            return RATF_ZERO
        return self.coeffs[i]

    def terms(self):
        if self.lowest is None:
            return
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.lowest + i, c

    def __eq__(self, other):
        if not isinstance(other, SkewSeries):
            return NotImplemented
        return (self.lowest == other.lowest and self.order == other.order
                and self.coeffs == other.coeffs)

    __hash__ = None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        order = min(self.order, other.order)
        if self.lowest is None and other.lowest is None:
            return SkewSeries.zero(order)
        lo = min(_low(self), _low(other))
        if lo >= order:
            return SkewSeries.zero(order)
        hi = order
        if hi == INF:
            hi = max((self.lowest or 0) + len(self.coeffs) if self.lowest is not None else lo,
                     (other.lowest or 0) + len(other.coeffs) if other.lowest is not None else lo)
        out = []
        for k in range(lo, hi):
            a = self.coeff(k) if k < self.order else RATF_ZERO
            b = other.coeff(k) if k < other.order else RATF_ZERO
            out.append(a + b)
        return SkewSeries(lo, out, order)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return SkewSeries(self.lowest if self.lowest is not None else 0,
                          [-c for c in self.coeffs], self.order)

    def scale(self, r):
        """Left multiplication by a coefficient: r * f."""
        r = RatFunc.coerce(r)
        if r.is_zero():
            return SkewSeries.zero(INF)
        return SkewSeries(self.lowest if self.lowest is not None else 0,
                          [r * c for c in self.coeffs], self.order)

    def shift_right(self, k):
        """f * x^k: exponents shift, coefficients untouched."""
        if self.lowest is None:
            return SkewSeries(0, (), self.order + k if self.order != INF else INF)
        return SkewSeries(self.lowest + k, self.coeffs,
                          self.order + k if self.order != INF else INF)

    def twisted(self, j):
        """Apply alpha^j to every coefficient (x^j * f = f.twisted(j).shift_right(j))."""
        return SkewSeries(self.lowest if self.lowest is not None else 0,
                          [twist(c, j) for c in self.coeffs], self.order)

    def __mul__(self, other):
        order = min(self.order + _low(other), other.order + _low(self))
        if self.lowest is None or other.lowest is None:
            return SkewSeries.zero(order)
        lo = self.lowest + other.lowest
        hi = order
        if hi == INF:
            hi = (self.lowest + len(self.coeffs)) + (other.lowest + len(other.coeffs)) - 1
        out = [RATF_ZERO] * max(0, hi - lo)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            ei = self.lowest + i
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                t = ei + other.lowest + j
                if t >= hi:
                    break
                out[t - lo] = out[t - lo] + a * twist(b, ei)
        return SkewSeries(lo, out, order)

    def inverse(self, order=None):
        """Series inverse to the requested absolute order."""
        if self.lowest is None:
            if self.order == INF:
                raise DomainError("inversion of the zero series")
            raise PrecisionError("cannot invert: no nonzero coefficient within known order")
        n = self.lowest
        avail = self.order - n  # relative knowledge of the unit part
        if order is None:
            if self.order == INF:
                raise PrecisionError("series_inverse of an exact value needs an explicit order")
            order = self.order - 2 * n
        if order == INF:
            if len(self.coeffs) != 1:
                raise PrecisionError("only a monomial has an exact (infinite-order) inverse")
            m_needed = 1
        else:
            m_needed = order + n
            if m_needed > avail:
                raise PrecisionError(
                    "series_inverse to order %s needs input known to order %s (have %s)"
                    % (order, order + 2 * n, self.order))
        a0 = self.coeffs[0]
        a0i = a0.inv()
        nterms = m_needed
        if nterms <= 0:
            return SkewSeries.zero(order)
        # unit part u = 1 + sum b_i x^i, b_i = alpha^-n(a_{i+n} / a_n)
        b = [RATF_ZERO] * nterms
        for i in range(1, nterms):
            if i < len(self.coeffs):
                c = self.coeffs[i]
                if c:
                    b[i] = twist(c * a0i, -n)
        # u^-1 = 1 + sum c_i x^i with c_m = -sum_{k=1..m} b_k alpha^k(c_{m-k})
        c = [RATF_ZERO] * nterms
        c[0] = RATF_ONE
        for m in range(1, nterms):
            acc = RATF_ZERO
            for k in range(1, m + 1):
                if b[k] and c[m - k]:
                    acc = acc + b[k] * twist(c[m - k], k)
            c[m] = -acc
        # f^-1 = u^-1 * (a_n x^n)^-1: coefficient at j - n is c_j * alpha^(j-n)(a_n^-1)
        out = [c[j] * twist(a0i, j - n) if c[j] else RATF_ZERO for j in range(nterms)]
        return SkewSeries(-n, out, order)

    def truncate(self, order):
        if order > self.order:
            raise PrecisionError("cannot extend a series to order %s (known to %s)" % (order, self.order))
        return SkewSeries(self.lowest if self.lowest is not None else 0, self.coeffs, order)

    def equal_upto(self, other, order):
        if order > self.order or order > other.order:
            raise PrecisionError("equality check to order %s exceeds known orders" % order)
        ends = [f.lowest + len(f.coeffs) for f in (self, other) if f.lowest is not None]
        stop = max(ends, default=0)
        if order != INF:
            stop = min(stop, order)
        lo = min(_low(self), _low(other))
        if lo == INF or lo >= stop:
            return True
        for k in range(lo, stop):
            if self.coeff(k) != other.coeff(k):
                return False
        return True

    # -- presentation -------------------------------------------------------

    def render(self):
        parts = []
        for k, c in self.terms():
            cs = c.render()
            if ("+" in cs) or (" - " in cs) or ("/" in cs) or ("*" in cs and k != 0):
                cs = "(%s)" % cs
            if k == 0:
                parts.append(cs)
            else:
                xs = "x" if k == 1 else "x^%d" % k
                parts.append(xs if cs == "1" else "%s*%s" % (cs, xs))
        body = " + ".join(parts) if parts else "0"
        if self.order == INF:
            return body
        return "%s + O(x^%d)" % (body, self.order)

    def __str__(self):
        return self.render()

    __repr__ = __str__

    def to_json(self):
        if self.lowest is None:
            return {"lowest": None, "order": None if self.order == INF else self.order, "coeffs": []}
        return {
            "lowest": self.lowest,
            "order": None if self.order == INF else self.order,
            "coeffs": [c.render() for c in self.coeffs],
        }


class SkewPoly:
    """Exact Laurent polynomial in x (finitely many nonzero coefficients)."""

    __slots__ = ("lowest", "coeffs")

    def __init__(self, lowest, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[0].is_zero():
            coeffs.pop(0)
            lowest += 1
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        if not coeffs:
            self.lowest = None
            self.coeffs = ()
        else:
            self.lowest = lowest
            self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls):
        return cls(0, ())

    @classmethod
    def one(cls):
        return cls(0, (RATF_ONE,))

    @classmethod
    def from_terms(cls, terms):
        if not terms:
            return cls.zero()
        lo, hi = min(terms), max(terms)
        return cls(lo, [RatFunc.coerce(terms.get(k, RATF_ZERO)) for k in range(lo, hi + 1)])

    @classmethod
    def from_series(cls, s):
        if s.order != INF:
            raise PrecisionError("only an exact series converts to a polynomial")
        if s.lowest is None:
            return cls.zero()
        return cls(s.lowest, s.coeffs)

    def is_zero(self):
        return self.lowest is None

    def degree(self):
        return -1 if self.lowest is None else self.lowest + len(self.coeffs) - 1

    def coeff(self, k):
        if self.lowest is None or k < self.lowest or k >= self.lowest + len(self.coeffs):
            return RATF_ZERO
        return self.coeffs[k - self.lowest]

    def to_series(self, order=INF):
        return SkewSeries(self.lowest if self.lowest is not None else 0, self.coeffs, order)

    def __eq__(self, other):
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.lowest == other.lowest and self.coeffs == other.coeffs

    __hash__ = None

    def __add__(self, other):
        return SkewPoly.from_series(self.to_series() + other.to_series())

    def __sub__(self, other):
        return SkewPoly.from_series(self.to_series() - other.to_series())

    def __neg__(self):
        return SkewPoly(self.lowest if self.lowest is not None else 0, [-c for c in self.coeffs])

    def __mul__(self, other):
        return SkewPoly.from_series(self.to_series() * other.to_series())

    def scale(self, r):
        return SkewPoly.from_series(self.to_series().scale(r))

    def render(self):
        return self.to_series().render()

    def __str__(self):
        return self.render()

    __repr__ = __str__

    def to_json(self):
        return {"lowest": self.lowest, "coeffs": [c.render() for c in self.coeffs]}


class LeftFraction:
    """Value Q^-1 * P with Q, P exact skew polynomials.

    Q is normalized to lowest exponent 0 and constant coefficient 1; the
    normalizing scalar is pushed into P.
    """

    __slots__ = ("den", "num")

    def __init__(self, den, num):
        if den.is_zero():
            raise DomainError("left fraction with zero denominator")
        if den.lowest != 0:
            raise DomainError("left-fraction denominator must have a unit constant term")
        c = den.coeffs[0]
        if not c.is_one():
            ci = c.inv()
            den = den.scale(ci)
            num = num.scale(ci)
        self.den = den
        self.num = num

    def __eq__(self, other):
        if not isinstance(other, LeftFraction):
            return NotImplemented
        return self.den == other.den and self.num == other.num

    __hash__ = None

    def to_series(self, order):
        return fraction_to_series(self, order)

    def render(self):
        return "(%s)^-1 * (%s)" % (self.den.render(), self.num.render())

    def __str__(self):
        return self.render()

    __repr__ = __str__

    def to_json(self):
        return {"den": self.den.to_json(), "num": self.num.to_json()}


# ---------------------------------------------------------------------------
# Module-level operation names


def series_add(f, g):
    return f + g


def series_sub(f, g):
    return f - g


def series_scale(r, f):
    return f.scale(r)


def series_mul(f, g):
    return f * g


def series_inverse(f, order=None):
    return f.inverse(order)


def truncate(f, order):
    return f.truncate(order)


def series_equal_upto(f, g, order):
    return f.equal_upto(g, order)


def commutator_defect(f, g, mu):
    """f*g - mu*g*f; the zero series certifies mu-commutation up to order."""
    return f * g - (g * f).scale(mu)


def fraction_to_series(frac, order):
    """Expand Q^-1 * P to the requested absolute order."""
    p = frac.num
    if p.is_zero():
        return SkewSeries.zero(order)
    qi = frac.den.to_series(INF).inverse(order - p.lowest)
    return (qi * p.to_series(INF)).truncate(order)
