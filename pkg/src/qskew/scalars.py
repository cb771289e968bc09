"""Exact scalar arithmetic for the whole package.

Ground field: Q(w) with w a primitive cube root of unity (w^2 = -w - 1).
Coefficient field for skew series: reduced rational functions in the
deformation parameter s and the commuting variable y over Q(w).  A single
transcendental s is used with qhat = s^3 and q = s^6, so both a square root
and a cube root of q exist without runtime field extensions.

The twist alpha is the field automorphism y -> q*y fixing Q(w)(s).
"""

from __future__ import annotations

import math
from fractions import Fraction


class DomainError(ArithmeticError):
    """Inversion of zero or an otherwise undefined field operation."""


class PoleError(DomainError):
    """Specialization hit a pole (denominator vanished)."""


class PrecisionError(ValueError):
    """A truncated value was asked for data beyond its known order."""


class CycRational:
    """Element re + im*w of Q(w), stored as two exact rationals."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def zero(cls):
        return _CYC_ZERO

    @classmethod
    def one(cls):
        return _CYC_ONE

    @classmethod
    def omega(cls):
        return _CYC_OMEGA

    @classmethod
    def coerce(cls, v):
        if isinstance(v, CycRational):
            return v
        return cls(v)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if not isinstance(other, CycRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        other = CycRational.coerce(other)
        return CycRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        other = CycRational.coerce(other)
        return CycRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return CycRational(-self.re, -self.im)

    def __mul__(self, other):
        other = CycRational.coerce(other)
        b, d = self.im, other.im
        if not b and not d:
            return CycRational(self.re * other.re)
        a, c = self.re, other.re
        # (a + b w)(c + d w) with w^2 = -w - 1
        bd = b * d
        return CycRational(a * c - bd, a * d + b * c - bd)

    __radd__ = __add__
    __rmul__ = __mul__

    def inv(self):
        # norm (a + b w)(a + b w^2) = a^2 - a b + b^2
        a, b = self.re, self.im
        n = a * a - a * b + b * b
        if not n:
            raise DomainError("inversion of zero in Q(w)")
        return CycRational((a - b) / n, -b / n)

    def __truediv__(self, other):
        return self * CycRational.coerce(other).inv()

    def is_one(self):
        return self.re == 1 and not self.im

    def is_rational(self):
        return not self.im

    def __str__(self):
        if not self.im:
            return str(self.re)
        if self.im == 1:
            ws = "w"
        elif self.im == -1:
            ws = "-w"
        else:
            ws = "%s*w" % self.im
        if not self.re:
            return ws
        if self.im < 0:
            return "%s - %s" % (self.re, ws[1:])
        return "%s + %s" % (self.re, ws)

    __repr__ = __str__


_CYC_ZERO = CycRational(0)
_CYC_ONE = CycRational(1)
_CYC_OMEGA = CycRational(0, 1)


def _grevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


class BasePoly:
    """Sparse multivariate polynomial over a coercible coefficient field.

    terms maps exponent tuples (all entries >= 0) to nonzero coefficients.
    Term order everywhere is graded reverse lexicographic with the symbol
    listed first ranked highest.
    """

    __slots__ = ("symbols", "terms", "ring")

    def __init__(self, symbols, terms, ring=CycRational):
        self.symbols = symbols
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}

    @classmethod
    def zero(cls, symbols, ring=CycRational):
        return cls(symbols, {}, ring)

    @classmethod
    def const(cls, symbols, c, ring=CycRational):
        c = ring.coerce(c)
        z = (0,) * len(symbols)
        return cls(symbols, {z: c} if c else {}, ring)

    @classmethod
    def monomial(cls, symbols, exps, c=1, ring=CycRational):
        c = ring.coerce(c)
        return cls(symbols, {tuple(exps): c} if c else {}, ring)

    @classmethod
    def variable(cls, symbols, i, ring=CycRational):
        e = [0] * len(symbols)
        e[i] = 1
        return cls.monomial(symbols, e, 1, ring)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        if not self.terms:
            return True
        z = (0,) * len(self.symbols)
        return len(self.terms) == 1 and z in self.terms

    def constant_value(self):
        z = (0,) * len(self.symbols)
        return self.terms.get(z, self.ring.zero())

    def is_monomial(self):
        return len(self.terms) == 1

    def is_one(self):
        z = (0,) * len(self.symbols)
        return len(self.terms) == 1 and z in self.terms and self.terms[z].is_one()

    def __eq__(self, other):
        if not isinstance(other, BasePoly):
            return NotImplemented
        return self.symbols == other.symbols and self.terms == other.terms

    def __hash__(self):
        return hash((self.symbols, frozenset((e, str(c)) for e, c in self.terms.items())))

    def __add__(self, other):
        t = dict(self.terms)
        for e, c in other.terms.items():
            nc = t[e] + c if e in t else c
            if nc:
                t[e] = nc
            else:
                del t[e]
        return BasePoly(self.symbols, t, self.ring)

    def __sub__(self, other):
        t = dict(self.terms)
        for e, c in other.terms.items():
            nc = t[e] - c if e in t else -c
            if nc:
                t[e] = nc
            else:
                del t[e]
        return BasePoly(self.symbols, t, self.ring)

    def __neg__(self):
        return BasePoly(self.symbols, {e: -c for e, c in self.terms.items()}, self.ring)

    def __mul__(self, other):
        if isinstance(other, BasePoly):
            t = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    p = c1 * c2
                    if e in t:
                        p = t[e] + p
                    if p:
                        t[e] = p
                    elif e in t:
                        del t[e]
            return BasePoly(self.symbols, t, self.ring)
        return self.scale(other)

    def scale(self, c):
        c = self.ring.coerce(c)
        if not c:
            return BasePoly.zero(self.symbols, self.ring)
        return BasePoly(self.symbols, {e: c * v for e, v in self.terms.items()}, self.ring)

    def mul_monomial(self, exps, c=None):
        t = {}
        for e, v in self.terms.items():
            ne = tuple(a + b for a, b in zip(e, exps))
            t[ne] = v if c is None else v * c
        return BasePoly(self.symbols, t, self.ring)

    def __pow__(self, n):
        if n < 0:
            raise DomainError("negative power of a polynomial")
        r = BasePoly.const(self.symbols, 1, self.ring)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b if n > 1 else b
            n >>= 1
        return r

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i):
        return max((e[i] for e in self.terms), default=-1)

    def leading(self):
        """(exponent tuple, coefficient) of the grevlex-leading term."""
        e = max(self.terms, key=_grevlex_key)
        return e, self.terms[e]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grevlex_key(t[0]), reverse=True)

    def derivative(self, i):
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                t[tuple(ne)] = c * e[i]
        return BasePoly(self.symbols, t, self.ring)

    def evaluate(self, values, one):
        """Substitute values[i] for symbol i; values live in any ring with + and *."""
        acc = None
        for e, c in self.terms.items():
            term = one.scale(c) if hasattr(one, "scale") else one * c
            for i, k in enumerate(e):
                for _ in range(k):
                    term = term * values[i]
            acc = term if acc is None else acc + term
        if acc is None:
            return one - one
        return acc

    def exponent_content(self):
        """Componentwise minimum exponent over all terms (the monomial content)."""
        it = iter(self.terms)
        try:
            m = list(next(it))
        except StopIteration:
            return (0,) * len(self.symbols)
        for e in it:
            for i, v in enumerate(e):
                if v < m[i]:
                    m[i] = v
        return tuple(m)

    def div_monomial(self, exps):
        t = {}
        for e, v in self.terms.items():
            ne = tuple(a - b for a, b in zip(e, exps))
            assert all(x >= 0 for x in ne)
            t[ne] = v
        return BasePoly(self.symbols, t, self.ring)

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                s if k == 1 else "%s^%d" % (s, k)
                for s, k in zip(self.symbols, e) if k
            )
            cs = str(c)
            neg = False
            if isinstance(c, CycRational):
                if (c.re < 0 and c.im <= 0) or (c.re == 0 and c.im < 0):
                    neg = True
                    cs = str(-c)
                wrapped = ("+" in cs) or (" - " in cs)
            else:
                if cs.startswith("-"):
                    neg, cs = True, cs[1:]
                wrapped = ("+" in cs) or (" - " in cs) or ("/" in cs and mono)
            if wrapped and mono:
                cs = "(%s)" % cs
            if mono:
                body = mono if cs == "1" else "%s*%s" % (cs, mono)
            else:
                body = cs
            parts.append(("- " if neg else "+ ") + body)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def __str__(self):
        return self.render()

    __repr__ = __str__


# ---------------------------------------------------------------------------
# GCD machinery (coefficients in Q(w); one or two symbols)


def _to_recursive(p, main):
    """BasePoly in 2 vars -> dict main_exp -> dict other_exp -> coeff."""
    other = 1 - main
    out = {}
    for e, c in p.terms.items():
        out.setdefault(e[main], {})[e[other]] = c
    return out


def _uni_trim(d):
    return {k: v for k, v in d.items() if v}


def _uni_deg(d):
    return max(d, default=-1)


def _uni_mul(a, b):
    out = {}
    for i, c in a.items():
        for j, d in b.items():
            k = i + j
            p = c * d
            if k in out:
                p = out[k] + p
            if p:
                out[k] = p
            elif k in out:
                del out[k]
    return out


def _uni_sub(a, b):
    out = dict(a)
    for k, v in b.items():
        nv = out[k] - v if k in out else -v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def _uni_scale(a, c):
    return {k: v * c for k, v in a.items()}


def _eis_mul2(ar, ai, br, bi):
    # (ar + ai w)(br + bi w) over integers, w^2 = -w - 1
    t = ai * bi
    return ar * br - t, ar * bi + ai * br - t


def _eis_gcd(ar, ai, br, bi):
    """Gcd in Z[w], norm-Euclidean with nearest-integer quotient rounding."""
    while br or bi:
        n = br * br - br * bi + bi * bi
        # a * conj(b) with conj(w) = -1 - w
        cr, ci = _eis_mul2(ar, ai, br - bi, -bi)
        qr = (2 * cr + n) // (2 * n)
        qi = (2 * ci + n) // (2 * n)
        pr, pi = _eis_mul2(qr, qi, br, bi)
        ar, ai, br, bi = br, bi, ar - pr, ai - pi
    return ar, ai


def _uni_int_primitive(a):
    """Scale to integer coefficients with Z[w]-content a unit.

    Plain integer content is not enough: pseudo-remainders pile up w-number
    factors that math.gcd cannot see, and the primitive PRS then grows
    exponentially.
    """
    m = 1
    for v in a.values():
        m = m * v.re.denominator // math.gcd(m, v.re.denominator)
        m = m * v.im.denominator // math.gcd(m, v.im.denominator)
    g0 = 0
    nums = {}
    for k, v in a.items():
        re = int(v.re * m)
        im = int(v.im * m)
        nums[k] = (re, im)
        g0 = math.gcd(g0, re, im)
    if g0 == 0:
        return {}
    if g0 > 1:
        nums = {k: (re // g0, im // g0) for k, (re, im) in nums.items()}
    gr = gi = 0
    for re, im in nums.values():
        gr, gi = _eis_gcd(gr, gi, re, im)
        if gr * gr - gr * gi + gi * gi == 1:
            return {k: CycRational(Fraction(re), Fraction(im))
                    for k, (re, im) in nums.items()}
    n = gr * gr - gr * gi + gi * gi
    out = {}
    for k, (re, im) in nums.items():
        cr, ci = _eis_mul2(re, im, gr - gi, -gi)
        out[k] = CycRational(Fraction(cr // n), Fraction(ci // n))
    return out


def _uni_prem(a, b):
    """Pseudo-remainder: reduce lc(b)^k * a by b without any division."""
    db = _uni_deg(b)
    lb = b[db]
    r = dict(a)
    while r:
        dr = _uni_deg(r)
        if dr < db:
            break
        lr = r.pop(dr)
        nr = {k: v * lb for k, v in r.items()}
        for k, v in b.items():
            if k == db:
                continue
            key = k + dr - db
            t = v * lr
            nv = nr[key] - t if key in nr else -t
            if nv:
                nr[key] = nv
            else:
                nr.pop(key, None)
        r = nr
    return r


def _uni_pquo(a, b):
    """Quotient of lc(b)^(deg a - deg b + 1) * a by b, for exact divisions.

    Stays in integer coefficients; plain division over Q doubles coefficient
    bits on every step even when the division is exact.
    """
    db = _uni_deg(b)
    lb = b[db]
    r = dict(a)
    q = {}
    for d in range(_uni_deg(a), db - 1, -1):
        c = r.pop(d, None)
        if q:
            q = {k: v * lb for k, v in q.items()}
        if c is None:
            if r:
                r = {k: v * lb for k, v in r.items()}
            continue
        nr = {k: v * lb for k, v in r.items()}
        for k, v in b.items():
            if k == db:
                continue
            key = k + d - db
            t = v * c
            nv = nr[key] - t if key in nr else -t
            if nv:
                nr[key] = nv
            else:
                nr.pop(key, None)
        r = nr
        q[d - db] = c
    return q


def _uni_gcd_int(a, b):
    """Gcd by primitive pseudo-remainder sequence, integer-primitive output.

    All chaining stays over cleared integer coefficients; plain Euclid over Q
    explodes coefficient sizes on inputs of this scale.
    """
    a, b = _uni_trim(a), _uni_trim(b)
    if not a:
        return _uni_int_primitive(b)
    if not b:
        return _uni_int_primitive(a)
    a = _uni_int_primitive(a)
    b = _uni_int_primitive(b)
    while b:
        if _uni_deg(a) < _uni_deg(b):
            a, b = b, a
            continue
        r = _uni_prem(a, b)
        a, b = b, _uni_int_primitive(r)
    return a


def _uni_gcd(a, b):
    """Monic gcd of univariate polys (dicts exp -> CycRational)."""
    g = _uni_gcd_int(a, b)
    if not g:
        return {}
    return _uni_scale(g, g[_uni_deg(g)].inv())


def _rec_div_content(r, cont):
    """Divide each coefficient of a recursive poly by a common divisor cont.

    Pseudo-quotients are padded to a uniform power of lc(cont) so the result
    is a single scalar multiple of the true quotient; callers re-primitivize.
    """
    db = _uni_deg(cont)
    lb = cont[db]
    quos = {}
    kmax = 0
    for key, v in r.items():
        k = _uni_deg(v) - db + 1
        quos[key] = (k, _uni_pquo(v, cont))
        if k > kmax:
            kmax = k
    out = {}
    for key, (k, qv) in quos.items():
        if k < kmax:
            f = lb
            for _ in range(kmax - k - 1):
                f = f * lb
            qv = {e: c * f for e, c in qv.items()}
        out[key] = qv
    return out


def _rec_content(r):
    """Gcd of the coefficient polys of a recursive poly (integer-primitive)."""
    g = {}
    for coef in r.values():
        g = _uni_gcd_int(g, coef)
        if _uni_deg(g) == 0:
            return g
    return g


def _rec_int_primitive(r):
    """Clear a recursive poly to integer coefficients, Z[w]-content a unit."""
    m = 1
    for coef in r.values():
        for v in coef.values():
            m = m * v.re.denominator // math.gcd(m, v.re.denominator)
            m = m * v.im.denominator // math.gcd(m, v.im.denominator)
    g0 = 0
    ints = {}
    for k, coef in r.items():
        d = {}
        for e, v in coef.items():
            re = int(v.re * m)
            im = int(v.im * m)
            if re or im:
                d[e] = (re, im)
                g0 = math.gcd(g0, re, im)
        if d:
            ints[k] = d
    if g0 == 0:
        return {}
    gr = gi = 0
    unit = False
    for d in ints.values():
        for e, (re, im) in d.items():
            if g0 > 1:
                d[e] = (re // g0, im // g0)
            if not unit:
                gr, gi = _eis_gcd(gr, gi, d[e][0], d[e][1])
                unit = gr * gr - gr * gi + gi * gi == 1
    n = gr * gr - gr * gi + gi * gi
    out = {}
    for k, d in ints.items():
        nd = {}
        for e, (re, im) in d.items():
            if n == 1:
                nd[e] = CycRational(Fraction(re), Fraction(im))
            else:
                cr, ci = _eis_mul2(re, im, gr - gi, -gi)
                nd[e] = CycRational(Fraction(cr // n), Fraction(ci // n))
        out[k] = nd
    return out


def _rec_prem(a, b):
    """Pseudo-remainder of a by b (both recursive, main variable outer)."""
    da, db = max(a), max(b)
    lb = b[db]
    r = {k: dict(v) for k, v in a.items()}
    while r:
        dr = max(r)
        if dr < db:
            break
        lr = r[dr]
        nr = {}
        for k, v in r.items():
            if k != dr:
                nr[k] = _uni_trim(_uni_mul(v, lb))
        for k, v in b.items():
            if k != db:
                t = _uni_mul(v, lr)
                key = k + dr - db
                nr[key] = _uni_trim(_uni_sub(nr.get(key, {}), t))
        r = {k: v for k, v in nr.items() if v}
    return r


def poly_gcd(a, b):
    """Gcd of BasePoly values over CycRational in <= 2 symbols, monic leading coeff."""
    if a.is_zero():
        return _make_monic(b)
    if b.is_zero():
        return _make_monic(a)
    nsym = len(a.symbols)
    ca, cb = a.exponent_content(), b.exponent_content()
    common = tuple(min(x, y) for x, y in zip(ca, cb))
    a0 = a.div_monomial(ca)
    b0 = b.div_monomial(cb)
    if nsym == 1:
        g = _uni_gcd({e[0]: c for e, c in a0.terms.items()},
                     {e[0]: c for e, c in b0.terms.items()})
        gp = BasePoly(a.symbols, {(k,): v for k, v in g.items()}, a.ring)
        return _make_monic(gp.mul_monomial(common))
    if a0.is_constant() or b0.is_constant():
        return _make_monic(BasePoly.monomial(a.symbols, common, 1, a.ring))
    # pick the main variable with the smaller max degree
    main = 0 if a0.degree_in(0) + b0.degree_in(0) <= a0.degree_in(1) + b0.degree_in(1) else 1
    ra, rb = _to_recursive(a0, main), _to_recursive(b0, main)
    if max(ra) < max(rb):
        ra, rb = rb, ra
    conta, contb = _rec_content(ra), _rec_content(rb)
    ra = _rec_div_content(ra, conta) if _uni_deg(conta) > 0 else ra
    rb = _rec_div_content(rb, contb) if _uni_deg(contb) > 0 else rb
    contg = _uni_gcd_int(conta, contb)
    # pseudo-remainder growth is only tame over integer-primitive operands
    ra, rb = _rec_int_primitive(ra), _rec_int_primitive(rb)
    while rb:
        r = _rec_prem(ra, rb)
        if r:
            r = _rec_int_primitive(r)
            cont = _rec_content(r)
            if _uni_deg(cont) > 0:
                r = _rec_int_primitive(_rec_div_content(r, cont))
        ra, rb = rb, r
    if max(ra) == 0 and _uni_deg(contg) <= 0:
        g = BasePoly.monomial(a.symbols, common, 1, a.ring)
        return _make_monic(g)
    # assemble contg * primitive(ra) back into a BasePoly
    terms = {}
    for me, coef in ra.items():
        prod = _uni_mul(coef, contg) if _uni_deg(contg) > 0 else coef
        for oe, c in prod.items():
            e = (me, oe) if main == 0 else (oe, me)
            if c:
                terms[e] = c
    g = BasePoly(a.symbols, terms, a.ring).mul_monomial(common)
    return _make_monic(g)


def _make_monic(p):
    if p.is_zero():
        return p
    _, lc = p.leading()
    if lc.is_one():
        return p
    return p.scale(lc.inv())


def poly_divexact(a, b):
    """Exact multivariate division a / b; raises DomainError if not exact."""
    if b.is_zero():
        raise DomainError("division by zero polynomial")
    q = BasePoly.zero(a.symbols, a.ring)
    r = a
    eb, cb = b.leading()
    cbi = cb.inv()
    while not r.is_zero():
        er, cr = r.leading()
        de = tuple(x - y for x, y in zip(er, eb))
        if any(x < 0 for x in de):
            raise DomainError("polynomial division is not exact")
        t = BasePoly.monomial(a.symbols, de, cr * cbi, a.ring)
        q = q + t
        r = r - t * b
    return q


# ---------------------------------------------------------------------------


class Frac:
    """Reduced fraction num/den of BasePoly values; den monic under grevlex."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        if den is None:
            den = BasePoly.const(num.symbols, 1, num.ring)
        if den.is_zero():
            raise DomainError("zero denominator")
        if reduce:
            num, den = _reduce_pair(num, den)
        self.num = num
        self.den = den

    @property
    def symbols(self):
        return self.num.symbols

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def __eq__(self, other):
        if not isinstance(other, Frac):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    __hash__ = None

    def __add__(self, other):
        num, den = _combine_pair(self.num, self.den, other.num, other.den, False)
        return Frac(num, den, reduce=False)

    def __sub__(self, other):
        num, den = _combine_pair(self.num, self.den, other.num, other.den, True)
        return Frac(num, den, reduce=False)

    def __neg__(self):
        return Frac(-self.num, self.den, reduce=False)

    def __mul__(self, other):
        if self.num.is_zero() or other.num.is_zero():
            return Frac(BasePoly.zero(self.symbols, self.num.ring), reduce=False)
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1 = self.num if g1.is_one() else poly_divexact(self.num, g1)
        d2 = other.den if g1.is_one() else poly_divexact(other.den, g1)
        n2 = other.num if g2.is_one() else poly_divexact(other.num, g2)
        d1 = self.den if g2.is_one() else poly_divexact(self.den, g2)
        num, den = n1 * n2, d1 * d2
        den, num = _monic_pair(den, num)
        return Frac(num, den, reduce=False)

    def inv(self):
        if self.num.is_zero():
            raise DomainError("inversion of the zero rational function")
        den, num = _monic_pair(self.num, self.den)
        return Frac(num, den, reduce=False)

    def __truediv__(self, other):
        return self * other.inv()

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        num, den = self.num ** n, self.den ** n
        return Frac(num, den, reduce=False)

    def scale(self, c):
        scaled = self.num.scale(c)
        if scaled.is_zero():
            return Frac(scaled)
        return Frac(scaled, self.den, reduce=False)

    def render(self):
        ns = self.num.render()
        if self.den.is_one():
            return ns
        ds = self.den.render()
        if len(self.num.terms) > 1:
            ns = "(%s)" % ns
        if len(self.den.terms) > 1 or not self.den.is_monomial():
            ds = "(%s)" % ds
        elif "*" in ds or "/" in ds:
            ds = "(%s)" % ds
        return "%s/%s" % (ns, ds)

    def __str__(self):
        return self.render()

    __repr__ = __str__


def _monic_pair(den, num):
    _, lc = den.leading()
    if lc.is_one():
        return den, num
    inv = lc.inv()
    return den.scale(inv), num.scale(inv)


def _combine_pair(na, da, nb, db, sub):
    """Reduced (num, den) of na/da +- nb/db, both inputs already reduced.

    Only the gcd of the denominators ever needs cancelling against the new
    numerator; when the denominators are coprime the sum is already reduced
    and no gcd of full-size operands is taken at all.
    """
    if na.is_zero():
        return (-nb if sub else nb), db
    if nb.is_zero():
        return na, da
    one = BasePoly.const(da.symbols, 1, da.ring)
    if da == db:
        num = na - nb if sub else na + nb
        if num.is_zero():
            return num, one
        if not da.is_one():
            g = poly_gcd(num, da)
            if not g.is_one():
                num = poly_divexact(num, g)
                da = poly_divexact(da, g)
        den, num = _monic_pair(da, num)
        return num, den
    if da.is_one():
        num = na * db - nb if sub else na * db + nb
        return num, db
    if db.is_one():
        num = na - nb * da if sub else na + nb * da
        return num, da
    g0 = poly_gcd(da, db)
    if g0.is_one():
        nbda = nb * da
        num = na * db - nbda if sub else na * db + nbda
        den = da * db
        den, num = _monic_pair(den, num)
        return num, den
    da2 = poly_divexact(da, g0)
    db2 = poly_divexact(db, g0)
    nbda2 = nb * da2
    num = na * db2 - nbda2 if sub else na * db2 + nbda2
    if num.is_zero():
        return num, one
    den = da * db2
    t = poly_gcd(num, g0)
    if not t.is_one():
        num = poly_divexact(num, t)
        den = poly_divexact(den, t)
    den, num = _monic_pair(den, num)
    return num, den


def _reduce_pair(num, den):
    if num.is_zero():
        return num, BasePoly.const(num.symbols, 1, num.ring)
    cn, cd = num.exponent_content(), den.exponent_content()
    common = tuple(min(a, b) for a, b in zip(cn, cd))
    if any(common):
        num = num.div_monomial(common)
        den = den.div_monomial(common)
    if not den.is_monomial():
        g = poly_gcd(num, den)
        if not g.is_one():
            num = poly_divexact(num, g)
            den = poly_divexact(den, g)
    den, num = _monic_pair(den, num)
    return num, den


# ---------------------------------------------------------------------------
# The concrete coefficient field K = Q(w)(s, y) with qhat = s^3, q = s^6.

_SY = ("s", "y")


class RatFunc(Frac):
    """Element of Q(w)(s, y): the coefficient field of the skew series."""

    __slots__ = ()

    @classmethod
    def zero(cls):
        return RATF_ZERO

    @classmethod
    def one(cls):
        return RATF_ONE

    @classmethod
    def coerce(cls, v):
        if isinstance(v, RatFunc):
            return v
        if isinstance(v, Frac):
            return RatFunc(v.num, v.den, reduce=False)
        return from_cyc(CycRational.coerce(v))

    def __add__(self, other):
        r = Frac.__add__(self, RatFunc.coerce(other))
        return RatFunc(r.num, r.den, reduce=False)

    def __sub__(self, other):
        r = Frac.__sub__(self, RatFunc.coerce(other))
        return RatFunc(r.num, r.den, reduce=False)

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __mul__(self, other):
        r = Frac.__mul__(self, RatFunc.coerce(other))
        return RatFunc(r.num, r.den, reduce=False)

    __radd__ = __add__
    __rmul__ = __mul__

    def inv(self):
        r = Frac.inv(self)
        return RatFunc(r.num, r.den, reduce=False)

    def __truediv__(self, other):
        return self * RatFunc.coerce(other).inv()

    def __pow__(self, n):
        r = Frac.__pow__(self, n)
        return RatFunc(r.num, r.den, reduce=False)

    def scale(self, c):
        r = Frac.scale(self, c)
        return RatFunc(r.num, r.den, reduce=False)

    def is_y_free(self):
        return (self.num.degree_in(1) <= 0) and (self.den.degree_in(1) <= 0)


def _sy_poly(terms):
    return BasePoly(_SY, {e: CycRational.coerce(c) for e, c in terms.items()})


def from_cyc(c):
    return RatFunc(_sy_poly({(0, 0): c}), reduce=False)


def from_rational(v):
    return from_cyc(CycRational(v))


def monomial_sy(sexp, yexp, coef=1):
    """c * s^sexp * y^yexp as a RatFunc; exponents may be negative."""
    c = CycRational.coerce(coef)
    num_e = (max(sexp, 0), max(yexp, 0))
    den_e = (max(-sexp, 0), max(-yexp, 0))
    return RatFunc(_sy_poly({num_e: c}), _sy_poly({den_e: CycRational(1)}), reduce=False)


RATF_ZERO = RatFunc(_sy_poly({}), reduce=False)
RATF_ONE = from_rational(1)
S = monomial_sy(1, 0)
Y = monomial_sy(0, 1)
QHAT = monomial_sy(3, 0)
Q = monomial_sy(6, 0)
OMEGA = from_cyc(CycRational.omega())


def qpow(k):
    """q^k as a RatFunc (k may be negative)."""
    return monomial_sy(6 * k, 0)


def qhatpow(k):
    return monomial_sy(3 * k, 0)


def ypow(k):
    return monomial_sy(0, k)


def field_add(a, b):
    return a + b


def field_mul(a, b):
    return a * b


def field_inv(a):
    return a.inv()


def _twist_poly(p, j):
    # y^b -> (s^6 y)^(jb) ... i.e. s-exponent gains 6*j*b
    t = {}
    mn = 0
    for (a, b), c in p.terms.items():
        na = a + 6 * j * b
        if na < mn:
            mn = na
        t[(na, b)] = c
    return t, mn


def twist(r, j=1):
    """Apply alpha^j: the field automorphism y -> q^j * y fixing Q(w)(s)."""
    if j == 0 or r.is_zero():
        return r
    tn, mn = _twist_poly(r.num, j)
    td, md = _twist_poly(r.den, j)
    shift = -min(mn, md)
    if shift:
        tn = {(a + shift, b): c for (a, b), c in tn.items()}
        td = {(a + shift, b): c for (a, b), c in td.items()}
    num = BasePoly(_SY, tn)
    den = BasePoly(_SY, td)
    cn, cd = num.exponent_content(), den.exponent_content()
    common = tuple(min(x, z) for x, z in zip(cn, cd))
    if any(common):
        num = num.div_monomial(common)
        den = den.div_monomial(common)
    den, num = _monic_pair(den, num)
    return RatFunc(num, den, reduce=False)


def _eval_s1(p):
    t = {}
    for (a, b), c in p.terms.items():
        key = (0, b)
        nc = t[key] + c if key in t else c
        if nc:
            t[key] = nc
        else:
            t.pop(key, None)
    return BasePoly(_SY, t)


def specialize_classical(r):
    """Substitute s -> 1 (so qhat -> 1, q -> 1); errors on a pole."""
    den = _eval_s1(r.den)
    if den.is_zero():
        raise PoleError("denominator vanishes at the classical point s = 1")
    num = _eval_s1(r.num)
    return RatFunc(num, den)


def _eval_sy(p, sv, yv):
    if isinstance(sv, Fraction) and sv.denominator == 1:
        sv = sv.numerator
    if isinstance(yv, Fraction) and yv.denominator == 1:
        yv = yv.numerator
    spows = {}
    ypows = {}
    if type(sv) is int and type(yv) is int:
        # integer points: accumulate over a common denominator, one gcd at the end
        m = 1
        for c in p.terms.values():
            rd, im_ = c.re.denominator, c.im.denominator
            m = m * rd // math.gcd(m, rd)
            m = m * im_ // math.gcd(m, im_)
        re = im = 0
        for (a, b), c in p.terms.items():
            fs = spows.get(a)
            if fs is None:
                fs = spows[a] = sv ** a
            fy = ypows.get(b)
            if fy is None:
                fy = ypows[b] = yv ** b
            f = fs * fy
            cr, ci = c.re, c.im
            if cr.numerator:
                re += cr.numerator * (m // cr.denominator) * f
            if ci.numerator:
                im += ci.numerator * (m // ci.denominator) * f
        return CycRational(Fraction(re, m), Fraction(im, m))
    acc = _CYC_ZERO
    for (a, b), c in p.terms.items():
        fs = spows.get(a)
        if fs is None:
            fs = spows[a] = sv ** a
        fy = ypows.get(b)
        if fy is None:
            fy = ypows[b] = yv ** b
        acc = acc + c * (fs * fy)
    return acc


def eval_ratfunc_at(r, sv, yv):
    """Exact value at nonzero rationals s=sv, y=yv; PoleError where undefined."""
    d = _eval_sy(r.den, sv, yv)
    if not d:
        raise PoleError("denominator vanishes at (s, y) = (%s, %s)" % (sv, yv))
    return _eval_sy(r.num, sv, yv) * d.inv()


_YSYM = ("y",)


def _eval_s_poly(p, sv):
    t = {}
    pows = {}
    for (a, b), c in p.terms.items():
        f = pows.get(a)
        if f is None:
            f = pows[a] = sv ** a
        nc = c * f
        key = (b,)
        acc = t[key] + nc if key in t else nc
        if acc:
            t[key] = acc
        else:
            t.pop(key, None)
    return BasePoly(_YSYM, t)


def eval_ratfunc_s(r, sv):
    """Substitute s = sv (a rational), keeping y symbolic.

    Returns a univariate Frac in y; PoleError when the denominator vanishes
    identically at sv.
    """
    den = _eval_s_poly(r.den, sv)
    if den.is_zero():
        raise PoleError("denominator vanishes identically at s = %s" % (sv,))
    return Frac(_eval_s_poly(r.num, sv), den)
