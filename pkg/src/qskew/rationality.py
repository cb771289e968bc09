"""Detect and reconstruct left-fraction presentations of skew power series.

A series F with coefficients a_0, a_1, ... (lowest exponent 0) represents a
left fraction Q^-1 * P iff the coefficients eventually satisfy a twisted
linear recurrence a_m = sum_i c_i * alpha^i(a_{m-i}).  The test forms the
square matrices with entries alpha^(size-l)(a_{j+l+r-3}) (row j, col l,
1-based; r a shift) and looks for vanishing determinants; the recurrence is
then solved from the leading subsystem and the fraction rebuilt as
Q = 1 - sum c_i x^i, P = the part of Q*F below the recurrence length.

All arithmetic is exact; every zero determinant is a true zero.  A report
never claims irrationality, only "no zero determinant within tested bounds".
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import (
    CycRational, DomainError, PoleError, PrecisionError, RATF_ONE, RATF_ZERO,
    eval_ratfunc_at, monomial_sy, twist,
)
from .series import INF, LeftFraction, SkewPoly


class SingularMatrixError(DomainError):
    pass


class InconsistencyError(DomainError):
    pass


class RecurrenceReport:
    """Grid of determinant results: tested (k, r) pairs and which were zero."""

    __slots__ = ("tested", "zeros", "candidate")

    def __init__(self, tested, zeros, candidate):
        self.tested = list(tested)
        self.zeros = list(zeros)
        self.candidate = candidate

    def to_json(self):
        return {
            "tested": [list(p) for p in self.tested],
            "zeros": [list(p) for p in self.zeros],
            "candidate": list(self.candidate) if self.candidate else None,
        }

    def __str__(self):
        return "RecurrenceReport(zeros=%s of %d tested, candidate=%s)" % (
            self.zeros, len(self.tested), self.candidate)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# Exact linear algebra over the coefficient field


def det(rows, one=RATF_ONE, zero=RATF_ZERO):
    """Determinant by fraction-free (Bareiss) elimination with row pivoting."""
    n = len(rows)
    if n == 0:
        return one
    a = [list(r) for r in rows]
    prev = one
    sign = 1
    for col in range(n - 1):
        piv_row = None
        for r in range(col, n):
            if not a[r][col].is_zero():
                piv_row = r
                break
        if piv_row is None:
            return zero
        if piv_row != col:
            a[col], a[piv_row] = a[piv_row], a[col]
            sign = -sign
        piv = a[col][col]
        for r in range(col + 1, n):
            arc = a[r][col]
            for cl in range(col + 1, n):
                a[r][cl] = (a[r][cl] * piv - arc * a[col][cl]) / prev
            a[r][col] = zero
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def _solve_linear(rows, rhs, one=RATF_ONE, zero=RATF_ZERO):
    """Solve A w = rhs by Cramer over Bareiss determinants.

    Gauss-Jordan over the rational-function field piles up uncancelled
    factors; the sizes here are small enough that n+1 determinants win.
    """
    n = len(rows)
    d = det(rows, one, zero)
    if d.is_zero():
        raise SingularMatrixError(
            "matrix is not invertible, check your values of size and shift")
    dinv = d.inv()
    out = []
    for i in range(n):
        mi = [list(row[:i]) + [rv] + list(row[i + 1:])
              for row, rv in zip(rows, rhs)]
        out.append(det(mi, one, zero) * dinv)
    return out


_PROBE_POINTS = ((2, 3), (3, 5), (5, 2), (7, 11), (2, 13))

_POINT_POOL = tuple(Fraction(p) for p in (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53))

_CYC_ZERO = CycRational(0)


class _LikelySingular(Exception):
    """Several specializations were singular; the exact claim is unconfirmed."""


def _solve_numeric(rows, rhs):
    """Exact Gauss-Jordan over plain field values."""
    n = len(rows)
    m = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            raise SingularMatrixError(
                "matrix is not invertible, check your values of size and shift")
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col].inv()
        m[col] = [e * inv for e in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def _fit_rational_1d(samples, dtot):
    """Fit value = N(x)/D(x) through exact (x, value) samples, D monic.

    Tries the splits deg N + deg D = dtot with the smallest denominator
    first; a fit must also match two held-out samples.  Returns coefficient
    lists (ncoef, dcoef) with D = x^len(dcoef) + sum dcoef[j] x^j, or None.
    """
    for dd in range(dtot + 1):
        dn = dtot - dd
        t = dn + dd + 1
        if t + 2 > len(samples):
            continue
        use, check = samples[:t], samples[t:t + 2]
        rows = []
        rhs = []
        for x, v in use:
            row = [CycRational(x ** j) for j in range(dn + 1)]
            row += [-(v * CycRational(x ** j)) for j in range(dd)]
            rows.append(row)
            rhs.append(v * CycRational(x ** dd))
        try:
            w = _solve_numeric(rows, rhs)
        except SingularMatrixError:
            continue
        ncoef, dcoef = w[:dn + 1], w[dn + 1:]
        ok = True
        for x, v in check:
            dv = CycRational(x ** dd)
            for j, c in enumerate(dcoef):
                dv = dv + c * CycRational(x ** j)
            nv = _CYC_ZERO
            for j, c in enumerate(ncoef):
                nv = nv + c * CycRational(x ** j)
            if not dv or nv != v * dv:
                ok = False
                break
        if ok:
            while ncoef and not ncoef[-1]:
                ncoef.pop()
            return ncoef, dcoef
    return None


def _assemble_z(fit):
    # coefficient lists in z = s^3 back to a bivariate value
    ncoef, dcoef = fit
    num = RATF_ZERO
    for j, c in enumerate(ncoef):
        if c:
            num = num + monomial_sy(3 * j, 0, c)
    den = monomial_sy(3 * len(dcoef), 0)
    for j, c in enumerate(dcoef):
        if c:
            den = den + monomial_sy(3 * j, 0, c)
    return num / den


def _solve_linear_fast(rows, rhs):
    """Solve by exact interpolation through (s, y) specializations.

    The exact entries blow up through twisting while the solution stays
    small, so numeric point solves plus staged rational fits (first the
    y-shape at each s point, then each coefficient's s-dependence, fitted in
    z = s^3 since every exponent in sight is a multiple of 3) beat exact
    elimination by orders of magnitude.  Returns None when nothing fits
    within budget; raises _LikelySingular after three singular
    specializations.  Callers must confirm any answer exactly.
    """
    n = len(rows)
    cache = {}
    singular = 0

    def point_solve(sv, yv):
        nonlocal singular
        key = (sv, yv)
        if key in cache:
            return cache[key]
        try:
            m = [[eval_ratfunc_at(e, sv, yv) for e in row] for row in rows]
            r2 = [eval_ratfunc_at(e, sv, yv) for e in rhs]
            val = _solve_numeric(m, r2)
        except PoleError:
            val = None
        except SingularMatrixError:
            val = None
            singular += 1
            if singular >= 3:
                raise _LikelySingular
        cache[key] = val
        return val

    for dy, dz in ((4, 4), (8, 8), (12, 12)):
        sneed, yneed = dz + 3, dy + 3
        per_sigma = []
        for sv in _POINT_POOL:
            if len(per_sigma) >= sneed:
                break
            ysamples = []
            for yv in _POINT_POOL:
                if len(ysamples) >= yneed:
                    break
                val = point_solve(sv, yv)
                if val is not None:
                    ysamples.append((yv, val))
            if len(ysamples) < yneed:
                continue
            fits = []
            for i in range(n):
                fit = _fit_rational_1d([(yv, v[i]) for yv, v in ysamples], dy)
                if fit is None:
                    break
                fits.append(fit)
            else:
                per_sigma.append((sv, fits))
        if len(per_sigma) < sneed:
            continue
        sols = []
        for i in range(n):
            # y-shapes can degenerate at unlucky s points; keep the majority
            by_dd = {}
            for sv, fits in per_sigma:
                by_dd.setdefault(len(fits[i][1]), []).append((sv, fits[i]))
            dd, group = max(by_dd.items(), key=lambda kv: len(kv[1]))
            if len(group) < dz + 3:
                sols = None
                break
            group = group[:dz + 3]
            ymax = max(len(f[0]) for _, f in group)
            parts_n = []
            for u in range(ymax):
                samples = [(sv ** 3, f[0][u] if u < len(f[0]) else _CYC_ZERO)
                           for sv, f in group]
                zfit = _fit_rational_1d(samples, dz)
                if zfit is None:
                    parts_n = None
                    break
                parts_n.append(zfit)
            if parts_n is None:
                sols = None
                break
            parts_d = []
            for u in range(dd):
                samples = [(sv ** 3, f[1][u]) for sv, f in group]
                zfit = _fit_rational_1d(samples, dz)
                if zfit is None:
                    parts_d = None
                    break
                parts_d.append(zfit)
            if parts_d is None:
                sols = None
                break
            num = RATF_ZERO
            for u, zfit in enumerate(parts_n):
                num = num + _assemble_z(zfit) * monomial_sy(0, u)
            den = monomial_sy(0, dd)
            for u, zfit in enumerate(parts_d):
                den = den + _assemble_z(zfit) * monomial_sy(0, u)
            if den.is_zero():
                sols = None
                break
            sols.append(num / den)
        if sols is not None:
            return sols
    return None


def _rows_satisfied(rows, rhs, w):
    # exact confirmation that w solves every equation
    for row, rv in zip(rows, rhs):
        acc = RATF_ZERO
        for e, wi in zip(row, w):
            if not wi.is_zero():
                acc = acc + e * wi
        if acc != rv:
            return False
    return True


def _numeric_nonsingular(rows):
    # plain elimination over Q(w) values
    n = len(rows)
    a = [list(r) for r in rows]
    for col in range(n):
        piv_row = None
        for r in range(col, n):
            if a[r][col]:
                piv_row = r
                break
        if piv_row is None:
            return False
        if piv_row != col:
            a[col], a[piv_row] = a[piv_row], a[col]
        inv = a[col][col].inv()
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                for cl in range(col + 1, n):
                    a[r][cl] = a[r][cl] - f * a[col][cl]
    return True


def _probe_nonzero(rows):
    """True certifies det != 0: a nonzero value at a pole-free integer point.

    False means every probe point was singular or hit a pole; it is evidence
    of a zero determinant, not a certificate.
    """
    for sv, yv in _PROBE_POINTS:
        try:
            vals = [[eval_ratfunc_at(e, sv, yv) for e in row] for row in rows]
        except PoleError:
            continue
        if _numeric_nonsingular(vals):
            return True
    return False


def _hankel_matrix(series, size, shift):
    # entry (row j, col l), 1-based: alpha^(size-l) of the coefficient of
    # x^(j+l+shift-3)
    return [
        [twist(series.coeff(j + l + shift - 3), size - l) for l in range(1, size + 1)]
        for j in range(1, size + 1)
    ]


def _require_low(series, who):
    if series.lowest is not None and series.lowest < 0:
        raise DomainError(
            "%s needs lowest exponent >= 0; factor out the x-power first" % who)


# ---------------------------------------------------------------------------
# The four operations


def _try_certificate(series, k, r):
    """Solve and rebuild at candidate (k, r); (n, m0) on success, else None.

    A verified recurrence of effective length n holding from index m0 makes
    column k'+1 of any (k', r') matrix with n <= k' and k'+r'-1 >= m0 a plain
    scalar combination of the n columns before it, so those determinants are
    exactly zero with no further arithmetic.
    """
    try:
        c = solve_recurrence(series, k + 1, r)
        frac = reconstruct_fraction(series, c, r)
    except (SingularMatrixError, InconsistencyError, PrecisionError):
        return None
    cc = list(c) + [RATF_ZERO] * (r - 1)
    while cc and cc[-1].is_zero():
        cc.pop()
    num = frac.num
    if num.is_zero():
        m0 = 0
    else:
        m0 = num.lowest + len(num.coeffs)
    return len(cc), m0


def hankel_test(series, kmax, shiftmax):
    """Scan determinants for recurrence lengths k <= kmax, shifts r <= shiftmax.

    The (k, r) matrix is (k+1)x(k+1); a zero determinant is evidence for a
    length-k twisted recurrence starting near index k+r-1.  Zeros are settled
    exactly, either by a recurrence certificate or by fraction-free
    elimination; nonzeros by a nonzero specialization.
    """
    _require_low(series, "hankel_test")
    need = 2 * kmax + shiftmax
    if series.order < need:
        raise PrecisionError(
            "hankel_test(kmax=%d, shiftmax=%d) needs order >= %d (have %s)"
            % (kmax, shiftmax, need, series.order))
    tested = []
    zeros = []
    certs = []
    for k in range(1, kmax + 1):
        for r in range(1, shiftmax + 1):
            tested.append((k, r))
            if any(n <= k and k + r - 1 >= m0 for n, m0 in certs):
                zeros.append((k, r))
                continue
            if _probe_nonzero(_hankel_matrix(series, k + 1, r)):
                continue
            cert = _try_certificate(series, k, r)
            if cert is not None:
                certs.append(cert)
                n, m0 = cert
                if n <= k and k + r - 1 >= m0:
                    zeros.append((k, r))
                    continue
            if det(_hankel_matrix(series, k + 1, r)).is_zero():
                zeros.append((k, r))
    return RecurrenceReport(tested, zeros, zeros[0] if zeros else None)


def solve_recurrence(series, k, shift=1):
    """Solve the k x k system for recurrence constants c_1 ... c_{k-1}.

    k is the matrix size (hankel_test candidate (kc, r) maps to k = kc + 1).
    The leading (k-1)x(k-1) submatrix must be nonsingular.
    """
    _require_low(series, "solve_recurrence")
    need = 2 * k + shift - 2
    if series.order < need:
        raise PrecisionError(
            "solve_recurrence(k=%d, shift=%d) needs order >= %d (have %s)"
            % (k, shift, need, series.order))
    m = _hankel_matrix(series, k, shift)
    sub = [row[:k - 1] for row in m[:k - 1]]
    rhs = [row[k - 1] for row in m[:k - 1]]
    w = None
    size = sum(len(e.num.terms) + len(e.den.terms) for row in sub for e in row)
    if k >= 2 and size > 60:
        try:
            w = _solve_linear_fast(sub, rhs)
        except _LikelySingular:
            if det(sub).is_zero():
                raise SingularMatrixError(
                    "matrix is not invertible, check your values of size and shift")
        if w is not None and not _rows_satisfied(sub, rhs, w):
            w = None
    if w is None:
        w = _solve_linear(sub, rhs)
    return list(reversed(w))


def reconstruct_fraction(series, c, shift=1):
    """Build Q = 1 - sum c_i x^i and P = (Q * series) below the recurrence length.

    With shift > 1 the recurrence list is padded by shift-1 zeros, so the
    cutoff is n = len(c) + shift - 1.  For a truncated input every known
    coefficient of Q*series at exponent >= n must vanish, else the claimed
    recurrence is inconsistent with the data.
    """
    n = len(c) + shift - 1
    cc = list(c) + [RATF_ZERO] * (shift - 1)
    qterms = {0: RATF_ONE}
    for i, ci in enumerate(cc, start=1):
        qterms[i] = -ci
    q = SkewPoly.from_terms(qterms)
    t = q.to_series(INF) * series
    if series.order == INF:
        return LeftFraction(q, SkewPoly.from_series(t))
    if series.order < n:
        raise PrecisionError(
            "reconstruct_fraction needs order >= %d (have %s)" % (n, series.order))
    for e in range(n, int(t.order)):
        if not t.coeff(e).is_zero():
            raise InconsistencyError(
                "recurrence fails at exponent %d: residual %s" % (e, t.coeff(e)))
    pterms = {}
    for e in range(min(0, t.lowest if t.lowest is not None else 0), n):
        ce = t.coeff(e)
        if ce:
            pterms[e] = ce
    return LeftFraction(q, SkewPoly.from_terms(pterms))


def verify_fraction(series, frac):
    """True iff frac expands to the given series up to its known order.

    Checked multiplicatively (den * series against num), which avoids the
    series inversion a full re-expansion would need.
    """
    if frac.den.is_zero():
        return False
    t = frac.den.to_series(INF) * series
    return t.equal_upto(frac.num.to_series(INF), t.order)


def recover_fraction(series, kmax, shiftmax):
    """Full pipeline: scan, solve, rebuild, verify.  None if nothing verifies.

    Handles a nonzero lowest exponent by pulling x^lowest out on the right
    and restoring it on the numerator afterwards.  The scan bounds are
    clamped to what the post-normalization precision supports.
    """
    if series.is_zero():
        return LeftFraction(SkewPoly.one(), SkewPoly.zero())
    v = series.lowest
    base = series.shift_right(-v) if v != 0 else series
    if base.order != INF:
        avail = int(base.order)
        kmax = min(kmax, (avail - 1) // 2)
        shiftmax = min(shiftmax, avail - 2 * kmax)
        if kmax < 1 or shiftmax < 1:
            raise PrecisionError(
                "recover_fraction: order %d too small for any scan" % avail)
    # candidate scan: probes rule out most sizes with a nonzero certificate;
    # whatever survives is settled exactly by the residual check inside
    # reconstruct_fraction, so the expensive exact zero determinants are
    # never needed here
    for k in range(1, kmax + 1):
        for r in range(1, shiftmax + 1):
            if _probe_nonzero(_hankel_matrix(base, k + 1, r)):
                continue
            try:
                c = solve_recurrence(base, k + 1, r)
                frac = reconstruct_fraction(base, c, r)
            except (SingularMatrixError, InconsistencyError, PrecisionError):
                continue
            if v != 0:
                num = SkewPoly(frac.num.lowest + v, frac.num.coeffs) \
                    if not frac.num.is_zero() else frac.num
                return LeftFraction(frac.den, num)
            return frac
    return None
