"""
Closed-form generating functions expanded to truncated series.

Every function returns an :class:`~wordpat.algebra.XSeries` whose coefficient
of x^n is ``sum_r f(n, r) y^r`` for the pattern family it names, over the
alphabet [k].  The notation in the docstrings writes ``u = x^(l-1) (1 - y)``.
"""
from dataclasses import dataclass

from .algebra import (DEFAULT_ORDER, ONE_MINUS_Y, XSeries, YPoly, all_words_series,
                      binomial, series_div, series_inverse)
from .pattern import complement, parse_pattern, reverse

FAMILIES = ("ones", "ones-rise", "sandwich", "step", "pattern123")


def _x(order):
    return XSeries.monomial(1, 1, order)


def _poly(coeffs, order):
    return XSeries(coeffs, order)


def _recip_one_plus(c, l, order):
    """1 / (1 + c*u) as a geometric series."""
    out = [YPoly()] * (order + 1)
    t = 0
    term = YPoly(1)
    while t * (l - 1) <= order:
        out[t * (l - 1)] = term
        term = term * ONE_MINUS_Y * (-c)
        t += 1
    return XSeries(out, order)


def gf_ones(l, k, order=DEFAULT_ORDER):
    """Constant pattern 11...1 of length l."""
    if l < 2:
        raise ValueError("constant patterns need l >= 2")
    if k < 1:
        raise ValueError("alphabet size must be >= 1")
    N = order
    x = _x(N)
    kx = [k ** j for j in range(N + 1)]
    num = [YPoly()] * (N + 1)
    num[0] = YPoly(1)

    def add(i, c):
        if i <= N:
            num[i] = num[i] + c

    for j in range(l - 1):
        add(j + 1, ONE_MINUS_Y * kx[j] if j <= N else 0)
    for d in range(2, l):
        for j in range(l - d):
            if d + j <= N:
                add(d + j, ONE_MINUS_Y * (-(k - 1) * kx[j]))
    # (1 - x^(l-2)) / (1 - x) = 1 + x + ... + x^(l-3)
    tail = XSeries([1] * (l - 2), N)
    den = (XSeries.one(N) - x * YPoly((k - 1, 1))
           - tail * x * x * (ONE_MINUS_Y * (k - 1)))
    return series_div(XSeries(num, N), den)


def gf_ones_rise(l, k, order=DEFAULT_ORDER):
    """
    Pattern 11...12 of length l.

    The formula carries x^(2-l); both sides are multiplied by x^(l-2), and the
    factor (1 - y) common to numerator and denominator cancels exactly.
    """
    if l < 2:
        raise ValueError("need l >= 2")
    if k < 0:
        raise ValueError("alphabet size must be >= 0")
    M = order + l - 2
    low = XSeries.monomial(l - 2, ONE_MINUS_Y, M)
    base = XSeries.one(M) - XSeries.monomial(l - 1, ONE_MINUS_Y, M)
    den = base ** k - XSeries.one(M) + low
    out = series_div(low, den)
    return out.truncate(order)


def _sandwich_den(m, l, k, order, lo, hi, sign=1, lead=None):
    x = _x(order)
    total = XSeries([], order)
    for j in range(lo, hi + 1):
        total = total + _recip_one_plus(sign * binomial(j, m - 1), l, order)
    lead = (m - 1) if lead is None else lead
    return XSeries.one(order) - x * lead - x * total


def gf_sandwich(m, l, k, order=DEFAULT_ORDER):
    """
    Patterns m t m of length l with every letter of t below m:
    ``1 / (1 - (m-1)x - x sum_{j=m-1}^{k-1} 1/(1 + C(j, m-1) u))``.
    """
    if l < 2 or m < 2:
        raise ValueError("need l >= 2 and m >= 2")
    if k < m:
        return all_words_series(k, order)
    return series_inverse(_sandwich_den(m, l, k, order, m - 1, k - 1))


TWOS_VARIANTS = ("canonical", "printed-th212", "printed-212-sign", "printed-example")


def gf_twos_variant(variant, l, k, order=DEFAULT_ORDER):
    """
    Candidate formulas for 211...12 (length l).

    ``canonical`` is ``gf_sandwich(2, l, k)``.  The other three are misprints
    kept only to show they disagree with enumeration:

    - ``printed-th212``: sum over j = 0..k after the leading ``1 - x``
    - ``printed-212-sign``: same range, with ``1 - j u`` in place of ``1 + j u``
    - ``printed-example``: sum over j = 0..k-1 after the leading ``1 - x``
    """
    if variant == "canonical":
        return gf_sandwich(2, l, k, order)
    if variant == "printed-th212":
        den = _sandwich_den(2, l, k, order, 0, k)
    elif variant == "printed-212-sign":
        den = _sandwich_den(2, l, k, order, 0, k, sign=-1)
    elif variant == "printed-example":
        den = _sandwich_den(2, l, k, order, 0, k - 1)
    else:
        raise ValueError(f"unknown variant {variant!r}; choose from {TWOS_VARIANTS}")
    return series_inverse(den)


def gf_step(m, l, k, order=DEFAULT_ORDER):
    """
    Patterns m t (m+1) of length l with every letter of t below m:
    ``1 / (1 - (m-1)x - x sum_{i=m-2}^{k-2} prod_{j=m-2}^{i} (1 - C(j, m-1) u))``.
    """
    if l < 2:
        raise ValueError("need l >= 2")
    if m < 2:
        # m = 1 is the pattern 12; the product formula does not hold there
        raise ValueError("need m >= 2 (use gf_ones_rise for 12)")
    if k < m + 1:
        return all_words_series(k, order)
    x = _x(order)
    total = XSeries([], order)
    prod = XSeries.one(order)
    for i in range(m - 2, k - 1):
        c = binomial(i, m - 1)
        prod = prod * (XSeries.one(order) - XSeries.monomial(l - 1, ONE_MINUS_Y * c, order))
        total = total + prod
    den = XSeries.one(order) - x * (m - 1) - x * total
    return series_inverse(den)


def u_poly(n):
    """U_0 = U_1 = 1, U_2n = (1-y)U_{2n-1} - U_{2n-2}, U_{2n+1} = U_{2n} - U_{2n-1}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    u = [YPoly(1), YPoly(1)]
    for i in range(2, n + 1):
        if i % 2 == 0:
            u.append(ONE_MINUS_Y * u[i - 1] - u[i - 2])
        else:
            u.append(u[i - 1] - u[i - 2])
    return u[n]


def u_generating_series(order):
    """(1 + z + z^2) / (1 + (1+y) z^2 + z^4), with z in the role of x."""
    num = XSeries([1, 1, 1], order)
    den = XSeries([1, 0, YPoly((1, 1)), 0, 1], order)
    return series_div(num, den)


def gf_123(k, order=DEFAULT_ORDER):
    if k < 2:
        raise ValueError("need k >= 2")
    den = [YPoly()] * (order + 1)
    den[0] = YPoly(1)
    if order >= 1:
        den[1] = YPoly(-k)
    for j in range(3, min(k, order) + 1):
        term = (ONE_MINUS_Y ** (j // 2)) * u_poly(j - 3) * binomial(k, j)
        den[j] = term * (-1 if j % 2 == 0 else 1)
    return series_inverse(XSeries(den, order))


def gf_112_fixed_r(r, order=DEFAULT_ORDER):
    """Words of [2]^n with exactly r occurrences of 112 (a series in x only)."""
    if r < 0:
        raise ValueError("r must be >= 0")
    base = XSeries([1, -1], order) * XSeries([1, -1, -1], order)
    return XSeries.monomial(3 * r, 1, order) * series_inverse(base) ** (r + 1)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    l: int
    m: int = None
    via: tuple = ()       # symmetry operations applied to reach the base form

    def series(self, k, order=DEFAULT_ORDER):
        if self.family == "ones":
            return gf_ones(self.l, k, order)
        if self.family == "ones-rise":
            return gf_ones_rise(self.l, k, order)
        if self.family == "sandwich":
            return gf_sandwich(self.m, self.l, k, order)
        if self.family == "step":
            return gf_step(self.m, self.l, k, order)
        if self.family == "pattern123":
            if k < 2:
                return all_words_series(k, order)
            return gf_123(k, order)
        raise ValueError(f"unknown family {self.family!r}")


def _base_family(q):
    t = q.letters
    l, m = len(t), q.m
    if l < 2:
        return None
    if m == 1:
        return "ones", None
    if t == (1,) * (l - 1) + (2,):
        return "ones-rise", None
    mid = t[1:-1]
    if m >= 2 and t[0] == t[-1] == m and all(a < m for a in mid):
        return "sandwich", m
    a = t[0]
    if a >= 2 and t[-1] == a + 1 == m and all(b < a for b in mid):
        return "step", a
    if t == (1, 2, 3):
        return "pattern123", None
    return None


def identify_family(p):
    """FamilySpec for ``p`` up to reversal and complement, or None."""
    p = parse_pattern(p)
    if not p.is_subword:
        return None
    images = [((), p), (("reverse",), reverse(p)), (("complement",), complement(p)),
              (("complement", "reverse"), reverse(complement(p)))]
    for via, q in images:
        hit = _base_family(q)
        if hit:
            return FamilySpec(hit[0], len(p), hit[1], via)
    return None


def dispatch(p, k, order=DEFAULT_ORDER):
    """Closed-form series for ``p`` over [k], or None when no family covers it."""
    spec = identify_family(p)
    if spec is None:
        return None
    return spec.series(k, order)
