"""
Exact arithmetic for polynomials in ``y`` and truncated power series in ``x``.

A :class:`YPoly` is a dense tuple of Python integers (index = power of y).
An :class:`XSeries` holds the coefficients of x^0 .. x^N, each a YPoly, and
every operation truncates at N.  Nothing here ever rounds.

    >>> s = XSeries.from_coeffs([1, -1], order=5)   # 1 - x
    >>> series_inverse(s).at_y(1)
    [1, 1, 1, 1, 1, 1]
"""
from math import comb

DEFAULT_ORDER = 16


class YPoly:
    """Polynomial in y with integer coefficients; immutable and hashable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("YPoly is immutable")

    @classmethod
    def coerce(cls, v):
        return v if isinstance(v, YPoly) else cls(v)

    @property
    def degree(self):
        """Degree in y; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (1,)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = YPoly(other)
        if not isinstance(other, YPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"YPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("y" if i == 1 else f"y^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if mono else ''}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        s = "".join(f"{sign}{body}" for sign, body in terms)
        return s[1:] if s[0] == "+" else s

    def __add__(self, other):
        other = YPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return YPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return YPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-YPoly.coerce(other))

    def __rsub__(self, other):
        return YPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return YPoly(c * other for c in self.coeffs)
        return ypoly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = YPoly(1)
        for _ in range(e):
            out = out * self
        return out

    def shift(self, s):
        """Multiply by y^s."""
        if not self.coeffs:
            return self
        return YPoly((0,) * s + self.coeffs)

    def __call__(self, y):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * y + c
        return acc

    def exact_div(self, d):
        """Exact quotient self / d; raises ValueError on a nonzero remainder."""
        d = YPoly.coerce(d)
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dn = d.degree
        lead = d.coeffs[-1]
        q = [0] * max(0, len(rem) - dn)
        for i in range(len(rem) - dn - 1, -1, -1):
            c = rem[i + dn]
            if c % lead:
                raise ValueError(f"{self} is not divisible by {d}")
            c //= lead
            q[i] = c
            if c:
                for j, dc in enumerate(d.coeffs):
                    rem[i + j] -= c * dc
        if any(rem):
            raise ValueError(f"{self} is not divisible by {d}")
        return YPoly(q)


ONE_MINUS_Y = YPoly((1, -1))


def ypoly_mul(a, b):
    a, b = YPoly.coerce(a), YPoly.coerce(b)
    if a.is_zero() or b.is_zero():
        return YPoly()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca:
            for j, cb in enumerate(b.coeffs):
                out[i + j] += ca * cb
    return YPoly(out)


class XSeries:
    """
    Power series in x truncated after x^order, with YPoly coefficients.

    ``XSeries(coeffs, order)`` pads or truncates ``coeffs`` to exactly
    ``order + 1`` entries.  Integers are accepted wherever a YPoly is.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        c = [YPoly.coerce(v) for v in list(coeffs)[: order + 1]]
        c.extend(YPoly() for _ in range(order + 1 - len(c)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("XSeries is immutable")

    @classmethod
    def from_coeffs(cls, coeffs, order=DEFAULT_ORDER):
        return cls(coeffs, order)

    @classmethod
    def one(cls, order=DEFAULT_ORDER):
        return cls([1], order)

    @classmethod
    def monomial(cls, n, c=1, order=DEFAULT_ORDER):
        """c * x^n as a series (zero when n > order)."""
        return cls([0] * n + [c], order)

    @classmethod
    def geometric(cls, ratio, order=DEFAULT_ORDER):
        """1 / (1 - ratio*x) for a YPoly ``ratio``."""
        ratio = YPoly.coerce(ratio)
        out, p = [], YPoly(1)
        for _ in range(order + 1):
            out.append(p)
            p = p * ratio
        return cls(out, order)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, XSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"XSeries({[list(c) for c in self.coeffs]}, order={self.order})"

    def _check(self, other):
        if not isinstance(other, XSeries):
            other = XSeries([other], self.order)
        if other.order != self.order:
            raise ValueError(
                f"mismatched truncation orders {self.order} and {other.order}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return XSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return XSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, YPoly)):
            return XSeries([a * other for a in self.coeffs], self.order)
        return series_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = XSeries.one(self.order)
        for _ in range(e):
            out = out * self
        return out

    def __truediv__(self, other):
        if not isinstance(other, XSeries):
            other = XSeries([other], self.order)
        return series_div(self, other)

    def valuation(self):
        """Index of the first nonzero coefficient, or None for the zero series."""
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return None

    def shift(self, s):
        """Multiply by x^s (s may be negative if the low terms are zero)."""
        if s >= 0:
            return XSeries([YPoly()] * s + list(self.coeffs), self.order)
        if any(not c.is_zero() for c in self.coeffs[:-s]):
            raise ValueError("shift would create negative powers of x")
        return XSeries(self.coeffs[-s:], self.order)

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return XSeries(self.coeffs, order)

    def subs_y(self, y):
        """Evaluate every coefficient at the integer ``y``."""
        return [c(y) for c in self.coeffs]

    at_y = subs_y

    def coefficient_lists(self):
        """Nested ``[n][r]`` integer lists."""
        return [list(c.coeffs) or [0] for c in self.coeffs]

    def y_slice(self, r):
        """Coefficient of y^r at every order of x."""
        return [c[r] for c in self.coeffs]


def series_mul(a, b):
    """Cauchy product of two series with equal truncation orders."""
    b = a._check(b)
    N = a.order
    out = [YPoly()] * (N + 1)
    for i, ca in enumerate(a.coeffs):
        if ca.is_zero():
            continue
        for j in range(N + 1 - i):
            cb = b.coeffs[j]
            if not cb.is_zero():
                out[i + j] = out[i + j] + ypoly_mul(ca, cb)
    return XSeries(out, N)


def series_inverse(s):
    """1/s for a series whose constant term is the polynomial 1."""
    if not s.coeffs[0].is_one():
        raise ValueError(f"constant term must be 1, got {s.coeffs[0]}")
    N = s.order
    inv = [YPoly(1)]
    for n in range(1, N + 1):
        acc = YPoly()
        for i in range(1, n + 1):
            if not s.coeffs[i].is_zero():
                acc = acc + ypoly_mul(s.coeffs[i], inv[n - i])
        inv.append(-acc)
    return XSeries(inv, N)


def series_div(num, den):
    """
    Exact quotient num/den.

    The largest common power x^v is cancelled first, so the result is only
    known to order ``N - v`` and is returned at that order.  If the remaining
    constant term of the denominator is not 1, every coefficient of both
    series is divided by it exactly (this is how a common factor such as
    ``1 - y`` disappears); a nonzero remainder raises ValueError.
    """
    num = den._check(num)
    vd = den.valuation()
    if vd is None:
        raise ZeroDivisionError("denominator is identically zero")
    vn = num.valuation()
    v = vd if vn is None else min(vd, vn)
    if v != vd:
        raise ValueError("quotient has negative powers of x")
    order = num.order - v
    num = XSeries(num.coeffs[v:], order)
    den = XSeries(den.coeffs[v:], order)
    c0 = den.coeffs[0]
    if not c0.is_one():
        if c0 == YPoly(-1):
            num, den = -num, -den
        else:
            try:
                den = XSeries([c.exact_div(c0) for c in den.coeffs], order)
                num = XSeries([c.exact_div(c0) for c in num.coeffs], order)
            except ValueError as exc:
                raise ValueError(
                    f"denominator constant term {c0} is not a unit and does not "
                    "cancel exactly") from exc
    return series_mul(num, series_inverse(den))


def binomial(n, r):
    """C(n, r), zero when r > n or either argument is negative."""
    if n < 0 or r < 0 or r > n:
        return 0
    return comb(n, r)


def all_words_series(k, order=DEFAULT_ORDER):
    """1/(1 - kx): every word counted with y^0."""
    return XSeries([k ** n for n in range(order + 1)], order)
