"""Power series in one formal variable ``t`` with ring-element coefficients,
truncated at a fixed order."""

from __future__ import annotations

from math import comb

from .errors import DivisibilityError, InputError

__all__ = [
    "TruncatedSeries",
    "series_mul",
    "series_inverse",
    "series_derivative",
    "series_power",
    "series_substitute",
    "series_substitute_gamma",
    "line_series_power",
]


def _binom(c, k):
    """Generalized binomial coefficient, valid for negative ``c``."""
    if c >= 0:
        return comb(c, k)
    return (-1) ** k * comb(k - c - 1, k)


class TruncatedSeries:
    """``coeffs[k]`` is the coefficient of ``t**k`` for ``0 <= k <= order``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise InputError("a series needs at least the constant coefficient")
        self.coeffs = coeffs

    @classmethod
    def from_list(cls, ring, values, order):
        """Pad or cut ``values`` (ints or elements of ``ring``) to ``order``."""
        values = [ring(v) for v in list(values)[: order + 1]]
        values += [ring.zero] * (order + 1 - len(values))
        return cls(values)

    @classmethod
    def one(cls, ring, order):
        return cls.from_list(ring, [1], order)

    @property
    def order(self):
        return len(self.coeffs) - 1

    @property
    def ring(self):
        return self.coeffs[0].ring

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order):
        if order > self.order:
            raise InputError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def __add__(self, other):
        n = min(self.order, other.order)
        return TruncatedSeries(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs))

    def __sub__(self, other):
        n = min(self.order, other.order)
        return TruncatedSeries(a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs))

    def __neg__(self):
        return TruncatedSeries(-a for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries(a * other for a in self.coeffs)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        parts = [f"({c})*t^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"TruncatedSeries({' + '.join(parts) or '0'}; order {self.order})"


def series_mul(a, b):
    """Cauchy product, truncated at the smaller of the two orders."""
    n = min(a.order, b.order)
    zero = a.ring.zero
    out = []
    for k in range(n + 1):
        acc = zero
        for i in range(k + 1):
            x, y = a.coeffs[i], b.coeffs[k - i]
            if x.terms and y.terms:
                acc = acc + x * y
        out.append(acc)
    return TruncatedSeries(out)


def series_inverse(a):
    a0 = a.coeffs[0]
    ring = a.ring
    if a0 == ring.one:
        sign = 1
    elif a0 == -ring.one:
        sign = -1
    else:
        raise DivisibilityError(f"constant term {a0} is not invertible")
    out = [ring.from_int(sign)]
    for k in range(1, a.order + 1):
        acc = ring.zero
        for i in range(1, k + 1):
            x = a.coeffs[i]
            if x.terms and out[k - i].terms:
                acc = acc + x * out[k - i]
        out.append(acc * -sign)
    return TruncatedSeries(out)


def series_derivative(a):
    """d/dt; the result has order one less than ``a`` (at least 0)."""
    if a.order == 0:
        return TruncatedSeries([a.ring.zero])
    return TruncatedSeries(a.coeffs[k] * k for k in range(1, a.order + 1))


def series_power(a, k):
    """``a**k`` for any integer ``k``; negative powers need an invertible constant term."""
    if k < 0:
        return series_power(series_inverse(a), -k)
    result = TruncatedSeries.one(a.ring, a.order)
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def line_series_power(line, c, order):
    """``(1 + line*t)**c`` by the binomial series."""
    ring = line.ring
    out = [ring.one]
    p = ring.one
    for k in range(1, order + 1):
        b = _binom(c, k)
        p = p * line
        out.append(p * b if b else ring.zero)
    return TruncatedSeries(out)


def series_substitute(a, inner):
    """``a(inner(t))``; ``inner`` must have zero constant term."""
    if inner.coeffs[0]:
        raise InputError("substitution needs an inner series with zero constant term")
    n = min(a.order, inner.order)
    inner = inner.truncate(n)
    result = TruncatedSeries.from_list(a.ring, [a.coeffs[n]], n)
    for k in range(n - 1, -1, -1):
        result = series_mul(result, inner)
        result = TruncatedSeries((result.coeffs[0] + a.coeffs[k],) + result.coeffs[1:])
    return result


def series_substitute_gamma(a):
    """Replace ``t`` by ``t/(1-t) = t + t^2 + ...``.

    Uses ``(t/(1-t))**k = sum_{j>=k} C(j-1, k-1) t**j`` directly.
    """
    ring = a.ring
    out = [a.coeffs[0]]
    for j in range(1, a.order + 1):
        acc = ring.zero
        for k in range(1, j + 1):
            if a.coeffs[k].terms:
                acc = acc + a.coeffs[k] * comb(j - 1, k - 1)
        out.append(acc)
    return TruncatedSeries(out)
