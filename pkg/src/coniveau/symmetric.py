"""Universal polynomials of λ-ring theory.

``λⁿ(x·y)`` and ``λⁿ(λᵐ(x))`` are integer polynomials in the symbols
``λ¹(x), λ²(x), …`` (and ``λʲ(y)``).  They are produced by working with power
sums, where both operations are trivial (``p_r[XY] = p_r[X]·p_r[Y]`` and
``p_r[e_m[X]] = e_m[X]`` with every ``p_s`` replaced by ``p_{rs}``), and then
rewriting power sums in elementary symmetric functions by Newton's identity.
Intermediate coefficients are rationals; the final result is checked to be
integral.

A rank bound ``r`` on an argument sets ``λᵏ = 0`` for ``k > r`` before any
expansion, which keeps the polynomials small for free generators of low rank.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import InputError, InternalError
from .polynomial import Polynomial

__all__ = [
    "MAX_DEGREE",
    "UniversalPolynomial",
    "partitions",
    "universal_product_poly",
    "universal_compose_poly",
]

# Largest total symbol degree (n for products, n*m for compositions).
MAX_DEGREE = 24


def partitions(n, max_part=None):
    """Partitions of ``n`` as non-increasing tuples, in reverse lex order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def _z(mu):
    counts = defaultdict(int)
    for part in mu:
        counts[part] += 1
    z = 1
    for part, m in counts.items():
        z *= part**m * factorial(m)
    return z


def _elementary_in_powers(n):
    """``e_n = Σ_{μ⊢n} ε_μ p_μ / z_μ`` as ``{μ: Fraction}``."""
    return {mu: Fraction((-1) ** (n - len(mu)), _z(mu)) for mu in partitions(n)}


@lru_cache(maxsize=None)
def _power_sum(k, names, rank):
    """``p_k`` as a polynomial in ``names[i] = e_{i+1}``, with ``e_j = 0`` for ``j > rank``."""
    acc = Polynomial(names)
    for i in range(1, min(k - 1, rank) + 1):
        acc = acc + Polynomial.gen(names, names[i - 1]) * _power_sum(k - i, names, rank) * (-1) ** (i - 1)
    if k <= rank:
        acc = acc + Polynomial.gen(names, names[k - 1]) * ((-1) ** (k - 1) * k)
    return acc


@lru_cache(maxsize=None)
def _power_product(mu, names, rank):
    if not mu:
        return Polynomial.constant(names, 1)
    return _power_product(mu[1:], names, rank) * _power_sum(mu[0], names, rank)


def _integral(acc, names):
    terms = {}
    for m, c in acc.items():
        if c.denominator != 1:
            raise InternalError(f"non-integral coefficient {c} in a universal polynomial")
        if c:
            terms[m] = int(c)
    return Polynomial(names, terms)


def _symbols(prefix, count):
    return tuple(f"{prefix}{i}" for i in range(1, count + 1))


def _rank(rank, n):
    if rank is None:
        return n
    if rank < 0:
        raise InputError(f"rank bound must be non-negative, got {rank}")
    return min(rank, n)


@dataclass(frozen=True)
class UniversalPolynomial:
    """``kind`` is ``"product"`` or ``"compose"``.

    For products the variables are ``x1..xn, y1..yn`` standing for
    ``λ^i(x), λ^j(y)``; for compositions they are ``x1..x_{nm}``.
    """

    kind: str
    n: int
    m: int | None
    polynomial: Polynomial

    @property
    def variables(self):
        return self.polynomial.variables

    def evaluate(self, x_lambdas, y_lambdas=None, one=None):
        """Substitute ``x_lambdas[i-1]`` for ``λ^i(x)`` (missing entries are zero)."""
        if one is None:
            one = (x_lambdas or y_lambdas)[0].ring.one
        zero = one * 0
        values = []
        for name in self.variables:
            src = x_lambdas if name[0] == "x" else y_lambdas
            i = int(name[1:])
            values.append(src[i - 1] if src is not None and i <= len(src) else zero)
        return self.polynomial.evaluate(values, one)

    def __str__(self):
        return str(self.polynomial)


@lru_cache(maxsize=None)
def universal_product_poly(n, rank_x=None, rank_y=None):
    """``λⁿ(x·y)`` in terms of ``λ^i(x)`` and ``λ^j(y)``."""
    if n < 0 or n > MAX_DEGREE:
        raise InputError(f"product degree must lie in [0, {MAX_DEGREE}], got {n}")
    xs, ys = _symbols("x", n), _symbols("y", n)
    names = xs + ys
    rx, ry = _rank(rank_x, n), _rank(rank_y, n)
    acc = defaultdict(Fraction)
    for mu, coeff in _elementary_in_powers(n).items():
        px = _power_product(mu, xs, rx).rename(names)
        py = _power_product(mu, ys, ry).rename(names)
        for m, c in (px * py).terms.items():
            acc[m] += coeff * c
    return UniversalPolynomial("product", n, None, _integral(acc, names))


def _mul_power_dicts(a, b):
    out = defaultdict(Fraction)
    for mu, c in a.items():
        for nu, d in b.items():
            out[tuple(sorted(mu + nu, reverse=True))] += c * d
    return out


@lru_cache(maxsize=None)
def universal_compose_poly(n, m, rank=None):
    """``λⁿ(λᵐ(x))`` in terms of ``λ^i(x)`` for ``i ≤ n·m``."""
    if n < 0 or m < 0 or n * m > MAX_DEGREE:
        raise InputError(f"composition degrees must satisfy n*m <= {MAX_DEGREE}, got ({n}, {m})")
    total = n * m
    names = _symbols("x", total)
    r = _rank(rank, total)
    inner = _elementary_in_powers(m)
    plethysm = defaultdict(Fraction)
    for mu, coeff in _elementary_in_powers(n).items():
        prod = {(): coeff}
        for part in mu:
            scaled = {tuple(part * s for s in nu): c for nu, c in inner.items()}
            prod = _mul_power_dicts(prod, scaled)
        for lam, c in prod.items():
            plethysm[lam] += c
    acc = defaultdict(Fraction)
    for lam, c in plethysm.items():
        if c:
            for mono, d in _power_product(lam, names, r).terms.items():
                acc[mono] += c * d
    return UniversalPolynomial("compose", n, m, _integral(acc, names))
