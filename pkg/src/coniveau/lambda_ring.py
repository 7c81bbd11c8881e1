"""Presented augmented λ-rings.

A model is a :class:`QuotientRing` whose variables are attached to
generators of three kinds:

* :class:`Split` -- a line class ``L`` with ``λ_t(L) = 1 + L·t`` and ``ε(L) = 1``;
* :class:`Free` -- a generator ``g`` of rank bound ``r`` whose ``λ^i(g)``
  (``1 ≤ i ≤ r``) are independent variables named ``g, lam2_g, …``;
* :class:`FreeGamma` -- an augmentation-zero generator whose γ-powers
  ``γ^p(g)`` are the variables ``g, gam2_g, …`` of weight ``p``.  Rings built
  from these may be truncated by total weight, which is the γ-degree.

``λ_t`` of an element is assembled structurally: sums become products of
series, integer multiples become series powers, and products of variables
are folded with the universal product polynomials.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from math import comb

from .errors import InputError, TruncationError
from .polynomial import QuotientRing, RingElement, parse_polynomial
from .series import TruncatedSeries, line_series_power, series_mul, series_power
from .symmetric import universal_compose_poly, universal_product_poly

__all__ = [
    "Split",
    "Free",
    "FreeGamma",
    "LambdaRingModel",
    "build_model",
    "lambda_series",
    "lambda_op",
    "augmentation",
    "lambda_from_gamma",
    "gamma_from_lambda",
]

DEFAULT_ORDER = 6


@dataclass(frozen=True)
class Split:
    """Line class: ``λ_t = 1 + g·t``."""


@dataclass(frozen=True)
class Free:
    """Free generator with ``λ^k = 0`` for ``k > rank`` and ``ε = augmentation``."""

    rank: int
    augmentation: int = 0


@dataclass(frozen=True)
class FreeGamma:
    """Augmentation-zero generator presented by its γ-powers, ``γ^k = 0`` for ``k > bound``."""

    bound: int | None = None


def lambda_from_gamma(gammas, m):
    """``λ^m`` of an augmentation-zero element from its γ-powers ``gammas[p-1] = γ^p``."""
    acc = None
    for p in range(1, min(m, len(gammas)) + 1):
        term = gammas[p - 1] * ((-1) ** (m - p) * comb(m - 1, p - 1))
        acc = term if acc is None else acc + term
    return acc


def gamma_from_lambda(lambdas, k):
    """``γ^k`` of an augmentation-zero element from ``lambdas[j-1] = λ^j``."""
    acc = None
    for j in range(1, min(k, len(lambdas)) + 1):
        term = lambdas[j - 1] * comb(k - 1, j - 1)
        acc = term if acc is None else acc + term
    return acc


def _variable_names(name, kind, truncation):
    if isinstance(kind, Split):
        return [(name, 1, 1)]
    if isinstance(kind, Free):
        if kind.rank < 0:
            raise InputError(f"rank bound of {name!r} must be non-negative")
        return [(name if i == 1 else f"lam{i}_{name}", i, i) for i in range(1, kind.rank + 1)]
    if isinstance(kind, FreeGamma):
        top = kind.bound
        if truncation is not None:
            top = truncation if top is None else min(top, truncation)
        if top is None:
            raise InputError(f"γ-generator {name!r} needs a bound or a ring truncation")
        return [(name if p == 1 else f"gam{p}_{name}", p, p) for p in range(1, top + 1)]
    raise InputError(f"unknown generator kind {kind!r}")


@dataclass
class LambdaRingModel:
    """Quotient ring plus λ-data on its variables and the augmentation."""

    ring: QuotientRing
    generators: tuple
    var_info: dict
    name: str = "model"
    order: int = DEFAULT_ORDER
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def with_order(self, order):
        if order < 1:
            raise InputError(f"series order must be at least 1, got {order}")
        return dataclasses.replace(self, order=order)

    def __call__(self, value):
        return self.ring(value)

    def parse(self, text):
        return self.ring.parse(text)

    @property
    def one(self):
        return self.ring.one

    @property
    def zero(self):
        return self.ring.zero

    def gen(self, name):
        return self.ring.gen(name)

    def generator_kind(self, name):
        for gname, kind in self.generators:
            if gname == name:
                return kind
        raise InputError(f"unknown generator {name!r}")

    def variable_augmentation(self, var):
        gname, kind, index = self.var_info[var]
        if isinstance(kind, Split):
            return 1
        if isinstance(kind, Free):
            return comb(kind.augmentation, index) if kind.augmentation >= 0 else _signed_comb(kind.augmentation, index)
        return 0

    def generator_lambdas(self, gname, count):
        """``[λ^1(g), …, λ^count(g)]`` for a generator ``g`` of this model."""
        kind = self.generator_kind(gname)
        ring = self.ring
        if isinstance(kind, Split):
            return [ring.gen(gname) if k == 1 else ring.zero for k in range(1, count + 1)]
        if isinstance(kind, Free):
            names = [v for v, info in self.var_info.items() if info[0] == gname]
            names.sort(key=lambda v: self.var_info[v][2])
            return [ring.gen(names[k - 1]) if k <= len(names) else ring.zero for k in range(1, count + 1)]
        return [lambda_from_gamma(self._gamma_vars(gname), k) for k in range(1, count + 1)]

    def _gamma_vars(self, gname):
        names = [v for v, info in self.var_info.items() if info[0] == gname]
        names.sort(key=lambda v: self.var_info[v][2])
        return [self.ring.gen(v) for v in names]

    def __repr__(self):
        return f"LambdaRingModel({self.name}: {self.ring!r}, order {self.order})"


def _signed_comb(a, k):
    # binomial(a, k) for negative a
    return (-1) ** k * comb(k - a - 1, k)


def build_model(generators, relations=(), truncation=None, order=DEFAULT_ORDER, name="model"):
    """Assemble a model from ``[(name, kind), …]`` and relations ``r = 0``.

    Relations may be polynomial strings or :class:`Polynomial` objects and are
    oriented by their leading monomial, which must have coefficient ±1.
    """
    generators = tuple((g, kind) for g, kind in generators)
    if truncation is not None and not all(isinstance(k, FreeGamma) for _, k in generators):
        raise InputError("weight truncation is only available when every generator is a γ-generator")
    variables, weights, info = [], [], {}
    for gname, kind in generators:
        for var, weight, index in _variable_names(gname, kind, truncation):
            if var in info:
                raise InputError(f"duplicate variable {var!r}")
            variables.append(var)
            weights.append(weight)
            info[var] = (gname, kind, index)
    rels = []
    for r in relations:
        rels.append(parse_polynomial(r, variables) if isinstance(r, str) else r)
    ring = QuotientRing.from_relations(variables, rels, weights=weights, truncation=truncation)
    model = LambdaRingModel(ring, generators, info, name=name, order=order)
    for lead, replacement in ring.rules:
        before = augmentation(RingElement(ring, {lead: 1}), model)
        after = augmentation(RingElement(ring, dict(replacement)), model)
        if before != after:
            raise InputError(
                f"relation for {ring.format({lead: 1})} is not compatible with the augmentation"
            )
    return model


def augmentation(x, model):
    """Ring morphism ``ε`` to the integers."""
    eps = [model.variable_augmentation(v) for v in model.ring.variables]
    total = 0
    for m, c in x.terms.items():
        term = c
        for e, val in zip(m, eps):
            if e:
                term *= val**e
        total += term
    return total


def _variable_lambdas(model, var, count):
    """``[λ^1(v), …, λ^count(v)]`` and a rank bound for one variable ``v``."""
    key = ("var", var, count)
    cached = model._cache.get(key)
    if cached is not None:
        return cached
    ring = model.ring
    gname, kind, index = model.var_info[var]
    if isinstance(kind, Split):
        result = ([ring.gen(var)] + [ring.zero] * (count - 1), 1)
    elif isinstance(kind, Free):
        base = model.generator_lambdas(gname, kind.rank)
        rank = comb(kind.rank, index)
        if index == 1:
            lams = base[:count] + [ring.zero] * (count - len(base[:count]))
        else:
            lams = [
                universal_compose_poly(k, index, kind.rank).evaluate(base, one=ring.one) if k <= rank else ring.zero
                for k in range(1, count + 1)
            ]
        result = (lams, rank)
    else:
        base = model.generator_lambdas(gname, index * count)
        if index == 1:
            lams = base[:count]
        else:
            # γ^p(g) = Σ_j C(p-1, j-1) λ^j(g); take λ_t of that sum
            series = TruncatedSeries.one(ring, count)
            for j in range(1, index + 1):
                comp = [universal_compose_poly(k, j).evaluate(base, one=ring.one) for k in range(1, count + 1)]
                factor = TruncatedSeries([ring.one] + comp)
                series = series_mul(series, series_power(factor, comb(index - 1, j - 1)))
            lams = list(series.coeffs[1:])
        result = (lams, None)
    model._cache[key] = result
    return result


def _product_lambdas(a, b, count, ring):
    (la, ra), (lb, rb) = a, b
    rank = None if ra is None or rb is None else ra * rb
    out = []
    for k in range(1, count + 1):
        if rank is not None and k > rank:
            out.append(ring.zero)
            continue
        poly = universal_product_poly(k, ra, rb)
        out.append(poly.evaluate(la[:k], lb[:k], one=ring.one))
    return out, rank


def _monomial_lambdas(model, m, count):
    key = ("mono", m, count)
    cached = model._cache.get(key)
    if cached is not None:
        return cached
    ring = model.ring
    line = {}
    free = []
    for var, e in zip(ring.variables, m):
        if not e:
            continue
        if isinstance(model.var_info[var][1], Split):
            line[var] = e
        else:
            free.extend([var] * e)
    line_elem = ring.element({tuple(line.get(v, 0) for v in ring.variables): 1})
    acc = None
    for var in free:
        lv = _variable_lambdas(model, var, count)
        acc = lv if acc is None else _product_lambdas(acc, lv, count, ring)
    lams, _ = acc
    if line:
        power = ring.one
        scaled = []
        for k in range(count):
            power = power * line_elem
            scaled.append(power * lams[k])
        lams = scaled
    model._cache[key] = lams
    return lams


def _is_line_monomial(model, m):
    return all(not e or isinstance(model.var_info[v][1], Split) for v, e in zip(model.ring.variables, m))


def lambda_series(x, model, order=None):
    """``λ_t(x)`` truncated at ``order`` (default: the model's order)."""
    order = model.order if order is None else order
    if order < 1:
        raise InputError(f"series order must be at least 1, got {order}")
    ring = model.ring
    if x.ring is not ring:
        raise InputError("element does not belong to the model's ring")
    result = TruncatedSeries.one(ring, order)
    for m, c in sorted(x.terms.items()):
        if _is_line_monomial(model, m):
            factor = line_series_power(ring.element({m: 1}), c, order)
        else:
            lams = _monomial_lambdas(model, m, order)
            factor = series_power(TruncatedSeries([ring.one] + list(lams)), c)
        result = series_mul(result, factor)
    return result


def lambda_op(x, n, model):
    """``λⁿ(x)``, the coefficient of ``tⁿ`` in ``λ_t(x)``."""
    if not isinstance(n, int) or n < 0:
        raise InputError(f"λ-index must be a non-negative integer, got {n!r}")
    if n > model.order:
        raise TruncationError(f"λ^{n} requested beyond series order {model.order}")
    if n == 0:
        return model.one
    return lambda_series(x, model, n)[n]
