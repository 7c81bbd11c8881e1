"""γ-operations, Adams operations and the divided operations ``λⁿ(N, x)``,
``ψₙ(N, x)`` attached to an element ``N`` of bounded λ-rank."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError, TruncationError
from .lambda_ring import Free, build_model, lambda_op, lambda_series
from .polynomial import exact_divide
from .series import (
    TruncatedSeries,
    series_derivative,
    series_inverse,
    series_mul,
    series_substitute_gamma,
)

__all__ = [
    "gamma_series",
    "gamma_op",
    "adams_op",
    "adams_ops",
    "adams_op_generating",
    "DividedContext",
    "DENOMINATORS",
    "universal_divided_poly",
    "divided_lambda",
    "divided_lambda_series",
    "divided_adams",
    "verify_relation",
]


def _check_index(n, model, low):
    if not isinstance(n, int) or n < low:
        raise InputError(f"operation index must be an integer >= {low}, got {n!r}")
    if n > model.order:
        raise TruncationError(f"index {n} exceeds series order {model.order}")


def gamma_series(x, model, order=None):
    """``γ_t(x) = λ_{t/(1-t)}(x)``."""
    return series_substitute_gamma(lambda_series(x, model, order))


def gamma_op(x, n, model):
    _check_index(n, model, 0)
    if n == 0:
        return model.one
    return gamma_series(x, model, n)[n]


def adams_ops(x, n, model):
    """``[ψ₁(x), …, ψₙ(x)]`` by the Newton-type recursion
    ``ψ_k = (-1)^k (-k λ^k - Σ_{i<k} (-1)^i ψ_i λ^{k-i})``; no division needed."""
    _check_index(n, model, 1)
    lam = lambda_series(x, model, n).coeffs
    psi = []
    for k in range(1, n + 1):
        acc = lam[k] * -k
        for i in range(1, k):
            acc = acc - psi[i - 1] * lam[k - i] * (-1) ** i
        psi.append(acc * (-1) ** k)
    return psi


def adams_op(x, n, model):
    return adams_ops(x, n, model)[-1]


def _log_derivative_coeff(numerator, denominator, n):
    # (-1)^(n+1) [t^(n-1)] numerator'(t) / denominator(t)
    quotient = series_mul(series_derivative(numerator), series_inverse(denominator.truncate(n - 1)))
    return quotient[n - 1] * (-1) ** (n + 1)


def adams_op_generating(x, n, model):
    """``ψₙ`` read off ``-t λ'_t(x)/λ_t(x) = Σ ψₙ(x)(-t)ⁿ``."""
    _check_index(n, model, 1)
    lam = lambda_series(x, model, n)
    return _log_derivative_coeff(lam, lam, n)


@lru_cache(maxsize=None)
def _divided_universe(n, d):
    return build_model([("N", Free(d)), ("X", Free(n))], order=max(n, 1), name=f"divided({n},{d})")


def _lambda_minus_one(lams, one):
    acc = one
    for k, v in enumerate(lams, start=1):
        acc = acc + v * (-1) ** k
    return acc


@lru_cache(maxsize=None)
def universal_divided_poly(n, d):
    """``λⁿ(N, X)`` as a polynomial in ``λ^i(N)`` (``i ≤ d``) and ``λ^j(X)`` (``j ≤ n``).

    Computed in the free λ-ring on ``N`` (rank ``d``) and ``X`` (rank ``n``):
    expand ``λⁿ(X·λ₋₁(N))`` and divide exactly by ``λ₋₁(N)``, which is linear
    with unit coefficient in the top symbol ``λ^d(N)``.
    """
    if n < 0 or d < 0:
        raise InputError(f"degrees must be non-negative, got n={n}, d={d}")
    universe = _divided_universe(n, d)
    ring = universe.ring
    if n == 0:
        return ring.one.to_polynomial()
    lam_n = universe.generator_lambdas("N", d)
    lm1 = _lambda_minus_one(lam_n, ring.one)
    big = lambda_op(universe.gen("X") * lm1, n, universe)
    if d == 0:
        return big.to_polynomial()
    top = "N" if d == 1 else f"lam{d}_N"
    return exact_divide(big.to_polynomial(), lm1.to_polynomial(), top)


DENOMINATORS = ("pushforward", "printed", "divided")


@dataclass
class DividedContext:
    """An element ``N`` of a model with ``λ^k(N) = 0`` for ``k > rank``."""

    model: object
    N: object
    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise InputError(f"rank bound must be non-negative, got {self.rank}")
        top = max(self.model.order, self.rank)
        series = lambda_series(self.N, self.model.with_order(top), top)
        for k in range(self.rank + 1, top + 1):
            if series[k]:
                raise InputError(f"λ^{k}(N) = {series[k]} is nonzero although the rank bound is {self.rank}")
        self.lambdas = list(series.coeffs[1 : self.rank + 1])
        self.lambda_minus_one = _lambda_minus_one(self.lambdas, self.model.one)


def _evaluate_divided(ctx, n, lam_x):
    poly = universal_divided_poly(n, ctx.rank)
    universe = _divided_universe(n, ctx.rank)
    ring = ctx.model.ring
    values = []
    for var in poly.variables:
        gname, _, index = universe.var_info[var]
        values.append(ctx.lambdas[index - 1] if gname == "N" else lam_x[index])
    return poly.evaluate(values, ring.one)


def divided_lambda_series(ctx, x, order):
    """``λ(N, x)(t) = Σ λⁿ(N, x) tⁿ`` up to ``order``."""
    if order > ctx.model.order:
        raise TruncationError(f"order {order} exceeds series order {ctx.model.order}")
    lam_x = lambda_series(x, ctx.model, order).coeffs
    coeffs = [ctx.model.one] + [_evaluate_divided(ctx, k, lam_x) for k in range(1, order + 1)]
    return TruncatedSeries(coeffs)


def divided_lambda(ctx, x, n):
    """``λⁿ(N, x)``, the exact quotient of ``λⁿ(x·λ₋₁(N))`` by ``λ₋₁(N)``."""
    _check_index(n, ctx.model, 0)
    if n == 0:
        return ctx.model.one
    return divided_lambda_series(ctx, x, n)[n]


def divided_adams(ctx, x, n, denominator="pushforward"):
    """``ψₙ(N, x) = (-1)^{n+1} [t^{n-1}] λ'(N, x)(t) / D(t)``.

    ``denominator`` selects ``D``:

    ``"printed"``
        ``λ_t(x)``.
    ``"divided"``
        ``λ(N, x)(t)``.
    ``"pushforward"``
        ``1 + λ₋₁(N)·(λ(N, x)(t) - 1)``, which equals ``λ_t(x·λ₋₁(N))``.  This
        is the variant compatible with ``i_*a · i_*b = i_*(a·b·λ₋₁(N))``.
    """
    _check_index(n, ctx.model, 1)
    numerator = divided_lambda_series(ctx, x, n)
    if denominator == "printed":
        denom = lambda_series(x, ctx.model, n)
    elif denominator == "divided":
        denom = numerator
    elif denominator == "pushforward":
        one = ctx.model.one
        denom = TruncatedSeries([one] + [c * ctx.lambda_minus_one for c in numerator.coeffs[1:]])
    else:
        raise InputError(f"unknown denominator variant {denominator!r}; choose from {', '.join(DENOMINATORS)}")
    return _log_derivative_coeff(numerator, denom, n)


def verify_relation(ctx, x, n):
    """True when ``λⁿ(N, x)·λ₋₁(N) = λⁿ(x·λ₋₁(N))``.

    Only meaningful for ``n >= 1``: with ``λ⁰(N, x) = 1`` the two sides at
    ``n = 0`` are ``λ₋₁(N)`` and ``1``.
    """
    if n < 1:
        raise InputError(f"the divided relation is stated for n >= 1, got {n}")
    lhs = divided_lambda(ctx, x, n) * ctx.lambda_minus_one
    rhs = lambda_op(x * ctx.lambda_minus_one, n, ctx.model)
    return lhs == rhs
