import pytest

from coniveau.catalog import projective_space
from coniveau.errors import DivisibilityError, InputError
from coniveau.lambda_ring import Free, build_model
from coniveau.series import (
    TruncatedSeries,
    line_series_power,
    series_derivative,
    series_inverse,
    series_mul,
    series_power,
    series_substitute,
    series_substitute_gamma,
)

ORDER = 6


@pytest.fixture(scope="module")
def ring():
    return build_model([("a", Free(6))], order=ORDER).ring


def _generic(ring):
    # 1 + a t + λ²(a) t² + ... with independent coefficients
    names = ["a"] + [f"lam{k}_a" for k in range(2, ORDER + 1)]
    return TruncatedSeries([ring.one] + [ring.gen(v) for v in names])


def test_inverse(ring):
    s = _generic(ring)
    prod = series_mul(s, series_inverse(s))
    assert list(prod) == list(TruncatedSeries.one(ring, ORDER))


def test_inverse_needs_unit_constant(ring):
    s = TruncatedSeries.from_list(ring, [2, 1], 3)
    with pytest.raises(DivisibilityError):
        series_inverse(s)


def test_negative_power_and_derivative(ring):
    s = _generic(ring)
    assert list(series_mul(series_power(s, -2), series_power(s, 2))) == list(TruncatedSeries.one(ring, ORDER))
    d = series_derivative(s)
    assert d.order == ORDER - 1
    assert d[2] == ring.gen("lam3_a") * 3


def test_gamma_substitution_matches_general_substitution(ring):
    s = _generic(ring)
    inner = TruncatedSeries.from_list(ring, [0] + [1] * ORDER, ORDER)  # t/(1-t)
    assert list(series_substitute_gamma(s)) == list(series_substitute(s, inner))


def test_substitution_needs_zero_constant(ring):
    s = _generic(ring)
    with pytest.raises(InputError):
        series_substitute(s, s)


def test_line_powers_match_repeated_products():
    p3 = projective_space(3).ring
    h = p3.gen("h")
    base = TruncatedSeries.from_list(p3, [1, h], 5)
    assert list(line_series_power(h, 3, 5)) == list(series_power(base, 3))
    assert list(line_series_power(h, -2, 5)) == list(series_power(base, -2))


def test_truncate():
    p1 = projective_space(1).ring
    s = TruncatedSeries.from_list(p1, [1, 2, 3], 4)
    assert s.order == 4 and s.truncate(1).order == 1
    with pytest.raises(InputError):
        s.truncate(7)
