import random

import pytest
import sympy

from coniveau.catalog import projective_space
from coniveau.errors import InputError, TruncationError
from coniveau.lambda_ring import (
    Free,
    FreeGamma,
    Split,
    augmentation,
    build_model,
    gamma_from_lambda,
    lambda_from_gamma,
    lambda_op,
    lambda_series,
)
from oracles import elementary, exterior_roots, polynomial_to_sympy, series_lambda, signed_roots

A = sympy.symbols("a1:4")
B = sympy.symbols("b1:4")


def _free_pair(order=4):
    return build_model([("x", Free(3)), ("y", Free(3))], order=order, name="free")


def _at_roots(elem, a=A, b=B):
    # λ^k of the free generators are the elementary symmetric functions of their roots
    subs = {}
    for roots, g in ((a, "x"), (b, "y")):
        subs[g] = elementary(1, roots)
        for k in (2, 3):
            subs[f"lam{k}_{g}"] = elementary(k, roots)
    return polynomial_to_sympy(elem, subs)


def _random_element(rng, model):
    x, y = model.gen("x"), model.gen("y")
    monos = [x, y, x * y, x * x, y * y, x * x * y]
    acc = model.zero
    for _ in range(rng.randint(1, 3)):
        acc = acc + rng.choice(monos) * rng.choice((-2, -1, 1, 2))
    return acc


def test_lambda_of_free_generators_is_their_variables():
    model = _free_pair()
    x = model.gen("x")
    assert lambda_op(x, 0, model) == 1
    assert lambda_op(x, 1, model) == x
    assert lambda_op(x, 2, model) == model.gen("lam2_x")
    assert lambda_op(x, 4, model) == 0


def test_random_elements_match_split_roots():
    # both sides are integer polynomials in the roots; compare at random integer points
    model = _free_pair()
    rng = random.Random(8)
    for _ in range(40):
        e = _random_element(rng, model)
        got = lambda_series(e, model, 4)
        for _ in range(3):
            a = [rng.randint(-9, 9) for _ in range(3)]
            b = [rng.randint(-9, 9) for _ in range(3)]
            # only degree-one variables occur, so roots are products of generator roots
            roots = signed_roots(e.terms, model.ring.variables, {"x": a, "y": b})
            expected = series_lambda(roots, 4, simplify=int)
            assert [_at_roots(c, a, b) for c in got] == expected, str(e)


def test_composition_on_exterior_powers():
    model = _free_pair()
    lam2 = model.gen("lam2_x")
    for n in range(1, 4):
        assert sympy.expand(_at_roots(lambda_op(lam2, n, model)) - elementary(n, exterior_roots(A, 2))) == 0


def test_sum_rule():
    model = _free_pair()
    x, y = model.gen("x"), model.gen("y")
    sx, sy, sxy = lambda_series(x, model), lambda_series(y, model), lambda_series(x + y, model)
    for k in range(model.order + 1):
        assert sxy[k] == sum((sx[i] * sy[k - i] for i in range(k + 1)), model.zero)


def test_split_line_powers():
    p2 = projective_space(2).model
    h = p2.gen("h")
    assert [str(c) for c in lambda_series(h * h, p2, 3)] == ["1", "h^2", "0", "0"]
    # (1 + h t)^(-1) = 1 - h t + h^2 t^2 - ...
    assert [str(c) for c in lambda_series(-h, p2, 2)] == ["1", "-h", "h^2"]


def test_lambda_of_reduced_hyperplane_class():
    p2 = projective_space(2).model
    x = p2.parse("h-1")
    series = lambda_series(x, p2, 3)
    assert series[1] == x
    assert series[2] == p2.parse("-h+1")


def test_augmentation():
    p2 = projective_space(2).model
    assert augmentation(p2.parse("3*h^2 - h + 2"), p2) == 4
    model = build_model([("v", Free(2, augmentation=2))])
    assert augmentation(model.gen("v") * model.gen("lam2_v"), model) == 2


def test_gamma_lambda_conversion_round_trip():
    model = build_model([("g", FreeGamma())], truncation=5)
    gammas = [model.gen("g")] + [model.gen(f"gam{p}_g") for p in range(2, 6)]
    lambdas = [lambda_from_gamma(gammas, m) for m in range(1, 6)]
    assert [gamma_from_lambda(lambdas, k) for k in range(1, 6)] == gammas


def test_truncation_error_and_bad_inputs():
    p1 = projective_space(1).model.with_order(2)
    with pytest.raises(TruncationError):
        lambda_op(p1.gen("h"), 3, p1)
    with pytest.raises(InputError):
        lambda_op(p1.gen("h"), -1, p1)
    with pytest.raises(InputError, match="augmentation"):
        build_model([("h", Split())], ["h"])
    with pytest.raises(InputError):
        build_model([("h", Split())], truncation=3)
