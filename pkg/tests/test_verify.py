import pytest

from coniveau.catalog import hyperplane_embedding, inverse_line, load_model
from coniveau.errors import InputError
from coniveau.filtrations import top_filtration
from coniveau.lambda_ring import lambda_op
from coniveau.operations import DividedContext, adams_op, divided_lambda, gamma_op
from coniveau.verify import (
    CHECKS,
    MODEL_SUITES,
    Bounds,
    check_jouanolou,
    check_universal_congruence,
    run_suite,
    torsion_factor,
)

BOGUS_P2 = {
    "name": "bogusP2",
    "dimension": 2,
    "generators": [{"name": "h", "relationDegree": 3}],
    "cycles": [
        {"codim": 0, "label": "X", "polynomial": "1"},
        {"codim": 1, "label": "fake", "polynomial": "h-1"},
    ],
}


def _stable(reports):
    return [{k: v for k, v in r.to_dict().items() if k != "millis"} for r in reports]


@pytest.mark.parametrize("name", ["P2", "P3", "P1xP1", "P2xP1"])
def test_every_model_check_passes(name):
    reports = run_suite(name, "all", Bounds(max_n=4))
    assert [r.check_id for r in reports] == sorted(r.check_id for r in reports)
    assert set(CHECKS) <= {r.check_id for r in reports} <= set(MODEL_SUITES)
    assert all(r.status == "pass" for r in reports), [r.to_dict() for r in reports if r.status != "pass"]


def test_reports_are_deterministic():
    a = run_suite("P2xP1", "adams-congruence,lambda-ideal", Bounds(seed=7))
    b = run_suite("P2xP1", "adams-congruence,lambda-ideal", Bounds(seed=7))
    assert _stable(a) == _stable(b)


def test_torsion_factor():
    assert torsion_factor(1, 1) == 1
    assert torsion_factor(3, 1) == 2
    assert torsion_factor(5, 2) == 1 * 2 * 6 * 24
    assert torsion_factor(3, 4) == 1


def test_bogus_model_fails_with_reproducible_witnesses():
    scheme = load_model(BOGUS_P2)
    reports = {r.check_id: r for r in run_suite(scheme, ",".join(sorted(CHECKS)))}
    failed = [k for k, r in reports.items() if r.status == "fail"]
    assert "adams-congruence" in failed and "gr-rank-iso" in failed
    top = top_filtration(scheme)
    model = scheme.model.with_order(6)
    for r in reports.values():
        if r.status != "fail":
            assert r.witness is None
            continue
        w = r.witness
        assert w["expr"] and w["member"] is False
        kind, q = w["level"].split(":")
        if kind == "top":
            assert scheme.parse(w["expr"]) not in top.level(int(q))
    w = reports["adams-congruence"].witness
    x, n = scheme.parse(w["x"]), int(w["n"])
    assert adams_op(x, n, model) - x * n == scheme.parse(w["expr"])
    w = reports["lambda-ideal"].witness
    assert gamma_op(scheme.parse(w["x"]), 2, model) == scheme.parse(w["expr"])


@pytest.mark.parametrize("d, q, n, t", [(1, 1, 2, 4), (2, 1, 2, 5), (1, 0, 3, None), (0, 2, 3, None)])
def test_universal_congruence_passes(d, q, n, t):
    report = check_universal_congruence(d, q, n, t)
    assert report.status == "pass", report.witness
    assert report.details["tested"] > 0


def test_universal_congruence_n_equals_one():
    for d in range(3):
        for q in range(3):
            assert check_universal_congruence(d, q, 1).status == "pass"


def test_universal_congruence_small_truncation_is_inconclusive():
    report = check_universal_congruence(2, 2, 3, truncation=3)
    assert report.status == "inconclusive"
    assert report.witness is None


def test_universal_congruence_degenerate_cell_has_a_witness():
    # with d = q = 0 the exponent is -1; n·λⁿ(x) + (-1)ⁿx fails already for x = 1
    report = check_universal_congruence(0, 0, 2)
    assert report.status == "fail"
    assert report.witness["level"] == "gamma:1"


def test_universal_congruence_input_errors():
    with pytest.raises(InputError):
        check_universal_congruence(1, 1, 0)


def test_jouanolou_reports_the_unique_variant():
    report = check_jouanolou(hyperplane_embedding(2), max_degree=4)
    assert report.status == "pass"
    assert report.details["variantsHolding"] == ["pushforward"]
    assert report.details["chosenVariant"] == "pushforward"
    assert set(report.details["variantFailures"]) == {"printed", "divided"}


def test_jouanolou_lambda_identity_by_hand():
    emb = hyperplane_embedding(2)
    src, tgt = emb.source.model, emb.target.model
    inv = inverse_line(tgt, "h", 2)
    # λ_t(1 - L) = (1 + t)/(1 + L t) has t²-coefficient L² - L
    expected = inv * inv - inv
    assert lambda_op(emb.push(src.one), 2, tgt) == expected
    ctx = DividedContext(src.with_order(2), emb.conormal, 1)
    # λ²(N, 1) = -N for a line class N
    assert divided_lambda(ctx, src.one, 2) == -emb.conormal
    assert emb.push(-emb.conormal) == expected


def test_unknown_suite_is_rejected():
    with pytest.raises(InputError, match="bogus"):
        run_suite("P2", "adams-congruence,bogus")
