import json

import pytest

from coniveau.catalog import (
    MAX_PROJECTIVE_DIMENSION,
    catalog_names,
    hyperplane_embedding,
    inverse_line,
    load_model,
    product_model,
    projective_space,
)
from coniveau.errors import InputError, LoadError
from coniveau.lambda_ring import augmentation, lambda_series


def _p2_description(**changes):
    desc = {
        "name": "plane",
        "dimension": 2,
        "generators": [{"name": "h", "relationDegree": 3}],
        "cycles": [
            {"codim": 0, "label": "X", "polynomial": "1"},
            {"codim": 1, "label": "line", "polynomial": "1 - (3 - 3*h + h^2)"},
            {"codim": 2, "label": "point", "polynomial": "(1 - (3 - 3*h + h^2))^2"},
        ],
    }
    desc.update(changes)
    return desc


def test_point_and_line():
    p0 = projective_space(0)
    assert p0.ring.rank == 1 and [c.codim for c in p0.cycles] == [0]
    p1 = projective_space(1)
    assert [str(b) for b in p1.ring.basis_elements()] == ["1", "h"]
    assert p1.parse("(h-1)^2") == 0


def test_inverse_and_codim_one_class():
    for n in range(1, 6):
        p = projective_space(n)
        h_inv = inverse_line(p.model, "h", n)
        assert h_inv * p.model.gen("h") == 1
        assert p.cycles[1].element == 1 - h_inv


@pytest.mark.parametrize("n", range(1, 6))
def test_linear_subspace_classes_vanish_exactly_beyond_dimension(n):
    p = projective_space(n)
    c1 = p.cycles[1].element
    for q in range(n + 1):
        assert c1**q != 0
    assert c1 ** (n + 1) == 0
    assert all(augmentation(c.element, p.model) == 0 for c in p.cycles if c.codim)


def test_products():
    p1p1 = load_model("P1xP1")
    assert p1p1.ring.rank == 4 and p1p1.dimension == 2
    assert sorted(c.codim for c in p1p1.cycles) == [0, 1, 1, 2]
    x = p1p1.parse("3*h1*h2 - h2")
    y = p1p1.parse("h1 + 2")
    assert augmentation(x * y, p1p1.model) == augmentation(x, p1p1.model) * augmentation(y, p1p1.model)
    pt = load_model("pt")
    assert product_model(projective_space(3), pt).name == "P3"
    assert load_model("P2xP1").ring.rank == 6


def test_catalog_loads_everything():
    for name in catalog_names():
        scheme = load_model(name)
        assert scheme.name == name
        assert scheme.ring.rank == len(scheme.ring.basis)


def test_hyperplane_embedding_data():
    emb = hyperplane_embedding(2)
    tgt = emb.target.model
    assert emb.push(emb.source.model.one) == tgt.parse("-h^2 + 3*h - 2")
    assert emb.push(emb.source.model.gen("h")) == tgt.parse("h - 1")
    # projection formula spot check
    h = tgt.gen("h")
    assert emb.push(emb.pull(h) * emb.source.model.one) == h * emb.push(emb.source.model.one)
    series = lambda_series(emb.conormal, emb.source.model, 4)
    assert all(series[k] == 0 for k in range(2, 5))


def test_json_description_round_trip():
    scheme = load_model(json.dumps(_p2_description()))
    builtin = load_model("P2")
    assert [str(c.element) for c in scheme.cycles] == [str(c.element) for c in builtin.cycles]


@pytest.mark.parametrize(
    "changes, invariant",
    [
        ({"dimension": 3}, "nilpotency"),
        ({"dimension": 1}, "nilpotency"),
        ({"cycles": [{"codim": 1, "polynomial": "h"}]}, "augmentation"),
        ({"cycles": [{"codim": 4, "polynomial": "h-1"}]}, "codimension"),
        ({"generators": [{"name": "h"}]}, "schema"),
        ({"generators": [{"name": "h", "relationDegree": 0}]}, "generator"),
        ({"cycles": [{"codim": 1, "polynomial": "h/2"}]}, "schema"),
    ],
)
def test_invalid_descriptions_name_the_invariant(changes, invariant):
    with pytest.raises(LoadError) as info:
        load_model(_p2_description(**changes))
    assert info.value.invariant == invariant


def test_embedding_in_description_is_validated():
    good = {
        "target": "P2",
        "codim": 1,
        "pushforward": {"1": "-h^2 + 3*h - 2", "h": "h - 1"},
        "pullback": {"h": "h"},
        "conormal": "2 - h",
        "conormalRank": 1,
    }
    line = {
        "name": "line",
        "dimension": 1,
        "generators": [{"name": "h", "relationDegree": 2}],
        "cycles": [{"codim": 0, "polynomial": "1"}, {"codim": 1, "polynomial": "h - 1"}],
        "embeddings": [good],
    }
    scheme = load_model(line)
    assert scheme.embeddings[0].name == "line->P2"
    bad = dict(good, pushforward={"1": "h", "h": "h - 1"})
    with pytest.raises(LoadError) as info:
        load_model(dict(line, embeddings=[bad]))
    assert info.value.invariant == "projection-formula"


def test_unknown_builtin_and_dimension_cap():
    with pytest.raises(InputError, match="Q7"):
        load_model("Q7")
    with pytest.raises(InputError):
        projective_space(MAX_PROJECTIVE_DIMENSION + 1)
