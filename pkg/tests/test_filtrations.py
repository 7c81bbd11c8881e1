import pytest

from coniveau.catalog import SchemeModel, load_model
from coniveau.errors import InputError, InternalError
from coniveau.filtrations import (
    Filtration,
    FiltrationLevel,
    augmentation_kernel_basis,
    gamma_filtration,
    graded_piece,
    module_closure,
    top_filtration,
)
from coniveau.lambda_ring import Free, build_model
from coniveau.lattice import lattice_equal, lattice_from_generators


@pytest.mark.parametrize("n", range(0, 6))
def test_projective_space_filtrations(n):
    scheme = load_model(f"P{n}")
    gamma, top = gamma_filtration(scheme), top_filtration(scheme)
    for q in range(0, n + 2):
        assert lattice_equal(gamma.level(q).lattice, top.level(q).lattice)
        rank = graded_piece(top, q).rational_rank
        assert rank == (1 if q <= n else 0)
        assert graded_piece(top, q).group.torsion == ()


def test_first_level_is_augmentation_kernel():
    scheme = load_model("P2xP1")
    kernel = lattice_from_generators([b.coords for b in augmentation_kernel_basis(scheme.model)], scheme.ring.rank)
    assert lattice_equal(gamma_filtration(scheme).level(1).lattice, kernel)
    assert lattice_equal(top_filtration(scheme).level(1).lattice, kernel)


def test_product_of_lines_ranks():
    top = top_filtration(load_model("P1xP1"))
    assert [graded_piece(top, q).rational_rank for q in range(4)] == [1, 2, 1, 0]
    assert str(graded_piece(top, 1).group) == "Z^2"


def test_membership():
    p2 = load_model("P2")
    top = top_filtration(p2)
    assert p2.parse("(h-1)^2") in top.level(2)
    assert p2.parse("h-1") not in top.level(2)
    assert p2.parse("h-1") in top.level(1)
    assert p2.parse("7") in top.level(0) and p2.parse("7") in top.level(-3)
    assert p2.parse("(h-1)^2") not in top.level(5)


def test_gamma_levels_are_already_ideals():
    scheme = load_model("P2xP2")
    open_ = gamma_filtration(scheme, close=False)
    for q in range(1, scheme.dimension + 2):
        lat = open_.level(q).lattice
        assert lattice_equal(module_closure(lat, scheme.ring), lat)


def test_chain_violation_is_reported():
    scheme = load_model("P1")
    ring = scheme.ring
    small = lattice_from_generators([[0, 1]], 2)
    big = lattice_from_generators([[1, 0], [0, 1]], 2)
    bogus = Filtration("top", (FiltrationLevel("top", 0, small, ring), FiltrationLevel("top", 1, big, ring)), ring)
    with pytest.raises(InternalError):
        graded_piece(bogus, 0)


def test_input_errors():
    infinite = build_model([("a", Free(2))])
    with pytest.raises(InputError):
        gamma_filtration(infinite)
    p1 = load_model("P1")
    with pytest.raises(InputError):
        top_filtration(SchemeModel("bare", 1, p1.model, ()))
