"""γ- and topological filtrations as integer lattices in the coordinate
module of a finite-rank model."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, InternalError
from .lambda_ring import augmentation
from .lattice import (
    IntegerLattice,
    full_lattice,
    lattice_contains,
    lattice_from_generators,
    lattice_member,
    lattice_sum,
    quotient_invariants,
    zero_lattice,
)
from .operations import gamma_series
from .polynomial import RingElement

__all__ = [
    "FiltrationLevel",
    "Filtration",
    "GradedPiece",
    "gamma_filtration",
    "top_filtration",
    "filtration_member",
    "graded_piece",
    "module_closure",
    "product_lattice",
    "augmentation_kernel_basis",
]


@dataclass(frozen=True)
class FiltrationLevel:
    kind: str
    q: int
    lattice: IntegerLattice
    ring: object

    def __contains__(self, x):
        return lattice_member(self.lattice, self.ring.coords(x))

    def basis_elements(self):
        return [self.ring.from_coords(list(v)) for v in self.lattice.basis]

    @property
    def rank(self):
        return self.lattice.rank


@dataclass(frozen=True)
class Filtration:
    """``levels[q]`` for ``0 <= q <= top``; higher levels are zero."""

    kind: str
    levels: tuple
    ring: object

    @property
    def top(self):
        return len(self.levels) - 1

    def level(self, q):
        if q <= 0:
            return self.levels[0]
        if q < len(self.levels):
            return self.levels[q]
        return FiltrationLevel(self.kind, q, zero_lattice(self.ring.rank), self.ring)

    def __getitem__(self, q):
        return self.level(q)


@dataclass(frozen=True)
class GradedPiece:
    q: int
    group: object
    rational_rank: int

    def __str__(self):
        return str(self.group)


def _unpack(model):
    # accepts a scheme (with .model and .dimension) or a bare λ-ring model
    if hasattr(model, "dimension") and hasattr(model, "model"):
        return model.model, model.dimension
    return model, None


def _lattice_of(elements, ring):
    return lattice_from_generators([ring.coords(e) for e in elements], ring.rank)


def product_lattice(a, b, ring):
    """Subgroup generated by all products of basis vectors of ``a`` and ``b``."""
    left = [ring.from_coords(list(v)) for v in a.basis]
    right = [ring.from_coords(list(v)) for v in b.basis]
    return _lattice_of([x * y for x in left for y in right], ring)


def module_closure(lattice, ring):
    """Smallest lattice containing ``lattice`` and stable under multiplication
    by every ring variable; terminates because lattices in ℤ^r cannot grow forever
    while staying inside the (finite-rank) ambient module."""
    gens = ring.gens()
    current = lattice
    while True:
        elems = [ring.from_coords(list(v)) for v in current.basis]
        grown = lattice_sum(current, _lattice_of([g * e for g in gens for e in elems], ring))
        if grown == current:
            return current
        current = grown


def augmentation_kernel_basis(model):
    """``m - ε(m)`` for each non-constant normal-form basis monomial ``m``."""
    ring = model.ring
    out = []
    for m in ring.basis:
        e = RingElement(ring, {m: 1})
        b = e - augmentation(e, model)
        if b:
            out.append(b)
    return out


def gamma_filtration(model, max_q=None, weight_cap=None, close=True):
    """Fil^q_γ for ``0 <= q <= max_q + 1``.

    Level ``q`` is spanned by the γ-monomials ``γ^{i₁}(b₁)⋯γ^{i_p}(b_p)`` of
    total weight ``w`` with ``q <= w <= weight_cap``, the ``b_j`` running over
    a ℤ-basis of ``ker ε``.  This is enough: ``γ_t`` turns sums into products,
    so γ-powers of any ``x ∈ ker ε`` expand into such monomials of the same
    weight.  With ``close`` the levels are also closed under multiplication by
    the ring; the span is already an ideal, so this only matters as a check.
    """
    lam_model, dim = _unpack(model)
    ring = lam_model.ring
    if not ring.is_finite():
        raise InputError("γ-filtration needs a ring with a finite normal-form basis")
    if dim is None:
        dim = ring.rank - 1
    if max_q is None:
        max_q = dim
    if weight_cap is None:
        weight_cap = dim + 1
    top = max_q + 1
    working = lam_model.with_order(max(weight_cap, 1))
    kernel = augmentation_kernel_basis(working)
    gammas = [gamma_series(b, working, weight_cap) for b in kernel]
    rank = ring.rank
    exact = [zero_lattice(rank)]
    for w in range(1, weight_cap + 1):
        acc = _lattice_of([g[w] for g in gammas], ring)
        for a in range(1, w // 2 + 1):
            acc = lattice_sum(acc, product_lattice(exact[a], exact[w - a], ring))
        exact.append(acc)
    levels = [FiltrationLevel("gamma", 0, full_lattice(rank), ring)]
    for q in range(1, top + 1):
        acc = zero_lattice(rank)
        for w in range(q, weight_cap + 1):
            acc = lattice_sum(acc, exact[w])
        if close:
            acc = module_closure(acc, ring)
        levels.append(FiltrationLevel("gamma", q, acc, ring))
    return Filtration("gamma", tuple(levels), ring)


def top_filtration(scheme, max_q=None):
    """Fil^q_top: ring-module closure of the catalogued cycle classes of codim ≥ q."""
    ring = scheme.model.ring
    if not scheme.cycles:
        raise InputError(f"model {scheme.name!r} carries no cycle classes")
    if max_q is None:
        max_q = scheme.dimension
    rank = ring.rank
    levels = [FiltrationLevel("top", 0, full_lattice(rank), ring)]
    for q in range(1, max_q + 2):
        classes = [c.element for c in scheme.cycles if c.codim >= q]
        lat = module_closure(_lattice_of(classes, ring), ring) if classes else zero_lattice(rank)
        levels.append(FiltrationLevel("top", q, lat, ring))
    return Filtration("top", tuple(levels), ring)


def filtration_member(x, level):
    return x in level


def graded_piece(filtration, q):
    """``Fil^q / Fil^{q+1}`` as an abelian group, plus its rank over ℚ."""
    upper, lower = filtration.level(q), filtration.level(q + 1)
    if not lattice_contains(upper.lattice, lower.lattice):
        raise InternalError(f"{filtration.kind} filtration level {q + 1} is not contained in level {q}")
    group = quotient_invariants(upper.lattice, lower.lattice)
    return GradedPiece(q, group, group.free_rank)
