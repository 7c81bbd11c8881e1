"""Integer lattices in ℤ^r kept in row-style Hermite normal form, plus Smith
invariants of finite-index and finite-rank quotients."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError

__all__ = [
    "IntegerLattice",
    "QuotientGroup",
    "hermite_normal_form",
    "smith_invariants",
    "lattice_from_generators",
    "lattice_member",
    "lattice_sum",
    "lattice_equal",
    "lattice_contains",
    "lattice_scale",
    "lattice_coordinates",
    "zero_lattice",
    "full_lattice",
    "quotient_invariants",
]


def hermite_normal_form(rows, ncols):
    """Row HNF: pivots strictly move right, are positive, and every entry
    above a pivot lies in ``[0, pivot)``.  Zero rows are dropped."""
    a = [list(r) for r in rows if any(r)]
    for r in a:
        if len(r) != ncols:
            raise InputError(f"row of length {len(r)} in a lattice of rank {ncols}")
    p = 0
    for col in range(ncols):
        if p == len(a):
            break
        while True:
            nz = [i for i in range(p, len(a)) if a[i][col]]
            if not nz:
                break
            best = min(nz, key=lambda i: abs(a[i][col]))
            a[p], a[best] = a[best], a[p]
            piv = a[p]
            clean = True
            for i in range(p + 1, len(a)):
                v = a[i][col]
                if v:
                    q = v // piv[col]
                    row = a[i]
                    for j in range(col, ncols):
                        row[j] -= q * piv[j]
                    if row[col]:
                        clean = False
            if clean:
                break
        if p < len(a) and a[p][col]:
            piv = a[p]
            if piv[col] < 0:
                for j in range(col, ncols):
                    piv[j] = -piv[j]
            for i in range(p):
                q = a[i][col] // piv[col]
                if q:
                    row = a[i]
                    for j in range(col, ncols):
                        row[j] -= q * piv[j]
            p += 1
    return [tuple(r) for r in a[:p]]


def _pivot(row):
    for j, v in enumerate(row):
        if v:
            return j
    return None


@dataclass(frozen=True)
class IntegerLattice:
    """Subgroup of ℤ^ambient_rank with an HNF basis."""

    ambient_rank: int
    basis: tuple

    @property
    def rank(self):
        return len(self.basis)

    def is_zero(self):
        return not self.basis

    def __contains__(self, vec):
        return lattice_member(self, vec)


def lattice_from_generators(vectors, ambient_rank=None):
    vectors = [tuple(v) for v in vectors]
    if ambient_rank is None:
        if not vectors:
            raise InputError("ambient rank needed for an empty generator list")
        ambient_rank = len(vectors[0])
    for v in vectors:
        if len(v) != ambient_rank:
            raise InputError(f"vector of length {len(v)} in ambient rank {ambient_rank}")
    return IntegerLattice(ambient_rank, tuple(hermite_normal_form(vectors, ambient_rank)))


def zero_lattice(ambient_rank):
    return IntegerLattice(ambient_rank, ())


def full_lattice(ambient_rank):
    rows = [tuple(int(i == j) for j in range(ambient_rank)) for i in range(ambient_rank)]
    return IntegerLattice(ambient_rank, tuple(rows))


def lattice_coordinates(lattice, vec):
    """Integer coefficients of ``vec`` on the HNF basis, or None if not a member."""
    if len(vec) != lattice.ambient_rank:
        raise InputError(f"vector of length {len(vec)} in ambient rank {lattice.ambient_rank}")
    v = list(vec)
    coeffs = []
    for row in lattice.basis:
        j = _pivot(row)
        if any(v[:j]):
            return None
        q, r = divmod(v[j], row[j])
        if r:
            return None
        coeffs.append(q)
        if q:
            for k in range(j, len(v)):
                v[k] -= q * row[k]
    if any(v):
        return None
    return coeffs


def lattice_member(lattice, vec):
    return lattice_coordinates(lattice, vec) is not None


def _same_rank(a, b):
    if a.ambient_rank != b.ambient_rank:
        raise InputError(f"ambient ranks differ: {a.ambient_rank} vs {b.ambient_rank}")


def lattice_sum(a, b):
    _same_rank(a, b)
    return lattice_from_generators(a.basis + b.basis, a.ambient_rank)


def lattice_equal(a, b):
    _same_rank(a, b)
    return a.basis == b.basis


def lattice_contains(big, small):
    """True when ``small`` is a sublattice of ``big``."""
    _same_rank(big, small)
    return all(lattice_member(big, v) for v in small.basis)


def lattice_scale(lattice, k):
    return lattice_from_generators([[k * x for x in v] for v in lattice.basis], lattice.ambient_rank)


def smith_invariants(matrix):
    """Nonzero diagonal of the Smith normal form, each dividing the next."""
    a = [list(r) for r in matrix]
    rows = len(a)
    cols = len(a[0]) if a else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        entries = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        while True:
            piv = a[t][t]
            changed = False
            for i in range(t + 1, rows):
                q = a[i][t] // piv
                if q:
                    for j in range(t, cols):
                        a[i][j] -= q * a[t][j]
                if a[i][t]:
                    changed = True
            for j in range(t + 1, cols):
                q = a[t][j] // piv
                if q:
                    for i in range(t, rows):
                        a[i][j] -= q * a[i][t]
                if a[t][j]:
                    changed = True
            if changed:
                entries = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
                entries += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
                _, i, j = min(entries)
                a[t], a[i] = a[i], a[t]
                for r in a:
                    r[t], r[j] = r[j], r[t]
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % piv),
                None,
            )
            if bad is None:
                break
            for j in range(t, cols):
                a[t][j] += a[bad][j]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


@dataclass(frozen=True)
class QuotientGroup:
    """ℤ^free_rank ⊕ ⨁ ℤ/d for d in torsion (each d > 1, d_i | d_{i+1})."""

    torsion: tuple
    free_rank: int

    def is_trivial(self):
        return not self.torsion and self.free_rank == 0

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


def quotient_invariants(ambient, sub):
    """Structure of ``ambient / sub``; ``sub`` must be contained in ``ambient``."""
    _same_rank(ambient, sub)
    matrix = []
    for v in sub.basis:
        c = lattice_coordinates(ambient, v)
        if c is None:
            raise InputError("quotient requested for a lattice not contained in the ambient lattice")
        matrix.append(c)
    diag = smith_invariants(matrix) if matrix and ambient.rank else []
    torsion = tuple(d for d in diag if d > 1)
    return QuotientGroup(torsion, ambient.rank - len(diag))
