"""Scheme models: Grothendieck rings of projective spaces and their products,
cycle classes of linear subspaces, and hyperplane embeddings.

Projective n-space is ``ℤ[h]/((h-1)^{n+1})`` with ``h`` the class of
``𝒪(1)``, a split line class.  ``h`` is invertible with
``h⁻¹ = Σ_{k≤n} (1-h)^k``, and a codimension-q linear subspace has class
``(1 - h⁻¹)^q`` (Koszul resolution).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .errors import InputError, LoadError
from .filtrations import top_filtration
from .lambda_ring import Split, augmentation, build_model, lambda_series
from .polynomial import Polynomial, RingElement, parse_polynomial

__all__ = [
    "Cycle",
    "SchemeModel",
    "ClosedEmbedding",
    "MAX_PROJECTIVE_DIMENSION",
    "projective_space",
    "product_model",
    "hyperplane_embedding",
    "load_model",
    "catalog_names",
    "inverse_line",
]

MAX_PROJECTIVE_DIMENSION = 8


@dataclass(frozen=True)
class Cycle:
    codim: int
    label: str
    element: RingElement


@dataclass
class SchemeModel:
    name: str
    dimension: int
    model: object
    cycles: tuple
    embeddings: tuple = field(default_factory=tuple)

    @property
    def ring(self):
        return self.model.ring

    def parse(self, text):
        return self.model.parse(text)

    def with_order(self, order):
        return SchemeModel(self.name, self.dimension, self.model.with_order(order), self.cycles, self.embeddings)

    def cycles_of_codim(self, q):
        return [c for c in self.cycles if c.codim == q]


@dataclass
class ClosedEmbedding:
    """``i: source → target`` of pure codimension ``codim``.

    ``pushforward`` maps each source basis monomial to a target element;
    ``pullback`` maps each target variable to a source element; ``conormal``
    is the class of the conormal sheaf, with λ-rank at most ``conormal_rank``.
    """

    name: str
    source: SchemeModel
    target: SchemeModel
    codim: int
    pushforward: dict
    pullback: dict
    conormal: RingElement
    conormal_rank: int

    def push(self, y):
        acc = self.target.model.zero
        for m, c in y.terms.items():
            acc = acc + self.pushforward[m] * c
        return acc

    def pull(self, s):
        src = self.source.model
        values = [self.pullback[v] for v in self.target.ring.variables]
        return s.to_polynomial().evaluate(values, src.one)


def inverse_line(model, var, n):
    """``h⁻¹`` for a split ``h`` with ``(h-1)^{n+1} = 0``."""
    h = model.gen(var)
    one = model.one
    acc = model.zero
    power = one
    for _ in range(n + 1):
        acc = acc + power
        power = power * (one - h)
    return acc


def _check_dimension(n):
    if not isinstance(n, int) or n < 0 or n > MAX_PROJECTIVE_DIMENSION:
        raise InputError(f"projective dimension must lie in [0, {MAX_PROJECTIVE_DIMENSION}], got {n!r}")


def projective_space(n, var="h"):
    _check_dimension(n)
    model = build_model([(var, Split())], [f"({var}-1)^{n + 1}"], order=n + 2, name=f"P{n}")
    codim_one = model.one - inverse_line(model, var, n)
    cycles = []
    power = model.one
    for q in range(n + 1):
        label = "whole space" if q == 0 else ("point" if q == n else f"linear subspace codim {q}")
        cycles.append(Cycle(q, label, power))
        power = power * codim_one
    return SchemeModel(f"P{n}", n, model, tuple(cycles))


def _transport(x, mapping, ring):
    poly = Polynomial(tuple(mapping[v] for v in x.ring.variables), x.terms)
    return ring(poly.rename(ring.variables))


def _factor_names(scheme):
    return [g for g, _ in scheme.model.generators]


def product_model(a, b, name=None):
    """Tensor product of two split scheme models."""
    for s in (a, b):
        if not all(isinstance(k, Split) for _, k in s.model.generators):
            raise InputError(f"products are only supported for split models, not {s.name!r}")
    if b.dimension == 0 and b.ring.rank == 1:
        return SchemeModel(name or a.name, a.dimension, a.model, a.cycles)
    if a.dimension == 0 and a.ring.rank == 1:
        return SchemeModel(name or b.name, b.dimension, b.model, b.cycles)
    names_a, names_b = _factor_names(a), _factor_names(b)
    if set(names_a) & set(names_b):
        new = [f"h{i}" for i in range(1, len(names_a) + len(names_b) + 1)]
        map_a = dict(zip(names_a, new))
        map_b = dict(zip(names_b, new[len(names_a):]))
    else:
        map_a = {v: v for v in names_a}
        map_b = {v: v for v in names_b}
    relations = []
    for s, mapping in ((a, map_a), (b, map_b)):
        for lead, rep in s.ring.rules:
            terms = dict(rep)
            terms[lead] = terms.get(lead, 0) - 1
            poly = Polynomial(tuple(mapping[v] for v in s.ring.variables), terms)
            relations.append(poly)
    generators = [(map_a[v], Split()) for v in names_a] + [(map_b[v], Split()) for v in names_b]
    dim = a.dimension + b.dimension
    label = name or f"{a.name}x{b.name}"
    model = build_model(generators, [r.rename([g for g, _ in generators]) for r in relations], order=dim + 2, name=label)
    cycles = []
    for ca in a.cycles:
        xa = _transport(ca.element, map_a, model.ring)
        for cb in b.cycles:
            xb = _transport(cb.element, map_b, model.ring)
            cycles.append(Cycle(ca.codim + cb.codim, f"{ca.label} x {cb.label}", xa * xb))
    cycles.sort(key=lambda c: c.codim)
    return SchemeModel(label, dim, model, tuple(cycles))


def hyperplane_embedding(n):
    """``P^{n-1} ⊂ P^n`` with ``i_*(h_Y^k) = h^k(1 - h⁻¹)``, ``i^*h = h_Y``,
    conormal class ``h_Y⁻¹``."""
    if not isinstance(n, int) or n < 1:
        raise InputError(f"hyperplane embedding needs n >= 1, got {n!r}")
    source, target = projective_space(n - 1), projective_space(n)
    tm = target.model
    h = tm.gen("h")
    koszul = tm.one - inverse_line(tm, "h", n)
    table = {m: h ** m[0] * koszul for m in source.ring.basis}
    pullback = {"h": source.model.gen("h")}
    conormal = inverse_line(source.model, "h", n - 1)
    return ClosedEmbedding(f"P{n - 1}->P{n}", source, target, 1, table, pullback, conormal, 1)


_BUILTIN = re.compile(r"^P(\d+)(xP\d+)*$")


def catalog_names():
    """Models exercised by the acceptance suite, in a stable order."""
    singles = [f"P{n}" for n in range(6)]
    products = ["P1xP1", "P2xP1", "P3xP1", "P2xP2", "P4xP1", "P3xP2", "P1xP1xP1"]
    return singles + products


def _builtin(name):
    if name == "pt":
        point = projective_space(0)
        point.name = point.model.name = "pt"
        return point
    if not _BUILTIN.match(name):
        return None
    dims = [int(f[1:]) for f in name.split("x")]
    if len(dims) == 1:
        return projective_space(dims[0])
    factors = [projective_space(n, var=f"h{i}") for i, n in enumerate(dims, start=1)]
    acc = factors[0]
    for f in factors[1:]:
        acc = product_model(acc, f, name=name)
    return acc


def _require(desc, key, kind, where="description"):
    if key not in desc:
        raise LoadError("schema", f"{where} is missing field {key!r}")
    value = desc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise LoadError("schema", f"field {key!r} of {where} has type {type(value).__name__}")
    return value


def _parse_in(model, text, what):
    try:
        return model.ring(parse_polynomial(text, model.ring.variables))
    except InputError as exc:
        raise LoadError("schema", f"{what}: {exc}") from None


def _augmentation_ideal_power_vanishes(model, k):
    gens = [model.gen(v) - 1 for v in model.ring.variables]
    for combo in combinations_with_replacement(range(len(gens)), k):
        prod = model.one
        for i in combo:
            prod = prod * gens[i]
        if prod:
            return False
    return True


def load_model(description):
    """Build a validated :class:`SchemeModel`.

    ``description`` is a builtin name (``"P3"``, ``"P2xP1"``, ``"pt"``), JSON
    text, or an already-parsed dict with fields ``name``, ``dimension``,
    ``generators`` (``name``, ``relationDegree``), ``cycles`` (``codim``,
    ``label``, ``polynomial``) and optional ``embeddings`` (``target``,
    ``codim``, ``pushforward``, ``pullback``, ``conormal``, ``conormalRank``).
    """
    if isinstance(description, str):
        text = description.strip()
        found = _builtin(text)
        if found is not None:
            return found
        if not text.startswith("{"):
            raise InputError(f"unknown model {text!r}; builtins look like P3, P2xP1 or pt")
        try:
            description = json.loads(text)
        except json.JSONDecodeError as exc:
            raise LoadError("schema", f"invalid JSON: {exc.msg} at line {exc.lineno}") from None
    if not isinstance(description, dict):
        raise LoadError("schema", "a model description must be a JSON object")
    name = _require(description, "name", str)
    dim = _require(description, "dimension", int)
    if dim < 0:
        raise LoadError("schema", "dimension must be non-negative")
    gens = _require(description, "generators", list)
    if not gens:
        raise LoadError("schema", "at least one generator is required")
    generators, relations = [], []
    for g in gens:
        gname = _require(g, "name", str, "generator")
        if not gname.isidentifier():
            raise LoadError("schema", f"generator name {gname!r} is not an identifier")
        degree = _require(g, "relationDegree", int, f"generator {gname!r}")
        if degree < 1:
            raise LoadError("generator", f"relationDegree of {gname!r} must be at least 1")
        generators.append((gname, Split()))
        relations.append(f"({gname}-1)^{degree}")
    try:
        model = build_model(generators, relations, order=dim + 2, name=name)
    except InputError as exc:
        raise LoadError("schema", str(exc)) from None

    if not _augmentation_ideal_power_vanishes(model, dim + 1):
        raise LoadError("nilpotency", f"the augmentation ideal to the power {dim + 1} is nonzero")
    if dim > 0 and _augmentation_ideal_power_vanishes(model, dim):
        raise LoadError("nilpotency", f"the augmentation ideal to the power {dim} already vanishes")

    cycles = []
    for c in _require(description, "cycles", list):
        codim = _require(c, "codim", int, "cycle")
        label = c.get("label", f"codim {codim} class")
        if not 0 <= codim <= dim:
            raise LoadError("codimension", f"cycle {label!r} has codim {codim} outside [0, {dim}]")
        element = _parse_in(model, _require(c, "polynomial", str, f"cycle {label!r}"), f"cycle {label!r}")
        if codim >= 1 and augmentation(element, model) != 0:
            raise LoadError(
                "augmentation",
                f"cycle {label!r} of codim {codim} has augmentation {augmentation(element, model)}, expected 0",
            )
        cycles.append(Cycle(codim, label, element))
    cycles.sort(key=lambda c: c.codim)
    scheme = SchemeModel(name, dim, model, tuple(cycles))

    embeddings = []
    for e in description.get("embeddings", []):
        embeddings.append(_load_embedding(scheme, e))
    scheme.embeddings = tuple(embeddings)
    return scheme


def _load_embedding(source, desc):
    target_name = _require(desc, "target", str, "embedding")
    target = load_model(target_name)
    codim = desc.get("codim", target.dimension - source.dimension)
    if codim != target.dimension - source.dimension or codim < 0:
        raise LoadError("codimension", f"embedding codim {codim} does not match dimensions")
    where = f"embedding into {target_name}"
    table = {}
    for key, value in _require(desc, "pushforward", dict, where).items():
        mono = _parse_in(source.model, key, f"{where}, pushforward key")
        if len(mono.terms) != 1 or next(iter(mono.terms.values())) != 1:
            raise LoadError("pushforward-table", f"key {key!r} is not a basis monomial")
        table[next(iter(mono.terms))] = _parse_in(target.model, value, f"{where}, pushforward of {key!r}")
    missing = [m for m in source.ring.basis if m not in table]
    if missing:
        shown = ", ".join(source.ring.format({m: 1}) for m in missing)
        raise LoadError("pushforward-table", f"{where} gives no pushforward for {shown}")
    pulled = desc.get("pullback", {v: v for v in target.ring.variables})
    pullback = {}
    for var in target.ring.variables:
        if var not in pulled:
            raise LoadError("pullback", f"{where} gives no pullback for {var!r}")
        pullback[var] = _parse_in(source.model, pulled[var], f"{where}, pullback of {var!r}")
    conormal = _parse_in(source.model, _require(desc, "conormal", str, where), f"{where}, conormal")
    rank = desc.get("conormalRank", codim)
    emb = ClosedEmbedding(f"{source.name}->{target_name}", source, target, codim, table, pullback, conormal, rank)
    validate_embedding(emb)
    return emb


def validate_embedding(emb):
    """Raise :class:`LoadError` unless the embedding data is coherent."""
    src, tgt = emb.source, emb.target
    for s in tgt.ring.basis_elements():
        for x in src.ring.basis_elements():
            if emb.push(emb.pull(s) * x) != s * emb.push(x):
                raise LoadError(
                    "projection-formula",
                    f"i_*(i^*({s})*({x})) differs from ({s})*i_*({x}) for {emb.name}",
                )
    for g in tgt.ring.variables:
        for k in (1, 2):
            lhs = emb.pull(lambda_series(tgt.model.gen(g), tgt.model, 2)[k])
            rhs = lambda_series(emb.pullback[g], src.model, 2)[k]
            if lhs != rhs:
                raise LoadError("pullback", f"pullback does not commute with λ^{k} on {g!r}")
    unit = emb.push(src.model.one)
    if unit not in top_filtration(tgt).level(emb.codim):
        raise LoadError("pushforward-level", f"i_*(1) = {unit} is not in topological level {emb.codim}")
    series = lambda_series(emb.conormal, src.model, emb.conormal_rank + 2)
    for k in range(emb.conormal_rank + 1, emb.conormal_rank + 3):
        if series[k]:
            raise LoadError("conormal-rank", f"λ^{k}(N) = {series[k]} is nonzero, rank bound {emb.conormal_rank}")
