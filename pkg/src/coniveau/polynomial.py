"""Sparse integer polynomials, quotient rings given by rewrite rules, and
the small expression grammar used for input and output.

Monomials are exponent tuples aligned with a variable-name tuple.  The term
order is graded lexicographic, where "graded" uses the per-variable weights
of the ring (all 1 unless stated otherwise).
"""

from __future__ import annotations

import ast
import itertools
from collections import defaultdict
from operator import add, sub

from .errors import DivisibilityError, InputError

__all__ = [
    "Polynomial",
    "QuotientRing",
    "RingElement",
    "normal_form",
    "parse_polynomial",
    "format_terms",
    "exact_divide",
]


def _weight(m, weights):
    return sum(e * w for e, w in zip(m, weights))


def order_key(m, weights=None):
    """Sort key realizing graded lex order; larger key means larger monomial."""
    if weights is None:
        return (sum(m), m)
    return (_weight(m, weights), m)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _clean(terms):
    return {m: c for m, c in terms.items() if c}


def format_terms(terms, variables, weights=None):
    """Render ``{monomial: coeff}`` in the expression grammar, highest term first."""
    if not terms:
        return "0"
    pieces = []
    for m in sorted(terms, key=lambda k: order_key(k, weights), reverse=True):
        c = terms[m]
        factors = []
        for name, e in zip(variables, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mono = "*".join(factors)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


class Polynomial:
    """Integer polynomial in named variables, stored as ``{exponents: coeff}``."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != n or any(e < 0 for e in m):
                raise InputError(f"bad exponent vector {m} for variables {self.variables}")
            if c:
                clean[m] = clean.get(m, 0) + c
        self.terms = _clean(clean)

    @classmethod
    def constant(cls, variables, c):
        return cls(variables, {(0,) * len(tuple(variables)): c})

    @classmethod
    def gen(cls, variables, name):
        variables = tuple(variables)
        if name not in variables:
            raise InputError(f"unknown variable {name!r}")
        m = tuple(int(v == name) for v in variables)
        return cls(variables, {m: 1})

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.variables != self.variables:
                raise InputError("polynomials over different variable lists")
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.variables, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) + c
        return Polynomial(self.variables, acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.variables, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = defaultdict(int)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                acc[tuple(map(add, m1, m2))] += c1 * c2
        return Polynomial(self.variables, acc)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise InputError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other) if isinstance(other, (int, Polynomial)) else NotImplemented
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def degree(self, weights=None):
        if not self.terms:
            return -1
        return max(order_key(m, weights)[0] for m in self.terms)

    def leading_monomial(self, weights=None):
        if not self.terms:
            raise InputError("zero polynomial has no leading monomial")
        return max(self.terms, key=lambda m: order_key(m, weights))

    def degree_in(self, name):
        i = self.variables.index(name)
        return max((m[i] for m in self.terms), default=-1)

    def evaluate(self, values, one):
        """Substitute ``values[i]`` for variable ``i``; ``one`` is the unit of the target."""
        values = list(values)
        powers = [{0: one, 1: v} for v in values]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * values[i]
            return cache[e]

        total = one * 0
        for m, c in self.terms.items():
            term = one * c
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    def rename(self, variables):
        """Re-express over a superset variable list (matching by name)."""
        variables = tuple(variables)
        pos = []
        for i, name in enumerate(self.variables):
            if name not in variables:
                if any(m[i] for m in self.terms):
                    raise InputError(f"unknown variable {name!r}")
                pos.append(None)
            else:
                pos.append(variables.index(name))
        out = {}
        for m, c in self.terms.items():
            nm = [0] * len(variables)
            for i, e in enumerate(m):
                if e:
                    nm[pos[i]] += e
            out[tuple(nm)] = c
        return Polynomial(variables, out)

    def __str__(self):
        return format_terms(self.terms, self.variables)

    def __repr__(self):
        return f"Polynomial({self})"


def exact_divide(numerator, divisor, var):
    """Divide ``numerator`` by a ``divisor`` of degree one in ``var``.

    The coefficient of ``var`` in ``divisor`` must be the constant 1 or -1,
    which makes the division exact over the integers whenever it is possible.
    Raises :class:`DivisibilityError` if the remainder is nonzero.
    """
    i = divisor.variables.index(var)
    if divisor.degree_in(var) <= 0:
        if divisor == 1:
            return numerator
        if divisor == -1:
            return -numerator
        raise InputError(f"divisor does not involve {var!r}")
    if divisor.degree_in(var) != 1:
        raise InputError(f"divisor must be linear in {var!r}")
    unit_mono = tuple(int(j == i) for j in range(len(divisor.variables)))
    lead = divisor.terms.get(unit_mono)
    if lead not in (1, -1) or any(m[i] == 1 and m != unit_mono for m in divisor.terms):
        raise InputError(f"coefficient of {var!r} in divisor must be a unit constant")
    remainder = numerator
    quotient = Polynomial(numerator.variables)
    while True:
        top = remainder.degree_in(var)
        if top <= 0:
            break
        shifted = {}
        for m, c in remainder.terms.items():
            if m[i] == top:
                nm = list(m)
                nm[i] -= 1
                shifted[tuple(nm)] = c * lead
        q = Polynomial(numerator.variables, shifted)
        quotient = quotient + q
        remainder = remainder - q * divisor
    if not remainder.is_zero():
        raise DivisibilityError(f"nonzero remainder {remainder} dividing by {divisor}")
    return quotient


_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Pow)


def parse_polynomial(text, variables):
    """Parse integers, variable names, ``+ - * ^`` and parentheses."""
    variables = tuple(variables)
    source = text.replace("^", "**")
    try:
        tree = ast.parse(source, mode="eval")
    except SyntaxError as exc:
        raise InputError(f"cannot parse expression {text!r}: {exc.msg}") from None

    def token(node):
        seg = ast.get_source_segment(source, node) or type(node).__name__
        return seg.replace("**", "^")

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return Polynomial.constant(variables, node.value)
        if isinstance(node, ast.Name):
            if node.id not in variables:
                raise InputError(f"unknown variable {node.id!r} in {text!r}")
            return Polynomial.gen(variables, node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            inner = walk(node.operand)
            return -inner if isinstance(node.op, ast.USub) else inner
        if isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BINOPS):
            if isinstance(node.op, ast.Pow):
                exp = node.right
                if not (isinstance(exp, ast.Constant) and type(exp.value) is int and exp.value >= 0):
                    raise InputError(f"exponent must be a non-negative integer literal, got {token(exp)!r}")
                return walk(node.left) ** exp.value
            left, right = walk(node.left), walk(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            return left * right
        raise InputError(f"unsupported token {token(node)!r} in {text!r}")

    return walk(tree)


class QuotientRing:
    """ℤ[variables] modulo a confluent rewrite system, optionally truncated
    by weighted degree (monomials of weight above ``truncation`` vanish)."""

    def __init__(self, variables, rules=(), weights=None, truncation=None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise InputError("duplicate variable names")
        n = len(self.variables)
        self.weights = tuple(weights) if weights is not None else (1,) * n
        if len(self.weights) != n or any(w < 1 for w in self.weights):
            raise InputError("weights must be positive, one per variable")
        self.truncation = truncation
        checked = []
        for lead, replacement in rules:
            lead = tuple(lead)
            if isinstance(replacement, Polynomial):
                replacement = replacement.rename(self.variables).terms
            replacement = _clean(dict(replacement))
            if len(lead) != n or not any(lead):
                raise InputError(f"bad rule leading monomial {lead}")
            lk = order_key(lead, self.weights)
            for m in replacement:
                if order_key(m, self.weights) >= lk:
                    raise InputError(
                        f"rule for {format_terms({lead: 1}, self.variables)} does not decrease the term order"
                    )
            checked.append((lead, replacement))
        self.rules = tuple(checked)
        self._cache = {}
        self._basis = None
        self._index = None
        self._check_confluence()

    @classmethod
    def from_relations(cls, variables, relations, weights=None, truncation=None):
        """Orient each relation ``r = 0`` by its leading monomial (coefficient ±1)."""
        variables = tuple(variables)
        rules = []
        for rel in relations:
            rel = rel.rename(variables)
            lead = rel.leading_monomial(weights)
            c = rel.terms[lead]
            if c not in (1, -1):
                raise InputError(f"relation {rel} has non-unit leading coefficient")
            rest = {m: -c * v for m, v in rel.terms.items() if m != lead}
            rules.append((lead, rest))
        return cls(variables, rules, weights=weights, truncation=truncation)

    def _check_confluence(self):
        for (l1, r1), (l2, r2) in itertools.combinations(self.rules, 2):
            if not any(a and b for a, b in zip(l1, l2)):
                continue
            lcm = tuple(max(a, b) for a, b in zip(l1, l2))
            one = self._reduce_terms({tuple(map(add, m, map(sub, lcm, l1))): c for m, c in r1.items()})
            two = self._reduce_terms({tuple(map(add, m, map(sub, lcm, l2))): c for m, c in r2.items()})
            if one != two:
                raise InputError("rewrite rules are not confluent")

    def weight(self, m):
        return _weight(m, self.weights)

    def _reduce_monomial(self, m):
        cached = self._cache.get(m)
        if cached is not None:
            return cached
        if self.truncation is not None and _weight(m, self.weights) > self.truncation:
            result = {}
        else:
            for lead, replacement in self.rules:
                if _divides(lead, m):
                    rest = tuple(map(sub, m, lead))
                    acc = defaultdict(int)
                    for r, c in replacement.items():
                        for mm, cc in self._reduce_monomial(tuple(map(add, r, rest))).items():
                            acc[mm] += c * cc
                    result = _clean(acc)
                    break
            else:
                result = {m: 1}
        self._cache[m] = result
        return result

    def _reduce_terms(self, terms):
        acc = defaultdict(int)
        for m, c in terms.items():
            if c:
                for mm, cc in self._reduce_monomial(m).items():
                    acc[mm] += c * cc
        return _clean(acc)

    def _mul_terms(self, a, b):
        acc = defaultdict(int)
        red = self._reduce_monomial
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                c = c1 * c2
                for m, cm in red(tuple(map(add, m1, m2))).items():
                    acc[m] += c * cm
        return _clean(acc)

    # construction helpers

    def element(self, terms):
        return RingElement(self, self._reduce_terms(terms))

    def __call__(self, value):
        if isinstance(value, RingElement):
            if value.ring is not self:
                raise InputError("element belongs to a different ring")
            return value
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, Polynomial):
            return normal_form(value, self)
        if isinstance(value, str):
            return self.parse(value)
        raise InputError(f"cannot convert {value!r} to a ring element")

    def from_int(self, c):
        return self.element({(0,) * len(self.variables): c})

    @property
    def one(self):
        return self.from_int(1)

    @property
    def zero(self):
        return RingElement(self, {})

    def gen(self, name):
        if name not in self.variables:
            raise InputError(f"unknown variable {name!r}")
        return self.element({tuple(int(v == name) for v in self.variables): 1})

    def gens(self):
        return [self.gen(v) for v in self.variables]

    def parse(self, text):
        return normal_form(parse_polynomial(text, self.variables), self)

    # finite bases

    def is_finite(self):
        return all(b is not None for b in self._exponent_bounds())

    def _exponent_bounds(self):
        bounds = []
        for i, w in enumerate(self.weights):
            best = None
            for lead, _ in self.rules:
                if lead[i] and sum(lead) == lead[i]:
                    best = lead[i] - 1 if best is None else min(best, lead[i] - 1)
            if self.truncation is not None:
                cap = self.truncation // w
                best = cap if best is None else min(best, cap)
            bounds.append(best)
        return bounds

    @property
    def basis(self):
        """Normal-form monomials in ascending term order (finite rings only)."""
        if self._basis is None:
            bounds = self._exponent_bounds()
            if any(b is None for b in bounds):
                raise InputError("ring has an infinite normal-form basis; set a truncation")
            monos = [
                m
                for m in _bounded_monomials(bounds, self.weights, self.truncation)
                if not any(_divides(lead, m) for lead, _ in self.rules)
            ]
            monos.sort(key=lambda k: order_key(k, self.weights))
            self._basis = tuple(monos)
            self._index = {m: i for i, m in enumerate(self._basis)}
        return self._basis

    @property
    def rank(self):
        return len(self.basis)

    def basis_elements(self):
        return [RingElement(self, {m: 1}) for m in self.basis]

    def coords(self, x):
        basis = self.basis
        index = self._index
        vec = [0] * len(basis)
        for m, c in x.terms.items():
            vec[index[m]] = c
        return vec

    def from_coords(self, vec):
        basis = self.basis
        if len(vec) != len(basis):
            raise InputError(f"coordinate vector of length {len(vec)}, expected {len(basis)}")
        return RingElement(self, {m: c for m, c in zip(basis, vec) if c})

    def format(self, terms):
        return format_terms(terms, self.variables, self.weights)

    def __repr__(self):
        return f"QuotientRing({', '.join(self.variables)}; {len(self.rules)} rules)"


def _bounded_monomials(bounds, weights, budget):
    """Exponent vectors with ``m[i] <= bounds[i]`` and weight at most ``budget``
    (no weight limit when ``budget`` is None)."""
    n = len(bounds)
    out = []
    current = [0] * n

    def walk(i, left):
        if i == n:
            out.append(tuple(current))
            return
        top = bounds[i] if left is None else min(bounds[i], left // weights[i])
        for e in range(top + 1):
            current[i] = e
            walk(i + 1, None if left is None else left - e * weights[i])
        current[i] = 0

    walk(0, budget)
    return out


def normal_form(p, ring):
    """Reduce polynomial ``p`` to its unique normal form in ``ring``."""
    if isinstance(p, RingElement):
        return ring(p)
    if p.variables != ring.variables:
        p = p.rename(ring.variables)
    return ring.element(p.terms)


class RingElement:
    """Normal-form element of a :class:`QuotientRing`."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                raise InputError("elements of different rings")
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) + c
        return RingElement(self.ring, _clean(acc))

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return RingElement(self.ring, {})
            return RingElement(self.ring, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.ring._mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise InputError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    @property
    def coords(self):
        return self.ring.coords(self)

    def to_polynomial(self):
        return Polynomial(self.ring.variables, self.terms)

    def max_weight(self):
        return max((self.ring.weight(m) for m in self.terms), default=-1)

    def min_weight(self):
        return min((self.ring.weight(m) for m in self.terms), default=None)

    def __str__(self):
        return self.ring.format(self.terms)

    def __repr__(self):
        return f"RingElement({self})"
