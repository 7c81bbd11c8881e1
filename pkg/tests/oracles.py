"""Independent reference computations built on sympy.

Nothing here imports the package's algebra: split-variable expansions stand
in for λ-operations, sympy's Gröbner reduction for normal forms, and sympy's
integer normal forms for lattice questions.
"""

from __future__ import annotations

from itertools import combinations

import sympy
from sympy import ZZ, Matrix
from sympy.matrices.normalforms import hermite_normal_form, invariant_factors


def elementary(k, roots):
    """k-th elementary symmetric polynomial in ``roots`` (symbols or integers)."""
    total = 0
    for c in combinations(roots, k):
        term = 1
        for r in c:
            term = term * r
        total = total + term
    return total


def split_lambdas(roots, count):
    """``[λ^1, ..., λ^count]`` of ``Σ roots`` in a split λ-ring."""
    return [elementary(k, roots) for k in range(1, count + 1)]


def product_roots(a, b):
    return [x * y for x in a for y in b]


def exterior_roots(roots, m):
    """Roots of ``λ^m(Σ roots)``: products over m-element subsets."""
    return [sympy.Mul(*c) for c in combinations(roots, m)]


def expand_equal(lhs, rhs):
    return sympy.expand(lhs - rhs) == 0


def polynomial_to_sympy(poly, symbols):
    """Convert a package ``Polynomial`` (or ``RingElement``) using ``symbols[name]``."""
    terms = poly.terms
    variables = poly.variables if hasattr(poly, "variables") else poly.ring.variables
    acc = sympy.Integer(0)
    for mono, c in terms.items():
        term = sympy.Integer(c)
        for name, e in zip(variables, mono):
            if e:
                term *= symbols[name] ** e
        acc += term
    return acc


def groebner_remainder(expr, relations, gens):
    """Remainder of ``expr`` modulo ``relations`` under lex order."""
    basis = sympy.groebner(relations, *gens, order="lex")
    _, rem = sympy.reduced(sympy.expand(expr), list(basis), *gens, order="lex")
    return sympy.expand(rem)


def lattice_member_oracle(generators, target):
    """Membership of ``target`` in the ℤ-span of ``generators`` via sympy's HNF."""
    r = len(target)
    nonzero = [g for g in generators if any(g)]
    if not nonzero:
        return not any(target)
    cols = Matrix(nonzero).T
    h = hermite_normal_form(cols)
    if h.shape[1] == 0:
        return not any(target)
    try:
        sol, params = h.gauss_jordan_solve(Matrix(target))
    except ValueError:
        return False
    assert params.shape[0] == 0 and h.shape[0] == r
    return all(v.is_integer for v in sol)


def smith_oracle(rows):
    return [int(d) for d in invariant_factors(Matrix(rows), domain=ZZ) if d != 0]


def series_lambda(signed_roots, order, simplify=sympy.expand):
    """Coefficients of ``Π (1 + r t)^{±1}`` up to ``t^order``.

    Roots may be symbols or plain integers; pass ``simplify=int`` for the latter.
    """
    coeffs = [1] + [0] * order
    for r, sign in signed_roots:
        if sign > 0:
            coeffs = [simplify(coeffs[k] + (r * coeffs[k - 1] if k else 0)) for k in range(order + 1)]
        else:
            # divide by (1 + r t): c_k <- c_k - r c'_{k-1}
            out = []
            for k in range(order + 1):
                out.append(simplify(coeffs[k] - (r * out[k - 1] if k else 0)))
            coeffs = out
    return coeffs


def monomial_roots(exponents, root_lists):
    """Roots of a product of generators: all products choosing one root per factor."""
    roots = [1]
    for e, rl in zip(exponents, root_lists):
        for _ in range(e):
            roots = [a * b for a in roots for b in rl]
    return roots


def signed_roots(terms, variables, root_lists):
    """Virtual roots of an integer combination of generator monomials."""
    out = []
    for mono, c in terms.items():
        roots = monomial_roots(mono, [root_lists.get(v, ()) for v in variables])
        out.extend((r, 1 if c > 0 else -1) for r in roots for _ in range(abs(c)))
    return out
