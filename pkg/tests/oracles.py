"""Brute-force oracles, written independently of the library algorithms."""
from __future__ import annotations

import cmath
from fractions import Fraction
from itertools import product


def brute_lattice_member(v, generators, bound=6):
    """Search integer coefficient vectors in [-bound, bound]."""
    v = tuple(Fraction(x) for x in v)
    for coeffs in product(range(-bound, bound + 1), repeat=len(generators)):
        s = tuple(sum((c * Fraction(g[i]) for c, g in zip(coeffs, generators)), Fraction(0))
                  for i in range(len(v)))
        if s == v:
            return True
    return False


def det(M):
    """Leibniz-free cofactor determinant for tiny matrices."""
    M = [[Fraction(x) for x in row] for row in M]
    n = len(M)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return M[0][0]
    return sum(((-1) ** j) * M[0][j] * det([row[:j] + row[j + 1:] for row in M[1:]]) for j in range(n))


def semigroup_closure(generators, weight, max_weight):
    """All semigroup elements of weight <= max_weight, by repeated addition."""
    gens = [tuple(Fraction(x) for x in g) for g in generators]
    d = len(gens[0])
    zero = tuple(Fraction(0) for _ in range(d))
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                f = tuple(a + b for a, b in zip(e, g))
                if weight(f) <= max_weight and f not in seen:
                    seen.add(f)
                    nxt.append(f)
        frontier = nxt
    return seen


def brute_vertices_2d(points, span):
    """Vertices of conv(points) + quadrant: unique argmins over a weight grid."""
    out = set()
    for w in product(range(1, span + 1), repeat=2):
        vals = [w[0] * p[0] + w[1] * p[1] for p in points]
        low = min(vals)
        arg = [p for p, v in zip(points, vals) if v == low]
        if len(arg) == 1:
            out.add(arg[0])
    return out


def naive_product(a_terms, b_terms):
    out = {}
    for u, x in a_terms.items():
        for v, y in b_terms.items():
            w = tuple(p + q for p, q in zip(u, v))
            out[w] = out.get(w, 0) + x * y
    return {w: c for w, c in out.items() if c != 0}


def embed(c):
    """Numerical value of a cyclotomic number under z -> exp(2 pi i / level)."""
    z = cmath.exp(2j * cmath.pi / c.level)
    return sum(float(a) * z ** k for k, a in enumerate(c.coeffs))


def minimal_by_decomposition(elements):
    """Irreducible elements of a finite, sum-closed-enough set of vectors."""
    elems = set(elements)
    zero = next(iter(elems))
    zero = tuple(0 for _ in zero)
    out = []
    for x in elems:
        if not any(x):
            continue
        reducible = any(
            any(y) and any(tuple(a - b for a, b in zip(x, y))) and tuple(a - b for a, b in zip(x, y)) in elems
            for y in elems
        )
        if not reducible:
            out.append(x)
    return sorted(out)
