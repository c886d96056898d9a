"""Constructors for the stock coefficient rings used in fixtures and scenarios.

All of them go through ring_from_spec, so they get the same validation and
flag computation as rings read from instance files.
"""

from __future__ import annotations

import itertools

from .finring import DEFAULT_ORDER_CAP, FinRing, MalformedSpec, ring_from_spec

# Monic irreducible polynomials over F_p, low-degree coefficients first
# (constant term first, degree-n coefficient of 1 implied).
_IRREDUCIBLE = {
    (2, 2): (1, 1),          # x^2 + x + 1
    (2, 3): (1, 1, 0),       # x^3 + x + 1
    (2, 4): (1, 1, 0, 0),    # x^4 + x + 1
    (2, 5): (1, 0, 1, 0, 0),  # x^5 + x^2 + 1
    (2, 6): (1, 1, 0, 0, 0, 0),  # x^6 + x + 1
    (3, 2): (1, 0),          # x^2 + 1
    (3, 3): (1, 2, 0),       # x^3 + 2x + 1
    (5, 2): (2, 0),          # x^2 + 2
    (7, 2): (1, 0),          # x^2 + 1
}


def cyclic_ring(n: int, name: str | None = None) -> FinRing:
    """The ring of integers modulo n."""
    return ring_from_spec([n], {(0, 0): (1,)}, name=name or f"Z{n}")


def prime_field(p: int) -> FinRing:
    if p < 2 or any(p % q == 0 for q in range(2, p)):
        raise MalformedSpec(f"{p} is not prime")
    return ring_from_spec([p], {(0, 0): (1,)}, name=f"F{p}")


def _poly_mulmod(a, b, modpoly, p):
    n = len(modpoly)
    prod = [0] * (2 * n - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(len(prod) - 1, n - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for t in range(n):
                prod[d - n + t] = (prod[d - n + t] - c * modpoly[t]) % p
    return tuple(prod[:n])


def galois_field(p: int, n: int) -> FinRing:
    """The field with p^n elements, basis 1, x, ..., x^(n-1) mod a fixed
    irreducible polynomial."""
    if n == 1:
        return prime_field(p)
    if (p, n) not in _IRREDUCIBLE:
        raise MalformedSpec(f"no irreducible polynomial on file for p={p}, n={n}")
    modpoly = _IRREDUCIBLE[(p, n)]
    products = {}
    for i in range(n):
        for j in range(n):
            a = tuple(1 if t == i else 0 for t in range(n))
            b = tuple(1 if t == j else 0 for t in range(n))
            products[(i, j)] = _poly_mulmod(a, b, modpoly, p)
    return ring_from_spec([p] * n, products, name=f"F{p ** n}")


def frobenius_map(F: FinRing, p: int) -> dict:
    """The p-th power map on F as an element table."""
    table = {}
    for a in F.elements():
        y = a
        for _ in range(p - 1):
            y = F.mul(y, a)
        table[a] = y
    return table


def product_ring(*factors: FinRing, name: str | None = None) -> FinRing:
    """Direct product with componentwise operations."""
    ranks = []
    offsets = []
    for R in factors:
        offsets.append(len(ranks))
        ranks.extend(R.ranks)
    k = len(ranks)
    products = {}
    for R, off in zip(factors, offsets):
        kk = len(R.ranks)
        for i in range(kk):
            for j in range(kk):
                v = R.sc[i][j]
                vec = [0] * k
                for t, c in enumerate(v):
                    vec[off + t] = c
                products[(off + i, off + j)] = tuple(vec)
    return ring_from_spec(ranks, products,
                          name=name or "x".join(R.name for R in factors))


def matrix_ring(K: FinRing, n: int, name: str | None = None,
                cap: int = DEFAULT_ORDER_CAP) -> FinRing:
    """n x n matrices over K, basis = matrix units tensor a K-basis."""
    kk = len(K.ranks)
    ranks = list(K.ranks) * (n * n)

    def slot(r, c, t):
        return (r * n + c) * kk + t

    products = {}
    for r, c, t in itertools.product(range(n), range(n), range(kk)):
        for r2, c2, t2 in itertools.product(range(n), range(n), range(kk)):
            if c != r2:
                continue
            v = K.sc[t][t2]
            vec = [0] * len(ranks)
            for u, coeff in enumerate(v):
                vec[slot(r, c2, u)] = coeff
            products[(slot(r, c, t), slot(r2, c2, t2))] = tuple(vec)
    return ring_from_spec(ranks, products, name=name or f"M{n}({K.name})",
                          cap=cap)


def zero_mult_ring(ranks, name: str | None = None) -> FinRing:
    """Additive group with all products zero."""
    return ring_from_spec(ranks, {}, name=name or "null")


def left_only_ring(K: FinRing) -> FinRing:
    """K x K with (a,b)(c,d) = (ac, ad): left unital, not right s-unital
    whenever K is a nonzero unital ring."""
    kk = len(K.ranks)
    ranks = list(K.ranks) * 2
    products = {}
    for i in range(kk):
        for j in range(kk):
            v = K.sc[i][j]
            left = [0] * (2 * kk)
            right = [0] * (2 * kk)
            for t, c in enumerate(v):
                left[t] = c
                right[kk + t] = c
            products[(i, j)] = tuple(left)
            products[(i, kk + j)] = tuple(right)
    return ring_from_spec(ranks, products, name=f"L({K.name})")


def semigroup_algebra(K: FinRing, labels, mul, name: str | None = None,
                      cap: int = DEFAULT_ORDER_CAP) -> FinRing:
    """Semigroup algebra K[S] for a total binary operation ``mul`` on labels.

    ``mul`` may return None to mean the product is zero in the algebra (used
    for contracted algebras where a semigroup zero is identified with 0).
    """
    labels = list(labels)
    kk = len(K.ranks)
    ranks = list(K.ranks) * len(labels)
    pos = {s: i for i, s in enumerate(labels)}
    products = {}
    for a in labels:
        for b in labels:
            c = mul(a, b)
            if c is None:
                continue
            for t in range(kk):
                for t2 in range(kk):
                    v = K.sc[t][t2]
                    vec = [0] * len(ranks)
                    for u, coeff in enumerate(v):
                        vec[pos[c] * kk + u] = coeff
                    products[(pos[a] * kk + t, pos[b] * kk + t2)] = tuple(vec)
    return ring_from_spec(ranks, products, name=name or f"{K.name}[S]", cap=cap)
