"""Seeded random generators for property tests and spot checks.

All draws use small integers (|entry| <= 9) so that exact arithmetic stays
cheap; every function takes an explicit random.Random so results are
reproducible from a seed.
"""

from __future__ import annotations

import random
from itertools import combinations

from .exterior.blades import DIM
from .exterior.forms import Covector, KForm, Vector
from .exterior.endo import Endo

__all__ = ["random_vector", "random_nonzero_vector", "random_orthogonal_pair",
           "random_independent_pair", "random_form", "random_endo",
           "random_rank_one_nilpotent", "random_unimodular",
           "random_nilpotent", "random_invertible", "random_even_scalar"]


def random_vector(rng: random.Random, lo: int = -9, hi: int = 9) -> Vector:
    return Vector([rng.randint(lo, hi) for _ in range(DIM)])


def random_nonzero_vector(rng: random.Random) -> Vector:
    while True:
        v = random_vector(rng)
        if v:
            return v


def random_independent_pair(rng: random.Random) -> tuple[Vector, Vector]:
    """Two exactly linearly independent integer vectors."""
    while True:
        u = random_nonzero_vector(rng)
        v = random_nonzero_vector(rng)
        # independence: some 2x2 minor is nonzero
        for i, j in combinations(range(DIM), 2):
            minor = (u.components[i] * v.components[j]
                     - u.components[j] * v.components[i])
            if minor:
                return u, v


def random_orthogonal_pair(rng: random.Random) -> tuple[Vector, Vector]:
    """Nonzero integer vectors with <v, w> = 0 exactly (Gram-Schmidt step)."""
    while True:
        v = random_nonzero_vector(rng)
        raw = random_vector(rng)
        w = v.dot(v) * raw - v.dot(raw) * v
        if w:
            return v, w


def random_form(rng: random.Random, degree: int, nterms: int = 6) -> KForm:
    terms = []
    for _ in range(nterms):
        idx = rng.sample(range(1, DIM + 1), degree)
        terms.append((tuple(idx), rng.randint(-9, 9)))
    return KForm.from_terms(degree, terms)


def random_endo(rng: random.Random) -> Endo:
    return Endo([[rng.randint(-9, 9) for _ in range(DIM)] for _ in range(DIM)])


def random_rank_one_nilpotent(rng: random.Random) -> Endo:
    """w ⊗ v♭ with <v, w> = 0: a traceless square-zero rank-one map."""
    v, w = random_orthogonal_pair(rng)
    return Endo.tensor(w, v.flat())


def random_unimodular(rng: random.Random, shears: int = 6) -> tuple[Endo, Endo]:
    """(g, g^{-1}) as a product of integer shears; exact inverse for free."""
    g = Endo.identity()
    g_inv = Endo.identity()
    for _ in range(shears):
        i, j = rng.sample(range(1, DIM + 1), 2)
        c = rng.choice([-2, -1, 1, 2])
        shear = Endo.identity() + c * Endo.unit(i, j)
        unshear = Endo.identity() - c * Endo.unit(i, j)
        g = g @ shear
        g_inv = unshear @ g_inv
    return g, g_inv


def random_nilpotent(rng: random.Random, max_rank: int = 3) -> Endo:
    """A nilpotent matrix of rank <= max_rank, conjugated off Jordan form."""
    starts = []
    pos = 1
    rank = 0
    while pos <= DIM and rank < max_rank:
        size = rng.randint(1, min(DIM - pos + 1, max_rank - rank + 1))
        if size >= 2:
            starts.append((pos, size))
            rank += size - 1
        pos += size
    n = Endo.zero()
    for start, size in starts:
        for k in range(size - 1):
            n = n + Endo.unit(start + k + 1, start + k)
    g, g_inv = random_unimodular(rng)
    return g @ n @ g_inv


def random_invertible(rng: random.Random) -> tuple[Endo, Endo]:
    """(L, L^{-1}) with integer entries: unimodular times a diagonal of ±1, ±2."""
    g, g_inv = random_unimodular(rng, shears=8)
    diag = [rng.choice([1, -1, 2]) for _ in range(DIM)]
    d = Endo.diagonal(*diag)
    from .exterior.scalars import FieldScalar, Q
    d_inv = Endo.diagonal(*[FieldScalar(Q(1, x)) for x in diag])
    return g @ d, d_inv @ g_inv


def random_even_scalar(rng: random.Random, max_half_degree: int = 4):
    """A random even polynomial in s (i.e. a polynomial in t = s²) with
    small integer coefficients; suitable as a perturbation coefficient."""
    from .invariant.chamber import ChamberScalar
    out = ChamberScalar()
    for _ in range(rng.randint(1, 4)):
        coeff = rng.randint(-9, 9)
        out = out + ChamberScalar.monomial(coeff, 2 * rng.randint(0, max_half_degree), 0)
    return out
