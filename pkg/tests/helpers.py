"""Shared test utilities: seeded random matrices and basis changes."""

from __future__ import annotations

from fractions import Fraction

from pi0real.intlattice import (
    identity_matrix,
    image_lattice,
    mat_mul,
    mat_vec,
    transpose,
)
from pi0real.realform import involution_from_matrix
from pi0real.rootdata import Lattice, RootDatum


def random_int_matrix(rng, rows, cols, lo=-4, hi=4):
    return tuple(tuple(rng.randint(lo, hi) for _ in range(cols)) for _ in range(rows))


def random_unimodular(rng, n, steps=None):
    """A random unimodular integer matrix together with its exact inverse."""
    if steps is None:
        steps = 3 * n
    u = [list(r) for r in identity_matrix(n)]
    uinv = [list(r) for r in identity_matrix(n)]
    for _ in range(steps):
        kind = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if kind == 0 and i != j:
            c = rng.choice([-2, -1, 1, 2])
            for t in range(n):
                u[i][t] += c * u[j][t]
            for t in range(n):
                uinv[t][j] -= c * uinv[t][i]
        elif kind == 1 and i != j:
            u[i], u[j] = u[j], u[i]
            for t in range(n):
                uinv[t][i], uinv[t][j] = uinv[t][j], uinv[t][i]
        elif kind == 2:
            u[i] = [-x for x in u[i]]
            for t in range(n):
                uinv[t][i] = -uinv[t][i]
    return tuple(tuple(r) for r in u), tuple(tuple(r) for r in uinv)


def frac_vec(v):
    return tuple(Fraction(x) for x in v)


def conjugate_datum(rd, inv, u, uinv):
    """Transport a datum and involution through the basis change v -> u.v.

    Vectors map by u, weights by the inverse transpose, and the involution
    by conjugation; the result describes the same group in new coordinates.
    """
    n = rd.rank
    gens = tuple(tuple(mat_vec(u, c)) for c in rd.coroot_generators)
    conjugated = RootDatum(
        rank=n,
        cochar=Lattice.standard(n),
        coroots=image_lattice(rd.coroots, u),
        coroot_generators=gens,
        display_weights=tuple(
            (label, tuple(mat_vec(transpose(uinv), frac_vec(lam))))
            for label, lam in rd.display_weights
        ),
        named_vectors=tuple(
            (name, tuple(mat_vec(u, v))) for name, v in rd.named_vectors
        ),
        name=rd.name,
        lift_note=rd.lift_note,
    )
    theta = mat_mul(mat_mul(u, inv.theta), uinv)
    return conjugated, involution_from_matrix(conjugated, theta, name=inv.name)
